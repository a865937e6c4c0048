#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "raycheck/orthograph.hpp"

namespace raycheck {

/// Maximally entangled two-system state described by an antisymmetric unitary
/// J: |Omega_J> = (1/sqrt(tr(J J+))) sum_jk J_jk |j>|k>.
struct EntangledState {
    CMat4 J;
    Rational normalization;   // 1 / tr(J J+)

    explicit EntangledState(const CMat4& j);
};

/// Involution on display ids induced by psi -> J * conj(psi).
struct OppositeMap {
    std::vector<int> partner;   // partner[i] = display partner of display id i+1

    int of(int display) const { return partner[static_cast<std::size_t>(display - 1)]; }
    bool fixed_point_free() const;
    bool is_involution() const;
};

/// Involution on basis ids (1-based) induced by mapping every member to its
/// J-opposite.
struct BasisPairing {
    std::vector<int> partner;   // partner[i] = partner of basis id i+1
    std::vector<int> fixed;     // basis ids with partner(b) = b

    int of(int id) const { return partner[static_cast<std::size_t>(id - 1)]; }
};

/// +1 if conj(A)*J = J*A exactly, -1 if conj(A)*J = -J*A, nullopt otherwise.
std::optional<int> invariance_sign(const CMat4& A, const CMat4& J);

/// J-opposite involution over the configuration's rays.  Throws if some image
/// falls outside the configuration.
OppositeMap opposite_map(const CMat4& J, const Configuration& cfg);

/// Partner basis of every basis under the opposite map; throws if the
/// opposite set of some basis is not itself a basis.
BasisPairing partner_basis_map(const CMat4& J, const Configuration& cfg,
                               const std::vector<Basis>& bases);

/// Orbit of the standard tetrad basis under the subgroup's projective action,
/// as a set of 1-based basis ids.
std::set<int> equal_bases(const Group& sub, const Configuration& cfg,
                          const std::vector<Basis>& bases);

/// One J^C = C J C^T per left coset of `sub` in `g`, sign-canonicalized
/// (first nonzero entry positive in the field order).  All antisymmetric
/// unitary by construction.
std::vector<CMat4> coset_j_matrices(const Group& g, const Group& sub, const CMat4& J);

/// Exact outcome distribution of the two measurements a in basisA, b in
/// basisB on |Omega_J>; entries sum to 1.
std::array<std::array<Rational, 4>, 4> joint_distribution(const CMat4& J,
                                                          const Configuration& cfg,
                                                          const Basis& basisA,
                                                          const Basis& basisB);

}  // namespace raycheck
