#include "raycheck/entangle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace raycheck {

namespace {

Rational trace_jj(const CMat4& J) {
    Rational t;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) t += J.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].norm();
    return t;
}

}  // namespace

EntangledState::EntangledState(const CMat4& j) : J(j) {
    if (!j.is_unitary()) throw std::runtime_error("entangling matrix is not unitary");
    if (!j.is_antisymmetric()) throw std::runtime_error("entangling matrix is not antisymmetric");
    normalization = Rational(1) / trace_jj(j);
}

bool OppositeMap::fixed_point_free() const {
    for (std::size_t i = 0; i < partner.size(); ++i)
        if (partner[i] == static_cast<int>(i) + 1) return false;
    return true;
}

bool OppositeMap::is_involution() const {
    for (std::size_t i = 0; i < partner.size(); ++i) {
        int p = partner[i];
        if (p < 1 || p > static_cast<int>(partner.size())) return false;
        if (partner[static_cast<std::size_t>(p - 1)] != static_cast<int>(i) + 1) return false;
    }
    return true;
}

std::optional<int> invariance_sign(const CMat4& A, const CMat4& J) {
    CMat4 lhs = A.conj() * J;
    CMat4 rhs = J * A;
    if (lhs == rhs) return 1;
    if (lhs == -rhs) return -1;
    return std::nullopt;
}

OppositeMap opposite_map(const CMat4& J, const Configuration& cfg) {
    OppositeMap om;
    om.partner.assign(static_cast<std::size_t>(cfg.ray_count()), 0);
    for (int display = 1; display <= cfg.ray_count(); ++display) {
        const CVec4& v = cfg.ray(cfg.internal_id(display));
        int img = cfg.find_ray(J * v.conj());
        if (img < 0) throw std::runtime_error("J-opposite image falls outside the configuration");
        om.partner[static_cast<std::size_t>(display - 1)] = cfg.display_id(img);
    }
    if (!om.is_involution()) throw std::runtime_error("J-opposite map is not an involution");
    return om;
}

BasisPairing partner_basis_map(const CMat4& J, const Configuration& cfg,
                               const std::vector<Basis>& bases) {
    OppositeMap om = opposite_map(J, cfg);
    std::map<Basis, int> ids;
    for (std::size_t i = 0; i < bases.size(); ++i) ids.emplace(bases[i], static_cast<int>(i) + 1);

    BasisPairing bp;
    bp.partner.assign(bases.size(), 0);
    for (std::size_t i = 0; i < bases.size(); ++i) {
        Basis ob;
        for (int k = 0; k < 4; ++k) ob.states[static_cast<std::size_t>(k)] = om.of(bases[i].states[static_cast<std::size_t>(k)]);
        std::sort(ob.states.begin(), ob.states.end());
        auto it = ids.find(ob);
        if (it == ids.end())
            throw std::runtime_error("opposite set of a basis is not a basis");
        bp.partner[i] = it->second;
        if (it->second == static_cast<int>(i) + 1) bp.fixed.push_back(static_cast<int>(i) + 1);
    }
    for (std::size_t i = 0; i < bp.partner.size(); ++i)
        if (bp.partner[static_cast<std::size_t>(bp.partner[i] - 1)] != static_cast<int>(i) + 1)
            throw std::runtime_error("basis pairing is not an involution");
    return bp;
}

std::set<int> equal_bases(const Group& sub, const Configuration& cfg,
                          const std::vector<Basis>& bases) {
    std::map<Basis, int> ids;
    for (std::size_t i = 0; i < bases.size(); ++i) ids.emplace(bases[i], static_cast<int>(i) + 1);

    std::set<int> out;
    for (const auto& e : sub.elements()) {
        Basis img;
        for (int k = 0; k < 4; ++k) {
            CVec4 col;
            for (int r = 0; r < 4; ++r) col.c[static_cast<std::size_t>(r)] = e.matrix.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
            int id = cfg.find_ray(col);
            if (id < 0) throw std::runtime_error("subgroup image of a basis vector is not a ray");
            img.states[static_cast<std::size_t>(k)] = cfg.display_id(id);
        }
        std::sort(img.states.begin(), img.states.end());
        auto it = ids.find(img);
        if (it == ids.end()) throw std::runtime_error("subgroup image is not a basis");
        out.insert(it->second);
    }
    return out;
}

namespace {

CMat4 sign_canonical(const CMat4& m) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const QImag& x = m.m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (x.is_zero()) continue;
            return x < QImag::zero(x.d) ? -m : m;
        }
    return m;
}

}  // namespace

std::vector<CMat4> coset_j_matrices(const Group& g, const Group& sub, const CMat4& J) {
    std::vector<CMat4> out;
    for (const auto& coset : g.left_cosets(sub)) {
        const CMat4& C = g.element(coset.representative).matrix;
        CMat4 jc = sign_canonical(C * J * C.transpose());
        if (!jc.is_unitary() || !jc.is_antisymmetric())
            throw std::runtime_error("coset matrix is not antisymmetric unitary");
        out.push_back(jc);
    }
    return out;
}

std::array<std::array<Rational, 4>, 4> joint_distribution(const CMat4& J,
                                                          const Configuration& cfg,
                                                          const Basis& basisA,
                                                          const Basis& basisB) {
    const Rational tr = trace_jj(J);
    std::array<std::array<Rational, 4>, 4> out;
    for (int r = 0; r < 4; ++r) {
        const CVec4& a = cfg.ray(cfg.internal_id(basisA.states[static_cast<std::size_t>(r)]));
        for (int s = 0; s < 4; ++s) {
            const CVec4& b = cfg.ray(cfg.internal_id(basisB.states[static_cast<std::size_t>(s)]));
            QImag amp = QImag::zero(J.d());
            for (int j = 0; j < 4; ++j) {
                if (a.c[static_cast<std::size_t>(j)].is_zero()) continue;
                for (int k = 0; k < 4; ++k)
                    amp = amp + a.c[static_cast<std::size_t>(j)].conj() *
                                J.m[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] *
                                b.c[static_cast<std::size_t>(k)].conj();
            }
            out[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] = amp.norm() / tr;
        }
    }
    return out;
}

}  // namespace raycheck
