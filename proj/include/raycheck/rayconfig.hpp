#pragma once

#include <map>
#include <set>
#include <vector>

#include "raycheck/matgroup.hpp"
#include "raycheck/qimag.hpp"

namespace raycheck {

/// Unit scalars of Q(sqrt(-d)): {1,-1} for d=7, {±1,±w,±w^2} for d=3.
std::vector<QImag> field_units(int d);

/// Least unit multiple of v under the componentwise (a,b)-lex vector order.
CVec4 canonical_ray(const CVec4& v);

/// An indexed collection of pairwise non-proportional unit rays, stored as
/// canonical representatives in ascending vector order.  For the 120-state
/// configuration a catalog alignment maps internal ids onto the published
/// state indices 1..120; display ids fall back to internal id + 1 otherwise.
class Configuration {
public:
    int d() const { return d_; }
    int ray_count() const { return static_cast<int>(rays_.size()); }
    std::size_t vector_count() const { return vector_count_; }
    const CVec4& ray(int id) const { return rays_[static_cast<std::size_t>(id)]; }
    const std::vector<CVec4>& rays() const { return rays_; }

    /// Internal id of the canonical representative of v, or -1.
    int find_ray(const CVec4& v) const;

    bool aligned() const { return !catalog_.empty(); }
    /// Display id: catalog index when aligned, internal id + 1 otherwise.
    int display_id(int internal) const;
    /// Internal id for a display id.
    int internal_id(int display) const;

    /// Match each catalog vector (unit norm enforced) to exactly one ray, up
    /// to sign; throws on an unmatched or doubly matched row.
    void align_with_catalog(const std::vector<CVec4>& catalog_vectors);

    /// Complete vector set: every ray times every field unit, deterministic order.
    std::vector<CVec4> all_vectors() const;

    friend Configuration orbit_configuration(const Group& g, const CVec4& seed);
    friend Configuration witting_configuration();

private:
    int d_ = 7;
    std::vector<CVec4> rays_;
    std::size_t vector_count_ = 0;
    std::map<CVec4, int> ray_index_;
    std::vector<int> catalog_;       // internal -> display (1-based)
    std::vector<int> by_catalog_;    // display (1-based) -> internal
};

/// Orbit of a unit seed under every element of g, collected as distinct
/// vectors and distinct rays.  Throws if the seed is not unit norm.
Configuration orbit_configuration(const Group& g, const CVec4& seed);

/// The 40-ray Witting configuration over Q(sqrt(-3)); 240 vectors as
/// rays x 6 units.
Configuration witting_configuration();

/// Orbit partition of the configuration's rays under the projective action of
/// `sub`.  Throws if some element maps a ray outside the configuration.
std::vector<std::vector<int>> ray_orbits(const Group& sub, const Configuration& cfg);

/// State-type classifier for the 120-state configuration: matches a ray
/// against the four template families modulo signed coordinate permutations
/// and field units.
class StateTypeTable {
public:
    StateTypeTable();
    /// Type 1..4; throws if the ray matches no family (corrupted configuration).
    int classify(const CVec4& ray) const;
    /// Types for all rays of cfg, indexed by internal id.
    std::vector<int> classify_all(const Configuration& cfg) const;

private:
    std::map<CVec4, int> table_;
};

/// Set of |<psi_j, psi_k>|^2 over all unordered pairs j != k.
std::set<Rational> gram_spectrum(const Configuration& cfg);

}  // namespace raycheck
