#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "raycheck/rayconfig.hpp"

namespace raycheck {

/// Fixed 128-bit set; all graphs here have at most 120 vertices.
struct BitSet128 {
    std::uint64_t w[2] = {0, 0};

    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    bool empty() const { return (w[0] | w[1]) == 0; }
    int count() const { return __builtin_popcountll(w[0]) + __builtin_popcountll(w[1]); }

    BitSet128 operator&(const BitSet128& o) const { return {{w[0] & o.w[0], w[1] & o.w[1]}}; }
    BitSet128 operator|(const BitSet128& o) const { return {{w[0] | o.w[0], w[1] | o.w[1]}}; }
    BitSet128 and_not(const BitSet128& o) const { return {{w[0] & ~o.w[0], w[1] & ~o.w[1]}}; }

    int count_and(const BitSet128& o) const {
        return __builtin_popcountll(w[0] & o.w[0]) + __builtin_popcountll(w[1] & o.w[1]);
    }
    /// Lowest set bit, -1 if empty.
    int first() const {
        if (w[0]) return __builtin_ctzll(w[0]);
        if (w[1]) return 64 + __builtin_ctzll(w[1]);
        return -1;
    }
};

/// Orthogonality graph: vertices are internal ray ids, edge jk iff
/// <psi_j, psi_k> = 0 exactly.
class OrthGraph {
public:
    explicit OrthGraph(const Configuration& cfg);

    int size() const { return n_; }
    const Configuration& config() const { return *cfg_; }
    bool adjacent(int i, int j) const { return adj_[static_cast<std::size_t>(i)].test(j); }
    const BitSet128& neighbors(int i) const { return adj_[static_cast<std::size_t>(i)]; }
    int degree(int i) const { return adj_[static_cast<std::size_t>(i)].count(); }

private:
    int n_;
    const Configuration* cfg_;
    std::vector<BitSet128> adj_;
};

/// Orthonormal tetrad, stored as display ids in ascending order.
struct Basis {
    std::array<int, 4> states;

    friend bool operator==(const Basis& x, const Basis& y) { return x.states == y.states; }
    friend bool operator<(const Basis& x, const Basis& y) { return x.states < y.states; }
};

/// All 4-cliques of the orthogonality graph in ascending display order.
/// Throws if any clique extends to 5 mutually orthogonal rays.
std::vector<Basis> enumerate_bases(const OrthGraph& g);

/// Independent basis oracle: image of the standard tetrad {e1..e4} under
/// every group element.  Each distinct basis must arise from exactly
/// `g.size() / bases` elements; throws otherwise.
std::vector<Basis> bases_via_group(const Group& g, const Configuration& cfg);

struct CliqueCensus {
    std::map<int, std::uint64_t> histogram;   // clique size -> count
    std::uint64_t total = 0;
    int min_size = 0;
    int max_size = 0;
};

/// Exact census of all maximal cliques of the COMPLEMENT graph (mutually
/// nonorthogonal sets).  Deterministic and independent of `threads`.
CliqueCensus nonorth_clique_census(const OrthGraph& g, int threads = 1);

struct KSResult {
    bool satisfiable = false;
    std::vector<std::uint8_t> witness;   // per internal ray id, 0/1 (when satisfiable)
    std::uint64_t nodes_explored = 0;
};

/// Exhaustive backtracking over per-basis choices with orthogonality
/// propagation: is there a {0,1} assignment giving every basis exactly one 1?
KSResult ks_colorability(const OrthGraph& g, const std::vector<Basis>& bases);

/// True iff the selected bases are pairwise disjoint and cover every ray.
/// Selection entries are 1-based indices into `bases`.
bool partition_check(const std::vector<Basis>& bases, const std::vector<int>& selection,
                     int ray_count);

}  // namespace raycheck
