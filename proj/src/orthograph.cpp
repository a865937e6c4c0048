#include "raycheck/orthograph.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace raycheck {

OrthGraph::OrthGraph(const Configuration& cfg) : n_(cfg.ray_count()), cfg_(&cfg) {
    if (n_ > 128) throw std::runtime_error("graph too large for 128-bit rows");
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (inner_product(cfg.ray(i), cfg.ray(j)).is_zero()) {
                adj_[static_cast<std::size_t>(i)].set(j);
                adj_[static_cast<std::size_t>(j)].set(i);
            }
}

namespace {

Basis to_basis(const Configuration& cfg, std::array<int, 4> internal) {
    Basis b;
    for (int k = 0; k < 4; ++k) b.states[static_cast<std::size_t>(k)] = cfg.display_id(internal[static_cast<std::size_t>(k)]);
    std::sort(b.states.begin(), b.states.end());
    return b;
}

}  // namespace

std::vector<Basis> enumerate_bases(const OrthGraph& g) {
    const Configuration& cfg = g.config();
    std::vector<Basis> out;
    const int n = g.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!g.adjacent(i, j)) continue;
            BitSet128 cij = g.neighbors(i) & g.neighbors(j);
            for (int k = j + 1; k < n; ++k) {
                if (!cij.test(k)) continue;
                BitSet128 cijk = cij & g.neighbors(k);
                for (int l = k + 1; l < n; ++l) {
                    if (!cijk.test(l)) continue;
                    if (!(cijk & g.neighbors(l)).empty())
                        throw std::runtime_error("five mutually orthogonal rays in dimension four");
                    out.push_back(to_basis(cfg, {i, j, k, l}));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Basis> bases_via_group(const Group& g, const Configuration& cfg) {
    std::map<Basis, int> fiber;
    for (const auto& e : g.elements()) {
        std::array<int, 4> ids;
        for (int k = 0; k < 4; ++k) {
            CVec4 col;
            for (int r = 0; r < 4; ++r) col.c[static_cast<std::size_t>(r)] = e.matrix.m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
            int id = cfg.find_ray(col);
            if (id < 0) throw std::runtime_error("group image of a basis vector is not a configuration ray");
            ids[static_cast<std::size_t>(k)] = id;
        }
        fiber[to_basis(cfg, ids)] += 1;
    }
    const std::size_t expect = g.size() / fiber.size();
    for (const auto& [b, cnt] : fiber)
        if (static_cast<std::size_t>(cnt) != expect)
            throw std::runtime_error("uneven basis fiber under the group action");
    std::vector<Basis> out;
    for (const auto& [b, cnt] : fiber) out.push_back(b);
    return out;   // map iteration is already ascending
}

namespace {

/// Bron-Kerbosch with pivoting over bitset rows, counting only.
struct CensusWorker {
    const std::vector<BitSet128>* comp;
    std::array<std::uint64_t, 128> hist{};

    void run(int depth, BitSet128 P, BitSet128 X) {
        if (P.empty()) {
            if (X.empty()) hist[static_cast<std::size_t>(depth)] += 1;
            return;
        }
        // pivot: maximize |P & N(u)| over P | X
        BitSet128 PX = P | X;
        int pivot = -1, best = -1;
        for (int wi = 0; wi < 2; ++wi) {
            std::uint64_t bits = PX.w[wi];
            while (bits) {
                int u = (wi << 6) + __builtin_ctzll(bits);
                bits &= bits - 1;
                int c = P.count_and((*comp)[static_cast<std::size_t>(u)]);
                if (c > best) {
                    best = c;
                    pivot = u;
                }
            }
        }
        BitSet128 cand = P.and_not((*comp)[static_cast<std::size_t>(pivot)]);
        for (int wi = 0; wi < 2; ++wi) {
            std::uint64_t bits = cand.w[wi];
            while (bits) {
                int v = (wi << 6) + __builtin_ctzll(bits);
                bits &= bits - 1;
                const BitSet128& nv = (*comp)[static_cast<std::size_t>(v)];
                run(depth + 1, P & nv, X & nv);
                P.reset(v);
                X.set(v);
            }
        }
    }
};

}  // namespace

CliqueCensus nonorth_clique_census(const OrthGraph& g, int threads) {
    const int n = g.size();
    std::vector<BitSet128> comp(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && !g.adjacent(i, j)) comp[static_cast<std::size_t>(i)].set(j);

    if (threads < 1) threads = 1;
    // top-level split by vertex: v with candidates above v, excluded below v
    std::atomic<int> next{0};
    std::vector<std::array<std::uint64_t, 128>> hists(static_cast<std::size_t>(threads));
    auto work = [&](int t) {
        CensusWorker w;
        w.comp = &comp;
        for (;;) {
            int v = next.fetch_add(1);
            if (v >= n) break;
            const BitSet128& nv = comp[static_cast<std::size_t>(v)];
            BitSet128 P{}, X{};
            for (int u = 0; u < n; ++u) {
                if (!nv.test(u)) continue;
                if (u > v)
                    P.set(u);
                else
                    X.set(u);
            }
            w.run(1, P, X);
        }
        hists[static_cast<std::size_t>(t)] = w.hist;
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    CliqueCensus census;
    for (const auto& h : hists)
        for (int s = 0; s < 128; ++s)
            if (h[static_cast<std::size_t>(s)]) census.histogram[s] += h[static_cast<std::size_t>(s)];
    for (const auto& [size, cnt] : census.histogram) census.total += cnt;
    if (!census.histogram.empty()) {
        census.min_size = census.histogram.begin()->first;
        census.max_size = census.histogram.rbegin()->first;
    }
    return census;
}

namespace {

struct KSSearch {
    const OrthGraph* g;
    const std::vector<Basis>* bases;
    std::vector<std::array<int, 4>> members;   // internal ids per basis
    std::vector<std::int8_t> value;            // -1 unset, 0, 1
    std::uint64_t nodes = 0;

    bool recurse() {
        ++nodes;
        // fail-first: pick the unsatisfied basis with fewest open choices
        const std::array<int, 4>* best = nullptr;
        int best_open = 5;
        for (const auto& b : members) {
            int ones = 0, open = 0;
            for (int r : b) {
                if (value[static_cast<std::size_t>(r)] == 1) ++ones;
                else if (value[static_cast<std::size_t>(r)] == -1) ++open;
            }
            if (ones >= 1) continue;   // satisfied (two 1s impossible: members are orthogonal)
            if (open == 0) return false;
            if (open < best_open) {
                best_open = open;
                best = &b;
                if (open == 1) break;
            }
        }
        if (best == nullptr) return true;

        for (int r : *best) {
            if (value[static_cast<std::size_t>(r)] != -1) continue;
            std::vector<int> changed;
            value[static_cast<std::size_t>(r)] = 1;
            changed.push_back(r);
            bool ok = true;
            const BitSet128& nb = g->neighbors(r);
            for (int u = 0; u < g->size(); ++u) {
                if (!nb.test(u)) continue;
                if (value[static_cast<std::size_t>(u)] == 1) { ok = false; break; }
                if (value[static_cast<std::size_t>(u)] == -1) {
                    value[static_cast<std::size_t>(u)] = 0;
                    changed.push_back(u);
                }
            }
            if (ok && recurse()) return true;
            for (std::size_t i = 1; i < changed.size(); ++i) value[static_cast<std::size_t>(changed[i])] = -1;
            value[static_cast<std::size_t>(r)] = -1;
        }
        return false;
    }
};

}  // namespace

KSResult ks_colorability(const OrthGraph& g, const std::vector<Basis>& bases) {
    KSSearch s;
    s.g = &g;
    s.bases = &bases;
    const Configuration& cfg = g.config();
    for (const auto& b : bases) {
        std::array<int, 4> m;
        for (int k = 0; k < 4; ++k) m[static_cast<std::size_t>(k)] = cfg.internal_id(b.states[static_cast<std::size_t>(k)]);
        s.members.push_back(m);
    }
    s.value.assign(static_cast<std::size_t>(g.size()), -1);

    KSResult res;
    res.satisfiable = s.recurse();
    res.nodes_explored = s.nodes;
    if (res.satisfiable) {
        res.witness.assign(s.value.size(), 0);
        for (std::size_t i = 0; i < s.value.size(); ++i)
            res.witness[i] = s.value[i] == 1 ? 1 : 0;
    }
    return res;
}

bool partition_check(const std::vector<Basis>& bases, const std::vector<int>& selection,
                     int ray_count) {
    std::set<int> seen;
    for (int id : selection) {
        if (id < 1 || id > static_cast<int>(bases.size())) return false;
        for (int s : bases[static_cast<std::size_t>(id - 1)].states) {
            if (!seen.insert(s).second) return false;
        }
    }
    return static_cast<int>(seen.size()) == ray_count;
}

}  // namespace raycheck
