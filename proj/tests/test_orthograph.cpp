#include <doctest.h>

#include "raycheck/constants.hpp"
#include "raycheck/orthograph.hpp"
#include "test_support.hpp"

using namespace raycheck;
using namespace raycheck::testing;

namespace {

const OrthGraph& sv_graph() {
    static OrthGraph g(sv_config());
    return g;
}

const OrthGraph& witting_graph() {
    static OrthGraph g(witting_config());
    return g;
}

const std::vector<Basis>& sv_bases() {
    static std::vector<Basis> b = enumerate_bases(sv_graph());
    return b;
}

}  // namespace

TEST_CASE("degrees: 21 per state, 12 per witting state") {
    for (int i = 0; i < sv_graph().size(); ++i) CHECK(sv_graph().degree(i) == 21);
    for (int i = 0; i < witting_graph().size(); ++i) CHECK(witting_graph().degree(i) == 12);
}

TEST_CASE("catalog rays 1 and 11 are orthogonal") {
    const Configuration& cfg = sv_config();
    CHECK(sv_graph().adjacent(cfg.internal_id(1), cfg.internal_id(11)));
}

TEST_CASE("enumerated bases match the published list") {
    const auto& bases = sv_bases();
    REQUIRE(bases.size() == 210);
    CHECK(bases[2].states == std::array<int, 4>{1, 11, 21, 31});   // basis id 3
    const auto& fx = fixtures().bases;
    for (std::size_t i = 0; i < bases.size(); ++i) CHECK(bases[i] == fx.bases[i]);

    std::map<int, int> per_ray;
    for (const auto& b : bases)
        for (int s : b.states) per_ray[s] += 1;
    for (const auto& [s, n] : per_ray) CHECK(n == 7);
}

TEST_CASE("witting bases") {
    auto bases = enumerate_bases(witting_graph());
    CHECK(bases.size() == 40);
    std::map<int, int> per;
    for (const auto& b : bases)
        for (int s : b.states) per[s] += 1;
    for (const auto& [s, n] : per) CHECK(n == 4);
}

TEST_CASE("group-image oracle agrees with clique enumeration") {
    auto via_group = bases_via_group(sigma_group(), sv_config());
    CHECK(via_group == sv_bases());
}

TEST_CASE("identity element lands on basis 3") {
    // the identity maps e1..e4 to themselves: catalog (1, 11, 21, 31)
    const Configuration& cfg = sv_config();
    Basis b;
    for (int k = 0; k < 4; ++k) {
        CVec4 v{{QImag::zero(7), QImag::zero(7), QImag::zero(7), QImag::zero(7)}};
        v.c[static_cast<std::size_t>(k)] = QImag::one(7);
        b.states[static_cast<std::size_t>(k)] = cfg.display_id(cfg.find_ray(v));
    }
    std::sort(b.states.begin(), b.states.end());
    auto it = std::find(sv_bases().begin(), sv_bases().end(), b);
    REQUIRE(it != sv_bases().end());
    CHECK(it - sv_bases().begin() + 1 == 3);
}

TEST_CASE("every orthogonal edge extends to a basis") {
    std::set<std::pair<int, int>> covered;
    const Configuration& cfg = sv_config();
    for (const auto& b : sv_bases())
        for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y)
                covered.insert({cfg.internal_id(b.states[static_cast<std::size_t>(x)]),
                                cfg.internal_id(b.states[static_cast<std::size_t>(y)])});
    for (int i = 0; i < sv_graph().size(); ++i)
        for (int j = i + 1; j < sv_graph().size(); ++j)
            if (sv_graph().adjacent(i, j))
                CHECK((covered.count({i, j}) || covered.count({j, i})));
}

TEST_CASE("witting census is exact and thread independent") {
    CliqueCensus c1 = nonorth_clique_census(witting_graph(), 1);
    CHECK(c1.total == 2970);
    CHECK(c1.min_size == 4);
    CHECK(c1.max_size == 7);
    CHECK(c1.histogram == std::map<int, std::uint64_t>{{4, 90}, {7, 2880}});

    CliqueCensus c4 = nonorth_clique_census(witting_graph(), 4);
    CHECK(c4.histogram == c1.histogram);
}

TEST_CASE("kochen-specker searches are unsatisfiable") {
    KSResult w = ks_colorability(witting_graph(), enumerate_bases(witting_graph()));
    CHECK_FALSE(w.satisfiable);
    CHECK(w.nodes_explored > 0);

    KSResult s = ks_colorability(sv_graph(), sv_bases());
    CHECK_FALSE(s.satisfiable);
    CHECK(s.nodes_explored > 0);
}

TEST_CASE("a single-basis toy instance is satisfiable") {
    CVec4 e1{{QImag::one(7), QImag::zero(7), QImag::zero(7), QImag::zero(7)}};
    Configuration toy = orbit_configuration(group_2a4(), e1);
    OrthGraph g(toy);
    auto bases = enumerate_bases(g);
    REQUIRE(bases.size() == 1);
    KSResult r = ks_colorability(g, bases);
    CHECK(r.satisfiable);
    int ones = 0;
    for (std::uint8_t v : r.witness) ones += v;
    CHECK(ones == 1);
}

TEST_CASE("partition check") {
    CHECK(partition_check(sv_bases(), fixtures().bases.marked, 120));
    CHECK_FALSE(partition_check(sv_bases(), {1, 2}, 120));   // both contain state 1
    CHECK_FALSE(partition_check(sv_bases(), {}, 120));
}
