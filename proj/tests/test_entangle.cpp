#include <doctest.h>

#include "raycheck/constants.hpp"
#include "raycheck/entangle.hpp"
#include "test_support.hpp"

using namespace raycheck;
using namespace raycheck::testing;
namespace C = raycheck::constants;

namespace {

const std::vector<Basis>& sv_bases() {
    static std::vector<Basis> b = [] {
        OrthGraph g(sv_config());
        return enumerate_bases(g);
    }();
    return b;
}

}  // namespace

TEST_CASE("entangled state normalization") {
    EntangledState omega(C::J());
    CHECK(omega.normalization == Rational(1, 4));
    CHECK_THROWS_AS(EntangledState(C::P1()), std::runtime_error);   // not antisymmetric
}

TEST_CASE("derived entangled states carry the expected coefficient patterns") {
    // J1: |0>|2> - |2>|0> + |1>|3> - |3>|1>, J2: |0>|1> - |1>|0> + |3>|2> - |2>|3>,
    // both with coefficient 1/2 after normalization
    struct Cell { int j, k, sign; };
    const std::vector<Cell> omega1 = {{0, 2, 1}, {2, 0, -1}, {1, 3, 1}, {3, 1, -1}};
    const std::vector<Cell> omega2 = {{0, 1, 1}, {1, 0, -1}, {3, 2, 1}, {2, 3, -1}};
    auto check_pattern = [](const CMat4& m, const std::vector<Cell>& cells) {
        EntangledState st(m);
        CHECK(st.normalization == Rational(1, 4));   // coefficient 1/sqrt(4) = 1/2
        CMat4 expect = CMat4::zero(7);
        for (const auto& c : cells)
            expect.m[static_cast<std::size_t>(c.j)][static_cast<std::size_t>(c.k)] = QImag::integer(c.sign, 7);
        CHECK(m == expect);
    };
    check_pattern(C::J1(), omega1);
    check_pattern(C::J2(), omega2);
}

TEST_CASE("opposite map requires the configuration to be closed under it") {
    // a non-monomial coset matrix maps the 4-ray monomial orbit outside itself
    auto jcs = coset_j_matrices(sigma_group(), group_2s5(), C::J());
    auto simple = [](const CMat4& m) {
        for (const auto& row : m.m)
            for (const auto& x : row)
                if (!x.b.is_zero()) return false;
        return true;
    };
    CVec4 e1{{QImag::one(7), QImag::zero(7), QImag::zero(7), QImag::zero(7)}};
    Configuration small = orbit_configuration(group_2a4(), e1);
    bool threw = false;
    for (const auto& m : jcs) {
        if (simple(m)) continue;
        CHECK_THROWS_WITH_AS(opposite_map(m, small), doctest::Contains("outside"),
                             std::runtime_error);
        threw = true;
        break;
    }
    CHECK(threw);
}

TEST_CASE("invariance signs") {
    CHECK(invariance_sign(CMat4::identity(7), C::J()) == 1);
    CHECK(invariance_sign(C::J(), C::J()) == 1);
    CHECK(invariance_sign(C::H(), C::J()) == 1);
    CHECK(invariance_sign(C::P2(), C::J()) == -1);
    CHECK_FALSE(invariance_sign(C::S(), C::J()).has_value());
    CHECK_FALSE(invariance_sign(C::P1(), C::J()).has_value());
}

TEST_CASE("invariance sign is a character on the 240-element subgroup") {
    const Group& g = group_2s5();
    std::vector<int> sign(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto s = invariance_sign(g.element(static_cast<int>(i)).matrix, C::J());
        REQUIRE(s.has_value());
        sign[i] = *s;
    }
    Rng rng(5);
    for (int t = 0; t < 2000; ++t) {
        int a = static_cast<int>(rng.below(g.size()));
        int b = static_cast<int>(rng.below(g.size()));
        int ab = g.find(g.element(a).matrix * g.element(b).matrix);
        REQUIRE(ab >= 0);
        CHECK(sign[static_cast<std::size_t>(ab)] == sign[static_cast<std::size_t>(a)] * sign[static_cast<std::size_t>(b)]);
    }
}

TEST_CASE("opposite involutions match the published tables") {
    const Configuration& cfg = sv_config();
    OppositeMap om = opposite_map(C::J(), cfg);
    CHECK(om.partner == fixtures().opposite_j.partner);
    CHECK(om.is_involution());
    CHECK(om.fixed_point_free());
    CHECK(om.of(1) == 31);

    // the printed J1/J2 tables are swapped relative to the matrices
    OppositeMap om1 = opposite_map(C::J1(), cfg);
    OppositeMap om2 = opposite_map(C::J2(), cfg);
    CHECK(om1.fixed_point_free());
    CHECK(om2.fixed_point_free());
    CHECK(om1.of(1) == 21);
    CHECK(om2.of(1) == 11);
    CHECK(om1.of(2) == 22);
    CHECK(om2.of(2) == 12);
    CHECK(om1.partner == fixtures().opposite_j2.partner);
    CHECK(om2.partner == fixtures().opposite_j1.partner);
    CHECK(om1.partner != fixtures().opposite_j1.partner);
    CHECK(om2.partner != fixtures().opposite_j2.partner);
}

TEST_CASE("partner bases match the published pairing") {
    const Configuration& cfg = sv_config();
    BasisPairing bp = partner_basis_map(C::J(), cfg, sv_bases());
    CHECK(bp.partner == fixtures().basis_pairs_j.partner);
    CHECK(bp.of(1) == 132);
    CHECK(bp.of(3) == 3);
    std::set<int> fixed(bp.fixed.begin(), bp.fixed.end());
    std::set<int> marked(fixtures().bases.marked.begin(), fixtures().bases.marked.end());
    CHECK(fixed == marked);
    CHECK(fixed.size() == 30);
}

TEST_CASE("equal bases from both subgroups are the marked 30") {
    const Configuration& cfg = sv_config();
    std::set<int> marked(fixtures().bases.marked.begin(), fixtures().bases.marked.end());
    CHECK(equal_bases(group_2a5(), cfg, sv_bases()) == marked);
    CHECK(equal_bases(group_2s5(), cfg, sv_bases()) == marked);
}

TEST_CASE("marked bases carry exactly two opposite pairs") {
    const Configuration& cfg = sv_config();
    OppositeMap om = opposite_map(C::J(), cfg);
    for (int id : fixtures().bases.marked) {
        const Basis& b = sv_bases()[static_cast<std::size_t>(id - 1)];
        int pairs = 0;
        for (int x = 0; x < 4; ++x)
            for (int y = x + 1; y < 4; ++y)
                if (om.of(b.states[static_cast<std::size_t>(x)]) == b.states[static_cast<std::size_t>(y)]) ++pairs;
        CHECK(pairs == 2);
    }
}

TEST_CASE("coset matrices: 21 antisymmetric unitaries, three simple forms") {
    auto jcs = coset_j_matrices(sigma_group(), group_2s5(), C::J());
    REQUIRE(jcs.size() == 21);
    for (const auto& m : jcs) {
        CHECK(m.is_unitary());
        CHECK(m.is_antisymmetric());
    }
    auto simple = [](const CMat4& m) {
        for (const auto& row : m.m)
            for (const auto& x : row)
                if (!x.b.is_zero() ||
                    !(x.a == Rational(0) || x.a == Rational(1) || x.a == Rational(-1)))
                    return false;
        return true;
    };
    int n_simple = 0;
    bool has_j = false, has_j1 = false, has_j2 = false;
    for (const auto& m : jcs) {
        if (!simple(m)) continue;
        ++n_simple;
        has_j |= m == C::J();
        has_j1 |= m == C::J1();
        has_j2 |= m == C::J2();
    }
    CHECK(n_simple == 3);
    CHECK(has_j);
    CHECK(has_j1);
    CHECK(has_j2);
}

TEST_CASE("joint distribution on the standard basis pair") {
    const Configuration& cfg = sv_config();
    const Basis& b3 = sv_bases()[2];   // (1, 11, 21, 31), self-paired
    auto dist = joint_distribution(C::J(), cfg, b3, b3);
    // support sits exactly on the opposite pairs 1<->31 and 11<->21
    const Rational q(1, 4), z(0);
    const int expect[4][4] = {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
    Rational total;
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
            CHECK(dist[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] == (expect[r][s] ? q : z));
            total += dist[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
        }
    CHECK(total == Rational(1));
}

TEST_CASE("joint distribution row sums are uniform on partner pairs") {
    const Configuration& cfg = sv_config();
    BasisPairing bp = partner_basis_map(C::J(), cfg, sv_bases());
    OppositeMap om = opposite_map(C::J(), cfg);
    Rng rng(11);
    for (int t = 0; t < 12; ++t) {
        int id = static_cast<int>(rng.below(210)) + 1;
        const Basis& ba = sv_bases()[static_cast<std::size_t>(id - 1)];
        const Basis& bb = sv_bases()[static_cast<std::size_t>(bp.of(id) - 1)];
        auto dist = joint_distribution(C::J(), cfg, ba, bb);
        for (int r = 0; r < 4; ++r) {
            Rational row;
            for (int s = 0; s < 4; ++s) {
                row += dist[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)];
                bool opp = om.of(ba.states[static_cast<std::size_t>(r)]) == bb.states[static_cast<std::size_t>(s)];
                CHECK(dist[static_cast<std::size_t>(r)][static_cast<std::size_t>(s)] == (opp ? Rational(1, 4) : Rational(0)));
            }
            CHECK(row == Rational(1, 4));
        }
    }
}

TEST_CASE("opposite map commutes with the invariance subgroup") {
    // opposite(A psi) = A opposite(psi) for A respecting the entangled state,
    // so relabeling by subgroup elements preserves the pairing
    const Configuration& cfg = sv_config();
    OppositeMap om = opposite_map(C::J(), cfg);
    Rng rng(3);
    const Group& g = group_2s5();
    for (int t = 0; t < 200; ++t) {
        const CMat4& A = g.element(static_cast<int>(rng.below(g.size()))).matrix;
        int ray = static_cast<int>(rng.below(120));
        int moved = cfg.find_ray(A * cfg.ray(ray));
        REQUIRE(moved >= 0);
        int opp_moved = cfg.find_ray(A * cfg.ray(cfg.internal_id(om.of(cfg.display_id(ray)))));
        REQUIRE(opp_moved >= 0);
        CHECK(om.of(cfg.display_id(moved)) == cfg.display_id(opp_moved));
    }
}
