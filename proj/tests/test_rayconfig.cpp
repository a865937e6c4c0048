#include <doctest.h>

#include "raycheck/constants.hpp"
#include "raycheck/rayconfig.hpp"
#include "test_support.hpp"

using namespace raycheck;
using namespace raycheck::testing;
namespace C = raycheck::constants;

namespace {

CVec4 e_k(int k, int d) {
    CVec4 v{{QImag::zero(d), QImag::zero(d), QImag::zero(d), QImag::zero(d)}};
    v.c[static_cast<std::size_t>(k)] = QImag::one(d);
    return v;
}

}  // namespace

TEST_CASE("orbit of the seed has 240 vectors and 120 rays") {
    const Configuration& cfg = sv_config();
    CHECK(cfg.vector_count() == 240);
    CHECK(cfg.ray_count() == 120);
    // contains iota*(2,1,1,1)
    CVec4 psi2 = scale(C::iota(), {{QImag::integer(2, 7), QImag::one(7), QImag::one(7), QImag::one(7)}});
    CHECK(cfg.find_ray(psi2) >= 0);
}

TEST_CASE("monomial subgroup orbit of a basis vector") {
    Configuration cfg = orbit_configuration(group_2a4(), e_k(0, 7));
    CHECK(cfg.ray_count() == 4);
    CHECK(cfg.vector_count() == 8);
}

TEST_CASE("orbit seed must be unit norm") {
    CVec4 bad{{QImag::integer(2, 7), QImag::zero(7), QImag::zero(7), QImag::zero(7)}};
    CHECK_THROWS_WITH_AS(orbit_configuration(group_2a4(), bad), doctest::Contains("unit norm"),
                         std::runtime_error);
}

TEST_CASE("canonicalization is idempotent and unit invariant") {
    Rng rng(7);
    const Configuration& cfg = sv_config();
    for (int i = 0; i < 200; ++i) {
        const CVec4& v = cfg.ray(static_cast<int>(rng.below(120)));
        CHECK(canonical_ray(v) == v);
        for (const QImag& u : field_units(7)) CHECK(canonical_ray(scale(u, v)) == v);
    }
    const Configuration& w = witting_config();
    for (int i = 0; i < 100; ++i) {
        const CVec4& v = w.ray(static_cast<int>(rng.below(40)));
        for (const QImag& u : field_units(3)) CHECK(canonical_ray(scale(u, v)) == v);
    }
}

TEST_CASE("catalog alignment pins the basis states at 10k+1") {
    const Configuration& cfg = sv_config();
    for (int k = 0; k < 4; ++k)
        CHECK(cfg.display_id(cfg.find_ray(e_k(k, 7))) == 1 + 10 * k);
}

TEST_CASE("alignment rejects corrupted catalogs") {
    CVec4 seed = e_k(0, 7);
    Configuration cfg = orbit_configuration(sigma_group(), seed);
    std::vector<CVec4> cat;
    for (const auto& row : fixtures().states.rows) cat.push_back(row.v);

    SUBCASE("non-unit row") {
        cat[5] = scale(QImag::integer(2, 7), cat[5]);
        CHECK_THROWS_WITH_AS(cfg.align_with_catalog(cat), doctest::Contains("unit norm"),
                             std::runtime_error);
    }
    SUBCASE("duplicated row") {
        cat[5] = cat[4];
        CHECK_THROWS_WITH_AS(cfg.align_with_catalog(cat), doctest::Contains("already matched"),
                             std::runtime_error);
    }
    SUBCASE("foreign row") {
        cat[5] = CVec4{{QImag(Rational(3, 5), Rational(0), 7),
                        QImag(Rational(4, 5), Rational(0), 7), QImag::zero(7), QImag::zero(7)}};
        CHECK_THROWS_WITH_AS(cfg.align_with_catalog(cat), doctest::Contains("matches no ray"),
                             std::runtime_error);
    }
}

TEST_CASE("state types reproduce the catalog t column") {
    const Configuration& cfg = sv_config();
    StateTypeTable table;
    std::vector<int> t = table.classify_all(cfg);
    std::map<int, int> counts;
    for (int x : t) counts[x] += 1;
    CHECK(counts == std::map<int, int>{{1, 4}, {2, 12}, {3, 32}, {4, 72}});
    for (const auto& row : fixtures().states.rows)
        CHECK(t[static_cast<std::size_t>(cfg.internal_id(row.index))] == row.type);

    CHECK(table.classify(e_k(0, 7)) == 1);
    CVec4 psi2 = scale(C::iota(), {{QImag::integer(2, 7), QImag::one(7), QImag::one(7), QImag::one(7)}});
    CHECK(table.classify(psi2) == 2);
}

TEST_CASE("classifier rejects rays outside the configuration") {
    StateTypeTable table;
    CVec4 foreign{{QImag(Rational(3, 5), Rational(0), 7), QImag(Rational(4, 5), Rational(0), 7),
                   QImag::zero(7), QImag::zero(7)}};
    CHECK_THROWS_WITH_AS(table.classify(foreign), doctest::Contains("no state-type template"),
                         std::runtime_error);
}

TEST_CASE("gram spectra") {
    std::set<Rational> sv = gram_spectrum(sv_config());
    CHECK(sv == std::set<Rational>{Rational(0), Rational(1, 7), Rational(2, 7), Rational(4, 7)});
    std::set<Rational> w = gram_spectrum(witting_config());
    CHECK(w == std::set<Rational>{Rational(0), Rational(1, 3)});

    Group trivial = Group::close({CMat4::identity(7)}, 10);
    Configuration single = orbit_configuration(trivial, e_k(0, 7));
    CHECK(gram_spectrum(single).empty());
}

TEST_CASE("witting configuration shape") {
    const Configuration& w = witting_config();
    CHECK(w.ray_count() == 40);
    CHECK(w.vector_count() == 240);
    for (const auto& r : w.rays()) CHECK(norm_squared(r) == Rational(1));
    CVec4 im = scale(C::i_sqrt3(), {{QImag::zero(3), QImag::one(3), -QImag::one(3), QImag::one(3)}});
    CHECK(w.find_ray(im) >= 0);
}

TEST_CASE("pure imaginary quadruple lies in the configuration") {
    const Configuration& cfg = sv_config();
    const int rows[4][4] = {{2, 1, 1, 1}, {1, -2, -1, 1}, {1, 1, -2, -1}, {1, -1, 1, -2}};
    for (const auto& row : rows) {
        CVec4 v;
        for (int k = 0; k < 4; ++k) v.c[static_cast<std::size_t>(k)] = QImag(Rational(0), Rational(row[k], 7), 7);
        CHECK(cfg.find_ray(v) >= 0);
    }
}

TEST_CASE("ray orbits under the invariance subgroups") {
    const Configuration& cfg = sv_config();
    auto all = ray_orbits(sigma_group(), cfg);
    REQUIRE(all.size() == 1);
    CHECK(all[0].size() == 120);

    auto s5 = ray_orbits(group_2s5(), cfg);
    REQUIRE(s5.size() == 1);
    CHECK(s5[0].size() == 120);

    auto a5 = ray_orbits(group_2a5(), cfg);
    REQUIRE(a5.size() == 2);
    CHECK(a5[0].size() == 60);
    CHECK(a5[1].size() == 60);
    auto orbit_of = [&](int display) {
        int internal = cfg.internal_id(display);
        for (std::size_t i = 0; i < a5.size(); ++i)
            for (int x : a5[i])
                if (x == internal) return i;
        return std::size_t(99);
    };
    CHECK(orbit_of(1) == orbit_of(31));
    CHECK(orbit_of(11) == orbit_of(21));
    CHECK(orbit_of(1) != orbit_of(11));
}

TEST_CASE("non-invariant subgroup raises") {
    // the monomial orbit of e1 has 4 rays; the full group moves them outside
    Configuration small = orbit_configuration(group_2a4(), e_k(0, 7));
    CHECK_THROWS_WITH_AS(ray_orbits(sigma_group(), small),
                         doctest::Contains("outside the configuration"), std::runtime_error);
}
