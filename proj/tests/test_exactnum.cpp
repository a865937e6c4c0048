#include <doctest.h>

#include <limits>

#include "raycheck/constants.hpp"
#include "raycheck/qimag.hpp"
#include "test_support.hpp"

using namespace raycheck;
namespace C = raycheck::constants;

namespace raycheck::testing {

const Group& sigma_group() {
    static Group g = [] {
        Group s = Group::close({C::P1(), C::P2(), C::S()}, 6000);
        s.attach_homomorphism({Perm7::from_cycles({{1, 2, 4}, {3, 6, 5}}),
                               Perm7::from_cycles({{1, 6}, {3, 4}}),
                               Perm7::from_cycles({{1, 2, 3, 4, 5, 6, 7}})});
        return s;
    }();
    return g;
}

const Group& group_2a4() {
    static Group g = Group::close({C::P1(), C::P2()}, 100);
    return g;
}

const Group& group_2a5() {
    static Group g = Group::close({C::J(), C::H()}, 1000);
    return g;
}

const Group& group_2s5() {
    static Group g = Group::close({C::J(), C::H(), C::P2()}, 1000);
    return g;
}

const FixtureSet& fixtures() {
    static FixtureSet fx = load_fixture_set(data_dir());
    return fx;
}

const Configuration& sv_config() {
    static Configuration cfg = [] {
        CVec4 seed{{QImag::one(7), QImag::zero(7), QImag::zero(7), QImag::zero(7)}};
        Configuration c = orbit_configuration(sigma_group(), seed);
        std::vector<CVec4> cat;
        for (const auto& row : fixtures().states.rows) cat.push_back(row.v);
        c.align_with_catalog(cat);
        return c;
    }();
    return cfg;
}

const Configuration& witting_config() {
    static Configuration cfg = witting_configuration();
    return cfg;
}

}  // namespace raycheck::testing

TEST_CASE("rational arithmetic stays reduced") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 7) * Rational(7, 2) == Rational(1));
    CHECK(Rational(1, 7) < Rational(2, 7));
    CHECK((-Rational(3, 5)).str() == "-3/5");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational overflow aborts loudly") {
    Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + big, std::overflow_error);
    CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
}

TEST_CASE("iota constants have the stated norms") {
    CHECK(C::iota().norm() == Rational(1, 7));
    CHECK(C::iota1().norm() == Rational(2, 7));
    CHECK(C::iota2().norm() == Rational(4, 7));
    CHECK(C::iota() * C::iota().conj() == QImag(Rational(1, 7), Rational(0), 7));
}

TEST_CASE("omega is a cube root of unity") {
    QImag w = C::omega();
    CHECK(w * w * w == QImag::one(3));
    CHECK(w.norm() == Rational(1));
}

TEST_CASE("field inverse identity") {
    QImag x = C::iota1();
    CHECK(x.inverse() * x == QImag::one(7));
    CHECK_THROWS_AS(QImag::zero(7).inverse(), std::domain_error);
}

TEST_CASE("mixed discriminants are rejected") {
    CHECK_THROWS_AS(C::iota() + C::omega(), std::domain_error);
    CHECK_THROWS_AS(C::iota() * C::omega(), std::domain_error);
    CHECK_THROWS_AS(C::P1() * CMat4::identity(3), std::domain_error);
    CVec4 u{{QImag::one(7), QImag::zero(7), QImag::zero(7), QImag::zero(7)}};
    CVec4 v{{QImag::one(3), QImag::zero(3), QImag::zero(3), QImag::zero(3)}};
    CHECK_THROWS_AS(inner_product(u, v), std::domain_error);
}

TEST_CASE("roots of z^2+z+2 have norm 2") {
    for (QImag r : {C::root_plus(), C::root_minus()}) {
        CHECK(r * r + r + QImag::integer(2, 7) == QImag::zero(7));
        CHECK(r.norm() == Rational(2));
    }
}

TEST_CASE("field properties on random values") {
    testing::Rng rng(13);
    for (int i = 0; i < 500; ++i) {
        QImag x = rng.qimag(7), y = rng.qimag(7);
        CHECK(x.conj().conj() == x);
        CHECK((x * y).norm() == x.norm() * y.norm());
        if (!x.is_zero()) CHECK(x * x.inverse() == QImag::one(7));
    }
}

TEST_CASE("named matrices are unitary") {
    for (const CMat4& m : {C::P1(), C::P2(), C::S(), C::H(), C::J(), C::J1(), C::J2()})
        CHECK(m.is_unitary());
}

TEST_CASE("generator orders") {
    const CMat4 I = CMat4::identity(7);
    CMat4 s7 = C::S();
    for (int i = 0; i < 6; ++i) s7 = s7 * C::S();
    CHECK(s7 == I);
    CHECK(C::P2() * C::P2() == -I);
    CHECK(C::P1() * C::P1() * C::P1() == I);
}

TEST_CASE("inner product examples") {
    const QImag O = QImag::zero(7), E = QImag::one(7);
    CVec4 e1{{E, O, O, O}}, e2{{O, E, O, O}};
    CHECK(inner_product(e1, e1) == E);
    CHECK(inner_product(e1, e2) == O);

    CVec4 psi2 = scale(C::iota(), {{QImag::integer(2, 7), E, E, E}});
    CHECK(inner_product(e1, psi2).norm() == Rational(4, 7));
    // conjugate linearity sits in the first slot
    CHECK(inner_product(psi2, e1) == inner_product(e1, psi2).conj());
}
