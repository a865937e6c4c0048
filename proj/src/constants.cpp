#include "raycheck/constants.hpp"

namespace raycheck::constants {

namespace {

QImag q7(std::int64_t an, std::int64_t ad, std::int64_t bn, std::int64_t bd) {
    return {Rational(an, ad), Rational(bn, bd), 7};
}

// shorthand symbols used by the generator tables
const QImag O = QImag::zero(7);
const QImag E = QImag::one(7);

CMat4 mat(std::array<std::array<QImag, 4>, 4> rows) { return CMat4{rows}; }

}  // namespace

QImag iota() { return q7(0, 1, 1, 7); }
QImag iota1() { return q7(1, 2, 1, 14); }
QImag iota2() { return q7(1, 2, 3, 14); }

QImag omega() { return {Rational(-1, 2), Rational(1, 2), 3}; }
QImag i_sqrt3() { return {Rational(0), Rational(1, 3), 3}; }

QImag root_plus() { return q7(-1, 2, 1, 2); }
QImag root_minus() { return q7(-1, 2, -1, 2); }

CMat4 P1() {
    return mat({{{E, O, O, O},
                 {O, O, O, E},
                 {O, E, O, O},
                 {O, O, E, O}}});
}

CMat4 P2() {
    return mat({{{O, O, E, O},
                 {O, O, O, E},
                 {-E, O, O, O},
                 {O, -E, O, O}}});
}

CMat4 S() {
    const QImag i = iota(), i1 = iota1(), i2 = iota2();
    const QImag ii = q7(0, 1, 2, 7);  // 2*iota
    return mat({{{E, O, O, O},
                 {O, ii, i1, i},
                 {O, i1, i, -i2},
                 {O, i, -i2, -i1.conj()}}});
}

CMat4 H() {
    const QImag i = iota(), i1 = iota1(), i2 = iota2();
    const QImag b1 = i1.conj(), b2 = i2.conj();
    return mat({{{O, i1, i, -i2},
                 {i1, -i1, i1, -i},
                 {i, -b1, -b1, -b1},
                 {b2, -i, -b1, O}}});
}

CMat4 J() {
    return mat({{{O, O, O, E},
                 {O, O, -E, O},
                 {O, E, O, O},
                 {-E, O, O, O}}});
}

CMat4 J1() {
    return mat({{{O, O, E, O},
                 {O, O, O, E},
                 {-E, O, O, O},
                 {O, -E, O, O}}});
}

CMat4 J2() {
    return mat({{{O, E, O, O},
                 {-E, O, O, O},
                 {O, O, O, -E},
                 {O, O, E, O}}});
}

std::array<std::array<int, 4>, 4> transfer_numerator() {
    return {{{1, 4, -2, 0},
             {-4, 1, 0, 2},
             {2, 0, 1, 4},
             {0, -2, -4, 1}}};
}

}  // namespace raycheck::constants
