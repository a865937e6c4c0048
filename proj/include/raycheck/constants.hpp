#pragma once

#include <array>

#include "raycheck/qimag.hpp"

// Named constants of the two configurations: the generators P1, P2, S of the
// 5040-element group, the subgroup generator H, the antisymmetric matrices
// J, J1, J2, the field constants iota = i/sqrt(7) and omega = exp(2*pi*i/3),
// and the integer base-change matrix carrying Witting imaginary parts onto
// the 120-state configuration.

namespace raycheck::constants {

// d = 7 scalars
QImag iota();         // i/sqrt(7)
QImag iota1();        // (1 + iota)/2
QImag iota2();        // (1 + 3*iota)/2

// d = 3 scalars
QImag omega();        // (-1 + i*sqrt(3))/2
QImag i_sqrt3();      // i/sqrt(3)

// roots of z^2 + z + 2 = 0 (d = 7), plus root and minus root of the discriminant
QImag root_plus();    // (-1 + i*sqrt(7))/2
QImag root_minus();   // (-1 - i*sqrt(7))/2

// group generators and entangling matrices (all d = 7, all unitary)
CMat4 P1();
CMat4 P2();
CMat4 S();
CMat4 H();
CMat4 J();
CMat4 J1();
CMat4 J2();

/// Integer numerator of the imaginary-part base change; M^T M = 21 * I.
std::array<std::array<int, 4>, 4> transfer_numerator();

}  // namespace raycheck::constants
