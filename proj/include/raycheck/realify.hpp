#pragma once

#include <array>
#include <vector>

#include "raycheck/rayconfig.hpp"

namespace raycheck {

/// 8-dimensional real image of a complex 4-vector over Q(sqrt(-d)): real
/// parts plus imaginary coefficients kept in exact units of sqrt(d).
/// Squared length = sum re^2 + d * sum im^2.
struct RealVec8 {
    std::array<Rational, 4> re;
    std::array<Rational, 4> im;
    int d = 7;

    friend bool operator==(const RealVec8& u, const RealVec8& v) {
        return u.d == v.d && u.re == v.re && u.im == v.im;
    }
    friend bool operator<(const RealVec8& u, const RealVec8& v) {
        if (u.re != v.re) return u.re < v.re;
        return u.im < v.im;
    }
    RealVec8 operator-() const;
};

Rational real_dot(const RealVec8& u, const RealVec8& v);

/// Full realified vector set of a configuration (rays x field units):
/// 240 vectors for both configurations handled here.
std::vector<RealVec8> realify(const Configuration& cfg);

struct RootSystemReport {
    std::size_t vector_count = 0;
    bool negation_closed = false;
    bool unit_norms = false;
    bool spectrum_ok = false;        // all scaled products in {0,±1,±2}
    bool counts_ok = false;          // per root: 56 at +1, 126 at 0, 56 at -1, antipode
    bool reflection_closed = false;
    int rank = 0;

    bool passed() const {
        return vector_count == 240 && negation_closed && unit_norms && spectrum_ok &&
               counts_ok && reflection_closed && rank == 8;
    }
};

/// Brute-force root-system verification over all pairs: scaled product
/// spectrum, neighbor counts, antipodes, reflection closure, exact rank.
RootSystemReport e8_verify(const std::vector<RealVec8>& vectors);

/// Imaginary-part base change from sqrt(3)-units to sqrt(7)-units: real parts
/// unchanged, im' = (M * im) / 7 with the integer matrix M, M^T M = 21 I.
RealVec8 witting_to_sv(const RealVec8& v);
std::vector<RealVec8> witting_to_sv(const std::vector<RealVec8>& vs);

}  // namespace raycheck
