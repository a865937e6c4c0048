#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "raycheck/rational.hpp"

namespace raycheck {

/// Element a + b*sqrt(-d) of the imaginary quadratic field Q(sqrt(-d)),
/// d in {3, 7}.  The discriminant selector is a runtime tag carried by the
/// value; operations on mixed tags throw std::domain_error.
struct QImag {
    Rational a;   // real part
    Rational b;   // coefficient of sqrt(-d)
    int d = 7;

    QImag() = default;
    QImag(Rational a_, Rational b_, int d_) : a(a_), b(b_), d(d_) {
        if (d != 3 && d != 7) throw std::domain_error("unsupported discriminant");
    }

    static QImag zero(int d) { return {Rational(0), Rational(0), d}; }
    static QImag one(int d) { return {Rational(1), Rational(0), d}; }
    static QImag integer(std::int64_t n, int d) { return {Rational(n), Rational(0), d}; }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    QImag conj() const { return {a, -b, d}; }
    QImag operator-() const { return {-a, -b, d}; }

    /// |z|^2 = a^2 + d*b^2, an exact nonnegative rational.
    Rational norm() const { return a * a + Rational(d) * b * b; }

    QImag inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        Rational n = norm();
        return {a / n, -b / n, d};
    }

    friend QImag operator+(const QImag& x, const QImag& y) {
        check(x, y);
        return {x.a + y.a, x.b + y.b, x.d};
    }
    friend QImag operator-(const QImag& x, const QImag& y) {
        check(x, y);
        return {x.a - y.a, x.b - y.b, x.d};
    }
    friend QImag operator*(const QImag& x, const QImag& y) {
        check(x, y);
        return {x.a * y.a - Rational(x.d) * x.b * y.b, x.a * y.b + x.b * y.a, x.d};
    }
    friend bool operator==(const QImag& x, const QImag& y) {
        check(x, y);
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const QImag& x, const QImag& y) { return !(x == y); }

    /// Total order used for canonical representatives: lexicographic on (a, b).
    friend bool operator<(const QImag& x, const QImag& y) {
        check(x, y);
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }

    /// "(a,b)" with exact fractions.
    std::string str() const { return "(" + a.str() + "," + b.str() + ")"; }

private:
    static void check(const QImag& x, const QImag& y) {
        if (x.d != y.d) throw std::domain_error("field discriminant mismatch");
    }
};

/// 4-vector over Q(sqrt(-d)).
struct CVec4 {
    std::array<QImag, 4> c;

    int d() const { return c[0].d; }

    CVec4 conj() const {
        return {{c[0].conj(), c[1].conj(), c[2].conj(), c[3].conj()}};
    }
    CVec4 operator-() const { return {{-c[0], -c[1], -c[2], -c[3]}}; }

    friend bool operator==(const CVec4& u, const CVec4& v) { return u.c == v.c; }
    friend bool operator!=(const CVec4& u, const CVec4& v) { return !(u == v); }
    friend bool operator<(const CVec4& u, const CVec4& v) {
        for (int i = 0; i < 4; ++i) {
            if (u.c[i] != v.c[i]) return u.c[i] < v.c[i];
        }
        return false;
    }
};

inline CVec4 scale(const QImag& s, const CVec4& v) {
    return {{s * v.c[0], s * v.c[1], s * v.c[2], s * v.c[3]}};
}

/// <u, v>, conjugate-linear in the first argument.
inline QImag inner_product(const CVec4& u, const CVec4& v) {
    QImag s = QImag::zero(u.d());
    for (int i = 0; i < 4; ++i) s = s + u.c[i].conj() * v.c[i];
    return s;
}

inline Rational norm_squared(const CVec4& v) {
    Rational s;
    for (int i = 0; i < 4; ++i) s += v.c[i].norm();
    return s;
}

/// 4x4 matrix over Q(sqrt(-d)).
struct CMat4 {
    std::array<std::array<QImag, 4>, 4> m;

    int d() const { return m[0][0].d; }

    static CMat4 identity(int d) {
        CMat4 r = zero(d);
        for (int i = 0; i < 4; ++i) r.m[i][i] = QImag::one(d);
        return r;
    }
    static CMat4 zero(int d) {
        CMat4 r;
        for (auto& row : r.m)
            for (auto& x : row) x = QImag::zero(d);
        return r;
    }

    CMat4 conj() const {
        CMat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[i][j].conj();
        return r;
    }
    CMat4 transpose() const {
        CMat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
        return r;
    }
    CMat4 dagger() const { return conj().transpose(); }
    CMat4 operator-() const {
        CMat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = -m[i][j];
        return r;
    }

    friend CMat4 operator*(const CMat4& x, const CMat4& y) {
        CMat4 r = zero(x.d());
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) {
                const QImag& xik = x.m[i][k];
                if (xik.is_zero()) continue;
                for (int j = 0; j < 4; ++j) r.m[i][j] = r.m[i][j] + xik * y.m[k][j];
            }
        return r;
    }
    friend CVec4 operator*(const CMat4& x, const CVec4& v) {
        CVec4 r;
        for (int i = 0; i < 4; ++i) {
            QImag s = QImag::zero(x.d());
            for (int k = 0; k < 4; ++k) s = s + x.m[i][k] * v.c[k];
            r.c[i] = s;
        }
        return r;
    }

    bool is_unitary() const { return *this * dagger() == identity(d()); }
    bool is_antisymmetric() const { return transpose() == -*this; }

    friend bool operator==(const CMat4& x, const CMat4& y) { return x.m == y.m; }
    friend bool operator!=(const CMat4& x, const CMat4& y) { return !(x == y); }

    /// Row-major entrywise order; the canonical element key order.
    friend bool operator<(const CMat4& x, const CMat4& y) {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                if (x.m[i][j] != y.m[i][j]) return x.m[i][j] < y.m[i][j];
            }
        return false;
    }
};

}  // namespace raycheck
