#include "raycheck/realify.hpp"

#include <set>
#include <stdexcept>

#include "raycheck/constants.hpp"

namespace raycheck {

RealVec8 RealVec8::operator-() const {
    RealVec8 r;
    r.d = d;
    for (int i = 0; i < 4; ++i) {
        r.re[static_cast<std::size_t>(i)] = -re[static_cast<std::size_t>(i)];
        r.im[static_cast<std::size_t>(i)] = -im[static_cast<std::size_t>(i)];
    }
    return r;
}

Rational real_dot(const RealVec8& u, const RealVec8& v) {
    if (u.d != v.d) throw std::domain_error("field discriminant mismatch");
    Rational s;
    for (int i = 0; i < 4; ++i) s += u.re[static_cast<std::size_t>(i)] * v.re[static_cast<std::size_t>(i)];
    Rational t;
    for (int i = 0; i < 4; ++i) t += u.im[static_cast<std::size_t>(i)] * v.im[static_cast<std::size_t>(i)];
    return s + Rational(u.d) * t;
}

std::vector<RealVec8> realify(const Configuration& cfg) {
    std::vector<RealVec8> out;
    for (const auto& v : cfg.all_vectors()) {
        RealVec8 r;
        r.d = cfg.d();
        for (int i = 0; i < 4; ++i) {
            r.re[static_cast<std::size_t>(i)] = v.c[static_cast<std::size_t>(i)].a;
            r.im[static_cast<std::size_t>(i)] = v.c[static_cast<std::size_t>(i)].b;
        }
        out.push_back(r);
    }
    return out;
}

namespace {

/// Exact rank of the 8-column system by Gaussian elimination over Q.
int rational_rank(const std::vector<RealVec8>& vs) {
    std::vector<std::array<Rational, 8>> rows;
    for (const auto& v : vs) {
        std::array<Rational, 8> r;
        for (int i = 0; i < 4; ++i) {
            r[static_cast<std::size_t>(i)] = v.re[static_cast<std::size_t>(i)];
            r[static_cast<std::size_t>(i + 4)] = v.im[static_cast<std::size_t>(i)];
        }
        rows.push_back(r);
    }
    int rank = 0;
    for (int col = 0; col < 8 && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(rows.size()); ++i)
            if (!rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)].is_zero()) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
        const auto& pr = rows[static_cast<std::size_t>(rank)];
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == rank) continue;
            auto& ri = rows[static_cast<std::size_t>(i)];
            if (ri[static_cast<std::size_t>(col)].is_zero()) continue;
            Rational f = ri[static_cast<std::size_t>(col)] / pr[static_cast<std::size_t>(col)];
            for (int c = 0; c < 8; ++c)
                ri[static_cast<std::size_t>(c)] -= f * pr[static_cast<std::size_t>(c)];
        }
        ++rank;
        if (rank == 8) break;
    }
    return rank;
}

}  // namespace

RootSystemReport e8_verify(const std::vector<RealVec8>& vectors) {
    RootSystemReport rep;
    rep.vector_count = vectors.size();
    if (vectors.empty()) return rep;

    std::set<RealVec8> vset(vectors.begin(), vectors.end());
    rep.negation_closed = true;
    for (const auto& v : vectors)
        if (!vset.count(-v)) {
            rep.negation_closed = false;
            break;
        }
    rep.unit_norms = true;
    for (const auto& v : vectors)
        if (real_dot(v, v) != Rational(1)) {
            rep.unit_norms = false;
            break;
        }

    // scaled products 2<u,v> for unit vectors correspond to root products at
    // norm^2 = 2
    const int n = static_cast<int>(vectors.size());
    std::vector<std::vector<int>> prod(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    rep.spectrum_ok = true;
    for (int i = 0; i < n && rep.spectrum_ok; ++i) {
        for (int j = 0; j < n; ++j) {
            Rational p = Rational(2) * real_dot(vectors[static_cast<std::size_t>(i)], vectors[static_cast<std::size_t>(j)]);
            if (p.den() != 1 || p.num() < -2 || p.num() > 2) {
                rep.spectrum_ok = false;
                break;
            }
            prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(p.num());
        }
    }
    if (!rep.spectrum_ok) return rep;

    rep.counts_ok = true;
    for (int i = 0; i < n && rep.counts_ok; ++i) {
        int c[5] = {0, 0, 0, 0, 0};   // products -2..2
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            c[prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] + 2] += 1;
        }
        if (c[0] != 1 || c[1] != 56 || c[2] != 126 || c[3] != 56 || c[4] != 0)
            rep.counts_ok = false;
    }

    rep.reflection_closed = true;
    for (int i = 0; i < n && rep.reflection_closed; ++i) {
        const RealVec8& alpha = vectors[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            const RealVec8& beta = vectors[static_cast<std::size_t>(j)];
            Rational f = Rational(prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            RealVec8 w;
            w.d = beta.d;
            for (int k = 0; k < 4; ++k) {
                w.re[static_cast<std::size_t>(k)] = beta.re[static_cast<std::size_t>(k)] - f * alpha.re[static_cast<std::size_t>(k)];
                w.im[static_cast<std::size_t>(k)] = beta.im[static_cast<std::size_t>(k)] - f * alpha.im[static_cast<std::size_t>(k)];
            }
            if (!vset.count(w)) {
                rep.reflection_closed = false;
                break;
            }
        }
    }

    rep.rank = rational_rank(vectors);
    return rep;
}

RealVec8 witting_to_sv(const RealVec8& v) {
    if (v.d != 3) throw std::domain_error("transfer expects sqrt(-3) input");
    const auto M = constants::transfer_numerator();
    RealVec8 out;
    out.d = 7;
    out.re = v.re;
    for (int i = 0; i < 4; ++i) {
        Rational s;
        for (int k = 0; k < 4; ++k)
            s += Rational(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) * v.im[static_cast<std::size_t>(k)];
        out.im[static_cast<std::size_t>(i)] = s / Rational(7);
    }
    return out;
}

std::vector<RealVec8> witting_to_sv(const std::vector<RealVec8>& vs) {
    std::vector<RealVec8> out;
    out.reserve(vs.size());
    for (const auto& v : vs) out.push_back(witting_to_sv(v));
    return out;
}

}  // namespace raycheck
