#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace raycheck {

/// Permutation of {1..7}, stored 0-based: img[i] is the image of point i.
///
/// Products follow matrix-product order: (p * q)(x) = p(q(x)), i.e. the right
/// factor acts first.  This is the convention under which the printed
/// generator images extend to a consistent homomorphism (the opposite,
/// word-left-to-right convention fails the closure consistency check).
struct Perm7 {
    std::array<std::uint8_t, 7> img{0, 1, 2, 3, 4, 5, 6};

    static Perm7 identity() { return {}; }

    /// From disjoint cycles given 1-based, e.g. {{1,2,4},{3,6,5}}.
    static Perm7 from_cycles(std::initializer_list<std::initializer_list<int>> cycles) {
        Perm7 p;
        for (const auto& cyc : cycles) {
            const int* v = cyc.begin();
            auto n = cyc.size();
            for (std::size_t k = 0; k < n; ++k) {
                int from = v[k] - 1;
                int to = v[(k + 1) % n] - 1;
                p.img[static_cast<std::size_t>(from)] = static_cast<std::uint8_t>(to);
            }
        }
        return p;
    }

    friend Perm7 operator*(const Perm7& p, const Perm7& q) {
        Perm7 r;
        for (int i = 0; i < 7; ++i) r.img[static_cast<std::size_t>(i)] = p.img[q.img[static_cast<std::size_t>(i)]];
        return r;
    }

    friend bool operator==(const Perm7& p, const Perm7& q) { return p.img == q.img; }
    friend bool operator!=(const Perm7& p, const Perm7& q) { return !(p == q); }
    friend bool operator<(const Perm7& p, const Perm7& q) { return p.img < q.img; }

    bool is_even() const {
        std::array<bool, 7> seen{};
        int odd_cycles = 0;
        for (int i = 0; i < 7; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            int len = 0, j = i;
            while (!seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = true;
                j = img[static_cast<std::size_t>(j)];
                ++len;
            }
            odd_cycles += (len - 1) & 1;
        }
        return (odd_cycles & 1) == 0;
    }

    /// Cycle notation, 1-based: "(1,2,4)(3,6,5)"; identity prints "()".
    std::string cycle_string() const {
        std::array<bool, 7> seen{};
        std::string out;
        for (int i = 0; i < 7; ++i) {
            if (seen[static_cast<std::size_t>(i)] || img[static_cast<std::size_t>(i)] == i) continue;
            out += "(";
            int j = i;
            bool first = true;
            while (!seen[static_cast<std::size_t>(j)]) {
                seen[static_cast<std::size_t>(j)] = true;
                if (!first) out += ",";
                out += std::to_string(j + 1);
                first = false;
                j = img[static_cast<std::size_t>(j)];
            }
            out += ")";
        }
        return out.empty() ? "()" : out;
    }
};

}  // namespace raycheck
