#include "raycheck/rayconfig.hpp"

#include <algorithm>
#include <stdexcept>

#include "raycheck/constants.hpp"

namespace raycheck {

std::vector<QImag> field_units(int d) {
    std::vector<QImag> u;
    u.push_back(QImag::one(d));
    if (d == 3) {
        QImag w = constants::omega();
        u.push_back(w);
        u.push_back(w * w);
    }
    std::size_t n = u.size();
    for (std::size_t i = 0; i < n; ++i) u.push_back(-u[i]);
    return u;
}

CVec4 canonical_ray(const CVec4& v) {
    std::vector<QImag> units = field_units(v.d());
    CVec4 best = scale(units[0], v);
    for (std::size_t i = 1; i < units.size(); ++i) {
        CVec4 w = scale(units[i], v);
        if (w < best) best = w;
    }
    return best;
}

int Configuration::find_ray(const CVec4& v) const {
    auto it = ray_index_.find(canonical_ray(v));
    return it == ray_index_.end() ? -1 : it->second;
}

int Configuration::display_id(int internal) const {
    if (aligned()) return catalog_[static_cast<std::size_t>(internal)];
    return internal + 1;
}

int Configuration::internal_id(int display) const {
    if (aligned()) return by_catalog_[static_cast<std::size_t>(display)];
    return display - 1;
}

void Configuration::align_with_catalog(const std::vector<CVec4>& catalog_vectors) {
    std::vector<int> cat(rays_.size(), 0);
    std::vector<int> byc(catalog_vectors.size() + 1, -1);
    for (std::size_t n = 0; n < catalog_vectors.size(); ++n) {
        const CVec4& v = catalog_vectors[n];
        if (norm_squared(v) != Rational(1))
            throw std::runtime_error("catalog row " + std::to_string(n + 1) + " is not unit norm");
        int id = find_ray(v);
        if (id < 0)
            throw std::runtime_error("catalog row " + std::to_string(n + 1) + " matches no ray");
        if (cat[static_cast<std::size_t>(id)] != 0)
            throw std::runtime_error("catalog row " + std::to_string(n + 1) + " matches an already matched ray");
        cat[static_cast<std::size_t>(id)] = static_cast<int>(n) + 1;
        byc[n + 1] = id;
    }
    for (std::size_t i = 0; i < rays_.size(); ++i)
        if (cat[i] == 0) throw std::runtime_error("ray left unmatched by catalog");
    catalog_ = std::move(cat);
    by_catalog_ = std::move(byc);
}

std::vector<CVec4> Configuration::all_vectors() const {
    std::vector<CVec4> out;
    for (const auto& r : rays_)
        for (const auto& u : field_units(d_)) out.push_back(scale(u, r));
    return out;
}

Configuration orbit_configuration(const Group& g, const CVec4& seed) {
    if (norm_squared(seed) != Rational(1))
        throw std::runtime_error("orbit seed is not unit norm");
    if (seed.d() != g.d()) throw std::domain_error("field discriminant mismatch");

    std::set<CVec4> vectors;
    std::set<CVec4> rays;
    for (const auto& e : g.elements()) {
        CVec4 v = e.matrix * seed;
        vectors.insert(v);
        rays.insert(canonical_ray(v));
    }
    Configuration cfg;
    cfg.d_ = seed.d();
    cfg.vector_count_ = vectors.size();
    cfg.rays_.assign(rays.begin(), rays.end());
    for (std::size_t i = 0; i < cfg.rays_.size(); ++i)
        cfg.ray_index_.emplace(cfg.rays_[i], static_cast<int>(i));
    return cfg;
}

Configuration witting_configuration() {
    const QImag w0 = QImag::one(3);
    const QImag w1 = constants::omega();
    const QImag w2 = w1 * w1;
    const QImag s = constants::i_sqrt3();
    const QImag O = QImag::zero(3);
    const QImag E = QImag::one(3);

    std::vector<CVec4> raw;
    for (int k = 0; k < 4; ++k) {
        CVec4 e{{O, O, O, O}};
        e.c[static_cast<std::size_t>(k)] = E;
        raw.push_back(e);
    }
    const QImag ws[3] = {w0, w1, w2};
    for (const auto& a : ws) {
        for (const auto& b : ws) {
            raw.push_back(scale(s, {{O, E, -a, b}}));
            raw.push_back(scale(s, {{E, O, -a, -b}}));
            raw.push_back(scale(s, {{E, -a, O, b}}));
            raw.push_back(scale(s, {{E, a, b, O}}));
        }
    }

    std::set<CVec4> rays;
    std::set<CVec4> vectors;
    for (const auto& v : raw) {
        rays.insert(canonical_ray(v));
        for (const auto& u : field_units(3)) vectors.insert(scale(u, v));
    }
    Configuration cfg;
    cfg.d_ = 3;
    cfg.vector_count_ = vectors.size();
    cfg.rays_.assign(rays.begin(), rays.end());
    for (std::size_t i = 0; i < cfg.rays_.size(); ++i)
        cfg.ray_index_.emplace(cfg.rays_[i], static_cast<int>(i));
    return cfg;
}

std::vector<std::vector<int>> ray_orbits(const Group& sub, const Configuration& cfg) {
    const int n = cfg.ray_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };

    for (const auto& e : sub.elements()) {
        for (int i = 0; i < n; ++i) {
            int j = cfg.find_ray(e.matrix * cfg.ray(i));
            if (j < 0) throw std::runtime_error("subgroup element maps a ray outside the configuration");
            int a = find(i), b = find(j);
            if (a != b) parent[static_cast<std::size_t>(a)] = b;
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    for (auto& [root, ids] : groups) out.push_back(std::move(ids));
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x[0] < y[0]; });
    return out;
}

StateTypeTable::StateTypeTable() {
    const QImag i = constants::iota();
    const QImag a = constants::root_plus();
    const QImag b = constants::root_minus();
    const QImag O = QImag::zero(7);
    const QImag E = QImag::one(7);

    std::vector<std::pair<CVec4, int>> templates;
    templates.push_back({CVec4{{E, O, O, O}}, 1});
    const QImag prods[3] = {a * a, a * b, b * b};
    for (const auto& ab : prods)
        templates.push_back({scale(i, {{ab, E, E, E}}), 2});
    for (const auto& x : {a, b})
        for (const auto& y : {a, b})
            for (const auto& z : {a, b})
                templates.push_back({scale(i, {{E, -x, -y, -z}}), 3});
    for (const auto& ab : prods)
        for (const auto& z : {a, b})
            templates.push_back({scale(i, {{O, E, -ab, z}}), 4});

    // expand each template over all 384 signed coordinate permutations; the
    // printed type-4 sign pattern is reachable only in this wider action
    int perm[4] = {0, 1, 2, 3};
    for (const auto& [tv, t] : templates) {
        std::sort(perm, perm + 4);
        do {
            for (int mask = 0; mask < 16; ++mask) {
                CVec4 w;
                for (int k = 0; k < 4; ++k) {
                    QImag x = tv.c[static_cast<std::size_t>(perm[k])];
                    w.c[static_cast<std::size_t>(k)] = (mask >> k) & 1 ? -x : x;
                }
                CVec4 cw = canonical_ray(w);
                auto it = table_.find(cw);
                if (it != table_.end() && it->second != t)
                    throw std::runtime_error("type template families overlap");
                table_.emplace(cw, t);
            }
        } while (std::next_permutation(perm, perm + 4));
    }
}

int StateTypeTable::classify(const CVec4& ray) const {
    auto it = table_.find(canonical_ray(ray));
    if (it == table_.end())
        throw std::runtime_error("ray matches no state-type template");
    return it->second;
}

std::vector<int> StateTypeTable::classify_all(const Configuration& cfg) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cfg.ray_count()));
    for (const auto& r : cfg.rays()) out.push_back(classify(r));
    return out;
}

std::set<Rational> gram_spectrum(const Configuration& cfg) {
    std::set<Rational> out;
    const int n = cfg.ray_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out.insert(inner_product(cfg.ray(i), cfg.ray(j)).norm());
    return out;
}

}  // namespace raycheck
