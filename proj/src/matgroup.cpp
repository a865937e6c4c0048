#include "raycheck/matgroup.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace raycheck {

Group Group::close(const std::vector<CMat4>& generators, std::size_t bound) {
    if (generators.empty()) throw std::runtime_error("closure needs at least one generator");
    Group g;
    g.d_ = generators[0].d();
    for (const auto& m : generators) {
        if (m.d() != g.d_) throw std::domain_error("field discriminant mismatch");
        if (!m.is_unitary()) throw std::runtime_error("generator is not unitary");
    }
    g.generators_ = generators;

    g.elements_.push_back({CMat4::identity(g.d_), {}, std::nullopt});
    g.index_.emplace(g.elements_[0].matrix, 0);

    // breadth-first: elements_ grows in (word length, word lex) order because
    // the queue is processed in order and generators are tried in index order
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
        for (std::size_t gi = 0; gi < generators.size(); ++gi) {
            CMat4 next = g.elements_[head].matrix * generators[gi];
            if (g.index_.count(next)) continue;
            if (g.elements_.size() >= bound)
                throw std::runtime_error("group closure exceeded bound " + std::to_string(bound));
            std::vector<std::uint8_t> word = g.elements_[head].word;
            word.push_back(static_cast<std::uint8_t>(gi));
            g.index_.emplace(next, static_cast<int>(g.elements_.size()));
            g.elements_.push_back({std::move(next), std::move(word), std::nullopt});
        }
    }
    return g;
}

int Group::find(const CMat4& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
}

std::size_t Group::projective_order() const {
    CMat4 neg = -CMat4::identity(d_);
    return contains(neg) ? size() / 2 : size();
}

void Group::attach_homomorphism(const std::vector<Perm7>& generator_images) {
    if (generator_images.size() != generators_.size())
        throw std::runtime_error("one permutation image per generator required");

    for (auto& e : elements_) {
        Perm7 p = Perm7::identity();
        for (std::uint8_t gi : e.word) p = p * generator_images[gi];
        e.perm = p;
    }
    // Cayley-edge consistency: covers every relation among the generators by
    // induction on word rewriting.
    for (const auto& e : elements_) {
        for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
            int j = find(e.matrix * generators_[gi]);
            if (j < 0) throw std::runtime_error("group not closed");
            if (*elements_[static_cast<std::size_t>(j)].perm != *e.perm * generator_images[gi])
                throw std::runtime_error("homomorphism violation on Cayley edge");
        }
    }
    // matrices differing only by sign must agree
    for (const auto& e : elements_) {
        int j = find(-e.matrix);
        if (j >= 0 && *elements_[static_cast<std::size_t>(j)].perm != *e.perm)
            throw std::runtime_error("homomorphism violation on sign pair");
    }
    has_perms_ = true;
}

std::size_t Group::image_order() const {
    if (!has_perms_) throw std::runtime_error("homomorphism not attached");
    std::set<Perm7> imgs;
    for (const auto& e : elements_) imgs.insert(*e.perm);
    return imgs.size();
}

bool Group::contains_subgroup(const Group& sub) const {
    for (const auto& e : sub.elements())
        if (!contains(e.matrix)) return false;
    return true;
}

std::vector<Coset> Group::left_cosets(const Group& sub) const {
    if (!contains_subgroup(sub))
        throw std::runtime_error("subgroup is not contained in group");

    std::vector<Coset> out;
    std::vector<char> covered(size(), 0);
    // index_ iterates in ascending matrix order, which fixes representatives
    for (const auto& [mat, idx] : index_) {
        if (covered[static_cast<std::size_t>(idx)]) continue;
        Coset c;
        c.representative = idx;
        for (const auto& s : sub.elements()) {
            int j = find(mat * s.matrix);
            if (j < 0) throw std::runtime_error("group not closed under subgroup multiplication");
            covered[static_cast<std::size_t>(j)] = 1;
            c.members.push_back(j);
        }
        std::sort(c.members.begin(), c.members.end(), [this](int x, int y) {
            return elements_[static_cast<std::size_t>(x)].matrix < elements_[static_cast<std::size_t>(y)].matrix;
        });
        out.push_back(std::move(c));
    }
    if (out.size() * sub.size() != size())
        throw std::runtime_error("cosets do not partition the group");
    return out;
}

}  // namespace raycheck
