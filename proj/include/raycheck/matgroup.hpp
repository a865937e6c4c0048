#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "raycheck/perm7.hpp"
#include "raycheck/qimag.hpp"

namespace raycheck {

struct GroupElement {
    CMat4 matrix;
    std::vector<std::uint8_t> word;   // generator indices, a witness only
    std::optional<Perm7> perm;        // image under the 7-point homomorphism
};

struct Coset {
    int representative = 0;           // element index of the least member
    std::vector<int> members;         // element indices, ascending by matrix order
};

/// A finite group of exact unitary 4x4 matrices, closed from generators by
/// breadth-first multiplication.  Elements are deduplicated by their exact
/// entry list, ordered (word length, word lex) by construction.
class Group {
public:
    /// Breadth-first closure.  Throws std::runtime_error if the element count
    /// exceeds `bound` (wrong generator transcription) or a generator is not
    /// unitary or lives in a different field.
    static Group close(const std::vector<CMat4>& generators, std::size_t bound = 20000);

    std::size_t size() const { return elements_.size(); }
    int d() const { return d_; }
    const GroupElement& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    const std::vector<GroupElement>& elements() const { return elements_; }
    const std::vector<CMat4>& generators() const { return generators_; }

    bool contains(const CMat4& m) const { return index_.count(m) != 0; }
    /// Element index of a matrix, or -1.
    int find(const CMat4& m) const;

    /// |G|/2 when -I is in the group, |G| otherwise.
    std::size_t projective_order() const;

    /// Label every element with a 7-point permutation by composing generator
    /// images along its word, then enforce consistency: every Cayley edge must
    /// satisfy perm(E*g) = perm(E)*img(g), and matrices differing only by sign
    /// must carry the same permutation.  Throws std::runtime_error on
    /// violation (a transcription error in generators or images).
    void attach_homomorphism(const std::vector<Perm7>& generator_images);

    bool has_homomorphism() const { return has_perms_; }
    /// Distinct permutation images (requires attach_homomorphism).
    std::size_t image_order() const;

    /// True if every element of `sub` is a member.
    bool contains_subgroup(const Group& sub) const;

    /// Left cosets C*sub, deterministic: representatives are chosen in
    /// ascending matrix order among uncovered elements.  Throws if `sub` is
    /// not contained in this group.
    std::vector<Coset> left_cosets(const Group& sub) const;

private:
    int d_ = 7;
    bool has_perms_ = false;
    std::vector<CMat4> generators_;
    std::vector<GroupElement> elements_;
    std::map<CMat4, int> index_;
};

}  // namespace raycheck
