#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cmtorus::galois {

using Element = std::size_t;
/// A subgroup or coset, as a sorted list of element indices.
using ElementSet = std::vector<Element>;

/// Finite group given by its multiplication table over indices 0..n-1.
///
/// `labels` are optional integer names for display and lookup; for the
/// cyclotomic presets they are the residues of (Z/n)^x.
class FiniteGroup
{
  public:
    FiniteGroup() = default;
    /// Validates closure, associativity, identity and inverses.
    explicit FiniteGroup(std::vector<std::vector<Element>> table, std::vector<long> labels = {});

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::size_t n);
    /// (Z/n)^x with labels the residues in increasing order.
    static FiniteGroup units_mod(long n);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
    /// Dihedral group of order 2n.
    static FiniteGroup dihedral(std::size_t n);
    static FiniteGroup quaternion();
    /// Closure of the given permutations of {0..n-1} under composition.
    static FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>>& gens);

    std::size_t order() const { return table_.size(); }
    Element identity() const { return identity_; }
    Element mul(Element a, Element b) const { return table_[a][b]; }
    Element inverse(Element a) const { return inverse_[a]; }
    Element power(Element a, long k) const;
    std::size_t element_order(Element a) const;

    const std::vector<std::vector<Element>>& table() const { return table_; }
    const std::vector<long>& labels() const { return labels_; }
    long label(Element a) const { return labels_[a]; }
    /// Index of the element with the given label; throws ValidationError.
    Element by_label(long label) const;

    bool is_abelian() const;
    bool is_cyclic() const;
    bool is_central(Element a) const;
    /// A generator when the group is cyclic; throws ValidationError otherwise.
    Element cyclic_generator() const;
    /// Small generating set, chosen greedily.
    std::vector<Element> generators() const;

    ElementSet generated_subgroup(const std::vector<Element>& gens) const;
    bool is_subgroup(const ElementSet& s) const;
    /// Left cosets xH, ordered by smallest element; each coset sorted.
    std::vector<ElementSet> left_cosets(const ElementSet& h) const;

    std::string describe() const;

  private:
    std::vector<std::vector<Element>> table_;
    std::vector<long> labels_;
    std::vector<Element> inverse_;
    Element identity_ = 0;
};

/// A subgroup H as a group in its own right; embedding[i] is the element
/// of the ambient group with index i in H.
struct Subgroup
{
    FiniteGroup group;
    std::vector<Element> embedding;
};

/// Throws ValidationError when `h` is not a subgroup.
Subgroup make_subgroup(const FiniteGroup& g, const ElementSet& h);

bool contains(const ElementSet& s, Element a);

/// Image of a set under a map given as a lookup vector, sorted and deduplicated.
ElementSet image_of(const ElementSet& s, const std::vector<Element>& map);

}  // namespace cmtorus::galois
