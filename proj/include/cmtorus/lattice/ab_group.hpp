#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmtorus/lattice/int_matrix.hpp"

namespace cmtorus::lattice {

/// A finitely generated abelian group Z^r + Z/d1 + ... + Z/dk in canonical
/// form: every d_i >= 2 and d_1 | d_2 | ... | d_k.
class AbGroupStructure
{
  public:
    AbGroupStructure() = default;

    /// Canonicalizes arbitrary cyclic orders. Orders equal to 1 are
    /// dropped, orders equal to 0 count as free summands.
    static AbGroupStructure from_cyclic_orders(const std::vector<Integer>& orders,
                                               std::size_t extra_free_rank = 0);
    static AbGroupStructure free(std::size_t rank) { return from_cyclic_orders({}, rank); }
    static AbGroupStructure cyclic(const Integer& n) { return from_cyclic_orders({n}); }
    static AbGroupStructure trivial() { return {}; }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Integer>& torsion() const { return torsion_; }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    /// Group order, or nullopt when the group is infinite.
    std::optional<Integer> order() const;
    /// Largest element order of the torsion part (1 for torsion-free groups).
    Integer exponent() const;

    AbGroupStructure direct_sum(const AbGroupStructure& other) const;

    /// "0", "Z", "Z/2", "Z^2 + Z/2 + Z/6".
    std::string to_string() const;

    friend bool operator==(const AbGroupStructure&, const AbGroupStructure&) = default;

  private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

/// Recovers a finite abelian group from the orders of all its elements.
/// Throws ValidationError when the multiset is not that of an abelian group.
AbGroupStructure structure_from_element_orders(const std::vector<Integer>& orders);

}  // namespace cmtorus::lattice
