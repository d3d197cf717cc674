#pragma once

#include <string>
#include <vector>

#include "cmtorus/galois/finite_group.hpp"
#include "cmtorus/lattice/int_matrix.hpp"

namespace cmtorus::cohomology {

using galois::Element;
using galois::FiniteGroup;
using lattice::IntMatrix;
using lattice::IntVector;

enum class ResolutionKind
{
    /// Normalized bar resolution. Ranks grow like (|G|-1)^n.
    bar,
    /// 2-periodic resolution of a cyclic group: d = s - 1, N, s - 1, N, ...
    periodic,
    /// Z[G]-generators of each Z-kernel chosen greedily.
    computed,
};

/// Free resolution ... -> F_2 -> F_1 -> F_0 -> Z -> 0 of the trivial module
/// over Z[G], with F_n = Z[G]^{rank(n)}.
///
/// Element coordinates: a vector of F_n has entry i*|G| + g for the
/// coefficient of g e_i. The boundary d_n (n >= 1) is stored through the
/// images d_n(e_j) in F_{n-1}.
class Resolution
{
  public:
    Resolution(const FiniteGroup& g, ResolutionKind kind, std::size_t length);

    const FiniteGroup& group() const { return group_; }
    ResolutionKind kind() const { return kind_; }
    std::size_t length() const { return images_.size(); }
    std::size_t rank(std::size_t n) const { return ranks_.at(n); }

    /// d_n(e_j) for n in [1, length].
    const std::vector<IntVector>& boundary_images(std::size_t n) const { return images_.at(n - 1); }

    /// d_n as a Z-linear map Z^{|G| rank(n)} -> Z^{|G| rank(n-1)}.
    IntMatrix z_matrix(std::size_t n) const;
    /// Augmentation F_0 -> Z as a Z-matrix.
    IntMatrix augmentation() const;

    /// Checks d_{n-1} d_n = 0, augmentation d_1 = 0 and exactness over Z
    /// at every interior stage.
    bool verify() const;

  private:
    FiniteGroup group_;
    ResolutionKind kind_;
    std::vector<std::size_t> ranks_;
    std::vector<std::vector<IntVector>> images_;

    void build_bar(std::size_t length);
    void build_periodic(std::size_t length);
    void build_computed(std::size_t length);
    IntVector translate(const IntVector& v, Element h) const;
};

std::string to_string(ResolutionKind kind);

}  // namespace cmtorus::cohomology
