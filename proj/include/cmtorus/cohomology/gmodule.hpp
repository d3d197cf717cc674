#pragma once

#include <vector>

#include "cmtorus/galois/finite_group.hpp"
#include "cmtorus/lattice/presented.hpp"

namespace cmtorus::cohomology {

using galois::Element;
using galois::ElementSet;
using galois::FiniteGroup;
using lattice::AbGroupStructure;
using lattice::Integer;
using lattice::IntMatrix;
using lattice::IntVector;
using lattice::Presentation;

/// A finitely generated Z[G]-module Z^n / R with G acting through integer
/// matrices on generators. Lattices have R = 0; finite modules have
/// R = diag(d_1, ..., d_n).
///
/// The action is a left action: action(g * h) = action(g) * action(h)
/// modulo R.
class GModule
{
  public:
    /// Validates the action against the group; throws ValidationError.
    GModule(FiniteGroup group, Presentation underlying, std::vector<IntMatrix> action);

    /// Free module Z^n with the given action matrices (one per element).
    static GModule lattice(const FiniteGroup& g, std::vector<IntMatrix> action);
    /// Action extended from the images of a generating set.
    static GModule from_generator_images(const FiniteGroup& g, const Presentation& underlying,
                                         const std::vector<Element>& gens, const std::vector<IntMatrix>& images);
    /// Z/d_1 + ... + Z/d_n with the given action on the standard generators.
    static GModule finite(const FiniteGroup& g, const std::vector<Integer>& orders, std::vector<IntMatrix> action);
    static GModule trivial(const FiniteGroup& g, const Presentation& underlying);
    static GModule trivial_z(const FiniteGroup& g) { return trivial(g, Presentation::free(1)); }
    /// Z with g acting by sign(g) for a homomorphism given by its kernel.
    static GModule sign(const FiniteGroup& g, const ElementSet& kernel);
    /// Z[G] with left multiplication.
    static GModule regular(const FiniteGroup& g);
    /// Z[G/H] on left cosets.
    static GModule permutation(const FiniteGroup& g, const ElementSet& h);

    const FiniteGroup& group() const { return group_; }
    const Presentation& underlying() const { return underlying_; }
    std::size_t generators() const { return underlying_.generators; }
    const IntMatrix& action(Element g) const { return action_[g]; }
    const std::vector<IntMatrix>& actions() const { return action_; }

    bool is_lattice() const { return underlying_.relations.cols() == 0; }
    AbGroupStructure structure() const { return underlying_.structure(); }

    /// Sum of all action matrices.
    IntMatrix norm() const;

    /// Hom(M, Z) with (g phi)(x) = phi(g^-1 x). Lattices only.
    GModule dual() const;
    /// The same module viewed over a subgroup.
    GModule restrict_to(const galois::Subgroup& h) const;
    GModule direct_sum(const GModule& other) const;

  private:
    FiniteGroup group_;
    Presentation underlying_;
    std::vector<IntMatrix> action_;
};

/// True when phi: A -> B is well defined and phi A_g = B_g phi modulo rel(B).
bool is_equivariant(const IntMatrix& phi, const GModule& a, const GModule& b);

}  // namespace cmtorus::cohomology
