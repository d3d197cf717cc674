#pragma once

#include "cmtorus/lattice/ab_group.hpp"
#include "cmtorus/lattice/int_matrix.hpp"
#include "cmtorus/lattice/normal_form.hpp"

namespace cmtorus::lattice {

/// A finitely presented abelian group Z^n / span(relations).
struct Presentation
{
    std::size_t generators = 0;
    IntMatrix relations;  // generators x (number of relations)

    static Presentation free(std::size_t n) { return {n, IntMatrix(n, 0)}; }
    /// Z^k / diag(d) for the torsion chain of `g` followed by free summands.
    static Presentation of(const AbGroupStructure& g);
    static Presentation cyclic(const Integer& n);

    AbGroupStructure structure() const { return cokernel_structure(relations); }
    bool is_zero_element(const IntVector& v) const;
};

Presentation direct_sum(const std::vector<Presentation>& parts);

/// A homomorphism given by an integer matrix on generators. Validity means
/// that relations of the source map into the relation lattice of the target.
bool is_well_defined(const IntMatrix& map, const Presentation& source, const Presentation& target);

/// Generators (columns, in Z^source.generators) of the preimage of the
/// relation lattice, i.e. a lattice whose image in the source is ker(map).
IntMatrix kernel_lattice(const IntMatrix& map, const Presentation& source, const Presentation& target);

/// Generators of im(map) + relations(target), a lattice in Z^target.generators.
IntMatrix image_lattice(const IntMatrix& map, const Presentation& target);

AbGroupStructure kernel_structure(const IntMatrix& map, const Presentation& source, const Presentation& target);
AbGroupStructure image_structure(const IntMatrix& map, const Presentation& target);
AbGroupStructure cokernel_structure(const IntMatrix& map, const Presentation& target);

/// Homology at the middle of  A --f--> B --g--> C  of presented groups:
/// { b : g b in rel(C) } / (im f + rel(B)). Composability is not checked
/// beyond shapes; use is_complex_at to validate.
AbGroupStructure homology(const IntMatrix& f, const IntMatrix& g, const Presentation& middle,
                          const Presentation& target);

/// Subquotient version of `homology`, for element-level queries.
Subquotient homology_subquotient(const IntMatrix& f, const IntMatrix& g, const Presentation& middle,
                                 const Presentation& target);

/// g o f maps into rel(C).
bool is_complex_at(const IntMatrix& f, const IntMatrix& g, const Presentation& target);

/// Exactness of A --f--> B --g--> C at B for presented groups.
bool is_exact_at(const IntMatrix& f, const IntMatrix& g, const Presentation& middle, const Presentation& target);

/// Matrix, in the cyclic coordinates of both subquotients, of the map
/// induced by `phi` (ambient of `source` -> ambient of `target`). Throws
/// ValidationError when phi does not carry big(source) into big(target).
IntMatrix induced_map(const Subquotient& source, const Subquotient& target, const IntMatrix& phi);

/// Injective and surjective as a map of presented groups.
bool is_isomorphism(const IntMatrix& map, const Presentation& source, const Presentation& target);

}  // namespace cmtorus::lattice
