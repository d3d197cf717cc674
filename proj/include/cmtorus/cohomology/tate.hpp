#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cmtorus/cohomology/gmodule.hpp"
#include "cmtorus/cohomology/resolution.hpp"
#include "cmtorus/galois/cm_datum.hpp"

namespace cmtorus::cohomology {

using lattice::Rational;
using lattice::Subquotient;

/// Largest group order accepted by the cohomology routines: 64, or the
/// value of CMTORUS_MAX_GROUP_ORDER when set to a positive integer.
std::size_t max_group_order();

/// Periodic for cyclic groups, computed otherwise.
ResolutionKind default_resolution_kind(const FiniteGroup& g);

/// Shared resolution of the given kind and at least the given length.
/// Results are cached per group table; safe to call concurrently.
std::shared_ptr<const Resolution> resolution_for(const FiniteGroup& g, ResolutionKind kind, std::size_t length);

/// Cochains Hom_G(F_n, M) = M^{rank n} and their differentials.
IntMatrix coboundary(const Resolution& res, const GModule& m, std::size_t n);
/// F_n (x)_G M -> F_{n-1} (x)_G M for n >= 1.
IntMatrix chain_boundary(const Resolution& res, const GModule& m, std::size_t n);
Presentation power(const Presentation& p, std::size_t k);

/// Tate cohomology H^r(G, M) for r in [-2, 3] as a subquotient of the
/// ambient cochain (or chain) group, for element-level queries.
Subquotient tate_subquotient(const GModule& m, int r, const Resolution& res);

/// Tate cohomology for r in [-2, 3]. Throws BoundExceeded above the group
/// order cap and ValidationError outside the degree range.
AbGroupStructure tate_cohomology(const GModule& m, int r);
AbGroupStructure tate_cohomology(const GModule& m, int r, ResolutionKind kind);
/// Same, checking that `m` lives over `g`.
AbGroupStructure tate_cohomology(const FiniteGroup& g, const GModule& m, int r);

/// Ordinary H^r(G, M) for r in [0, 3] (H^0 = M^G).
AbGroupStructure group_cohomology(const GModule& m, int r);

/// Tate H^r and H^{r+2} agree. Throws ValidationError for non-cyclic G.
bool cyclic_periodicity_check(const GModule& m, int r);

/// Two-term complex A -> B with A in degree 0 and B in degree 1.
struct CrossedModule
{
    GModule a;
    GModule b;
    IntMatrix rho;

    /// Throws ValidationError when rho is not equivariant.
    CrossedModule(GModule a_, GModule b_, IntMatrix rho_);
};

/// Total complex Tot^n = C^n(A) + C^{n-1}(B), D(a, b) = (da, rho a - db).
IntMatrix total_differential(const Resolution& res, const CrossedModule& cm, std::size_t n);
Presentation total_presentation(const Resolution& res, const CrossedModule& cm, std::size_t n);

Subquotient hyper_subquotient(const CrossedModule& cm, int r, const Resolution& res);

/// Hypercohomology H^r(G, A -> B) for r in {0, 1, 2}. With A = 0 this is
/// H^{r-1}(G, B); for injective rho with cokernel C it is H^{r-1}(G, C).
AbGroupStructure hyper_h(const CrossedModule& cm, int r);

struct CrossedModuleReport
{
    AbGroupStructure h0;
    AbGroupStructure h1;
    AbGroupStructure h2;
    AbGroupStructure c_invariants;
    AbGroupStructure h1_c;
    bool h0_zero = false;
    /// The maps (a, b) -> pi(b) induce isomorphisms, checked on the
    /// subquotients (not only on the abstract structures).
    bool h1_iso = false;
    bool h2_iso = false;

    bool holds() const { return h0_zero && h1_iso && h2_iso; }
};

/// For a short exact sequence 0 -> A -i-> B -pi-> C -> 0 of G-modules,
/// compares H^0, H^1, H^2 of A -> B with 0, C^G, H^1(G, C). Throws
/// ValidationError when the sequence is not exact or not equivariant.
CrossedModuleReport crossed_module_isos_check(const GModule& a, const GModule& b, const GModule& c, const IntMatrix& i,
                                              const IntMatrix& pi);

/// Marker for the real place in local computations.
inline constexpr long kInfinity = 0;

/// Decomposition group at l (or <iota> at infinity) as a subgroup.
galois::Subgroup decomposition_subgroup(const galois::CMDatum& datum, long ell);

struct LocalCohomology
{
    AbGroupStructure structure;
    /// Set when e_l > 1: the model is exact only for unramified D_l.
    bool ramified = false;
    std::string note;
};

/// Tate-Nakayama model H^r(Q_l, T) = H^{r-2}(D_l, X_*(T)) for r in {1, 2},
/// X_* the dual of the character lattice. l = kInfinity uses D = <iota>.
LocalCohomology local_torus_cohomology(const galois::CMDatum& datum, long ell, const GModule& charlattice, int r);

struct LocalClass
{
    /// Denominator used to clear the cocharacter.
    Integer denominator;
    /// The integral cocharacter denominator * x, in dual coordinates.
    IntVector cleared;
    /// Coordinates in the cyclic decomposition of H^0(D_l, X_*).
    IntVector coordinates;
    Integer order;
    AbGroupStructure group;
};

/// Class of a rational cocharacter x (values on the basis of the character
/// lattice) in H^0(D_l, X_*): x is multiplied by the lcm of its
/// denominators, which must divide |D_l|, and the result must be D_l-fixed.
LocalClass pushforward_local_class(const std::vector<Rational>& cochar, const galois::CMDatum& datum, long ell,
                                   const GModule& charlattice);

}  // namespace cmtorus::cohomology
