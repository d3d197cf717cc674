#pragma once

#include <string>
#include <vector>

#include "cmtorus/cohomology/gmodule.hpp"
#include "cmtorus/cohomology/tate.hpp"
#include "cmtorus/galois/cm_datum.hpp"

namespace cmtorus::serre_weil {

using cohomology::GModule;
using galois::CMDatum;
using galois::Element;
using galois::ElementSet;
using galois::FiniteGroup;
using lattice::AbGroupStructure;
using lattice::Integer;
using lattice::IntMatrix;
using lattice::IntVector;
using lattice::Rational;

/// A saturated G-stable sublattice of a permutation lattice, with the
/// action both in ambient and in basis coordinates.
struct EmbeddedLattice
{
    /// Columns are a Z-basis, in ambient coordinates.
    IntMatrix basis;
    std::vector<IntMatrix> ambient_action;
    /// Action on basis coordinates.
    GModule module;

    std::size_t rank() const { return basis.cols(); }
    std::size_t ambient_dim() const { return basis.rows(); }
    /// Basis coordinates of an ambient vector; throws ValidationError when
    /// the vector is outside the lattice.
    IntVector coordinates(const IntVector& ambient) const;
    IntVector ambient(const IntVector& coords) const { return basis * coords; }
};

/// Builds the action on a basis from the ambient action. Throws
/// ValidationError when the span of `basis` is not stable.
EmbeddedLattice make_embedded(const FiniteGroup& g, IntMatrix basis, std::vector<IntMatrix> ambient_action);

/// Exactness of 0 -> A -f-> B -g-> C -> 0 for free modules.
struct SequenceCheck
{
    bool injective = false;
    bool exact_middle = false;
    bool surjective = false;

    bool exact() const { return injective && exact_middle && surjective; }
};

SequenceCheck check_short_exact(const IntMatrix& f, const IntMatrix& g);

/// Characters f: G -> Z with f(s) + f(iota s) constant, inside Z^G x Z
/// (the last coordinate is the weight). G acts by (g f)(s) = f(g^-1 s).
struct SerreLattice
{
    EmbeddedLattice lattice;
    /// Orbits {s, iota s}: the embeddings of K+.
    std::vector<std::pair<Element, Element>> iota_orbits;
    /// Z^G x Z -> Z^{G/<iota>}, (f, m) -> f(s) + f(iota s) - m.
    IntMatrix to_kplus;
    /// Character sequence 0 -> X*(S) -> Z^G x Z -> Z^{G/<iota>} -> 0.
    SequenceCheck character_sequence;
    /// Its dual, the cocharacter sequence of the tori.
    SequenceCheck torus_sequence;

    /// Weight as a row over basis coordinates.
    IntMatrix weight_row() const;
};

SerreLattice serre_character_lattice(const CMDatum& datum);

/// W^K inside Z^X x Z as the kernel of (F, m) -> F|Y - n+ m sum_Y y, where
/// F|Y sums over the fibres of X -> Y and n+ = [K+_y : Q_p].
struct WeilLattice
{
    EmbeddedLattice lattice;
    galois::PlaceSet places;
    /// Index in places.x of the place of the fixed prime w (the coset D).
    std::size_t base_place = 0;
    long norm_factor = 1;
    IntMatrix to_y;
    SequenceCheck character_sequence;
    SequenceCheck torus_sequence;
    /// iota in D(w): W^K is the weight line and P^K = G_m.
    bool degenerate = false;

    IntMatrix weight_row() const;
};

WeilLattice weil_character_lattice(const CMDatum& datum);

/// The surjection X*(S^K) -> W^K dual to rho^K, f -> (sum of f over each
/// D(w)-coset, wt f), and the comparison of the two character sequences.
struct RhoMap
{
    /// Z^G x Z -> Z^X x Z.
    IntMatrix ambient;
    /// Basis coordinates of X*(S^K) -> basis coordinates of W^K.
    IntMatrix lattice_map;
    /// Z^{G/<iota>} -> Z^Y, summing over the fibres of G/<iota> -> Y.
    IntMatrix kplus_map;
    AbGroupStructure cokernel;
    bool surjective = false;
    /// to_y o ambient = kplus_map o to_kplus.
    bool square_commutes = false;
    bool equivariant = false;

    bool holds() const { return surjective && square_commutes && equivariant; }
};

RhoMap rho_characters(const SerreLattice& serre, const WeilLattice& weil);
RhoMap rho_characters(const CMDatum& datum);

/// A cocharacter given by its rational values on a lattice basis.
struct Cocharacter
{
    std::string name;
    std::vector<Rational> values;

    Integer denominator() const;
    bool is_integral() const { return denominator() == 1; }
    Rational pair(const IntVector& coords) const;
};

struct CocharacterSet
{
    /// On X*(S^K).
    Cocharacter w_can;
    Cocharacter mu_can;
    Cocharacter x_p;
    Cocharacter x_inf;
    /// On W^K; x_p and x_inf factor through rho.
    Cocharacter x_p_weil;
    Cocharacter x_inf_weil;

    bool x_inf_is_w_can = false;
    /// The denominator of x_p divides |D(w)|.
    bool x_p_denominator_divides = false;
    /// <mu + iota mu, f> = wt(f) on every basis vector.
    bool cm_identity = false;
    bool factor_through_rho = false;

    bool holds() const { return x_inf_is_w_can && x_p_denominator_divides && cm_identity && factor_through_rho; }
};

CocharacterSet cocharacters(const CMDatum& datum);

/// Class of x_p (at p) or x_inf (at kInfinity) in H^0(D, X_*(P^K)).
cohomology::LocalClass weil_local_class(const CMDatum& datum, long ell);

/// Inclusion W^K in W^K' for a tower, checked against the character
/// sequences of both levels.
struct WeilTransition
{
    long local_degree = 1;
    long local_degree_plus = 1;
    /// Z^X x Z -> Z^X' x Z: F'(v') = [K'_w : K_w] F(v), weight kept.
    IntMatrix a;
    /// Z^Y -> Z^Y': G'(y') = [K'+_w : K+_w] G(y).
    IntMatrix c;
    /// Basis coordinates of W^K -> basis coordinates of W^K'.
    IntMatrix lattice_map;
    /// Inflation X*(S^K) -> X*(S^K'), f -> f o s, in basis coordinates.
    IntMatrix serre_map;

    bool contained = false;
    bool square_commutes = false;
    bool equivariant = false;
    /// rho' o inflation = inclusion o rho.
    bool rho_compatible = false;

    bool holds() const { return contained && square_commutes && equivariant && rho_compatible; }
};

WeilTransition transition_weil(const galois::TowerMap& tower);

/// Splitting W^K = W_0 + Z e with W_0 the weight-zero characters.
struct WeightSplit
{
    /// Basis coordinates of W^K.
    IntMatrix weight_zero;
    IntVector complement;
    /// Generator of the weight image wt(W^K).
    Integer weight_generator;
    /// Smallest positive weight of a G-fixed character (0 if none).
    Integer invariant_weight;
    /// W_0 + Z e = W^K as lattices.
    bool lattice_split = false;
    /// The complement can be chosen G-fixed, so P^K = P_0^K x G_m as tori.
    bool equivariant_split = false;
    std::string note;
};

WeightSplit weight_split(const CMDatum& datum);

}  // namespace cmtorus::serre_weil
