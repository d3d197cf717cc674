#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "cmtorus/cohomology/tate.hpp"
#include "cmtorus/galois/cm_datum.hpp"

namespace cmtorus::brauer {

using galois::CMDatum;
using galois::Element;
using galois::ElementSet;
using lattice::AbGroupStructure;
using lattice::Integer;
using lattice::IntVector;
using lattice::Rational;

/// Subfields of K tracked by the Brauer layer, by fixing group:
/// Q (G), K (1), K+ (<iota>), K(w) (D_p), K(w)+ (D_p<iota>).
enum class FieldTag
{
    rationals,
    k,
    kplus,
    kw,
    kw_plus,
};

std::string to_string(FieldTag tag);
FieldTag field_tag_from_string(const std::string& name);

ElementSet field_subgroup(const CMDatum& datum, FieldTag tag);
long field_degree(const CMDatum& datum, FieldTag tag);
/// `small` is contained in `big`.
bool is_subfield(const CMDatum& datum, FieldTag small, FieldTag big);

/// A place of a subfield: the rational prime below it (cohomology::kInfinity
/// for archimedean places) and its index among the places over that prime.
struct BrauerPlace
{
    long ell = 0;
    std::size_t index = 0;

    friend auto operator<=>(const BrauerPlace&, const BrauerPlace&) = default;
};

struct PlaceData
{
    BrauerPlace place;
    /// H s D_l for the fixing group H of the field.
    ElementSet double_coset;
    long local_degree = 1;
    bool real = false;
    bool complex_place = false;
};

/// Places of the field over l. Throws ValidationError when the datum has
/// no local data at l.
std::vector<PlaceData> places_of(const CMDatum& datum, FieldTag tag, long ell);

/// For every prime of the datum and infinity, the local degrees of the
/// places of every tracked field.
struct LocalDegreeRow
{
    long ell = 0;
    FieldTag field = FieldTag::rationals;
    std::vector<long> degrees;

    /// Sum of the local degrees; equals the global degree.
    long total() const;
};

std::vector<LocalDegreeRow> local_degree_table(const CMDatum& datum);

/// Q/Z-valued invariants by place; zero entries are dropped.
using InvariantMap = std::map<BrauerPlace, Rational>;

/// Representative of x mod 1 in [0, 1).
Rational mod_one(const Rational& x);

/// inv_w = [E_w : F_v] inv_v at each place w of `to` over v. No reciprocity
/// check, so this also acts on local (adelic) vectors.
InvariantMap restrict_invariants(const CMDatum& datum, FieldTag from, FieldTag to, const InvariantMap& inv);
/// inv_v = sum of inv_w over w | v.
InvariantMap corestrict_invariants(const CMDatum& datum, FieldTag from, FieldTag to, const InvariantMap& inv);

/// An element of Br(F) for a tracked field F: finitely supported local
/// invariants, 1/2 Z/Z at real places, 0 at complex places, sum zero.
class BrauerElement
{
  public:
    /// Validates places, archimedean constraints and reciprocity.
    BrauerElement(const CMDatum& datum, FieldTag field, const InvariantMap& invariants);

    FieldTag field() const { return field_; }
    const InvariantMap& invariants() const { return inv_; }
    Rational invariant(const BrauerPlace& v) const;
    /// Sum of the invariants in [0, 1); zero for valid elements.
    Rational sum() const;
    bool is_zero() const { return inv_.empty(); }

    friend bool operator==(const BrauerElement&, const BrauerElement&) = default;

  private:
    FieldTag field_;
    InvariantMap inv_;
};

/// Throws ValidationError when `to` does not contain the field of `elt`.
BrauerElement restriction(const CMDatum& datum, const BrauerElement& elt, FieldTag to);
/// Throws ValidationError when `to` is not a subfield of the field of `elt`.
BrauerElement corestriction(const CMDatum& datum, const BrauerElement& elt, FieldTag to);
/// Multiplication by an integer.
BrauerElement multiply(const CMDatum& datum, const BrauerElement& elt, const Integer& k);

enum class TorusKind
{
    serre,
    weil,
};

/// Primes of the datum plus infinity, sorted with infinity first.
std::vector<long> default_probe(const CMDatum& datum);

/// The H^1 part of  0 -> H^1(Q, T) -> Br(F+) -> Br(F) + Br(Q)  for T = S^K
/// (F = K) or T = P^K (F = K(w)), restricted to places over a probe set.
/// The middle map is x -> (Res x, c Cor x) with c = 1 for S^K and
/// c = n(w) for P^K.
struct TorusH1Model
{
    TorusKind kind = TorusKind::serre;
    FieldTag small = FieldTag::kplus;
    FieldTag big = FieldTag::k;
    long coefficient = 1;
    std::vector<long> probe;
    /// Places of the small field where Res has a kernel, with its order.
    std::vector<PlaceData> places;
    std::vector<long> kernel_orders;
    /// Global classes: local kernels with total sum zero.
    AbGroupStructure global;
    /// Product of the local kernels: H^1(A, T) over the probe set.
    AbGroupStructure adelic;
    /// Cokernel of H^1(Q, T) -> H^1(A, T), a subgroup of Q/Z.
    AbGroupStructure cokernel;
    /// Generators of the global kernel as invariant vectors.
    std::vector<InvariantMap> generators;
    bool degenerate = false;
    std::string note;
};

/// Throws ValidationError when the probe set misses p, infinity or a
/// ramified prime, or contains a prime without local data.
TorusH1Model torus_h1_model(const CMDatum& datum, TorusKind kind, const std::vector<long>& probe);
TorusH1Model torus_h1_model(const CMDatum& datum, TorusKind kind);

/// Whether local H^2 classes, given by invariants on the places of F and of
/// Q, come from a global class: the two sums must be (2t, c t) for some t.
bool h2_arises_globally(const CMDatum& datum, TorusKind kind, const InvariantMap& big_field, const InvariantMap& rationals);

struct HasseCokernel
{
    /// Kernel of x -> (2x, n(w) x) on Q/Z.
    AbGroupStructure snake;
    /// Index of the global H^1 model in the adelic one.
    AbGroupStructure model;
    bool degenerate = false;
    std::string note;

    bool agree() const { return snake == model; }
};

HasseCokernel hasse_cokernel_p(const CMDatum& datum);

struct TransitionVanishing
{
    long local_degree = 1;
    AbGroupStructure source_h1;
    /// Generators of the source model with nonzero image.
    std::size_t nonzero_images = 0;
    /// The transition kills the H^1 model.
    bool vanishes = false;
    /// 2 | [K'_w : K_w].
    bool parity_rule = false;

    bool agrees() const { return vanishes == parity_rule; }
};

/// H^1(Q, P^K') -> H^1(Q, P^K) on the probe models, through the norm-power
/// map b = Nm^[K'+_w : K+_w]. Throws ValidationError when iota lies in the
/// decomposition group of the smaller field.
TransitionVanishing transition_vanishing(const galois::TowerMap& tower);

struct AdelicSum
{
    std::vector<std::pair<long, cohomology::LocalCohomology>> terms;
    AbGroupStructure total;
};

/// Direct sum of the local cohomology over the probe primes. In strict mode
/// every prime of the datum (and infinity) with a nonzero term must be
/// probed.
AdelicSum adelic_sum(const CMDatum& datum, const cohomology::GModule& charlattice, int r,
                     const std::vector<long>& probe, bool strict = false);

}  // namespace cmtorus::brauer
