#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cmtorus/galois/finite_group.hpp"

namespace cmtorus::galois {

/// Decomposition data at a rational prime: D_l, ramification index and
/// residue degree, with |D_l| = e * f.
struct LocalData
{
    ElementSet decomposition;
    long e = 1;
    long f = 1;

    long local_degree() const { return e * f; }
};

/// How a datum was produced; only presets carry field arithmetic that
/// later modules (Weil numbers, class groups) can use.
enum class FieldKind
{
    custom,
    cyclotomic,
    quadratic,
};

/// Galois data of a CM field K, Galois over Q: the group Gal(K/Q), complex
/// conjugation, decomposition data at finitely many primes and the
/// distinguished prime p.
class CMDatum
{
  public:
    /// Validates every invariant; throws ValidationError.
    CMDatum(FiniteGroup group, Element iota, std::map<long, LocalData> local_data, long p, std::string label,
            FieldKind kind = FieldKind::custom, long parameter = 0);

    const FiniteGroup& group() const { return group_; }
    Element iota() const { return iota_; }
    long p() const { return p_; }
    const std::string& label() const { return label_; }
    FieldKind kind() const { return kind_; }
    /// Conductor n for cyclotomic data, d for quadratic data, 0 otherwise.
    long parameter() const { return parameter_; }

    const std::map<long, LocalData>& local_data() const { return local_; }
    bool has_prime(long ell) const { return local_.count(ell) != 0; }
    /// Throws ValidationError when the prime is missing.
    const LocalData& local(long ell) const;

    /// D(w) at the distinguished prime.
    const LocalData& at_p() const { return local(p_); }
    /// n(w_K) = e_p f_p.
    long local_degree_p() const { return at_p().local_degree(); }
    bool iota_in_decomposition(long ell) const;

    /// The subgroup {1, iota}.
    ElementSet iota_subgroup() const;

  private:
    FiniteGroup group_;
    Element iota_;
    std::map<long, LocalData> local_;
    long p_;
    std::string label_;
    FieldKind kind_;
    long parameter_;
};

/// Places of K and K+ above l, identified with G/D_l and G/(D_l<iota>).
struct PlaceSet
{
    long ell = 0;
    /// Left cosets of D_l: the places of K above l.
    std::vector<ElementSet> x;
    /// Left cosets of D_l<iota>: the places of K+ above l, as subsets of G.
    std::vector<ElementSet> y;
    /// For each place of K, the index of the place of K+ below it.
    std::vector<std::size_t> x_to_y;
    bool iota_in_d = false;
    long e = 1;
    long f = 1;
    /// [K_w : Q_l] and [K+_y : Q_l].
    long local_degree_k = 1;
    long local_degree_kplus = 1;

    /// Sum over places of e_v f_v; equals |G| by the fundamental identity.
    long degree_sum() const { return static_cast<long>(x.size()) * local_degree_k; }
};

PlaceSet places(const CMDatum& datum, long ell);

/// Q(zeta_n) for n >= 3, n not 2 mod 4. Local data covers p, the primes
/// dividing n and `extra_primes`.
CMDatum make_cyclotomic_datum(long n, long p, const std::vector<long>& extra_primes = {});

/// Q(sqrt(d)) for negative squarefree d. Local data covers p, the primes
/// dividing the discriminant and `extra_primes`.
CMDatum make_quadratic_datum(long d, long p, const std::vector<long>& extra_primes = {});

/// Discriminant of Q(sqrt(d)).
long quadratic_discriminant(long d);

/// Kronecker symbol (D / l) for a fundamental discriminant D and prime l.
int kronecker_symbol(long disc, long ell);

/// A surjection Gal(K'/Q) -> Gal(K/Q) together with [K'_w : K_w].
struct TowerMap
{
    CMDatum small;
    CMDatum large;
    /// surjection[g'] is the image of g' in the small group.
    std::vector<Element> surjection;
    long local_degree_at_p = 1;
};

/// Validates the surjection: homomorphism, onto, iota' -> iota, D'_l onto
/// D_l for every common prime, same p. Throws ValidationError naming the
/// failed invariant.
TowerMap transition(const CMDatum& small, const CMDatum& large, std::vector<Element> surjection);

/// Reduction (Z/n')^x -> (Z/n)^x for n | n'.
std::vector<Element> cyclotomic_surjection(const CMDatum& small, const CMDatum& large);

/// (Z/n')^x -> Gal(Q(sqrt d)/Q) via the Kronecker character; requires
/// Q(sqrt d) inside Q(zeta_n').
std::vector<Element> quadratic_in_cyclotomic_surjection(const CMDatum& small, const CMDatum& large);

/// Standard preset: label plus datum.
struct Preset
{
    std::string name;
    CMDatum datum;
};

/// Q(i), Q(sqrt-5), Q(zeta_5), Q(zeta_13), Q(zeta_15), Q(zeta_20) at
/// p in {3, 5, 19}, with local data at the small primes used by the probes.
std::vector<Preset> standard_presets();

/// Primes carried by every preset besides p and the ramified ones.
const std::vector<long>& preset_probe_primes();

nlohmann::json to_json(const CMDatum& datum);
/// Parses the documented datum shape; throws ValidationError.
CMDatum datum_from_json(const nlohmann::json& j);

/// The field name of a preset, e.g. "Q(zeta_13)" or "Q(sqrt(-5))".
std::string field_name(FieldKind kind, long parameter);

bool is_prime(long n);
/// Distinct prime divisors in increasing order.
std::vector<long> prime_divisors(long n);
/// Multiplicative order of a modulo m (gcd(a, m) = 1, m >= 1).
long multiplicative_order(long a, long m);
long euler_phi(long n);

}  // namespace cmtorus::galois
