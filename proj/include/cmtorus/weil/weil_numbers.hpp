#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cmtorus/classfield/cyclotomic.hpp"
#include "cmtorus/galois/cm_datum.hpp"
#include "cmtorus/lattice/int_matrix.hpp"

namespace cmtorus::weil {

using classfield::CyclotomicNumber;
using galois::CMDatum;
using lattice::Integer;
using lattice::IntVector;
using lattice::Rational;

/// a + b w in Q(sqrt d), d < 0 squarefree, with w = (1 + sqrt d) / 2 when
/// d = 1 mod 4 and w = sqrt d otherwise; w^2 = t w - m.
class QuadraticNumber
{
  public:
    QuadraticNumber(long d, Rational a, Rational b);
    static QuadraticNumber rational(long d, const Rational& x) { return {d, x, 0}; }

    long d() const { return d_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    /// Trace t and norm m of w.
    long omega_trace() const;
    long omega_norm() const;

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_integral() const { return a_.get_den() == 1 && b_.get_den() == 1; }
    Rational norm() const;
    Rational trace() const;
    /// The CM involution.
    QuadraticNumber conj() const;
    /// Throws ValidationError on zero.
    QuadraticNumber inverse() const;
    QuadraticNumber pow(long e) const;

    QuadraticNumber operator+(const QuadraticNumber& o) const;
    QuadraticNumber operator-(const QuadraticNumber& o) const;
    QuadraticNumber operator*(const QuadraticNumber& o) const;
    friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;

    /// "-7 + 24 i", "2 + sqrt(-5)", "1 + w" with w = (1 + sqrt(d))/2.
    std::string to_string() const;

  private:
    void check_same(const QuadraticNumber& o) const;

    long d_;
    Rational a_, b_;
};

/// Result of the Weil-number test pi iota(pi) = q^m.
struct WeilCheck
{
    bool weil = false;
    /// The weight m when weil is set.
    long weight = 0;
    Integer q;
    /// Exact value of pi iota(pi); the rejection witness.
    std::string product;
};

/// Throws ValidationError when pi = 0 or q is not a prime power.
WeilCheck is_weil_number(const QuadraticNumber& pi, const Integer& q);
WeilCheck is_weil_number(const CyclotomicNumber& pi, const Integer& q);

/// (p, k) with q = p^k; throws ValidationError when q is not a prime power.
std::pair<long, long> prime_power(const Integer& q);

/// Slope data of a Weil q-number of an imaginary quadratic datum. Places
/// follow the X ordering of the Weil lattice; in the split case the base
/// place is the distinguished prime.
struct WeilNumberCert
{
    QuadraticNumber pi{-1, 0, 0};
    Integer q;
    long q_exponent = 1;
    long weight = 0;
    std::vector<long> ords;
    std::vector<Rational> slopes;
    std::vector<long> local_degrees;
    /// f(v) = s(v) [K_v : Q_p].
    std::vector<Rational> f_values;
    bool f_integral = false;
    /// (f, m) lies in W^K.
    bool in_weil_lattice = false;
    bool slopes_in_range = false;
    /// s(v) + s(iota v) = m.
    bool conjugate_symmetric = false;

    bool holds() const { return f_integral && in_weil_lattice && slopes_in_range && conjugate_symmetric; }
};

/// The prime above p fixed by the datum, split case: the least primitive
/// a = x + y w of norm p^h (y ascending, then x = 0, 1, -1, 2, ...) with h
/// the order of the class of the prime; the prime is the one dividing a.
struct DistinguishedPrime
{
    long d = 0;
    long p = 0;
    /// Order of the prime in the form class group.
    long h = 1;
    QuadraticNumber a{-1, 0, 0};
    /// w = root mod p at the prime.
    Integer root;
    long search_bound = 0;
};

/// Throws ValidationError unless the datum is imaginary quadratic with p
/// split, BoundExceeded when no generator is found within |x|, |y| <= p^h.
DistinguishedPrime distinguished_prime(const CMDatum& datum);

/// Throws ValidationError for non-quadratic data and when pi is not a Weil
/// q-number for a power q of p.
WeilNumberCert slopes(const QuadraticNumber& pi, const CMDatum& datum, const Integer& q);

struct AlphaConstruction
{
    DistinguishedPrime prime;
    /// (U(K) : U(K+)).
    long unit_index = 1;
    QuadraticNumber alpha{-1, 0, 0};
    /// alpha is a Weil q-number of weight 1 with q = p^base_exponent.
    long base_exponent = 0;
    Integer q;
    WeilCheck check;
};

AlphaConstruction alpha_construction(const CMDatum& datum);

/// (U(K) : U(K+)) for Q(sqrt d): 2 for d = -1, 3 for d = -3, 1 otherwise.
long unit_index(long d);

struct CharacterValue
{
    /// (f(1), f(iota); wt) in the Serre ambient coordinates.
    IntVector f;
    QuadraticNumber value{-1, 0, 0};
    WeilNumberCert cert;
    /// rho(f) in Z^X x Z.
    IntVector rho_image;
    /// The slope data of f(alpha) is rho(f) and the weight is wt(f).
    bool rho_consistent = false;
};

/// f(alpha) = alpha^f(1) iota(alpha)^f(iota). Throws ValidationError when
/// f is outside the Serre lattice.
CharacterValue evaluate_character(const CMDatum& datum, const AlphaConstruction& alpha, const IntVector& f);

}  // namespace cmtorus::weil
