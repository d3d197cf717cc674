#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cmtorus/lattice/int_matrix.hpp"

namespace cmtorus::classfield {

using lattice::Integer;
using lattice::IntVector;
using lattice::Rational;

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
IntVector cyclotomic_polynomial(long n);

/// Q(zeta_n) with the power basis 1, zeta, ..., zeta^(phi(n)-1).
class CyclotomicField
{
  public:
    /// Shared per n; safe to call from several threads.
    static std::shared_ptr<const CyclotomicField> get(long n);

    explicit CyclotomicField(long n);

    long conductor() const { return n_; }
    std::size_t degree() const { return phi_.size() - 1; }
    const IntVector& modulus() const { return phi_; }
    /// zeta^k in the power basis, for any integer k.
    const std::vector<Rational>& power(long k) const;

  private:
    long n_;
    IntVector phi_;
    std::vector<std::vector<Rational>> powers_;
};

/// An element of Q(zeta_n) with exact rational coordinates.
class CyclotomicNumber
{
  public:
    CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coords);

    static CyclotomicNumber rational(long n, const Rational& x);
    /// zeta_n^k.
    static CyclotomicNumber zeta_power(long n, long k);
    /// Reduces an arbitrary polynomial in zeta modulo Phi_n.
    static CyclotomicNumber from_polynomial(long n, const std::vector<Rational>& poly);

    long conductor() const { return field_->conductor(); }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws ValidationError when the element is not rational.
    Rational to_rational() const;

    /// zeta -> zeta^k for gcd(k, n) = 1.
    CyclotomicNumber galois(long k) const;
    /// Complex conjugation zeta -> zeta^-1.
    CyclotomicNumber conj() const { return galois(-1); }

    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-() const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const Rational& k) const;
    CyclotomicNumber pow(unsigned long e) const;

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

    /// "3 - 2 z + z^3", with z = zeta_n.
    std::string to_string() const;

  private:
    void check_same(const CyclotomicNumber& o) const;

    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rational> coords_;
};

}  // namespace cmtorus::classfield
