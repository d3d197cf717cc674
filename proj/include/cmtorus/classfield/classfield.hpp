#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cmtorus/classfield/cyclotomic.hpp"
#include "cmtorus/lattice/ab_group.hpp"

namespace cmtorus::classfield {

using lattice::AbGroupStructure;

/// Binary quadratic form a x^2 + b x y + c y^2.
struct QuadForm
{
    Integer a, b, c;

    Integer discriminant() const { return b * b - 4 * a * c; }
    /// |b| <= a <= c, with b >= 0 when |b| = a or a = c.
    bool is_reduced() const;
    bool is_primitive() const;
    std::string to_string() const;

    friend auto operator<=>(const QuadForm& x, const QuadForm& y)
    {
        if (auto o = cmp(x.a, y.a) <=> 0; o != 0)
            return o;
        if (auto o = cmp(x.b, y.b) <=> 0; o != 0)
            return o;
        return cmp(x.c, y.c) <=> 0;
    }
    friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

/// Throws ValidationError unless D < 0 and D = 0, 1 mod 4.
void check_discriminant(const Integer& d);

/// Gauss reduction of a positive definite form.
QuadForm reduce(const QuadForm& f);
/// Dirichlet composition of primitive forms of one discriminant, reduced.
QuadForm compose(const QuadForm& f, const QuadForm& g);
QuadForm inverse(const QuadForm& f);
/// The principal form of discriminant D.
QuadForm principal_form(const Integer& d);
/// Reduced form (p, b, c) with b^2 = D mod 4p; throws ValidationError when
/// p is not represented (D is not a square mod 4p).
QuadForm prime_form(const Integer& d, long p);
/// Order of the class of f.
long form_order(const QuadForm& f);

/// Primitive reduced forms of discriminant D, sorted.
std::vector<QuadForm> reduced_forms(const Integer& d);

struct FormClassGroup
{
    Integer discriminant;
    std::vector<QuadForm> forms;
    std::vector<long> orders;
    AbGroupStructure structure;

    std::size_t class_number() const { return forms.size(); }
};

FormClassGroup form_class_group(const Integer& d);

/// Largest prime conductor accepted by the relative class number.
inline constexpr long kMaxRelativeConductor = 400;
/// Largest bound accepted by irregular_primes.
inline constexpr long kMaxIrregularBound = 500;

/// Least primitive root modulo a prime l.
long primitive_root(long ell);

/// Dirichlet character modulo a prime l, g -> zeta_{l-1}^j for the least
/// primitive root g; values live in Q(zeta_{l-1}).
class DirichletChar
{
  public:
    DirichletChar(long ell, long index);

    long modulus() const { return ell_; }
    long index() const { return index_; }
    long generator() const { return g_; }
    /// chi(-1) = -1.
    bool odd() const { return index_ % 2 == 1; }
    /// 0 when l | a.
    CyclotomicNumber value(long a) const;

  private:
    long ell_;
    long index_;
    long g_;
    /// Discrete logarithm to base g.
    std::vector<long> log_;
};

/// B_{1,chi} = (1/l) sum_{k=0}^{l-2} chi(g^k) (g^k mod l), summed along the
/// powers of the generator.
CyclotomicNumber bernoulli_1(const DirichletChar& chi);

struct RelativeClassNumber
{
    long conductor = 0;
    /// Roots of unity in Q(zeta_l).
    long roots_of_unity = 0;
    /// Unit index Q, 1 for prime conductor.
    long unit_index = 1;
    Integer h_minus;
};

/// h^- of Q(zeta_l) for a prime l <= kMaxRelativeConductor:
/// Q w prod_{chi odd} (-B_{1,chi} / 2). Throws ValidationError for
/// composite l and BoundExceeded above the cap.
RelativeClassNumber relative_class_number(long ell);

/// B_0 ... B_n with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(long n);
/// Denominator of B_k by von Staudt-Clausen: product of the primes p with
/// (p - 1) | k, for even k >= 2.
Integer staudt_clausen_denominator(long k);

struct IrregularPrimes
{
    long bound = 0;
    std::vector<long> primes;
    /// For each irregular prime, the even indices k <= l - 3 with l | B_k.
    std::vector<std::vector<long>> indices;
    /// Every B_k used has the von Staudt-Clausen denominator.
    bool denominators_checked = false;
};

IrregularPrimes irregular_primes(long bound);

struct MinusDivisibility
{
    long ell = 0;
    bool irregular = false;
    Integer h_minus;
    bool divides = false;

    /// l irregular implies l | h^-.
    bool holds() const { return !irregular || divides; }
};

MinusDivisibility minus_divisibility_check(long ell);

}  // namespace cmtorus::classfield
