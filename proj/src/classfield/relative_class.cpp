#include <algorithm>

#include "cmtorus/classfield/classfield.hpp"
#include "cmtorus/error.hpp"
#include "cmtorus/galois/cm_datum.hpp"

namespace cmtorus::classfield {

namespace {

void check_prime(long ell, const char* what)
{
    if (!galois::is_prime(ell))
        throw ValidationError(std::string(what) + ": " + std::to_string(ell) + " is not prime");
}

}  // namespace

long primitive_root(long ell)
{
    check_prime(ell, "primitive root");
    if (ell == 2)
        return 1;
    for (long g = 2;; ++g)
        if (galois::multiplicative_order(g, ell) == ell - 1)
            return g;
}

DirichletChar::DirichletChar(long ell, long index) : ell_(ell), g_(primitive_root(ell)), log_(ell, -1)
{
    const long order = ell - 1;
    index_ = ((index % order) + order) % order;
    long x = 1;
    for (long k = 0; k < order; ++k) {
        log_[x] = k;
        x = x * g_ % ell;
    }
}

CyclotomicNumber DirichletChar::value(long a) const
{
    long r = ((a % ell_) + ell_) % ell_;
    if (r == 0)
        return CyclotomicNumber::rational(ell_ - 1, 0);
    return CyclotomicNumber::zeta_power(ell_ - 1, index_ * log_[r]);
}

CyclotomicNumber bernoulli_1(const DirichletChar& chi)
{
    const long ell = chi.modulus(), order = ell - 1;
    auto field = CyclotomicField::get(order);
    std::vector<Rational> acc(field->degree(), 0);
    long x = 1;
    for (long k = 0; k < order; ++k) {
        const auto& z = field->power(chi.index() * k);
        for (std::size_t i = 0; i < acc.size(); ++i)
            acc[i] += x * z[i];
        x = x * chi.generator() % ell;
    }
    for (auto& c : acc)
        c /= ell;
    return {field, acc};
}

RelativeClassNumber relative_class_number(long ell)
{
    check_prime(ell, "relative class number");
    if (ell < 3)
        throw ValidationError("relative class number: Q(zeta_2) is not a CM field");
    if (ell > kMaxRelativeConductor)
        throw BoundExceeded("relative class number: conductor " + std::to_string(ell) + " exceeds the cap " +
                            std::to_string(kMaxRelativeConductor));
    RelativeClassNumber out;
    out.conductor = ell;
    out.roots_of_unity = 2 * ell;
    out.unit_index = 1;
    CyclotomicNumber prod = CyclotomicNumber::rational(ell - 1, 1);
    for (long j = 1; j < ell - 1; j += 2)
        prod = prod * (bernoulli_1(DirichletChar(ell, j)) * Rational(-1, 2));
    Rational h = prod.to_rational() * Rational(out.unit_index * out.roots_of_unity);
    if (h.get_den() != 1 || sgn(h) <= 0)
        throw ValidationError("relative class number: formula gave " + h.get_str());
    out.h_minus = h.get_num();
    return out;
}

std::vector<Rational> bernoulli_numbers(long n)
{
    std::vector<Rational> b(n + 1, 0);
    b[0] = 1;
    if (n >= 1)
        b[1] = Rational(-1, 2);
    // sum_{k=0}^{m} C(m+1, k) B_k = 0.
    for (long m = 2; m <= n; m += 2) {
        Rational s = 0;
        Integer binom = 1;  // C(m+1, k)
        for (long k = 0; k < m; ++k) {
            if (sgn(b[k]) != 0)
                s += binom * b[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        b[m] = -s / (m + 1);
    }
    return b;
}

Integer staudt_clausen_denominator(long k)
{
    if (k < 2 || k % 2 != 0)
        throw ValidationError("von Staudt-Clausen applies to even k >= 2");
    Integer d = 1;
    for (long q = 1; q <= k; ++q)
        if (k % q == 0 && galois::is_prime(q + 1))
            d *= q + 1;
    return d;
}

IrregularPrimes irregular_primes(long bound)
{
    if (bound > kMaxIrregularBound)
        throw BoundExceeded("irregular primes: bound " + std::to_string(bound) + " exceeds the cap " +
                            std::to_string(kMaxIrregularBound));
    IrregularPrimes out;
    out.bound = bound;
    const long top = std::max(bound - 3, 0L);
    auto b = bernoulli_numbers(top);
    out.denominators_checked = true;
    for (long k = 2; k <= top; k += 2)
        if (b[k].get_den() != staudt_clausen_denominator(k))
            out.denominators_checked = false;
    for (long ell = 3; ell <= bound; ++ell) {
        if (!galois::is_prime(ell))
            continue;
        std::vector<long> idx;
        for (long k = 2; k <= ell - 3; k += 2)
            if (b[k].get_num() % ell == 0)
                idx.push_back(k);
        if (!idx.empty()) {
            out.primes.push_back(ell);
            out.indices.push_back(std::move(idx));
        }
    }
    return out;
}

MinusDivisibility minus_divisibility_check(long ell)
{
    MinusDivisibility out;
    out.ell = ell;
    out.h_minus = relative_class_number(ell).h_minus;
    auto irr = irregular_primes(ell);
    out.irregular = std::find(irr.primes.begin(), irr.primes.end(), ell) != irr.primes.end();
    out.divides = out.h_minus % ell == 0;
    return out;
}

}  // namespace cmtorus::classfield
