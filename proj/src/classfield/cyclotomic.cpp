#include "cmtorus/classfield/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "cmtorus/error.hpp"

namespace cmtorus::classfield {

namespace {

/// Quotient of a by a monic divisor b; the division must be exact.
IntVector exact_divide(IntVector a, const IntVector& b)
{
    const std::size_t db = b.size() - 1;
    IntVector q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        Integer c = a[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j)
            a[i - db + j] -= c * b[j];
    }
    for (const auto& r : a)
        if (r != 0)
            throw ValidationError("cyclotomic polynomial: inexact division");
    return q;
}

}  // namespace

IntVector cyclotomic_polynomial(long n)
{
    if (n < 1)
        throw ValidationError("cyclotomic polynomial: n must be positive");
    static std::mutex mu;
    static std::map<long, IntVector> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end())
            return it->second;
    }
    IntVector p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0)
            p = exact_divide(p, cyclotomic_polynomial(d));
    std::lock_guard lock(mu);
    cache.emplace(n, p);
    return p;
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(long n)
{
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const CyclotomicField>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot)
        slot = std::make_shared<const CyclotomicField>(n);
    return slot;
}

CyclotomicField::CyclotomicField(long n) : n_(n), phi_(cyclotomic_polynomial(n))
{
    const std::size_t d = degree();
    std::vector<Rational> cur(d, 0);
    if (d > 0)
        cur[0] = 1;
    powers_.reserve(n);
    for (long k = 0; k < n; ++k) {
        powers_.push_back(cur);
        // Multiply by zeta and reduce the top coefficient.
        Rational top = d > 0 ? cur[d - 1] : Rational(0);
        for (std::size_t i = d; i-- > 1;)
            cur[i] = cur[i - 1];
        if (d > 0)
            cur[0] = 0;
        for (std::size_t i = 0; i < d; ++i)
            cur[i] -= top * Rational(phi_[i]);
    }
}

const std::vector<Rational>& CyclotomicField::power(long k) const
{
    return powers_[((k % n_) + n_) % n_];
}

CyclotomicNumber::CyclotomicNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords))
{
    if (coords_.size() != field_->degree())
        throw DimensionMismatch("cyclotomic number: wrong number of coordinates");
}

CyclotomicNumber CyclotomicNumber::rational(long n, const Rational& x)
{
    auto f = CyclotomicField::get(n);
    std::vector<Rational> c(f->degree(), 0);
    c[0] = x;
    return {f, c};
}

CyclotomicNumber CyclotomicNumber::zeta_power(long n, long k)
{
    auto f = CyclotomicField::get(n);
    return {f, f->power(k)};
}

CyclotomicNumber CyclotomicNumber::from_polynomial(long n, const std::vector<Rational>& poly)
{
    auto f = CyclotomicField::get(n);
    std::vector<Rational> c(f->degree(), 0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
        if (sgn(poly[k]) == 0)
            continue;
        const auto& zk = f->power(static_cast<long>(k));
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] += poly[k] * zk[i];
    }
    return {f, c};
}

bool CyclotomicNumber::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool CyclotomicNumber::is_rational() const
{
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational CyclotomicNumber::to_rational() const
{
    if (!is_rational())
        throw ValidationError("cyclotomic number is not rational: " + to_string());
    return coords_[0];
}

CyclotomicNumber CyclotomicNumber::galois(long k) const
{
    if (std::gcd(k, conductor()) != 1)
        throw ValidationError("galois: exponent not prime to the conductor");
    std::vector<Rational> c(coords_.size(), 0);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (sgn(coords_[i]) == 0)
            continue;
        const auto& z = field_->power(static_cast<long>(i) * k);
        for (std::size_t j = 0; j < c.size(); ++j)
            c[j] += coords_[i] * z[j];
    }
    return {field_, c};
}

void CyclotomicNumber::check_same(const CyclotomicNumber& o) const
{
    if (conductor() != o.conductor())
        throw DimensionMismatch("cyclotomic numbers from different fields");
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const
{
    check_same(o);
    std::vector<Rational> c = coords_;
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] += o.coords_[i];
    return {field_, c};
}

CyclotomicNumber CyclotomicNumber::operator-() const
{
    std::vector<Rational> c = coords_;
    for (auto& x : c)
        x = -x;
    return {field_, c};
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const
{
    return *this + (-o);
}

CyclotomicNumber CyclotomicNumber::operator*(const Rational& k) const
{
    std::vector<Rational> c = coords_;
    for (auto& x : c)
        x *= k;
    return {field_, c};
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const
{
    check_same(o);
    const std::size_t d = coords_.size();
    std::vector<Rational> prod(2 * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(coords_[i]) == 0)
            continue;
        for (std::size_t j = 0; j < d; ++j)
            prod[i + j] += coords_[i] * o.coords_[j];
    }
    const IntVector& phi = field_->modulus();
    for (std::size_t k = prod.size(); k-- > d;) {
        if (sgn(prod[k]) == 0)
            continue;
        Rational top = prod[k];
        for (std::size_t i = 0; i <= d; ++i)
            prod[k - d + i] -= top * Rational(phi[i]);
    }
    prod.resize(d);
    return {field_, prod};
}

CyclotomicNumber CyclotomicNumber::pow(unsigned long e) const
{
    CyclotomicNumber result = rational(conductor(), 1), base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base;
        base = base * base;
    }
    return result;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    return a.conductor() == b.conductor() && a.coords_ == b.coords_;
}

std::string CyclotomicNumber::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Rational& c = coords_[i];
        if (sgn(c) == 0)
            continue;
        Rational a = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || a != 1)
            os << a.get_str();
        if (i > 0) {
            if (a != 1)
                os << " ";
            os << "z";
            if (i > 1)
                os << "^" << i;
        }
    }
    return first ? "0" : os.str();
}

}  // namespace cmtorus::classfield
