#include "cmtorus/weil/weil_numbers.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "cmtorus/classfield/classfield.hpp"
#include "cmtorus/error.hpp"
#include "cmtorus/serre_weil/lattices.hpp"

namespace cmtorus::weil {

namespace {

long floor_mod(long a, long m)
{
    return ((a % m) + m) % m;
}

/// v_p of a nonzero rational.
long valuation(const Rational& x, long p)
{
    long v = 0;
    Integer n = x.get_num(), d = x.get_den();
    v += static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), Integer(p).get_mpz_t()));
    v -= static_cast<long>(mpz_remove(d.get_mpz_t(), d.get_mpz_t(), Integer(p).get_mpz_t()));
    return v;
}

Integer pow_integer(long base, long e)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
    return r;
}

/// The m with q^m = c, if any.
std::optional<long> log_base(Rational c, const Integer& q)
{
    if (sgn(c) <= 0)
        return std::nullopt;
    long sign = 1;
    if (c < 1) {
        c = 1 / c;
        sign = -1;
    }
    if (c.get_den() != 1)
        return std::nullopt;
    Integer n = c.get_num();
    long m = 0;
    while (n != 1) {
        if (n % q != 0)
            return std::nullopt;
        n /= q;
        ++m;
    }
    return sign * m;
}

WeilCheck weil_from_product(const Rational& product, const std::string& text, const Integer& q, bool rational)
{
    prime_power(q);
    WeilCheck c;
    c.q = q;
    c.product = text;
    if (!rational)
        return c;
    if (auto m = log_base(product, q)) {
        c.weil = true;
        c.weight = *m;
    }
    return c;
}

void require_quadratic(const CMDatum& datum)
{
    if (datum.kind() != galois::FieldKind::quadratic)
        throw ValidationError("valuations need an imaginary quadratic datum; " + datum.label() + " is not one");
}

/// Root of x^2 - t x + m modulo p^k, lifted from r mod p by Newton steps.
Integer lift_root(const QuadraticNumber& shape, const Integer& r0, long p, long k)
{
    const Integer t = shape.omega_trace(), m = shape.omega_norm();
    const Integer mod = pow_integer(p, k);
    Integer r = r0;
    for (long prec = 1; prec < 2 * k + 2; prec *= 2) {
        Integer f = r * r - t * r + m;
        Integer df = 2 * r - t, inv;
        if (mpz_invert(inv.get_mpz_t(), df.get_mpz_t(), mod.get_mpz_t()) == 0)
            throw ValidationError("root is not simple modulo p");
        r = r - f * inv;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    }
    return r;
}

/// ord at the distinguished prime of a nonzero element, split case.
long ord_split(const QuadraticNumber& x, const DistinguishedPrime& prime)
{
    Integer den = lcm(Integer(x.a().get_den()), Integer(x.b().get_den()));
    Integer A = Rational(x.a() * den).get_num(), B = Rational(x.b() * den).get_num();
    QuadraticNumber integral(x.d(), A, B);
    long vn = valuation(integral.norm(), prime.p);
    long k = vn + 1;
    Integer r = lift_root(integral, prime.root, prime.p, k);
    Integer mod = pow_integer(prime.p, k);
    Integer val = A + B * r;
    mpz_fdiv_r(val.get_mpz_t(), val.get_mpz_t(), mod.get_mpz_t());
    long ord = 0;
    while (ord < k && val % prime.p == 0 && val != 0) {
        val /= prime.p;
        ++ord;
    }
    return ord - valuation(Rational(den), prime.p);
}

}  // namespace

QuadraticNumber::QuadraticNumber(long d, Rational a, Rational b) : d_(d), a_(std::move(a)), b_(std::move(b))
{
    if (d >= 0)
        throw ValidationError("quadratic number: d must be negative");
    for (long q = 2; q * q <= -d; ++q)
        if (d % (q * q) == 0)
            throw ValidationError("quadratic number: d must be squarefree");
    a_.canonicalize();
    b_.canonicalize();
}

long QuadraticNumber::omega_trace() const
{
    return floor_mod(d_, 4) == 1 ? 1 : 0;
}

long QuadraticNumber::omega_norm() const
{
    return floor_mod(d_, 4) == 1 ? (1 - d_) / 4 : -d_;
}

Rational QuadraticNumber::norm() const
{
    return a_ * a_ + a_ * b_ * omega_trace() + b_ * b_ * omega_norm();
}

Rational QuadraticNumber::trace() const
{
    return 2 * a_ + b_ * omega_trace();
}

QuadraticNumber QuadraticNumber::conj() const
{
    return {d_, a_ + b_ * omega_trace(), -b_};
}

QuadraticNumber QuadraticNumber::inverse() const
{
    if (is_zero())
        throw ValidationError("inverse of zero");
    Rational n = norm();
    QuadraticNumber c = conj();
    return {d_, c.a_ / n, c.b_ / n};
}

QuadraticNumber QuadraticNumber::pow(long e) const
{
    QuadraticNumber base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    QuadraticNumber r = rational(d_, 1);
    for (; k > 0; k >>= 1) {
        if (k & 1)
            r = r * base;
        base = base * base;
    }
    return r;
}

void QuadraticNumber::check_same(const QuadraticNumber& o) const
{
    if (d_ != o.d_)
        throw DimensionMismatch("quadratic numbers from different fields");
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const
{
    check_same(o);
    return {d_, a_ + o.a_, b_ + o.b_};
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& o) const
{
    check_same(o);
    return {d_, a_ - o.a_, b_ - o.b_};
}

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& o) const
{
    check_same(o);
    Rational bd = b_ * o.b_;
    return {d_, a_ * o.a_ - bd * omega_norm(), a_ * o.b_ + b_ * o.a_ + bd * omega_trace()};
}

std::string QuadraticNumber::to_string() const
{
    std::string w = d_ == -1 ? "i" : omega_trace() == 0 ? "sqrt(" + std::to_string(d_) + ")" : "w";
    std::ostringstream os;
    bool has_a = sgn(a_) != 0;
    if (has_a)
        os << a_.get_str();
    if (sgn(b_) != 0) {
        Rational ab = abs(b_);
        if (has_a)
            os << (sgn(b_) < 0 ? " - " : " + ");
        else if (sgn(b_) < 0)
            os << "-";
        if (ab != 1)
            os << ab.get_str() << " ";
        os << w;
    }
    std::string s = os.str();
    return s.empty() ? "0" : s;
}

std::pair<long, long> prime_power(const Integer& q)
{
    if (q >= 2)
        for (unsigned long k = mpz_sizeinbase(q.get_mpz_t(), 2); k >= 1; --k) {
            Integer root, rem;
            mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), q.get_mpz_t(), k);
            if (rem == 0 && root.fits_slong_p() && mpz_probab_prime_p(root.get_mpz_t(), 30) != 0)
                return {root.get_si(), static_cast<long>(k)};
        }
    throw ValidationError("q must be a prime power, got " + q.get_str());
}

WeilCheck is_weil_number(const QuadraticNumber& pi, const Integer& q)
{
    if (pi.is_zero())
        throw ValidationError("Weil number test: pi = 0");
    Rational n = pi.norm();
    return weil_from_product(n, n.get_str(), q, true);
}

WeilCheck is_weil_number(const CyclotomicNumber& pi, const Integer& q)
{
    if (pi.is_zero())
        throw ValidationError("Weil number test: pi = 0");
    CyclotomicNumber prod = pi * pi.conj();
    bool rational = prod.is_rational();
    return weil_from_product(rational ? prod.to_rational() : Rational(0), prod.to_string(), q, rational);
}

long unit_index(long d)
{
    if (d == -1)
        return 2;
    if (d == -3)
        return 3;
    return 1;
}

DistinguishedPrime distinguished_prime(const CMDatum& datum)
{
    require_quadratic(datum);
    const long d = datum.parameter(), p = datum.p();
    if (datum.iota_in_decomposition(p))
        throw ValidationError("distinguished prime: iota lies in D(w), p does not split");
    DistinguishedPrime out;
    out.d = d;
    out.p = p;
    const long disc = galois::quadratic_discriminant(d);
    out.h = classfield::form_order(classfield::prime_form(disc, p));
    const Integer norm = pow_integer(p, out.h);
    if (!norm.fits_slong_p())
        throw BoundExceeded("distinguished prime: p^h too large");
    out.search_bound = norm.get_si();

    const QuadraticNumber shape(d, 0, 1);
    const Integer t = shape.omega_trace(), m = shape.omega_norm();
    for (long y = 1; y <= out.search_bound; ++y) {
        // x^2 + t y x + (m y^2 - N) = 0.
        Integer disc_x = t * t * y * y - 4 * (m * y * y - norm);
        if (sgn(disc_x) < 0)
            break;
        if (!mpz_perfect_square_p(disc_x.get_mpz_t()))
            continue;
        Integer s = sqrt(disc_x);
        std::vector<Integer> xs;
        for (const Integer& num : {Integer(-t * y + s), Integer(-t * y - s)})
            if (num % 2 == 0)
                xs.push_back(num / 2);
        std::sort(xs.begin(), xs.end(), [](const Integer& u, const Integer& v) {
            if (abs(u) != abs(v))
                return abs(u) < abs(v);
            return u > v;
        });
        for (const Integer& x : xs) {
            if (abs(x) > out.search_bound || gcd(x, Integer(y)) != 1)
                continue;
            out.a = QuadraticNumber(d, Rational(x), Rational(y));
            // The prime is (p, w - r) with x + y r = 0 mod p.
            Integer yinv;
            mpz_invert(yinv.get_mpz_t(), Integer(y).get_mpz_t(), Integer(p).get_mpz_t());
            out.root = -x * yinv;
            mpz_fdiv_r(out.root.get_mpz_t(), out.root.get_mpz_t(), Integer(p).get_mpz_t());
            return out;
        }
    }
    throw BoundExceeded("distinguished prime: no primitive x + y w of norm " + norm.get_str() + " (h = " +
                        std::to_string(out.h) + ") with |x|, |y| <= " + std::to_string(out.search_bound));
}

WeilNumberCert slopes(const QuadraticNumber& pi, const CMDatum& datum, const Integer& q)
{
    require_quadratic(datum);
    if (pi.d() != datum.parameter())
        throw ValidationError("slopes: element of Q(sqrt " + std::to_string(pi.d()) + ") for a datum of Q(sqrt " +
                              std::to_string(datum.parameter()) + ")");
    const long p = datum.p();
    auto [qp, k] = prime_power(q);
    if (qp != p)
        throw ValidationError("slopes: q = " + q.get_str() + " is not a power of p = " + std::to_string(p));
    WeilCheck check = is_weil_number(pi, q);
    if (!check.weil)
        throw ValidationError("slopes: not a Weil " + q.get_str() + "-number, pi iota(pi) = " + check.product);

    WeilNumberCert c;
    c.pi = pi;
    c.q = q;
    c.q_exponent = k;
    c.weight = check.weight;
    auto wl = serre_weil::weil_character_lattice(datum);
    const long e = datum.at_p().e, f = datum.at_p().f;
    const long vn = valuation(pi.norm(), p);
    if (wl.places.x.size() == 2) {
        DistinguishedPrime prime = distinguished_prime(datum);
        long o = ord_split(pi, prime);
        c.ords.assign(2, 0);
        c.ords[wl.base_place] = o;
        c.ords[1 - wl.base_place] = vn - o;
        c.local_degrees.assign(2, 1);
    } else {
        // Inert: N(v) = p^2; ramified: v^2 = (p), N(v) = p.
        c.ords = {e == 2 ? vn : vn / 2};
        c.local_degrees = {e * f};
    }
    c.f_integral = true;
    c.slopes_in_range = true;
    IntVector ambient;
    for (std::size_t v = 0; v < c.ords.size(); ++v) {
        Rational s(c.ords[v], k * e);
        s.canonicalize();
        Rational fv = s * c.local_degrees[v];
        c.slopes.push_back(s);
        c.f_values.push_back(fv);
        c.f_integral = c.f_integral && fv.get_den() == 1;
        c.slopes_in_range = c.slopes_in_range && s >= std::min(0L, c.weight) && s <= std::max(0L, c.weight);
        ambient.push_back(fv.get_num());
    }
    ambient.push_back(c.weight);
    Rational sym = c.slopes.size() == 2 ? Rational(c.slopes[0] + c.slopes[1]) : Rational(2 * c.slopes[0]);
    c.conjugate_symmetric = sym == c.weight;
    if (c.f_integral) {
        try {
            wl.lattice.coordinates(ambient);
            c.in_weil_lattice = true;
        } catch (const ValidationError&) {
            c.in_weil_lattice = false;
        }
    }
    return c;
}

AlphaConstruction alpha_construction(const CMDatum& datum)
{
    AlphaConstruction out;
    out.prime = distinguished_prime(datum);
    out.unit_index = unit_index(out.prime.d);
    out.alpha = out.prime.a.pow(2 * out.unit_index);
    out.base_exponent = 2 * out.unit_index * out.prime.h;
    out.q = pow_integer(out.prime.p, out.base_exponent);
    out.check = is_weil_number(out.alpha, out.q);
    return out;
}

CharacterValue evaluate_character(const CMDatum& datum, const AlphaConstruction& alpha, const IntVector& f)
{
    auto serre = serre_weil::serre_character_lattice(datum);
    if (f.size() != serre.lattice.ambient_dim())
        throw ValidationError("character has the wrong length");
    serre.lattice.coordinates(f);
    const auto& g = datum.group();
    const long e1 = f[g.identity()].get_si(), ei = f[datum.iota()].get_si();
    CharacterValue out;
    out.f = f;
    out.value = alpha.alpha.pow(e1) * alpha.alpha.conj().pow(ei);
    out.cert = slopes(out.value, datum, alpha.q);
    out.rho_image = serre_weil::rho_characters(datum).ambient * f;
    IntVector got;
    for (const auto& fv : out.cert.f_values)
        got.push_back(fv.get_num());
    got.push_back(out.cert.weight);
    out.rho_consistent = out.cert.f_integral && got == out.rho_image && out.cert.weight == f.back();
    return out;
}

}  // namespace cmtorus::weil
