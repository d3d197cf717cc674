#include <algorithm>
#include <sstream>

#include "cmtorus/classfield/classfield.hpp"
#include "cmtorus/error.hpp"

namespace cmtorus::classfield {

namespace {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer floor_mod(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// g = s a + t b.
Integer gcdext(Integer& s, Integer& t, const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

void check_definite(const QuadForm& f)
{
    if (sgn(f.a) <= 0 || sgn(f.discriminant()) >= 0)
        throw ValidationError("form " + f.to_string() + " is not positive definite");
}

}  // namespace

bool QuadForm::is_reduced() const
{
    if (abs(b) > a || a > c)
        return false;
    if ((abs(b) == a || a == c) && sgn(b) < 0)
        return false;
    return true;
}

bool QuadForm::is_primitive() const
{
    return gcd(gcd(a, b), c) == 1;
}

std::string QuadForm::to_string() const
{
    std::ostringstream os;
    os << "(" << a << ", " << b << ", " << c << ")";
    return os.str();
}

void check_discriminant(const Integer& d)
{
    Integer r = floor_mod(d, 4);
    if (sgn(d) >= 0 || (r != 0 && r != 1))
        throw ValidationError("invalid discriminant " + d.get_str() + ": need D < 0 and D = 0, 1 mod 4");
}

QuadForm reduce(const QuadForm& f)
{
    check_definite(f);
    const Integer d = f.discriminant();
    QuadForm r = f;
    while (!r.is_reduced()) {
        if (abs(r.b) > r.a || r.b == -r.a) {
            Integer k = floor_div(r.a - r.b, 2 * r.a);
            r.b += 2 * r.a * k;
            r.c = (r.b * r.b - d) / (4 * r.a);
        } else if (r.a > r.c) {
            std::swap(r.a, r.c);
            r.b = -r.b;
        } else {
            r.b = -r.b;
        }
    }
    return r;
}

QuadForm compose(const QuadForm& f, const QuadForm& g)
{
    check_definite(f);
    check_definite(g);
    if (f.discriminant() != g.discriminant())
        throw ValidationError("composition of forms with different discriminants");
    QuadForm f1 = f, f2 = g;
    if (f1.a > f2.a)
        std::swap(f1, f2);
    const Integer s = (f1.b + f2.b) / 2;
    const Integer n = f2.b - s;
    Integer y1, d;
    if (f2.a % f1.a == 0) {
        y1 = 0;
        d = f1.a;
    } else {
        Integer u, v;
        d = gcdext(u, v, f2.a, f1.a);
        y1 = u;
    }
    Integer x2, y2, d1;
    if (s % d == 0) {
        y2 = -1;
        x2 = 0;
        d1 = d;
    } else {
        d1 = gcdext(x2, y2, s, d);
        y2 = -y2;
    }
    const Integer v1 = f1.a / d1, v2 = f2.a / d1;
    const Integer r = floor_mod(y1 * y2 * n - x2 * f2.c, v1);
    QuadForm out;
    out.b = f2.b + 2 * v2 * r;
    out.a = v1 * v2;
    out.c = (f2.c * d1 + r * (f2.b + v2 * r)) / v1;
    return reduce(out);
}

QuadForm inverse(const QuadForm& f)
{
    return reduce({f.a, -f.b, f.c});
}

QuadForm principal_form(const Integer& d)
{
    check_discriminant(d);
    Integer b = floor_mod(d, 2);
    return {1, b, (b * b - d) / 4};
}

QuadForm prime_form(const Integer& d, long p)
{
    check_discriminant(d);
    const Integer four_p = 4 * Integer(p);
    for (long b = 0; b < 2 * p; ++b) {
        Integer bb = b;
        if (floor_mod(bb * bb - d, four_p) == 0)
            return reduce({p, bb, (bb * bb - d) / four_p});
    }
    throw ValidationError(std::to_string(p) + " is not represented by a form of discriminant " + d.get_str());
}

long form_order(const QuadForm& f)
{
    const QuadForm e = principal_form(f.discriminant());
    QuadForm x = reduce(f);
    long k = 1;
    for (; x != e; ++k)
        x = compose(x, f);
    return k;
}

std::vector<QuadForm> reduced_forms(const Integer& d)
{
    check_discriminant(d);
    std::vector<QuadForm> out;
    const Integer bound = -d;
    for (Integer a = 1; 3 * a * a <= bound; ++a)
        for (Integer b = -a + 1; b <= a; ++b) {
            Integer num = b * b - d;
            if (num % (4 * a) != 0)
                continue;
            QuadForm f{a, b, num / (4 * a)};
            if (f.is_reduced() && f.is_primitive())
                out.push_back(f);
        }
    std::sort(out.begin(), out.end());
    return out;
}

FormClassGroup form_class_group(const Integer& d)
{
    FormClassGroup g;
    g.discriminant = d;
    g.forms = reduced_forms(d);
    std::vector<Integer> orders;
    for (const auto& f : g.forms) {
        g.orders.push_back(form_order(f));
        orders.emplace_back(g.orders.back());
    }
    g.structure = lattice::structure_from_element_orders(orders);
    return g;
}

}  // namespace cmtorus::classfield
