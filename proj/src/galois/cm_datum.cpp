#include "cmtorus/galois/cm_datum.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cmtorus/error.hpp"

namespace cmtorus::galois {

bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<long> prime_divisors(long n)
{
    std::vector<long> out;
    n = std::labs(n);
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    if (n > 1)
        out.push_back(n);
    return out;
}

long multiplicative_order(long a, long m)
{
    if (m == 1)
        return 1;
    a %= m;
    if (a < 0)
        a += m;
    if (std::gcd(a, m) != 1)
        throw ValidationError("multiplicative_order: not a unit");
    long k = 1;
    for (long x = a; x != 1; x = (x * a) % m)
        ++k;
    return k;
}

long euler_phi(long n)
{
    long r = n;
    for (long q : prime_divisors(n))
        r = r / q * (q - 1);
    return r;
}

namespace {

long pow_mod(long b, long e, long m)
{
    long r = 1 % m;
    b %= m;
    if (b < 0)
        b += m;
    for (; e > 0; e >>= 1) {
        if (e & 1)
            r = r * b % m;
        b = b * b % m;
    }
    return r;
}

bool is_squarefree(long n)
{
    n = std::labs(n);
    for (long d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0)
            return false;
    return n != 0;
}

std::vector<long> merged_primes(long p, const std::vector<long>& ramified, const std::vector<long>& extra)
{
    std::set<long> s(ramified.begin(), ramified.end());
    s.insert(p);
    for (long l : extra) {
        if (!is_prime(l))
            throw ValidationError("local data requested at non-prime " + std::to_string(l));
        s.insert(l);
    }
    return {s.begin(), s.end()};
}

// Kronecker character of a fundamental discriminant at a positive integer
// coprime to it, by multiplicativity.
int kronecker_at(long disc, long a)
{
    int r = 1;
    for (long q = 2; a > 1; ++q)
        while (a % q == 0) {
            r *= kronecker_symbol(disc, q);
            a /= q;
        }
    return r;
}

}  // namespace

CMDatum::CMDatum(FiniteGroup group, Element iota, std::map<long, LocalData> local_data, long p, std::string label,
                 FieldKind kind, long parameter)
    : group_(std::move(group)),
      iota_(iota),
      local_(std::move(local_data)),
      p_(p),
      label_(std::move(label)),
      kind_(kind),
      parameter_(parameter)
{
    if (iota_ >= group_.order())
        throw ValidationError("iota is not a group element");
    if (iota_ == group_.identity())
        throw ValidationError("iota must be nontrivial (CM involution)");
    if (group_.mul(iota_, iota_) != group_.identity())
        throw ValidationError("iota is not an involution");
    if (!group_.is_central(iota_))
        throw ValidationError("iota is not central");
    for (auto& [ell, ld] : local_) {
        if (!is_prime(ell))
            throw ValidationError("local data key " + std::to_string(ell) + " is not prime");
        std::sort(ld.decomposition.begin(), ld.decomposition.end());
        if (!group_.is_subgroup(ld.decomposition))
            throw ValidationError("D_" + std::to_string(ell) + " is not a subgroup");
        if (ld.e < 1 || ld.f < 1 || static_cast<std::size_t>(ld.e * ld.f) != ld.decomposition.size())
            throw ValidationError("|D_" + std::to_string(ell) + "| != e*f");
    }
    if (!local_.count(p_))
        throw ValidationError("no local data at the distinguished prime " + std::to_string(p_));
}

const LocalData& CMDatum::local(long ell) const
{
    auto it = local_.find(ell);
    if (it == local_.end())
        throw ValidationError("no local data at " + std::to_string(ell) + " for " + label_);
    return it->second;
}

bool CMDatum::iota_in_decomposition(long ell) const
{
    return contains(local(ell).decomposition, iota_);
}

ElementSet CMDatum::iota_subgroup() const
{
    return group_.generated_subgroup({iota_});
}

PlaceSet places(const CMDatum& datum, long ell)
{
    const LocalData& ld = datum.local(ell);
    const FiniteGroup& g = datum.group();
    PlaceSet ps;
    ps.ell = ell;
    ps.e = ld.e;
    ps.f = ld.f;
    ps.iota_in_d = contains(ld.decomposition, datum.iota());
    ps.x = g.left_cosets(ld.decomposition);
    std::vector<Element> gens = ld.decomposition;
    gens.push_back(datum.iota());
    ElementSet d_iota = g.generated_subgroup(gens);
    ps.y = g.left_cosets(d_iota);
    for (const auto& xc : ps.x) {
        std::size_t k = 0;
        while (!contains(ps.y[k], xc.front()))
            ++k;
        ps.x_to_y.push_back(k);
    }
    ps.local_degree_k = static_cast<long>(ld.decomposition.size());
    ps.local_degree_kplus = static_cast<long>(d_iota.size() / 2);
    return ps;
}

std::string field_name(FieldKind kind, long parameter)
{
    switch (kind) {
    case FieldKind::cyclotomic:
        return parameter == 4 ? "Q(i)" : "Q(zeta_" + std::to_string(parameter) + ")";
    case FieldKind::quadratic:
        return parameter == -1 ? "Q(i)" : "Q(sqrt(" + std::to_string(parameter) + "))";
    case FieldKind::custom:
        break;
    }
    return "K";
}

CMDatum make_cyclotomic_datum(long n, long p, const std::vector<long>& extra_primes)
{
    if (n < 3)
        throw ValidationError("cyclotomic conductor must be >= 3");
    if (n % 4 == 2)
        throw ValidationError("conductor " + std::to_string(n) + " is 2 mod 4; use " + std::to_string(n / 2));
    if (!is_prime(p))
        throw ValidationError("p must be prime");
    FiniteGroup g = FiniteGroup::units_mod(n);
    std::map<long, LocalData> local;
    for (long ell : merged_primes(p, prime_divisors(n), extra_primes)) {
        LocalData ld;
        long m = n, la = 1;
        while (m % ell == 0) {
            m /= ell;
            la *= ell;
        }
        ld.e = euler_phi(la);
        ld.f = multiplicative_order(ell % m, m);
        // D_l = {x : x mod m lies in <l mod m>}.
        std::set<long> frob;
        for (long k = 0, x = 1 % m; k < ld.f; ++k, x = x * (ell % m) % m)
            frob.insert(x);
        for (Element a = 0; a < g.order(); ++a)
            if (frob.count(g.label(a) % m))
                ld.decomposition.push_back(a);
        local.emplace(ell, std::move(ld));
    }
    Element iota = g.by_label(n - 1);
    std::string label = field_name(FieldKind::cyclotomic, n) + ", p=" + std::to_string(p);
    return CMDatum(std::move(g), iota, std::move(local), p, label, FieldKind::cyclotomic, n);
}

long quadratic_discriminant(long d)
{
    long r = ((d % 4) + 4) % 4;
    return r == 1 ? d : 4 * d;
}

int kronecker_symbol(long disc, long ell)
{
    if (ell == 2) {
        if (disc % 2 == 0)
            return 0;
        long r = ((disc % 8) + 8) % 8;
        return (r == 1 || r == 7) ? 1 : -1;
    }
    long r = ((disc % ell) + ell) % ell;
    if (r == 0)
        return 0;
    return pow_mod(r, (ell - 1) / 2, ell) == 1 ? 1 : -1;
}

CMDatum make_quadratic_datum(long d, long p, const std::vector<long>& extra_primes)
{
    if (d >= 0)
        throw ValidationError("quadratic datum needs d < 0");
    if (!is_squarefree(d))
        throw ValidationError("d = " + std::to_string(d) + " is not squarefree");
    if (!is_prime(p))
        throw ValidationError("p must be prime");
    const long disc = quadratic_discriminant(d);
    FiniteGroup g({{0, 1}, {1, 0}}, {1, -1});
    std::map<long, LocalData> local;
    for (long ell : merged_primes(p, prime_divisors(disc), extra_primes)) {
        LocalData ld;
        switch (kronecker_symbol(disc, ell)) {
        case 1:
            ld.decomposition = {0};
            break;
        case -1:
            ld.decomposition = {0, 1};
            ld.f = 2;
            break;
        default:
            ld.decomposition = {0, 1};
            ld.e = 2;
        }
        local.emplace(ell, std::move(ld));
    }
    std::string label = field_name(FieldKind::quadratic, d) + ", p=" + std::to_string(p);
    return CMDatum(std::move(g), 1, std::move(local), p, label, FieldKind::quadratic, d);
}

TowerMap transition(const CMDatum& small, const CMDatum& large, std::vector<Element> surjection)
{
    const FiniteGroup& g = small.group();
    const FiniteGroup& h = large.group();
    if (small.p() != large.p())
        throw ValidationError("transition: the data use different distinguished primes");
    if (surjection.size() != h.order())
        throw ValidationError("transition: surjection has the wrong domain size");
    for (Element x : surjection)
        if (x >= g.order())
            throw ValidationError("transition: surjection value out of range");
    for (Element a = 0; a < h.order(); ++a)
        for (Element b = 0; b < h.order(); ++b)
            if (surjection[h.mul(a, b)] != g.mul(surjection[a], surjection[b]))
                throw ValidationError("transition: surjection is not a homomorphism");
    std::vector<Element> all(h.order());
    std::iota(all.begin(), all.end(), Element{0});
    if (image_of(all, surjection).size() != g.order())
        throw ValidationError("transition: map is not onto");
    if (surjection[large.iota()] != small.iota())
        throw ValidationError("transition: iota' does not map to iota");
    for (const auto& [ell, ld] : small.local_data()) {
        if (!large.has_prime(ell))
            continue;
        if (image_of(large.local(ell).decomposition, surjection) != ld.decomposition)
            throw ValidationError("transition: D'_" + std::to_string(ell) + " does not map onto D_" +
                                  std::to_string(ell));
    }
    if (!large.has_prime(small.p()))
        throw ValidationError("transition: larger datum lacks local data at p");
    const long n_small = small.local_degree_p(), n_large = large.local_degree_p();
    if (n_large % n_small != 0)
        throw ValidationError("transition: local degrees at p do not divide");
    const LocalData &ls = small.at_p(), &ll = large.at_p();
    if (ll.e % ls.e != 0 || ll.f % ls.f != 0)
        throw ValidationError("transition: e or f at p does not divide");
    return TowerMap{small, large, std::move(surjection), n_large / n_small};
}

std::vector<Element> cyclotomic_surjection(const CMDatum& small, const CMDatum& large)
{
    if (small.kind() != FieldKind::cyclotomic || large.kind() != FieldKind::cyclotomic)
        throw ValidationError("cyclotomic_surjection: both data must be cyclotomic");
    const long n = small.parameter(), n2 = large.parameter();
    if (n2 % n != 0)
        throw ValidationError("cyclotomic_surjection: conductors do not divide");
    std::vector<Element> s;
    for (Element a = 0; a < large.group().order(); ++a)
        s.push_back(small.group().by_label(large.group().label(a) % n));
    return s;
}

std::vector<Element> quadratic_in_cyclotomic_surjection(const CMDatum& small, const CMDatum& large)
{
    if (small.kind() != FieldKind::quadratic || large.kind() != FieldKind::cyclotomic)
        throw ValidationError("quadratic_in_cyclotomic_surjection: wrong field kinds");
    const long disc = quadratic_discriminant(small.parameter());
    if (large.parameter() % disc != 0)
        throw ValidationError("quadratic field is not inside this cyclotomic field");
    std::vector<Element> s;
    for (Element a = 0; a < large.group().order(); ++a)
        s.push_back(kronecker_at(disc, large.group().label(a)) == 1 ? small.group().identity() : small.iota());
    return s;
}

const std::vector<long>& preset_probe_primes()
{
    static const std::vector<long> primes{2, 3, 5, 7, 13, 19};
    return primes;
}

std::vector<Preset> standard_presets()
{
    std::vector<Preset> out;
    for (long p : {3L, 5L, 19L}) {
        for (long d : {-1L, -5L}) {
            CMDatum dat = make_quadratic_datum(d, p, preset_probe_primes());
            out.push_back({dat.label(), dat});
        }
        for (long n : {5L, 13L, 15L, 20L}) {
            CMDatum dat = make_cyclotomic_datum(n, p, preset_probe_primes());
            out.push_back({dat.label(), dat});
        }
    }
    return out;
}

namespace {

const char* kind_name(FieldKind k)
{
    switch (k) {
    case FieldKind::cyclotomic:
        return "cyclotomic";
    case FieldKind::quadratic:
        return "quadratic";
    case FieldKind::custom:
        break;
    }
    return "custom";
}

}  // namespace

nlohmann::json to_json(const CMDatum& datum)
{
    nlohmann::json j;
    j["label"] = datum.label();
    j["kind"] = kind_name(datum.kind());
    j["parameter"] = datum.parameter();
    j["p"] = datum.p();
    j["iota"] = datum.iota();
    j["group"] = datum.group().table();
    j["labels"] = datum.group().labels();
    nlohmann::json local = nlohmann::json::object();
    for (const auto& [ell, ld] : datum.local_data())
        local[std::to_string(ell)] = {{"decomposition", ld.decomposition}, {"e", ld.e}, {"f", ld.f}};
    j["local_data"] = local;
    return j;
}

CMDatum datum_from_json(const nlohmann::json& j)
{
    try {
        FiniteGroup g(j.at("group").get<std::vector<std::vector<Element>>>(),
                      j.value("labels", std::vector<long>{}));
        std::map<long, LocalData> local;
        for (const auto& [key, val] : j.at("local_data").items()) {
            LocalData ld;
            ld.decomposition = val.at("decomposition").get<ElementSet>();
            ld.e = val.at("e").get<long>();
            ld.f = val.at("f").get<long>();
            local.emplace(std::stol(key), std::move(ld));
        }
        FieldKind kind = FieldKind::custom;
        const std::string k = j.value("kind", std::string("custom"));
        if (k == "cyclotomic")
            kind = FieldKind::cyclotomic;
        else if (k == "quadratic")
            kind = FieldKind::quadratic;
        else if (k != "custom")
            throw ValidationError("unknown datum kind '" + k + "'");
        return CMDatum(std::move(g), j.at("iota").get<Element>(), std::move(local), j.at("p").get<long>(),
                       j.value("label", std::string("custom")), kind, j.value("parameter", 0L));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed datum JSON: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ValidationError("malformed datum JSON: local_data keys must be primes");
    }
}

}  // namespace cmtorus::galois
