#include "cmtorus/brauer/brauer.hpp"

#include <algorithm>
#include <numeric>

#include "cmtorus/error.hpp"
#include "cmtorus/lattice/presented.hpp"

namespace cmtorus::brauer {

using cohomology::kInfinity;
using lattice::IntMatrix;
using lattice::Presentation;

namespace {

const std::vector<std::pair<FieldTag, std::string>>& tag_names()
{
    static const std::vector<std::pair<FieldTag, std::string>> names{
        {FieldTag::rationals, "Q"}, {FieldTag::k, "K"},         {FieldTag::kplus, "K+"},
        {FieldTag::kw, "K(w)"},     {FieldTag::kw_plus, "K(w)+"},
    };
    return names;
}

ElementSet decomposition_at(const CMDatum& datum, long ell)
{
    if (ell == kInfinity)
        return datum.iota_subgroup();
    return datum.local(ell).decomposition;
}

std::size_t place_containing(const std::vector<PlaceData>& places, Element a)
{
    for (std::size_t i = 0; i < places.size(); ++i)
        if (galois::contains(places[i].double_coset, a))
            return i;
    throw ValidationError("element lies over no listed place");
}

const PlaceData& lookup(const std::vector<PlaceData>& places, const BrauerPlace& v)
{
    if (v.index >= places.size())
        throw ValidationError("place index out of range");
    return places[v.index];
}

/// Places of a field, cached per prime for one call.
class PlaceCache
{
  public:
    PlaceCache(const CMDatum& datum, FieldTag tag) : datum_(datum), tag_(tag) {}

    const std::vector<PlaceData>& at(long ell)
    {
        auto it = cache_.find(ell);
        if (it == cache_.end())
            it = cache_.emplace(ell, places_of(datum_, tag_, ell)).first;
        return it->second;
    }

  private:
    const CMDatum& datum_;
    FieldTag tag_;
    std::map<long, std::vector<PlaceData>> cache_;
};

void add_invariant(InvariantMap& m, const BrauerPlace& v, const Rational& x)
{
    Rational s = mod_one(m[v] + x);
    if (sgn(s) == 0)
        m.erase(v);
    else
        m[v] = s;
}

Rational sum_mod_one(const InvariantMap& m)
{
    Rational s = 0;
    for (const auto& [v, x] : m)
        s += x;
    return mod_one(s);
}

std::vector<long> ramified_primes(const CMDatum& datum)
{
    std::vector<long> out;
    for (const auto& [ell, ld] : datum.local_data())
        if (ld.e > 1)
            out.push_back(ell);
    return out;
}

bool contains_prime(const std::vector<long>& v, long ell)
{
    return std::find(v.begin(), v.end(), ell) != v.end();
}

}  // namespace

std::string to_string(FieldTag tag)
{
    for (const auto& [t, name] : tag_names())
        if (t == tag)
            return name;
    return "?";
}

FieldTag field_tag_from_string(const std::string& name)
{
    for (const auto& [t, n] : tag_names())
        if (n == name)
            return t;
    throw ValidationError("unknown field tag: " + name);
}

ElementSet field_subgroup(const CMDatum& datum, FieldTag tag)
{
    const auto& g = datum.group();
    switch (tag) {
    case FieldTag::rationals: {
        ElementSet all(g.order());
        std::iota(all.begin(), all.end(), Element{0});
        return all;
    }
    case FieldTag::k:
        return {g.identity()};
    case FieldTag::kplus:
        return datum.iota_subgroup();
    case FieldTag::kw:
        return datum.at_p().decomposition;
    case FieldTag::kw_plus: {
        std::vector<Element> gens = datum.at_p().decomposition;
        gens.push_back(datum.iota());
        return g.generated_subgroup(gens);
    }
    }
    throw ValidationError("unknown field tag");
}

long field_degree(const CMDatum& datum, FieldTag tag)
{
    return static_cast<long>(datum.group().order() / field_subgroup(datum, tag).size());
}

bool is_subfield(const CMDatum& datum, FieldTag small, FieldTag big)
{
    ElementSet hs = field_subgroup(datum, small), hb = field_subgroup(datum, big);
    return std::includes(hs.begin(), hs.end(), hb.begin(), hb.end());
}

std::vector<PlaceData> places_of(const CMDatum& datum, FieldTag tag, long ell)
{
    const auto& g = datum.group();
    ElementSet h = field_subgroup(datum, tag);
    ElementSet d = decomposition_at(datum, ell);
    std::vector<bool> seen(g.order(), false);
    std::vector<PlaceData> out;
    for (Element s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        ElementSet dc;
        for (Element x : h)
            for (Element y : d)
                dc.push_back(g.mul(g.mul(x, s), y));
        std::sort(dc.begin(), dc.end());
        dc.erase(std::unique(dc.begin(), dc.end()), dc.end());
        for (Element x : dc)
            seen[x] = true;
        PlaceData p;
        p.place = {ell, out.size()};
        p.local_degree = static_cast<long>(dc.size() / h.size());
        p.real = ell == kInfinity && p.local_degree == 1;
        p.complex_place = ell == kInfinity && p.local_degree == 2;
        p.double_coset = std::move(dc);
        out.push_back(std::move(p));
    }
    return out;
}

long LocalDegreeRow::total() const
{
    return std::accumulate(degrees.begin(), degrees.end(), 0L);
}

std::vector<LocalDegreeRow> local_degree_table(const CMDatum& datum)
{
    std::vector<LocalDegreeRow> rows;
    for (long ell : default_probe(datum))
        for (const auto& [tag, name] : tag_names()) {
            LocalDegreeRow r{ell, tag, {}};
            for (const auto& p : places_of(datum, tag, ell))
                r.degrees.push_back(p.local_degree);
            rows.push_back(std::move(r));
        }
    return rows;
}

Rational mod_one(const Rational& x)
{
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    Rational r = x - Rational(fl);
    r.canonicalize();
    return r;
}

InvariantMap restrict_invariants(const CMDatum& datum, FieldTag from, FieldTag to, const InvariantMap& inv)
{
    if (!is_subfield(datum, from, to))
        throw ValidationError("restriction: " + to_string(to) + " does not contain " + to_string(from));
    PlaceCache small(datum, from), big(datum, to);
    InvariantMap out;
    for (const auto& [v, x] : inv) {
        const PlaceData& pv = lookup(small.at(v.ell), v);
        for (const auto& w : big.at(v.ell))
            if (galois::contains(pv.double_coset, w.double_coset.front()))
                add_invariant(out, w.place, x * Rational(w.local_degree / pv.local_degree));
    }
    return out;
}

InvariantMap corestrict_invariants(const CMDatum& datum, FieldTag from, FieldTag to, const InvariantMap& inv)
{
    if (!is_subfield(datum, to, from))
        throw ValidationError("corestriction: " + to_string(to) + " is not a subfield of " + to_string(from));
    PlaceCache big(datum, from), small(datum, to);
    InvariantMap out;
    for (const auto& [w, x] : inv) {
        const PlaceData& pw = lookup(big.at(w.ell), w);
        const auto& below = small.at(w.ell);
        add_invariant(out, below[place_containing(below, pw.double_coset.front())].place, x);
    }
    return out;
}

BrauerElement::BrauerElement(const CMDatum& datum, FieldTag field, const InvariantMap& invariants) : field_(field)
{
    PlaceCache cache(datum, field);
    for (const auto& [v, x] : invariants) {
        if (v.ell != kInfinity && !datum.has_prime(v.ell))
            throw ValidationError("Brauer element: no local data at " + std::to_string(v.ell));
        const PlaceData& p = lookup(cache.at(v.ell), v);
        Rational r = mod_one(x);
        if (p.complex_place && sgn(r) != 0)
            throw ValidationError("Brauer element: nonzero invariant at a complex place");
        if (p.real && sgn(mod_one(2 * r)) != 0)
            throw ValidationError("Brauer element: real invariant outside 1/2 Z/Z");
        add_invariant(inv_, v, r);
    }
    if (sgn(sum()) != 0)
        throw ValidationError("Brauer element: invariants do not sum to zero");
}

Rational BrauerElement::invariant(const BrauerPlace& v) const
{
    auto it = inv_.find(v);
    return it == inv_.end() ? Rational(0) : it->second;
}

Rational BrauerElement::sum() const
{
    return sum_mod_one(inv_);
}

BrauerElement restriction(const CMDatum& datum, const BrauerElement& elt, FieldTag to)
{
    return BrauerElement(datum, to, restrict_invariants(datum, elt.field(), to, elt.invariants()));
}

BrauerElement corestriction(const CMDatum& datum, const BrauerElement& elt, FieldTag to)
{
    return BrauerElement(datum, to, corestrict_invariants(datum, elt.field(), to, elt.invariants()));
}

BrauerElement multiply(const CMDatum& datum, const BrauerElement& elt, const Integer& k)
{
    InvariantMap m;
    for (const auto& [v, x] : elt.invariants())
        add_invariant(m, v, x * Rational(k));
    return BrauerElement(datum, elt.field(), m);
}

std::vector<long> default_probe(const CMDatum& datum)
{
    std::vector<long> out{kInfinity};
    for (const auto& [ell, ld] : datum.local_data())
        out.push_back(ell);
    return out;
}

TorusH1Model torus_h1_model(const CMDatum& datum, TorusKind kind)
{
    return torus_h1_model(datum, kind, default_probe(datum));
}

TorusH1Model torus_h1_model(const CMDatum& datum, TorusKind kind, const std::vector<long>& probe)
{
    TorusH1Model m;
    m.kind = kind;
    m.probe = probe;
    std::sort(m.probe.begin(), m.probe.end());
    m.probe.erase(std::unique(m.probe.begin(), m.probe.end()), m.probe.end());
    if (!contains_prime(m.probe, kInfinity) || !contains_prime(m.probe, datum.p()))
        throw ValidationError("probe set must contain p and infinity");
    for (long ell : ramified_primes(datum))
        if (!contains_prime(m.probe, ell))
            throw ValidationError("probe set misses the ramified prime " + std::to_string(ell));
    for (long ell : m.probe)
        if (ell != kInfinity && !datum.has_prime(ell))
            throw ValidationError("no local data at probe prime " + std::to_string(ell));

    if (kind == TorusKind::weil) {
        if (datum.iota_in_decomposition(datum.p())) {
            m.degenerate = true;
            m.small = m.big = FieldTag::kw;
            m.note = "iota in D(w): P^K = G_m and H^1(Q, G_m) = 0";
            return m;
        }
        m.small = FieldTag::kw_plus;
        m.big = FieldTag::kw;
        m.coefficient = datum.local_degree_p();
    }

    // Coordinates: places v where Res has kernel (1/e_v)Z/Z.
    for (long ell : m.probe) {
        auto small = places_of(datum, m.small, ell);
        auto big = places_of(datum, m.big, ell);
        for (const auto& v : small) {
            const auto& w = big[place_containing(big, v.double_coset.front())];
            long e = w.local_degree / v.local_degree;
            if (e > 1) {
                m.places.push_back(v);
                m.kernel_orders.push_back(e);
            }
        }
    }
    const std::size_t k = m.places.size();
    if (k == 0) {
        m.note = "restriction is injective at every probed place";
        return m;
    }
    long L = 1;
    for (long e : m.kernel_orders)
        L = std::lcm(L, e);

    // Rows: one condition c Cor = 0 per probed prime, then the total sum.
    const std::size_t np = m.probe.size();
    IntMatrix local(np, k), full(np + 1, k);
    for (std::size_t j = 0; j < k; ++j) {
        std::size_t row = std::find(m.probe.begin(), m.probe.end(), m.places[j].place.ell) - m.probe.begin();
        long unit = L / m.kernel_orders[j];
        local(row, j) = m.coefficient * unit;
        full(row, j) = m.coefficient * unit;
        full(np, j) = unit;
    }
    IntVector orders(m.kernel_orders.begin(), m.kernel_orders.end());
    Presentation source{k, IntMatrix::diagonal(orders)};
    Presentation target_local{np, IntMatrix::diagonal(IntVector(np, L))};
    Presentation target_full{np + 1, IntMatrix::diagonal(IntVector(np + 1, L))};
    m.adelic = lattice::kernel_structure(local, source, target_local);
    m.global = lattice::kernel_structure(full, source, target_full);
    Integer index = *m.adelic.order() / *m.global.order();
    m.cokernel = AbGroupStructure::cyclic(index);

    IntMatrix gens = lattice::kernel_lattice(full, source, target_full);
    for (std::size_t c = 0; c < gens.cols(); ++c) {
        InvariantMap inv;
        for (std::size_t j = 0; j < k; ++j)
            add_invariant(inv, m.places[j].place, Rational(gens(j, c)) / Rational(m.kernel_orders[j]));
        if (!inv.empty())
            m.generators.push_back(std::move(inv));
    }
    return m;
}

bool h2_arises_globally(const CMDatum& datum, TorusKind kind, const InvariantMap& big_field, const InvariantMap& rationals)
{
    long c = 1;
    if (kind == TorusKind::weil) {
        if (datum.iota_in_decomposition(datum.p()))
            throw ValidationError("iota in D(w): P^K = G_m, the Brauer sequence does not apply");
        c = datum.local_degree_p();
    }
    Rational sk = sum_mod_one(big_field), sq = sum_mod_one(rationals);
    // 2t = sk forces t in (1 / 2 den) Z.
    Integer den = lcm(Integer(sk.get_den()), Integer(sq.get_den()));
    Integer steps = 2 * den;
    for (Integer j = 0; j < steps; ++j) {
        Rational t = Rational(j) / Rational(steps);
        if (mod_one(2 * t) == sk && mod_one(c * t) == sq)
            return true;
    }
    return false;
}

HasseCokernel hasse_cokernel_p(const CMDatum& datum)
{
    HasseCokernel h;
    if (datum.iota_in_decomposition(datum.p())) {
        h.degenerate = true;
        h.note = "iota in D(w): P^K = G_m, no cokernel";
        return h;
    }
    h.snake = AbGroupStructure::cyclic(std::gcd(2L, datum.local_degree_p()));
    h.model = torus_h1_model(datum, TorusKind::weil).cokernel;
    return h;
}

TransitionVanishing transition_vanishing(const galois::TowerMap& tower)
{
    const CMDatum& small = tower.small;
    const CMDatum& large = tower.large;
    if (small.iota_in_decomposition(small.p()))
        throw ValidationError("transition vanishing needs iota outside D(w) of the smaller field");
    std::vector<long> probe = default_probe(large);
    for (long ell : probe)
        if (ell != kInfinity && !small.has_prime(ell))
            throw ValidationError("smaller datum has no local data at " + std::to_string(ell));

    TransitionVanishing t;
    t.local_degree = tower.local_degree_at_p;
    t.parity_rule = t.local_degree % 2 == 0;
    TorusH1Model model = torus_h1_model(large, TorusKind::weil, probe);
    t.source_h1 = model.global;

    // iota is outside D(w) at both levels, so [K'+_w : K+_w] = [K'_w : K_w].
    const Rational d(t.local_degree);
    PlaceCache big(large, FieldTag::kw_plus), below(small, FieldTag::kw_plus);
    for (const auto& gen : model.generators) {
        InvariantMap image;
        for (const auto& [v, x] : gen) {
            const PlaceData& pv = lookup(big.at(v.ell), v);
            const auto& us = below.at(v.ell);
            add_invariant(image, us[place_containing(us, tower.surjection[pv.double_coset.front()])].place, d * x);
        }
        if (!image.empty())
            ++t.nonzero_images;
    }
    t.vanishes = t.nonzero_images == 0;
    return t;
}

AdelicSum adelic_sum(const CMDatum& datum, const cohomology::GModule& charlattice, int r, const std::vector<long>& probe,
                     bool strict)
{
    AdelicSum out;
    for (long ell : probe) {
        auto term = cohomology::local_torus_cohomology(datum, ell, charlattice, r);
        out.total = out.total.direct_sum(term.structure);
        out.terms.emplace_back(ell, std::move(term));
    }
    if (strict)
        for (long ell : default_probe(datum)) {
            if (contains_prime(probe, ell))
                continue;
            if (!cohomology::local_torus_cohomology(datum, ell, charlattice, r).structure.is_trivial())
                throw ValidationError("probe set misses " + (ell == kInfinity ? std::string("infinity") : std::to_string(ell)) +
                                      ", which has a nonzero local term");
        }
    return out;
}

}  // namespace cmtorus::brauer
