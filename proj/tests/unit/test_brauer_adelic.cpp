#include "doctest.h"

#include <numeric>
#include <random>

#include "../support/brauer_random.hpp"
#include "cmtorus/brauer/brauer.hpp"
#include "cmtorus/error.hpp"

using namespace cmtorus;
using namespace cmtorus::brauer;
using cohomology::GModule;
using cohomology::kInfinity;
using galois::make_cyclotomic_datum;
using galois::make_quadratic_datum;
using testing::random_element;

namespace {

const std::vector<FieldTag> kAllTags{FieldTag::rationals, FieldTag::k, FieldTag::kplus, FieldTag::kw,
                                     FieldTag::kw_plus};

/// Counts the elements of the local kernels with c Cor = 0 at each prime,
/// with and without the total-sum condition, by enumeration.
std::pair<long, long> brute_h1(const TorusH1Model& m)
{
    const std::size_t k = m.places.size();
    long adelic = 0, global = 0;
    std::vector<long> x(k, 0);
    while (true) {
        std::map<long, Rational> per_prime;
        Rational total = 0;
        for (std::size_t j = 0; j < k; ++j) {
            Rational v(x[j], m.kernel_orders[j]);
            per_prime[m.places[j].place.ell] += m.coefficient * v;
            total += v;
        }
        bool local = true;
        for (const auto& [ell, s] : per_prime)
            local = local && sgn(mod_one(s)) == 0;
        if (local) {
            ++adelic;
            if (sgn(mod_one(total)) == 0)
                ++global;
        }
        std::size_t j = 0;
        while (j < k && ++x[j] == m.kernel_orders[j])
            x[j++] = 0;
        if (j == k)
            break;
    }
    return {adelic, global};
}

long product_of(const std::vector<long>& v)
{
    return std::accumulate(v.begin(), v.end(), 1L, std::multiplies<>());
}

galois::TowerMap cyclotomic_tower(const CMDatum& small, const CMDatum& large)
{
    return galois::transition(small, large, galois::cyclotomic_surjection(small, large));
}

galois::TowerMap quadratic_tower(const CMDatum& small, const CMDatum& large)
{
    return galois::transition(small, large, galois::quadratic_in_cyclotomic_surjection(small, large));
}

}  // namespace

TEST_CASE("field tags and places")
{
    auto k = make_quadratic_datum(-1, 5, {3});
    CHECK(field_degree(k, FieldTag::rationals) == 1);
    CHECK(field_degree(k, FieldTag::k) == 2);
    CHECK(field_degree(k, FieldTag::kplus) == 1);
    CHECK(field_degree(k, FieldTag::kw) == 2);
    CHECK(is_subfield(k, FieldTag::rationals, FieldTag::k));
    CHECK_FALSE(is_subfield(k, FieldTag::k, FieldTag::rationals));
    for (FieldTag t : kAllTags)
        CHECK(field_tag_from_string(to_string(t)) == t);
    CHECK_THROWS_AS(field_tag_from_string("L"), ValidationError);

    CHECK(places_of(k, FieldTag::k, 5).size() == 2);
    CHECK(places_of(k, FieldTag::k, 3).size() == 1);
    auto inf = places_of(k, FieldTag::k, kInfinity);
    REQUIRE(inf.size() == 1);
    CHECK(inf[0].complex_place);
    CHECK(places_of(k, FieldTag::rationals, kInfinity)[0].real);
    CHECK_THROWS_AS(places_of(k, FieldTag::k, 7), ValidationError);
}

TEST_CASE("local degrees sum to the global degree")
{
    for (const auto& preset : galois::standard_presets()) {
        INFO(preset.name);
        const auto& k = preset.datum;
        for (const auto& row : local_degree_table(k)) {
            CHECK(row.total() == field_degree(k, row.field));
            // Over a Galois field all places over l have the same degree.
            if (row.field == FieldTag::k)
                for (long d : row.degrees)
                    CHECK(d == row.degrees.front());
        }
    }
}

TEST_CASE("restriction from Q to Q(i)")
{
    auto k = make_quadratic_datum(-1, 5, {3});
    BrauerElement q(k, FieldTag::rationals, {{{5, 0}, Rational(1, 2)}, {{3, 0}, Rational(-1, 2)}});
    CHECK(q.invariant({3, 0}) == Rational(1, 2));
    auto r = restriction(k, q, FieldTag::k);
    CHECK(r.invariant({5, 0}) == Rational(1, 2));
    CHECK(r.invariant({5, 1}) == Rational(1, 2));
    CHECK(r.invariant({3, 0}) == 0);
    CHECK(sgn(r.sum()) == 0);

    BrauerElement zero(k, FieldTag::rationals, {});
    CHECK(restriction(k, zero, FieldTag::k).is_zero());
    CHECK(restriction(k, q, FieldTag::rationals) == q);
    CHECK_THROWS_AS(restriction(k, r, FieldTag::rationals), ValidationError);
}

TEST_CASE("corestriction from Q(i) to Q")
{
    auto k = make_quadratic_datum(-1, 5, {3, 13});
    BrauerElement split(k, FieldTag::k, {{{13, 0}, Rational(1, 3)}, {{13, 1}, Rational(-1, 3)}});
    CHECK(corestriction(k, split, FieldTag::rationals).is_zero());

    BrauerElement inert(k, FieldTag::k, {{{3, 0}, Rational(1, 2)}, {{2, 0}, Rational(1, 2)}});
    auto c = corestriction(k, inert, FieldTag::rationals);
    CHECK(c.invariant({3, 0}) == Rational(1, 2));
    CHECK(c.invariant({2, 0}) == Rational(1, 2));

    CHECK(corestriction(k, BrauerElement(k, FieldTag::k, {}), FieldTag::rationals).is_zero());
    CHECK_THROWS_AS(corestriction(k, c, FieldTag::k), ValidationError);
}

TEST_CASE("Brauer elements are validated")
{
    auto k = make_quadratic_datum(-1, 5, {3});
    CHECK_THROWS_AS(BrauerElement(k, FieldTag::rationals, {{{5, 0}, Rational(1, 3)}}), ValidationError);
    CHECK_THROWS_AS(BrauerElement(k, FieldTag::rationals, {{{kInfinity, 0}, Rational(1, 3)}, {{5, 0}, Rational(2, 3)}}),
                    ValidationError);
    CHECK_THROWS_AS(BrauerElement(k, FieldTag::k, {{{kInfinity, 0}, Rational(1, 2)}, {{3, 0}, Rational(1, 2)}}),
                    ValidationError);
    CHECK_THROWS_AS(BrauerElement(k, FieldTag::k, {{{5, 2}, Rational(1, 2)}, {{3, 0}, Rational(1, 2)}}), ValidationError);
    CHECK_THROWS_AS(BrauerElement(k, FieldTag::rationals, {{{7, 0}, Rational(1, 2)}, {{3, 0}, Rational(1, 2)}}),
                    ValidationError);
    BrauerElement ok(k, FieldTag::rationals, {{{kInfinity, 0}, Rational(1, 2)}, {{5, 0}, Rational(3, 2)}});
    CHECK(ok.invariant({5, 0}) == Rational(1, 2));
    CHECK(multiply(k, ok, 2).is_zero());
}

TEST_CASE("corestriction after restriction is multiplication by the degree")
{
    std::mt19937 rng(20260419);
    const std::vector<std::pair<FieldTag, FieldTag>> pairs{{FieldTag::rationals, FieldTag::k},
                                                           {FieldTag::kplus, FieldTag::k},
                                                           {FieldTag::kw_plus, FieldTag::kw},
                                                           {FieldTag::rationals, FieldTag::kw_plus}};
    auto presets = galois::standard_presets();
    for (int trial = 0; trial < 100; ++trial) {
        const auto& k = presets[trial % presets.size()].datum;
        const auto& [f, e] = pairs[trial % pairs.size()];
        INFO(k.label(), " ", to_string(f), " -> ", to_string(e));
        BrauerElement x(k, f, random_element(k, f, rng));
        auto res = restriction(k, x, e);
        CHECK(sgn(res.sum()) == 0);
        auto back = corestriction(k, res, f);
        CHECK(back == multiply(k, x, field_degree(k, e) / field_degree(k, f)));
    }
}

TEST_CASE("restriction follows the local degree ratio")
{
    auto k = make_cyclotomic_datum(15, 19);
    InvariantMap q{{{19, 0}, Rational(1, 5)}};
    auto r = restrict_invariants(k, FieldTag::rationals, FieldTag::k, q);
    // 19 has residue degree 2 in Q(zeta_15): four places of degree 2.
    CHECK(r.size() == 4);
    for (const auto& [v, x] : r)
        CHECK(x == Rational(2, 5));
}

TEST_CASE("H1 models agree with enumeration")
{
    for (const auto& preset : galois::standard_presets()) {
        INFO(preset.name);
        const auto& k = preset.datum;
        for (TorusKind kind : {TorusKind::serre, TorusKind::weil}) {
            auto m = torus_h1_model(k, kind);
            if (m.degenerate) {
                CHECK(kind == TorusKind::weil);
                CHECK(k.iota_in_decomposition(k.p()));
                CHECK(m.global.is_trivial());
                continue;
            }
            CHECK(m.global.is_finite());
            CHECK(m.cokernel.torsion().size() <= 1);
            if (product_of(m.kernel_orders) > (1L << 16))
                continue;
            auto [adelic, global] = brute_h1(m);
            CHECK(*m.adelic.order() == adelic);
            CHECK(*m.global.order() == global);
            // Generators satisfy every condition of the global model.
            for (const auto& gen : m.generators) {
                std::map<long, Rational> per_prime;
                Rational total = 0;
                for (const auto& [v, x] : gen) {
                    per_prime[v.ell] += m.coefficient * x;
                    total += x;
                }
                for (const auto& [ell, s] : per_prime)
                    CHECK(sgn(mod_one(s)) == 0);
                CHECK(sgn(mod_one(total)) == 0);
            }
        }
    }
}

TEST_CASE("global H1 of the Serre torus maps isomorphically to the adelic side")
{
    for (const auto& preset : galois::standard_presets()) {
        INFO(preset.name);
        auto m = torus_h1_model(preset.datum, TorusKind::serre);
        CHECK(m.cokernel.is_trivial());
        CHECK(m.global == m.adelic);
    }
}

TEST_CASE("H1 model examples")
{
    auto qi = make_quadratic_datum(-1, 5);
    auto p = torus_h1_model(qi, TorusKind::weil);
    CHECK(p.global.is_trivial());
    CHECK(p.adelic.is_trivial());

    auto z15 = torus_h1_model(make_cyclotomic_datum(15, 19), TorusKind::weil);
    CHECK(z15.cokernel == AbGroupStructure::cyclic(2));

    auto inert = torus_h1_model(make_quadratic_datum(-1, 3), TorusKind::weil);
    CHECK(inert.degenerate);

    auto k = make_cyclotomic_datum(13, 3);
    CHECK_THROWS_AS(torus_h1_model(k, TorusKind::serre, {kInfinity, 3}), ValidationError);
    CHECK_THROWS_AS(torus_h1_model(k, TorusKind::serre, {3, 13}), ValidationError);
    CHECK_THROWS_AS(torus_h1_model(k, TorusKind::serre, {kInfinity, 3, 13, 7}), ValidationError);
}

TEST_CASE("H2 classes arise globally exactly when the sums glue")
{
    auto k = make_cyclotomic_datum(15, 19);
    // n(w) = 2: (s_K, s_Q) must be (2t, 2t).
    CHECK(h2_arises_globally(k, TorusKind::weil, {}, {}));
    CHECK(h2_arises_globally(k, TorusKind::weil, {{{19, 0}, Rational(1, 3)}}, {{{19, 0}, Rational(1, 3)}}));
    CHECK_FALSE(h2_arises_globally(k, TorusKind::weil, {{{19, 0}, Rational(1, 3)}}, {{{19, 0}, Rational(2, 3)}}));
    CHECK_FALSE(h2_arises_globally(k, TorusKind::weil, {}, {{{19, 0}, Rational(1, 2)}}));
    // c = 1: any pair with s_K = 2 s_Q.
    CHECK(h2_arises_globally(k, TorusKind::serre, {{{19, 0}, Rational(2, 3)}}, {{{19, 0}, Rational(1, 3)}}));
    CHECK(h2_arises_globally(k, TorusKind::serre, {}, {{{19, 0}, Rational(1, 2)}}));
    CHECK_FALSE(h2_arises_globally(k, TorusKind::serre, {{{19, 0}, Rational(1, 3)}}, {}));
    CHECK_THROWS_AS(h2_arises_globally(make_quadratic_datum(-1, 3), TorusKind::weil, {}, {}), ValidationError);
}

TEST_CASE("Hasse cokernel depends on the parity of the local degree")
{
    CHECK(hasse_cokernel_p(make_cyclotomic_datum(15, 19)).model == AbGroupStructure::cyclic(2));
    CHECK(hasse_cokernel_p(make_cyclotomic_datum(13, 3)).model.is_trivial());
    CHECK(hasse_cokernel_p(make_quadratic_datum(-1, 5)).model.is_trivial());
    CHECK(hasse_cokernel_p(make_quadratic_datum(-1, 3)).degenerate);

    for (const auto& preset : galois::standard_presets()) {
        INFO(preset.name);
        const auto& k = preset.datum;
        auto h = hasse_cokernel_p(k);
        if (h.degenerate) {
            CHECK(k.iota_in_decomposition(k.p()));
            continue;
        }
        CHECK(h.agree());
        CHECK(h.model.is_trivial() == (k.local_degree_p() % 2 == 1));
    }
}

TEST_CASE("transition vanishing on H1 models")
{
    auto even = transition_vanishing(quadratic_tower(make_quadratic_datum(-1, 5), make_cyclotomic_datum(20, 5)));
    CHECK(even.local_degree == 4);
    CHECK(even.vanishes);
    CHECK(even.agrees());

    auto z13 = make_cyclotomic_datum(13, 3);
    std::vector<Element> id(z13.group().order());
    std::iota(id.begin(), id.end(), Element{0});
    auto ident = transition_vanishing(galois::transition(z13, z13, id));
    CHECK_FALSE(ident.source_h1.is_trivial());
    CHECK_FALSE(ident.vanishes);
    CHECK(ident.agrees());

    auto odd = transition_vanishing(cyclotomic_tower(make_cyclotomic_datum(5, 31, {3}), make_cyclotomic_datum(15, 31)));
    CHECK(odd.local_degree == 1);
    CHECK_FALSE(odd.vanishes);

    auto two = transition_vanishing(cyclotomic_tower(make_cyclotomic_datum(5, 11, {3}), make_cyclotomic_datum(15, 11)));
    CHECK(two.local_degree == 2);
    CHECK(two.vanishes);
    CHECK(two.agrees());

    CHECK_THROWS_AS(transition_vanishing(quadratic_tower(make_quadratic_datum(-1, 3), make_cyclotomic_datum(20, 3))),
                    ValidationError);
    CHECK_THROWS_AS(transition_vanishing(cyclotomic_tower(make_cyclotomic_datum(5, 31), make_cyclotomic_datum(15, 31))),
                    ValidationError);
}

TEST_CASE("adelic sums of local cohomology")
{
    auto k = make_quadratic_datum(-1, 5, {3});
    auto gm = GModule::trivial_z(k.group());
    auto s = adelic_sum(k, gm, 2, {3, 5, kInfinity});
    REQUIRE(s.terms.size() == 3);
    CHECK(s.terms[0].second.structure == AbGroupStructure::cyclic(2));
    CHECK(s.terms[1].second.structure.is_trivial());
    CHECK(s.terms[2].second.structure == AbGroupStructure::cyclic(2));
    CHECK(s.total == AbGroupStructure::from_cyclic_orders({2, 2}));

    CHECK(adelic_sum(k, gm, 2, {}).total.is_trivial());
    CHECK(adelic_sum(k, gm, 1, {3, 5, kInfinity}).total.is_trivial());
    CHECK_THROWS_AS(adelic_sum(k, gm, 2, {5}, true), ValidationError);
    CHECK_NOTHROW(adelic_sum(k, gm, 1, {5}, true));
}
