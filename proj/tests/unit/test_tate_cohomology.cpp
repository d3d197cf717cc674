#include "doctest.h"

#include <cstdlib>
#include <numeric>

#include "../support/cochain_oracle.hpp"
#include "../support/small_groups.hpp"
#include "cmtorus/cohomology/tate.hpp"
#include "cmtorus/error.hpp"

using namespace cmtorus;
using namespace cmtorus::cohomology;
using lattice::AbGroupStructure;
using lattice::Presentation;
using lattice::Rational;
using testing::alternating4;
using testing::groups_up_to_12;

namespace {

AbGroupStructure cyc(long n) { return AbGroupStructure::cyclic(n); }
AbGroupStructure zero() { return AbGroupStructure::trivial(); }

Presentation diag(std::vector<long> orders)
{
    IntVector d(orders.begin(), orders.end());
    return {orders.size(), IntMatrix::diagonal(d)};
}

/// Module on `underlying` where generators outside `kernel` act by `m` and
/// those inside act trivially.
GModule by_character(const FiniteGroup& g, const Presentation& underlying, const ElementSet& kernel, const IntMatrix& m)
{
    std::vector<Element> gens = g.generators();
    std::vector<IntMatrix> imgs;
    for (Element s : gens)
        imgs.push_back(galois::contains(kernel, s) ? IntMatrix::identity(underlying.generators) : m);
    return GModule::from_generator_images(g, underlying, gens, imgs);
}

GModule cyclic_action(const FiniteGroup& g, const Presentation& underlying, const IntMatrix& m)
{
    return GModule::from_generator_images(g, underlying, {g.cyclic_generator()}, {m});
}

/// Abelianization from the commutator subgroup, by coset element orders.
AbGroupStructure abelianization(const FiniteGroup& g)
{
    std::vector<Element> comms;
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b)
            comms.push_back(g.mul(g.mul(a, b), g.mul(g.inverse(a), g.inverse(b))));
    ElementSet k = g.generated_subgroup(comms);
    std::vector<Integer> orders;
    for (const auto& coset : g.left_cosets(k)) {
        Element x = coset.front();
        long n = 1;
        Element acc = x;
        while (!galois::contains(k, acc)) {
            acc = g.mul(acc, x);
            ++n;
        }
        orders.push_back(n);
    }
    return lattice::structure_from_element_orders(orders);
}

struct ShortExact
{
    GModule a, b, c;
    IntMatrix i, pi;
};

std::vector<ShortExact> short_exact_cases()
{
    std::vector<ShortExact> out;
    auto c2 = FiniteGroup::cyclic(2), c4 = FiniteGroup::cyclic(4);
    auto v4 = FiniteGroup::direct_product(c2, c2);
    auto neg = IntMatrix{{-1}};
    auto swap = IntMatrix{{0, 1}, {1, 0}};

    out.push_back({GModule::trivial(c2, diag({2})), GModule::trivial(c2, diag({4})), GModule::trivial(c2, diag({2})),
                   IntMatrix{{2}}, IntMatrix{{1}}});
    auto c3 = FiniteGroup::cyclic(3);
    out.push_back({GModule::trivial(c3, diag({3})), GModule::trivial(c3, diag({9})), GModule::trivial(c3, diag({3})),
                   IntMatrix{{3}}, IntMatrix{{1}}});
    out.push_back({cyclic_action(c2, diag({3}), neg), cyclic_action(c2, diag({9}), neg), cyclic_action(c2, diag({3}), neg),
                   IntMatrix{{3}}, IntMatrix{{1}}});
    out.push_back({GModule::trivial(v4, diag({2})), GModule::trivial(v4, diag({4})), GModule::trivial(v4, diag({2})),
                   IntMatrix{{2}}, IntMatrix{{1}}});
    out.push_back({GModule::trivial(c4, diag({2})), cyclic_action(c4, diag({2, 2}), swap), GModule::trivial(c4, diag({2})),
                   IntMatrix{{1}, {1}}, IntMatrix{{1, 1}}});
    out.push_back({GModule::trivial(c2, diag({4})), cyclic_action(c2, diag({4, 4}), swap), cyclic_action(c2, diag({4}), neg),
                   IntMatrix{{1}, {1}}, IntMatrix{{-1, 1}}});
    out.push_back({GModule::trivial(c4, diag({2})), cyclic_action(c4, diag({4}), neg), GModule::trivial(c4, diag({2})),
                   IntMatrix{{2}}, IntMatrix{{1}}});
    ElementSet kernel{0, 1};
    out.push_back({by_character(v4, diag({3}), kernel, neg), by_character(v4, diag({9}), kernel, neg),
                   by_character(v4, diag({3}), kernel, neg), IntMatrix{{3}}, IntMatrix{{1}}});
    return out;
}

}  // namespace

TEST_CASE("tate cohomology of small standard modules")
{
    auto c2 = FiniteGroup::cyclic(2);
    auto z = GModule::trivial_z(c2);
    CHECK(tate_cohomology(z, 0) == cyc(2));
    CHECK(tate_cohomology(z, 1) == zero());
    CHECK(tate_cohomology(z, 2) == cyc(2));
    CHECK(tate_cohomology(z, -1) == zero());

    auto sign = GModule::sign(c2, {0});
    CHECK(tate_cohomology(sign, 0) == zero());
    CHECK(tate_cohomology(sign, 1) == cyc(2));
    CHECK(tate_cohomology(sign, -1) == cyc(2));

    auto t = FiniteGroup::trivial();
    for (int r = -2; r <= 3; ++r) {
        CHECK(tate_cohomology(GModule::trivial_z(t), r) == zero());
        CHECK(tate_cohomology(GModule::trivial(t, diag({5})), r) == zero());
    }
}

TEST_CASE("cyclic groups acting trivially on Z follow the closed form")
{
    // H^r(Z/n, Z) is Z/n for even r and 0 for odd r.
    for (std::size_t n = 1; n <= 8; ++n) {
        auto z = GModule::trivial_z(FiniteGroup::cyclic(n));
        for (int r = -2; r <= 3; ++r) {
            INFO("n=" << n << " r=" << r);
            CHECK(tate_cohomology(z, r) == ((r % 2 == 0) ? cyc(static_cast<long>(n)) : zero()));
        }
    }
}

TEST_CASE("periodicity for cyclic groups")
{
    auto c4 = FiniteGroup::cyclic(4);
    auto sign_of_quotient = cyclic_action(c4, Presentation::free(1), IntMatrix{{-1}});
    for (int r = -2; r <= 1; ++r) {
        CHECK(cyclic_periodicity_check(GModule::trivial_z(FiniteGroup::cyclic(3)), r));
        CHECK(cyclic_periodicity_check(sign_of_quotient, r));
        CHECK(cyclic_periodicity_check(GModule::regular(FiniteGroup::cyclic(5)), r));
        CHECK(cyclic_periodicity_check(cyclic_action(c4, diag({4, 4}), IntMatrix{{0, 1}, {1, 0}}), r));
    }
    CHECK(tate_cohomology(sign_of_quotient, 0) == zero());
    CHECK(tate_cohomology(sign_of_quotient, 1) == cyc(2));
    CHECK_THROWS_AS(cyclic_periodicity_check(GModule::trivial_z(FiniteGroup::quaternion()), 0), ValidationError);
}

TEST_CASE("the three resolutions give the same groups")
{
    for (std::size_t n = 2; n <= 5; ++n) {
        auto g = FiniteGroup::cyclic(n);
        std::vector<GModule> mods{GModule::trivial_z(g), GModule::regular(g)};
        if (n % 2 == 0)
            mods.push_back(cyclic_action(g, diag({4}), IntMatrix{{-1}}));
        if (n % 3 == 0)
            mods.push_back(cyclic_action(g, Presentation::free(2), IntMatrix{{0, -1}, {1, -1}}));
        for (const auto& m : mods)
            for (int r = -2; r <= 3; ++r) {
                INFO("n=" << n << " r=" << r);
                auto periodic = tate_cohomology(m, r, ResolutionKind::periodic);
                CHECK(tate_cohomology(m, r, ResolutionKind::bar) == periodic);
                CHECK(tate_cohomology(m, r, ResolutionKind::computed) == periodic);
            }
    }
    auto v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    auto d3 = FiniteGroup::dihedral(3);
    for (const auto& g : {v4, d3})
        for (int r = -2; r <= 3; ++r) {
            auto m = GModule::trivial_z(g);
            CHECK(tate_cohomology(m, r, ResolutionKind::bar) == tate_cohomology(m, r, ResolutionKind::computed));
        }
}

TEST_CASE("computed resolutions are exact")
{
    for (const auto& g : groups_up_to_12()) {
        INFO(g.describe());
        CHECK(Resolution(g, ResolutionKind::computed, 4).verify());
    }
    CHECK(Resolution(FiniteGroup::cyclic(6), ResolutionKind::periodic, 5).verify());
    CHECK(Resolution(FiniteGroup::dihedral(3), ResolutionKind::bar, 3).verify());
}

TEST_CASE("trivial Z over non-cyclic groups")
{
    // H^2 = H^-2 = G^ab; H^3 is the Schur multiplier.
    auto c2 = FiniteGroup::cyclic(2);
    auto v4 = FiniteGroup::direct_product(c2, c2);
    auto c2c4 = FiniteGroup::direct_product(c2, FiniteGroup::cyclic(4));
    struct Case
    {
        FiniteGroup g;
        AbGroupStructure schur;
    };
    std::vector<Case> cases{{v4, cyc(2)},
                            {c2c4, cyc(2)},
                            {FiniteGroup::dihedral(3), zero()},
                            {FiniteGroup::dihedral(4), cyc(2)},
                            {FiniteGroup::quaternion(), zero()},
                            {alternating4(), cyc(2)}};
    for (const auto& c : cases) {
        INFO(c.g.describe());
        auto z = GModule::trivial_z(c.g);
        auto ab = abelianization(c.g);
        CHECK(tate_cohomology(z, 2) == ab);
        CHECK(tate_cohomology(z, -2) == ab);
        CHECK(tate_cohomology(z, 0) == cyc(static_cast<long>(c.g.order())));
        CHECK(tate_cohomology(z, 1) == zero());
        CHECK(tate_cohomology(z, -1) == zero());
        CHECK(tate_cohomology(z, 3) == c.schur);
    }
    CHECK(abelianization(FiniteGroup::dihedral(4)) == cyc(2).direct_sum(cyc(2)));
    CHECK(abelianization(FiniteGroup::quaternion()) == cyc(2).direct_sum(cyc(2)));
    CHECK(abelianization(FiniteGroup::dihedral(3)) == cyc(2));
}

TEST_CASE("induced modules are cohomologically trivial")
{
    for (const auto& g : groups_up_to_12()) {
        INFO(g.describe());
        auto m = GModule::regular(g);
        for (int r = -2; r <= 3; ++r)
            CHECK(tate_cohomology(m, r).is_trivial());
    }
}

TEST_CASE("permutation modules satisfy Shapiro's lemma")
{
    // Z[G/H] has the cohomology of Z over H.
    auto d4 = FiniteGroup::dihedral(4);
    ElementSet h{0, 1};
    auto m = GModule::permutation(d4, h);
    for (int r = -2; r <= 3; ++r)
        CHECK(tate_cohomology(m, r) == tate_cohomology(GModule::trivial_z(FiniteGroup::cyclic(2)), r));
}

TEST_CASE("ordinary cohomology agrees with cochain enumeration")
{
    auto c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3), c4 = FiniteGroup::cyclic(4);
    auto v4 = FiniteGroup::direct_product(c2, c2);
    std::vector<GModule> mods{
        GModule::trivial(c2, diag({4})),
        cyclic_action(c2, diag({4}), IntMatrix{{-1}}),
        cyclic_action(c4, diag({2, 2}), IntMatrix{{0, 1}, {1, 0}}),
        cyclic_action(c3, diag({2, 2}), IntMatrix{{0, 1}, {1, 1}}),
        GModule::trivial(v4, diag({2, 2})),
        by_character(v4, diag({3}), {0, 1}, IntMatrix{{-1}}),
        by_character(FiniteGroup::dihedral(3), diag({3}), {0, 2, 4}, IntMatrix{{-1}}),
    };
    for (const auto& m : mods)
        for (int r = 0; r <= 1; ++r) {
            INFO(m.group().describe() << " r=" << r);
            CHECK(group_cohomology(m, r) == testing::brute_cohomology(m.group(), m, r));
        }
}

TEST_CASE("herbrand quotient of finite modules is one")
{
    for (std::size_t n = 2; n <= 6; ++n) {
        auto g = FiniteGroup::cyclic(n);
        for (long d : {2L, 3L, 4L, 6L}) {
            std::vector<IntMatrix> acts{IntMatrix{{1}}, IntMatrix{{-1}}};
            for (const auto& a : acts) {
                if (n % 2 == 1 && sgn(a(0, 0)) < 0)
                    continue;
                auto m = cyclic_action(g, diag({d}), a);
                CHECK(tate_cohomology(m, 0).order() == tate_cohomology(m, 1).order());
            }
        }
    }
}

TEST_CASE("hypercohomology matches enumeration")
{
    for (const auto& c : short_exact_cases()) {
        CrossedModule cm(c.a, c.b, c.i);
        for (int r = 0; r <= 2; ++r) {
            INFO(c.b.group().describe() << " r=" << r);
            CHECK(hyper_h(cm, r) == testing::brute_hyper(c.b.group(), c.a, c.b, c.i, r));
        }
    }
    // Non-injective maps: zero and a surjection.
    auto c2 = FiniteGroup::cyclic(2);
    auto a = GModule::trivial(c2, diag({4}));
    auto b = GModule::trivial(c2, diag({2}));
    for (const auto& rho : {IntMatrix{{0}}, IntMatrix{{1}}}) {
        CrossedModule cm(a, b, rho);
        for (int r = 0; r <= 2; ++r)
            CHECK(hyper_h(cm, r) == testing::brute_hyper(c2, a, b, rho, r));
    }
    CHECK(hyper_h(CrossedModule(a, b, IntMatrix{{1}}), 1) == cyc(2));
}

TEST_CASE("hypercohomology with zero source shifts the target")
{
    auto g = FiniteGroup::cyclic(3);
    auto b = GModule::trivial(g, diag({3}));
    auto zero_mod = GModule::trivial(g, diag({1}));
    CrossedModule cm(zero_mod, b, IntMatrix(1, 1));
    CHECK(hyper_h(cm, 0) == zero());
    CHECK(hyper_h(cm, 1) == group_cohomology(b, 0));
    CHECK(hyper_h(cm, 2) == group_cohomology(b, 1));
}

TEST_CASE("crossed module isomorphisms hold for short exact sequences")
{
    for (const auto& c : short_exact_cases()) {
        INFO(c.b.group().describe());
        auto rep = crossed_module_isos_check(c.a, c.b, c.c, c.i, c.pi);
        CHECK(rep.holds());
        CHECK(rep.h1 == rep.c_invariants);
        CHECK(rep.h2 == rep.h1_c);
        CHECK(rep.h1_c == testing::brute_cohomology(c.c.group(), c.c, 1));
    }
    auto c2 = FiniteGroup::cyclic(2);
    auto z2 = GModule::trivial(c2, diag({2}));
    auto z4 = GModule::trivial(c2, diag({4}));
    CHECK_THROWS_AS(crossed_module_isos_check(z2, z4, z2, IntMatrix{{2}}, IntMatrix{{2}}), ValidationError);
    CHECK_THROWS_AS(crossed_module_isos_check(z2, z4, z2, IntMatrix{{0}}, IntMatrix{{1}}), ValidationError);
    auto swapped = cyclic_action(c2, diag({2, 2}), IntMatrix{{0, 1}, {1, 0}});
    CHECK_THROWS_AS(CrossedModule(z2, swapped, IntMatrix{{1}, {0}}), ValidationError);
}

TEST_CASE("dual and restriction")
{
    auto c3 = FiniteGroup::cyclic(3);
    auto m = cyclic_action(c3, Presentation::free(2), IntMatrix{{0, -1}, {1, -1}});
    auto d = m.dual();
    for (Element g = 0; g < 3; ++g)
        CHECK(d.action(g) == m.action(c3.inverse(g)).transpose());
    CHECK(tate_cohomology(d, 0) == tate_cohomology(m, -1 + 1));
    auto c6 = FiniteGroup::cyclic(6);
    auto sub = galois::make_subgroup(c6, c6.generated_subgroup({2}));
    auto res = GModule::regular(c6).restrict_to(sub);
    CHECK(res.group().order() == 3);
    CHECK(tate_cohomology(res, 0).is_trivial());
    CHECK_THROWS_AS(GModule::trivial(c3, diag({2})).dual(), ValidationError);
}

TEST_CASE("local cohomology of tori")
{
    auto k = galois::make_cyclotomic_datum(13, 3);
    auto gm = GModule::trivial_z(k.group());
    auto h2 = local_torus_cohomology(k, 3, gm, 2);
    CHECK(h2.structure == cyc(3));
    CHECK_FALSE(h2.ramified);
    CHECK(local_torus_cohomology(k, 3, gm, 1).structure == zero());
    CHECK(local_torus_cohomology(k, kInfinity, gm, 2).structure == cyc(2));
    CHECK(local_torus_cohomology(k, 13, gm, 2).ramified);

    // Restriction of scalars has trivial local cohomology.
    auto perm = GModule::regular(k.group());
    CHECK(local_torus_cohomology(k, 3, perm, 2).structure.is_trivial());
    CHECK(local_torus_cohomology(k, 3, perm, 1).structure.is_trivial());
    CHECK_THROWS_AS(local_torus_cohomology(k, 3, gm, 3), ValidationError);

    auto qi = galois::make_quadratic_datum(-1, 5);
    CHECK(local_torus_cohomology(qi, 5, GModule::trivial_z(qi.group()), 2).structure == zero());
}

TEST_CASE("local classes of rational cocharacters")
{
    auto k = galois::make_cyclotomic_datum(13, 3);
    auto gm = GModule::trivial_z(k.group());
    auto one = pushforward_local_class({Rational(1)}, k, 3, gm);
    CHECK(one.group == cyc(3));
    CHECK(one.order == 3);
    CHECK(one.denominator == 1);
    auto third = pushforward_local_class({Rational(1, 3)}, k, 3, gm);
    CHECK(third.order == 3);
    CHECK(third.denominator == 3);
    auto three = pushforward_local_class({Rational(3)}, k, 3, gm);
    CHECK(three.order == 1);
    CHECK_THROWS_AS(pushforward_local_class({Rational(1, 2)}, k, 3, gm), ValidationError);
    CHECK_THROWS_AS(pushforward_local_class({Rational(1), Rational(0)}, k, 3, gm), Error);
}

TEST_CASE("degree and size limits")
{
    auto z = GModule::trivial_z(FiniteGroup::cyclic(2));
    CHECK_THROWS_AS(tate_cohomology(z, 4), ValidationError);
    CHECK_THROWS_AS(tate_cohomology(z, -3), ValidationError);
    CHECK_THROWS_AS(hyper_h(CrossedModule(z, z, IntMatrix{{1}}), 3), ValidationError);
    auto big = GModule::trivial_z(FiniteGroup::cyclic(max_group_order() + 1));
    CHECK_THROWS_AS(tate_cohomology(big, 0), BoundExceeded);
    CHECK_THROWS_AS(tate_cohomology(FiniteGroup::cyclic(3), z, 0), ValidationError);
}
