#include "cmtorus/cohomology/tate.hpp"

#include <cstdlib>
#include <map>
#include <mutex>

#include "cmtorus/error.hpp"

namespace cmtorus::cohomology {

std::size_t max_group_order()
{
    if (const char* env = std::getenv("CMTORUS_MAX_GROUP_ORDER")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return 64;
}

ResolutionKind default_resolution_kind(const FiniteGroup& g)
{
    return g.is_cyclic() ? ResolutionKind::periodic : ResolutionKind::computed;
}

std::shared_ptr<const Resolution> resolution_for(const FiniteGroup& g, ResolutionKind kind, std::size_t length)
{
    using Key = std::pair<std::vector<std::vector<Element>>, ResolutionKind>;
    static std::mutex mutex;
    static std::map<Key, std::shared_ptr<const Resolution>> cache;
    Key key{g.table(), kind};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end() && it->second->length() >= length)
            return it->second;
    }
    auto res = std::make_shared<const Resolution>(g, kind, length);
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[key];
    if (!slot || slot->length() < res->length())
        slot = res;
    return slot;
}

namespace {

void check_order(const FiniteGroup& g)
{
    if (g.order() > max_group_order())
        throw BoundExceeded("group order " + std::to_string(g.order()) + " exceeds the cap " +
                            std::to_string(max_group_order()) + " (set CMTORUS_MAX_GROUP_ORDER to raise it)");
}

void check_degree(int r, int lo, int hi)
{
    if (r < lo || r > hi)
        throw ValidationError("cohomological degree " + std::to_string(r) + " outside [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]");
}

void check_same_group(const Resolution& res, const GModule& m)
{
    if (res.group().table() != m.group().table())
        throw ValidationError("resolution and module are over different groups");
}

void add_block(IntMatrix& dst, std::size_t row0, std::size_t col0, const IntMatrix& a, const Integer& c)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (sgn(a(i, j)) != 0)
                dst(row0 + i, col0 + j) += c * a(i, j);
}

IntMatrix repeat_diagonal(const IntMatrix& a, std::size_t k)
{
    return lattice::block_diagonal(std::vector<IntMatrix>(k, a));
}

std::size_t needed_length(int r)
{
    return static_cast<std::size_t>(std::max(r + 1, 2));
}

}  // namespace

Presentation power(const Presentation& p, std::size_t k)
{
    return lattice::direct_sum(std::vector<Presentation>(k, p));
}

IntMatrix coboundary(const Resolution& res, const GModule& m, std::size_t n)
{
    check_same_group(res, m);
    const std::size_t order = res.group().order(), mg = m.generators();
    const auto& imgs = res.boundary_images(n + 1);
    IntMatrix d(res.rank(n + 1) * mg, res.rank(n) * mg);
    for (std::size_t j = 0; j < imgs.size(); ++j)
        for (std::size_t k = 0; k < imgs[j].size(); ++k)
            if (sgn(imgs[j][k]) != 0)
                add_block(d, j * mg, (k / order) * mg, m.action(k % order), imgs[j][k]);
    return d;
}

IntMatrix chain_boundary(const Resolution& res, const GModule& m, std::size_t n)
{
    check_same_group(res, m);
    const FiniteGroup& g = res.group();
    const std::size_t order = g.order(), mg = m.generators();
    const auto& imgs = res.boundary_images(n);
    IntMatrix d(res.rank(n - 1) * mg, res.rank(n) * mg);
    for (std::size_t j = 0; j < imgs.size(); ++j)
        for (std::size_t k = 0; k < imgs[j].size(); ++k)
            if (sgn(imgs[j][k]) != 0)
                add_block(d, (k / order) * mg, j * mg, m.action(g.inverse(k % order)), imgs[j][k]);
    return d;
}

Subquotient tate_subquotient(const GModule& m, int r, const Resolution& res)
{
    check_degree(r, -2, 3);
    check_same_group(res, m);
    if (res.length() < needed_length(r))
        throw ValidationError("resolution too short for degree " + std::to_string(r));
    const Presentation& u = m.underlying();
    const std::size_t mg = m.generators();
    if (r >= 1) {
        const std::size_t n = static_cast<std::size_t>(r);
        return lattice::homology_subquotient(coboundary(res, m, n - 1), coboundary(res, m, n),
                                             power(u, res.rank(n)), power(u, res.rank(n + 1)));
    }
    if (r == 0)
        return lattice::homology_subquotient(m.norm(), coboundary(res, m, 0), u, power(u, res.rank(1)));
    if (r == -1) {
        // I_G M is spanned by (s - 1) M for generators s.
        IntMatrix aug(mg, 0);
        for (Element s : m.group().generators())
            aug = lattice::hstack(aug, m.action(s) - IntMatrix::identity(mg));
        return lattice::homology_subquotient(aug, m.norm(), u, u);
    }
    return lattice::homology_subquotient(chain_boundary(res, m, 2), chain_boundary(res, m, 1), power(u, res.rank(1)),
                                         power(u, res.rank(0)));
}

AbGroupStructure tate_cohomology(const GModule& m, int r, ResolutionKind kind)
{
    check_order(m.group());
    check_degree(r, -2, 3);
    auto res = resolution_for(m.group(), kind, needed_length(r));
    return tate_subquotient(m, r, *res).structure();
}

AbGroupStructure tate_cohomology(const GModule& m, int r)
{
    return tate_cohomology(m, r, default_resolution_kind(m.group()));
}

AbGroupStructure tate_cohomology(const FiniteGroup& g, const GModule& m, int r)
{
    if (g.table() != m.group().table())
        throw ValidationError("tate_cohomology: module is over a different group");
    return tate_cohomology(m, r);
}

AbGroupStructure group_cohomology(const GModule& m, int r)
{
    check_degree(r, 0, 3);
    if (r > 0)
        return tate_cohomology(m, r);
    check_order(m.group());
    auto res = resolution_for(m.group(), default_resolution_kind(m.group()), 1);
    const Presentation& u = m.underlying();
    return lattice::homology(IntMatrix(m.generators(), 0), coboundary(*res, m, 0), u, power(u, res->rank(1)));
}

bool cyclic_periodicity_check(const GModule& m, int r)
{
    if (!m.group().is_cyclic())
        throw ValidationError("cyclic_periodicity_check: group is not cyclic");
    check_degree(r, -2, 1);
    return tate_cohomology(m, r) == tate_cohomology(m, r + 2);
}

CrossedModule::CrossedModule(GModule a_, GModule b_, IntMatrix rho_)
    : a(std::move(a_)), b(std::move(b_)), rho(std::move(rho_))
{
    if (rho.rows() != b.generators() || rho.cols() != a.generators())
        throw ValidationError("crossed module: rho has the wrong shape");
    if (!is_equivariant(rho, a, b))
        throw ValidationError("crossed module: rho is not an equivariant homomorphism");
}

Presentation total_presentation(const Resolution& res, const CrossedModule& cm, std::size_t n)
{
    Presentation pa = power(cm.a.underlying(), res.rank(n));
    if (n == 0)
        return pa;
    return lattice::direct_sum({pa, power(cm.b.underlying(), res.rank(n - 1))});
}

IntMatrix total_differential(const Resolution& res, const CrossedModule& cm, std::size_t n)
{
    const std::size_t ag = cm.a.generators(), bg = cm.b.generators();
    const std::size_t rows_a = res.rank(n + 1) * ag, rows_b = res.rank(n) * bg;
    const std::size_t cols_a = res.rank(n) * ag, cols_b = n == 0 ? 0 : res.rank(n - 1) * bg;
    IntMatrix d(rows_a + rows_b, cols_a + cols_b);
    add_block(d, 0, 0, coboundary(res, cm.a, n), 1);
    add_block(d, rows_a, 0, repeat_diagonal(cm.rho, res.rank(n)), 1);
    if (n > 0)
        add_block(d, rows_a, cols_a, coboundary(res, cm.b, n - 1), -1);
    return d;
}

Subquotient hyper_subquotient(const CrossedModule& cm, int r, const Resolution& res)
{
    check_degree(r, 0, 2);
    check_same_group(res, cm.a);
    const std::size_t n = static_cast<std::size_t>(r);
    Presentation middle = total_presentation(res, cm, n);
    IntMatrix f = n == 0 ? IntMatrix(middle.generators, 0) : total_differential(res, cm, n - 1);
    return lattice::homology_subquotient(f, total_differential(res, cm, n), middle, total_presentation(res, cm, n + 1));
}

AbGroupStructure hyper_h(const CrossedModule& cm, int r)
{
    check_order(cm.a.group());
    check_degree(r, 0, 2);
    auto res = resolution_for(cm.a.group(), default_resolution_kind(cm.a.group()), needed_length(r));
    return hyper_subquotient(cm, r, *res).structure();
}

CrossedModuleReport crossed_module_isos_check(const GModule& a, const GModule& b, const GModule& c, const IntMatrix& i,
                                              const IntMatrix& pi)
{
    if (!is_equivariant(i, a, b) || !is_equivariant(pi, b, c))
        throw ValidationError("crossed_module_isos_check: maps are not equivariant");
    const Presentation &ua = a.underlying(), &ub = b.underlying(), &uc = c.underlying();
    if (!lattice::kernel_structure(i, ua, ub).is_trivial() || !lattice::cokernel_structure(pi, uc).is_trivial() ||
        !lattice::is_exact_at(i, pi, ub, uc))
        throw ValidationError("crossed_module_isos_check: sequence is not short exact");
    check_order(a.group());

    CrossedModule cm(a, b, i);
    auto res = resolution_for(a.group(), default_resolution_kind(a.group()), 3);
    CrossedModuleReport rep;
    Subquotient s0 = hyper_subquotient(cm, 0, *res);
    Subquotient s1 = hyper_subquotient(cm, 1, *res);
    Subquotient s2 = hyper_subquotient(cm, 2, *res);
    rep.h0 = s0.structure();
    rep.h1 = s1.structure();
    rep.h2 = s2.structure();

    Subquotient c0 =
        lattice::homology_subquotient(IntMatrix(c.generators(), 0), coboundary(*res, c, 0), uc, power(uc, res->rank(1)));
    Subquotient c1 = tate_subquotient(c, 1, *res);
    rep.c_invariants = c0.structure();
    rep.h1_c = c1.structure();
    rep.h0_zero = rep.h0.is_trivial();

    // (a, b) -> pi(b) on Tot^n = C^n(A) + C^{n-1}(B).
    auto projection = [&](std::size_t n) {
        const std::size_t skip = res->rank(n) * a.generators();
        IntMatrix phi(res->rank(n - 1) * c.generators(), skip + res->rank(n - 1) * b.generators());
        add_block(phi, 0, skip, repeat_diagonal(pi, res->rank(n - 1)), 1);
        return phi;
    };
    auto iso = [](const Subquotient& src, const Subquotient& dst, const IntMatrix& phi) {
        IntMatrix m = lattice::induced_map(src, dst, phi);
        return lattice::is_isomorphism(m, Presentation::of(src.structure()), Presentation::of(dst.structure()));
    };
    rep.h1_iso = iso(s1, c0, projection(1));
    rep.h2_iso = iso(s2, c1, projection(2));
    return rep;
}

galois::Subgroup decomposition_subgroup(const galois::CMDatum& datum, long ell)
{
    if (ell == kInfinity)
        return galois::make_subgroup(datum.group(), datum.iota_subgroup());
    return galois::make_subgroup(datum.group(), datum.local(ell).decomposition);
}

namespace {

GModule local_cocharacters(const galois::CMDatum& datum, long ell, const GModule& charlattice)
{
    if (charlattice.group().table() != datum.group().table())
        throw ValidationError("character lattice is not over the datum's group");
    if (!charlattice.is_lattice())
        throw ValidationError("character lattice must be torsion-free");
    return charlattice.dual().restrict_to(decomposition_subgroup(datum, ell));
}

}  // namespace

LocalCohomology local_torus_cohomology(const galois::CMDatum& datum, long ell, const GModule& charlattice, int r)
{
    check_degree(r, 1, 2);
    LocalCohomology out;
    out.structure = tate_cohomology(local_cocharacters(datum, ell, charlattice), r - 2);
    if (ell != kInfinity && datum.local(ell).e > 1) {
        out.ramified = true;
        out.note = "ramified at " + std::to_string(ell) + " (e = " + std::to_string(datum.local(ell).e) +
                   "): decomposition-group model, exact only for unramified places";
    }
    return out;
}

LocalClass pushforward_local_class(const std::vector<Rational>& cochar, const galois::CMDatum& datum, long ell,
                                   const GModule& charlattice)
{
    GModule xs = local_cocharacters(datum, ell, charlattice);
    if (cochar.size() != xs.generators())
        throw DimensionMismatch("pushforward_local_class: cocharacter has the wrong length");
    LocalClass out;
    out.denominator = 1;
    for (const auto& q : cochar)
        out.denominator = lcm(out.denominator, q.get_den());
    const Integer order = static_cast<long>(xs.group().order());
    if (order % out.denominator != 0)
        throw ValidationError("pushforward_local_class: denominator does not divide |D|, pairing not integral");
    for (const auto& q : cochar) {
        Rational v = q * out.denominator;
        out.cleared.push_back(v.get_num());
    }
    for (Element g = 0; g < xs.group().order(); ++g)
        if (xs.action(g) * out.cleared != out.cleared)
            throw ValidationError("pushforward_local_class: cleared cocharacter is not fixed by D");
    auto res = resolution_for(xs.group(), default_resolution_kind(xs.group()), 2);
    Subquotient s = tate_subquotient(xs, 0, *res);
    out.group = s.structure();
    out.coordinates = s.classify(out.cleared);
    out.order = s.order_of(out.cleared);
    return out;
}

}  // namespace cmtorus::cohomology
