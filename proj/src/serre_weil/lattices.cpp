#include "cmtorus/serre_weil/lattices.hpp"

#include <algorithm>
#include <numeric>

#include "cmtorus/error.hpp"
#include "cmtorus/lattice/normal_form.hpp"

namespace cmtorus::serre_weil {

namespace {

/// Matrix sending e_i to e_{perm[i]}, plus `fixed` trailing coordinates.
IntMatrix permutation_matrix(const std::vector<std::size_t>& perm, std::size_t fixed)
{
    const std::size_t n = perm.size() + fixed;
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < perm.size(); ++i)
        m(perm[i], i) = 1;
    for (std::size_t i = perm.size(); i < n; ++i)
        m(i, i) = 1;
    return m;
}

std::size_t coset_index(const std::vector<ElementSet>& cosets, Element a)
{
    for (std::size_t i = 0; i < cosets.size(); ++i)
        if (galois::contains(cosets[i], a))
            return i;
    throw ValidationError("element lies in no listed coset");
}

/// Action of G on Z^cosets x Z by left multiplication of cosets.
std::vector<IntMatrix> coset_action(const FiniteGroup& g, const std::vector<ElementSet>& cosets)
{
    std::vector<IntMatrix> out;
    for (Element h = 0; h < g.order(); ++h) {
        std::vector<std::size_t> perm(cosets.size());
        for (std::size_t i = 0; i < cosets.size(); ++i)
            perm[i] = coset_index(cosets, g.mul(h, cosets[i].front()));
        out.push_back(permutation_matrix(perm, 1));
    }
    return out;
}

bool is_surjective(const IntMatrix& m)
{
    return lattice::cokernel_structure(m).is_trivial();
}

Integer lcm_of_denominators(const std::vector<Rational>& v)
{
    Integer d = 1;
    for (const auto& x : v)
        d = lcm(d, Integer(x.get_den()));
    return d;
}

/// Basis coordinates of a functional given by its ambient row.
std::vector<Rational> restrict_functional(const std::vector<Rational>& ambient, const IntMatrix& basis)
{
    std::vector<Rational> out(basis.cols());
    for (std::size_t j = 0; j < basis.cols(); ++j)
        for (std::size_t i = 0; i < basis.rows(); ++i)
            out[j] += ambient[i] * Rational(basis(i, j));
    return out;
}

}  // namespace

IntVector EmbeddedLattice::coordinates(const IntVector& ambient_vector) const
{
    auto c = lattice::solve_integer(basis, ambient_vector);
    if (!c)
        throw ValidationError("vector is not in the lattice");
    return *c;
}

EmbeddedLattice make_embedded(const FiniteGroup& g, IntMatrix basis, std::vector<IntMatrix> ambient_action)
{
    std::vector<IntMatrix> action;
    for (const auto& a : ambient_action) {
        auto m = lattice::solve_integer(basis, a * basis);
        if (!m)
            throw ValidationError("sublattice is not stable under the group");
        action.push_back(std::move(*m));
    }
    if (basis.cols() == 0)
        action.assign(g.order(), IntMatrix(0, 0));
    GModule module = GModule::lattice(g, std::move(action));
    return EmbeddedLattice{std::move(basis), std::move(ambient_action), std::move(module)};
}

SequenceCheck check_short_exact(const IntMatrix& f, const IntMatrix& g)
{
    SequenceCheck s;
    s.injective = lattice::rank(f) == f.cols();
    s.exact_middle = lattice::is_exact_at(f, g);
    s.surjective = is_surjective(g);
    return s;
}

IntMatrix SerreLattice::weight_row() const
{
    return lattice.basis.rows_range(lattice.basis.rows() - 1, lattice.basis.rows());
}

IntMatrix WeilLattice::weight_row() const
{
    return lattice.basis.rows_range(lattice.basis.rows() - 1, lattice.basis.rows());
}

SerreLattice serre_character_lattice(const CMDatum& datum)
{
    const FiniteGroup& g = datum.group();
    const std::size_t n = g.order();
    const Element iota = datum.iota();

    std::vector<std::pair<Element, Element>> orbits;
    for (Element s = 0; s < n; ++s) {
        Element t = g.mul(iota, s);
        if (s < t)
            orbits.emplace_back(s, t);
    }

    // Basis: e_s - e_{iota s} per orbit, and the CM type supported on the
    // orbit representatives, of weight 1.
    IntMatrix basis(n + 1, orbits.size() + 1);
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        basis(orbits[k].first, k) = 1;
        basis(orbits[k].second, k) = -1;
        basis(orbits[k].first, orbits.size()) = 1;
    }
    basis(n, orbits.size()) = 1;

    IntMatrix to_kplus(orbits.size(), n + 1);
    for (std::size_t k = 0; k < orbits.size(); ++k) {
        to_kplus(k, orbits[k].first) = 1;
        to_kplus(k, orbits[k].second) = 1;
        to_kplus(k, n) = -1;
    }

    std::vector<IntMatrix> action;
    for (Element h = 0; h < n; ++h) {
        std::vector<std::size_t> perm(n);
        for (Element s = 0; s < n; ++s)
            perm[s] = g.mul(h, s);
        action.push_back(permutation_matrix(perm, 1));
    }

    SerreLattice out{make_embedded(g, basis, std::move(action)), std::move(orbits), to_kplus, {}, {}};
    out.character_sequence = check_short_exact(basis, to_kplus);
    out.torus_sequence = check_short_exact(to_kplus.transpose(), basis.transpose());
    return out;
}

WeilLattice weil_character_lattice(const CMDatum& datum)
{
    const FiniteGroup& g = datum.group();
    galois::PlaceSet ps = galois::places(datum, datum.p());
    const std::size_t nx = ps.x.size(), ny = ps.y.size();
    const long nplus = ps.local_degree_kplus;

    IntMatrix to_y(ny, nx + 1);
    for (std::size_t v = 0; v < nx; ++v)
        to_y(ps.x_to_y[v], v) = 1;
    for (std::size_t y = 0; y < ny; ++y)
        to_y(y, nx) = -nplus;

    IntMatrix basis = lattice::kernel_basis(to_y);
    std::size_t base = coset_index(ps.x, g.identity());
    bool degenerate = ps.iota_in_d;

    WeilLattice out{make_embedded(g, basis, coset_action(g, ps.x)), std::move(ps), base, nplus, to_y, {}, {},
                    degenerate};
    out.character_sequence = check_short_exact(basis, to_y);
    out.torus_sequence = check_short_exact(to_y.transpose(), basis.transpose());
    return out;
}

RhoMap rho_characters(const SerreLattice& serre, const WeilLattice& weil)
{
    const FiniteGroup& g = serre.lattice.module.group();
    const std::size_t n = g.order();
    const auto& ps = weil.places;
    const std::size_t nx = ps.x.size();

    RhoMap r;
    r.ambient = IntMatrix(nx + 1, n + 1);
    for (Element s = 0; s < n; ++s)
        r.ambient(coset_index(ps.x, s), s) = 1;
    r.ambient(nx, n) = 1;

    auto image = lattice::solve_integer(weil.lattice.basis, r.ambient * serre.lattice.basis);
    if (!image)
        throw ValidationError("rho: image of the Serre lattice is not inside W^K");
    r.lattice_map = std::move(*image);

    r.kplus_map = IntMatrix(ps.y.size(), serre.iota_orbits.size());
    for (std::size_t k = 0; k < serre.iota_orbits.size(); ++k)
        r.kplus_map(coset_index(ps.y, serre.iota_orbits[k].first), k) = 1;

    r.cokernel = lattice::cokernel_structure(r.lattice_map);
    r.surjective = r.cokernel.is_trivial();
    r.square_commutes = weil.to_y * r.ambient == r.kplus_map * serre.to_kplus;
    r.equivariant = cohomology::is_equivariant(r.lattice_map, serre.lattice.module, weil.lattice.module);
    return r;
}

RhoMap rho_characters(const CMDatum& datum)
{
    return rho_characters(serre_character_lattice(datum), weil_character_lattice(datum));
}

Integer Cocharacter::denominator() const
{
    return lcm_of_denominators(values);
}

Rational Cocharacter::pair(const IntVector& coords) const
{
    if (coords.size() != values.size())
        throw DimensionMismatch("cocharacter pairing: wrong number of coordinates");
    Rational s = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
        s += values[i] * Rational(coords[i]);
    return s;
}

CocharacterSet cocharacters(const CMDatum& datum)
{
    SerreLattice serre = serre_character_lattice(datum);
    WeilLattice weil = weil_character_lattice(datum);
    RhoMap rho = rho_characters(serre, weil);
    const FiniteGroup& g = datum.group();
    const std::size_t n = g.order(), nx = weil.places.x.size();
    const ElementSet& d = datum.at_p().decomposition;
    const Rational dsize(static_cast<long>(d.size()));

    std::vector<Rational> weight(n + 1), mu(n + 1), xp(n + 1);
    weight[n] = 1;
    mu[g.identity()] = 1;
    for (Element s : d)
        xp[s] = 1 / dsize;

    std::vector<Rational> weil_weight(nx + 1), weil_xp(nx + 1);
    weil_weight[nx] = 1;
    weil_xp[weil.base_place] = Rational(1) / Rational(datum.local_degree_p());

    CocharacterSet c;
    c.w_can = {"w_can", restrict_functional(weight, serre.lattice.basis)};
    c.mu_can = {"mu_can", restrict_functional(mu, serre.lattice.basis)};
    c.x_p = {"x_p", restrict_functional(xp, serre.lattice.basis)};
    c.x_inf = {"x_inf", c.w_can.values};
    c.x_p_weil = {"x_p", restrict_functional(weil_xp, weil.lattice.basis)};
    c.x_inf_weil = {"x_inf", restrict_functional(weil_weight, weil.lattice.basis)};

    c.x_inf_is_w_can = c.x_inf.values == c.w_can.values;
    c.x_p_denominator_divides = Integer(static_cast<long>(d.size())) % c.x_p.denominator() == 0;

    // (iota mu)(f) = mu(iota^-1 f).
    const IntMatrix& iota_inv = serre.lattice.module.action(g.inverse(datum.iota()));
    bool cm = true;
    for (std::size_t j = 0; j < serre.lattice.rank(); ++j) {
        IntVector e(serre.lattice.rank());
        e[j] = 1;
        cm = cm && c.mu_can.pair(e) + c.mu_can.pair(iota_inv * e) == c.w_can.pair(e);
    }
    c.cm_identity = cm;

    bool factor = true;
    for (std::size_t j = 0; j < serre.lattice.rank(); ++j) {
        IntVector e(serre.lattice.rank());
        e[j] = 1;
        IntVector image = rho.lattice_map * e;
        factor = factor && c.x_p_weil.pair(image) == c.x_p.pair(e) && c.x_inf_weil.pair(image) == c.x_inf.pair(e);
    }
    c.factor_through_rho = factor;
    return c;
}

cohomology::LocalClass weil_local_class(const CMDatum& datum, long ell)
{
    if (ell != cohomology::kInfinity && ell != datum.p())
        throw ValidationError("local classes of P^K live at p and at infinity");
    WeilLattice weil = weil_character_lattice(datum);
    CocharacterSet c = cocharacters(datum);
    const Cocharacter& x = ell == cohomology::kInfinity ? c.x_inf_weil : c.x_p_weil;
    return cohomology::pushforward_local_class(x.values, datum, ell, weil.lattice.module);
}

WeilTransition transition_weil(const galois::TowerMap& tower)
{
    const CMDatum& small = tower.small;
    const CMDatum& large = tower.large;
    WeilLattice w = weil_character_lattice(small);
    WeilLattice wl = weil_character_lattice(large);
    SerreLattice s = serre_character_lattice(small);
    SerreLattice sl = serre_character_lattice(large);
    const auto& surj = tower.surjection;
    const FiniteGroup& gl = large.group();

    WeilTransition t;
    t.local_degree = tower.local_degree_at_p;
    if (wl.norm_factor % w.norm_factor != 0)
        throw ValidationError("transition: local degrees of the real subfields do not divide");
    t.local_degree_plus = wl.norm_factor / w.norm_factor;

    const std::size_t nx = w.places.x.size(), nxl = wl.places.x.size();
    const std::size_t ny = w.places.y.size(), nyl = wl.places.y.size();
    t.a = IntMatrix(nxl + 1, nx + 1);
    for (std::size_t v = 0; v < nxl; ++v)
        t.a(v, coset_index(w.places.x, surj[wl.places.x[v].front()])) = t.local_degree;
    t.a(nxl, nx) = 1;
    t.c = IntMatrix(nyl, ny);
    for (std::size_t y = 0; y < nyl; ++y)
        t.c(y, coset_index(w.places.y, surj[wl.places.y[y].front()])) = t.local_degree_plus;

    auto image = lattice::solve_integer(wl.lattice.basis, t.a * w.lattice.basis);
    t.contained = image.has_value();
    if (image)
        t.lattice_map = std::move(*image);
    t.square_commutes = wl.to_y * t.a == t.c * w.to_y;

    // Inflation of Serre characters along the surjection.
    const std::size_t n = small.group().order(), nl = gl.order();
    IntMatrix inflate(nl + 1, n + 1);
    for (Element x = 0; x < nl; ++x)
        inflate(x, surj[x]) = 1;
    inflate(nl, n) = 1;
    auto serre_image = lattice::solve_integer(sl.lattice.basis, inflate * s.lattice.basis);
    if (!serre_image)
        throw ValidationError("transition: inflated Serre characters leave X*(S^K')");
    t.serre_map = std::move(*serre_image);

    if (t.contained) {
        bool eq = true;
        for (Element x : gl.generators())
            eq = eq && t.lattice_map * w.lattice.module.action(surj[x]) == wl.lattice.module.action(x) * t.lattice_map;
        t.equivariant = eq;
        RhoMap rho = rho_characters(s, w);
        RhoMap rhol = rho_characters(sl, wl);
        t.rho_compatible = rhol.lattice_map * t.serre_map == t.lattice_map * rho.lattice_map;
    }
    return t;
}

WeightSplit weight_split(const CMDatum& datum)
{
    WeilLattice w = weil_character_lattice(datum);
    const std::size_t r = w.lattice.rank();
    IntMatrix wt = w.weight_row();
    const FiniteGroup& g = datum.group();

    WeightSplit out;
    out.weight_zero = lattice::kernel_basis(wt);
    Integer gen = 0;
    for (std::size_t j = 0; j < r; ++j)
        gen = gcd(gen, wt(0, j));
    out.weight_generator = gen;
    if (gen == 0) {
        out.complement = IntVector(r);
        out.note = "W^K has no characters of nonzero weight";
        return out;
    }
    auto e = lattice::solve_integer(wt, IntVector{gen});
    out.complement = *e;
    IntMatrix joined = hstack(out.weight_zero, IntMatrix::from_columns(r, {out.complement}));
    out.lattice_split = joined.is_square() && abs(lattice::determinant(joined)) == 1;

    // G-fixed characters: the kernel of the stacked g - 1 over generators.
    IntMatrix stacked(0, r);
    for (Element s : g.generators())
        stacked = vstack(stacked, w.lattice.module.action(s) - IntMatrix::identity(r));
    IntMatrix fixed = lattice::kernel_basis(stacked);
    Integer inv = 0;
    for (std::size_t j = 0; j < fixed.cols(); ++j)
        inv = gcd(inv, (wt * fixed)(0, j));
    out.invariant_weight = inv;
    out.equivariant_split = inv == gen;
    if (out.equivariant_split) {
        auto k = lattice::solve_integer(wt * fixed, IntVector{gen});
        out.complement = fixed * *k;
        out.note = "weight line spanned by a G-fixed character";
    } else {
        out.note = "splits as lattices only: the smallest weight of a G-fixed character is " + inv.get_str() +
                   ", the weights of W^K are the multiples of " + gen.get_str();
    }
    return out;
}

}  // namespace cmtorus::serre_weil
