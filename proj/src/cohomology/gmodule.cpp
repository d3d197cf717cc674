#include "cmtorus/cohomology/gmodule.hpp"

#include <algorithm>

#include "cmtorus/error.hpp"

namespace cmtorus::cohomology {

namespace {

// Diagonal relation orders when R is square diagonal with positive entries.
bool diagonal_orders(const Presentation& p, IntVector& d)
{
    const IntMatrix& r = p.relations;
    if (r.rows() != r.cols())
        return false;
    d.clear();
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j)
            if ((i == j && r(i, j) <= 0) || (i != j && r(i, j) != 0))
                return false;
    for (std::size_t i = 0; i < r.rows(); ++i)
        d.push_back(r(i, i));
    return true;
}

void reduce_rows(IntMatrix& m, const Presentation& p)
{
    IntVector d;
    if (p.relations.cols() == 0 || !diagonal_orders(p, d))
        return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), d[i].get_mpz_t());
}

bool congruent(const IntMatrix& a, const IntMatrix& b, const Presentation& p)
{
    if (p.relations.cols() == 0)
        return a == b;
    return lattice::lattice_contains(p.relations, a - b);
}

}  // namespace

GModule::GModule(FiniteGroup group, Presentation underlying, std::vector<IntMatrix> action)
    : group_(std::move(group)), underlying_(std::move(underlying)), action_(std::move(action))
{
    const std::size_t n = underlying_.generators;
    if (underlying_.relations.rows() != n)
        throw ValidationError("GModule: relation matrix does not match the generator count");
    if (action_.size() != group_.order())
        throw ValidationError("GModule: need one action matrix per group element");
    for (auto& a : action_) {
        if (a.rows() != n || a.cols() != n)
            throw ValidationError("GModule: action matrix has the wrong shape");
        reduce_rows(a, underlying_);
        if (!lattice::is_well_defined(a, underlying_, underlying_))
            throw ValidationError("GModule: action does not preserve the relations");
    }
    if (!congruent(action_[group_.identity()], IntMatrix::identity(n), underlying_))
        throw ValidationError("GModule: identity does not act trivially");
    // A_{gs} = A_g A_s for generators s extends to all products by induction.
    for (Element s : group_.generators())
        for (Element g = 0; g < group_.order(); ++g)
            if (!congruent(action_[group_.mul(g, s)], action_[g] * action_[s], underlying_))
                throw ValidationError("GModule: action is not a homomorphism");
}

GModule GModule::lattice(const FiniteGroup& g, std::vector<IntMatrix> action)
{
    const std::size_t n = action.empty() ? 0 : action.front().rows();
    return GModule(g, Presentation::free(n), std::move(action));
}

GModule GModule::from_generator_images(const FiniteGroup& g, const Presentation& underlying,
                                       const std::vector<Element>& gens, const std::vector<IntMatrix>& images)
{
    if (gens.size() != images.size())
        throw ValidationError("from_generator_images: generator and image counts differ");
    const std::size_t n = underlying.generators;
    std::vector<IntMatrix> action(g.order());
    std::vector<bool> known(g.order(), false);
    action[g.identity()] = IntMatrix::identity(n);
    known[g.identity()] = true;
    std::vector<Element> queue{g.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Element y = g.mul(queue[i], gens[k]);
            if (known[y])
                continue;
            action[y] = action[queue[i]] * images[k];
            reduce_rows(action[y], underlying);
            known[y] = true;
            queue.push_back(y);
        }
    if (queue.size() != g.order())
        throw ValidationError("from_generator_images: elements do not generate the group");
    return GModule(g, underlying, std::move(action));
}

GModule GModule::finite(const FiniteGroup& g, const std::vector<Integer>& orders, std::vector<IntMatrix> action)
{
    for (const Integer& d : orders)
        if (d <= 0)
            throw ValidationError("GModule::finite: orders must be positive");
    return GModule(g, Presentation{orders.size(), IntMatrix::diagonal(orders)}, std::move(action));
}

GModule GModule::trivial(const FiniteGroup& g, const Presentation& underlying)
{
    return GModule(g, underlying, std::vector<IntMatrix>(g.order(), IntMatrix::identity(underlying.generators)));
}

GModule GModule::sign(const FiniteGroup& g, const ElementSet& kernel)
{
    if (!g.is_subgroup(kernel) || (kernel.size() != g.order() && 2 * kernel.size() != g.order()))
        throw ValidationError("GModule::sign: kernel must be a subgroup of index 1 or 2");
    std::vector<IntMatrix> action;
    for (Element a = 0; a < g.order(); ++a)
        action.push_back(IntMatrix{{galois::contains(kernel, a) ? 1 : -1}});
    return lattice(g, std::move(action));
}

GModule GModule::regular(const FiniteGroup& g)
{
    const std::size_t n = g.order();
    std::vector<IntMatrix> action;
    for (Element a = 0; a < n; ++a) {
        IntMatrix m(n, n);
        for (Element h = 0; h < n; ++h)
            m(g.mul(a, h), h) = 1;
        action.push_back(std::move(m));
    }
    return lattice(g, std::move(action));
}

GModule GModule::permutation(const FiniteGroup& g, const ElementSet& h)
{
    std::vector<ElementSet> cosets = g.left_cosets(h);
    const std::size_t n = cosets.size();
    auto coset_of = [&](Element x) {
        for (std::size_t c = 0; c < n; ++c)
            if (galois::contains(cosets[c], x))
                return c;
        return n;
    };
    std::vector<IntMatrix> action;
    for (Element a = 0; a < g.order(); ++a) {
        IntMatrix m(n, n);
        for (std::size_t c = 0; c < n; ++c)
            m(coset_of(g.mul(a, cosets[c].front())), c) = 1;
        action.push_back(std::move(m));
    }
    return lattice(g, std::move(action));
}

IntMatrix GModule::norm() const
{
    IntMatrix n(generators(), generators());
    for (const auto& a : action_)
        n += a;
    return n;
}

GModule GModule::dual() const
{
    if (!is_lattice())
        throw ValidationError("GModule::dual: only lattices have a Z-dual here");
    std::vector<IntMatrix> action;
    for (Element g = 0; g < group_.order(); ++g)
        action.push_back(action_[group_.inverse(g)].transpose());
    return GModule(group_, underlying_, std::move(action));
}

GModule GModule::restrict_to(const galois::Subgroup& h) const
{
    std::vector<IntMatrix> action;
    for (Element x : h.embedding)
        action.push_back(action_.at(x));
    return GModule(h.group, underlying_, std::move(action));
}

GModule GModule::direct_sum(const GModule& other) const
{
    if (other.group_.table() != group_.table())
        throw ValidationError("GModule::direct_sum: modules over different groups");
    std::vector<IntMatrix> action;
    for (Element g = 0; g < group_.order(); ++g)
        action.push_back(lattice::block_diagonal({action_[g], other.action_[g]}));
    return GModule(group_, lattice::direct_sum({underlying_, other.underlying_}), std::move(action));
}

bool is_equivariant(const IntMatrix& phi, const GModule& a, const GModule& b)
{
    if (!lattice::is_well_defined(phi, a.underlying(), b.underlying()))
        return false;
    if (a.group().table() != b.group().table())
        return false;
    for (Element g = 0; g < a.group().order(); ++g)
        if (!congruent(phi * a.action(g), b.action(g) * phi, b.underlying()))
            return false;
    return true;
}

}  // namespace cmtorus::cohomology
