#include "cmtorus/galois/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cmtorus/error.hpp"

namespace cmtorus::galois {

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table, std::vector<long> labels)
    : table_(std::move(table)), labels_(std::move(labels))
{
    const std::size_t n = table_.size();
    if (n == 0)
        throw ValidationError("group table is empty");
    for (const auto& row : table_) {
        if (row.size() != n)
            throw ValidationError("group table is not square");
        for (Element x : row)
            if (x >= n)
                throw ValidationError("group table entry out of range");
    }
    if (labels_.empty()) {
        labels_.resize(n);
        std::iota(labels_.begin(), labels_.end(), 0L);
    }
    if (labels_.size() != n)
        throw ValidationError("group labels do not match the order");

    bool found = false;
    for (Element e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (Element a = 0; a < n && ok; ++a)
            ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) {
            identity_ = e;
            found = true;
        }
    }
    if (!found)
        throw ValidationError("group table has no identity");

    inverse_.assign(n, n);
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b)
            if (table_[a][b] == identity_) {
                inverse_[a] = b;
                break;
            }
        if (inverse_[a] == n || table_[inverse_[a]][a] != identity_)
            throw ValidationError("group table: element without two-sided inverse");
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw ValidationError("group table is not associative");
}

FiniteGroup FiniteGroup::trivial()
{
    return FiniteGroup({{0}}, {1});
}

FiniteGroup FiniteGroup::cyclic(std::size_t n)
{
    if (n == 0)
        throw ValidationError("cyclic group of order 0");
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::units_mod(long n)
{
    if (n < 1)
        throw ValidationError("units_mod: modulus must be positive");
    std::vector<long> res;
    for (long a = 1; a <= std::max(1L, n - 1); ++a)
        if (std::gcd(a, n) == 1)
            res.push_back(a);
    const std::size_t k = res.size();
    std::vector<std::vector<Element>> t(k, std::vector<Element>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            long prod = n == 1 ? 1 : (res[i] * res[j]) % n;
            t[i][j] = std::lower_bound(res.begin(), res.end(), prod) - res.begin();
        }
    return FiniteGroup(std::move(t), std::move(res));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
    const std::size_t m = b.order(), n = a.order() * m;
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            t[x][y] = a.mul(x / m, y / m) * m + b.mul(x % m, y % m);
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n)
{
    // r^i s^j  <->  index 2i + j, with s r s = r^-1.
    const std::size_t k = 2 * n;
    std::vector<std::vector<Element>> t(k, std::vector<Element>(k));
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y) {
            std::size_t i1 = x / 2, j1 = x % 2, i2 = y / 2, j2 = y % 2;
            std::size_t i = j1 ? (i1 + n - i2) % n : (i1 + i2) % n;
            t[x][y] = 2 * i + (j1 ^ j2);
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::quaternion()
{
    // Elements 1, i, j, k, -1, -i, -j, -k as sign * unit.
    static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int u = x % 4, v = y % 4;
            int s = (x / 4 + y / 4 + unit_sign[u][v]) % 2;
            t[x][y] = static_cast<Element>(4 * s + unit_mul[u][v]);
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<std::size_t>>& gens)
{
    using Perm = std::vector<std::size_t>;
    const std::size_t deg = gens.empty() ? 0 : gens.front().size();
    for (const auto& g : gens) {
        Perm sorted = g;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted.size() != deg || sorted[i] != i)
                throw ValidationError("from_permutations: not a permutation of a common degree");
    }
    auto compose = [&](const Perm& a, const Perm& b) {
        Perm c(deg);
        for (std::size_t i = 0; i < deg; ++i)
            c[i] = a[b[i]];
        return c;
    };
    Perm id(deg);
    std::iota(id.begin(), id.end(), std::size_t{0});
    std::vector<Perm> elems{id};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
            Perm c = compose(elems[i], g);
            if (std::find(elems.begin(), elems.end(), c) == elems.end())
                elems.push_back(std::move(c));
        }
    const std::size_t n = elems.size();
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a][b] = std::find(elems.begin(), elems.end(), compose(elems[a], elems[b])) - elems.begin();
    return FiniteGroup(std::move(t));
}

Element FiniteGroup::power(Element a, long k) const
{
    if (k < 0)
        return power(inverse(a), -k);
    Element r = identity_;
    for (long i = 0; i < k; ++i)
        r = mul(r, a);
    return r;
}

std::size_t FiniteGroup::element_order(Element a) const
{
    std::size_t k = 1;
    for (Element x = a; x != identity_; x = mul(x, a))
        ++k;
    return k;
}

Element FiniteGroup::by_label(long label) const
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        throw ValidationError("no group element labelled " + std::to_string(label));
    return static_cast<Element>(it - labels_.begin());
}

bool FiniteGroup::is_abelian() const
{
    for (Element a = 0; a < order(); ++a)
        if (!is_central(a))
            return false;
    return true;
}

bool FiniteGroup::is_central(Element a) const
{
    for (Element b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a))
            return false;
    return true;
}

bool FiniteGroup::is_cyclic() const
{
    for (Element a = 0; a < order(); ++a)
        if (element_order(a) == order())
            return true;
    return false;
}

Element FiniteGroup::cyclic_generator() const
{
    for (Element a = 0; a < order(); ++a)
        if (element_order(a) == order())
            return a;
    throw ValidationError("group is not cyclic");
}

std::vector<Element> FiniteGroup::generators() const
{
    std::vector<Element> gens;
    ElementSet span{identity_};
    // Prefer elements of large order so cyclic groups get one generator.
    std::vector<Element> order_sorted(order());
    std::iota(order_sorted.begin(), order_sorted.end(), Element{0});
    std::stable_sort(order_sorted.begin(), order_sorted.end(),
                     [&](Element a, Element b) { return element_order(a) > element_order(b); });
    for (Element a : order_sorted) {
        if (span.size() == order())
            break;
        if (contains(span, a))
            continue;
        gens.push_back(a);
        span = generated_subgroup(gens);
    }
    return gens;
}

ElementSet FiniteGroup::generated_subgroup(const std::vector<Element>& gens) const
{
    std::vector<bool> in(order(), false);
    std::vector<Element> queue{identity_};
    in[identity_] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (Element g : gens) {
            Element x = mul(queue[i], g);
            if (!in[x]) {
                in[x] = true;
                queue.push_back(x);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

bool FiniteGroup::is_subgroup(const ElementSet& s) const
{
    if (s.empty() || !std::is_sorted(s.begin(), s.end()))
        return false;
    if (!contains(s, identity_))
        return false;
    for (Element a : s) {
        if (a >= order() || !contains(s, inverse(a)))
            return false;
        for (Element b : s)
            if (!contains(s, mul(a, b)))
                return false;
    }
    return true;
}

std::vector<ElementSet> FiniteGroup::left_cosets(const ElementSet& h) const
{
    if (!is_subgroup(h))
        throw ValidationError("left_cosets: not a subgroup");
    std::vector<bool> seen(order(), false);
    std::vector<ElementSet> out;
    for (Element x = 0; x < order(); ++x) {
        if (seen[x])
            continue;
        ElementSet c;
        for (Element y : h)
            c.push_back(mul(x, y));
        std::sort(c.begin(), c.end());
        for (Element y : c)
            seen[y] = true;
        out.push_back(std::move(c));
    }
    return out;
}

std::string FiniteGroup::describe() const
{
    std::ostringstream os;
    os << "group of order " << order();
    if (is_cyclic())
        os << " (cyclic)";
    else if (is_abelian())
        os << " (abelian)";
    return os.str();
}

Subgroup make_subgroup(const FiniteGroup& g, const ElementSet& h)
{
    if (!g.is_subgroup(h))
        throw ValidationError("make_subgroup: not a subgroup");
    const std::size_t k = h.size();
    std::vector<std::vector<Element>> t(k, std::vector<Element>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            t[i][j] = std::lower_bound(h.begin(), h.end(), g.mul(h[i], h[j])) - h.begin();
    std::vector<long> labels;
    for (Element a : h)
        labels.push_back(g.label(a));
    return {FiniteGroup(std::move(t), std::move(labels)), h};
}

bool contains(const ElementSet& s, Element a)
{
    return std::binary_search(s.begin(), s.end(), a);
}

ElementSet image_of(const ElementSet& s, const std::vector<Element>& map)
{
    ElementSet out;
    for (Element a : s)
        out.push_back(map.at(a));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace cmtorus::galois
