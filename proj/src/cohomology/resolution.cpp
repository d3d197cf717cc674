#include "cmtorus/cohomology/resolution.hpp"

#include <algorithm>
#include <numeric>

#include "cmtorus/error.hpp"
#include "cmtorus/lattice/normal_form.hpp"

namespace cmtorus::cohomology {

using lattice::Integer;

std::string to_string(ResolutionKind kind)
{
    switch (kind) {
    case ResolutionKind::bar:
        return "bar";
    case ResolutionKind::periodic:
        return "periodic";
    case ResolutionKind::computed:
        break;
    }
    return "computed";
}

Resolution::Resolution(const FiniteGroup& g, ResolutionKind kind, std::size_t length) : group_(g), kind_(kind)
{
    switch (kind) {
    case ResolutionKind::bar:
        build_bar(length);
        break;
    case ResolutionKind::periodic:
        build_periodic(length);
        break;
    case ResolutionKind::computed:
        build_computed(length);
        break;
    }
}

IntVector Resolution::translate(const IntVector& v, Element h) const
{
    const std::size_t n = group_.order();
    IntVector out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        if (sgn(v[k]) != 0)
            out[(k / n) * n + group_.mul(h, k % n)] = v[k];
    return out;
}

IntMatrix Resolution::z_matrix(std::size_t n) const
{
    const std::size_t order = group_.order();
    const auto& imgs = boundary_images(n);
    IntMatrix m(order * rank(n - 1), order * rank(n));
    for (std::size_t j = 0; j < imgs.size(); ++j)
        for (Element h = 0; h < order; ++h)
            m.set_column(j * order + h, translate(imgs[j], h));
    return m;
}

IntMatrix Resolution::augmentation() const
{
    IntMatrix e(1, group_.order());
    for (std::size_t k = 0; k < group_.order(); ++k)
        e(0, k) = 1;
    return e;
}

bool Resolution::verify() const
{
    if (length() == 0)
        return true;
    if (!(augmentation() * z_matrix(1)).is_zero())
        return false;
    if (!lattice::is_exact_at(z_matrix(1), augmentation()))
        return false;
    for (std::size_t n = 2; n <= length(); ++n)
        if (!lattice::is_exact_at(z_matrix(n), z_matrix(n - 1)))
            return false;
    return true;
}

void Resolution::build_periodic(std::size_t length)
{
    if (!group_.is_cyclic())
        throw ValidationError("periodic resolution needs a cyclic group");
    const std::size_t n = group_.order();
    const Element s = group_.cyclic_generator();
    ranks_.assign(length + 1, 1);
    for (std::size_t k = 1; k <= length; ++k) {
        IntVector v(n);
        if (k % 2 == 1) {
            v[s] += 1;
            v[group_.identity()] -= 1;
        } else {
            for (auto& x : v)
                x = 1;
        }
        images_.push_back({v});
    }
}

void Resolution::build_bar(std::size_t length)
{
    const std::size_t n = group_.order();
    std::vector<Element> nonid;
    for (Element a = 0; a < n; ++a)
        if (a != group_.identity())
            nonid.push_back(a);
    const std::size_t b = nonid.size();
    std::vector<std::size_t> pos(n, b);
    for (std::size_t i = 0; i < b; ++i)
        pos[nonid[i]] = i;

    ranks_.push_back(1);
    for (std::size_t k = 1; k <= length; ++k)
        ranks_.push_back(ranks_.back() * b);

    // Index of a tuple of non-identity elements in base b; b^len means degenerate.
    auto index_of = [&](const std::vector<Element>& t) -> std::size_t {
        std::size_t idx = 0;
        for (Element x : t) {
            if (x == group_.identity())
                return static_cast<std::size_t>(-1);
            idx = idx * b + pos[x];
        }
        return idx;
    };

    for (std::size_t k = 1; k <= length; ++k) {
        std::vector<IntVector> imgs;
        const std::size_t count = ranks_[k];
        std::vector<Element> t(k);
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::size_t r = idx;
            for (std::size_t i = k; i-- > 0;) {
                t[i] = nonid[r % b];
                r /= b;
            }
            IntVector v(n * ranks_[k - 1]);
            auto add = [&](const std::vector<Element>& face, Element coeff, long sign) {
                std::size_t fi = index_of(face);
                if (fi == static_cast<std::size_t>(-1))
                    return;
                v[fi * n + coeff] += sign;
            };
            add(std::vector<Element>(t.begin() + 1, t.end()), t[0], 1);
            for (std::size_t i = 0; i + 1 < k; ++i) {
                std::vector<Element> face;
                for (std::size_t j = 0; j < k; ++j) {
                    if (j == i) {
                        face.push_back(group_.mul(t[i], t[i + 1]));
                        ++j;
                    } else {
                        face.push_back(t[j]);
                    }
                }
                add(face, group_.identity(), (i % 2 == 0) ? -1 : 1);
            }
            add(std::vector<Element>(t.begin(), t.end() - 1), group_.identity(), (k % 2 == 0) ? 1 : -1);
            imgs.push_back(std::move(v));
        }
        images_.push_back(std::move(imgs));
    }
}

namespace {

Integer l1_norm(const IntVector& v)
{
    Integer s = 0;
    for (const auto& x : v)
        s += abs(x);
    return s;
}

}  // namespace

void Resolution::build_computed(std::size_t length)
{
    const std::size_t n = group_.order();
    ranks_.push_back(1);
    IntMatrix previous = augmentation();
    for (std::size_t k = 1; k <= length; ++k) {
        const std::size_t dim = n * ranks_.back();
        IntMatrix kernel = lattice::kernel_basis(previous);
        std::vector<IntVector> candidates;
        if (k == 1) {
            // s - 1 for generators s generate the augmentation ideal.
            for (Element s : group_.generators()) {
                IntVector v(dim);
                v[s] += 1;
                v[group_.identity()] -= 1;
                candidates.push_back(v);
            }
        }
        std::vector<IntVector> basis;
        for (std::size_t j = 0; j < kernel.cols(); ++j)
            basis.push_back(kernel.column(j));
        std::stable_sort(basis.begin(), basis.end(),
                         [](const IntVector& a, const IntVector& b) { return l1_norm(a) < l1_norm(b); });
        candidates.insert(candidates.end(), basis.begin(), basis.end());

        lattice::EchelonBasis span(dim);
        std::vector<IntVector> chosen;
        for (const auto& c : candidates) {
            if (span.contains(c))
                continue;
            chosen.push_back(c);
            for (Element h = 0; h < n; ++h)
                span.insert(translate(c, h));
        }
        ranks_.push_back(chosen.size());
        images_.push_back(std::move(chosen));
        if (k < length)
            previous = z_matrix(k);
    }
}

}  // namespace cmtorus::cohomology
