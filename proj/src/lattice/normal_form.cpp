#include "cmtorus/lattice/normal_form.hpp"

#include <algorithm>
#include <limits>

#include "cmtorus/error.hpp"

namespace cmtorus::lattice {

namespace {

int cmpabs(const Integer& a, const Integer& b)
{
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

// Quotient rounded toward -inf; the remainder a - q*b has |r| < |b|.
Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Smallest nonzero |A(i,j)| for i, j >= t; returns false when the block is zero.
bool find_min_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj)
{
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Integer& x = a(i, j);
            if (sgn(x) == 0)
                continue;
            if (!found || cmpabs(x, best) < 0) {
                best = abs(x);
                pi = i;
                pj = j;
                found = true;
                if (best == 1)
                    return true;
            }
        }
    return found;
}

}  // namespace

IntVector SmithForm::invariant_factors() const
{
    IntVector d;
    for (std::size_t i = 0; i < rank; ++i)
        d.push_back(D(i, i));
    return d;
}

SmithForm smith_normal_form(const IntMatrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithForm s{IntMatrix::identity(rows), m, IntMatrix::identity(cols), 0};
    IntMatrix& a = s.D;
    const std::size_t lim = std::min(rows, cols);
    std::size_t t = 0;
    for (; t < lim; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!find_min_pivot(a, t, pi, pj))
            break;
        a.swap_rows(t, pi);
        s.U.swap_rows(t, pi);
        a.swap_cols(t, pj);
        s.V.swap_cols(t, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (sgn(a(i, t)) == 0)
                    continue;
                Integer q = floor_div(a(i, t), a(t, t));
                a.add_row_multiple(i, t, -q);
                s.U.add_row_multiple(i, t, -q);
                if (sgn(a(i, t)) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (sgn(a(t, j)) == 0)
                    continue;
                Integer q = floor_div(a(t, j), a(t, t));
                a.add_col_multiple(j, t, -q);
                s.V.add_col_multiple(j, t, -q);
                if (sgn(a(t, j)) != 0)
                    clean = false;
            }
            if (!clean) {
                // Move the smallest remainder in row/column t to the pivot.
                std::size_t bi = t, bj = t;
                Integer best = abs(a(t, t));
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (sgn(a(i, t)) != 0 && cmpabs(a(i, t), best) < 0) {
                        best = abs(a(i, t));
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (sgn(a(t, j)) != 0 && cmpabs(a(t, j), best) < 0) {
                        best = abs(a(t, j));
                        bi = t;
                        bj = j;
                    }
                a.swap_rows(t, bi);
                s.U.swap_rows(t, bi);
                a.swap_cols(t, bj);
                s.V.swap_cols(t, bj);
                continue;
            }
            // Divisibility: the pivot must divide the remaining block.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (sgn(a(i, j)) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        a.add_row_multiple(t, i, 1);
                        s.U.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (sgn(a(t, t)) < 0) {
            a.negate_row(t);
            s.U.negate_row(t);
        }
    }
    s.rank = t;
    return s;
}

ColumnEchelon column_echelon(const IntMatrix& m, bool with_transform)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    ColumnEchelon e{m, with_transform ? IntMatrix::identity(cols) : IntMatrix(), 0, {}};
    IntMatrix& h = e.H;
    std::size_t c = 0;
    for (std::size_t i = 0; i < rows && c < cols; ++i) {
        for (;;) {
            // Smallest nonzero entry of row i among columns >= c becomes the pivot.
            std::size_t best = cols;
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(h(i, j)) != 0 && (best == cols || cmpabs(h(i, j), h(i, best)) < 0))
                    best = j;
            if (best == cols)
                break;
            h.swap_cols(c, best);
            if (with_transform)
                e.V.swap_cols(c, best);
            bool single = true;
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (sgn(h(i, j)) == 0)
                    continue;
                Integer q = floor_div(h(i, j), h(i, c));
                h.add_col_multiple(j, c, -q);
                if (with_transform)
                    e.V.add_col_multiple(j, c, -q);
                if (sgn(h(i, j)) != 0)
                    single = false;
            }
            if (single)
                break;
        }
        if (c < cols && sgn(h(i, c)) != 0) {
            if (sgn(h(i, c)) < 0) {
                h.negate_col(c);
                if (with_transform)
                    e.V.negate_col(c);
            }
            // Hermite reduction of earlier columns in the pivot row into [0, pivot).
            for (std::size_t k = 0; k < c; ++k) {
                if (sgn(h(i, k)) == 0)
                    continue;
                Integer q = floor_div(h(i, k), h(i, c));
                h.add_col_multiple(k, c, -q);
                if (with_transform)
                    e.V.add_col_multiple(k, c, -q);
            }
            e.pivot_rows.push_back(i);
            ++c;
        }
    }
    e.rank = c;
    return e;
}

IntMatrix kernel_basis(const IntMatrix& m)
{
    ColumnEchelon e = column_echelon(m, true);
    return e.V.columns_range(e.rank, m.cols());
}

IntMatrix image_basis(const IntMatrix& m)
{
    ColumnEchelon e = column_echelon(m, false);
    return e.H.columns_range(0, e.rank);
}

AbGroupStructure cokernel_structure(const IntMatrix& m)
{
    SmithForm s = smith_normal_form(m);
    return AbGroupStructure::from_cyclic_orders(s.invariant_factors(), m.rows() - s.rank);
}

std::size_t rank(const IntMatrix& m)
{
    return column_echelon(m, false).rank;
}

bool is_exact_at(const IntMatrix& f, const IntMatrix& g)
{
    if (g.cols() != f.rows())
        throw DimensionMismatch("is_exact_at: g.cols() must equal f.rows()");
    if (!(g * f).is_zero())
        return false;
    IntMatrix ker = kernel_basis(g);
    Subquotient q(ker, f);
    return q.structure().is_trivial();
}

namespace {

// Solve H y = b for H in column echelon form; returns nullopt if impossible.
std::optional<IntVector> echelon_solve(const ColumnEchelon& e, IntVector b)
{
    IntVector y(e.rank);
    for (std::size_t k = 0; k < e.rank; ++k) {
        const std::size_t r = e.pivot_rows[k];
        const Integer& piv = e.H(r, k);
        if (sgn(b[r]) == 0)
            continue;
        if (!mpz_divisible_p(b[r].get_mpz_t(), piv.get_mpz_t()))
            return std::nullopt;
        y[k] = b[r] / piv;
        for (std::size_t i = r; i < b.size(); ++i)
            if (sgn(e.H(i, k)) != 0)
                b[i] -= y[k] * e.H(i, k);
    }
    if (!is_zero(b))
        return std::nullopt;
    return y;
}

}  // namespace

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b)
{
    if (b.size() != a.rows())
        throw DimensionMismatch("solve_integer: right-hand side length mismatch");
    ColumnEchelon e = column_echelon(a, true);
    auto y = echelon_solve(e, b);
    if (!y)
        return std::nullopt;
    IntVector x(a.cols());
    for (std::size_t k = 0; k < e.rank; ++k)
        if (sgn((*y)[k]) != 0)
            for (std::size_t i = 0; i < a.cols(); ++i)
                x[i] += e.V(i, k) * (*y)[k];
    return x;
}

std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b)
{
    if (b.rows() != a.rows())
        throw DimensionMismatch("solve_integer: right-hand side row count mismatch");
    ColumnEchelon e = column_echelon(a, true);
    IntMatrix x(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        auto y = echelon_solve(e, b.column(j));
        if (!y)
            return std::nullopt;
        for (std::size_t k = 0; k < e.rank; ++k)
            if (sgn((*y)[k]) != 0)
                for (std::size_t i = 0; i < a.cols(); ++i)
                    x(i, j) += e.V(i, k) * (*y)[k];
    }
    return x;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows() != b.rows())
        throw DimensionMismatch("same_lattice: ambient dimensions differ");
    ColumnEchelon ea = column_echelon(a, false);
    ColumnEchelon eb = column_echelon(b, false);
    if (ea.rank != eb.rank)
        return false;
    return ea.H.columns_range(0, ea.rank) == eb.H.columns_range(0, eb.rank);
}

bool lattice_contains(const IntMatrix& sup, const IntMatrix& sub)
{
    if (sup.rows() != sub.rows())
        throw DimensionMismatch("lattice_contains: ambient dimensions differ");
    ColumnEchelon e = column_echelon(sup, false);
    for (std::size_t j = 0; j < sub.cols(); ++j)
        if (!echelon_solve(e, sub.column(j)))
            return false;
    return true;
}

Subquotient::Subquotient(const IntMatrix& big_generators, const IntMatrix& small_generators)
{
    if (big_generators.rows() != small_generators.rows())
        throw DimensionMismatch("Subquotient: ambient dimensions differ");
    basis_ = image_basis(big_generators);
    echelon_ = column_echelon(basis_, false);
    const std::size_t k = basis_.cols();
    IntMatrix coords(k, small_generators.cols());
    for (std::size_t j = 0; j < small_generators.cols(); ++j) {
        auto y = echelon_solve(echelon_, small_generators.column(j));
        if (!y)
            throw ValidationError("Subquotient: small lattice is not contained in big lattice");
        for (std::size_t i = 0; i < k; ++i)
            coords(i, j) = (*y)[i];
    }
    smith_ = smith_normal_form(coords);
    std::vector<Integer> orders;
    nontrivial_begin_ = smith_.rank;
    for (std::size_t i = 0; i < smith_.rank; ++i) {
        const Integer& d = smith_.D(i, i);
        if (d != 1) {
            torsion_slots_.push_back(i);
            orders.push_back(d);
        }
    }
    structure_ = AbGroupStructure::from_cyclic_orders(orders, k - smith_.rank);
}

IntVector Subquotient::coordinates(const IntVector& v) const
{
    auto y = echelon_solve(echelon_, v);
    if (!y)
        throw ValidationError("Subquotient: vector is not in the big lattice");
    return *y;
}

IntVector Subquotient::classify(const IntVector& v) const
{
    IntVector y = smith_.U * coordinates(v);
    IntVector out;
    for (std::size_t i : torsion_slots_) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), smith_.D(i, i).get_mpz_t());
        out.push_back(r);
    }
    for (std::size_t i = smith_.rank; i < y.size(); ++i)
        out.push_back(y[i]);
    return out;
}

Integer Subquotient::order_of(const IntVector& v) const
{
    IntVector y = smith_.U * coordinates(v);
    for (std::size_t i = smith_.rank; i < y.size(); ++i)
        if (sgn(y[i]) != 0)
            return 0;
    Integer ord = 1;
    for (std::size_t i : torsion_slots_) {
        const Integer& d = smith_.D(i, i);
        Integer g = gcd(y[i], d);
        ord = lcm(ord, d / g);
    }
    return ord;
}

bool Subquotient::is_zero_class(const IntVector& v) const
{
    return order_of(v) == 1;
}

std::vector<IntVector> Subquotient::generators() const
{
    // Generators are basis_ * U^{-1} e_i.
    const std::size_t k = basis_.cols();
    auto uinv = solve_integer(smith_.U, IntMatrix::identity(k));
    std::vector<IntVector> gens;
    auto push = [&](std::size_t i) { gens.push_back(basis_ * uinv->column(i)); };
    for (std::size_t i : torsion_slots_)
        push(i);
    for (std::size_t i = smith_.rank; i < k; ++i)
        push(i);
    return gens;
}

std::size_t EchelonBasis::leading(const IntVector& v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) != 0)
            return i;
    return v.size();
}

bool EchelonBasis::insert(IntVector v)
{
    if (v.size() != dim_)
        throw DimensionMismatch("EchelonBasis::insert: wrong dimension");
    bool changed = false;
    for (;;) {
        const std::size_t lv = leading(v);
        if (lv == dim_)
            return changed;
        auto it = std::lower_bound(pivot_.begin(), pivot_.end(), lv);
        const std::size_t idx = static_cast<std::size_t>(it - pivot_.begin());
        if (it == pivot_.end() || *it != lv) {
            if (sgn(v[lv]) < 0)
                for (auto& x : v)
                    x = -x;
            pivot_.insert(it, lv);
            rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
            reduce_above(idx);
            return true;
        }
        IntVector& r = rows_[idx];
        if (mpz_divisible_p(v[lv].get_mpz_t(), r[lv].get_mpz_t())) {
            Integer q = v[lv] / r[lv];
            for (std::size_t i = lv; i < dim_; ++i)
                if (sgn(r[i]) != 0)
                    v[i] -= q * r[i];
            continue;
        }
        Integer g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), r[lv].get_mpz_t(), v[lv].get_mpz_t());
        const Integer a = r[lv] / g, b = v[lv] / g;
        IntVector nr(dim_), nv(dim_);
        for (std::size_t i = lv; i < dim_; ++i) {
            nr[i] = s * r[i] + t * v[i];
            nv[i] = a * v[i] - b * r[i];
        }
        r = std::move(nr);
        v = std::move(nv);
        reduce_above(idx);
        changed = true;
    }
}

void EchelonBasis::reduce_above(std::size_t idx)
{
    const std::size_t p = pivot_[idx];
    const IntVector& r = rows_[idx];
    for (std::size_t k = 0; k < idx; ++k) {
        IntVector& u = rows_[k];
        if (sgn(u[p]) == 0)
            continue;
        Integer q = floor_div(u[p], r[p]);
        if (sgn(q) == 0)
            continue;
        for (std::size_t i = p; i < dim_; ++i)
            if (sgn(r[i]) != 0)
                u[i] -= q * r[i];
    }
}

bool EchelonBasis::contains(IntVector v) const
{
    if (v.size() != dim_)
        throw DimensionMismatch("EchelonBasis::contains: wrong dimension");
    for (;;) {
        const std::size_t lv = leading(v);
        if (lv == dim_)
            return true;
        auto it = std::lower_bound(pivot_.begin(), pivot_.end(), lv);
        if (it == pivot_.end() || *it != lv)
            return false;
        const IntVector& r = rows_[static_cast<std::size_t>(it - pivot_.begin())];
        if (!mpz_divisible_p(v[lv].get_mpz_t(), r[lv].get_mpz_t()))
            return false;
        Integer q = v[lv] / r[lv];
        for (std::size_t i = lv; i < dim_; ++i)
            if (sgn(r[i]) != 0)
                v[i] -= q * r[i];
    }
}

IntMatrix EchelonBasis::basis() const
{
    return IntMatrix::from_columns(dim_, rows_);
}

}  // namespace cmtorus::lattice
