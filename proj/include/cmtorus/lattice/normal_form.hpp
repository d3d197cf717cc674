#pragma once

#include <optional>
#include <vector>

#include "cmtorus/lattice/ab_group.hpp"
#include "cmtorus/lattice/int_matrix.hpp"

namespace cmtorus::lattice {

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
struct SmithForm
{
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    /// Number of nonzero diagonal entries.
    std::size_t rank = 0;

    IntVector invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// M * V = H where V is unimodular and H is in column echelon form: the
/// first `rank` columns are nonzero with strictly increasing pivot rows and
/// positive pivots; the remaining columns are zero.
struct ColumnEchelon
{
    IntMatrix H;
    IntMatrix V;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
};

ColumnEchelon column_echelon(const IntMatrix& m, bool with_transform = true);

/// Columns form a Z-basis of ker(M); saturated by construction.
IntMatrix kernel_basis(const IntMatrix& m);

/// Columns form a Z-basis of the column span of M.
IntMatrix image_basis(const IntMatrix& m);

/// Structure of Z^rows / im(M).
AbGroupStructure cokernel_structure(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// True iff g * f = 0 and im(f) = ker(g) as sublattices.
/// Throws DimensionMismatch when g.cols() != f.rows().
bool is_exact_at(const IntMatrix& f, const IntMatrix& g);

/// Integer solution x of A x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

/// Integer X with A X = B, if one exists (column by column).
std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b);

/// Lattice equality of the column spans of two generator matrices.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

/// Column span of `sub` contained in column span of `sup`.
bool lattice_contains(const IntMatrix& sup, const IntMatrix& sub);

/// The quotient span(big) / span(small) for span(small) inside span(big),
/// with element-level classification.
class Subquotient
{
  public:
    /// Throws ValidationError when span(small) is not inside span(big).
    Subquotient(const IntMatrix& big_generators, const IntMatrix& small_generators);

    const AbGroupStructure& structure() const { return structure_; }

    /// Coordinates of the class of v (v must lie in span(big)) with respect
    /// to the cyclic decomposition: torsion coordinates are reduced into
    /// [0, d_i), then the free coordinates follow.
    IntVector classify(const IntVector& v) const;

    /// Order of the class of v; 0 means infinite order.
    Integer order_of(const IntVector& v) const;

    bool is_zero_class(const IntVector& v) const;

    /// Representatives in the ambient lattice of the cyclic generators,
    /// torsion generators first.
    std::vector<IntVector> generators() const;

    const IntMatrix& basis() const { return basis_; }

  private:
    IntMatrix basis_;        // Z-basis of span(big), columns
    ColumnEchelon echelon_;  // of basis_
    SmithForm smith_;        // of the coordinate matrix of small in basis_
    std::vector<std::size_t> torsion_slots_;
    std::size_t nontrivial_begin_ = 0;
    AbGroupStructure structure_;

    IntVector coordinates(const IntVector& v) const;
};

/// Incrementally built Z-basis of a sublattice of Z^n in row echelon form.
/// Membership is decided by exact reduction against the pivots.
class EchelonBasis
{
  public:
    explicit EchelonBasis(std::size_t dimension) : dim_(dimension) {}

    std::size_t dimension() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }

    /// Adds v to the lattice; returns true if the lattice grew.
    bool insert(IntVector v);
    bool contains(IntVector v) const;
    /// Basis vectors as matrix columns.
    IntMatrix basis() const;

  private:
    std::size_t dim_;
    std::vector<IntVector> rows_;     // sorted by pivot position
    std::vector<std::size_t> pivot_;  // pivot column of each row

    static std::size_t leading(const IntVector& v);
    void reduce_above(std::size_t idx);
};

}  // namespace cmtorus::lattice
