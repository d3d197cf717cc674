#include "cmtorus/lattice/presented.hpp"

#include "cmtorus/error.hpp"

namespace cmtorus::lattice {

Presentation Presentation::of(const AbGroupStructure& g)
{
    const std::size_t t = g.torsion().size();
    Presentation p{t + g.free_rank(), IntMatrix(t + g.free_rank(), t)};
    for (std::size_t i = 0; i < t; ++i)
        p.relations(i, i) = g.torsion()[i];
    return p;
}

Presentation Presentation::cyclic(const Integer& n)
{
    if (n == 0)
        return free(1);
    Presentation p{1, IntMatrix(1, 1)};
    p.relations(0, 0) = n;
    return p;
}

bool Presentation::is_zero_element(const IntVector& v) const
{
    return solve_integer(relations, v).has_value();
}

Presentation direct_sum(const std::vector<Presentation>& parts)
{
    std::vector<IntMatrix> blocks;
    std::size_t n = 0;
    for (const auto& p : parts) {
        blocks.push_back(p.relations);
        n += p.generators;
    }
    return {n, block_diagonal(blocks)};
}

namespace {

void check_shape(const IntMatrix& map, const Presentation& source, const Presentation& target)
{
    if (map.cols() != source.generators || map.rows() != target.generators)
        throw DimensionMismatch("presented map: matrix shape does not match source/target");
}

}  // namespace

bool is_well_defined(const IntMatrix& map, const Presentation& source, const Presentation& target)
{
    check_shape(map, source, target);
    return lattice_contains(target.relations, map * source.relations);
}

IntMatrix kernel_lattice(const IntMatrix& map, const Presentation& source, const Presentation& target)
{
    check_shape(map, source, target);
    // Kernel of [map | -rel(target)], projected onto the first block.
    IntMatrix big = hstack(map, target.relations * Integer(-1));
    IntMatrix k = kernel_basis(big);
    return hstack(k.rows_range(0, source.generators), source.relations);
}

IntMatrix image_lattice(const IntMatrix& map, const Presentation& target)
{
    if (map.rows() != target.generators)
        throw DimensionMismatch("image_lattice: row count does not match target");
    return hstack(map, target.relations);
}

AbGroupStructure kernel_structure(const IntMatrix& map, const Presentation& source, const Presentation& target)
{
    Subquotient q(kernel_lattice(map, source, target), source.relations);
    return q.structure();
}

AbGroupStructure image_structure(const IntMatrix& map, const Presentation& target)
{
    Subquotient q(image_lattice(map, target), target.relations);
    return q.structure();
}

AbGroupStructure cokernel_structure(const IntMatrix& map, const Presentation& target)
{
    return cokernel_structure(image_lattice(map, target));
}

Subquotient homology_subquotient(const IntMatrix& f, const IntMatrix& g, const Presentation& middle,
                                 const Presentation& target)
{
    if (f.rows() != middle.generators || g.cols() != middle.generators || g.rows() != target.generators)
        throw DimensionMismatch("homology: shapes do not compose");
    IntMatrix z = kernel_lattice(g, middle, target);
    IntMatrix b = hstack(f, middle.relations);
    return Subquotient(z, b);
}

AbGroupStructure homology(const IntMatrix& f, const IntMatrix& g, const Presentation& middle,
                          const Presentation& target)
{
    return homology_subquotient(f, g, middle, target).structure();
}

bool is_complex_at(const IntMatrix& f, const IntMatrix& g, const Presentation& target)
{
    return lattice_contains(target.relations, g * f);
}

bool is_exact_at(const IntMatrix& f, const IntMatrix& g, const Presentation& middle, const Presentation& target)
{
    if (!is_complex_at(f, g, target))
        return false;
    return homology(f, g, middle, target).is_trivial();
}

IntMatrix induced_map(const Subquotient& source, const Subquotient& target, const IntMatrix& phi)
{
    std::vector<IntVector> gens = source.generators();
    const std::size_t k = target.structure().torsion().size() + target.structure().free_rank();
    IntMatrix m(k, gens.size());
    for (std::size_t j = 0; j < gens.size(); ++j) {
        IntVector c = target.classify(phi * gens[j]);
        for (std::size_t i = 0; i < k; ++i)
            m(i, j) = c[i];
    }
    return m;
}

bool is_isomorphism(const IntMatrix& map, const Presentation& source, const Presentation& target)
{
    if (!is_well_defined(map, source, target))
        return false;
    return kernel_structure(map, source, target).is_trivial() && cokernel_structure(map, target).is_trivial();
}

}  // namespace cmtorus::lattice
