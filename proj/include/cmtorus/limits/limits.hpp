#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cmtorus/lattice/presented.hpp"

namespace cmtorus::limits {

using lattice::AbGroupStructure;
using lattice::Integer;
using lattice::IntMatrix;
using lattice::Presentation;

/// A finite piece A_0 <- A_1 <- ... <- A_{N-1} of an inverse system of
/// finitely presented abelian groups.
struct ExplicitTower
{
    std::vector<Presentation> stages;
    /// transitions[n]: A_{n+1} -> A_n.
    std::vector<IntMatrix> transitions;

    static ExplicitTower from_structures(const std::vector<AbGroupStructure>& stages, std::vector<IntMatrix> maps);
    /// N copies of A with the same transition.
    static ExplicitTower constant(const Presentation& a, const IntMatrix& map, std::size_t stages);

    std::size_t size() const { return stages.size(); }
    /// Throws DimensionMismatch or ValidationError for incompatible stages
    /// or maps that are not homomorphisms.
    void validate() const;
    /// A_from -> A_to for from >= to.
    IntMatrix composite(std::size_t from, std::size_t to) const;
    bool all_finite() const;
    bool strict() const;
};

/// The chain im(A_{n+i} -> A_n), i = 0, 1, ... inside the truncation.
struct ImageChain
{
    std::size_t stage = 0;
    std::vector<AbGroupStructure> images;
    /// A_n / im(A_{n+i} -> A_n).
    std::vector<AbGroupStructure> quotients;
    /// First i from which the chain is constant, when the last two images
    /// agree; chains shorter than three are not judged.
    std::optional<std::size_t> stabilized_at;
    bool judged = false;
    bool strictly_decreasing = false;
};

struct TruncatedLim
{
    std::size_t stages = 0;
    /// Kernel and cokernel of 1 - u on the truncation.
    AbGroupStructure lim;
    AbGroupStructure lim1;
    /// Image of the projection of lim to A_0.
    AbGroupStructure stage0_image;
    std::vector<ImageChain> chains;
    bool ml_within_truncation = false;
    /// The chain at A_0 strictly decreases at every step.
    bool shrinking_at_stage0 = false;
    /// "truncation-stable(N)" when every judged chain stabilized, else
    /// "truncated(N)".
    std::string certainty;
    std::vector<std::string> notes;
};

/// Throws on an empty or invalid tower.
TruncatedLim truncated_lim(const ExplicitTower& tower);

struct MLDiagnostic
{
    bool ml_holds = false;
    std::vector<std::size_t> failing_stages;
    /// Finitely generated stages are countable.
    bool countable_stages = true;
    /// Attached conclusion: countable stages failing ML have uncountable lim1.
    bool lim1_uncountable = false;
    std::string conclusion;
};

MLDiagnostic ml_fails_uncountable_flag(const ExplicitTower& tower);

enum class SymbolicKind
{
    bounded,
    integers,
    rationals,
    q_mod_z,
};

/// A summand of (A, m): multiplication by m on A over N^x ordered by
/// divisibility.
struct SymbolicSummand
{
    SymbolicKind kind = SymbolicKind::bounded;
    /// The finite group, for bounded summands.
    AbGroupStructure group;

    friend bool operator==(const SymbolicSummand&, const SymbolicSummand&) = default;
};

struct SymbolicTower
{
    std::vector<SymbolicSummand> summands;

    static SymbolicTower bounded(const AbGroupStructure& a);
    static SymbolicTower integers();
    static SymbolicTower rationals();
    static SymbolicTower q_mod_z();
    SymbolicTower direct_sum(const SymbolicTower& o) const;
    std::string to_string() const;

    friend bool operator==(const SymbolicTower&, const SymbolicTower&) = default;
};

/// Direct sum of named groups: "0", "Q", "A_f", "Zhat/Z".
struct SymbolicGroup
{
    std::vector<std::string> parts;

    bool is_zero() const { return parts.empty(); }
    SymbolicGroup direct_sum(const SymbolicGroup& o) const;
    std::string to_string() const;

    friend bool operator==(const SymbolicGroup&, const SymbolicGroup&) = default;
};

struct LimResult
{
    SymbolicGroup lim;
    SymbolicGroup lim1;
    std::string certainty = "exact";
    std::vector<std::string> rules;
};

/// Closed forms per summand. Throws ValidationError for a bounded summand
/// that is not finite.
LimResult lim_lim1_symbolic(const SymbolicTower& tower);

/// The first N stages along the cofinal chain 1 | 2! | 3! | ...: A at every
/// stage, with multiplication by n + 1 from stage n + 1 to stage n. Only
/// finitely generated summands.
ExplicitTower cofinal_truncation(const SymbolicTower& tower, std::size_t stages);

/// A map of towers f_n: A_n -> B_n, one matrix per stage.
using TowerMap = std::vector<IntMatrix>;

struct SixTerm
{
    /// lim A, lim B, lim C, lim1 A, lim1 B, lim1 C.
    std::array<AbGroupStructure, 6> terms;
    /// Vanishing rule used for each lim1: "finite stages" or "strict".
    std::array<std::string, 3> lim1_rules;
    bool injective_lim = false;
    bool exact_at_lim_b = false;
    bool surjective_lim = false;
    std::size_t stages = 0;

    bool exact() const { return injective_lim && exact_at_lim_b && surjective_lim; }
};

/// 0 -> A -> B -> C -> 0 of explicit towers. Throws ValidationError when the
/// maps do not commute with the transitions, a stage is not exact, or some
/// tower has no lim1 vanishing rule (finite stages or strict).
SixTerm six_term(const ExplicitTower& a, const ExplicitTower& b, const ExplicitTower& c, const TowerMap& f,
                 const TowerMap& g);

struct SymbolicSixTerm
{
    std::array<SymbolicGroup, 6> terms;
    bool exact = false;
    std::string note;
};

/// Supported shapes: 0 -> (Z, m) -> (Q, m) -> (Q/Z, m) -> 0, bounded
/// sequences with |B| = |A| |C|, and A = B or B = C with zero third term.
/// Throws ValidationError otherwise.
SymbolicSixTerm six_term_symbolic(const SymbolicTower& a, const SymbolicTower& b, const SymbolicTower& c);

}  // namespace cmtorus::limits
