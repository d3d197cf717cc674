#include "cmtorus/limits/limits.hpp"

#include <sstream>

#include "cmtorus/error.hpp"

namespace cmtorus::limits {

using lattice::Subquotient;

ExplicitTower ExplicitTower::from_structures(const std::vector<AbGroupStructure>& stages, std::vector<IntMatrix> maps)
{
    ExplicitTower t;
    for (const auto& s : stages)
        t.stages.push_back(Presentation::of(s));
    t.transitions = std::move(maps);
    t.validate();
    return t;
}

ExplicitTower ExplicitTower::constant(const Presentation& a, const IntMatrix& map, std::size_t stages)
{
    ExplicitTower t;
    t.stages.assign(stages, a);
    if (stages > 0)
        t.transitions.assign(stages - 1, map);
    t.validate();
    return t;
}

void ExplicitTower::validate() const
{
    if (stages.empty())
        throw ValidationError("tower: no stages");
    if (transitions.size() + 1 != stages.size())
        throw DimensionMismatch("tower: need one transition between consecutive stages");
    for (std::size_t n = 0; n < stages.size(); ++n)
        if (stages[n].relations.rows() != stages[n].generators)
            throw DimensionMismatch("tower: stage " + std::to_string(n) + " has malformed relations");
    for (std::size_t n = 0; n < transitions.size(); ++n) {
        const IntMatrix& u = transitions[n];
        if (u.rows() != stages[n].generators || u.cols() != stages[n + 1].generators)
            throw DimensionMismatch("tower: transition " + std::to_string(n + 1) + " -> " + std::to_string(n) +
                                    " has the wrong shape");
        if (!lattice::is_well_defined(u, stages[n + 1], stages[n]))
            throw ValidationError("tower: transition " + std::to_string(n + 1) + " -> " + std::to_string(n) +
                                  " is not a homomorphism");
    }
}

IntMatrix ExplicitTower::composite(std::size_t from, std::size_t to) const
{
    if (from < to || from >= stages.size())
        throw DimensionMismatch("tower: bad composite range");
    IntMatrix m = IntMatrix::identity(stages[to].generators);
    for (std::size_t n = to; n < from; ++n)
        m = m * transitions[n];
    return m;
}

bool ExplicitTower::all_finite() const
{
    for (const auto& s : stages)
        if (!s.structure().is_finite())
            return false;
    return true;
}

bool ExplicitTower::strict() const
{
    for (std::size_t n = 0; n < transitions.size(); ++n)
        if (!lattice::cokernel_structure(transitions[n], stages[n]).is_trivial())
            return false;
    return true;
}

namespace {

/// 1 - u: (a_n) -> (a_n - u(a_{n+1})) from all stages to all but the last.
struct OneMinusU
{
    Presentation source;
    Presentation target;
    IntMatrix map;
};

OneMinusU one_minus_u(const ExplicitTower& t)
{
    OneMinusU d;
    d.source = lattice::direct_sum(t.stages);
    std::vector<Presentation> head(t.stages.begin(), t.stages.end() - 1);
    d.target = lattice::direct_sum(head);
    d.map = IntMatrix(d.target.generators, d.source.generators);
    std::size_t row = 0, col = 0;
    for (std::size_t n = 0; n + 1 < t.size(); ++n) {
        const std::size_t gn = t.stages[n].generators;
        const IntMatrix& u = t.transitions[n];
        for (std::size_t i = 0; i < gn; ++i) {
            d.map(row + i, col + i) += 1;
            for (std::size_t j = 0; j < u.cols(); ++j)
                d.map(row + i, col + gn + j) -= u(i, j);
        }
        row += gn;
        col += gn;
    }
    return d;
}

Subquotient lim_subquotient(const OneMinusU& d)
{
    return {lattice::kernel_lattice(d.map, d.source, d.target), d.source.relations};
}

ImageChain image_chain(const ExplicitTower& t, std::size_t n)
{
    ImageChain c;
    c.stage = n;
    std::vector<IntMatrix> lattices;
    for (std::size_t m = n; m < t.size(); ++m) {
        IntMatrix comp = t.composite(m, n);
        c.images.push_back(lattice::image_structure(comp, t.stages[n]));
        c.quotients.push_back(lattice::cokernel_structure(comp, t.stages[n]));
        lattices.push_back(lattice::image_lattice(comp, t.stages[n]));
    }
    const std::size_t len = lattices.size();
    c.strictly_decreasing = len >= 2;
    for (std::size_t i = 0; i + 1 < len; ++i)
        if (lattice::same_lattice(lattices[i], lattices[i + 1]))
            c.strictly_decreasing = false;
    c.judged = len >= 3;
    if (c.judged && lattice::same_lattice(lattices[len - 2], lattices[len - 1])) {
        std::size_t i = len - 1;
        while (i > 0 && lattice::same_lattice(lattices[i - 1], lattices[len - 1]))
            --i;
        c.stabilized_at = i;
    }
    return c;
}

}  // namespace

TruncatedLim truncated_lim(const ExplicitTower& tower)
{
    tower.validate();
    TruncatedLim r;
    r.stages = tower.size();
    const OneMinusU d = one_minus_u(tower);
    const IntMatrix ker = lattice::kernel_lattice(d.map, d.source, d.target);
    r.lim = lattice::kernel_structure(d.map, d.source, d.target);
    r.lim1 = lattice::cokernel_structure(d.map, d.target);
    r.stage0_image = lattice::image_structure(ker.rows_range(0, tower.stages[0].generators), tower.stages[0]);

    bool any_judged = false;
    r.ml_within_truncation = true;
    for (std::size_t n = 0; n < tower.size(); ++n) {
        ImageChain c = image_chain(tower, n);
        if (c.judged) {
            any_judged = true;
            if (!c.stabilized_at)
                r.ml_within_truncation = false;
        }
        r.chains.push_back(std::move(c));
    }
    r.shrinking_at_stage0 = r.chains[0].strictly_decreasing;
    const std::string n = std::to_string(r.stages);
    r.certainty = any_judged && r.ml_within_truncation ? "truncation-stable(" + n + ")" : "truncated(" + n + ")";
    if (!any_judged)
        r.notes.push_back("fewer than three stages: image chains not judged");
    if (r.shrinking_at_stage0)
        r.notes.push_back("stable images at stage 0 strictly decrease: lim -> 0 if continued and they intersect in 0");
    if (!r.ml_within_truncation)
        r.notes.push_back("image chains do not stabilize within the truncation");
    return r;
}

MLDiagnostic ml_fails_uncountable_flag(const ExplicitTower& tower)
{
    TruncatedLim t = truncated_lim(tower);
    MLDiagnostic d;
    for (const auto& c : t.chains)
        if (c.judged && !c.stabilized_at)
            d.failing_stages.push_back(c.stage);
    d.ml_holds = d.failing_stages.empty();
    d.lim1_uncountable = !d.ml_holds && d.countable_stages;
    if (d.ml_holds)
        d.conclusion = "ML holds within the truncation; no flag";
    else
        d.conclusion = "ML fails: countable stages, so lim1 is uncountable (asserted, not computed)";
    return d;
}

SymbolicTower SymbolicTower::bounded(const AbGroupStructure& a)
{
    return {{{SymbolicKind::bounded, a}}};
}

SymbolicTower SymbolicTower::integers()
{
    return {{{SymbolicKind::integers, {}}}};
}

SymbolicTower SymbolicTower::rationals()
{
    return {{{SymbolicKind::rationals, {}}}};
}

SymbolicTower SymbolicTower::q_mod_z()
{
    return {{{SymbolicKind::q_mod_z, {}}}};
}

SymbolicTower SymbolicTower::direct_sum(const SymbolicTower& o) const
{
    SymbolicTower t = *this;
    t.summands.insert(t.summands.end(), o.summands.begin(), o.summands.end());
    return t;
}

namespace {

std::string summand_name(const SymbolicSummand& s)
{
    switch (s.kind) {
    case SymbolicKind::bounded:
        return s.group.to_string();
    case SymbolicKind::integers:
        return "Z";
    case SymbolicKind::rationals:
        return "Q";
    case SymbolicKind::q_mod_z:
        return "Q/Z";
    }
    return "?";
}

std::string join(const std::vector<std::string>& parts, const std::string& zero)
{
    if (parts.empty())
        return zero;
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? " + " : "") + parts[i];
    return out;
}

}  // namespace

std::string SymbolicTower::to_string() const
{
    std::vector<std::string> parts;
    for (const auto& s : summands)
        parts.push_back("(" + summand_name(s) + ", m)");
    return join(parts, "0");
}

SymbolicGroup SymbolicGroup::direct_sum(const SymbolicGroup& o) const
{
    SymbolicGroup g = *this;
    g.parts.insert(g.parts.end(), o.parts.begin(), o.parts.end());
    return g;
}

std::string SymbolicGroup::to_string() const
{
    return join(parts, "0");
}

LimResult lim_lim1_symbolic(const SymbolicTower& tower)
{
    LimResult r;
    for (const auto& s : tower.summands) {
        switch (s.kind) {
        case SymbolicKind::bounded:
            if (!s.group.is_finite())
                throw ValidationError("symbolic tower: bounded summand " + s.group.to_string() + " is not finite");
            if (!s.group.is_trivial())
                r.rules.push_back("(" + s.group.to_string() + ", m): NA = 0 with N = " +
                                  s.group.exponent().get_str() + ", lim = lim1 = 0");
            break;
        case SymbolicKind::integers:
            r.lim1.parts.push_back("Zhat/Z");
            r.rules.push_back("(Z, m): lim = 0, lim1 = Zhat/Z");
            break;
        case SymbolicKind::rationals:
            r.lim.parts.push_back("Q");
            r.rules.push_back("(Q, m): strict with bijective maps, lim = Q, lim1 = 0");
            break;
        case SymbolicKind::q_mod_z:
            r.lim.parts.push_back("A_f");
            r.rules.push_back("(Q/Z, m): strict, lim = A_f, lim1 = 0");
            break;
        }
    }
    return r;
}

ExplicitTower cofinal_truncation(const SymbolicTower& tower, std::size_t stages)
{
    if (stages == 0)
        throw ValidationError("cofinal truncation: no stages");
    std::vector<Presentation> parts;
    for (const auto& s : tower.summands) {
        if (s.kind == SymbolicKind::bounded)
            parts.push_back(Presentation::of(s.group));
        else if (s.kind == SymbolicKind::integers)
            parts.push_back(Presentation::free(1));
        else
            throw ValidationError("cofinal truncation: " + summand_name(s) + " is not finitely generated");
    }
    const Presentation a = lattice::direct_sum(parts);
    ExplicitTower t;
    t.stages.assign(stages, a);
    for (std::size_t n = 0; n + 1 < stages; ++n)
        t.transitions.push_back(IntMatrix::identity(a.generators) * Integer(static_cast<long>(n + 1)));
    t.validate();
    return t;
}

namespace {

std::string lim1_rule(const ExplicitTower& t, const char* name)
{
    if (t.all_finite())
        return "finite stages";
    if (t.strict())
        return "strict";
    throw ValidationError(std::string("six-term: tower ") + name + " has no lim1 vanishing rule");
}

void check_tower_map(const ExplicitTower& s, const ExplicitTower& t, const TowerMap& f, const char* name)
{
    if (f.size() != s.size())
        throw DimensionMismatch(std::string("six-term: map ") + name + " needs one matrix per stage");
    for (std::size_t n = 0; n < s.size(); ++n) {
        if (f[n].rows() != t.stages[n].generators || f[n].cols() != s.stages[n].generators)
            throw DimensionMismatch(std::string("six-term: map ") + name + " has the wrong shape at stage " +
                                    std::to_string(n));
        if (!lattice::is_well_defined(f[n], s.stages[n], t.stages[n]))
            throw ValidationError(std::string("six-term: map ") + name + " is not a homomorphism at stage " +
                                  std::to_string(n));
        if (n + 1 < s.size()) {
            IntMatrix diff = f[n] * s.transitions[n] - t.transitions[n] * f[n + 1];
            if (!lattice::lattice_contains(t.stages[n].relations, diff))
                throw ValidationError(std::string("six-term: map ") + name +
                                      " does not commute with the transitions at stage " + std::to_string(n));
        }
    }
}

}  // namespace

SixTerm six_term(const ExplicitTower& a, const ExplicitTower& b, const ExplicitTower& c, const TowerMap& f,
                 const TowerMap& g)
{
    a.validate();
    b.validate();
    c.validate();
    if (a.size() != b.size() || b.size() != c.size())
        throw DimensionMismatch("six-term: towers have different lengths");
    check_tower_map(a, b, f, "A -> B");
    check_tower_map(b, c, g, "B -> C");
    for (std::size_t n = 0; n < a.size(); ++n) {
        const bool inj = lattice::kernel_structure(f[n], a.stages[n], b.stages[n]).is_trivial();
        const bool mid = lattice::is_exact_at(f[n], g[n], b.stages[n], c.stages[n]);
        const bool surj = lattice::cokernel_structure(g[n], c.stages[n]).is_trivial();
        if (!(inj && mid && surj))
            throw ValidationError("six-term: stage " + std::to_string(n) + " is not short exact");
    }

    SixTerm r;
    r.stages = a.size();
    r.lim1_rules = {lim1_rule(a, "A"), lim1_rule(b, "B"), lim1_rule(c, "C")};

    const OneMinusU da = one_minus_u(a), db = one_minus_u(b), dc = one_minus_u(c);
    const Subquotient la = lim_subquotient(da), lb = lim_subquotient(db), lc = lim_subquotient(dc);
    r.terms[0] = la.structure();
    r.terms[1] = lb.structure();
    r.terms[2] = lc.structure();
    r.terms[3] = lattice::cokernel_structure(da.map, da.target);
    r.terms[4] = lattice::cokernel_structure(db.map, db.target);
    r.terms[5] = lattice::cokernel_structure(dc.map, dc.target);
    for (std::size_t i = 3; i < 6; ++i)
        if (!r.terms[i].is_trivial())
            throw Error("six-term: truncated lim1 is nonzero");

    const IntMatrix fab = lattice::induced_map(la, lb, lattice::block_diagonal(f));
    const IntMatrix gbc = lattice::induced_map(lb, lc, lattice::block_diagonal(g));
    const Presentation pa = Presentation::of(r.terms[0]);
    const Presentation pb = Presentation::of(r.terms[1]);
    const Presentation pc = Presentation::of(r.terms[2]);
    r.injective_lim = lattice::kernel_structure(fab, pa, pb).is_trivial();
    r.exact_at_lim_b = lattice::is_exact_at(fab, gbc, pb, pc);
    // lim C -> lim1 A is zero since lim1 A vanishes; exactness at lim C is surjectivity.
    r.surjective_lim = lattice::cokernel_structure(gbc, pc).is_trivial();
    return r;
}

SymbolicSixTerm six_term_symbolic(const SymbolicTower& a, const SymbolicTower& b, const SymbolicTower& c)
{
    const LimResult ra = lim_lim1_symbolic(a), rb = lim_lim1_symbolic(b), rc = lim_lim1_symbolic(c);
    SymbolicSixTerm r;
    r.terms = {ra.lim, rb.lim, rc.lim, ra.lim1, rb.lim1, rc.lim1};

    auto all_bounded = [](const SymbolicTower& t) {
        for (const auto& s : t.summands)
            if (s.kind != SymbolicKind::bounded)
                return false;
        return true;
    };
    auto order = [](const SymbolicTower& t) {
        Integer n = 1;
        for (const auto& s : t.summands)
            n *= *s.group.order();
        return n;
    };

    if (a == SymbolicTower::integers() && b == SymbolicTower::rationals() && c == SymbolicTower::q_mod_z()) {
        r.exact = true;
        r.note = "Q embeds diagonally in A_f with cokernel Zhat/Z";
    } else if (c.summands.empty() && a == b) {
        r.exact = true;
        r.note = "A = B, C = 0: identity";
    } else if (a.summands.empty() && b == c) {
        r.exact = true;
        r.note = "A = 0, B = C: identity";
    } else if (all_bounded(a) && all_bounded(b) && all_bounded(c)) {
        if (order(b) != order(a) * order(c))
            throw ValidationError("six-term: bounded orders do not fit a short exact sequence");
        r.exact = true;
        r.note = "bounded towers: every term vanishes";
    } else {
        throw ValidationError("six-term: unsupported symbolic shape " + a.to_string() + " -> " + b.to_string() +
                              " -> " + c.to_string());
    }
    return r;
}

}  // namespace cmtorus::limits
