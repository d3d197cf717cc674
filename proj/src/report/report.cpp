#include "cmtorus/report/report.hpp"

#include <functional>
#include <future>
#include <numeric>
#include <sstream>

#include "cmtorus/brauer/brauer.hpp"
#include "cmtorus/classfield/classfield.hpp"
#include "cmtorus/cohomology/tate.hpp"
#include "cmtorus/error.hpp"
#include "cmtorus/limits/limits.hpp"
#include "cmtorus/serre_weil/lattices.hpp"
#include "cmtorus/weil/weil_numbers.hpp"

namespace cmtorus::report {

using galois::CMDatum;
using galois::Element;
using lattice::AbGroupStructure;
using lattice::Integer;
using lattice::IntMatrix;
using lattice::Presentation;

bool Report::pass() const
{
    for (const auto& v : verdicts)
        if (!v.pass)
            return false;
    return true;
}

json Report::to_json() const
{
    json j;
    j["tool_version"] = kToolVersion;
    j["schema_version"] = kSchemaVersion;
    j["operation"] = operation;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    json vs = json::array();
    for (const auto& v : verdicts)
        vs.push_back({{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    j["verdicts"] = vs;
    j["pass"] = pass();
    return j;
}

std::string Report::to_text() const
{
    std::ostringstream os;
    os << operation << "\n";
    std::size_t passed = 0;
    for (const auto& v : verdicts) {
        os << (v.pass ? "  PASS  " : "  FAIL  ") << v.name;
        if (!v.detail.empty())
            os << "  " << v.detail;
        os << "\n";
        passed += v.pass ? 1 : 0;
    }
    os << passed << "/" << verdicts.size() << " verdicts pass\n";
    return os.str();
}

json structure_json(const AbGroupStructure& g)
{
    return g.to_string();
}

json integer_json(const Integer& x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

json matrix_json(const IntMatrix& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(integer_json(m(i, j)));
        rows.push_back(r);
    }
    return rows;
}

namespace {

struct Item
{
    json row;
    Verdict verdict;
};

std::vector<Item> run_items(const std::vector<std::string>& names, bool parallel,
                            const std::function<Item(std::size_t)>& body)
{
    auto guarded = [&](std::size_t i) {
        try {
            return body(i);
        } catch (const Error& e) {
            return Item{{{"item", names[i]}, {"error", e.what()}}, {names[i], false, e.what()}};
        }
    };
    std::vector<Item> out;
    if (parallel) {
        std::vector<std::future<Item>> futures;
        for (std::size_t i = 0; i < names.size(); ++i)
            futures.push_back(std::async(std::launch::async, guarded, i));
        for (auto& f : futures)
            out.push_back(f.get());
    } else {
        for (std::size_t i = 0; i < names.size(); ++i)
            out.push_back(guarded(i));
    }
    return out;
}

Report collect(const std::string& operation, json inputs, const std::vector<Item>& items)
{
    Report r;
    r.operation = operation;
    r.inputs = std::move(inputs);
    json rows = json::array();
    for (const auto& it : items) {
        rows.push_back(it.row);
        r.verdicts.push_back(it.verdict);
    }
    r.outputs["rows"] = rows;
    return r;
}

std::vector<std::string> preset_names(const std::vector<galois::Preset>& presets)
{
    std::vector<std::string> names;
    for (const auto& p : presets)
        names.push_back(p.name);
    return names;
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

Report suite_e15(const SuiteOptions& o)
{
    const auto names = preset_names(o.presets);
    auto items = run_items(names, o.parallel, [&](std::size_t i) {
        const CMDatum& d = o.presets[i].datum;
        auto s = serre_weil::serre_character_lattice(d);
        const long expected = static_cast<long>(d.group().order()) / 2 + 1;
        const long rank = static_cast<long>(s.lattice.rank());
        const bool ok = rank == expected && s.character_sequence.exact() && s.torus_sequence.exact();
        json row{{"item", names[i]},
                 {"rank", rank},
                 {"expected_rank", expected},
                 {"character_sequence_exact", s.character_sequence.exact()},
                 {"torus_sequence_exact", s.torus_sequence.exact()}};
        return Item{row, {names[i], ok, "rank " + std::to_string(rank)}};
    });
    return collect("verify e15", {{"presets", names}}, items);
}

Report suite_e18(const SuiteOptions& o)
{
    const auto names = preset_names(o.presets);
    auto items = run_items(names, o.parallel, [&](std::size_t i) {
        const CMDatum& d = o.presets[i].datum;
        auto w = serre_weil::weil_character_lattice(d);
        const auto pl = galois::places(d, d.p());
        const long expected = static_cast<long>(pl.x.size()) + 1 - static_cast<long>(pl.y.size());
        const long rank = static_cast<long>(w.lattice.rank());
        const bool ok = rank == expected && w.character_sequence.exact() && w.torus_sequence.exact() &&
                        (!w.degenerate || rank == 1);
        json row{{"item", names[i]},
                 {"rank", rank},
                 {"x", pl.x.size()},
                 {"y", pl.y.size()},
                 {"degenerate", w.degenerate},
                 {"character_sequence_exact", w.character_sequence.exact()},
                 {"torus_sequence_exact", w.torus_sequence.exact()}};
        return Item{row, {names[i], ok, "rank " + std::to_string(rank) + (w.degenerate ? ", P = G_m" : "")}};
    });
    return collect("verify e18", {{"presets", names}}, items);
}

Report suite_rho(const SuiteOptions& o)
{
    const auto names = preset_names(o.presets);
    auto items = run_items(names, o.parallel, [&](std::size_t i) {
        auto r = serre_weil::rho_characters(o.presets[i].datum);
        const bool ok = r.holds() && r.cokernel.is_trivial();
        json row{{"item", names[i]},
                 {"cokernel", structure_json(r.cokernel)},
                 {"surjective", r.surjective},
                 {"square_commutes", r.square_commutes},
                 {"equivariant", r.equivariant}};
        return Item{row, {names[i], ok, "cokernel " + r.cokernel.to_string()}};
    });
    return collect("verify rho", {{"presets", names}}, items);
}

Report suite_cg4(const SuiteOptions& o)
{
    const auto names = preset_names(o.presets);
    auto items = run_items(names, o.parallel, [&](std::size_t i) {
        const CMDatum& d = o.presets[i].datum;
        auto h = brauer::hasse_cokernel_p(d);
        const long n = d.local_degree_p();
        const bool even = !h.degenerate && n % 2 == 0;
        const AbGroupStructure expected = even ? AbGroupStructure::cyclic(2) : AbGroupStructure::trivial();
        const bool ok = h.agree() && h.snake == expected;
        json row{{"item", names[i]},
                 {"local_degree", n},
                 {"degenerate", h.degenerate},
                 {"snake", structure_json(h.snake)},
                 {"model", structure_json(h.model)}};
        return Item{row, {names[i], ok, "n(w) = " + std::to_string(n) + ", cokernel " + h.snake.to_string()}};
    });
    return collect("verify cg4", {{"presets", names}}, items);
}

Report suite_alpha(const SuiteOptions& o)
{
    std::vector<galois::Preset> split;
    for (const auto& p : o.presets)
        if (p.datum.kind() == galois::FieldKind::quadratic && galois::places(p.datum, p.datum.p()).x.size() == 2)
            split.push_back(p);
    const auto names = preset_names(split);
    auto items = run_items(names, o.parallel, [&](std::size_t i) {
        const CMDatum& d = split[i].datum;
        auto a = weil::alpha_construction(d);
        auto serre = serre_weil::serre_character_lattice(d);
        bool consistent = true;
        for (std::size_t j = 0; j < serre.lattice.rank(); ++j)
            consistent = consistent && weil::evaluate_character(d, a, serre.lattice.basis.column(j)).rho_consistent;
        const bool ok = a.check.weil && a.check.weight == 1 && consistent;
        json row{{"item", names[i]},
                 {"generator", a.prime.a.to_string()},
                 {"h", a.prime.h},
                 {"unit_index", a.unit_index},
                 {"alpha", a.alpha.to_string()},
                 {"q", integer_json(a.q)},
                 {"weight", a.check.weight},
                 {"characters_consistent", consistent}};
        return Item{row, {names[i], ok, "alpha = " + a.alpha.to_string() + ", q = " + a.q.get_str()}};
    });
    return collect("verify alpha", {{"presets", names}}, items);
}

std::vector<std::string> tower_names(const std::vector<TowerCase>& cases)
{
    std::vector<std::string> names;
    for (const auto& c : cases)
        names.push_back(c.name);
    return names;
}

Report suite_e25(const SuiteOptions& o)
{
    const auto cases = weil_towers();
    const auto names = tower_names(cases);
    auto items = run_items(names, o.parallel, [&](std::size_t i) {
        auto t = serre_weil::transition_weil(cases[i].tower);
        json row{{"item", names[i]},
                 {"local_degree", t.local_degree},
                 {"contained", t.contained},
                 {"square_commutes", t.square_commutes},
                 {"equivariant", t.equivariant},
                 {"rho_compatible", t.rho_compatible},
                 {"lattice_map", matrix_json(t.lattice_map)}};
        return Item{row, {names[i], t.holds(), "[K'_w : K_w] = " + std::to_string(t.local_degree)}};
    });
    return collect("verify e25", {{"towers", names}}, items);
}

Report suite_cg5n(const SuiteOptions& o)
{
    const auto cases = vanishing_towers();
    const auto names = tower_names(cases);
    auto items = run_items(names, o.parallel, [&](std::size_t i) {
        auto t = brauer::transition_vanishing(cases[i].tower);
        json row{{"item", names[i]},
                 {"local_degree", t.local_degree},
                 {"source_h1", structure_json(t.source_h1)},
                 {"nonzero_images", t.nonzero_images},
                 {"vanishes", t.vanishes},
                 {"even_local_degree", t.parity_rule}};
        return Item{row,
                    {names[i], t.agrees(),
                     "local degree " + std::to_string(t.local_degree) + ", vanishes " + yes_no(t.vanishes)}};
    });
    return collect("verify cg5n", {{"towers", names}}, items);
}

Report suite_crossed(const SuiteOptions& o)
{
    const auto cases = crossed_instances();
    std::vector<std::string> names;
    for (const auto& c : cases)
        names.push_back(c.name);
    auto items = run_items(names, o.parallel, [&](std::size_t i) {
        const auto& c = cases[i];
        auto r = cohomology::crossed_module_isos_check(c.a, c.b, c.c, c.i, c.pi);
        json row{{"item", names[i]},
                 {"h0", structure_json(r.h0)},
                 {"h1", structure_json(r.h1)},
                 {"h2", structure_json(r.h2)},
                 {"c_invariants", structure_json(r.c_invariants)},
                 {"h1_c", structure_json(r.h1_c)}};
        return Item{row, {names[i], r.holds(), "H1 = " + r.h1.to_string() + ", H2 = " + r.h2.to_string()}};
    });
    return collect("verify crossed", {{"instances", names}}, items);
}

Report suite_il01p(const SuiteOptions& o)
{
    using limits::SymbolicTower;
    struct Row
    {
        SymbolicTower tower;
        std::string lim, lim1;
    };
    const std::vector<Row> table{
        {SymbolicTower::bounded(AbGroupStructure::cyclic(6)), "0", "0"},
        {SymbolicTower::integers(), "0", "Zhat/Z"},
        {SymbolicTower::q_mod_z(), "A_f", "0"},
    };
    std::vector<std::string> names;
    for (const auto& r : table)
        names.push_back(r.tower.to_string());
    names.push_back("0 -> (Z, m) -> (Q, m) -> (Q/Z, m) -> 0");
    auto items = run_items(names, o.parallel, [&](std::size_t i) {
        if (i < table.size()) {
            auto r = limits::lim_lim1_symbolic(table[i].tower);
            const bool ok = r.lim.to_string() == table[i].lim && r.lim1.to_string() == table[i].lim1;
            json row{{"item", names[i]},
                     {"lim", r.lim.to_string()},
                     {"lim1", r.lim1.to_string()},
                     {"certainty", r.certainty}};
            return Item{row, {names[i], ok, "lim = " + r.lim.to_string() + ", lim1 = " + r.lim1.to_string()}};
        }
        auto s = limits::six_term_symbolic(SymbolicTower::integers(), SymbolicTower::rationals(),
                                           SymbolicTower::q_mod_z());
        json terms = json::array();
        std::string seq = "0";
        for (const auto& t : s.terms) {
            terms.push_back(t.to_string());
            seq += " -> " + t.to_string();
        }
        seq += " -> 0";
        const bool ok = s.exact && seq == "0 -> 0 -> Q -> A_f -> Zhat/Z -> 0 -> 0 -> 0";
        return Item{{{"item", names[i]}, {"terms", terms}, {"note", s.note}}, {names[i], ok, seq}};
    });
    return collect("verify il01p", json::object(), items);
}

}  // namespace

Report datum_report(const CMDatum& datum)
{
    Report r;
    r.operation = "datum";
    r.inputs = {{"label", datum.label()}};
    r.outputs["datum"] = galois::to_json(datum);
    r.outputs["group_order"] = datum.group().order();
    json primes = json::array();
    for (const auto& [ell, local] : datum.local_data()) {
        auto pl = galois::places(datum, ell);
        primes.push_back({{"ell", ell},
                          {"x", pl.x.size()},
                          {"y", pl.y.size()},
                          {"e", pl.e},
                          {"f", pl.f},
                          {"local_degree", pl.local_degree_k},
                          {"local_degree_plus", pl.local_degree_kplus},
                          {"iota_in_d", pl.iota_in_d}});
        r.verdicts.push_back({"fundamental identity at " + std::to_string(ell),
                              pl.degree_sum() == static_cast<long>(datum.group().order()),
                              "|X| = " + std::to_string(pl.x.size()) + ", |Y| = " + std::to_string(pl.y.size()) +
                                  ", e = " + std::to_string(pl.e) + ", f = " + std::to_string(pl.f) +
                                  ", iota in D: " + yes_no(pl.iota_in_d)});
    }
    r.outputs["primes"] = primes;
    auto pl = galois::places(datum, datum.p());
    std::string behaviour = pl.e > 1 ? "ramified" : pl.x.size() == datum.group().order() ? "split" : pl.iota_in_d ? "iota in D" : "partially split";
    if (datum.kind() == galois::FieldKind::quadratic && pl.e == 1)
        behaviour = pl.x.size() == 2 ? "split" : "inert";
    r.outputs["p_behaviour"] = behaviour;
    auto serre = serre_weil::serre_character_lattice(datum);
    auto weil = serre_weil::weil_character_lattice(datum);
    r.outputs["serre_rank"] = serre.lattice.rank();
    r.outputs["weil_rank"] = weil.lattice.rank();
    r.outputs["weil_degenerate"] = weil.degenerate;
    r.verdicts.push_back({"Weil lattice rank", weil.lattice.rank() == pl.x.size() + 1 - pl.y.size(),
                          "rank " + std::to_string(weil.lattice.rank()) + ", p " + behaviour});
    return r;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"e15", "e18", "e25", "rho", "cg4", "cg5n", "crossed", "il01p",
                                                "alpha"};
    return names;
}

Report verify_suite(const std::string& name, const SuiteOptions& options)
{
    static const std::map<std::string, std::function<Report(const SuiteOptions&)>> suites{
        {"e15", suite_e15},   {"e18", suite_e18},     {"e25", suite_e25},         {"rho", suite_rho},
        {"cg4", suite_cg4},   {"cg5n", suite_cg5n},   {"crossed", suite_crossed}, {"il01p", suite_il01p},
        {"alpha", suite_alpha},
    };
    auto it = suites.find(name);
    if (it == suites.end())
        throw ValidationError("unknown suite: " + name);
    return it->second(options);
}

Report classfield_report(const ClassfieldRequest& request)
{
    if (!request.hminus && !request.irregular && !request.forms)
        throw ValidationError("classfield: nothing requested");
    Report r;
    r.operation = "classfield";
    if (request.forms) {
        const Integer d = *request.forms;
        r.inputs["forms"] = *request.forms;
        auto g = classfield::form_class_group(d);
        json forms = json::array();
        for (std::size_t i = 0; i < g.forms.size(); ++i)
            forms.push_back({{"form", g.forms[i].to_string()}, {"order", g.orders[i]}});
        r.outputs["forms"] = {{"discriminant", integer_json(d)},
                              {"class_number", g.class_number()},
                              {"structure", structure_json(g.structure)},
                              {"reduced_forms", forms}};
        std::vector<Integer> orders(g.orders.begin(), g.orders.end());
        const bool ok = *g.structure.order() == Integer(static_cast<long>(g.class_number())) &&
                        lattice::structure_from_element_orders(orders) == g.structure;
        r.verdicts.push_back({"form class group D = " + d.get_str(), ok,
                              g.structure.to_string() + ", h = " + std::to_string(g.class_number())});
    }
    if (request.hminus) {
        const long ell = *request.hminus;
        r.inputs["hminus"] = ell;
        auto h = classfield::relative_class_number(ell);
        auto m = classfield::minus_divisibility_check(ell);
        r.outputs["hminus"] = {{"conductor", h.conductor},
                               {"roots_of_unity", h.roots_of_unity},
                               {"unit_index", h.unit_index},
                               {"h_minus", integer_json(h.h_minus)},
                               {"irregular", m.irregular},
                               {"divides", m.divides}};
        r.verdicts.push_back({"h- of Q(zeta_" + std::to_string(ell) + ")", m.holds() && m.h_minus == h.h_minus,
                              "h- = " + h.h_minus.get_str() + ", irregular " + yes_no(m.irregular)});
    }
    if (request.irregular) {
        const long bound = *request.irregular;
        r.inputs["irregular"] = bound;
        auto ir = classfield::irregular_primes(bound);
        json rows = json::array();
        std::string list;
        for (std::size_t i = 0; i < ir.primes.size(); ++i) {
            rows.push_back({{"prime", ir.primes[i]}, {"indices", ir.indices[i]}});
            list += (i ? " " : "") + std::to_string(ir.primes[i]);
        }
        r.outputs["irregular"] = {{"bound", bound}, {"count", ir.primes.size()}, {"primes", rows}};
        r.verdicts.push_back({"irregular primes up to " + std::to_string(bound), ir.denominators_checked,
                              std::to_string(ir.primes.size()) + " primes: " + list});
    }
    return r;
}

namespace {

Presentation diag(const std::vector<long>& orders)
{
    lattice::IntVector d(orders.begin(), orders.end());
    return {orders.size(), IntMatrix::diagonal(d)};
}

cohomology::GModule cyclic_action(const galois::FiniteGroup& g, const Presentation& underlying, const IntMatrix& m)
{
    return cohomology::GModule::from_generator_images(g, underlying, {g.cyclic_generator()}, {m});
}

cohomology::GModule by_character(const galois::FiniteGroup& g, const Presentation& underlying,
                                 const galois::ElementSet& kernel, const IntMatrix& m)
{
    std::vector<Element> gens = g.generators();
    std::vector<IntMatrix> imgs;
    for (Element s : gens)
        imgs.push_back(galois::contains(kernel, s) ? IntMatrix::identity(underlying.generators) : m);
    return cohomology::GModule::from_generator_images(g, underlying, gens, imgs);
}

galois::TowerMap cyclotomic_tower(const CMDatum& small, const CMDatum& large)
{
    return galois::transition(small, large, galois::cyclotomic_surjection(small, large));
}

galois::TowerMap quadratic_tower(const CMDatum& small, const CMDatum& large)
{
    return galois::transition(small, large, galois::quadratic_in_cyclotomic_surjection(small, large));
}

galois::TowerMap identity_tower(const CMDatum& k)
{
    std::vector<Element> id(k.group().order());
    std::iota(id.begin(), id.end(), Element{0});
    return galois::transition(k, k, id);
}

}  // namespace

std::vector<CrossedInstance> crossed_instances()
{
    using cohomology::GModule;
    using galois::FiniteGroup;
    auto c2 = FiniteGroup::cyclic(2), c3 = FiniteGroup::cyclic(3), c4 = FiniteGroup::cyclic(4);
    auto v4 = FiniteGroup::direct_product(c2, c2);
    const IntMatrix neg{{-1}}, swap{{0, 1}, {1, 0}};
    std::vector<CrossedInstance> out;
    out.push_back({"C2: Z/2 -> Z/4 -> Z/2 trivial", GModule::trivial(c2, diag({2})), GModule::trivial(c2, diag({4})),
                   GModule::trivial(c2, diag({2})), IntMatrix{{2}}, IntMatrix{{1}}});
    out.push_back({"C3: Z/3 -> Z/9 -> Z/3 trivial", GModule::trivial(c3, diag({3})), GModule::trivial(c3, diag({9})),
                   GModule::trivial(c3, diag({3})), IntMatrix{{3}}, IntMatrix{{1}}});
    out.push_back({"C2: Z/3 -> Z/9 -> Z/3 by sign", cyclic_action(c2, diag({3}), neg), cyclic_action(c2, diag({9}), neg),
                   cyclic_action(c2, diag({3}), neg), IntMatrix{{3}}, IntMatrix{{1}}});
    out.push_back({"V4: Z/2 -> Z/4 -> Z/2 trivial", GModule::trivial(v4, diag({2})), GModule::trivial(v4, diag({4})),
                   GModule::trivial(v4, diag({2})), IntMatrix{{2}}, IntMatrix{{1}}});
    out.push_back({"C4: Z/2 -> (Z/2)^2 swap -> Z/2", GModule::trivial(c4, diag({2})),
                   cyclic_action(c4, diag({2, 2}), swap), GModule::trivial(c4, diag({2})), IntMatrix{{1}, {1}},
                   IntMatrix{{1, 1}}});
    out.push_back({"C2: Z/4 -> (Z/4)^2 swap -> Z/4 by sign", GModule::trivial(c2, diag({4})),
                   cyclic_action(c2, diag({4, 4}), swap), cyclic_action(c2, diag({4}), neg), IntMatrix{{1}, {1}},
                   IntMatrix{{-1, 1}}});
    out.push_back({"C4: Z/2 -> Z/4 by sign -> Z/2", GModule::trivial(c4, diag({2})), cyclic_action(c4, diag({4}), neg),
                   GModule::trivial(c4, diag({2})), IntMatrix{{2}}, IntMatrix{{1}}});
    const galois::ElementSet kernel{0, 1};
    out.push_back({"V4: Z/3 -> Z/9 -> Z/3 by character", by_character(v4, diag({3}), kernel, neg),
                   by_character(v4, diag({9}), kernel, neg), by_character(v4, diag({3}), kernel, neg), IntMatrix{{3}},
                   IntMatrix{{1}}});
    return out;
}

std::vector<TowerCase> weil_towers()
{
    using galois::make_cyclotomic_datum;
    using galois::make_quadratic_datum;
    std::vector<TowerCase> out;
    out.push_back({"Q(zeta_13) = Q(zeta_13), p=3", identity_tower(make_cyclotomic_datum(13, 3))});
    out.push_back({"Q(i) in Q(zeta_20), p=3", quadratic_tower(make_quadratic_datum(-1, 3), make_cyclotomic_datum(20, 3))});
    out.push_back({"Q(i) in Q(zeta_20), p=5", quadratic_tower(make_quadratic_datum(-1, 5), make_cyclotomic_datum(20, 5))});
    out.push_back({"Q(zeta_5) in Q(zeta_15), p=19",
                   cyclotomic_tower(make_cyclotomic_datum(5, 19), make_cyclotomic_datum(15, 19))});
    out.push_back({"Q(zeta_20) in Q(zeta_40), p=3",
                   cyclotomic_tower(make_cyclotomic_datum(20, 3), make_cyclotomic_datum(40, 3))});
    return out;
}

std::vector<TowerCase> vanishing_towers()
{
    using galois::make_cyclotomic_datum;
    using galois::make_quadratic_datum;
    std::vector<TowerCase> out;
    out.push_back({"Q(i) in Q(zeta_20), p=5", quadratic_tower(make_quadratic_datum(-1, 5), make_cyclotomic_datum(20, 5))});
    out.push_back({"Q(zeta_5) in Q(zeta_15), p=11",
                   cyclotomic_tower(make_cyclotomic_datum(5, 11, {3}), make_cyclotomic_datum(15, 11))});
    out.push_back({"Q(zeta_13) = Q(zeta_13), p=3", identity_tower(make_cyclotomic_datum(13, 3))});
    out.push_back({"Q(zeta_5) in Q(zeta_15), p=31",
                   cyclotomic_tower(make_cyclotomic_datum(5, 31, {3}), make_cyclotomic_datum(15, 31))});
    return out;
}

}  // namespace cmtorus::report
