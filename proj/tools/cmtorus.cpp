#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "cmtorus/error.hpp"
#include "cmtorus/report/report.hpp"

using namespace cmtorus;

namespace {

struct DatumFlags
{
    std::optional<long> cyclotomic;
    std::optional<long> quadratic;
    std::optional<long> p;
};

void add_datum_flags(CLI::App* cmd, DatumFlags& f)
{
    auto* cyc = cmd->add_option("--cyclotomic", f.cyclotomic, "Q(zeta_n)");
    auto* quad = cmd->add_option("--quadratic", f.quadratic, "Q(sqrt(d)), d < 0 squarefree");
    cyc->excludes(quad);
    cmd->add_option("--p", f.p, "distinguished prime");
}

galois::CMDatum build_datum(const DatumFlags& f)
{
    if (!f.p)
        throw ValidationError("--p is required");
    const auto& extra = galois::preset_probe_primes();
    if (f.cyclotomic)
        return galois::make_cyclotomic_datum(*f.cyclotomic, *f.p, extra);
    if (f.quadratic)
        return galois::make_quadratic_datum(*f.quadratic, *f.p, extra);
    throw ValidationError("one of --cyclotomic or --quadratic is required");
}

int emit(const report::Report& r, bool as_json)
{
    if (as_json)
        std::cout << r.to_json().dump(2) << "\n";
    else
        std::cout << r.to_text();
    return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Character lattices, cohomology and Weil numbers of CM tori"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    bool parallel = false;
    app.add_flag("--json", as_json, "machine-readable report");
    app.add_flag("--parallel", parallel, "fan out independent items");
    app.set_version_flag("--version", report::kToolVersion);

    DatumFlags datum_flags;
    auto* datum_cmd = app.add_subcommand("datum", "print a CM datum, its places and lattice ranks");
    add_datum_flags(datum_cmd, datum_flags);

    std::string suite;
    bool all_presets = false;
    DatumFlags verify_flags;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(report::suite_names()));
    verify_cmd->add_flag("--all-presets", all_presets, "every standard preset (the default)");
    add_datum_flags(verify_cmd, verify_flags);

    report::ClassfieldRequest cf;
    auto* cf_cmd = app.add_subcommand("classfield", "form class groups, relative class numbers, irregular primes");
    cf_cmd->add_option("--hminus", cf.hminus, "h- of Q(zeta_l), l prime");
    cf_cmd->add_option("--irregular", cf.irregular, "irregular primes up to a bound");
    cf_cmd->add_option("--forms", cf.forms, "form class group of a negative discriminant");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*datum_cmd)
            return emit(report::datum_report(build_datum(datum_flags)), as_json);
        if (*verify_cmd) {
            report::SuiteOptions options;
            options.parallel = parallel;
            if (!all_presets && (verify_flags.cyclotomic || verify_flags.quadratic)) {
                auto d = build_datum(verify_flags);
                options.presets.push_back({d.label(), d});
            } else {
                options.presets = galois::standard_presets();
            }
            return emit(report::verify_suite(suite, options), as_json);
        }
        return emit(report::classfield_report(cf), as_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
