#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cmtorus/cohomology/gmodule.hpp"
#include "cmtorus/galois/cm_datum.hpp"
#include "cmtorus/lattice/presented.hpp"

namespace cmtorus::report {

using json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

struct Verdict
{
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Deterministic for fixed inputs: keys are sorted and no timing is kept.
struct Report
{
    std::string operation;
    json inputs = json::object();
    json outputs = json::object();
    std::vector<Verdict> verdicts;

    bool pass() const;
    json to_json() const;
    std::string to_text() const;
};

json structure_json(const lattice::AbGroupStructure& g);
json integer_json(const lattice::Integer& x);
json matrix_json(const lattice::IntMatrix& m);

/// Places, decomposition data and lattice ranks of a datum.
Report datum_report(const galois::CMDatum& datum);

/// e15 e18 e25 rho cg4 cg5n crossed il01p alpha.
const std::vector<std::string>& suite_names();

struct SuiteOptions
{
    std::vector<galois::Preset> presets;
    /// Fan out independent items; results keep input order.
    bool parallel = false;
};

/// Throws ValidationError for an unknown suite. Item failures are recorded
/// as failing verdicts.
Report verify_suite(const std::string& name, const SuiteOptions& options);

struct ClassfieldRequest
{
    std::optional<long> hminus;
    std::optional<long> irregular;
    std::optional<long> forms;
};

/// Throws ValidationError when nothing is requested.
Report classfield_report(const ClassfieldRequest& request);

/// 0 -> A -i-> B -pi-> C -> 0 of finite G-modules.
struct CrossedInstance
{
    std::string name;
    cohomology::GModule a, b, c;
    lattice::IntMatrix i, pi;
};

std::vector<CrossedInstance> crossed_instances();

struct TowerCase
{
    std::string name;
    galois::TowerMap tower;
};

/// Towers for the Weil-lattice transition diagram.
std::vector<TowerCase> weil_towers();
/// Towers for the transition-vanishing rule, even and odd local degree.
std::vector<TowerCase> vanishing_towers();

}  // namespace cmtorus::report
