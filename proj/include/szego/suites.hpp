#pragma once

#include "szego/certificates.hpp"
#include "szego/constructions.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace szego {

// Bad flags, config files or measure files.  Raised before any computation.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

struct SuiteConfig {
    std::string suite;
    int precision_bits = 256;
    int grid = kDefaultGrid;
    std::uint64_t seed = 1;
    std::map<std::string, double> tolerances;   // overrides by key, see suite_tolerance_keys
    std::string out;                            // empty: stdout
    std::string format = "json";
    std::string filter;                         // case-id prefix; empty runs everything
    std::string measure_path;                   // extra discrete-bounds case on a measure file
    int measure_degree = 16;

    double tol(const std::string& key) const;
};

// Keys accepted as tolerance overrides with their defaults.
const std::map<std::string, double>& suite_tolerance_keys();

// Key-value pairs as written in a config file or collected from flags.
// Keys: suite, precision-bits, grid, seed, out, format, filter, measure,
// degree, tol.<key>.  Throws ConfigError naming the offending key.
void apply_setting(SuiteConfig& cfg, const std::string& key, const std::string& value);
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path);
void validate(const SuiteConfig& cfg);

struct ReportValue {
    std::string name;
    std::string value;            // decimal string
    std::string bound;            // decimal string, empty when only reported
    std::string relation;         // "<=", "<", ">=", ">", "|.| <=", "==", "report"
    double tolerance = 0;         // slack allowed in the comparison
    bool pass = true;
};

struct CaseRecord {
    std::string id;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string lower, value, upper;   // headline: lower <= value <= upper when present
    std::vector<ReportValue> values;
    std::vector<std::string> notes;
    std::string error;            // per-case failure that stopped the computation
    int precision_bits = 0;
    bool pass = false;
    double seconds = 0;
};

struct Report {
    std::string suite;
    std::uint64_t seed = 0;
    int precision_bits = 0;
    int grid = 0;
    std::map<std::string, double> tolerances;
    std::vector<CaseRecord> cases;
    int passed = 0;
    int failed = 0;
    double seconds = 0;

    bool all_pass() const { return failed == 0; }
    const CaseRecord* find(const std::string& id) const;
};

// Case ids a config would run, in report order.  Cheap: nothing is computed.
std::vector<std::string> suite_case_ids(const SuiteConfig& cfg);

Report run_suite(const SuiteConfig& cfg);

std::string toolchain_description();
// timing fields are dropped when include_timing is false
std::string report_to_json(const Report& r, bool include_timing = true);
std::string report_to_csv(const Report& r);
// writes to path, or stdout when path is empty; throws std::runtime_error on I/O failure
void emit_report(const Report& r, const std::string& format, const std::string& path);

// Generators reachable by family name, exported in the measure JSON format.
const std::vector<std::string>& generator_names();
Measure generate_measure(const std::string& family, const std::map<std::string, std::string>& params);

}  // namespace szego
