#pragma once

/// Manifest-driven experiment suites: each maps an id to a parameterized run
/// producing a JSON report plus CSV tables. Reports are deterministic for a
/// fixed (config, seed) apart from the timestamp field.

#include <string>
#include <vector>

#include <json.hpp>

namespace eoslab {

struct ExperimentReport {
    std::string id;
    std::string anchor;  // short tag naming the statement the suite exercises
    nlohmann::json config;   // echo of the effective configuration
    nlohmann::json results;  // tables, fitted constants, flags
    bool passed = false;
    // (table name, csv text) companions to the JSON report
    std::vector<std::pair<std::string, std::string>> csv_tables;

    nlohmann::json to_json(bool with_timestamp = true) const;
};

struct ExperimentInfo {
    std::string id;
    std::string anchor;
    std::string description;
};

const std::vector<ExperimentInfo>& list_experiments();

/// Runs one suite. Unknown id throws std::invalid_argument. Config keys not
/// understood by the suite are ignored; every suite accepts "seed".
ExperimentReport run_experiment(const std::string& id,
                                const nlohmann::json& config);

/// Writes report.json and one CSV file per table into out_dir (created if
/// missing). Returns the report path.
std::string write_report(const ExperimentReport& rep, const std::string& out_dir);

}  // namespace eoslab
