#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qspin/fock.hpp"
#include "qspin/group_data.hpp"

namespace qspin {

struct VerifyConfig {
    GroupPtr group;                   ///< null: each item's default groups
    std::optional<SectorModel> model; ///< empty: each item's default models
    std::optional<int> N;             ///< overrides each item's default degree bound
    int D = 9;
    std::uint64_t seed = 1;
    int heisenberg_samples = 50;
    int qlambda_seeds = 20;
    int lines = 4;
    int negative_lines = 2;
    int variables = 4;
};

struct ItemResult {
    std::string id;
    std::string suite;
    std::string identity;
    bool passed = true;
    std::size_t checks = 0;
    /// Scope on success, first counterexample on failure.
    std::string detail;
};

struct VerifyItem {
    std::string id;
    std::string suite;
    std::string identity;
    std::function<ItemResult(const VerifyConfig&)> run;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<ItemResult> items;
    bool passed() const;
};

/// Every registered item, sorted by suite then id.
const std::vector<VerifyItem>& verify_registry();
/// Suite names, plus "all".
std::vector<std::string> verify_suites();

/// Runs one suite ("all" runs everything); throws on an unknown suite name.
VerifyReport run_suite(const std::string& suite, const VerifyConfig& config);

std::string render_text(const VerifyReport& report);
nlohmann::json to_json(const VerifyReport& report);

} // namespace qspin
