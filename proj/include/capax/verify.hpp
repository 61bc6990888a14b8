#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "capax/code_space.hpp"
#include "capax/fp_core.hpp"

namespace capax {

struct VerifyConfig {
    PrimeModulus p{2};
    std::uint64_t max_n = 1000;           // agreement, bounds, decompose
    std::uint64_t oracle_max_n = 0;       // 0: largest n with p^n <= 128
    std::uint64_t extremal_max_n = 200;
    std::uint64_t max_k = 0;              // 0: largest k with p^(k+1) <= 256
    std::uint64_t increment_matrices = 200;
    std::uint64_t increment_max_n = 10;
    std::uint64_t seed = 1;
    unsigned workers = 0;                 // 0: hardware concurrency
    EnumerationBudget budget;
    // Replacement seeds lambda(1..p) for the meta recurrence; empty means n -> n.
    std::vector<std::uint64_t> meta_seeds;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    std::uint64_t checked = 0;
    std::string summary;
    nlohmann::json details = nlohmann::json::object();
    std::optional<nlohmann::json> counterexample;
};

const std::vector<std::string>& suite_names();

std::uint64_t default_oracle_max_n(PrimeModulus p);
std::uint64_t default_max_k(PrimeModulus p);

// Throws DomainError for an unknown suite name.
SuiteResult run_suite(std::string_view name, const VerifyConfig& config);

nlohmann::json verify_report(const VerifyConfig& config, const std::vector<SuiteResult>& results);

}  // namespace capax
