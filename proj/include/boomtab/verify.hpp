#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boomtab/field.hpp"

namespace boomtab {

enum class BudgetMode { automatic, full, sampled };

struct VerifyOptions {
    int n = 0;
    std::optional<poly_t> modulus;
    std::optional<elem_t> generator;
    std::map<std::string, std::string> params;  // e.g. {"s": "2"}
    BudgetMode budget = BudgetMode::automatic;
    std::uint64_t samples = 100000;  // per check when sampling
    std::optional<std::string> sbox;
    std::uint64_t seed = 1;
};

// "full", "auto", or a tuple count.
void parse_budget(std::string_view text, VerifyOptions& opt);
// "s=2,maps=20" -> map. ArgumentError on malformed pairs.
std::map<std::string, std::string> parse_params(std::string_view text);

struct CheckResult {
    std::string name;
    std::string domain;
    std::uint64_t checked = 0;
    std::uint64_t mismatches = 0;
    std::string first_counterexample;
    // Reported but never fails the suite (negative controls, comparisons).
    bool informational = false;
    std::string note;
    bool passed() const { return informational || mismatches == 0; }
};

struct SuiteReport {
    std::string suite;
    std::string subject;
    bool skipped = false;
    std::string skip_reason;
    std::vector<CheckResult> checks;
    bool passed() const;
};

const std::vector<std::string>& suite_names();  // gold ... relations, all

// HypothesisError when the suite cannot run at these options, ArgumentError for an
// unknown suite or bad parameters. "all" skips infeasible suites instead of throwing.
std::vector<SuiteReport> run_suite(std::string_view suite, const VerifyOptions& opt);

void write_report(std::ostream& out, const std::vector<SuiteReport>& reports);

}  // namespace boomtab
