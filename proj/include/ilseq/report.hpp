#pragma once

// Verification reports. analyze() measures one constructed instance
// against its closed-form oracles; run_system_checks() covers the
// per-modulus facts tied to the case (0,1,2) base pair. HARD checks
// decide the verify exit status; the claimed-distribution comparison is
// informational only and never fails a run.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ilseq/construction.hpp"

namespace ilseq {

using ordered_json = nlohmann::ordered_json;

struct SystemChecks {
    std::uint64_t n = 0;
    std::uint64_t beta = 0;
    int class_of_two = 0;
    bool uprime_minimal_poly_ok = false;  // minimal polynomial of u' is x^N + 1
    bool v_minimal_poly_ok = false;       // minimal polynomial of v is 1 + x + ... + x^(N-1)
    bool doubling_identity_ok = false;
    BaseCorrelationStructure base_structure;
};

SystemChecks run_system_checks(const CyclotomicSystem& sys);

struct AnalysisReport {
    std::uint64_t n = 0;
    std::uint64_t beta = 0;
    CaseTuple case_tuple;
    Variant variant = Variant::SPrime;
    std::string sequence;
    std::uint64_t weight = 0;
    bool balanced = false;
    ValueHistogram spectrum_histogram;
    ValueHistogram claimed;
    ValueHistogram counted;
    bool optimal = false;          // every out-of-phase value is -2 or +2
    bool weight_ok = false;        // weight N for SPrime, N-1 for S
    bool per_shift_match = false;  // brute force equals the closed form at every shift
    bool counted_match = false;    // spectrum histogram equals the counted distribution
    std::uint64_t lc = 0;
    std::uint64_t bm_lc = 0;
    std::uint64_t lc_bound = 0;
    bool bound_satisfied = false;
    bool doubling_identity_ok = false;
    int observed_y_sign = 0;
};

AnalysisReport analyze(const ConstructionInstance& instance, const SystemChecks& checks);

// HARD gate for one instance: optimality, LC bounds, recurrence-oracle
// agreement, weight/balance; for SPrime additionally the per-shift match
// and the counted distribution.
bool hard_checks_pass(const AnalysisReport& report);

// HARD gate for the per-system facts: both minimal polynomials and the
// doubling identity.
bool hard_checks_pass(const SystemChecks& checks);

struct SystemVerification {
    SystemChecks checks;
    std::vector<AnalysisReport> reports;  // cases in canonical order, variant s then sprime
    bool hard_pass = false;
};

SystemVerification verify_system(std::uint64_t n, std::optional<std::uint64_t> beta_override);

ordered_json to_json(const AnalysisReport& report);
ordered_json to_json(const SystemChecks& checks);
ordered_json to_json(const SystemVerification& verification);

std::string to_text(const AnalysisReport& report);
std::string to_text(const SystemVerification& verification);

} // namespace ilseq
