#include "ilseq/report.hpp"

#include "ilseq/correlation.hpp"
#include "ilseq/gf2poly.hpp"

namespace ilseq {

namespace {

ordered_json histogram_to_json(const ValueHistogram& histogram) {
    ordered_json out = ordered_json::object();
    for (const auto& [value, count] : histogram) {
        out[std::to_string(value)] = count;
    }
    return out;
}

std::string case_text(CaseTuple c) {
    return std::to_string(c.i) + "," + std::to_string(c.j) + "," + std::to_string(c.l);
}

std::string histogram_text(const ValueHistogram& histogram) {
    std::string out = "{";
    bool first = true;
    for (const auto& [value, count] : histogram) {
        if (!first) out += ", ";
        first = false;
        out += std::to_string(value) + ":" + std::to_string(count);
    }
    return out + "}";
}

} // namespace

SystemChecks run_system_checks(const CyclotomicSystem& sys) {
    const std::uint64_t n = sys.modulus();
    auto [u, v] = base_pair(sys, CaseTuple{0, 1, 2});
    const PeriodicSequence uprime = set_position(u, 0, true);

    SystemChecks checks;
    checks.n = n;
    checks.beta = sys.beta();
    checks.class_of_two = sys.class_of(2);

    const LinearComplexityResult lc_uprime = linear_complexity(uprime);
    checks.uprime_minimal_poly_ok =
        lc_uprime.lc == n && lc_uprime.minimal_polynomial == BinaryPolynomial::x_pow_plus_one(n);

    const LinearComplexityResult lc_v = linear_complexity(v);
    checks.v_minimal_poly_ok = lc_v.lc == n - 1 &&
                               lc_v.minimal_polynomial == BinaryPolynomial::all_ones(n) &&
                               lc_v.gcd_with_period_poly == BinaryPolynomial::x_pow_plus_one(1);

    checks.doubling_identity_ok = doubling_identity_check(sys).holds;
    checks.base_structure = base_correlation_structure(sys);
    return checks;
}

AnalysisReport analyze(const ConstructionInstance& instance, const SystemChecks& checks) {
    const std::uint64_t n = instance.sys.modulus();
    const std::uint64_t period = 2 * n;

    AnalysisReport report;
    report.n = n;
    report.beta = instance.sys.beta();
    report.case_tuple = instance.case_tuple;
    report.variant = instance.variant;
    report.sequence = instance.sequence.to_string();
    report.weight = instance.sequence.weight();
    report.balanced = is_balanced(instance.sequence);

    const CorrelationSpectrum spectrum = autocorrelation_spectrum(instance.sequence);
    report.spectrum_histogram = spectrum.histogram;
    report.claimed = claimed_distribution(n, instance.variant);
    report.counted = counted_distribution(n, instance.variant);
    report.counted_match = report.spectrum_histogram == report.counted;

    report.optimal = true;
    for (std::uint64_t tau = 1; tau < period; ++tau) {
        if (spectrum.values[tau] != -2 && spectrum.values[tau] != 2) report.optimal = false;
    }

    report.weight_ok = instance.variant == Variant::SPrime
                           ? (report.balanced && report.weight == n)
                           : report.weight == n - 1;

    report.per_shift_match = true;
    for (std::uint64_t tau = 0; tau < period; ++tau) {
        const std::int64_t expected = expected_autocorrelation(
            instance.sys, instance.case_tuple, instance.variant,
            static_cast<std::int64_t>(tau));
        if (spectrum.values[tau] != expected) report.per_shift_match = false;
    }

    report.lc = linear_complexity(instance.sequence).lc;
    report.bm_lc = berlekamp_massey(instance.sequence);
    report.lc_bound = lc_lower_bound(instance.variant, n);
    report.bound_satisfied = report.lc >= report.lc_bound;

    report.doubling_identity_ok = checks.doubling_identity_ok;
    report.observed_y_sign = checks.base_structure.y_sign;
    return report;
}

bool hard_checks_pass(const AnalysisReport& report) {
    bool pass = report.optimal && report.weight_ok && report.lc == report.bm_lc &&
                report.bound_satisfied;
    if (report.variant == Variant::SPrime) {
        pass = pass && report.per_shift_match && report.counted_match;
    }
    return pass;
}

bool hard_checks_pass(const SystemChecks& checks) {
    return checks.uprime_minimal_poly_ok && checks.v_minimal_poly_ok &&
           checks.doubling_identity_ok;
}

SystemVerification verify_system(std::uint64_t n, std::optional<std::uint64_t> beta_override) {
    const CyclotomicSystem sys = make_system(n, beta_override);

    SystemVerification verification;
    verification.checks = run_system_checks(sys);
    verification.hard_pass = hard_checks_pass(verification.checks);
    for (const CaseTuple c : kAdmissibleCases) {
        for (const Variant variant : {Variant::S, Variant::SPrime}) {
            AnalysisReport report = analyze(construct(sys, c, variant), verification.checks);
            verification.hard_pass = verification.hard_pass && hard_checks_pass(report);
            verification.reports.push_back(std::move(report));
        }
    }
    return verification;
}

ordered_json to_json(const AnalysisReport& report) {
    ordered_json out = ordered_json::object();
    out["n"] = report.n;
    out["beta"] = report.beta;
    out["case"] = {report.case_tuple.i, report.case_tuple.j, report.case_tuple.l};
    out["variant"] = variant_name(report.variant);
    out["sequence"] = report.sequence;
    out["weight"] = report.weight;
    out["balanced"] = report.balanced;
    out["spectrum_histogram"] = histogram_to_json(report.spectrum_histogram);
    out["claimed_distribution"] = histogram_to_json(report.claimed);
    out["counted_distribution"] = histogram_to_json(report.counted);
    out["per_shift_match"] = report.per_shift_match;
    out["lc"] = report.lc;
    out["bm_lc"] = report.bm_lc;
    out["lc_bound"] = report.lc_bound;
    out["bound_satisfied"] = report.bound_satisfied;
    out["doubling_identity_ok"] = report.doubling_identity_ok;
    out["observed_y_sign"] = report.observed_y_sign;
    return out;
}

ordered_json to_json(const SystemChecks& checks) {
    ordered_json out = ordered_json::object();
    out["uprime_minimal_poly_ok"] = checks.uprime_minimal_poly_ok;
    out["v_minimal_poly_ok"] = checks.v_minimal_poly_ok;
    out["doubling_identity_ok"] = checks.doubling_identity_ok;
    out["class_of_two"] = checks.class_of_two;
    out["observed_y_sign"] = checks.base_structure.y_sign;
    return out;
}

ordered_json to_json(const SystemVerification& verification) {
    ordered_json out = ordered_json::object();
    out["n"] = verification.checks.n;
    out["beta"] = verification.checks.beta;
    out["base_checks"] = to_json(verification.checks);
    ordered_json reports = ordered_json::array();
    for (const AnalysisReport& report : verification.reports) {
        reports.push_back(to_json(report));
    }
    out["reports"] = std::move(reports);
    out["hard_pass"] = verification.hard_pass;
    return out;
}

std::string to_text(const AnalysisReport& report) {
    std::string out;
    out += "n=" + std::to_string(report.n) + " beta=" + std::to_string(report.beta) +
           " case=(" + case_text(report.case_tuple) + ") variant=" +
           variant_name(report.variant) + "\n";
    out += "  sequence " + report.sequence + "\n";
    out += "  weight " + std::to_string(report.weight) +
           (report.balanced ? " (balanced)" : " (unbalanced)") + "\n";
    out += "  spectrum " + histogram_text(report.spectrum_histogram) + "\n";
    out += "  counted  " + histogram_text(report.counted) +
           (report.counted_match ? " match" : " MISMATCH") + "\n";
    out += "  claimed  " + histogram_text(report.claimed) +
           (report.spectrum_histogram == report.claimed ? " match" : " differs (informational)") +
           "\n";
    out += std::string("  per-shift closed form ") + (report.per_shift_match ? "ok" : "FAIL") +
           "\n";
    out += "  lc " + std::to_string(report.lc) + " (recurrence oracle " +
           std::to_string(report.bm_lc) + ", bound " + std::to_string(report.lc_bound) +
           (report.bound_satisfied ? ", ok" : ", FAIL") + ")\n";
    return out;
}

std::string to_text(const SystemVerification& verification) {
    const SystemChecks& checks = verification.checks;
    std::string out;
    out += "n=" + std::to_string(checks.n) + " beta=" + std::to_string(checks.beta) +
           " class_of_two=" + std::to_string(checks.class_of_two) + "\n";
    out += std::string("  u' minimal polynomial ") +
           (checks.uprime_minimal_poly_ok ? "ok" : "FAIL") + "\n";
    out += std::string("  v  minimal polynomial ") +
           (checks.v_minimal_poly_ok ? "ok" : "FAIL") + "\n";
    out += std::string("  doubling identity ") +
           (checks.doubling_identity_ok ? "ok" : "FAIL") + "\n";
    out += "  observed y sign " + std::to_string(checks.base_structure.y_sign) + "\n";
    for (const AnalysisReport& report : verification.reports) {
        out += to_text(report);
    }
    out += std::string("hard checks ") + (verification.hard_pass ? "PASS" : "FAIL") + "\n";
    return out;
}

} // namespace ilseq
