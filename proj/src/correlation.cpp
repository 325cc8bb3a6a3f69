#include "ilseq/correlation.hpp"

#include <bit>

namespace ilseq {

namespace {

std::uint64_t normalize(std::int64_t tau, std::uint64_t n) {
    const std::int64_t m = static_cast<std::int64_t>(n);
    return static_cast<std::uint64_t>(((tau % m) + m) % m);
}

// popcount(u XOR L^tau(v)) without materializing the shifted sequence.
std::uint64_t disagreement_count(const PeriodicSequence& u, const PeriodicSequence& v,
                                 std::uint64_t tau) {
    const std::uint64_t n = u.period();
    const auto& words = u.words();
    const unsigned rem = n & 63;
    const std::uint64_t tail_mask = rem ? (std::uint64_t(1) << rem) - 1 : ~std::uint64_t(0);
    std::uint64_t count = 0;
    for (std::size_t k = 0; k < words.size(); ++k) {
        std::uint64_t x = words[k] ^ v.window(tau + 64 * k);
        if (k + 1 == words.size()) x &= tail_mask;
        count += static_cast<std::uint64_t>(std::popcount(x));
    }
    return count;
}

} // namespace

std::int64_t cross_correlation(const PeriodicSequence& u, const PeriodicSequence& v,
                               std::int64_t tau) {
    if (u.period() != v.period()) {
        raise(Errc::PeriodMismatch, "correlation needs equal periods, got " +
                                        std::to_string(u.period()) + " and " +
                                        std::to_string(v.period()));
    }
    const std::uint64_t n = u.period();
    const std::uint64_t t = normalize(tau, n);
    return static_cast<std::int64_t>(n) -
           2 * static_cast<std::int64_t>(disagreement_count(u, v, t));
}

CorrelationSpectrum cross_correlation_spectrum(const PeriodicSequence& u,
                                               const PeriodicSequence& v) {
    if (u.period() != v.period()) {
        raise(Errc::PeriodMismatch, "correlation needs equal periods, got " +
                                        std::to_string(u.period()) + " and " +
                                        std::to_string(v.period()));
    }
    const std::uint64_t n = u.period();
    CorrelationSpectrum spectrum;
    spectrum.period = n;
    spectrum.values.resize(n);
    for (std::uint64_t tau = 0; tau < n; ++tau) {
        const std::int64_t value =
            static_cast<std::int64_t>(n) -
            2 * static_cast<std::int64_t>(disagreement_count(u, v, tau));
        spectrum.values[tau] = value;
        ++spectrum.histogram[value];
    }
    return spectrum;
}

CorrelationSpectrum autocorrelation_spectrum(const PeriodicSequence& s) {
    return cross_correlation_spectrum(s, s);
}

bool interleaved_decomposition_check(const PeriodicSequence& a, const PeriodicSequence& b) {
    if (a.period() != b.period()) {
        raise(Errc::PeriodMismatch, "interleave decomposition needs equal periods");
    }
    const std::uint64_t n = a.period();
    const PeriodicSequence s = interleave(a, b);
    for (std::uint64_t tau = 0; tau < 2 * n; ++tau) {
        const std::int64_t lhs =
            cross_correlation(s, s, static_cast<std::int64_t>(tau));
        std::int64_t rhs;
        if (tau % 2 == 0) {
            const std::int64_t k = static_cast<std::int64_t>(tau / 2);
            rhs = cross_correlation(a, a, k) + cross_correlation(b, b, k);
        } else {
            const std::int64_t k = static_cast<std::int64_t>((tau - 1) / 2);
            rhs = cross_correlation(a, b, k) + cross_correlation(b, a, k + 1);
        }
        if (lhs != rhs) return false;
    }
    return true;
}

std::string to_csv(const CorrelationSpectrum& spectrum) {
    std::string out = "tau,value\n";
    for (std::uint64_t tau = 0; tau < spectrum.values.size(); ++tau) {
        out += std::to_string(tau);
        out += ',';
        out += std::to_string(spectrum.values[tau]);
        out += '\n';
    }
    return out;
}

std::string histogram_json(const std::map<std::int64_t, std::uint64_t>& histogram) {
    std::string out = "{";
    bool first = true;
    for (const auto& [value, count] : histogram) {
        if (!first) out += ',';
        first = false;
        out += '"';
        out += std::to_string(value);
        out += "\":";
        out += std::to_string(count);
    }
    out += '}';
    return out;
}

} // namespace ilseq
