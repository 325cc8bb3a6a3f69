#pragma once

// Exact periodic correlation of binary sequences, computed over {+1,-1}
// values ((-1)^bit) with pure integer arithmetic.
//
//   cross_correlation(u, v, tau) = sum over t of (-1)^(u(t) + v(t + tau))
//
// Per shift this is period - 2 * popcount(u XOR L^tau(v)), evaluated on
// packed words. Shifts are normalized into [0, period).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ilseq/bitseq.hpp"

namespace ilseq {

struct CorrelationSpectrum {
    std::uint64_t period = 0;
    std::vector<std::int64_t> values;            // values[tau]
    std::map<std::int64_t, std::uint64_t> histogram;  // value -> multiplicity

    bool operator==(const CorrelationSpectrum&) const = default;
};

std::int64_t cross_correlation(const PeriodicSequence& u, const PeriodicSequence& v,
                               std::int64_t tau);

CorrelationSpectrum cross_correlation_spectrum(const PeriodicSequence& u,
                                               const PeriodicSequence& v);

CorrelationSpectrum autocorrelation_spectrum(const PeriodicSequence& s);

// True iff the autocorrelation of interleave(a, b) decomposes into the
// base correlations at every shift: at even shifts 2k it equals
// R_a(k) + R_b(k); at odd shifts 2k+1 it equals R_{a,b}(k) + R_{b,a}(k+1).
bool interleaved_decomposition_check(const PeriodicSequence& a, const PeriodicSequence& b);

// CSV with header "tau,value", one row per shift, '\n' line ends.
std::string to_csv(const CorrelationSpectrum& spectrum);

// JSON object mapping each value (decimal string key, ascending) to its count.
std::string histogram_json(const std::map<std::int64_t, std::uint64_t>& histogram);

} // namespace ilseq
