#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ilseq/errors.hpp"

namespace ilseq {

// Residue arithmetic stays in one machine word, and the correlation engine is
// quadratic in N anyway, so moduli are capped here.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t(1) << 31;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic primality test for 64-bit integers (Miller-Rabin with a
/// fixed witness set that is exact over the full 64-bit range).
bool is_prime(std::uint64_t n);

// An admissible modulus: N prime, N = 4f + 1 with f = y^2 an odd square.
// Such N are always congruent to 5 mod 8.
struct ParameterSet {
    std::uint64_t n = 0;
    std::uint64_t f = 0;
    std::uint64_t y_abs = 0;

    friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

/// Checks the family conditions on N and fails with the first violated one:
/// NotPrime, NotCongruent1Mod4, FNotPerfectSquare, FEven.
ParameterSet validate_parameters(std::uint64_t n);

/// All admissible N <= max_n in increasing order. Enumerates odd y and tests
/// 4y^2 + 1 for primality, so nothing outside the family is ever probed.
std::vector<ParameterSet> scan_parameters(std::uint64_t max_n);

/// Least g >= 2 generating the full multiplicative group mod n (n prime).
std::uint64_t smallest_primitive_root(std::uint64_t n);

// The partition of Z_N \ {0} into the four cosets of the index-4 subgroup
// generated by beta^4: class j holds the residues beta^(4k+j). Immutable
// after construction and safe to share across threads.
class CyclotomicSystem {
public:
    CyclotomicSystem(const ParameterSet& params, std::uint64_t beta);

    const ParameterSet& params() const { return params_; }
    std::uint64_t modulus() const { return params_.n; }
    std::uint64_t beta() const { return beta_; }

    /// Class index in 0..3 of a residue; the argument is reduced mod N first.
    /// Raises ZeroResidue for multiples of N.
    int class_of(std::uint64_t residue) const;

    /// Ascending list of the f members of one class.
    std::vector<std::uint64_t> class_members(int cls) const;

private:
    ParameterSet params_;
    std::uint64_t beta_;
    std::vector<std::uint8_t> table_; // residue -> class; entry 0 unused
};

CyclotomicSystem build_classes(const ParameterSet& params, std::uint64_t beta);

/// validate_parameters + primitive-root selection + build_classes in one go.
/// The default root is the smallest one; the class containing 2 depends on
/// this choice, so callers that care pass an override.
CyclotomicSystem make_system(std::uint64_t n,
                             std::optional<std::uint64_t> beta_override = std::nullopt);

/// A primitive root that places 2 in the requested class (1 or 3).
/// Used to reach the other branch of the doubling identity.
std::uint64_t primitive_root_with_class_of_two(const ParameterSet& params, int wanted_class);

} // namespace ilseq
