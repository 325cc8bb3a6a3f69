#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ilseq/errors.hpp"

namespace ilseq {

// A binary sequence of finite period with packed bit storage: bit t lives at
// word t/64, position t%64, and bits beyond the period are kept zero. All
// operations are pure; results are new values.
//
// Display convention: index 0 is the leftmost character of the 0/1 string.
// Shift convention: left_shift(a, tau)(t) = a(t + tau mod n). This is the one
// convention everything downstream depends on; the sequence-polynomial
// self-test in gf2poly pins it at startup.
class PeriodicSequence {
public:
    explicit PeriodicSequence(std::uint64_t period); // all-zero sequence

    static PeriodicSequence from_characteristic_set(std::uint64_t period,
                                                    std::span<const std::uint64_t> ones);
    static PeriodicSequence parse(std::string_view bits);

    std::uint64_t period() const { return period_; }
    std::uint64_t weight() const;

    /// Bit at position t; t is reduced mod period.
    bool bit(std::uint64_t t) const {
        const std::uint64_t r = t % period_;
        return (words_[r >> 6] >> (r & 63)) & 1;
    }

    /// Indices of the ones in one period, ascending (the characteristic set).
    std::vector<std::uint64_t> ones() const;

    /// 64 bits of the periodic stream starting at position `start`.
    std::uint64_t window(std::uint64_t start) const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    std::string to_string() const;

    friend bool operator==(const PeriodicSequence&, const PeriodicSequence&) = default;

private:
    void set_bit(std::uint64_t t, bool value);
    std::uint64_t read_linear(std::uint64_t pos, unsigned count) const;

    std::uint64_t period_;
    std::vector<std::uint64_t> words_;

    friend PeriodicSequence left_shift(const PeriodicSequence&, std::int64_t);
    friend PeriodicSequence complement(const PeriodicSequence&);
    friend PeriodicSequence interleave(const PeriodicSequence&, const PeriodicSequence&);
    friend std::pair<PeriodicSequence, PeriodicSequence> deinterleave(const PeriodicSequence&);
    friend PeriodicSequence set_position(const PeriodicSequence&, std::uint64_t, bool);
};

/// result(t) = a(t + tau mod n); tau may be negative and is reduced mod n.
PeriodicSequence left_shift(const PeriodicSequence& a, std::int64_t tau);

PeriodicSequence complement(const PeriodicSequence& a);

/// Period-2n sequence taking even positions from a and odd positions from b.
/// Periods must match.
PeriodicSequence interleave(const PeriodicSequence& a, const PeriodicSequence& b);

/// Splits an even-period sequence back into its even/odd subsequences.
std::pair<PeriodicSequence, PeriodicSequence> deinterleave(const PeriodicSequence& s);

/// Copy of a with position t (not reduced; must be < period) overwritten.
PeriodicSequence set_position(const PeriodicSequence& a, std::uint64_t t, bool value);

/// Ones and zeros counts equal (even period) or differing by one (odd).
bool is_balanced(const PeriodicSequence& a);

} // namespace ilseq
