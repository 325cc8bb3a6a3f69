#include "ilseq/bitseq.hpp"

#include <bit>
#include <string>

namespace ilseq {

namespace {

std::uint64_t word_count(std::uint64_t period) {
    return (period + 63) / 64;
}

std::uint64_t tail_mask(std::uint64_t period) {
    const unsigned rem = period & 63;
    return rem == 0 ? ~std::uint64_t(0) : ((std::uint64_t(1) << rem) - 1);
}

// Interleave-with-zeros: bit k of x moves to bit 2k of the result.
std::uint64_t spread32(std::uint32_t x) {
    std::uint64_t v = x;
    v = (v | (v << 16)) & 0x0000FFFF0000FFFFull;
    v = (v | (v << 8)) & 0x00FF00FF00FF00FFull;
    v = (v | (v << 4)) & 0x0F0F0F0F0F0F0F0Full;
    v = (v | (v << 2)) & 0x3333333333333333ull;
    v = (v | (v << 1)) & 0x5555555555555555ull;
    return v;
}

} // namespace

PeriodicSequence::PeriodicSequence(std::uint64_t period) : period_(period) {
    if (period == 0) {
        raise(Errc::BadArgument, "period must be positive");
    }
    words_.assign(word_count(period), 0);
}

void PeriodicSequence::set_bit(std::uint64_t t, bool value) {
    const std::uint64_t mask = std::uint64_t(1) << (t & 63);
    if (value) {
        words_[t >> 6] |= mask;
    } else {
        words_[t >> 6] &= ~mask;
    }
}

PeriodicSequence PeriodicSequence::from_characteristic_set(std::uint64_t period,
                                                           std::span<const std::uint64_t> ones) {
    PeriodicSequence s(period);
    for (std::uint64_t idx : ones) {
        if (idx >= period) {
            raise(Errc::IndexOutOfRange,
                  std::to_string(idx) + " not in [0, " + std::to_string(period) + ")");
        }
        s.set_bit(idx, true);
    }
    return s;
}

PeriodicSequence PeriodicSequence::parse(std::string_view bits) {
    if (bits.empty()) {
        raise(Errc::BadArgument, "empty sequence string");
    }
    PeriodicSequence s(bits.size());
    for (std::size_t t = 0; t < bits.size(); ++t) {
        if (bits[t] == '1') {
            s.set_bit(t, true);
        } else if (bits[t] != '0') {
            raise(Errc::BadArgument, "sequence strings may only contain 0 and 1");
        }
    }
    return s;
}

std::uint64_t PeriodicSequence::weight() const {
    std::uint64_t w = 0;
    for (std::uint64_t word : words_) w += std::popcount(word);
    return w;
}

std::vector<std::uint64_t> PeriodicSequence::ones() const {
    std::vector<std::uint64_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        std::uint64_t word = words_[k];
        while (word != 0) {
            const unsigned b = std::countr_zero(word);
            out.push_back(64 * k + b);
            word &= word - 1;
        }
    }
    return out;
}

std::uint64_t PeriodicSequence::read_linear(std::uint64_t pos, unsigned count) const {
    // count in [1, 64] and pos + count <= period
    const std::uint64_t w = pos >> 6;
    const unsigned off = pos & 63;
    std::uint64_t out = words_[w] >> off;
    if (off != 0 && w + 1 < words_.size()) {
        out |= words_[w + 1] << (64 - off);
    }
    if (count < 64) {
        out &= (std::uint64_t(1) << count) - 1;
    }
    return out;
}

std::uint64_t PeriodicSequence::window(std::uint64_t start) const {
    std::uint64_t pos = start % period_;
    std::uint64_t out = 0;
    unsigned filled = 0;
    while (filled < 64) {
        const std::uint64_t avail = period_ - pos;
        const unsigned take =
            static_cast<unsigned>(std::min<std::uint64_t>(64 - filled, avail));
        out |= read_linear(pos, take) << filled;
        filled += take;
        pos += take;
        if (pos == period_) pos = 0;
    }
    return out;
}

std::string PeriodicSequence::to_string() const {
    std::string out(period_, '0');
    for (std::uint64_t t : ones()) out[t] = '1';
    return out;
}

PeriodicSequence left_shift(const PeriodicSequence& a, std::int64_t tau) {
    const std::uint64_t n = a.period_;
    const std::uint64_t t = static_cast<std::uint64_t>(((tau % static_cast<std::int64_t>(n)) +
                                                        static_cast<std::int64_t>(n))) %
                            n;
    PeriodicSequence out(n);
    for (std::size_t k = 0; k < out.words_.size(); ++k) {
        out.words_[k] = a.window(t + 64 * k);
    }
    out.words_.back() &= tail_mask(n);
    return out;
}

PeriodicSequence complement(const PeriodicSequence& a) {
    PeriodicSequence out = a;
    for (std::uint64_t& word : out.words_) word = ~word;
    out.words_.back() &= tail_mask(a.period_);
    return out;
}

PeriodicSequence interleave(const PeriodicSequence& a, const PeriodicSequence& b) {
    if (a.period_ != b.period_) {
        raise(Errc::PeriodMismatch, std::to_string(a.period_) + " vs " + std::to_string(b.period_));
    }
    const std::uint64_t n = a.period_;
    PeriodicSequence out(2 * n);
    // Output word j merges bits 32j..32j+31 of each input.
    for (std::size_t j = 0; j < out.words_.size(); ++j) {
        const std::uint64_t pos = 32 * j;
        const unsigned take = static_cast<unsigned>(std::min<std::uint64_t>(32, n - pos));
        const auto lo = static_cast<std::uint32_t>(a.read_linear(pos, take));
        const auto hi = static_cast<std::uint32_t>(b.read_linear(pos, take));
        out.words_[j] = spread32(lo) | (spread32(hi) << 1);
    }
    return out;
}

std::pair<PeriodicSequence, PeriodicSequence> deinterleave(const PeriodicSequence& s) {
    if (s.period_ % 2 != 0) {
        raise(Errc::PeriodMismatch, "cannot deinterleave an odd period");
    }
    const std::uint64_t n = s.period_ / 2;
    PeriodicSequence a(n);
    PeriodicSequence b(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        a.set_bit(i, s.bit(2 * i));
        b.set_bit(i, s.bit(2 * i + 1));
    }
    return {a, b};
}

PeriodicSequence set_position(const PeriodicSequence& a, std::uint64_t t, bool value) {
    if (t >= a.period_) {
        raise(Errc::IndexOutOfRange,
              std::to_string(t) + " not in [0, " + std::to_string(a.period_) + ")");
    }
    PeriodicSequence out = a;
    out.set_bit(t, value);
    return out;
}

bool is_balanced(const PeriodicSequence& a) {
    const std::uint64_t n = a.period();
    const std::uint64_t w = a.weight();
    if (n % 2 == 0) return w == n / 2;
    return w == (n - 1) / 2 || w == (n + 1) / 2;
}

} // namespace ilseq
