#include "ilseq/gf2poly.hpp"

#include <algorithm>
#include <bit>

namespace ilseq {

namespace {

// Same zero-interleave as in bitseq; local copy keeps the modules decoupled.
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

void BinaryPolynomial::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

BinaryPolynomial BinaryPolynomial::one() {
    BinaryPolynomial p;
    p.words_.push_back(1);
    return p;
}

BinaryPolynomial BinaryPolynomial::monomial(std::uint64_t degree) {
    BinaryPolynomial p;
    p.words_.assign(degree / 64 + 1, 0);
    p.words_.back() = std::uint64_t(1) << (degree & 63);
    return p;
}

BinaryPolynomial BinaryPolynomial::x_pow_plus_one(std::uint64_t n) {
    BinaryPolynomial p = monomial(n);
    p.words_[0] ^= 1;
    p.trim(); // n == 0 collapses to zero
    return p;
}

BinaryPolynomial BinaryPolynomial::all_ones(std::uint64_t n) {
    BinaryPolynomial p;
    if (n == 0) return p;
    p.words_.assign((n + 63) / 64, ~std::uint64_t(0));
    const unsigned rem = n & 63;
    if (rem != 0) p.words_.back() = (std::uint64_t(1) << rem) - 1;
    return p;
}

std::int64_t BinaryPolynomial::degree() const {
    if (words_.empty()) return -1;
    const int top = 63 - std::countl_zero(words_.back());
    return static_cast<std::int64_t>(64 * (words_.size() - 1) + top);
}

bool BinaryPolynomial::coeff(std::uint64_t k) const {
    const std::uint64_t w = k >> 6;
    if (w >= words_.size()) return false;
    return (words_[w] >> (k & 63)) & 1;
}

void BinaryPolynomial::set_coeff(std::uint64_t k, bool value) {
    const std::uint64_t w = k >> 6;
    if (value) {
        if (w >= words_.size()) words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t(1) << (k & 63);
    } else if (w < words_.size()) {
        words_[w] &= ~(std::uint64_t(1) << (k & 63));
        trim();
    }
}

void BinaryPolynomial::xor_shifted(const BinaryPolynomial& other, std::uint64_t shift) {
    const std::uint64_t word_shift = shift >> 6;
    const unsigned bit_shift = shift & 63;
    const std::uint64_t needed = word_shift + other.words_.size() + (bit_shift ? 1 : 0);
    if (words_.size() < needed) words_.resize(needed, 0);
    for (std::size_t k = 0; k < other.words_.size(); ++k) {
        const std::uint64_t w = other.words_[k];
        words_[word_shift + k] ^= w << bit_shift;
        if (bit_shift != 0) {
            words_[word_shift + k + 1] ^= w >> (64 - bit_shift);
        }
    }
    trim();
}

BinaryPolynomial operator+(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    BinaryPolynomial out = a.words_.size() >= b.words_.size() ? a : b;
    const BinaryPolynomial& small = a.words_.size() >= b.words_.size() ? b : a;
    for (std::size_t k = 0; k < small.words_.size(); ++k) {
        out.words_[k] ^= small.words_[k];
    }
    out.trim();
    return out;
}

BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    BinaryPolynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    const BinaryPolynomial& iter = a.degree() <= b.degree() ? a : b;
    const BinaryPolynomial& base = a.degree() <= b.degree() ? b : a;
    for (std::size_t k = 0; k < iter.words_.size(); ++k) {
        std::uint64_t word = iter.words_[k];
        while (word != 0) {
            const unsigned bit = std::countr_zero(word);
            out.xor_shifted(base, 64 * k + bit);
            word &= word - 1;
        }
    }
    return out;
}

std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& a,
                                                     const BinaryPolynomial& b) {
    if (b.is_zero()) {
        raise(Errc::DivisionByZeroPolynomial);
    }
    BinaryPolynomial quotient;
    BinaryPolynomial remainder = a;
    const std::int64_t db = b.degree();
    while (remainder.degree() >= db) {
        const std::uint64_t k = static_cast<std::uint64_t>(remainder.degree() - db);
        remainder.xor_shifted(b, k);
        quotient.set_coeff(k, true);
    }
    return {quotient, remainder};
}

BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    return divmod(a, b).second;
}

BinaryPolynomial operator/(const BinaryPolynomial& a, const BinaryPolynomial& b) {
    return divmod(a, b).first;
}

BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b) {
    while (!b.is_zero()) {
        BinaryPolynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BinaryPolynomial BinaryPolynomial::substitute_square() const {
    BinaryPolynomial out;
    out.words_.assign(words_.size() * 2, 0);
    for (std::size_t k = 0; k < words_.size(); ++k) {
        out.words_[2 * k] = spread32(static_cast<std::uint32_t>(words_[k]));
        out.words_[2 * k + 1] = spread32(static_cast<std::uint32_t>(words_[k] >> 32));
    }
    out.trim();
    return out;
}

std::string BinaryPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::int64_t k = degree(); k >= 0; --k) {
        if (!coeff(static_cast<std::uint64_t>(k))) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += "1";
        } else if (k == 1) {
            out += "x";
        } else {
            out += "x^" + std::to_string(k);
        }
    }
    return out;
}

std::string BinaryPolynomial::to_hex() const {
    if (is_zero()) return "0x0";
    static const char digits[] = "0123456789abcdef";
    std::string out;
    bool leading = true;
    for (std::size_t k = words_.size(); k-- > 0;) {
        for (int shift = 60; shift >= 0; shift -= 4) {
            const unsigned nibble = (words_[k] >> shift) & 0xF;
            if (leading && nibble == 0) continue;
            leading = false;
            out += digits[nibble];
        }
    }
    return "0x" + out;
}

BinaryPolynomial sequence_polynomial(const PeriodicSequence& s) {
    BinaryPolynomial p;
    p.words_ = s.words();
    p.trim();
    return p;
}

LinearComplexityResult linear_complexity(const PeriodicSequence& s) {
    const std::uint64_t n = s.period();
    const BinaryPolynomial period_poly = BinaryPolynomial::x_pow_plus_one(n);
    const BinaryPolynomial g = gcd(period_poly, sequence_polynomial(s));
    LinearComplexityResult result;
    result.gcd_with_period_poly = g;
    result.minimal_polynomial = period_poly / g;
    result.lc = n - static_cast<std::uint64_t>(g.degree());
    return result;
}

std::uint64_t berlekamp_massey(const PeriodicSequence& s, std::uint64_t num_terms) {
    const std::uint64_t n = s.period();
    const std::uint64_t total = num_terms == 0 ? 2 * n : num_terms;

    // Iterative LFSR synthesis over GF(2). C is the current connection
    // polynomial, B the one before the last length change.
    BinaryPolynomial c = BinaryPolynomial::one();
    BinaryPolynomial b = BinaryPolynomial::one();
    std::uint64_t lfsr_len = 0;
    std::uint64_t gap = 1;

    for (std::uint64_t i = 0; i < total; ++i) {
        bool discrepancy = s.bit(i);
        for (std::uint64_t k = 1; k <= lfsr_len; ++k) {
            if (k <= i && c.coeff(k) && s.bit(i - k)) discrepancy = !discrepancy;
        }
        if (!discrepancy) {
            ++gap;
            continue;
        }
        if (2 * lfsr_len <= i) {
            BinaryPolynomial prev = c;
            BinaryPolynomial shifted = b;
            shifted = shifted * BinaryPolynomial::monomial(gap);
            c = c + shifted;
            lfsr_len = i + 1 - lfsr_len;
            b = std::move(prev);
            gap = 1;
        } else {
            BinaryPolynomial shifted = b * BinaryPolynomial::monomial(gap);
            c = c + shifted;
            ++gap;
        }
    }
    return lfsr_len;
}

ShiftTransform shift_transform_convention() {
    // Asymmetric probe sequence: x^(n-tau) and x^tau transforms disagree on it.
    const PeriodicSequence probe = PeriodicSequence::parse("1101000");
    const std::uint64_t n = probe.period();
    const std::uint64_t tau = 2;
    const BinaryPolynomial period_poly = BinaryPolynomial::x_pow_plus_one(n);
    const BinaryPolynomial shifted = sequence_polynomial(left_shift(probe, tau));
    const BinaryPolynomial base = sequence_polynomial(probe);
    const BinaryPolynomial with_n_minus_tau =
        (BinaryPolynomial::monomial(n - tau) * base) % period_poly;
    const BinaryPolynomial with_tau = (BinaryPolynomial::monomial(tau) * base) % period_poly;
    if (shifted == with_n_minus_tau && shifted != with_tau) {
        return ShiftTransform::PeriodMinusShift;
    }
    if (shifted == with_tau && shifted != with_n_minus_tau) {
        return ShiftTransform::Shift;
    }
    return ShiftTransform::Unresolved;
}

} // namespace ilseq
