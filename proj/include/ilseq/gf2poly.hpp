#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ilseq/bitseq.hpp"
#include "ilseq/errors.hpp"

namespace ilseq {

// Polynomial over the two-element field, packed by degree: bit k of word k/64
// is the coefficient of x^k. Canonical form strips high zero words; the zero
// polynomial is the empty word vector and reports degree -1.
//
// Over this field x^n - 1 and x^n + 1 coincide; the code spells it x^n + 1.
class BinaryPolynomial {
public:
    BinaryPolynomial() = default; // zero

    static BinaryPolynomial one();
    static BinaryPolynomial monomial(std::uint64_t degree); // x^degree
    static BinaryPolynomial x_pow_plus_one(std::uint64_t n); // x^n + 1
    static BinaryPolynomial all_ones(std::uint64_t n);       // 1 + x + ... + x^(n-1)

    bool is_zero() const { return words_.empty(); }
    std::int64_t degree() const; // -1 for the zero polynomial

    bool coeff(std::uint64_t k) const;
    void set_coeff(std::uint64_t k, bool value);

    /// Coefficient of x^k becomes coefficient of x^(2k): this is S(x^2).
    BinaryPolynomial substitute_square() const;

    /// Descending monomial list, e.g. "x^5 + x + 1"; "0" for zero.
    std::string to_string() const;
    /// Coefficient mask as a hex literal, bit k = coefficient of x^k.
    std::string to_hex() const;

    friend BinaryPolynomial operator+(const BinaryPolynomial&, const BinaryPolynomial&);
    friend BinaryPolynomial operator*(const BinaryPolynomial&, const BinaryPolynomial&);

    friend bool operator==(const BinaryPolynomial&, const BinaryPolynomial&) = default;

private:
    void trim();
    void xor_shifted(const BinaryPolynomial& other, std::uint64_t shift);

    std::vector<std::uint64_t> words_;

    friend std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial&,
                                                                const BinaryPolynomial&);
    friend BinaryPolynomial sequence_polynomial(const PeriodicSequence&);
};

/// Quotient and remainder; the divisor must be nonzero.
std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& a,
                                                     const BinaryPolynomial& b);
BinaryPolynomial operator%(const BinaryPolynomial& a, const BinaryPolynomial& b);
BinaryPolynomial operator/(const BinaryPolynomial& a, const BinaryPolynomial& b);

/// gcd over GF(2); monic by construction, and gcd(a, 0) = a.
BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b);

/// S(x) = sum of s(i) x^i over one period.
BinaryPolynomial sequence_polynomial(const PeriodicSequence& s);

struct LinearComplexityResult {
    std::uint64_t lc = 0;
    BinaryPolynomial minimal_polynomial;
    BinaryPolynomial gcd_with_period_poly; // gcd(x^n + 1, S(x))
};

/// Exact linear complexity: lc = n - deg gcd(x^n + 1, S(x)), and the minimal
/// polynomial is the cofactor. The zero sequence gets lc 0 and minimal
/// polynomial 1.
LinearComplexityResult linear_complexity(const PeriodicSequence& s);

/// Length of the shortest linear recurrence generating the periodic stream,
/// computed by iterative LFSR synthesis over num_terms terms (default two
/// periods, which is always enough). Independent of linear_complexity; the
/// two must agree on every sequence.
std::uint64_t berlekamp_massey(const PeriodicSequence& s, std::uint64_t num_terms = 0);

// The transform S_{shift(a,tau)}(x) mod x^n + 1 multiplies S_a by a power of
// x whose exponent depends on the shift direction convention. This self-test
// detects which exponent holds for this library; under the convention fixed
// in bitseq it must be PeriodMinusShift.
enum class ShiftTransform { PeriodMinusShift, Shift, Unresolved };
ShiftTransform shift_transform_convention();

} // namespace ilseq
