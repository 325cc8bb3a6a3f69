#include "ilseq/construction.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "ilseq/correlation.hpp"
#include "ilseq/gf2poly.hpp"

namespace ilseq {

namespace {

std::string case_text(CaseTuple c) {
    return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
           std::to_string(c.l) + ")";
}

void require_admissible(CaseTuple c) {
    if (!is_admissible(c)) {
        raise(Errc::InadmissibleCase, "case " + case_text(c) +
                                          " is not one of (0,1,2), (2,1,0), (1,2,3), (3,2,1)");
    }
}

PeriodicSequence from_two_classes(const CyclotomicSystem& sys, int first, int second) {
    std::vector<std::uint64_t> positions = sys.class_members(first);
    const std::vector<std::uint64_t> more = sys.class_members(second);
    positions.insert(positions.end(), more.begin(), more.end());
    return PeriodicSequence::from_characteristic_set(sys.modulus(), positions);
}

} // namespace

const char* variant_name(Variant variant) {
    return variant == Variant::S ? "s" : "sprime";
}

bool is_admissible(CaseTuple c) {
    return std::find(kAdmissibleCases.begin(), kAdmissibleCases.end(), c) !=
           kAdmissibleCases.end();
}

std::pair<PeriodicSequence, PeriodicSequence> base_pair(const CyclotomicSystem& sys,
                                                        CaseTuple c) {
    require_admissible(c);
    return {from_two_classes(sys, c.i, c.j), from_two_classes(sys, c.j, c.l)};
}

ConstructionInstance construct(const CyclotomicSystem& sys, CaseTuple c, Variant variant) {
    auto [u, v] = base_pair(sys, c);
    if (variant == Variant::SPrime) {
        u = set_position(u, 0, true);
    }
    const std::uint64_t n = sys.modulus();
    ConstructionInstance instance{sys, c, variant,
                                  interleave(u, left_shift(v, static_cast<std::int64_t>((n + 1) / 2))),
                                  u, v};
    return instance;
}

std::int64_t expected_autocorrelation(const CyclotomicSystem& sys, CaseTuple c,
                                      Variant variant, std::int64_t tau) {
    require_admissible(c);
    const std::int64_t n = static_cast<std::int64_t>(sys.modulus());
    const std::int64_t period = 2 * n;
    std::int64_t t = ((tau % period) + period) % period;
    if (t == 0) return period;
    if (t % 2 == 0) return -2;
    if (t == n) return variant == Variant::SPrime ? -2 : 2;
    const std::uint64_t m = static_cast<std::uint64_t>(((t + n) / 2) % n);
    const int cls = sys.class_of(m);
    return (cls % 2) == (c.j % 2) ? 2 : -2;
}

ValueHistogram counted_distribution(std::uint64_t n, Variant variant) {
    ValueHistogram histogram;
    histogram[static_cast<std::int64_t>(2 * n)] = 1;
    if (variant == Variant::SPrime) {
        histogram[2] = (n - 1) / 2;
        histogram[-2] = (3 * n - 1) / 2;
    } else {
        histogram[2] = (n + 1) / 2;
        histogram[-2] = (3 * n - 3) / 2;
    }
    return histogram;
}

ValueHistogram claimed_distribution(std::uint64_t n, Variant variant) {
    ValueHistogram histogram;
    histogram[static_cast<std::int64_t>(2 * n)] = 1;
    if (variant == Variant::SPrime) {
        histogram[-2] = (7 * n - 3) / 4;
        histogram[2] = (n - 1) / 4;
    } else {
        histogram[-2] = (7 * n - 7) / 4;
        histogram[2] = (n + 3) / 4;
    }
    return histogram;
}

std::uint64_t lc_lower_bound(Variant variant, std::uint64_t n) {
    return variant == Variant::SPrime ? 2 * n - 4 : 2 * n - 5;
}

DoublingIdentityReport doubling_identity_check(const CyclotomicSystem& sys) {
    auto [u, v] = base_pair(sys, CaseTuple{0, 1, 2});
    const PeriodicSequence uprime = set_position(u, 0, true);
    const std::uint64_t n = sys.modulus();
    const BinaryPolynomial period_poly = BinaryPolynomial::x_pow_plus_one(n);
    const BinaryPolynomial target = BinaryPolynomial::all_ones(n);
    const BinaryPolynomial su = sequence_polynomial(uprime);
    const BinaryPolynomial sv = sequence_polynomial(v);

    DoublingIdentityReport report;
    report.class_of_two = sys.class_of(2);
    BinaryPolynomial sum;
    switch (report.class_of_two) {
        case 1:
            sum = sv.substitute_square() % period_poly + su;
            break;
        case 3:
            sum = su.substitute_square() % period_poly + sv;
            break;
        default:
            raise(Errc::UnexpectedClassOfTwo,
                  "2 lies in class " + std::to_string(report.class_of_two) +
                      " but must lie in class 1 or 3");
    }
    report.holds = (sum % period_poly) == target;
    return report;
}

BaseCorrelationStructure base_correlation_structure(const CyclotomicSystem& sys) {
    auto [u, v] = base_pair(sys, CaseTuple{0, 1, 2});
    const std::uint64_t n = sys.modulus();
    const std::int64_t y = static_cast<std::int64_t>(sys.params().y_abs);

    const CorrelationSpectrum ru = autocorrelation_spectrum(u);
    const CorrelationSpectrum rv = autocorrelation_spectrum(v);

    BaseCorrelationStructure out;
    out.qr_value = ru.values[sys.class_members(0).front()];
    out.qnr_value = ru.values[sys.class_members(1).front()];

    out.two_level = true;
    for (std::uint64_t t = 1; t < n; ++t) {
        const std::int64_t want = sys.class_of(t) % 2 == 0 ? out.qr_value : out.qnr_value;
        if (ru.values[t] != want) out.two_level = false;
    }

    out.levels_match_y = (out.qr_value == -1 - 2 * y && out.qnr_value == -1 + 2 * y) ||
                         (out.qr_value == -1 + 2 * y && out.qnr_value == -1 - 2 * y);
    if (out.levels_match_y) {
        out.y_sign = out.qr_value == -1 - 2 * y ? 1 : -1;
    }

    out.pair_sum_ok = true;
    for (std::uint64_t t = 1; t < n; ++t) {
        if (ru.values[t] + rv.values[t] != -2) out.pair_sum_ok = false;
    }

    out.cross_ok = true;
    const CorrelationSpectrum ruv = cross_correlation_spectrum(u, v);
    for (std::uint64_t t = 0; t < n; ++t) {
        const bool in_d2 = t != 0 && sys.class_of(t) == 2;
        if (ruv.values[t] != (in_d2 ? -3 : 1)) out.cross_ok = false;
    }
    return out;
}

} // namespace ilseq
