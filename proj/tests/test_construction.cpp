#include <doctest.h>

#include <functional>
#include <vector>

#include "ilseq/construction.hpp"
#include "ilseq/correlation.hpp"
#include "ilseq/gf2poly.hpp"
#include "testutil.hpp"

using namespace ilseq;

namespace {

Errc thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an ilseq::Error");
    return Errc::BadArgument;
}

const std::vector<std::uint64_t> kFamily{5, 37, 101, 197};

} // namespace

TEST_SUITE("construction") {

TEST_CASE("case admissibility") {
    for (const CaseTuple c : kAdmissibleCases) CHECK(is_admissible(c));
    CHECK_FALSE(is_admissible(CaseTuple{0, 1, 3}));
    CHECK_FALSE(is_admissible(CaseTuple{0, 2, 1}));
    const CyclotomicSystem sys = make_system(5);
    CHECK(thrown_code([&] { base_pair(sys, CaseTuple{0, 1, 3}); }) == Errc::InadmissibleCase);
    CHECK(thrown_code([&] { construct(sys, CaseTuple{1, 1, 1}, Variant::S); }) ==
          Errc::InadmissibleCase);
    CHECK(thrown_code([&] {
              expected_autocorrelation(sys, CaseTuple{2, 2, 2}, Variant::S, 1);
          }) == Errc::InadmissibleCase);
}

TEST_CASE("base pair frozen values at n=5") {
    const CyclotomicSystem sys = make_system(5);
    const auto [u012, v012] = base_pair(sys, CaseTuple{0, 1, 2});
    CHECK(u012.to_string() == "01100");
    CHECK(v012.to_string() == "00101");
    const auto [u123, v123] = base_pair(sys, CaseTuple{1, 2, 3});
    CHECK(u123.to_string() == "00101");
    CHECK(v123.to_string() == "00011");
}

TEST_CASE("base pair weights and leading zero") {
    for (std::uint64_t n : kFamily) {
        const CyclotomicSystem sys = make_system(n);
        for (const CaseTuple c : kAdmissibleCases) {
            const auto [u, v] = base_pair(sys, c);
            CHECK(u.weight() == (n - 1) / 2);
            CHECK(v.weight() == (n - 1) / 2);
            CHECK_FALSE(u.bit(0));
            CHECK_FALSE(v.bit(0));
        }
    }
}

TEST_CASE("construct frozen values at n=5") {
    const CyclotomicSystem sys = make_system(5);
    const ConstructionInstance sprime = construct(sys, CaseTuple{0, 1, 2}, Variant::SPrime);
    CHECK(sprime.sequence.to_string() == "1011100001");
    CHECK(is_balanced(sprime.sequence));
    CHECK(sprime.base_u.to_string() == "11100");
    CHECK(sprime.base_v.to_string() == "00101");

    const ConstructionInstance s = construct(sys, CaseTuple{0, 1, 2}, Variant::S);
    CHECK(s.sequence.to_string() == "0011100001");
    CHECK(s.sequence.weight() == 4);
}

TEST_CASE("construct assembles interleave of the shifted base pair") {
    for (std::uint64_t n : {std::uint64_t(5), std::uint64_t(37)}) {
        const CyclotomicSystem sys = make_system(n);
        for (const CaseTuple c : kAdmissibleCases) {
            for (const Variant variant : {Variant::S, Variant::SPrime}) {
                const ConstructionInstance instance = construct(sys, c, variant);
                CHECK(instance.sequence ==
                      interleave(instance.base_u,
                                 left_shift(instance.base_v,
                                            static_cast<std::int64_t>((n + 1) / 2))));
                const bool modified = instance.variant == Variant::SPrime;
                CHECK(instance.base_u.bit(0) == modified);
            }
        }
    }
}

TEST_CASE("expected autocorrelation frozen values at n=5") {
    const CyclotomicSystem sys = make_system(5);
    const CaseTuple c{0, 1, 2};
    CHECK(expected_autocorrelation(sys, c, Variant::SPrime, 0) == 10);
    CHECK(expected_autocorrelation(sys, c, Variant::SPrime, 1) == 2);
    CHECK(expected_autocorrelation(sys, c, Variant::SPrime, 4) == -2);
    CHECK(expected_autocorrelation(sys, c, Variant::SPrime, 5) == -2);
    CHECK(expected_autocorrelation(sys, c, Variant::S, 5) == 2);
    CHECK(expected_autocorrelation(sys, c, Variant::SPrime, 9) == 2);
    CHECK(expected_autocorrelation(sys, c, Variant::SPrime, -1) ==
          expected_autocorrelation(sys, c, Variant::SPrime, 9));
}

TEST_CASE("closed form matches brute force at every shift for the whole family") {
    for (std::uint64_t n : kFamily) {
        const CyclotomicSystem sys = make_system(n);
        for (const CaseTuple c : kAdmissibleCases) {
            for (const Variant variant : {Variant::S, Variant::SPrime}) {
                const ConstructionInstance instance = construct(sys, c, variant);
                const CorrelationSpectrum spectrum =
                    autocorrelation_spectrum(instance.sequence);
                for (std::uint64_t tau = 0; tau < 2 * n; ++tau) {
                    REQUIRE(spectrum.values[tau] ==
                            expected_autocorrelation(sys, c, variant,
                                                     static_cast<std::int64_t>(tau)));
                }
            }
        }
    }
}

TEST_CASE("out-of-phase values are optimal for the whole family") {
    for (std::uint64_t n : kFamily) {
        const CyclotomicSystem sys = make_system(n);
        for (const CaseTuple c : kAdmissibleCases) {
            for (const Variant variant : {Variant::S, Variant::SPrime}) {
                const CorrelationSpectrum spectrum =
                    autocorrelation_spectrum(construct(sys, c, variant).sequence);
                for (std::uint64_t tau = 1; tau < 2 * n; ++tau) {
                    REQUIRE((spectrum.values[tau] == 2 || spectrum.values[tau] == -2));
                }
            }
        }
    }
}

TEST_CASE("counted distribution matches brute force and sums to the period") {
    for (std::uint64_t n : kFamily) {
        const CyclotomicSystem sys = make_system(n);
        for (const CaseTuple c : kAdmissibleCases) {
            for (const Variant variant : {Variant::S, Variant::SPrime}) {
                const CorrelationSpectrum spectrum =
                    autocorrelation_spectrum(construct(sys, c, variant).sequence);
                CHECK(spectrum.histogram == counted_distribution(n, variant));
            }
        }
        for (const Variant variant : {Variant::S, Variant::SPrime}) {
            std::uint64_t total = 0;
            for (const auto& [value, count] : counted_distribution(n, variant)) total += count;
            CHECK(total == 2 * n);
        }
        // The +2 multiplicity must be even: values pair up under
        // tau <-> 2n - tau and the self-paired shift carries -2.
        CHECK(counted_distribution(n, Variant::SPrime).at(2) % 2 == 0);
    }
}

TEST_CASE("counted and claimed distributions at n=5") {
    CHECK(counted_distribution(5, Variant::SPrime) ==
          ValueHistogram{{10, 1}, {2, 2}, {-2, 7}});
    CHECK(counted_distribution(5, Variant::S) == ValueHistogram{{10, 1}, {2, 3}, {-2, 6}});
    CHECK(claimed_distribution(5, Variant::SPrime) ==
          ValueHistogram{{10, 1}, {-2, 8}, {2, 1}});
    CHECK(claimed_distribution(5, Variant::S) == ValueHistogram{{10, 1}, {-2, 7}, {2, 2}});
    // The claimed SPrime histogram disagrees with enumeration; that
    // discrepancy is permanent and reported side by side, never asserted.
    CHECK(claimed_distribution(5, Variant::SPrime) != counted_distribution(5, Variant::SPrime));
}

TEST_CASE("claimed distribution stays internally consistent") {
    for (std::uint64_t n : kFamily) {
        for (const Variant variant : {Variant::S, Variant::SPrime}) {
            std::uint64_t total = 0;
            for (const auto& [value, count] : claimed_distribution(n, variant)) total += count;
            CHECK(total == 2 * n);
        }
        // Its SPrime +2 multiplicity is always odd, which autocorrelation
        // symmetry rules out; this pins why the comparison stays soft.
        CHECK(claimed_distribution(n, Variant::SPrime).at(2) % 2 == 1);
    }
}

TEST_CASE("lc lower bounds") {
    CHECK(lc_lower_bound(Variant::SPrime, 5) == 6);
    CHECK(lc_lower_bound(Variant::S, 5) == 5);
    CHECK(lc_lower_bound(Variant::SPrime, 37) == 70);
}

TEST_CASE("measured linear complexity meets the bounds for the whole family") {
    for (std::uint64_t n : kFamily) {
        const CyclotomicSystem sys = make_system(n);
        for (const CaseTuple c : kAdmissibleCases) {
            for (const Variant variant : {Variant::S, Variant::SPrime}) {
                const ConstructionInstance instance = construct(sys, c, variant);
                const std::uint64_t lc = linear_complexity(instance.sequence).lc;
                CHECK(lc == berlekamp_massey(instance.sequence));
                CHECK(lc >= lc_lower_bound(variant, n));
            }
        }
    }
}

TEST_CASE("balance across the whole family") {
    for (std::uint64_t n : kFamily) {
        const CyclotomicSystem sys = make_system(n);
        for (const CaseTuple c : kAdmissibleCases) {
            const ConstructionInstance sprime = construct(sys, c, Variant::SPrime);
            CHECK(is_balanced(sprime.sequence));
            CHECK(sprime.sequence.weight() == n);
            const ConstructionInstance s = construct(sys, c, Variant::S);
            CHECK(s.sequence.weight() == n - 1);
        }
    }
}

TEST_CASE("doubling identity frozen branches at n=5") {
    const DoublingIdentityReport with_two_in_d1 = doubling_identity_check(make_system(5));
    CHECK(with_two_in_d1.class_of_two == 1);
    CHECK(with_two_in_d1.holds);

    const DoublingIdentityReport with_two_in_d3 = doubling_identity_check(make_system(5, 3));
    CHECK(with_two_in_d3.class_of_two == 3);
    CHECK(with_two_in_d3.holds);
}

TEST_CASE("doubling identity across the family and both branches") {
    for (std::uint64_t n : kFamily) {
        const ParameterSet params = validate_parameters(n);
        for (int wanted : {1, 3}) {
            const std::uint64_t beta = primitive_root_with_class_of_two(params, wanted);
            const DoublingIdentityReport report =
                doubling_identity_check(build_classes(params, beta));
            CHECK(report.class_of_two == wanted);
            CHECK(report.holds);
        }
    }
}

TEST_CASE("base correlation structure frozen values at n=5") {
    const BaseCorrelationStructure structure = base_correlation_structure(make_system(5));
    CHECK(structure.qr_value == 1);
    CHECK(structure.qnr_value == -3);
    CHECK(structure.two_level);
    CHECK(structure.levels_match_y);
    CHECK(structure.pair_sum_ok);
    CHECK(structure.cross_ok);
    CHECK(structure.y_sign == -1);
}

TEST_CASE("base correlation structure across the family") {
    for (std::uint64_t n : kFamily) {
        const CyclotomicSystem sys = make_system(n);
        const BaseCorrelationStructure structure = base_correlation_structure(sys);
        CHECK(structure.two_level);
        CHECK(structure.levels_match_y);
        CHECK(structure.pair_sum_ok);
        CHECK(structure.cross_ok);
        CHECK((structure.y_sign == 1 || structure.y_sign == -1));

        // The cross-correlation dips exactly on class 2, so f shifts dip.
        const auto [u, v] = base_pair(sys, CaseTuple{0, 1, 2});
        std::uint64_t dips = 0;
        for (std::uint64_t tau = 0; tau < n; ++tau) {
            const std::int64_t value =
                cross_correlation(u, v, static_cast<std::int64_t>(tau));
            if (value == -3) ++dips;
        }
        CHECK(dips == sys.params().f);
    }
}

TEST_CASE("first-bit modification leaves off-peak autocorrelation unchanged") {
    for (std::uint64_t n : kFamily) {
        const CyclotomicSystem sys = make_system(n);
        const auto [u, v] = base_pair(sys, CaseTuple{0, 1, 2});
        const PeriodicSequence uprime = set_position(u, 0, true);
        const CorrelationSpectrum ru = autocorrelation_spectrum(u);
        const CorrelationSpectrum rup = autocorrelation_spectrum(uprime);
        for (std::uint64_t tau = 1; tau < n; ++tau) {
            CHECK(ru.values[tau] == rup.values[tau]);
        }
    }
}

TEST_CASE("reversed cross-correlation dips exactly on class 0") {
    for (std::uint64_t n : kFamily) {
        const CyclotomicSystem sys = make_system(n);
        const auto [u, v] = base_pair(sys, CaseTuple{0, 1, 2});
        for (std::uint64_t tau = 0; tau < n; ++tau) {
            const bool in_d0 = tau != 0 && sys.class_of(tau) == 0;
            CHECK(cross_correlation(v, u, static_cast<std::int64_t>(tau)) ==
                  (in_d0 ? -3 : 1));
        }
    }
}

TEST_CASE("variant names") {
    CHECK(std::string(variant_name(Variant::S)) == "s");
    CHECK(std::string(variant_name(Variant::SPrime)) == "sprime");
}

} // TEST_SUITE
