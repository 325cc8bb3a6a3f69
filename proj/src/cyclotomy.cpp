#include "ilseq/cyclotomy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ilseq {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This witness set is known to be exact for all n < 3.3 * 10^24.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

std::uint64_t integer_sqrt(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> factors;
    for (std::uint64_t p = 2; p * p <= v; p += (p == 2) ? 1 : 2) {
        if (v % p == 0) {
            factors.push_back(p);
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) factors.push_back(v);
    return factors;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t n,
                       const std::vector<std::uint64_t>& factors_of_order) {
    if (g % n == 0) return false;
    for (std::uint64_t p : factors_of_order) {
        if (pow_mod(g, (n - 1) / p, n) == 1) return false;
    }
    return true;
}

} // namespace

ParameterSet validate_parameters(std::uint64_t n) {
    if (n > kMaxModulus) {
        raise(Errc::ModulusTooLarge,
              std::to_string(n) + " exceeds the supported bound 2^31");
    }
    if (!is_prime(n)) {
        raise(Errc::NotPrime, std::to_string(n) + " is not prime");
    }
    if (n % 4 != 1) {
        raise(Errc::NotCongruent1Mod4, std::to_string(n) + " is not 1 mod 4");
    }
    const std::uint64_t f = (n - 1) / 4;
    const std::uint64_t y = integer_sqrt(f);
    if (y * y != f) {
        raise(Errc::FNotPerfectSquare,
              "f = " + std::to_string(f) + " is not a perfect square");
    }
    if (f % 2 == 0) {
        raise(Errc::FEven, "f = " + std::to_string(f) + " is even");
    }
    return ParameterSet{n, f, y};
}

std::vector<ParameterSet> scan_parameters(std::uint64_t max_n) {
    std::vector<ParameterSet> out;
    for (std::uint64_t y = 1; 4 * y * y + 1 <= max_n && 4 * y * y + 1 <= kMaxModulus; y += 2) {
        const std::uint64_t n = 4 * y * y + 1;
        if (is_prime(n)) out.push_back(ParameterSet{n, y * y, y});
    }
    return out;
}

std::uint64_t smallest_primitive_root(std::uint64_t n) {
    if (!is_prime(n)) {
        raise(Errc::NotPrime, std::to_string(n) + " is not prime");
    }
    if (n == 2) return 1;
    const auto factors = prime_factors(n - 1);
    for (std::uint64_t g = 2; g < n; ++g) {
        if (is_primitive_root(g, n, factors)) return g;
    }
    raise(Errc::NotPrimitiveRoot, "no primitive root below " + std::to_string(n));
}

CyclotomicSystem::CyclotomicSystem(const ParameterSet& params, std::uint64_t beta)
    : params_(validate_parameters(params.n)), beta_(beta % params.n) {
    const std::uint64_t n = params_.n;
    if (beta_ == 0) {
        raise(Errc::NotPrimitiveRoot, "0 is not a unit mod " + std::to_string(n));
    }
    table_.assign(n, 0xFF);
    std::uint64_t cur = 1;
    for (std::uint64_t k = 0; k + 1 < n; ++k) {
        if (table_[cur] != 0xFF) {
            // Returned to an earlier power: the order of beta divides k < n-1.
            raise(Errc::NotPrimitiveRoot,
                  std::to_string(beta_) + " has order < " + std::to_string(n - 1) +
                      " mod " + std::to_string(n));
        }
        table_[cur] = static_cast<std::uint8_t>(k & 3);
        cur = mul_mod(cur, beta_, n);
    }
}

int CyclotomicSystem::class_of(std::uint64_t residue) const {
    const std::uint64_t r = residue % params_.n;
    if (r == 0) {
        raise(Errc::ZeroResidue,
              std::to_string(residue) + " is 0 mod " + std::to_string(params_.n));
    }
    return table_[r];
}

std::vector<std::uint64_t> CyclotomicSystem::class_members(int cls) const {
    if (cls < 0 || cls > 3) {
        raise(Errc::BadArgument, "class index must be in 0..3");
    }
    std::vector<std::uint64_t> members;
    members.reserve(params_.f);
    for (std::uint64_t r = 1; r < params_.n; ++r) {
        if (table_[r] == cls) members.push_back(r);
    }
    return members;
}

CyclotomicSystem build_classes(const ParameterSet& params, std::uint64_t beta) {
    return CyclotomicSystem(params, beta);
}

CyclotomicSystem make_system(std::uint64_t n, std::optional<std::uint64_t> beta_override) {
    const ParameterSet params = validate_parameters(n);
    const std::uint64_t beta =
        beta_override ? *beta_override : smallest_primitive_root(n);
    return CyclotomicSystem(params, beta);
}

std::uint64_t primitive_root_with_class_of_two(const ParameterSet& params, int wanted_class) {
    if (wanted_class != 1 && wanted_class != 3) {
        raise(Errc::BadArgument, "2 can only land in class 1 or 3");
    }
    const std::uint64_t n = params.n;
    const auto factors = prime_factors(n - 1);
    for (std::uint64_t g = 2; g < n; ++g) {
        if (!is_primitive_root(g, n, factors)) continue;
        // Locate 2 as a power of g; cheaper than building the whole table.
        std::uint64_t cur = 1;
        for (std::uint64_t k = 0; k + 1 < n; ++k) {
            if (cur == 2) {
                if (static_cast<int>(k & 3) == wanted_class) return g;
                break;
            }
            cur = mul_mod(cur, g, n);
        }
    }
    raise(Errc::NotPrimitiveRoot,
          "no primitive root mod " + std::to_string(n) + " places 2 in class " +
              std::to_string(wanted_class));
}

} // namespace ilseq
