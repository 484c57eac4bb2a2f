#ifndef GRCAYLEY_ARITH_HPP
#define GRCAYLEY_ARITH_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "error.hpp"

namespace grc {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// deterministic trial division; inputs here are tiny (p^4 <= 2^32)
constexpr bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// base^exp, or nullopt if the result would exceed `limit`.
constexpr std::optional<u64> checked_pow(u64 base, u64 exp, u64 limit = std::numeric_limits<u64>::max()) noexcept {
    u64 result = 1;
    for (u64 i = 0; i < exp; ++i) {
        if (base != 0 && result > limit / base) return std::nullopt;
        result *= base;
    }
    if (result > limit) return std::nullopt;
    return result;
}

constexpr u64 ipow(u64 base, u64 exp) {
    auto v = checked_pow(base, exp);
    if (!v) throw ParameterError("integer power overflows 64 bits");
    return *v;
}

inline std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

/// Inverse of a modulo m; a must be coprime to m.
inline u64 mod_inverse(u64 a, u64 m) {
    i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
    i64 old_s = 1, s = 0;
    while (r != 0) {
        const i64 quot = old_r / r;
        i64 t = old_r - quot * r;
        old_r = r;
        r = t;
        t = old_s - quot * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw IntegrityError("mod_inverse: argument is not invertible");
    const i64 mm = static_cast<i64>(m);
    return static_cast<u64>(((old_s % mm) + mm) % mm);
}

}  // namespace grc

#endif  // GRCAYLEY_ARITH_HPP
