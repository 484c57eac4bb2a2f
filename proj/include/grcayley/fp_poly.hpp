#ifndef GRCAYLEY_FP_POLY_HPP
#define GRCAYLEY_FP_POLY_HPP

// Dense polynomials over the prime field F_p, stored as ascending coefficient
// vectors. Only what the modulus search needs: multiplication and
// exponentiation modulo a monic polynomial, gcd, and the irreducibility and
// primitivity tests.

#include <algorithm>
#include <vector>

#include "arith.hpp"

namespace grc::fp {

using Poly = std::vector<u64>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

inline Poly sub(Poly a, const Poly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i] % p) % p;
    trim(a);
    return a;
}

/// a mod m for arbitrary nonzero m.
inline Poly rem(Poly a, const Poly& m, u64 p) {
    const int dm = degree(m);
    if (dm < 0) throw IntegrityError("fp::rem: division by zero polynomial");
    const u64 lead_inv = mod_inverse(m[dm], p);
    for (int da = degree(a); da >= dm; da = degree(a)) {
        const u64 c = a[da] * lead_inv % p;
        for (int i = 0; i <= dm; ++i) a[da - dm + i] = (a[da - dm + i] + (p - c) * m[i]) % p;
    }
    trim(a);
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    return rem(std::move(prod), m, p);
}

inline Poly powmod(Poly base, u64 exp, const Poly& m, u64 p) {
    Poly result = rem(Poly{1}, m, p);
    base = rem(std::move(base), m, p);
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m, p);
        exp >>= 1;
        if (exp) base = mulmod(base, base, m, p);
    }
    return result;
}

inline Poly gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly t = rem(a, b, p);
        a = std::move(b);
        b = std::move(t);
    }
    if (!a.empty()) {
        const u64 inv = mod_inverse(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

/// Rabin's test for a monic f of degree r: x^(p^r) = x mod f, and
/// gcd(x^(p^(r/q)) - x, f) = 1 for each prime q dividing r.
inline bool is_irreducible(const Poly& f, u64 p) {
    const int r = degree(f);
    if (r < 1) return false;
    if (r == 1) return true;
    const Poly x{0, 1};
    auto frob_iter = [&](u64 k) {
        Poly y = rem(x, f, p);
        for (u64 i = 0; i < k; ++i) y = powmod(y, p, f, p);
        return y;
    };
    if (sub(frob_iter(static_cast<u64>(r)), x, p) != Poly{}) return false;
    for (u64 q : distinct_prime_factors(static_cast<u64>(r))) {
        Poly g = gcd(sub(frob_iter(static_cast<u64>(r) / q), x, p), f, p);
        if (degree(g) != 0) return false;
    }
    return true;
}

/// Order test for the class of `a` in (F_p[x]/(f))^*, f irreducible of degree r:
/// true iff a has multiplicative order exactly p^r - 1.
inline bool is_primitive_element(const Poly& a, const Poly& f, u64 p) {
    const u64 order = ipow(p, static_cast<u64>(degree(f))) - 1;
    const Poly one{1};
    if (powmod(a, order, f, p) != one) return false;
    for (u64 q : distinct_prime_factors(order))
        if (powmod(a, order / q, f, p) == one) return false;
    return true;
}

/// Irreducible and x generates the multiplicative group of F_p[x]/(f).
inline bool is_primitive(const Poly& f, u64 p) {
    return is_irreducible(f, p) && is_primitive_element(Poly{0, 1}, f, p);
}

}  // namespace grc::fp

#endif  // GRCAYLEY_FP_POLY_HPP
