#ifndef GRCAYLEY_MODULUS_HPP
#define GRCAYLEY_MODULUS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"
#include "fp_poly.hpp"

namespace grc {

/// Largest ring order p^(er) accepted anywhere in the library.
inline constexpr u64 kMaxRingOrder = u64{1} << 32;

struct RingParams {
    u64 p = 2;
    u64 e = 2;
    u64 r = 2;
    std::optional<u64> seed;

    /// p^e, the characteristic.
    u64 characteristic() const { return ipow(p, e); }
    /// p^(er), the number of elements.
    u64 order() const { return ipow(p, e * r); }

    void validate() const {
        if (!is_prime(p)) throw ParameterError("p = " + std::to_string(p) + " is not prime");
        if (e < 2) throw ParameterError("e must be at least 2 (got " + std::to_string(e) + ")");
        if (r < 2) throw ParameterError("r must be at least 2 (got " + std::to_string(r) + ")");
        if (!checked_pow(p, e * r, kMaxRingOrder))
            throw ParameterError("ring order p^(er) exceeds 2^32");
    }
};

/// Monic degree-r polynomial over Z_{p^e}, ascending coefficients (size r+1).
struct ModulusPoly {
    std::vector<u64> coeffs;

    u64 degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    bool operator==(const ModulusPoly&) const = default;

    fp::Poly reduce_mod_p(u64 p) const {
        fp::Poly out(coeffs.size());
        for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = coeffs[i] % p;
        fp::trim(out);
        return out;
    }
};

/// Throws ModulusError unless `f` is monic of degree r with coefficients in
/// [0, p^e) and a primitive (hence irreducible) reduction mod p.
inline void validate_modulus(const RingParams& params, const ModulusPoly& f) {
    const u64 q = params.characteristic();
    if (f.coeffs.size() != params.r + 1)
        throw ModulusError("modulus must have degree r = " + std::to_string(params.r));
    for (u64 c : f.coeffs)
        if (c >= q) throw ModulusError("modulus coefficient " + std::to_string(c) + " not reduced mod p^e");
    if (f.coeffs.back() != 1) throw ModulusError("modulus must be monic");
    const fp::Poly reduced = f.reduce_mod_p(params.p);
    if (!fp::is_irreducible(reduced, params.p))
        throw ModulusError("modulus is not basic irreducible (reducible mod p)");
    if (!fp::is_primitive_element(fp::Poly{0, 1}, reduced, params.p))
        throw ModulusError("modulus reduction mod p is irreducible but not primitive");
}

/// Monic basic irreducible of degree r whose reduction mod p is primitive.
/// Without a seed (or seed 0) candidates are scanned in increasing order of
/// their lower coefficients read as a little-endian base-p number; any other
/// seed draws candidates from a seeded mt19937_64.
inline ModulusPoly find_basic_irreducible(const RingParams& params) {
    params.validate();
    const u64 p = params.p;
    const u64 r = params.r;
    const u64 space = ipow(p, r);

    auto candidate = [&](u64 k) {
        fp::Poly f(r + 1, 0);
        for (u64 i = 0; i < r; ++i, k /= p) f[i] = k % p;
        f[r] = 1;
        return f;
    };
    auto lift = [&](const fp::Poly& f) {
        ModulusPoly m;
        m.coeffs.assign(f.begin(), f.end());
        m.coeffs.resize(r + 1, 0);
        return m;
    };

    const u64 seed = params.seed.value_or(0);
    if (seed == 0) {
        for (u64 k = 0; k < space; ++k) {
            fp::Poly f = candidate(k);
            if (fp::is_primitive(f, p)) return lift(f);
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<u64> dist(0, space - 1);
        for (;;) {
            fp::Poly f = candidate(dist(rng));
            if (fp::is_primitive(f, p)) return lift(f);
        }
    }
    throw IntegrityError("no primitive polynomial found");  // unreachable for prime p
}

inline std::string format_coeff_list(const std::vector<u64>& coeffs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
    return os.str();
}

/// Parses "c0,c1,...". Whitespace around entries is ignored; entries must be
/// non-negative decimal integers.
inline std::vector<u64> parse_coeff_list(std::string_view text) {
    std::vector<u64> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view item = text.substr(pos, comma - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (item.empty()) throw ParameterError("empty entry in coefficient list '" + std::string(text) + "'");
        u64 v = 0;
        for (char ch : item) {
            if (ch < '0' || ch > '9')
                throw ParameterError("bad coefficient '" + std::string(item) + "' in '" + std::string(text) + "'");
            if (v > (std::numeric_limits<u64>::max() - 9) / 10) throw ParameterError("coefficient too large");
            v = v * 10 + static_cast<u64>(ch - '0');
        }
        out.push_back(v);
        pos = comma + 1;
    }
    return out;
}

inline std::string format_modulus(const ModulusPoly& f) { return format_coeff_list(f.coeffs); }

inline ModulusPoly parse_modulus(std::string_view text) { return ModulusPoly{parse_coeff_list(text)}; }

}  // namespace grc

#endif  // GRCAYLEY_MODULUS_HPP
