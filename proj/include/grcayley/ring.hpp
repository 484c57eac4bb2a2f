#ifndef GRCAYLEY_RING_HPP
#define GRCAYLEY_RING_HPP

// Galois ring GR(p^e, p^(er)) = Z_{p^e}[x]/(f(x)).
//
// Elements are stored in the power basis 1, x, ..., x^(r-1) with every
// coefficient reduced into [0, p^e). The context fixes the modulus f, the
// Teichmuller generator xi (order p^r - 1), the generalized Frobenius as a
// matrix on the power basis and the trace as a linear functional. All of it
// is computed once in make_ring and never mutated afterwards.

#include <algorithm>
#include <atomic>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arith.hpp"
#include "fp_poly.hpp"
#include "modulus.hpp"

namespace grc {

/// Full trace tables are precomputed up to this ring order.
inline constexpr u64 kTraceTableCutoff = u64{1} << 24;

namespace detail {
inline u64 next_context_id() {
    static std::atomic<u64> counter{0};
    return ++counter;
}
}  // namespace detail

class RingContext;

class RingElement {
   public:
    RingElement() = default;

    const std::vector<u64>& coeffs() const noexcept { return coeffs_; }
    u64 operator[](std::size_t i) const { return coeffs_.at(i); }
    u64 context_id() const noexcept { return ctx_; }

    bool operator==(const RingElement&) const = default;

   private:
    friend class RingContext;
    RingElement(std::vector<u64> coeffs, u64 ctx) : coeffs_(std::move(coeffs)), ctx_(ctx) {}

    std::vector<u64> coeffs_;
    u64 ctx_ = 0;
};

/// Digits b_0..b_{e-1}, each zero or a Teichmuller unit, with a = sum b_i p^i.
struct PAdicCoords {
    std::vector<RingElement> digits;
};

/// Coefficients (length r) of an element of F_p[x]/(f mod p).
using ResidueElement = std::vector<u64>;

enum class ArithOp { add, sub, neg, mul, pow };

class RingContext {
   public:
    using Matrix = std::vector<std::vector<u64>>;  // row-major, r x r

    const RingParams& params() const noexcept { return params_; }
    u64 p() const noexcept { return params_.p; }
    u64 e() const noexcept { return params_.e; }
    u64 r() const noexcept { return params_.r; }
    /// p^e
    u64 characteristic() const noexcept { return q_; }
    /// p^(er)
    u64 order() const noexcept { return n_; }
    /// p^r, the size of the residue field.
    u64 residue_order() const noexcept { return residue_order_; }
    u64 id() const noexcept { return id_; }

    const ModulusPoly& modulus() const noexcept { return modulus_; }
    const RingElement& xi() const noexcept { return xi_; }
    /// G_1 in generator order: teichmuller()[t] == xi^t.
    const std::vector<RingElement>& teichmuller() const noexcept { return g1_; }
    bool has_trace_table() const noexcept { return !trace_table_.empty(); }
    /// T(x^j) for j < r; T(a) = sum_j a_j T(x^j) mod p^e.
    const std::vector<u64>& trace_weights() const noexcept { return trace_weights_; }
    const Matrix& frobenius_matrix() const noexcept { return frobenius_; }

    // ---- element construction -------------------------------------------

    RingElement element(std::vector<u64> coeffs) const {
        if (coeffs.size() != r()) throw ParameterError("element needs exactly r coefficients");
        for (auto& c : coeffs) c %= q_;
        return RingElement(std::move(coeffs), id_);
    }
    RingElement zero() const { return RingElement(std::vector<u64>(r(), 0), id_); }
    RingElement scalar(u64 c) const {
        std::vector<u64> v(r(), 0);
        v[0] = c % q_;
        return RingElement(std::move(v), id_);
    }
    RingElement one() const { return scalar(1); }
    /// The class of x.
    RingElement x() const {
        std::vector<u64> v(r(), 0);
        v[1] = 1;
        return RingElement(std::move(v), id_);
    }

    /// Mixed-radix index sum_i coeffs[i] * (p^e)^i.
    u64 index_of(const RingElement& a) const {
        check(a);
        return index_of_coeffs(a.coeffs());
    }
    u64 index_of_coeffs(std::span<const u64> c) const noexcept {
        u64 idx = 0;
        for (std::size_t i = c.size(); i-- > 0;) idx = idx * q_ + c[i];
        return idx;
    }
    RingElement from_index(u64 idx) const {
        if (idx >= n_) throw RangeError("element index " + std::to_string(idx) + " out of range");
        std::vector<u64> v(r());
        for (u64 i = 0; i < r(); ++i, idx /= q_) v[i] = idx % q_;
        return RingElement(std::move(v), id_);
    }

    // ---- arithmetic ------------------------------------------------------

    RingElement add(const RingElement& a, const RingElement& b) const {
        check(a, b);
        std::vector<u64> v(r());
        for (u64 i = 0; i < r(); ++i) v[i] = (a.coeffs_[i] + b.coeffs_[i]) % q_;
        return RingElement(std::move(v), id_);
    }
    RingElement neg(const RingElement& a) const {
        check(a);
        std::vector<u64> v(r());
        for (u64 i = 0; i < r(); ++i) v[i] = (q_ - a.coeffs_[i]) % q_;
        return RingElement(std::move(v), id_);
    }
    RingElement sub(const RingElement& a, const RingElement& b) const {
        check(a, b);
        std::vector<u64> v(r());
        for (u64 i = 0; i < r(); ++i) v[i] = (a.coeffs_[i] + q_ - b.coeffs_[i]) % q_;
        return RingElement(std::move(v), id_);
    }
    RingElement scale(const RingElement& a, u64 c) const {
        check(a);
        std::vector<u64> v(r());
        c %= q_;
        for (u64 i = 0; i < r(); ++i) v[i] = a.coeffs_[i] * c % q_;
        return RingElement(std::move(v), id_);
    }
    RingElement mul(const RingElement& a, const RingElement& b) const {
        check(a, b);
        std::vector<u64> v(r());
        mul_coeffs(a.coeffs_, b.coeffs_, v);
        return RingElement(std::move(v), id_);
    }
    RingElement pow(const RingElement& a, u64 exp) const {
        check(a);
        RingElement result = one();
        RingElement base = a;
        while (exp > 0) {
            if (exp & 1) result = mul(result, base);
            exp >>= 1;
            if (exp) base = mul(base, base);
        }
        return result;
    }

    /// Product of two coefficient vectors, reduced mod p^e and mod f.
    /// `out` must have size r and may not alias the inputs.
    void mul_coeffs(std::span<const u64> a, std::span<const u64> b, std::span<u64> out) const {
        const u64 rr = r();
        std::vector<u64> prod(2 * rr - 1, 0);
        for (u64 i = 0; i < rr; ++i) {
            if (a[i] == 0) continue;
            for (u64 j = 0; j < rr; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % q_;
        }
        // x^r = -(f_0 + ... + f_{r-1} x^{r-1})
        for (u64 k = 2 * rr - 2; k >= rr; --k) {
            const u64 c = prod[k];
            if (c == 0) continue;
            for (u64 i = 0; i < rr; ++i)
                prod[k - rr + i] = (prod[k - rr + i] + c * ((q_ - modulus_.coeffs[i]) % q_)) % q_;
        }
        std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(rr), out.begin());
    }

    // ---- Frobenius, trace ------------------------------------------------

    /// phi^k(a), where phi(sum a_i xi^i) = sum a_i xi^(p i).
    RingElement frobenius(const RingElement& a, u64 k = 1) const {
        check(a);
        std::vector<u64> v = a.coeffs_;
        for (u64 step = 0; step < k % r(); ++step) v = apply(frobenius_, v);
        return RingElement(std::move(v), id_);
    }

    /// T(a) = a + phi(a) + ... + phi^(r-1)(a), as an integer mod p^e.
    u64 trace(const RingElement& a) const {
        check(a);
        if (has_trace_table()) return trace_table_[index_of_coeffs(a.coeffs_)];
        return trace_coeffs(a.coeffs_);
    }
    u64 trace_coeffs(std::span<const u64> c) const noexcept {
        u64 acc = 0;
        for (std::size_t j = 0; j < c.size(); ++j) acc += c[j] * trace_weights_[j];
        return acc % q_;
    }
    u64 trace_of_index(u64 idx) const {
        if (has_trace_table()) return trace_table_[idx];
        u64 acc = 0;
        for (u64 j = 0; j < r(); ++j, idx /= q_) acc += (idx % q_) * trace_weights_[j];
        return acc % q_;
    }

    // ---- residue field, p-adic digits, units ----------------------------

    ResidueElement project_residue(const RingElement& a) const {
        check(a);
        ResidueElement out(r());
        for (u64 i = 0; i < r(); ++i) out[i] = a.coeffs_[i] % p();
        return out;
    }

    /// The unique Teichmuller representative (or 0) with the residue of `a`.
    RingElement teichmuller_lift(const RingElement& a) const {
        check(a);
        const i64 t = teich_of_residue_[residue_index(a.coeffs_)];
        return t < 0 ? zero() : g1_[static_cast<std::size_t>(t)];
    }

    bool is_unit(const RingElement& a) const {
        check(a);
        return residue_index(a.coeffs_) != 0;
    }

    PAdicCoords padic_coords(const RingElement& a) const {
        check(a);
        PAdicCoords out;
        out.digits.reserve(e());
        RingElement cur = a;
        for (u64 i = 0; i < e(); ++i) {
            RingElement b = teichmuller_lift(cur);
            std::vector<u64> next = sub(cur, b).coeffs_;
            for (auto& c : next) {
                if (c % p() != 0) throw IntegrityError("p-adic digit extraction left a unit remainder");
                c /= p();
            }
            out.digits.push_back(std::move(b));
            cur = RingElement(std::move(next), id_);
        }
        return out;
    }

    RingElement reassemble(const PAdicCoords& coords) const {
        RingElement acc = zero();
        u64 weight = 1;
        for (const auto& digit : coords.digits) {
            acc = add(acc, scale(digit, weight));
            weight = weight * p() % q_;
        }
        return acc;
    }

    /// Index of t with teichmuller()[t] == a, or nullopt if a is not in G_1.
    std::optional<u64> teichmuller_log(const RingElement& a) const {
        check(a);
        const i64 t = teich_of_residue_[residue_index(a.coeffs_)];
        if (t < 0 || g1_[static_cast<std::size_t>(t)] != a) return std::nullopt;
        return static_cast<u64>(t);
    }

   private:
    friend std::shared_ptr<const RingContext> make_ring(const RingParams&, const std::optional<ModulusPoly>&);

    RingContext() = default;

    void check(const RingElement& a) const {
        if (a.ctx_ != id_ || a.coeffs_.size() != r())
            throw ContextMismatch("element does not belong to this ring context");
    }
    void check(const RingElement& a, const RingElement& b) const {
        check(a);
        check(b);
    }

    u64 residue_index(std::span<const u64> c) const noexcept {
        u64 idx = 0;
        for (std::size_t i = c.size(); i-- > 0;) idx = idx * p() + c[i] % p();
        return idx;
    }

    std::vector<u64> apply(const Matrix& m, const std::vector<u64>& v) const {
        std::vector<u64> out(r(), 0);
        for (u64 i = 0; i < r(); ++i) {
            u64 acc = 0;
            for (u64 j = 0; j < r(); ++j) acc = (acc + m[i][j] * v[j]) % q_;
            out[i] = acc;
        }
        return out;
    }

    RingParams params_;
    u64 q_ = 0;
    u64 n_ = 0;
    u64 residue_order_ = 0;
    u64 id_ = 0;
    ModulusPoly modulus_;
    RingElement xi_;
    std::vector<RingElement> g1_;
    std::vector<i64> teich_of_residue_;
    Matrix frobenius_;
    std::vector<u64> trace_weights_;
    std::vector<std::uint32_t> trace_table_;
};

using RingPtr = std::shared_ptr<const RingContext>;

namespace detail {

using Matrix = RingContext::Matrix;

inline Matrix mat_mul(const Matrix& a, const Matrix& b, u64 q) {
    const std::size_t r = a.size();
    Matrix out(r, std::vector<u64>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < r; ++j) out[i][j] = (out[i][j] + a[i][k] * b[k][j]) % q;
        }
    return out;
}

/// Inverse over Z_{p^e} by Gauss-Jordan with pivots that are units mod p.
/// Throws IntegrityError if the matrix is singular mod p.
inline Matrix mat_inverse(Matrix a, u64 p, u64 q) {
    const std::size_t r = a.size();
    Matrix inv(r, std::vector<u64>(r, 0));
    for (std::size_t i = 0; i < r; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t piv = col;
        while (piv < r && a[piv][col] % p == 0) ++piv;
        if (piv == r) throw IntegrityError("basis change matrix is singular mod p");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const u64 s = mod_inverse(a[col][col], q);
        for (std::size_t j = 0; j < r; ++j) {
            a[col][j] = a[col][j] * s % q;
            inv[col][j] = inv[col][j] * s % q;
        }
        for (std::size_t row = 0; row < r; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const u64 f = q - a[row][col];
            for (std::size_t j = 0; j < r; ++j) {
                a[row][j] = (a[row][j] + f * a[col][j]) % q;
                inv[row][j] = (inv[row][j] + f * inv[col][j]) % q;
            }
        }
    }
    return inv;
}

}  // namespace detail

/// Builds GR(p^e, p^(er)). A supplied modulus is verified, never trusted;
/// without one, find_basic_irreducible(params) picks it.
///
/// xi is taken as u^(p^((e-1)r)) for u the class of x: the unit group is
/// G_1 x (1 + pGR) with |1 + pGR| = p^((e-1)r), so that power lands in G_1,
/// and its residue is a Frobenius conjugate of the primitive root mod p.
inline RingPtr make_ring(const RingParams& params, const std::optional<ModulusPoly>& modulus = std::nullopt) {
    params.validate();
    ModulusPoly f = modulus ? *modulus : find_basic_irreducible(params);
    validate_modulus(params, f);

    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    RingContext& c = *ctx;
    c.params_ = params;
    c.q_ = params.characteristic();
    c.n_ = params.order();
    c.residue_order_ = ipow(params.p, params.r);
    c.id_ = detail::next_context_id();
    c.modulus_ = std::move(f);

    const u64 p = params.p, r = params.r, q = c.q_;
    const u64 g1_order = c.residue_order_ - 1;

    c.xi_ = c.pow(c.x(), ipow(p, (params.e - 1) * r));
    {
        fp::Poly theta(c.xi_.coeffs().begin(), c.xi_.coeffs().end());
        for (auto& v : theta) v %= p;
        fp::trim(theta);
        if (!fp::is_primitive_element(theta, c.modulus_.reduce_mod_p(p), p))
            throw IntegrityError("residue of xi is not primitive");
    }

    c.g1_.reserve(g1_order);
    c.teich_of_residue_.assign(c.residue_order_, -1);
    RingElement cur = c.one();
    for (u64 t = 0; t < g1_order; ++t) {
        const u64 res = c.residue_index(cur.coeffs());
        if (res == 0 || c.teich_of_residue_[res] >= 0)
            throw IntegrityError("Teichmuller powers of xi are not distinct mod p");
        c.teich_of_residue_[res] = static_cast<i64>(t);
        c.g1_.push_back(cur);
        cur = c.mul(cur, c.xi_);
    }
    if (cur != c.one()) throw IntegrityError("xi^(p^r - 1) != 1");

    // Frobenius on the power basis: write x^j in the xi-basis (columns of M
    // are xi^i), then send xi^i to xi^(p i).
    detail::Matrix m(r, std::vector<u64>(r));
    for (u64 i = 0; i < r; ++i)
        for (u64 row = 0; row < r; ++row) m[row][i] = c.g1_[i][row];
    const detail::Matrix m_inv = detail::mat_inverse(m, p, q);
    c.frobenius_.assign(r, std::vector<u64>(r, 0));
    for (u64 j = 0; j < r; ++j)
        for (u64 i = 0; i < r; ++i) {
            const u64 coef = m_inv[i][j];
            if (coef == 0) continue;
            const RingElement& img = c.g1_[(p * i) % g1_order];
            for (u64 row = 0; row < r; ++row) c.frobenius_[row][j] = (c.frobenius_[row][j] + coef * img[row]) % q;
        }

    // Trace operator sum_{k<r} F^k; its image must be the scalars.
    detail::Matrix power(r, std::vector<u64>(r, 0)), total(r, std::vector<u64>(r, 0));
    for (u64 i = 0; i < r; ++i) power[i][i] = 1;
    for (u64 k = 0; k < r; ++k) {
        for (u64 i = 0; i < r; ++i)
            for (u64 j = 0; j < r; ++j) total[i][j] = (total[i][j] + power[i][j]) % q;
        power = detail::mat_mul(c.frobenius_, power, q);
    }
    for (u64 i = 0; i < r; ++i)
        for (u64 j = 0; j < r; ++j)
            if (power[i][j] != (i == j ? 1u : 0u)) throw IntegrityError("Frobenius^r is not the identity");
    for (u64 i = 1; i < r; ++i)
        for (u64 j = 0; j < r; ++j)
            if (total[i][j] != 0) throw IntegrityError("trace has a non-scalar component; modulus is broken");
    c.trace_weights_ = total[0];

    if (c.n_ <= kTraceTableCutoff) {
        c.trace_table_.resize(c.n_);
        // digit-by-digit: table[idx + d * q^j] = table[idx] + d * T(x^j)
        c.trace_table_[0] = 0;
        u64 block = 1;
        for (u64 j = 0; j < r; ++j) {
            for (u64 d = 1; d < q; ++d)
                for (u64 idx = 0; idx < block; ++idx)
                    c.trace_table_[d * block + idx] =
                        static_cast<std::uint32_t>((c.trace_table_[idx] + d * c.trace_weights_[j]) % q);
            block *= q;
        }
    }
    return ctx;
}

/// Dispatches one of the arithmetic operations; `exponent` is used by pow only.
inline RingElement ring_arith(const RingContext& ctx, ArithOp op, std::span<const RingElement> operands, u64 exponent = 0) {
    const std::size_t arity = (op == ArithOp::neg || op == ArithOp::pow) ? 1 : 2;
    if (operands.size() != arity) throw ParameterError("wrong number of operands");
    switch (op) {
        case ArithOp::add: return ctx.add(operands[0], operands[1]);
        case ArithOp::sub: return ctx.sub(operands[0], operands[1]);
        case ArithOp::neg: return ctx.neg(operands[0]);
        case ArithOp::mul: return ctx.mul(operands[0], operands[1]);
        case ArithOp::pow: return ctx.pow(operands[0], exponent);
    }
    throw ParameterError("unknown arithmetic operation");
}

}  // namespace grc

#endif  // GRCAYLEY_RING_HPP
