#ifndef GRCAYLEY_TESTS_ORACLES_HPP
#define GRCAYLEY_TESTS_ORACLES_HPP

// Test-only brute-force references. Nothing here calls into the code paths
// it is used to check (Rabin test, Frobenius matrix, trace functional,
// character sums); they go through plain enumeration instead.

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "grcayley/ring.hpp"

namespace oracle {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;  // ascending, over F_p, fixed length

inline int deg(const Poly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

/// Remainder of a by monic m over F_p by schoolbook long division.
inline Poly long_rem(Poly a, const Poly& m, u64 p) {
    const int dm = deg(m);
    for (int da = deg(a); da >= dm; da = deg(a)) {
        const u64 c = a[da];
        for (int i = 0; i <= dm; ++i) a[da - dm + i] = (a[da - dm + i] + (p - c) * m[i]) % p;
    }
    return a;
}

/// f monic of degree r over F_p is irreducible iff no monic polynomial of
/// degree 1..r/2 divides it.
inline bool brute_irreducible(const Poly& f, u64 p) {
    const int r = deg(f);
    for (int d = 1; 2 * d <= r; ++d) {
        u64 count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (u64 k = 0; k < count; ++k) {
            Poly g(d + 1, 0);
            u64 kk = k;
            for (int i = 0; i < d; ++i, kk /= p) g[i] = kk % p;
            g[d] = 1;
            if (deg(long_rem(f, g, p)) < 0) return false;
        }
    }
    return true;
}

/// Multiplicative order of x modulo f over F_p by repeated multiplication;
/// 0 if x is nilpotent or the walk exceeds p^r steps.
inline u64 brute_order_of_x(const Poly& f, u64 p) {
    const int r = deg(f);
    u64 limit = 1;
    for (int i = 0; i < r; ++i) limit *= p;
    Poly cur(r, 0);
    cur[0] = 1;
    for (u64 k = 1; k <= limit; ++k) {
        // cur *= x mod f
        Poly next(r + 1, 0);
        for (int i = 0; i < r; ++i) next[i + 1] = cur[i];
        next = long_rem(next, f, p);
        next.resize(r);
        cur = next;
        bool one = cur[0] == 1;
        for (int i = 1; i < r && one; ++i) one = cur[i] == 0;
        if (one) return k;
    }
    return 0;
}

/// Trace of the Z_{p^e}-linear map y -> a*y in the power basis. For Galois
/// rings this equals the Frobenius trace.
inline u64 regular_trace(const grc::RingContext& ctx, const grc::RingElement& a) {
    u64 acc = 0;
    grc::RingElement xj = ctx.one();
    for (u64 j = 0; j < ctx.r(); ++j) {
        acc += ctx.mul(a, xj)[j];
        xj = ctx.mul(xj, ctx.x());
    }
    return acc % ctx.characteristic();
}

/// Frobenius by definition: enumerate all sum a_i xi^i to find the
/// xi-coordinates of every element, then send xi^i to xi^(p i).
class XiBasisFrobenius {
   public:
    explicit XiBasisFrobenius(const grc::RingContext& ctx) : ctx_(ctx) {
        const u64 q = ctx.characteristic();
        std::vector<grc::RingElement> xi_pow;
        for (u64 i = 0; i < ctx.r(); ++i) xi_pow.push_back(ctx.pow(ctx.xi(), i));
        for (u64 k = 0; k < ctx.order(); ++k) {
            std::vector<u64> digits(ctx.r());
            u64 kk = k;
            grc::RingElement sum = ctx.zero();
            for (u64 i = 0; i < ctx.r(); ++i, kk /= q) {
                digits[i] = kk % q;
                sum = ctx.add(sum, ctx.scale(xi_pow[i], digits[i]));
            }
            coords_[ctx.index_of(sum)] = digits;
        }
    }

    /// Number of distinct elements reached; equals |GR| iff xi^i is a basis.
    std::size_t reached() const { return coords_.size(); }

    grc::RingElement apply(const grc::RingElement& a) const {
        const auto& digits = coords_.at(ctx_.index_of(a));
        grc::RingElement out = ctx_.zero();
        for (u64 i = 0; i < ctx_.r(); ++i)
            out = ctx_.add(out, ctx_.scale(ctx_.pow(ctx_.xi(), ctx_.p() * i), digits[i]));
        return out;
    }

   private:
    const grc::RingContext& ctx_;
    std::map<u64, std::vector<u64>> coords_;
};

/// Adjacency eigenvalues of Cay(GR^+, S) from a dense matrix, ascending.
inline std::vector<double> dense_cayley_eigenvalues(const grc::RingContext& ctx,
                                                    const std::vector<grc::RingElement>& conn) {
    const auto n = static_cast<Eigen::Index>(ctx.order());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index u = 0; u < n; ++u) {
        const auto x = ctx.from_index(static_cast<u64>(u));
        for (const auto& s : conn) a(u, static_cast<Eigen::Index>(ctx.index_of(ctx.add(x, s)))) += 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
    return out;
}

}  // namespace oracle

#endif  // GRCAYLEY_TESTS_ORACLES_HPP
