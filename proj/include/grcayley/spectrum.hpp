#ifndef GRCAYLEY_SPECTRUM_HPP
#define GRCAYLEY_SPECTRUM_HPP

// Spectra of Cayley graphs over GR^+ through additive characters.
//
// For gamma in GR the character psi_gamma(x) = omega^T(gamma x), omega a
// primitive p^e-th root of unity, gives the eigenvalue sum_{s in S} psi_gamma(s).
// The exact object per gamma is the histogram of T(gamma s) over S
// (TraceCounts); eigenvalues are views of it. In characteristic 4 the view is
// an integer, otherwise a double with a vanishing imaginary part.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "cayley.hpp"
#include "gaussian.hpp"

namespace grc {

/// Self-check tolerance factor for imaginary residues (times d).
inline constexpr double kImagTolerance = 1e-9;
/// Tolerance for merging numeric eigenvalues and for oracle comparisons.
inline constexpr double kOracleTolerance = 1e-6;
/// Largest graph the dense-matrix oracle accepts.
inline constexpr u64 kOracleMaxVertices = 4096;

struct TraceCounts {
    VertexId gamma_index;
    std::vector<u64> counts;  ///< counts[j] = #{s in S : T(gamma s) = j}, size p^e
};

/// Bulk evaluator of trace histograms gamma -> {T(gamma s) : s in set}.
/// Precomputes T(x^j s) for every s, so each gamma costs |set| * r
/// multiply-adds.
class TraceHistogrammer {
   public:
    TraceHistogrammer(const RingContext& ctx, std::span<const RingElement> set) : ctx_(&ctx) {
        const u64 r = ctx.r();
        weights_.reserve(set.size() * r);
        std::vector<RingElement> xpow;
        RingElement xj = ctx.one();
        for (u64 j = 0; j < r; ++j) {
            xpow.push_back(xj);
            xj = ctx.mul(xj, ctx.x());
        }
        for (const auto& s : set)
            for (u64 j = 0; j < r; ++j) weights_.push_back(ctx.trace(ctx.mul(xpow[j], s)));
        size_ = set.size();
    }

    std::size_t set_size() const noexcept { return size_; }

    /// Calls fn(t) with t = T(gamma s) for each s, in set order.
    template <class Fn>
    void for_each_trace(u64 gamma_index, Fn&& fn) const {
        const u64 q = ctx_->characteristic();
        const u64 r = ctx_->r();
        u64 digits[64];
        for (u64 j = 0; j < r; ++j, gamma_index /= q) digits[j] = gamma_index % q;
        const u64* w = weights_.data();
        for (std::size_t k = 0; k < size_; ++k, w += r) {
            u64 acc = 0;
            for (u64 j = 0; j < r; ++j) acc += digits[j] * w[j];
            fn(acc % q);
        }
    }

    void histogram(u64 gamma_index, std::vector<u64>& counts) const {
        counts.assign(ctx_->characteristic(), 0);
        for_each_trace(gamma_index, [&](u64 t) { ++counts[t]; });
    }

   private:
    const RingContext* ctx_;
    std::vector<u64> weights_;
    std::size_t size_ = 0;
};

/// Histogram of T(gamma s) over the connection set, by direct ring
/// multiplication and trace lookup.
inline TraceCounts trace_counts(const GraphSpec& spec, VertexId gamma) {
    const auto& ctx = spec.ring();
    if (gamma.index >= spec.n()) throw RangeError("character index out of range");
    const RingElement g = ctx.from_index(gamma.index);
    TraceCounts tc{gamma, std::vector<u64>(ctx.characteristic(), 0)};
    for (const auto& s : spec.connection_set()) ++tc.counts[ctx.trace(ctx.mul(g, s))];
    return tc;
}

/// sum_{s in S} i^T(gamma s) = counts[0] - counts[2], given counts[1] == counts[3].
inline i64 eigenvalue_exact_char4(const TraceCounts& tc) {
    if (tc.counts.size() != 4) throw ParameterError("exact path requires p^e = 4");
    if (tc.counts[1] != tc.counts[3])
        throw IntegrityError("trace counts not symmetric at gamma index " + std::to_string(tc.gamma_index.index));
    return static_cast<i64>(tc.counts[0]) - static_cast<i64>(tc.counts[2]);
}

namespace detail {

struct RootTable {
    std::vector<double> cos, sin;
    explicit RootTable(u64 q) : cos(q), sin(q) {
        for (u64 j = 0; j < q; ++j) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(q);
            cos[j] = std::cos(angle);
            sin[j] = std::sin(angle);
        }
    }
};

}  // namespace detail

/// sum_j counts[j] cos(2 pi j / p^e); the matching sine sum must vanish.
inline double eigenvalue_numeric(const TraceCounts& tc, u64 p, u64 e) {
    const u64 q = ipow(p, e);
    if (tc.counts.size() != q) throw ParameterError("trace counts have the wrong length");
    double re = 0, im = 0;
    u64 d = 0;
    for (u64 j = 0; j < q; ++j) {
        if (tc.counts[j] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(q);
        re += static_cast<double>(tc.counts[j]) * std::cos(angle);
        im += static_cast<double>(tc.counts[j]) * std::sin(angle);
        d += tc.counts[j];
    }
    if (std::abs(im) >= kImagTolerance * static_cast<double>(std::max<u64>(d, 1)))
        throw IntegrityError("imaginary residual " + std::to_string(im) + " at gamma index " +
                             std::to_string(tc.gamma_index.index));
    return re;
}

// ---- zeta_gamma = sum_{s in G_1} omega^T(gamma s) ------------------------

inline GaussianInt zeta_exact(const RingContext& ctx, const RingElement& gamma) {
    if (ctx.characteristic() != 4) throw ParameterError("exact zeta requires p^e = 4");
    GaussianInt z;
    for (const auto& s : ctx.teichmuller()) z = z + GaussianInt::unit_power(ctx.trace(ctx.mul(gamma, s)));
    return z;
}

inline std::complex<double> zeta_numeric(const RingContext& ctx, const RingElement& gamma) {
    const u64 q = ctx.characteristic();
    std::complex<double> z = 0;
    for (const auto& s : ctx.teichmuller()) {
        const double angle =
            2.0 * std::numbers::pi * static_cast<double>(ctx.trace(ctx.mul(gamma, s))) / static_cast<double>(q);
        z += std::polar(1.0, angle);
    }
    return z;
}

/// Histogram over G_1 folded into a Gaussian integer (p^e = 4 only).
inline GaussianInt gaussian_from_counts(const std::vector<u64>& c) {
    return {static_cast<i64>(c[0]) - static_cast<i64>(c[2]), static_cast<i64>(c[1]) - static_cast<i64>(c[3])};
}

// ---- spectra ---------------------------------------------------------------

struct SpectrumEntry {
    double value = 0;
    i64 exact = 0;  ///< meaningful when the spectrum is exact
    u64 multiplicity = 0;
};

struct Spectrum {
    std::vector<SpectrumEntry> entries;  ///< sorted by value, descending
    bool exact = false;
    u64 n = 0;
    u64 d = 0;

    u64 multiplicity_near(double value, double tol = kOracleTolerance) const {
        u64 m = 0;
        for (const auto& en : entries)
            if (std::abs(en.value - value) <= tol) m += en.multiplicity;
        return m;
    }

    /// The multiset, ascending.
    std::vector<double> expanded() const {
        std::vector<double> out;
        out.reserve(n);
        for (auto it = entries.rbegin(); it != entries.rend(); ++it) out.insert(out.end(), it->multiplicity, it->value);
        return out;
    }
};

/// One eigenvalue per character index gamma in [0, n).
struct CharacterValues {
    bool exact = false;
    std::vector<i64> exact_values;
    std::vector<double> values;
};

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Evaluates the eigenvalue of every character. Workers take disjoint
/// contiguous gamma ranges.
inline CharacterValues character_values(const GraphSpec& spec, unsigned threads = 0) {
    const auto& ctx = spec.ring();
    const u64 n = spec.n();
    const u64 q = ctx.characteristic();
    const TraceHistogrammer hist(ctx, spec.connection_set());
    CharacterValues out;
    out.exact = q == 4;
    if (out.exact)
        out.exact_values.resize(n);
    else
        out.values.resize(n);
    const detail::RootTable roots(out.exact ? 1 : q);

    auto work = [&](u64 begin, u64 end) {
        std::vector<u64> counts(q, 0);
        for (u64 g = begin; g < end; ++g) {
            hist.histogram(g, counts);
            if (out.exact) {
                out.exact_values[g] = eigenvalue_exact_char4(TraceCounts{VertexId{g}, counts});
            } else {
                double re = 0, im = 0;
                for (u64 j = 0; j < q; ++j) {
                    if (counts[j] == 0) continue;
                    re += static_cast<double>(counts[j]) * roots.cos[j];
                    im += static_cast<double>(counts[j]) * roots.sin[j];
                }
                if (std::abs(im) >= kImagTolerance * static_cast<double>(spec.d()))
                    throw IntegrityError("imaginary residual at gamma index " + std::to_string(g));
                out.values[g] = re;
            }
        }
    };

    const unsigned nt = static_cast<unsigned>(std::min<u64>(resolve_threads(threads), std::max<u64>(n / 1024, 1)));
    if (nt <= 1) {
        work(0, n);
        return out;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nt);
    const u64 chunk = (n + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
        const u64 b = std::min(n, t * chunk), e = std::min(n, b + chunk);
        pool.emplace_back([&, t, b, e] {
            try {
                work(b, e);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    return out;
}

/// Groups values within kOracleTolerance of the first member of the group;
/// the group mean is the representative. Result sorted descending.
inline std::vector<SpectrumEntry> merge_numeric(std::vector<double> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    std::vector<SpectrumEntry> out;
    std::size_t i = 0;
    while (i < values.size()) {
        std::size_t j = i;
        double sum = 0;
        while (j < values.size() && values[i] - values[j] <= kOracleTolerance) sum += values[j++];
        double rep = sum / static_cast<double>(j - i);
        if (std::abs(rep) < kOracleTolerance * 1e-3) rep = 0.0;
        out.push_back({rep, 0, static_cast<u64>(j - i)});
        i = j;
    }
    return out;
}

inline Spectrum spectrum_from_values(const CharacterValues& cv, u64 n, u64 d) {
    Spectrum sp;
    sp.exact = cv.exact;
    sp.n = n;
    sp.d = d;
    if (cv.exact) {
        std::map<i64, u64, std::greater<>> hist;
        for (i64 v : cv.exact_values) ++hist[v];
        for (auto [v, m] : hist) sp.entries.push_back({static_cast<double>(v), v, m});
    } else {
        sp.entries = merge_numeric(cv.values);
    }
    return sp;
}

/// Complete eigenvalue multiset via characters; exact iff p^e = 4.
inline Spectrum full_spectrum(const GraphSpec& spec, unsigned threads = 0) {
    return spectrum_from_values(character_values(spec, threads), spec.n(), spec.d());
}

/// Eigenvalues (ascending) of the explicitly assembled adjacency matrix.
inline std::vector<double> oracle_eigenvalues(const GraphSpec& spec) {
    if (spec.n() > kOracleMaxVertices)
        throw SizeError("dense oracle limited to " + std::to_string(kOracleMaxVertices) + " vertices");
    const auto n = static_cast<Eigen::Index>(spec.n());
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index u = 0; u < n; ++u)
        spec.for_each_neighbor(static_cast<u64>(u), [&](u64 w) { a(u, static_cast<Eigen::Index>(w)) += 1.0; });
    // Shift by d + 1 so that every eigenvalue is positive: with a zero
    // diagonal and 0 in the spectrum, Eigen's relative deflation test can
    // stall on large multiplicities.
    const double shift = static_cast<double>(spec.d()) + 1.0;
    a.diagonal().array() += shift;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw IntegrityError("dense eigensolver did not converge");
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    for (auto& v : out) v -= shift;
    return out;
}

/// Dense-matrix spectrum. Values within `tol` of an integer are snapped so
/// that multiplicities can be compared against the character-sum spectrum.
inline Spectrum oracle_spectrum(const GraphSpec& spec, double tol = kOracleTolerance) {
    std::vector<double> ev = oracle_eigenvalues(spec);
    for (auto& v : ev) {
        const double rounded = std::round(v);
        if (std::abs(v - rounded) <= tol) v = rounded;
    }
    Spectrum sp;
    sp.n = spec.n();
    sp.d = spec.d();
    sp.entries = merge_numeric(std::move(ev));
    return sp;
}

/// Multiset equality within `tol`, comparing sorted expansions.
inline bool spectra_match(const Spectrum& a, const Spectrum& b, double tol = kOracleTolerance, double* max_diff = nullptr) {
    const auto xa = a.expanded(), xb = b.expanded();
    if (xa.size() != xb.size()) return false;
    double worst = 0;
    for (std::size_t i = 0; i < xa.size(); ++i) worst = std::max(worst, std::abs(xa[i] - xb[i]));
    if (max_diff) *max_diff = worst;
    return worst <= tol;
}

// ---- CSV ---------------------------------------------------------------------

inline std::string format_eigenvalue(const Spectrum& sp, const SpectrumEntry& en) {
    if (sp.exact) return std::to_string(en.exact);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", en.value == 0.0 ? 0.0 : en.value);
    return buf;
}

inline void write_spectrum_csv(const Spectrum& sp, std::ostream& os) {
    os << "eigenvalue,multiplicity\n";
    for (const auto& en : sp.entries) os << format_eigenvalue(sp, en) << ',' << en.multiplicity << '\n';
}

}  // namespace grc

#endif  // GRCAYLEY_SPECTRUM_HPP
