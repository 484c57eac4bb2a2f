#ifndef GRCAYLEY_CAYLEY_HPP
#define GRCAYLEY_CAYLEY_HPP

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ring.hpp"

namespace grc {

/// Vertex of a Cayley graph over GR^+; the index is the mixed-radix index of
/// the corresponding ring element.
struct VertexId {
    u64 index = 0;
    auto operator<=>(const VertexId&) const = default;
};

/// Cay(GR^+(p^e, p^er), S) with S = gamma*G_1 u -gamma*G_1 (p = 2) or
/// S = gamma*G_1 (p odd). Immutable; neighbor queries are pure.
class GraphSpec {
   public:
    const RingContext& ring() const noexcept { return *ctx_; }
    const RingPtr& ring_ptr() const noexcept { return ctx_; }
    const RingElement& gamma() const noexcept { return gamma_; }
    const std::vector<RingElement>& connection_set() const noexcept { return conn_; }
    const std::vector<u64>& connection_indices() const noexcept { return conn_idx_; }
    u64 n() const noexcept { return ctx_->order(); }
    u64 d() const noexcept { return conn_.size(); }

    VertexId vertex_of(const RingElement& a) const { return VertexId{ctx_->index_of(a)}; }
    RingElement element_of(VertexId v) const { return ctx_->from_index(v.index); }

    /// Index of (element a) + (element b), digitwise mod p^e.
    u64 add_indices(u64 a, u64 b) const noexcept {
        const u64 q = ctx_->characteristic();
        u64 out = 0, weight = 1;
        for (u64 i = 0; i < ctx_->r(); ++i) {
            out += ((a % q + b % q) % q) * weight;
            a /= q;
            b /= q;
            weight *= q;
        }
        return out;
    }

    /// Calls fn(w) for each neighbor w = v + s, in connection-set order.
    template <class Fn>
    void for_each_neighbor(u64 v, Fn&& fn) const {
        const u64 q = ctx_->characteristic();
        const u64 r = ctx_->r();
        u64 digits[64];
        u64 tmp = v;
        for (u64 i = 0; i < r; ++i, tmp /= q) digits[i] = tmp % q;
        for (std::size_t k = 0; k < conn_.size(); ++k) {
            const auto& s = conn_digits_[k];
            u64 out = 0;
            for (u64 i = r; i-- > 0;) {
                u64 dgt = digits[i] + s[i];
                if (dgt >= q) dgt -= q;
                out = out * q + dgt;
            }
            fn(out);
        }
    }

    std::vector<VertexId> neighbors(VertexId v) const {
        if (v.index >= n()) throw RangeError("vertex " + std::to_string(v.index) + " out of range");
        std::vector<VertexId> out;
        out.reserve(d());
        for_each_neighbor(v.index, [&](u64 w) { out.push_back(VertexId{w}); });
        return out;
    }

    /// "a0,a1,..." literal of gamma.
    std::string gamma_literal() const { return format_coeff_list(gamma_.coeffs()); }

   private:
    friend GraphSpec build_graph(RingPtr, std::optional<RingElement>);
    GraphSpec() = default;

    RingPtr ctx_;
    RingElement gamma_;
    std::vector<RingElement> conn_;
    std::vector<u64> conn_idx_;
    std::vector<std::vector<u64>> conn_digits_;
};

/// Builds H_{p^e,p^er} (gamma = 1) or its gamma-twist for a unit gamma.
/// Non-unit gamma lies in pGR, where the Cayley digraph is not strongly
/// connected; those are rejected.
inline GraphSpec build_graph(RingPtr ctx, std::optional<RingElement> gamma = std::nullopt) {
    if (!ctx) throw ParameterError("build_graph: null ring context");
    if (ctx->r() > 64) throw ParameterError("build_graph: r > 64 unsupported");
    const RingElement g = gamma ? *gamma : ctx->one();
    if (!ctx->is_unit(g))
        throw ParameterError("gamma must be a unit; gamma in pGR gives Cayley digraphs that are not strongly connected");

    GraphSpec spec;
    spec.ctx_ = ctx;
    spec.gamma_ = g;
    for (const auto& t : ctx->teichmuller()) spec.conn_.push_back(ctx->mul(g, t));
    const bool two = ctx->p() == 2;
    if (two) {
        const std::size_t half = spec.conn_.size();
        for (std::size_t k = 0; k < half; ++k) spec.conn_.push_back(ctx->neg(spec.conn_[k]));
    }

    std::unordered_set<u64> seen;
    for (const auto& s : spec.conn_) {
        const u64 idx = ctx->index_of(s);
        if (idx == 0) throw IntegrityError("connection set contains 0");
        if (!seen.insert(idx).second)
            throw IntegrityError(two ? "gamma*G_1 and -gamma*G_1 intersect" : "duplicate connection element");
        spec.conn_idx_.push_back(idx);
        spec.conn_digits_.push_back(s.coeffs());
    }
    for (const auto& s : spec.conn_)
        if (!seen.contains(ctx->index_of(ctx->neg(s)))) throw IntegrityError("connection set is not closed under negation");

    const u64 pr = ctx->residue_order();
    const u64 expected_degree = two ? 2 * pr - 2 : pr - 1;
    if (spec.d() != expected_degree) throw IntegrityError("connection set has unexpected size");
    return spec;
}

/// Writes "# p e r gamma n d" followed by every undirected edge "u v" with
/// u < v, in lexicographic order. Returns the number of edges written.
inline u64 export_edges(const GraphSpec& spec, std::ostream& sink) {
    const auto& ctx = spec.ring();
    sink << "# " << ctx.p() << ' ' << ctx.e() << ' ' << ctx.r() << ' ' << spec.gamma_literal() << ' ' << spec.n()
         << ' ' << spec.d() << '\n';
    u64 count = 0;
    std::vector<u64> nbrs;
    nbrs.reserve(spec.d());
    std::string line;
    for (u64 u = 0; u < spec.n(); ++u) {
        nbrs.clear();
        spec.for_each_neighbor(u, [&](u64 w) {
            if (w > u) nbrs.push_back(w);
        });
        std::sort(nbrs.begin(), nbrs.end());
        for (u64 w : nbrs) {
            line.clear();
            line += std::to_string(u);
            line += ' ';
            line += std::to_string(w);
            line += '\n';
            sink << line;
        }
        count += nbrs.size();
        if (!sink) throw std::ios_base::failure("edge sink write failed");
    }
    sink.flush();
    if (!sink) throw std::ios_base::failure("edge sink write failed");
    return count;
}

// ---- BFS ----------------------------------------------------------------

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

struct BfsResult {
    std::vector<std::uint32_t> dist;
    u64 reached = 0;
    std::uint32_t eccentricity = 0;
};

inline BfsResult bfs(const GraphSpec& spec, u64 root) {
    if (root >= spec.n()) throw RangeError("BFS root out of range");
    BfsResult res;
    res.dist.assign(spec.n(), kUnreached);
    std::vector<u64> frontier{root}, next;
    res.dist[root] = 0;
    res.reached = 1;
    std::uint32_t level = 0;
    while (!frontier.empty()) {
        next.clear();
        for (u64 u : frontier)
            spec.for_each_neighbor(u, [&](u64 w) {
                if (res.dist[w] == kUnreached) {
                    res.dist[w] = level + 1;
                    next.push_back(w);
                }
            });
        if (!next.empty()) ++level;
        res.reached += next.size();
        std::swap(frontier, next);
    }
    res.eccentricity = level;
    return res;
}

// ---- sparse families ---------------------------------------------------

struct Rational {
    u64 num = 0;
    u64 den = 1;
};

/// Parses "a/b" or "a".
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw ParameterError("bad rational '" + std::string(text) + "'");
        u64 v = 0;
        for (char ch : s) {
            if (ch < '0' || ch > '9') throw ParameterError("bad rational '" + std::string(text) + "'");
            v = v * 10 + static_cast<u64>(ch - '0');
            if (v > (u64{1} << 40)) throw ParameterError("rational component too large");
        }
        return v;
    };
    Rational out;
    out.num = parse_int(text.substr(0, slash));
    out.den = slash == std::string_view::npos ? 1 : parse_int(text.substr(slash + 1));
    if (out.den == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
    return out;
}

struct FamilyParams {
    u64 e = 0;
    u64 n_exponent = 0;       ///< n = p^n_exponent = p^(delta r^2)
    std::optional<u64> n;     ///< when it fits in 64 bits
    u64 d = 0;
    long double lambda_bound = 0;
};

/// Parameters of H_{p^(delta r), p^(delta r^2)} and its lambda(G) bound.
inline FamilyParams family_params(u64 p, Rational delta, u64 r) {
    if (!is_prime(p)) throw ParameterError("p must be prime");
    if (delta.num == 0 || 2 * delta.num > delta.den) throw ParameterError("delta must lie in (0, 1/2]");
    if ((delta.num * r) % delta.den != 0) throw ParameterError("delta * r is not an integer");
    FamilyParams fp;
    fp.e = delta.num * r / delta.den;
    if (fp.e < 2) throw ParameterError("delta * r must be at least 2");
    fp.n_exponent = fp.e * r;
    fp.n = checked_pow(p, fp.n_exponent);
    const auto pr = checked_pow(p, r, u64{1} << 62);
    if (!pr) throw ParameterError("p^r too large");
    fp.d = p == 2 ? 2 * *pr - 2 : *pr - 1;
    const long double half_r = static_cast<long double>(r) / 2;
    const long double lp = static_cast<long double>(p);
    if (p == 2)
        fp.lambda_bound = std::pow(2.0L, half_r + fp.e) - std::pow(2.0L, half_r + 1) + 2;
    else
        fp.lambda_bound = std::pow(lp, half_r + fp.e - 1) - std::pow(lp, half_r) + 1;
    return fp;
}

}  // namespace grc

#endif  // GRCAYLEY_CAYLEY_HPP
