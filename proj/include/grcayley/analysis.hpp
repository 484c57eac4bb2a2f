#ifndef GRCAYLEY_ANALYSIS_HPP
#define GRCAYLEY_ANALYSIS_HPP

// Claim checks over a graph and its spectrum. Each check returns a
// ClaimReport and never throws on a failed claim; a failing report carries a
// witness. Characteristic-4 checks stay in integer / Gaussian-integer
// arithmetic end to end.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "spectrum.hpp"

namespace grc {

using ClaimValue = std::variant<i64, double>;

inline double as_double(const ClaimValue& v) {
    return std::visit([](auto x) { return static_cast<double>(x); }, v);
}

struct ClaimReport {
    std::string claim_id;
    bool holds = true;
    std::optional<std::string> witness;
    ClaimValue bound_value = i64{0};
    ClaimValue observed_value = i64{0};
    /// True when no theorem covers this instance: the value is reported but
    /// a failure is not a refutation.
    bool informational = false;
    std::vector<std::pair<std::string, ClaimValue>> details;
};

namespace detail {

inline std::string gamma_witness(const RingContext& ctx, u64 gamma_index) {
    return "gamma=" + format_coeff_list(ctx.from_index(gamma_index).coeffs());
}

/// x <= a*sqrt(b) + c for integers, a, b >= 0: exact.
inline bool le_affine_sqrt(i64 x, i64 a, i64 b, i64 c) {
    const i64 lhs = x - c;
    if (lhs <= 0) return true;
    return static_cast<__int128>(lhs) * lhs <= static_cast<__int128>(a) * a * b;
}

}  // namespace detail

// ---- eigenvalue intervals ----------------------------------------------------

/// Half-width of the interval containing every non-principal eigenvalue:
/// 2^(e+r/2) - 2^(r/2+1) + 2 for p = 2, p^(e+r/2-1) - p^(r/2) + 1 for odd p.
inline double interval_half_width(u64 p, u64 e, u64 r) {
    const double pr2 = std::pow(static_cast<double>(p), static_cast<double>(r) / 2.0);
    if (p == 2) return pr2 * (std::pow(2.0, static_cast<double>(e)) - 2.0) + 2.0;
    return pr2 * (std::pow(static_cast<double>(p), static_cast<double>(e - 1)) - 1.0) + 1.0;
}

/// |lambda| <= interval_half_width for every eigenvalue other than the
/// degree. Exact comparison for exact spectra, 1e-6 tolerance otherwise.
inline ClaimReport check_interval(const GraphSpec& spec, const Spectrum& sp) {
    const auto& ctx = spec.ring();
    const u64 p = ctx.p(), e = ctx.e(), r = ctx.r();
    ClaimReport rep;
    rep.claim_id = "interval";
    const double bound = interval_half_width(p, e, r);
    rep.bound_value = bound;
    double worst = 0;
    for (const auto& en : sp.entries) {
        bool principal, inside;
        if (sp.exact) {
            principal = en.exact == static_cast<i64>(sp.d);
            const i64 mag = en.exact < 0 ? -en.exact : en.exact;
            // p = 2: half-width = 2^(r/2) (2^e - 2) + 2, squared form 2^r (2^e - 2)^2
            const i64 a = static_cast<i64>(ipow(2, e)) - 2;
            inside = detail::le_affine_sqrt(mag, a, static_cast<i64>(ipow(2, r)), 2);
        } else {
            principal = std::abs(en.value - static_cast<double>(sp.d)) <= kOracleTolerance;
            inside = std::abs(en.value) <= bound + kOracleTolerance;
        }
        if (principal) continue;
        worst = std::max(worst, std::abs(en.value));
        if (!inside && rep.holds) {
            rep.holds = false;
            rep.witness = "eigenvalue=" + format_eigenvalue(sp, en);
        }
    }
    rep.observed_value = worst;
    if (sp.exact) rep.observed_value = static_cast<i64>(std::llround(worst));
    return rep;
}

// ---- Weil-Carlitz-Uchiyama type bound ---------------------------------------

/// First nonzero p-adic digit position of gamma != 0 and N = p^(e-1-i).
struct WCUBoundInput {
    RingElement gamma;
    u64 i_alpha = 0;
    u64 n_alpha = 0;
};

inline WCUBoundInput wcu_input(const RingContext& ctx, const RingElement& gamma) {
    const auto coords = ctx.padic_coords(gamma);
    for (u64 i = 0; i < ctx.e(); ++i)
        if (coords.digits[i] != ctx.zero()) return {gamma, i, ipow(ctx.p(), ctx.e() - 1 - i)};
    throw ParameterError("WCU bound is stated for gamma != 0");
}

/// |sum_{s in G_1} psi_gamma(s)| <= (N_gamma - 1) sqrt(p^r) + 1 for all
/// gamma != 0, one report per p-adic level i_gamma ("wcu.level<i>").
///
/// zeta_{gamma g} = zeta_gamma for g in G_1, and G_1 acts freely on the
/// nonzero elements, so the sum is evaluated once per G_1-orbit and holds
/// for every member.
inline std::vector<ClaimReport> check_wcu(const RingContext& ctx) {
    const u64 n = ctx.order(), q = ctx.characteristic(), e = ctx.e();
    const auto& g1 = ctx.teichmuller();
    const TraceHistogrammer hist(ctx, g1);
    const detail::RootTable roots(q);
    const bool exact = q == 4;
    const i64 pr = static_cast<i64>(ctx.residue_order());

    std::vector<ClaimReport> reps(e);
    std::vector<u64> gammas_at_level(e, 0);
    std::vector<double> worst(e, 0.0);
    for (u64 i = 0; i < e; ++i) {
        reps[i].claim_id = "wcu.level" + std::to_string(i);
        const u64 big_n = ipow(ctx.p(), e - 1 - i);
        reps[i].bound_value = static_cast<double>(big_n - 1) * std::sqrt(static_cast<double>(pr)) + 1.0;
    }

    std::vector<bool> visited(n, false);
    std::vector<u64> counts, gamma_coeffs(ctx.r()), prod(ctx.r());
    for (u64 gi = 1; gi < n; ++gi) {
        if (visited[gi]) continue;
        const RingElement gamma = ctx.from_index(gi);
        for (const auto& g : g1) {
            ctx.mul_coeffs(gamma.coeffs(), g.coeffs(), prod);
            visited[ctx.index_of_coeffs(prod)] = true;
        }
        const auto input = wcu_input(ctx, gamma);
        const u64 level = input.i_alpha;
        gammas_at_level[level] += g1.size();
        hist.histogram(gi, counts);

        bool ok;
        double magnitude;
        if (exact) {
            const GaussianInt z = gaussian_from_counts(counts);
            magnitude = std::sqrt(static_cast<double>(z.norm()));
            // |z| <= A sqrt(P) + 1  <=>  norm - A^2 P - 1 <= 2 A sqrt(P)
            const i64 a = static_cast<i64>(input.n_alpha) - 1;
            const i64 lhs = z.norm() - a * a * pr - 1;
            ok = lhs <= 0 || static_cast<__int128>(lhs) * lhs <= static_cast<__int128>(4) * a * a * pr;
        } else {
            double re = 0, im = 0;
            for (u64 j = 0; j < q; ++j) {
                re += static_cast<double>(counts[j]) * roots.cos[j];
                im += static_cast<double>(counts[j]) * roots.sin[j];
            }
            magnitude = std::hypot(re, im);
            ok = magnitude <= as_double(reps[level].bound_value) + kOracleTolerance;
        }
        worst[level] = std::max(worst[level], magnitude);
        if (!ok && reps[level].holds) {
            reps[level].holds = false;
            reps[level].witness = detail::gamma_witness(ctx, gi);
        }
    }
    std::vector<ClaimReport> out;
    for (u64 i = 0; i < e; ++i) {
        reps[i].observed_value = worst[i];
        reps[i].details.emplace_back("gammas_checked", static_cast<i64>(gammas_at_level[i]));
        reps[i].details.emplace_back("n_alpha", static_cast<i64>(ipow(ctx.p(), e - 1 - i)));
        out.push_back(std::move(reps[i]));
    }
    return out;
}

// ---- characteristic 4: zeta evaluation -----------------------------------------

/// Units: norm(1 + zeta_gamma) = 2^r. Nonzero non-units: zeta_gamma = -1.
/// Exhaustive over the ring, in Gaussian integers.
inline ClaimReport check_bhk(const RingContext& ctx) {
    if (ctx.characteristic() != 4) throw ParameterError("zeta evaluation check requires p^e = 4");
    const TraceHistogrammer hist(ctx, ctx.teichmuller());
    const i64 target = static_cast<i64>(ipow(2, ctx.r()));
    ClaimReport rep;
    rep.claim_id = "bhk";
    rep.bound_value = target;
    i64 units = 0, nonunits = 0;
    i64 min_norm = std::numeric_limits<i64>::max(), max_norm = 0;
    std::vector<u64> counts;
    auto fail = [&](u64 gi, const char* why) {
        if (!rep.holds) return;
        rep.holds = false;
        rep.witness = detail::gamma_witness(ctx, gi) + " (" + why + ")";
    };
    for (u64 gi = 0; gi < ctx.order(); ++gi) {
        hist.histogram(gi, counts);
        const GaussianInt z = gaussian_from_counts(counts);
        if (gi == 0) {
            if (z != GaussianInt{target - 1, 0}) fail(gi, "zeta_0 != 2^r - 1");
            continue;
        }
        if (ctx.is_unit(ctx.from_index(gi))) {
            ++units;
            const i64 nrm = (z + GaussianInt{1, 0}).norm();
            min_norm = std::min(min_norm, nrm);
            max_norm = std::max(max_norm, nrm);
            if (nrm != target) fail(gi, "norm(1 + zeta) != 2^r");
        } else {
            ++nonunits;
            if (z != GaussianInt{-1, 0}) fail(gi, "zeta != -1 for a non-unit");
        }
    }
    rep.observed_value = rep.holds ? target : (min_norm != target ? min_norm : max_norm);
    rep.details.emplace_back("units_checked", units);
    rep.details.emplace_back("nonunits_checked", nonunits);
    return rep;
}

/// The 2^r cosets gamma G_1, -gamma G_1, (1 - xi^t) gamma G_1 (t = 1..2^r-2)
/// partition the unit group, and 2 gamma G_1 u {0} is the set of non-units.
inline ClaimReport check_residue_partition(const RingContext& ctx, const RingElement& gamma) {
    if (ctx.characteristic() != 4) throw ParameterError("residue partition check requires p^e = 4");
    if (!ctx.is_unit(gamma)) throw ParameterError("residue partition needs a unit gamma");
    const u64 n = ctx.order();
    const u64 coset_size = ctx.teichmuller().size();
    ClaimReport rep;
    rep.claim_id = "residue";
    auto fail = [&](const RingElement& el, const std::string& why) {
        if (!rep.holds) return;
        rep.holds = false;
        rep.witness = "element=" + format_coeff_list(el.coeffs()) + " (" + why + ")";
    };

    std::vector<RingElement> multipliers{gamma, ctx.neg(gamma)};
    for (u64 t = 1; t < coset_size; ++t) multipliers.push_back(ctx.mul(ctx.sub(ctx.one(), ctx.teichmuller()[t]), gamma));

    std::vector<bool> covered(n, false);
    u64 covered_count = 0;
    for (const auto& m : multipliers)
        for (const auto& g : ctx.teichmuller()) {
            const auto el = ctx.mul(m, g);
            const u64 idx = ctx.index_of(el);
            if (!ctx.is_unit(el)) fail(el, "coset member is not a unit");
            if (covered[idx]) fail(el, "cosets overlap");
            else ++covered_count;
            covered[idx] = true;
        }

    u64 unit_count = 0;
    for (u64 i = 0; i < n; ++i)
        if (ctx.is_unit(ctx.from_index(i))) ++unit_count;
    if (covered_count != unit_count) {
        for (u64 i = 0; i < n; ++i)
            if (!covered[i] && ctx.is_unit(ctx.from_index(i))) {
                fail(ctx.from_index(i), "unit not covered by the cosets");
                break;
            }
    }

    std::unordered_set<u64> nonunit_set{0};
    const auto two_gamma = ctx.scale(gamma, 2);
    for (const auto& g : ctx.teichmuller()) {
        const auto el = ctx.mul(two_gamma, g);
        if (ctx.is_unit(el)) fail(el, "2 gamma G_1 contains a unit");
        nonunit_set.insert(ctx.index_of(el));
    }
    if (nonunit_set.size() != n - unit_count) fail(two_gamma, "2 gamma G_1 u {0} misses a non-unit");

    rep.bound_value = static_cast<i64>(multipliers.size());
    rep.observed_value = static_cast<i64>(covered_count);
    rep.details.emplace_back("cosets", static_cast<i64>(multipliers.size()));
    rep.details.emplace_back("coset_size", static_cast<i64>(coset_size));
    rep.details.emplace_back("units", static_cast<i64>(unit_count));
    rep.details.emplace_back("nonunits_from_2gammaG1", static_cast<i64>(nonunit_set.size()));
    return rep;
}

// ---- Ramanujan --------------------------------------------------------------

/// lambda(G) = max |lambda| over eigenvalues other than +-d; nullopt if none.
inline std::optional<double> lambda_g(const Spectrum& sp) {
    std::optional<double> best;
    for (const auto& en : sp.entries) {
        const double mag = std::abs(en.value);
        const bool pm_d = sp.exact ? (en.exact == static_cast<i64>(sp.d) || en.exact == -static_cast<i64>(sp.d))
                                   : std::abs(mag - static_cast<double>(sp.d)) <= kOracleTolerance;
        if (pm_d) continue;
        if (!best || mag > *best) best = mag;
    }
    return best;
}

/// lambda(G)^2 <= 4(d - 1).
inline ClaimReport is_ramanujan(const Spectrum& sp) {
    ClaimReport rep;
    rep.claim_id = "ramanujan";
    rep.bound_value = 2.0 * std::sqrt(static_cast<double>(sp.d) - 1.0);
    const auto lam = lambda_g(sp);
    if (!lam) {
        rep.observed_value = i64{0};
        return rep;
    }
    if (sp.exact) {
        const i64 l = std::llround(*lam);
        rep.observed_value = l;
        rep.holds = l * l <= 4 * (static_cast<i64>(sp.d) - 1);
    } else {
        rep.observed_value = *lam;
        rep.holds = (*lam) * (*lam) <= 4.0 * (static_cast<double>(sp.d) - 1.0) + kOracleTolerance;
    }
    if (!rep.holds) rep.witness = "lambda_G=" + std::to_string(*lam);
    return rep;
}

// ---- girth, triangles -------------------------------------------------------

/// Shortest cycle through vertex 0, which is the girth because Cayley
/// graphs are vertex-transitive. nullopt if the graph is acyclic.
inline std::optional<u64> girth(const GraphSpec& spec) {
    const u64 n = spec.n();
    std::vector<std::uint32_t> dist(n, kUnreached);
    std::vector<u64> parent(n, n);
    std::vector<u64> frontier{0}, next;
    dist[0] = 0;
    std::optional<u64> best;
    while (!frontier.empty()) {
        // a cycle found at this depth cannot be beaten by deeper levels
        if (best && 2 * static_cast<u64>(dist[frontier.front()]) + 1 >= *best) break;
        next.clear();
        for (u64 u : frontier)
            spec.for_each_neighbor(u, [&](u64 w) {
                if (dist[w] == kUnreached) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    next.push_back(w);
                } else if (w != parent[u]) {
                    const u64 len = static_cast<u64>(dist[u]) + dist[w] + 1;
                    if (!best || len < *best) best = len;
                }
            });
        std::swap(frontier, next);
    }
    return best;
}

/// Ordered triples (s1, s2, s3) in S^3 with s1 + s2 + s3 = 0.
inline u64 triangle_count(const GraphSpec& spec) {
    const auto& ctx = spec.ring();
    const u64 q = ctx.characteristic();
    const std::unordered_set<u64> conn(spec.connection_indices().begin(), spec.connection_indices().end());
    auto neg_index = [&](u64 idx) {
        u64 out = 0, weight = 1;
        for (u64 i = 0; i < ctx.r(); ++i, idx /= q, weight *= q) out += ((q - idx % q) % q) * weight;
        return out;
    };
    u64 count = 0;
    for (u64 a : spec.connection_indices())
        for (u64 b : spec.connection_indices())
            if (conn.contains(neg_index(spec.add_indices(a, b)))) ++count;
    return count;
}

/// Girth and triangle counts must agree on whether the girth is 3. For p = 2
/// and odd r the graph is triangle-free, and for e = 2 the girth is 4.
inline ClaimReport check_girth(const GraphSpec& spec) {
    const auto& ctx = spec.ring();
    ClaimReport rep;
    rep.claim_id = "girth";
    const auto g = girth(spec);
    const u64 tri = triangle_count(spec);
    rep.observed_value = g ? static_cast<i64>(*g) : i64{-1};
    rep.details.emplace_back("triangle_count", static_cast<i64>(tri));
    const bool agree = (g && *g == 3) == (tri > 0);
    const bool theorem = ctx.p() == 2 && ctx.r() % 2 == 1;
    rep.bound_value = rep.observed_value;
    if (!agree) {
        rep.holds = false;
        rep.witness = "bfs girth and triangle count disagree";
    }
    if (theorem) {
        rep.bound_value = i64{4};
        if (tri != 0) {
            rep.holds = false;
            rep.witness = "triangle_count=" + std::to_string(tri);
        } else if (ctx.e() == 2 && (!g || *g != 4)) {
            rep.holds = false;
            rep.witness = "girth=" + (g ? std::to_string(*g) : std::string("acyclic"));
        }
    }
    rep.details.emplace_back("theorem_applies", i64{theorem ? 1 : 0});
    return rep;
}

// ---- connectivity --------------------------------------------------------------

struct ConnectivityReport {
    u64 components = 0;
    std::optional<u64> diameter;
    std::optional<double> chung_bound;
    double chung_lambda = 0;
    bool corollary_applies = false;  ///< e < r/2 + 1
    u64 degree_multiplicity = 0;
};

/// Components and diameter from a BFS at 0 (Cayley graph components are
/// cosets of the generated subgroup). The Chung bound uses the largest
/// |eigenvalue| after removing one copy of d.
inline ConnectivityReport connectivity(const GraphSpec& spec, const Spectrum& sp) {
    ConnectivityReport rep;
    const auto res = bfs(spec, 0);
    rep.components = spec.n() / res.reached;
    if (rep.components == 1) rep.diameter = res.eccentricity;
    rep.corollary_applies = 2 * spec.ring().e() < spec.ring().r() + 2;

    rep.degree_multiplicity = sp.exact ? 0 : sp.multiplicity_near(static_cast<double>(sp.d));
    double lam = 0;
    bool skipped = false;
    for (const auto& en : sp.entries) {
        const bool is_d = sp.exact ? en.exact == static_cast<i64>(sp.d)
                                   : std::abs(en.value - static_cast<double>(sp.d)) <= kOracleTolerance;
        if (is_d && sp.exact) rep.degree_multiplicity += en.multiplicity;
        u64 mult = en.multiplicity;
        if (is_d && !skipped) {
            skipped = true;
            --mult;
        }
        if (mult > 0) lam = std::max(lam, std::abs(en.value));
    }
    rep.chung_lambda = lam;
    const double d = static_cast<double>(spec.d());
    if (lam < d - kOracleTolerance && lam > 0 && spec.n() > 2)
        rep.chung_bound = std::log(static_cast<double>(spec.n() - 1)) / std::log(d / lam);
    return rep;
}

inline ClaimReport check_connectivity(const GraphSpec& spec, const Spectrum& sp) {
    const auto c = connectivity(spec, sp);
    ClaimReport rep;
    rep.claim_id = "connectivity";
    rep.observed_value = c.diameter ? static_cast<i64>(*c.diameter) : i64{-1};
    rep.bound_value = c.chung_bound ? *c.chung_bound : std::numeric_limits<double>::infinity();
    if (c.diameter && c.chung_bound && static_cast<double>(*c.diameter) > *c.chung_bound + 1e-9) {
        rep.holds = false;
        rep.witness = "diameter=" + std::to_string(*c.diameter) + " exceeds Chung bound";
    } else if (c.corollary_applies && c.components != 1) {
        rep.holds = false;
        rep.witness = "components=" + std::to_string(c.components) + " although e < r/2 + 1";
    } else if (c.degree_multiplicity != c.components) {
        rep.holds = false;
        rep.witness = "multiplicity of d (" + std::to_string(c.degree_multiplicity) + ") != components";
    }
    rep.details.emplace_back("components", static_cast<i64>(c.components));
    rep.details.emplace_back("corollary_applies", i64{c.corollary_applies ? 1 : 0});
    rep.details.emplace_back("chung_lambda", c.chung_lambda);
    return rep;
}

// ---- energy ------------------------------------------------------------------

struct EnergyReport {
    ClaimValue energy = i64{0};
    bool hyperenergetic = false;
    bool integral = false;
};

inline EnergyReport energy_report(const Spectrum& sp) {
    EnergyReport rep;
    if (sp.exact) {
        i64 total = 0;
        for (const auto& en : sp.entries) total += (en.exact < 0 ? -en.exact : en.exact) * static_cast<i64>(en.multiplicity);
        rep.energy = total;
        rep.hyperenergetic = total > 2 * (static_cast<i64>(sp.n) - 1);
        rep.integral = true;
    } else {
        double total = 0;
        rep.integral = true;
        for (const auto& en : sp.entries) {
            total += std::abs(en.value) * static_cast<double>(en.multiplicity);
            if (std::abs(en.value - std::round(en.value)) > kOracleTolerance) rep.integral = false;
        }
        rep.energy = total;
        rep.hyperenergetic = total > 2.0 * (static_cast<double>(sp.n) - 1.0) + kOracleTolerance;
    }
    return rep;
}

/// Hyperenergetic and integral. Asserted for p^e = 4; informational
/// otherwise. The details carry the lower bound used in the classical
/// hyperenergy argument, which counts the principal eigenvalue as 2^r - 1
/// rather than the degree 2^(r+1) - 2, next to the observed values.
inline ClaimReport check_energy(const GraphSpec& spec, const Spectrum& sp) {
    const auto& ctx = spec.ring();
    const auto en = energy_report(sp);
    ClaimReport rep;
    rep.claim_id = "energy";
    rep.observed_value = en.energy;
    rep.bound_value = 2 * (static_cast<i64>(sp.n) - 1);
    rep.holds = en.hyperenergetic && en.integral;
    rep.informational = ctx.characteristic() != 4;
    if (!rep.holds) rep.witness = std::string(en.integral ? "" : "non-integral eigenvalue; ") +
                                  (en.hyperenergetic ? "" : "energy <= 2(n-1)");
    rep.details.emplace_back("integral", i64{en.integral ? 1 : 0});
    rep.details.emplace_back("hyperenergetic", i64{en.hyperenergetic ? 1 : 0});
    rep.details.emplace_back("principal_eigenvalue", static_cast<i64>(sp.d));
    if (ctx.characteristic() == 4) {
        const double r = static_cast<double>(ctx.r());
        const double two_r = std::pow(2.0, r);
        rep.details.emplace_back("proof_principal_eigenvalue", static_cast<i64>(ipow(2, ctx.r()) - 1));
        rep.details.emplace_back("multiplicity_minus_two", static_cast<i64>(sp.multiplicity_near(-2.0)));
        const double proof_bound = (std::pow(2.0, r / 2 + 1) - 1) * (two_r * two_r - two_r) + 2 * (two_r - 1) + (two_r - 1);
        rep.details.emplace_back("proof_lower_bound", proof_bound);
        rep.details.emplace_back("proof_lower_bound_below_energy", i64{proof_bound <= as_double(en.energy) ? 1 : 0});
    }
    return rep;
}

// ---- report assembly -------------------------------------------------------------

enum class Check { interval, wcu, bhk, ramanujan, girth, connectivity, energy, residue };

inline std::string check_name(Check c) {
    switch (c) {
        case Check::interval: return "interval";
        case Check::wcu: return "wcu";
        case Check::bhk: return "bhk";
        case Check::ramanujan: return "ramanujan";
        case Check::girth: return "girth";
        case Check::connectivity: return "connectivity";
        case Check::energy: return "energy";
        case Check::residue: return "residue";
    }
    return "?";
}

inline std::optional<Check> parse_check(std::string_view s) {
    for (Check c : {Check::interval, Check::wcu, Check::bhk, Check::ramanujan, Check::girth, Check::connectivity,
                    Check::energy, Check::residue})
        if (check_name(c) == s) return c;
    return std::nullopt;
}

/// Checks that make sense for this ring: bhk and residue need p^e = 4.
inline bool check_applicable(Check c, const RingContext& ctx) {
    if (c == Check::bhk || c == Check::residue) return ctx.characteristic() == 4;
    return true;
}

struct SpectrumSummary {
    u64 distinct = 0;
    double min = 0;
    double max = 0;
    std::optional<double> lambda;
};

inline SpectrumSummary summarize(const Spectrum& sp) {
    SpectrumSummary s;
    s.distinct = sp.entries.size();
    if (!sp.entries.empty()) {
        s.max = sp.entries.front().value;
        s.min = sp.entries.back().value;
    }
    s.lambda = lambda_g(sp);
    return s;
}

struct AnalysisReport {
    u64 p = 0, e = 0, r = 0, n = 0, d = 0;
    std::string gamma;
    std::vector<ClaimReport> claims;  ///< sorted by claim_id
    SpectrumSummary summary;
    bool spectrum_exact = false;

    /// Any asserted (non-informational) claim that failed.
    bool any_failed() const {
        return std::any_of(claims.begin(), claims.end(), [](const ClaimReport& c) { return !c.holds && !c.informational; });
    }
};

/// Runs the requested checks. Ramanujan is asserted for p^e = 4 and r >= 4;
/// the other instances report it as informational.
inline AnalysisReport analyze(const GraphSpec& spec, const Spectrum& sp, const std::vector<Check>& checks) {
    const auto& ctx = spec.ring();
    AnalysisReport out;
    out.p = ctx.p();
    out.e = ctx.e();
    out.r = ctx.r();
    out.n = spec.n();
    out.d = spec.d();
    out.gamma = spec.gamma_literal();
    out.spectrum_exact = sp.exact;
    out.summary = summarize(sp);
    for (Check c : checks) {
        switch (c) {
            case Check::interval: out.claims.push_back(check_interval(spec, sp)); break;
            case Check::wcu:
                for (auto& rep : check_wcu(ctx)) out.claims.push_back(std::move(rep));
                break;
            case Check::bhk: out.claims.push_back(check_bhk(ctx)); break;
            case Check::ramanujan: {
                auto rep = is_ramanujan(sp);
                rep.informational = !(ctx.characteristic() == 4 && ctx.r() >= 4);
                out.claims.push_back(std::move(rep));
                break;
            }
            case Check::girth: out.claims.push_back(check_girth(spec)); break;
            case Check::connectivity: out.claims.push_back(check_connectivity(spec, sp)); break;
            case Check::energy: out.claims.push_back(check_energy(spec, sp)); break;
            case Check::residue: out.claims.push_back(check_residue_partition(ctx, spec.gamma())); break;
        }
    }
    std::stable_sort(out.claims.begin(), out.claims.end(),
                     [](const ClaimReport& a, const ClaimReport& b) { return a.claim_id < b.claim_id; });
    return out;
}

}  // namespace grc

#endif  // GRCAYLEY_ANALYSIS_HPP
