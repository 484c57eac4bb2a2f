#ifndef GRCAYLEY_CLI_HPP
#define GRCAYLEY_CLI_HPP

// Front end shared by the grcayley executable and the tests. run() never
// throws: 0 = every asserted claim holds, 1 = a claim failed (the report is
// still written), 2 = usage or parameter error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "report.hpp"

namespace grc::cli {

enum class Command { ring_info, graph_export, spectrum, verify, family };
enum class Format { json, csv, edgelist };

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

/// Observed lambda(G) in family tables is computed only up to this n * d.
inline constexpr u64 kFamilyObserveLimit = u64{1} << 27;

struct RunConfig {
    Command command = Command::verify;
    u64 p = 2, e = 2, r = 2;
    std::optional<std::string> gamma;    ///< "a0,a1,..." in the power basis
    std::optional<std::string> modulus;  ///< "c0,c1,...,1"
    u64 seed = 0;
    std::optional<std::string> output;  ///< stdout when unset
    std::optional<Format> format;
    std::vector<std::string> checks{"all"};
    unsigned threads = 0;  ///< 0: GRCAYLEY_THREADS, then hardware

    // family
    std::string delta = "1/2";
    u64 r_min = 2, r_max = 8;
};

inline std::optional<Command> parse_command(std::string_view s) {
    if (s == "ring-info") return Command::ring_info;
    if (s == "graph-export") return Command::graph_export;
    if (s == "spectrum") return Command::spectrum;
    if (s == "verify") return Command::verify;
    if (s == "family") return Command::family;
    return std::nullopt;
}

inline std::optional<Format> parse_format(std::string_view s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "edgelist") return Format::edgelist;
    return std::nullopt;
}

inline unsigned effective_threads(const RunConfig& cfg) {
    if (cfg.threads != 0) return cfg.threads;
    if (const char* env = std::getenv("GRCAYLEY_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 1024) return static_cast<unsigned>(v);
    }
    return 0;
}

namespace detail {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Format pick_format(const RunConfig& cfg, Format fallback, std::initializer_list<Format> allowed) {
    const Format f = cfg.format.value_or(fallback);
    for (Format a : allowed)
        if (a == f) return f;
    throw UsageError("format not supported by this command");
}

inline RingPtr ring_from(const RunConfig& cfg) {
    const RingParams params{cfg.p, cfg.e, cfg.r, cfg.seed};
    params.validate();  // bounds p^(er) before anything is allocated
    std::optional<ModulusPoly> f;
    if (cfg.modulus) f = parse_modulus(*cfg.modulus);
    return make_ring(params, f);
}

inline GraphSpec graph_from(const RunConfig& cfg) {
    auto ctx = ring_from(cfg);
    std::optional<RingElement> gamma;
    if (cfg.gamma) {
        auto coeffs = parse_coeff_list(*cfg.gamma);
        if (coeffs.size() > ctx->r()) throw ParameterError("gamma has more than r coefficients");
        coeffs.resize(ctx->r(), 0);
        gamma = ctx->element(std::move(coeffs));
    }
    return build_graph(ctx, gamma);
}

inline std::vector<Check> checks_from(const RunConfig& cfg, const RingContext& ctx) {
    const std::vector<Check> every{Check::interval, Check::wcu,          Check::bhk,    Check::ramanujan,
                                   Check::girth,    Check::connectivity, Check::energy, Check::residue};
    std::vector<Check> out;
    auto add = [&](Check c) {
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    };
    for (const auto& name : cfg.checks) {
        if (name == "all") {
            for (Check c : every)
                if (check_applicable(c, ctx)) add(c);
            continue;
        }
        const auto c = parse_check(name);
        if (!c) throw UsageError("unknown check '" + name + "'");
        if (!check_applicable(*c, ctx)) throw UsageError("check '" + name + "' requires p^e = 4");
        add(*c);
    }
    if (out.empty()) throw UsageError("no checks requested");
    return out;
}

inline std::string fmt_g12(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg", v);
    return buf;
}

}  // namespace detail

// ---- family ------------------------------------------------------------------

struct FamilyRow {
    u64 p = 0, r = 0;
    FamilyParams params;
    std::optional<double> lambda_observed;
    bool within_bound = true;
};

/// One row per r in [r_min, r_max] with delta r an integer >= 2. Observed
/// lambda(G) is filled in when the ring fits and n * d <= kFamilyObserveLimit.
inline std::vector<FamilyRow> family_table(u64 p, Rational delta, u64 r_min, u64 r_max, unsigned threads = 0) {
    if (delta.num == 0 || 2 * delta.num > delta.den) throw ParameterError("delta must lie in (0, 1/2]");
    std::vector<FamilyRow> rows;
    for (u64 r = std::max<u64>(r_min, 2); r <= r_max; ++r) {
        if ((delta.num * r) % delta.den != 0 || delta.num * r / delta.den < 2) continue;
        FamilyRow row;
        row.p = p;
        row.r = r;
        row.params = family_params(p, delta, r);
        const auto n = row.params.n;
        if (n && *n <= kMaxRingOrder && *n * row.params.d <= kFamilyObserveLimit) {
            const auto spec = build_graph(make_ring({p, row.params.e, r, {}}));
            const auto sp = full_spectrum(spec, threads);
            row.lambda_observed = lambda_g(sp).value_or(0.0);
            row.within_bound = *row.lambda_observed <= static_cast<double>(row.params.lambda_bound) + kOracleTolerance;
        }
        rows.push_back(row);
    }
    return rows;
}

inline void write_family_csv(const std::vector<FamilyRow>& rows, std::ostream& os) {
    os << "p,r,e,n,d,lambda_bound,lambda_observed\n";
    for (const auto& row : rows) {
        os << row.p << ',' << row.r << ',' << row.params.e << ',';
        if (row.params.n) os << *row.params.n;
        os << ',' << row.params.d << ',' << detail::fmt_g12(row.params.lambda_bound) << ',';
        if (row.lambda_observed) os << detail::fmt_g12(*row.lambda_observed);
        os << '\n';
    }
}

inline Json family_json(const std::vector<FamilyRow>& rows, Rational delta) {
    Json j;
    j["delta"] = std::to_string(delta.num) + "/" + std::to_string(delta.den);
    Json arr = Json::array();
    for (const auto& row : rows) {
        Json o;
        o["p"] = row.p;
        o["r"] = row.r;
        o["e"] = row.params.e;
        o["n"] = row.params.n ? Json(*row.params.n) : Json(nullptr);
        o["n_exponent"] = row.params.n_exponent;
        o["d"] = row.params.d;
        o["lambda_bound"] = static_cast<double>(row.params.lambda_bound);
        o["lambda_observed"] = row.lambda_observed ? Json(*row.lambda_observed) : Json(nullptr);
        o["within_bound"] = row.within_bound;
        arr.push_back(std::move(o));
    }
    j["rows"] = std::move(arr);
    return j;
}

// ---- run -----------------------------------------------------------------------

namespace detail {

inline int dispatch(const RunConfig& cfg, std::ostream& out) {
    const unsigned threads = effective_threads(cfg);
    switch (cfg.command) {
        case Command::ring_info: {
            pick_format(cfg, Format::json, {Format::json});
            const auto ctx = ring_from(cfg);
            out << ring_json(*ctx).dump(2) << '\n';
            return kExitOk;
        }
        case Command::graph_export: {
            pick_format(cfg, Format::edgelist, {Format::edgelist});
            export_edges(graph_from(cfg), out);
            return kExitOk;
        }
        case Command::spectrum: {
            const Format f = pick_format(cfg, Format::csv, {Format::csv, Format::json});
            const auto spec = graph_from(cfg);
            const auto sp = full_spectrum(spec, threads);
            if (f == Format::csv)
                write_spectrum_csv(sp, out);
            else
                out << spectrum_json(spec, sp).dump(2) << '\n';
            return kExitOk;
        }
        case Command::verify: {
            pick_format(cfg, Format::json, {Format::json});
            const auto spec = graph_from(cfg);
            const auto checks = checks_from(cfg, spec.ring());
            const auto sp = full_spectrum(spec, threads);
            const auto rep = analyze(spec, sp, checks);
            out << report_json(rep).dump(2) << '\n';
            return rep.any_failed() ? kExitClaimFailed : kExitOk;
        }
        case Command::family: {
            const Format f = pick_format(cfg, Format::csv, {Format::csv, Format::json});
            if (cfg.r_min > cfg.r_max) throw UsageError("empty r range");
            const Rational delta = parse_rational(cfg.delta);
            const auto rows = family_table(cfg.p, delta, cfg.r_min, cfg.r_max, threads);
            if (rows.empty()) throw UsageError("no r in the range makes delta * r an integer >= 2");
            if (f == Format::csv)
                write_family_csv(rows, out);
            else
                out << family_json(rows, delta).dump(2) << '\n';
            const bool ok = std::all_of(rows.begin(), rows.end(), [](const FamilyRow& r) { return r.within_bound; });
            return ok ? kExitOk : kExitClaimFailed;
        }
    }
    return kExitUsage;
}

}  // namespace detail

/// Output goes to cfg.output when set (written only on success of the
/// command), otherwise to out. Diagnostics go to err.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        std::ostringstream buffer;
        std::ostream& sink = cfg.output ? static_cast<std::ostream&>(buffer) : out;
        const int code = detail::dispatch(cfg, sink);
        if (cfg.output) {
            std::ofstream file(*cfg.output, std::ios::binary | std::ios::trunc);
            if (!file) {
                err << "error: cannot open " << *cfg.output << " for writing\n";
                return kExitUsage;
            }
            file << buffer.str();
            if (!file.flush()) {
                err << "error: write to " << *cfg.output << " failed\n";
                return kExitUsage;
            }
        } else if (!out.flush()) {
            err << "error: output stream failed\n";
            return kExitUsage;
        }
        if (code == kExitClaimFailed) err << "one or more claims failed\n";
        return code;
    } catch (const IntegrityError& ex) {
        err << "internal consistency failure: " << ex.what() << '\n';
        return kExitClaimFailed;
    } catch (const std::invalid_argument& ex) {  // parameter, modulus, usage errors
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::ios_base::failure& ex) {
        err << "error: output failed: " << ex.what() << '\n';
        return kExitUsage;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory; choose a smaller ring\n";
        return kExitUsage;
    }
}

}  // namespace grc::cli

#endif  // GRCAYLEY_CLI_HPP
