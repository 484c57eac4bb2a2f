#ifndef GRCAYLEY_REPORT_HPP
#define GRCAYLEY_REPORT_HPP

// JSON views of rings, spectra and claim reports. Key order is fixed
// (ordered_json) so identical inputs serialize to identical bytes.

#include <nlohmann/json.hpp>

#include "analysis.hpp"

namespace grc {

using Json = nlohmann::ordered_json;

/// Non-finite doubles become null.
inline Json to_json(const ClaimValue& v) {
    if (const auto* i = std::get_if<i64>(&v)) return *i;
    const double d = std::get<double>(v);
    if (!std::isfinite(d)) return nullptr;
    return d;
}

inline Json ring_json(const RingContext& ctx) {
    Json j;
    j["p"] = ctx.p();
    j["e"] = ctx.e();
    j["r"] = ctx.r();
    j["characteristic"] = ctx.characteristic();
    j["order"] = ctx.order();
    j["modulus"] = ctx.modulus().coeffs;
    j["xi"] = ctx.xi().coeffs();
    j["teichmuller_size"] = ctx.teichmuller().size();
    j["units"] = ctx.order() - ctx.order() / ctx.residue_order();
    j["trace_table"] = ctx.has_trace_table();
    j["trace_weights"] = ctx.trace_weights();
    return j;
}

inline Json claim_json(const ClaimReport& c) {
    Json j;
    j["claim_id"] = c.claim_id;
    j["holds"] = c.holds;
    j["bound_value"] = to_json(c.bound_value);
    j["observed_value"] = to_json(c.observed_value);
    if (c.witness) j["witness"] = *c.witness;
    j["informational"] = c.informational;
    Json details = Json::object();
    for (const auto& [k, v] : c.details) details[k] = to_json(v);
    j["details"] = std::move(details);
    return j;
}

inline Json report_json(const AnalysisReport& rep) {
    Json j;
    j["graph"] = {{"p", rep.p}, {"e", rep.e}, {"r", rep.r}, {"gamma", rep.gamma}, {"n", rep.n}, {"d", rep.d}};
    Json claims = Json::array();
    for (const auto& c : rep.claims) claims.push_back(claim_json(c));
    j["claims"] = std::move(claims);
    Json summary;
    summary["distinct"] = rep.summary.distinct;
    summary["min"] = rep.summary.min;
    summary["max"] = rep.summary.max;
    summary["lambda_G"] = rep.summary.lambda ? Json(*rep.summary.lambda) : Json(nullptr);
    summary["exact"] = rep.spectrum_exact;
    j["spectrum_summary"] = std::move(summary);
    j["all_hold"] = !rep.any_failed();
    return j;
}

inline Json spectrum_json(const GraphSpec& spec, const Spectrum& sp) {
    Json j;
    j["graph"] = {{"p", spec.ring().p()}, {"e", spec.ring().e()}, {"r", spec.ring().r()},
                  {"gamma", spec.gamma_literal()}, {"n", sp.n}, {"d", sp.d}};
    j["exact"] = sp.exact;
    Json entries = Json::array();
    for (const auto& en : sp.entries) {
        Json row;
        row["eigenvalue"] = sp.exact ? Json(en.exact) : Json(en.value);
        row["multiplicity"] = en.multiplicity;
        entries.push_back(std::move(row));
    }
    j["eigenvalues"] = std::move(entries);
    return j;
}

}  // namespace grc

#endif  // GRCAYLEY_REPORT_HPP
