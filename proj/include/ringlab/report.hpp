#pragma once

// Structured (JSON) and text rendering of rings, verdicts and witnesses.
//
// Every structured document carries "schema" and "version". Timing lives only
// under keys named "elapsed_ms"; strip_timing() removes them so two runs can
// be compared byte for byte.

#include <cstdio>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ringlab/poly.hpp"
#include "ringlab/properties.hpp"
#include "ringlab/radicals.hpp"
#include "ringlab/ring.hpp"

#ifndef RINGLAB_VERSION
#define RINGLAB_VERSION "0.0.0"
#endif

namespace ringlab {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = RINGLAB_VERSION;
inline constexpr const char* kReportSchema = "ringlab.report/1";

inline Json elements_json(const RingTable& r, const std::vector<Elem>& xs) {
    Json out = Json::array();
    for (Elem x : xs) out.push_back({{"index", x}, {"label", r.label(x)}});
    return out;
}

inline Json ideal_json(const RingTable& r, const Ideal& i) { return elements_json(r, i.members); }

inline Json ring_summary_json(const std::string& expr, const RingTable& r) {
    return {{"expression", expr}, {"size", r.size()}, {"digest", table_digest(r)}};
}

inline Json bounds_json(const Bounds& b) {
    switch (b.shape) {
        case Bounds::Shape::None: return nullptr;
        case Bounds::Shape::Univariate: return {{"shape", "univariate"}, {"degree", b.degree}};
        case Bounds::Shape::Bivariate: return {{"shape", "bivariate"}, {"dx", b.dx}, {"dy", b.dy}};
        case Bounds::Shape::Laurent: return {{"shape", "laurent"}, {"window", b.degree}};
    }
    return nullptr;
}

inline Json witness_json(const RingTable& r, const Witness& w) {
    return {{"property", property_name(w.property)},
            {"f", elements_json(r, w.f.coeffs)},
            {"g", elements_json(r, w.g.coeffs)},
            {"i", w.i},
            {"j", w.j},
            {"product", {{"index", w.product}, {"label", r.label(w.product)}}},
            {"violated", condition_name(w.violated)},
            {"exponent_offset", w.exponent_offset}};
}

inline Json bivariate_witness_json(const RingTable& r, const BivariateWitness& w) {
    auto poly = [&](const BivariatePoly& p) {
        Json rows = Json::array();
        for (std::size_t i = 0; i <= p.dy; ++i) rows.push_back(elements_json(r, p.y_coeff(i).coeffs));
        return Json{{"dx", p.dx}, {"dy", p.dy}, {"y_coefficients", rows}};
    };
    return {{"p", poly(w.p)},
            {"q", poly(w.q)},
            {"i", w.i},
            {"j", w.j},
            {"product", elements_json(r, w.product.coeffs)},
            {"coefficient", w.coefficient},
            {"value", {{"index", w.value}, {"label", r.label(w.value)}}}};
}

inline Json verdict_json(const RingTable& r, const PropertyVerdict& v) {
    Json j{{"property", property_name(v.property)}, {"kind", kind_name(v.kind)}, {"bounds", bounds_json(v.bounds)}};
    if (v.kind == PropertyVerdict::Kind::Exact) j["value"] = v.exact_value;
    j["witness"] = v.witness ? witness_json(r, *v.witness) : Json(nullptr);
    if (v.bivariate_witness) j["bivariate_witness"] = bivariate_witness_json(r, *v.bivariate_witness);
    j["search"] = {{"nodes", v.stats.nodes}, {"pairs", v.stats.pairs}, {"sampled", v.stats.sampled}};
    j["elapsed_ms"] = v.elapsed_ms;
    return j;
}

inline Json radical_json(const RingTable& r, const RadicalReport& rep) {
    Json j{{"nil", ideal_json(r, rep.nil)},
           {"nilradical", ideal_json(r, rep.nilradical)},
           {"prime_radical", ideal_json(r, rep.prime_radical())},
           {"oracles",
            {{"fixpoint_matches_nilpotency", rep.fixpoint_matches_nilpotency},
             {"fixpoint_matches_intersection",
              rep.fixpoint_matches_intersection ? Json(*rep.fixpoint_matches_intersection) : Json(nullptr)},
             {"nilpotency_matches_intersection",
              rep.nilpotency_matches_intersection ? Json(*rep.nilpotency_matches_intersection) : Json(nullptr)},
             {"agree", rep.oracles_agree()}}},
           {"chain_holds", rep.chain_holds()}};
    return j;
}

/// Recursively drops every "elapsed_ms" member.
inline Json strip_timing(Json j) {
    if (j.is_object()) {
        j.erase("elapsed_ms");
        for (auto& [k, v] : j.items()) v = strip_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j) v = strip_timing(v);
    }
    return j;
}

// ---------------------------------------------------------------------------
// Text

inline std::string labels_text(const RingTable& r, const std::vector<Elem>& xs) {
    std::string s = "{";
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + r.label(xs[k]);
    return s + "}";
}

inline std::string poly_text(const RingTable& r, const std::vector<Elem>& coeffs, long offset = 0) {
    std::string s;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k) s += " + ";
        s += r.label(coeffs[k]);
        const long e = static_cast<long>(k) - offset;
        if (e == 1) s += "*x";
        else if (e != 0) s += "*x^" + std::to_string(e);
    }
    return s;
}

inline std::string bounds_text(const Bounds& b) {
    switch (b.shape) {
        case Bounds::Shape::None: return "";
        case Bounds::Shape::Univariate: return "(" + std::to_string(b.degree) + ")";
        case Bounds::Shape::Bivariate: return "(" + std::to_string(b.dx) + "," + std::to_string(b.dy) + ")";
        case Bounds::Shape::Laurent: return "(W=" + std::to_string(b.degree) + ")";
    }
    return "";
}

inline std::string verdict_text(const RingTable& r, const PropertyVerdict& v) {
    std::string s = std::string(property_name(v.property)) + ": " + std::string(kind_name(v.kind));
    if (v.kind == PropertyVerdict::Kind::Exact) s += v.exact_value ? "(true)" : "(false)";
    else s += bounds_text(v.bounds);
    s += "\n";
    if (v.witness) {
        const Witness& w = *v.witness;
        s += "  f(x) = " + poly_text(r, w.f.coeffs, w.exponent_offset) + "\n";
        s += "  g(x) = " + poly_text(r, w.g.coeffs, w.exponent_offset) + "\n";
        s += "  a" + std::to_string(w.i) + "*b" + std::to_string(w.j) + " = " + r.label(w.product) + " (" +
             std::string(condition_name(w.violated)) + ")\n";
    }
    if (v.bivariate_witness) {
        const BivariateWitness& w = *v.bivariate_witness;
        auto rows = [&](const BivariatePoly& p) {
            std::string t;
            for (std::size_t i = 0; i <= p.dy; ++i)
                t += (i ? " | " : "") + poly_text(r, p.y_coeff(i).coeffs);
            return t;
        };
        s += "  p y-coefficients: " + rows(w.p) + "\n";
        s += "  q y-coefficients: " + rows(w.q) + "\n";
        s += "  f" + std::to_string(w.i) + "*g" + std::to_string(w.j) + " = " + poly_text(r, w.product.coeffs) +
             ", coefficient " + std::to_string(w.coefficient) + " = " + r.label(w.value) + "\n";
    }
    if (v.stats.nodes) s += "  search nodes: " + std::to_string(v.stats.nodes) + "\n";
    return s;
}

inline std::string radical_text(const RingTable& r, const RadicalReport& rep) {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::string s;
    s += "nil(R) = " + labels_text(r, rep.nil.members) + "\n";
    s += "N(R)   = " + labels_text(r, rep.nilradical.members) + "\n";
    s += "P(R)   = " + labels_text(r, rep.prime_radical().members) + "\n";
    s += std::string("fixpoint = ideal-nilpotency: ") + yn(rep.fixpoint_matches_nilpotency) + "\n";
    if (rep.fixpoint_matches_intersection)
        s += std::string("fixpoint = prime intersection: ") + yn(*rep.fixpoint_matches_intersection) + "\n";
    else
        s += "prime intersection: not computed (ring above cap)\n";
    s += std::string("oracles agree: ") + yn(rep.oracles_agree()) + "\n";
    s += std::string("P <= N <= nil: ") + yn(rep.chain_holds()) + "\n";
    return s;
}

inline std::string ms_text(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f ms", ms);
    return buf;
}

}  // namespace ringlab
