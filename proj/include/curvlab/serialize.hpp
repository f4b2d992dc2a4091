#pragma once

#include "curvlab/curvature.hpp"
#include "curvlab/deadend.hpp"
#include "curvlab/heisenberg.hpp"
#include "curvlab/transport.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace curvlab {

using Json = nlohmann::ordered_json;

/// Writes `name` as "p/q" and `name_float` as its double approximation.
inline void put_rational(Json& j, const std::string& name, const Rational& q) {
    j[name] = to_string(q);
    j[name + "_float"] = to_double(q);
}

/// CSV quoting: fields containing a comma, quote or newline are quoted.
inline std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

template <GroupOracle G>
Json to_json(const G& group, const CurvatureReport<G>& report) {
    Json j;
    j["group"] = group.id();
    j["element"] = group.format(report.element);
    j["radius"] = report.radius;
    j["mode"] = to_string(report.mode);
    j["base_length"] = report.base_length;
    put_rational(j, "comparison_distance", report.comparison_distance);
    put_rational(j, "kappa", report.kappa);
    j["sign"] = sign(report.kappa);
    Json rows = Json::array();
    for (const auto& term : report.breakdown)
        rows.push_back(Json{{"conjugator", group.format(term.conjugator)}, {"length", term.length}});
    j["breakdown"] = std::move(rows);
    return j;
}

inline constexpr const char* kCurvatureCsvHeader = "index,conjugator,conjugator_length,conjugate_length";

/// One row per conjugator w: its position, printed form, |w| and |w^-1 g w|.
template <GroupOracle G>
void write_csv(std::ostream& out, const Metric<G>& metric, const CurvatureReport<G>& report) {
    out << kCurvatureCsvHeader << '\n';
    std::size_t i = 0;
    for (const auto& term : report.breakdown) {
        out << i++ << ',' << csv_field(metric.group().format(term.conjugator)) << ','
            << metric.length(term.conjugator) << ',' << term.length << '\n';
    }
}

template <GroupOracle G>
Json to_json(const G& group, const DeadEndReport<G>& report) {
    Json j;
    j["group"] = group.id();
    j["element"] = group.format(report.element);
    j["length"] = report.length;
    j["is_dead_end"] = report.is_dead_end;
    if (report.depth)
        j["depth"] = *report.depth;
    else
        j["depth"] = nullptr;
    j["depth_exceeded"] = !report.depth.has_value();
    if (report.descent_depth)
        j["descent_depth"] = *report.descent_depth;
    else
        j["descent_depth"] = nullptr;
    j["strict_depth"] = report.strict_depth;
    j["witness"] = format_word(group, report.witness);
    return j;
}

template <GroupOracle G>
Json to_json(const G& group, const MeasureSpec<G>& spec, const TransportResult<G>& result, int distance) {
    Json j;
    j["group"] = group.id();
    j["x"] = group.format(spec.x);
    j["y"] = group.format(spec.y);
    j["mode"] = to_string(spec.support);
    j["radius"] = spec.radius;
    j["distance"] = distance;
    Json support = Json::array();
    for (const auto& u : result.support) support.push_back(group.format(u));
    j["support"] = std::move(support);
    Json matrix = Json::array();
    for (std::size_t i = 0; i < result.cost.size(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < result.cost.size(); ++c) row.push_back(result.cost(i, c));
        matrix.push_back(std::move(row));
    }
    j["cost"] = std::move(matrix);
    j["optimum"] = result.optimum;
    put_rational(j, "t1", result.t1);
    if (distance > 0) put_rational(j, "kappa_star", Rational(1) - result.t1 / distance);
    j["identity_cost"] = result.identity_cost;
    j["identity_optimal"] = result.identity_optimal;
    j["optimal_permutations"] = result.optimal_permutations;
    j["truncated"] = result.truncated;
    return j;
}

template <GroupOracle G>
Json to_json(const G& group, const ProbeReport<G>& report) {
    Json j;
    j["group"] = group.id();
    j["radius"] = report.radius;
    j["samples"] = report.entries.size();
    j["identity_always_optimal_sphere"] = report.identity_always_optimal_sphere;
    j["identity_always_optimal_ball"] = report.identity_always_optimal_ball;
    j["sphere_preserving_always"] = report.sphere_preserving_always;
    j["cartesian_always"] = report.cartesian_always;
    if (report.sphere_witness)
        j["sphere_witness"] = group.format(*report.sphere_witness);
    else
        j["sphere_witness"] = nullptr;
    Json rows = Json::array();
    for (const auto& e : report.entries) {
        rows.push_back(Json{{"element", group.format(e.element)},
                            {"sphere_identity_optimal", e.sphere_identity_optimal},
                            {"ball_identity_optimal", e.ball_identity_optimal},
                            {"sphere_preserving", e.sphere_preserving},
                            {"cartesian", e.cartesian},
                            {"sphere_optima", e.sphere_optima},
                            {"ball_optima", e.ball_optima},
                            {"truncated", e.truncated}});
    }
    j["entries"] = std::move(rows);
    return j;
}

/// Summary of a density run; per-row data goes to CSV.
Json to_json(const DensityReport& report);

/// Columns: A,B,C,s,case_t1..case_tr,predicted,kappa.
void write_csv(std::ostream& out, const DensityReport& report);

}  // namespace curvlab
