#pragma once

#include <json.hpp>
#include <string>

#include "cliquepart/bounds.hpp"
#include "cliquepart/conic_family.hpp"
#include "cliquepart/curve_family.hpp"
#include "cliquepart/design.hpp"
#include "cliquepart/exact_search.hpp"
#include "cliquepart/inversive_plane.hpp"
#include "cliquepart/zarankiewicz.hpp"

namespace cliquepart {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "v1";

inline Json to_json(const CoverageReport& r) {
    Json samples = Json::array();
    for (const auto& s : r.violation_samples) samples.push_back(s);
    return Json{{"report", kReportVersion},
                {"total_rsets", r.total_rsets},
                {"covered_once", r.covered_once},
                {"uncovered", r.uncovered},
                {"multicovered", r.multicovered},
                {"is_partition", r.is_partition},
                {"is_packing", r.is_packing},
                {"violation_samples", samples}};
}

inline Json to_json(const AxiomReport& r) {
    Json ce;
    ce["axiom1"] = r.axiom1_counterexample ? Json(*r.axiom1_counterexample) : Json(nullptr);
    ce["axiom2"] = nullptr;
    ce["axiom3"] = r.axiom3_counterexample ? Json(*r.axiom3_counterexample) : Json(nullptr);
    return Json{{"report", kReportVersion},
                {"axiom1", r.axiom1},
                {"axiom2", r.axiom2},
                {"axiom3", r.axiom3},
                {"counterexample", ce},
                {"axiom2_witness", r.axiom2_witness ? Json(*r.axiom2_witness) : Json(nullptr)},
                {"sampled", r.sampled},
                {"seed", r.seed},
                {"axiom3_checks", r.axiom3_checks},
                {"coverage", to_json(r.coverage)}};
}

inline Json to_json(const CurveCensus& c) {
    return Json{{"report", kReportVersion},
                {"covered", c.coverage.covered_once},
                {"uncovered", c.coverage.uncovered},
                {"multicovered", c.coverage.multicovered},
                {"expected_covered", c.expected_covered},
                {"expected_uncovered", c.expected_uncovered},
                {"leading_order_uncovered", c.leading_order_uncovered},
                {"matches_closed_form", c.matches_closed_form}};
}

inline Json to_json(const ConicDesign& c) {
    return Json{{"report", kReportVersion},
                {"blocks", c.design.size()},
                {"covered", c.coverage.covered_once},
                {"uncovered", c.coverage.uncovered},
                {"multicovered", c.coverage.multicovered},
                {"expected_covered", c.expected_covered},
                {"matches_formula", c.matches_formula}};
}

inline Json to_json(const QuadraticSurd& s) {
    return Json{{"a", s.a().str()}, {"b", s.b().str()}, {"d", s.d().str()}, {"value", s.to_double()}};
}

inline Json to_json(const PhiResult& p) {
    return Json{{"report", kReportVersion},
                {"n", p.n},
                {"r", p.r},
                {"q", to_json(p.q)},
                {"q_is_integer", p.q_is_integer},
                {"phi", to_json(p.phi)},
                {"phi_ceiling", p.phi_ceiling.str()},
                {"certified", true}};
}

inline Json to_json(const EqualBlockZReport& r) {
    return Json{{"report", kReportVersion},
                {"m", r.m},
                {"n", r.n},
                {"r", r.r},
                {"k", r.k},
                {"km", r.km},
                {"edges", r.edges},
                {"k2r_free", r.k2r_free},
                {"convexity_upper_bound", r.upper_bound},
                {"meets", r.meets},
                {"exact", r.exact}};
}

inline Json to_json(const ZInstance& z) {
    Json rows = Json::array();
    for (std::uint32_t i = 0; i < z.witness.m(); ++i) rows.push_back(z.witness.row_string(i));
    return Json{{"report", kReportVersion},
                {"m", z.m},
                {"n", z.n},
                {"s", z.s},
                {"t", z.t},
                {"z", z.value},
                {"exact", z.exact},
                {"witness_rows", rows}};
}

inline Json to_json(const SearchResult& s) {
    return Json{{"report", kReportVersion},
                {"n", s.certificate.n()},
                {"r", s.certificate.r()},
                {"optimum", s.optimum},
                {"proven_optimal", s.proven_optimal},
                {"timed_out", s.timed_out},
                {"lower_bound", s.lower_bound},
                {"nodes_explored", s.nodes_explored},
                {"prune_stats",
                 {{"bound_prunes", s.prune_stats.bound_prunes},
                  {"candidates_tried", s.prune_stats.candidates_tried},
                  {"stopped_at_lower_bound", s.prune_stats.stopped_at_lower_bound}}}};
}

}  // namespace cliquepart
