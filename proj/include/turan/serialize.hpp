#pragma once

// JSON views of every report type. Keys keep insertion order so that a dump
// is byte-stable and can be compared by `certify --check`.

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "turan/bounds.hpp"
#include "turan/construct.hpp"
#include "turan/exact.hpp"
#include "turan/freeness.hpp"
#include "turan/hypergraph.hpp"
#include "turan/structure.hpp"

namespace turan {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "turan-batch/1";

inline Json json_header(const char* command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

inline Json to_json(const EdgeSelection& s) { return Json(s.indices()); }

inline Json to_json(const Hypergraph& h) {
  Json j;
  j["n"] = h.n();
  j["r"] = h.r();
  j["m"] = h.m();
  j["flavor"] = to_string(h.flavor());
  j["edges"] = h.edges();
  return j;
}

inline Json to_json(const Rational& x) {
  Json j;
  j["exact"] = to_string(x);
  j["value"] = to_double(x);
  return j;
}

template <typename T>
Json to_json(const Evaluated<T>& e) {
  if (e.value) {
    if constexpr (std::is_same_v<T, Rational>) {
      return to_json(*e.value);
    } else {
      return Json(*e.value);
    }
  }
  Json j;
  j["not_applicable"] = e.not_applicable;
  return j;
}

inline Json to_json(const FreenessVerdict& v) {
  Json j;
  j["free"] = v.free;
  j["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  j["max_deficiency_found"] = v.max_deficiency_found ? Json(*v.max_deficiency_found) : Json(nullptr);
  j["pad_impossible"] = v.pad_impossible;
  return j;
}

inline Json to_json(const ConstructionReport& rep, const std::string& edges_file) {
  Json j;
  j["n"] = rep.n;
  j["r"] = rep.params.r;
  j["k"] = rep.params.k;
  j["q"] = rep.params.q;
  j["c"] = rep.c;
  j["p"] = rep.p;
  j["p_clamped"] = rep.p_clamped;
  j["seed"] = rep.seed;
  j["policy"] = to_string(rep.policy);
  j["sampled"] = rep.sampled_edges;
  j["deleted"] = rep.deletions;
  j["retained"] = rep.result.m();
  j["edges_file"] = edges_file;
  return j;
}

inline Json to_json(const ExactResult& res) {
  Json j;
  j["n"] = res.n;
  j["r"] = res.params.r;
  j["k"] = res.params.k;
  j["q"] = res.params.q;
  j["family"] = to_string(res.family);
  j["mode"] = to_string(res.mode);
  j["value"] = res.value;
  if (res.family == Family::F) j["v"] = res.params.k - res.params.q - 1;
  j["explored_nodes"] = res.explored_nodes;
  j["shortcut"] = res.shortcut;
  j["witness"] = to_json(res.witness);
  return j;
}

inline Json to_json(const BoundReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["r"] = rep.params.r;
  j["k"] = rep.params.k;
  j["q"] = rep.params.q;
  j["lower_exponent"] = to_json(rep.lower_exponent);
  j["graph_upper"] = to_json(rep.graph_upper);
  j["hypergraph_upper"] = to_json(rep.hypergraph_upper);
  j["hypergraph_upper_exponent"] = to_json(rep.hypergraph_upper_exponent);
  j["cbc_upper"] = to_json(rep.cbc_upper);
  j["cbc_upper_exponent"] = to_json(rep.cbc_upper_exponent);
  j["competing_exponent"] = to_json(rep.competing_exponent);
  j["diff_upper"] = to_json(rep.diff_upper);
  return j;
}

inline Json to_json(const SubCheck& c) {
  Json j;
  j["name"] = c.name;
  j["engaged"] = c.engaged;
  j["holds"] = c.holds;
  j["witness"] = c.witness;
  return j;
}

inline Json to_json(const PeelCertificate& c) {
  Json j;
  j["original_avg_degree"] = to_string(c.original_avg_degree);
  j["threshold"] = to_string(c.threshold);
  j["removal_order"] = c.removal_order;
  j["remaining"] = c.remaining;
  j["final_subgraph"] = to_json(c.final_subgraph);
  j["final_min_degree"] = c.final_min_degree;
  return j;
}

inline Json to_json(const BfsCertificate& c) {
  Json j;
  j["root"] = c.root;
  j["k"] = c.k;
  j["q"] = c.q;
  j["h"] = c.h;
  j["h_star"] = c.h_star;
  j["delta"] = c.delta;
  j["levels"] = c.levels;
  j["tree_edges"] = c.tree_edges;
  j["additional_edges"] = c.additional_edges;
  Json lv = Json::array();
  for (auto [a, b] : c.additional_levels) lv.push_back(Json::array({a, b}));
  j["additional_levels"] = lv;
  j["additional_count"] = c.additional_count;
  j["claimA_lhs"] = c.claimA_lhs;
  j["claimA_rhs"] = c.claimA_rhs;
  Json checks = Json::array();
  for (const auto& s : c.checks) checks.push_back(to_json(s));
  j["checks"] = checks;
  j["all_hold"] = c.all_hold();
  return j;
}

inline Json to_json(const LinkCertificate& c) {
  Json j;
  j["s_star"] = c.s_star;
  j["link_degree"] = c.link_degree;
  j["link_graph"] = to_json(c.link_graph);
  j["inequality_lhs"] = to_json(c.inequality_lhs);
  j["inequality_holds"] = c.inequality_holds;
  j["link_params"] = {{"r", c.link_params.r}, {"k", c.link_params.k}, {"q", c.link_params.q}};
  j["input_free"] = c.input_free;
  j["link_free"] = c.link_free ? Json(*c.link_free) : Json(nullptr);
  j["transfer_holds"] = c.transfer_holds;
  return j;
}

inline Json to_json(const ForbiddenPart& p) {
  Json j;
  j["vertices"] = p.vertices;
  j["edges"] = to_json(p.edges);
  j["component_union"] = p.component_union;
  return j;
}

inline Json to_json(const DecompositionCertificate& c) {
  Json j;
  j["k"] = c.k;
  j["q"] = c.q;
  j["verdict"] = to_string(c.verdict);
  Json parts = Json::array();
  for (const auto& p : c.parts) parts.push_back(to_json(p));
  j["parts"] = parts;
  j["at_k"] = c.at_k ? to_json(*c.at_k) : Json(nullptr);
  j["remainder_edges"] = to_json(c.remainder_edges);
  j["remainder_vertices"] = c.remainder_vertices;
  j["edge_partition_check"] = c.edge_partition_check;
  j["parts_disjoint"] = c.parts_disjoint;
  j["remainder_free"] = c.remainder_free;
  j["z"] = c.z ? Json(*c.z) : Json(nullptr);
  j["ratio_check"] = c.ratio_check;
  return j;
}

inline Json to_json(const Lemma51Result& r) {
  Json j;
  j["holds"] = r.holds;
  j["forbidden_count"] = r.forbidden_count;
  j["maximal_count"] = r.maximal_count;
  j["violator"] = r.violator ? to_json(*r.violator) : Json(nullptr);
  return j;
}

}  // namespace turan
