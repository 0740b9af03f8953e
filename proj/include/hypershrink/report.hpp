#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "orientation.hpp"
#include "shrink.hpp"

namespace hypershrink {

using ordered_json = nlohmann::ordered_json;

inline ordered_json tree_json(const std::vector<TreeEdge>& tree) {
  ordered_json out = ordered_json::array();
  for (const auto& e : tree) out.push_back({e.u, e.v});
  return out;
}

inline ordered_json verification_json(const VerificationReport& r) {
  ordered_json out;
  out["ok"] = r.ok();
  out["spanning_tree"] = r.spanning_tree;
  out["bijective"] = r.bijective;
  out["containment_failures"] = r.containment_failures;
  if (r.heads_checked) out["head_failures"] = r.head_failures;
  out["bound_failures"] = r.bound_failures;
  out["half_bound_failures"] = r.half_bound_failures;
  if (r.rank3_applicable) out["rank3_failures"] = r.rank3_failures;
  return out;
}

/// {"tree", "assignment", "degrees": {"hyper", "tree"}, "bound"} plus the k
/// used, the orientation heads and the verification outcome.
inline ordered_json shrinking_json(const Shrinking& s, const VerificationReport& r) {
  ordered_json out;
  out["tree"] = tree_json(s.tree);
  out["assignment"] = s.assignment;
  out["degrees"] = {{"hyper", r.hyper_degree}, {"tree", r.tree_degree}};
  out["bound"] = r.bound;
  out["k"] = r.k;
  out["heads"] = s.heads;
  out["verification"] = verification_json(r);
  return out;
}

inline ordered_json orientation_json(const DirectedHypergraph& d, const DemandFunction& f) {
  ordered_json out;
  out["n"] = d.base.n;
  out["edges"] = d.base.edges;
  out["heads"] = d.heads;
  out["demands"] = f.values;
  out["indegree"] = indegrees(d);
  return out;
}

inline ordered_json violator_json(const HallViolator& v) {
  ordered_json out;
  out["violator"] = v.vertices;
  out["demand"] = v.demand;
  out["incident"] = v.incident;
  return out;
}

/// Human-readable summary lines of a verification report.
inline std::vector<std::string> verification_summary(const VerificationReport& r) {
  auto line = [](const char* name, bool pass, std::size_t failures = 0) {
    std::string s = std::string(pass ? "PASS " : "FAIL ") + name;
    if (!pass && failures) s += " (" + std::to_string(failures) + " failing)";
    return s;
  };
  std::vector<std::string> out;
  out.push_back(line("spanning tree", r.spanning_tree));
  out.push_back(line("bijective assignment", r.bijective));
  out.push_back(line("pairs inside hyperedges", r.containment_failures.empty(),
                     r.containment_failures.size()));
  if (r.heads_checked)
    out.push_back(line("head is an endpoint", r.head_failures.empty(), r.head_failures.size()));
  out.push_back(line(("d_T(v) >= max{1, floor(d_H(v)/" + std::to_string(r.k) + ")}").c_str(),
                     r.bound_failures.empty(), r.bound_failures.size()));
  out.push_back(line(("d_T(v) >= d_H(v)/" + std::to_string(2 * r.k)).c_str(),
                     r.half_bound_failures.empty(), r.half_bound_failures.size()));
  if (r.rank3_applicable)
    out.push_back(line("d_T(v) >= d_H(v)/100", r.rank3_failures.empty(),
                       r.rank3_failures.size()));
  return out;
}

}  // namespace hypershrink
