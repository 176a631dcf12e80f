#pragma once

// JSON reports. Field names are stable; bump kReportSchema on any change.
//
// {
//   "schema_version": 1,
//   "job":   {family, q, m, p, n, form, name, method},
//   "group": {label, order, center_size, order_profile, order_statistics,
//             cache},
//   "certificate": {method, status, omega?, lower_bound, upper_bound_classes,
//                   witness_clique, checks, agreeing_methods},
//   "formula": {source, expected_lower, expected_upper, matched} | null,
//   "timing": {seconds}
// }
//
// "omega" is present only when status is "Exact".

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

#include "ncclique/job.hpp"
#include "ncclique/structure.hpp"
#include "ncclique/subgroups.hpp"

namespace ncc {

inline constexpr int kReportSchema = 1;

using json = nlohmann::ordered_json;

inline json job_json(const JobSpec& j) {
  json o;
  o["family"] = j.family;
  if (j.q) o["q"] = j.q;
  if (j.m) o["m"] = j.m;
  if (j.p) o["p"] = j.p;
  if (j.n) o["n"] = j.n;
  if (j.family == "extraspecial") o["form"] = j.form;
  if (!j.name.empty()) o["name"] = j.name;
  o["method"] = method_name(j.method);
  return o;
}

template <GroupRep R>
json group_json(const GroupTable<R>& G) {
  json o;
  o["label"] = G.meta().label;
  o["order"] = G.size();
  o["center_size"] = center(G).count();
  o["order_profile"] = order_profile(G);
  json stats = json::object();
  for (auto [k, v] : order_statistics(G)) stats[std::to_string(k)] = v;
  o["order_statistics"] = stats;
  return o;
}

inline json certificate_json(const OmegaCertificate& c) {
  json o;
  o["method"] = method_name(c.method);
  o["status"] = c.exact ? "Exact" : "LowerBoundOnly";
  if (c.exact) o["omega"] = c.omega;
  o["lower_bound"] = c.omega;
  o["upper_bound_classes"] = c.upper_bound_classes;
  o["witness_clique"] = c.witness_clique;
  o["checks"] = c.checks;
  json agree = json::array();
  for (auto m : c.agreeing) agree.push_back(method_name(m));
  o["agreeing_methods"] = agree;
  return o;
}

inline json formula_json(const OmegaCertificate& c) {
  if (!c.formula) return nullptr;
  json o;
  o["source"] = c.formula->source;
  o["expected_lower"] = c.formula->lower;
  o["expected_upper"] = c.formula->upper;
  o["matched"] = c.formula->matched;
  return o;
}

inline json omega_report(const JobSpec& job, const json& group, const OmegaCertificate& c, double seconds) {
  json r;
  r["schema_version"] = kReportSchema;
  r["job"] = job_json(job);
  r["group"] = group;
  r["certificate"] = certificate_json(c);
  r["formula"] = formula_json(c);
  r["timing"] = {{"seconds", seconds}};
  return r;
}

/// Sylow counts for every prime divisor, the centralizer-based AC flag and
/// the basic invariants.
template <GroupRep R>
json group_info_json(const GroupTable<R>& G) {
  json o = group_json(G);
  json syl = json::object();
  for (auto p : prime_divisors(G.size())) {
    const bool once = (G.size() / p) % p != 0;
    syl[std::to_string(p)] = {{"count", once ? sylow_count_cyclic(G, p) : sylow_count(G, p)},
                              {"method", once ? "cyclic" : "normalizer"}};
  }
  o["sylow"] = syl;
  o["abelian"] = center(G).count() == G.size();
  o["ac_group"] = center(G).count() != G.size() && is_ac_group(G);
  return o;
}

}  // namespace ncc
