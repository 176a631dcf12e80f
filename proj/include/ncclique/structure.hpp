#pragma once

// Structural clique certificates. The common device: a family of abelian
// subsets covering G \ Z(G) bounds every clique by the family size (a clique
// meets an abelian set at most once), and pairwise non-commuting witnesses,
// one per set, attain the bound.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ncclique/clique.hpp"
#include "ncclique/closed_forms.hpp"
#include "ncclique/group.hpp"
#include "ncclique/ncgraph.hpp"
#include "ncclique/subgroups.hpp"

namespace ncc {

enum class Method { Auto, ClosedForm, ACCount, CoverCertificate, Lemma20, BranchBound };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::Auto: return "Auto";
    case Method::ClosedForm: return "ClosedForm";
    case Method::ACCount: return "ACCount";
    case Method::CoverCertificate: return "CoverCertificate";
    case Method::Lemma20: return "Lemma20";
    case Method::BranchBound: return "BranchBound";
  }
  return "?";
}

/// CLI spelling: auto, formula, ac, cover, lemma20, solver.
inline Method parse_method(const std::string& s) {
  static const std::map<std::string, Method> names{{"auto", Method::Auto},         {"formula", Method::ClosedForm},
                                                   {"ac", Method::ACCount},         {"cover", Method::CoverCertificate},
                                                   {"lemma20", Method::Lemma20},    {"solver", Method::BranchBound}};
  auto it = names.find(s);
  if (it == names.end()) throw std::invalid_argument("unknown method '" + s + "'");
  return it->second;
}

/// Two applicable methods disagreed. Always a bug, never an input problem.
struct InconsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

struct AbelianCoverClass {
  Subset members;
  std::optional<std::uint32_t> witness;  ///< C_G(witness) == members
};

struct FormulaCheck {
  std::string source;
  std::uint64_t lower = 0, upper = 0;
  bool matched = false;
};

struct OmegaCertificate {
  std::size_t omega = 0;
  Method method = Method::Auto;
  std::vector<std::uint32_t> witness_clique;
  std::size_t upper_bound_classes = 0;
  std::vector<std::string> checks;
  bool exact = true;  ///< false only for a solver run cut short by its budget
  std::vector<Method> agreeing;  ///< every method that produced the same value
  std::optional<FormulaCheck> formula;
};

struct OmegaOptions {
  Method method = Method::Auto;
  double time_limit_seconds = 600;
  std::uint64_t node_limit = 100'000'000;
  /// auto also runs the solver as a cross-check when the collapsed graph is
  /// at most this large
  std::size_t solver_vertex_limit = 400;
  bool allow_big_memory = false;
  /// nullopt: full bicentralizer scan when |G| <= kFullScanOrder
  std::optional<bool> full_scan;
};

inline constexpr std::size_t kFullScanOrder = 6000;

namespace detail {

template <GroupRep R>
std::vector<std::uint32_t> noncentral_cyclic_reps(const GroupTable<R>& G) {
  const auto rep = cyclic_representatives(G);
  const Subset& z = center(G);
  std::vector<std::uint32_t> out;
  for (std::uint32_t g = 1; g < G.size(); ++g)
    if (rep[g] == g && !z.test(g)) out.push_back(g);
  return out;
}

/// A subgroup is abelian iff a generating set commutes pairwise.
template <GroupRep R>
bool abelian_subgroup(const GroupTable<R>& G, const Subset& H) {
  const auto gens = generating_set(G, H);
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!G.commute(gens[a], gens[b])) return false;
  return true;
}

template <GroupRep R>
bool pairwise_noncommuting(const GroupTable<R>& G, const std::vector<std::uint32_t>& xs) {
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = a + 1; b < xs.size(); ++b)
      if (G.commute(xs[a], xs[b])) return false;
  return true;
}

inline std::string join_counts(const std::map<std::size_t, std::size_t>& m) {
  std::string s;
  for (auto [k, v] : m) s += (s.empty() ? "" : ", ") + std::to_string(v) + " of order " + std::to_string(k);
  return s;
}

}  // namespace detail

template <GroupRep R>
bool is_ac_group(const GroupTable<R>& G) {
  for (auto r : detail::noncentral_cyclic_reps(G))
    if (!detail::abelian_subgroup(G, centralizer(G, r))) return false;
  return true;
}

struct DistinctCentralizer {
  Subset members;
  std::uint32_t element;  ///< smallest index defining it
  bool abelian;
};

/// Distinct C_G(g) over non-central g, in order of first appearance.
template <GroupRep R>
std::vector<DistinctCentralizer> distinct_centralizers(const GroupTable<R>& G) {
  const auto reps = detail::noncentral_cyclic_reps(G);
  precompute_centralizers(G, reps);
  std::vector<DistinctCentralizer> out;
  std::unordered_map<Subset, std::size_t, BitsetHash> seen;
  for (auto r : reps) {
    const Subset& c = centralizer(G, r);
    if (seen.contains(c)) continue;
    seen.emplace(c, out.size());
    out.push_back({c, r, detail::abelian_subgroup(G, c)});
  }
  return out;
}

/// Number of distinct centralizers keyed by their order.
inline std::map<std::size_t, std::size_t> centralizer_order_counts(const std::vector<DistinctCentralizer>& cs,
                                                                   bool abelian_only) {
  std::map<std::size_t, std::size_t> m;
  for (const auto& c : cs)
    if (c.abelian || !abelian_only) ++m[c.members.count()];
  return m;
}

template <GroupRep R>
OmegaCertificate ac_omega(const GroupTable<R>& G) {
  const auto cs = distinct_centralizers(G);
  OmegaCertificate cert;
  cert.method = Method::ACCount;
  for (const auto& c : cs) {
    if (!c.abelian)
      throw std::domain_error("not an AC-group: C(" + std::to_string(c.element) + ") of order " +
                              std::to_string(c.members.count()) + " is non-abelian");
    cert.witness_clique.push_back(c.element);
  }
  if (!detail::pairwise_noncommuting(G, cert.witness_clique))
    throw std::logic_error("centralizer representatives commute");
  cert.omega = cert.upper_bound_classes = cs.size();
  cert.checks.push_back("AC-group: all " + std::to_string(cs.size()) + " distinct centralizers abelian (" +
                        detail::join_counts(centralizer_order_counts(cs, true)) + ")");
  cert.checks.push_back("centralizer representatives pairwise non-commuting");
  return cert;
}

/// Abelian classes covering G \ Z(G). `complete` means the list is exactly
/// the maximal bicentralizers; the lazy scan only guarantees a cover.
struct CoverClasses {
  std::vector<AbelianCoverClass> classes;
  /// class ids containing each element; empty for central elements
  std::vector<std::vector<std::uint32_t>> membership;
  bool complete = false;

  [[nodiscard]] std::size_t size() const noexcept { return classes.size(); }
  [[nodiscard]] std::size_t witnessless() const {
    return static_cast<std::size_t>(
        std::count_if(classes.begin(), classes.end(), [](const auto& c) { return !c.witness; }));
  }
  [[nodiscard]] std::map<std::size_t, std::size_t> order_counts() const {
    std::map<std::size_t, std::size_t> m;
    for (const auto& c : classes) ++m[c.members.count()];
    return m;
  }
};

template <GroupRep R>
CoverClasses maximal_bicentralizer_classes(const GroupTable<R>& G, std::optional<bool> full_scan = std::nullopt) {
  const Subset& z = center(G);
  if (z.count() == G.size()) throw std::domain_error("abelian group has no non-central elements");
  const bool full = full_scan.value_or(G.size() <= kFullScanOrder);
  const auto reps = detail::noncentral_cyclic_reps(G);

  std::vector<Subset> found;
  std::unordered_set<Subset, BitsetHash> seen;
  Subset covered = z;
  std::vector<std::uint32_t> deferred;
  auto add = [&](Subset s) {
    if (seen.insert(s).second) {
      covered |= s;
      found.push_back(std::move(s));
    }
  };

  if (full) precompute_centralizers(G, reps);
  for (auto r : reps) {
    if (!full && covered.test(r)) continue;
    const Subset& c = centralizer(G, r);
    // an abelian centralizer is its own bicentralizer and is always maximal
    if (detail::abelian_subgroup(G, c))
      add(c);
    else
      deferred.push_back(r);
  }
  for (auto r : deferred)
    if (full || !covered.test(r)) add(bicentralizer(G, r));

  // keep maximal sets: test each against larger sets sharing its first
  // non-central member
  std::vector<std::size_t> idx(found.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return found[a].count() > found[b].count(); });
  CoverClasses out;
  out.complete = full;
  out.membership.assign(G.size(), {});
  for (auto i : idx) {
    Subset nc = found[i] - z;
    const auto first = nc.find_first();
    bool dominated = false;
    for (auto k : out.membership[first])
      if (found[i].is_subset_of(out.classes[k].members)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    const auto id = static_cast<std::uint32_t>(out.classes.size());
    nc.for_each([&](std::size_t g) { out.membership[g].push_back(id); });
    out.classes.push_back({std::move(found[i]), std::nullopt});
  }
  // canonical order: by smallest non-central member
  std::vector<std::size_t> order(out.classes.size());
  std::iota(order.begin(), order.end(), 0);
  auto first_nc = [&](std::size_t k) { return (out.classes[k].members - z).find_first(); };
  std::vector<std::size_t> keys(order.size());
  for (auto k : order) keys[k] = first_nc(k);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
  std::vector<AbelianCoverClass> sorted;
  std::vector<std::uint32_t> remap(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    remap[order[k]] = static_cast<std::uint32_t>(k);
    sorted.push_back(std::move(out.classes[order[k]]));
  }
  out.classes = std::move(sorted);
  for (auto& ids : out.membership) {
    for (auto& id : ids) id = remap[id];
    std::sort(ids.begin(), ids.end());
  }

  for (auto& cls : out.classes) {
    (cls.members - z).for_each([&](std::size_t g) {
      if (cls.witness) return;
      if (out.membership[g].size() != 1) return;  // C(g) would meet two classes
      if (centralizer(G, static_cast<std::uint32_t>(g)) == cls.members) cls.witness = static_cast<std::uint32_t>(g);
    });
  }
  return out;
}

template <GroupRep R>
std::size_t class_membership_count(const GroupTable<R>& G, const CoverClasses& cc, std::uint32_t g) {
  if (g >= G.size()) throw std::out_of_range("element index out of range");
  if (is_central(G, g)) throw std::domain_error("central element belongs to every class");
  return cc.membership[g].size();
}

/// Runtime soundness checks shared by every cover-based certificate.
template <GroupRep R>
void verify_cover(const GroupTable<R>& G, const CoverClasses& cc, std::vector<std::string>& log) {
  const Subset& z = center(G);
  Subset u = z;
  for (const auto& c : cc.classes) {
    if (!detail::abelian_subgroup(G, c.members) || !is_subgroup(G, c.members))
      throw std::logic_error("cover class is not an abelian subgroup");
    if (!z.is_subset_of(c.members)) throw std::logic_error("cover class misses the center");
    u |= c.members;
  }
  if (u.count() != G.size()) throw std::logic_error("cover classes miss a non-central element");
  log.push_back(std::to_string(cc.size()) + " abelian classes cover G \\ Z(G)");
}

struct CoverOutcome {
  std::optional<OmegaCertificate> certificate;
  std::string gap;  ///< why no certificate, when certificate is empty
  CoverClasses classes;
};

template <GroupRep R>
CoverOutcome cover_certificate_omega(const GroupTable<R>& G, std::optional<bool> full_scan = std::nullopt) {
  CoverOutcome out;
  out.classes = maximal_bicentralizer_classes(G, full_scan);
  const auto& cc = out.classes;
  OmegaCertificate cert;
  cert.method = Method::CoverCertificate;
  verify_cover(G, cc, cert.checks);
  if (const auto missing = cc.witnessless(); missing > 0) {
    out.gap = "certificate gap: " + std::to_string(missing) + " of " + std::to_string(cc.size()) +
              " classes have no element whose centralizer equals the class";
    return out;
  }
  for (const auto& c : cc.classes) cert.witness_clique.push_back(*c.witness);
  if (!detail::pairwise_noncommuting(G, cert.witness_clique)) {
    out.gap = "certificate gap: class witnesses commute";
    return out;
  }
  cert.checks.push_back("witnesses pairwise non-commuting");
  cert.checks.push_back("classes by order: " + detail::join_counts(cc.order_counts()));
  cert.omega = cert.upper_bound_classes = cc.size();
  out.certificate = std::move(cert);
  return out;
}

struct Lemma20Decomposition {
  std::vector<Subset> parts;
  std::vector<bool> abelian;
  std::vector<std::size_t> part_omega;  ///< filled by lemma20_omega
  bool covers = false;
  bool pairwise_center = false;
  bool centralizer_closed = false;
  bool proper = false;  ///< more than one part and none equal to G
  bool capped = false;
  std::size_t rounds = 0;

  [[nodiscard]] bool applicable() const { return covers && pairwise_center && centralizer_closed && proper && !capped; }
  [[nodiscard]] std::map<std::size_t, std::size_t> order_counts() const {
    std::map<std::size_t, std::size_t> m;
    for (const auto& p : parts) ++m[p.count()];
    return m;
  }
};

inline constexpr std::size_t kLemma20PartCap = 10'000;

template <GroupRep R>
Lemma20Decomposition lemma20_decompose(const GroupTable<R>& G) {
  const Subset& z = center(G);
  if (z.count() == G.size()) throw std::domain_error("abelian group has no non-central elements");
  const auto reps = detail::noncentral_cyclic_reps(G);
  precompute_centralizers(G, reps);

  Lemma20Decomposition d;
  std::vector<Subset> parts;
  {
    std::unordered_set<Subset, BitsetHash> seen;
    for (auto r : reps)
      if (seen.insert(centralizer(G, r)).second) parts.push_back(centralizer(G, r));
  }

  for (bool changed = true; changed;) {
    ++d.rounds;
    if (parts.size() > kLemma20PartCap) {
      d.capped = true;
      return d;
    }
    // union-find: parts sharing a non-central element merge
    std::vector<std::size_t> parent(parts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::size_t> owner(G.size(), SIZE_MAX);
    for (std::size_t i = 0; i < parts.size(); ++i)
      (parts[i] - z).for_each([&](std::size_t g) {
        if (owner[g] == SIZE_MAX)
          owner[g] = i;
        else
          parent[find(i)] = find(owner[g]);
      });
    std::map<std::size_t, Subset> merged;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto [it, fresh] = merged.try_emplace(find(i), parts[i]);
      if (!fresh) it->second |= parts[i];
    }
    changed = merged.size() != parts.size();
    std::vector<Subset> next;
    for (auto& [root, u] : merged) {
      Subset closed;
      generating_set(G, u, &closed);
      if (closed != u) changed = true;
      next.push_back(std::move(closed));
    }
    parts = std::move(next);
  }

  std::sort(parts.begin(), parts.end(), [&](const Subset& a, const Subset& b) {
    return (a - z).find_first() < (b - z).find_first();
  });
  d.parts = std::move(parts);

  Subset u(G.size());
  std::vector<std::uint32_t> hits(G.size(), 0);
  d.pairwise_center = true;
  for (const auto& p : d.parts) {
    u |= p;
    if (!z.is_subset_of(p)) d.pairwise_center = false;
    (p - z).for_each([&](std::size_t g) { ++hits[g]; });
  }
  d.covers = (u | z).count() == G.size();
  for (std::uint32_t g = 0; g < G.size(); ++g)
    if (!z.test(g) && hits[g] != 1) d.pairwise_center = false;

  d.centralizer_closed = true;
  std::vector<std::size_t> part_of(G.size(), SIZE_MAX);
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    (d.parts[i] - z).for_each([&](std::size_t g) { part_of[g] = i; });
  for (auto r : reps)
    if (part_of[r] == SIZE_MAX || !centralizer(G, r).is_subset_of(d.parts[part_of[r]])) d.centralizer_closed = false;

  d.proper = d.parts.size() > 1 &&
             std::none_of(d.parts.begin(), d.parts.end(), [&](const Subset& p) { return p.count() == G.size(); });
  for (const auto& p : d.parts) d.abelian.push_back(detail::abelian_subgroup(G, p));
  return d;
}

template <GroupRep R>
OmegaCertificate omega(const GroupTable<R>& G, const OmegaOptions& opts = {});

/// The part as a group table of its own, with its own center.
template <GroupRep R>
GroupTable<R> part_table(const GroupTable<R>& G, const Subset& part, std::vector<std::uint32_t>* to_parent = nullptr) {
  std::vector<typename R::element_type> elems, gens;
  std::vector<std::uint32_t> idx;
  part.for_each([&](std::size_t g) {
    elems.push_back(G.element(static_cast<std::uint32_t>(g)));
    idx.push_back(static_cast<std::uint32_t>(g));
  });
  for (auto g : generating_set(G, part)) gens.push_back(G.element(g));
  GroupMeta meta = G.meta();
  meta.family = Family::Named;
  meta.label = "subgroup of order " + std::to_string(part.count()) + " in " + G.meta().label;
  meta.name = "part";
  auto T = GroupTable<R>::from_elements(G.rep(), std::move(elems), gens, meta);
  if (to_parent) {
    to_parent->assign(T.size(), 0);
    for (std::uint32_t i = 0; i < T.size(); ++i) (*to_parent)[i] = *G.index_of(T.element(i));
  }
  return T;
}

template <GroupRep R>
OmegaCertificate lemma20_omega(const GroupTable<R>& G, Lemma20Decomposition& d, const OmegaOptions& inner = {}) {
  if (!d.applicable())
    throw std::domain_error(std::string("decomposition hypotheses fail:") + (d.covers ? "" : " cover") +
                            (d.pairwise_center ? "" : " intersections") +
                            (d.centralizer_closed ? "" : " centralizer-closure") + (d.proper ? "" : " proper") +
                            (d.capped ? " part-cap" : ""));
  const Subset& z = center(G);
  OmegaCertificate cert;
  cert.method = Method::Lemma20;
  d.part_omega.assign(d.parts.size(), 0);
  std::map<std::size_t, std::size_t> nonabelian_values;
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    if (d.abelian[i]) {
      d.part_omega[i] = 1;
      cert.witness_clique.push_back(static_cast<std::uint32_t>((d.parts[i] - z).find_first()));
      cert.upper_bound_classes += 1;
      continue;
    }
    std::vector<std::uint32_t> to_parent;
    auto T = part_table(G, d.parts[i], &to_parent);
    auto sub = omega(T, inner);
    if (!sub.exact) throw std::runtime_error("part omega not exact");
    d.part_omega[i] = sub.omega;
    ++nonabelian_values[sub.omega];
    cert.upper_bound_classes += sub.upper_bound_classes;
    for (auto w : sub.witness_clique) cert.witness_clique.push_back(to_parent[w]);
  }
  cert.omega = std::accumulate(d.part_omega.begin(), d.part_omega.end(), std::size_t{0});
  if (cert.witness_clique.size() != cert.omega || !detail::pairwise_noncommuting(G, cert.witness_clique))
    throw std::logic_error("lemma20 witness clique invalid");
  cert.checks.push_back(std::to_string(d.parts.size()) + " parts (" + detail::join_counts(d.order_counts()) +
                        "): cover, pairwise intersection Z(G), centralizer-closed");
  for (auto [v, n] : nonabelian_values)
    cert.checks.push_back(std::to_string(n) + " non-abelian parts with omega " + std::to_string(v));
  cert.checks.push_back("witness clique of size " + std::to_string(cert.omega) + " verified");
  return cert;
}

template <GroupRep R>
OmegaCertificate lemma20_omega(const GroupTable<R>& G, const OmegaOptions& inner = {}) {
  auto d = lemma20_decompose(G);
  return lemma20_omega(G, d, inner);
}

template <GroupRep R>
OmegaCertificate solver_omega(const GroupTable<R>& G, const OmegaOptions& opts = {}) {
  const auto zc = center(G).count();
  if (zc == G.size()) throw std::domain_error("abelian group has no non-central elements");
  if (G.size() / zc - 1 > kBigGraphVertices && !opts.allow_big_memory)
    throw std::length_error("collapsed graph above " + std::to_string(kBigGraphVertices) +
                            " vertices needs allow_big_memory");
  const auto ng = build_collapsed_ncgraph(G);
  CliqueOptions co;
  co.node_limit = opts.node_limit;
  co.time_limit_seconds = opts.time_limit_seconds;
  const auto res = max_clique_exact(ng.graph, co);
  OmegaCertificate cert;
  cert.method = Method::BranchBound;
  cert.omega = res.size;
  cert.exact = res.status == CliqueStatus::Exact;
  cert.upper_bound_classes = res.stats.initial_upper_bound;
  for (auto v : res.members) cert.witness_clique.push_back(ng.vertices[v]);
  if (!detail::pairwise_noncommuting(G, cert.witness_clique)) throw std::logic_error("solver clique invalid");
  cert.checks.push_back("collapsed graph: " + std::to_string(ng.size()) + " vertices, " +
                        std::to_string(ng.graph.edge_count()) + " edges");
  cert.checks.push_back(std::string(cert.exact ? "search complete" : "budget exhausted, lower bound only") +
                        " after " + std::to_string(res.stats.nodes) + " nodes, " + res.stats.bound_used +
                        " bound " + std::to_string(res.stats.initial_upper_bound));
  return cert;
}

template <GroupRep R>
OmegaCertificate formula_omega(const GroupTable<R>& G) {
  const auto f = closed_form_for(G.meta());
  if (!f) throw std::domain_error("no closed form for " + G.meta().label);
  OmegaCertificate cert;
  cert.method = Method::ClosedForm;
  cert.omega = f->lower;
  cert.upper_bound_classes = f->upper;
  cert.exact = f->exact();
  cert.checks.push_back(f->source + (f->exact() ? " = " + std::to_string(f->lower)
                                                : " bounds [" + std::to_string(f->lower) + ", " +
                                                      std::to_string(f->upper) + "]"));
  return cert;
}

/// The first certificate, with every other exact one required to agree.
inline OmegaCertificate merge_certificates(const std::vector<OmegaCertificate>& found, const std::string& label) {
  if (found.empty()) throw std::invalid_argument("no certificates to merge");
  OmegaCertificate primary = found.front();
  for (const auto& c : found) {
    if (c.exact && primary.exact && c.omega != primary.omega)
      throw InconsistencyError(std::string(method_name(primary.method)) + " gives " + std::to_string(primary.omega) +
                               " but " + method_name(c.method) + " gives " + std::to_string(c.omega) + " for " +
                               label);
    if (c.exact == primary.exact && c.omega == primary.omega) primary.agreeing.push_back(c.method);
  }
  return primary;
}

/// Runs every applicable method (or the requested one) and insists they agree.
template <GroupRep R>
OmegaCertificate omega(const GroupTable<R>& G, const OmegaOptions& opts) {
  if (center(G).count() == G.size()) throw std::domain_error("omega of an abelian group");
  switch (opts.method) {
    case Method::ClosedForm: return formula_omega(G);
    case Method::ACCount: return ac_omega(G);
    case Method::CoverCertificate: {
      auto out = cover_certificate_omega(G, opts.full_scan);
      if (!out.certificate) throw std::domain_error(out.gap);
      return *out.certificate;
    }
    case Method::Lemma20: {
      auto inner = opts;
      inner.method = Method::Auto;
      return lemma20_omega(G, inner);
    }
    case Method::BranchBound: return solver_omega(G, opts);
    case Method::Auto: break;
  }

  std::vector<OmegaCertificate> found;
  std::vector<std::string> notes;
  if (is_ac_group(G))
    found.push_back(ac_omega(G));
  else
    notes.push_back("ACCount: not an AC-group");

  auto cover = cover_certificate_omega(G, opts.full_scan);
  if (cover.certificate)
    found.push_back(std::move(*cover.certificate));
  else
    notes.push_back("CoverCertificate: " + cover.gap);

  auto d = lemma20_decompose(G);
  if (d.applicable())
    found.push_back(lemma20_omega(G, d, opts));
  else
    notes.push_back("Lemma20: hypotheses fail (" + std::to_string(d.parts.size()) + " parts after merge-closure)");

  const auto vertices = G.size() / center(G).count() - 1;
  if (found.empty() || vertices <= opts.solver_vertex_limit) {
    auto s = solver_omega(G, opts);
    if (s.exact || found.empty()) found.push_back(std::move(s));
  }

  OmegaCertificate primary = merge_certificates(found, G.meta().label);
  // A formula is a cross-check on verified certificates, not a method: a
  // verified clique above a claimed upper bound refutes the bound, so a
  // mismatch is reported rather than thrown.
  if (primary.exact)
    if (const auto f = closed_form_for(G.meta())) {
      primary.formula = FormulaCheck{f->source, f->lower, f->upper, f->admits(primary.omega)};
      primary.checks.push_back("closed form " + f->source + (primary.formula->matched ? " agrees" : " DISAGREES"));
    }
  for (auto& n : notes) primary.checks.push_back(std::move(n));
  return primary;
}

// ---------------------------------------------------------------------------
// Extension of singletons to maximum cliques

struct SingletonExtension {
  std::uint32_t element = 0;
  std::size_t classes_containing = 0;
  std::size_t best_clique = 0;  ///< largest clique containing the element
  bool extendable = false;
};

struct ExtensionReport {
  std::size_t omega = 0;
  std::vector<SingletonExtension> rows;
  [[nodiscard]] std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](auto& r) { return !r.extendable; }));
  }
};

/// Non-central elements, all of them or a seeded sample.
template <GroupRep R>
std::vector<std::uint32_t> noncentral_sample(const GroupTable<R>& G, std::size_t count, std::uint64_t seed) {
  std::vector<std::uint32_t> all;
  const Subset& z = center(G);
  for (std::uint32_t g = 0; g < G.size(); ++g)
    if (!z.test(g)) all.push_back(g);
  if (count == 0 || count >= all.size()) return all;
  std::mt19937_64 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

/// With a witnessed cover of size omega, the best clique through g is
/// {g} together with the witnesses of the classes avoiding g, of size
/// 1 + omega - k(g); the counting bound shows nothing larger exists.
template <GroupRep R>
ExtensionReport singleton_extension_check(const GroupTable<R>& G, const CoverClasses& cc,
                                          const std::vector<std::uint32_t>& sample) {
  if (cc.witnessless() > 0) throw std::domain_error("extension check needs a witness in every class");
  ExtensionReport rep;
  rep.omega = cc.size();
  for (auto g : sample) {
    const auto& mine = cc.membership.at(g);
    if (mine.empty()) throw std::domain_error("central element in extension sample");
    SingletonExtension row;
    row.element = g;
    row.classes_containing = mine.size();
    std::size_t size = 1;
    for (std::uint32_t k = 0; k < cc.size(); ++k) {
      if (std::binary_search(mine.begin(), mine.end(), k)) continue;
      if (G.commute(g, *cc.classes[k].witness)) throw std::logic_error("witness commutes with an element outside its class");
      ++size;
    }
    row.best_clique = size;
    row.extendable = size == rep.omega;
    rep.rows.push_back(row);
  }
  return rep;
}

struct NonExtendableWitness {
  std::uint32_t element = 0;
  std::size_t classes_containing = 0;
  std::size_t bound = 0;  ///< 1 + omega - k
  std::size_t omega = 0;
};

/// First non-central element (by index) lying in two or more classes.
template <GroupRep R>
std::optional<NonExtendableWitness> non_extendable_witness(const GroupTable<R>& G, const CoverClasses& cc,
                                                           std::size_t omega) {
  const Subset& z = center(G);
  for (std::uint32_t g = 0; g < G.size(); ++g) {
    if (z.test(g)) continue;
    const auto k = cc.membership[g].size();
    if (k >= 2) return NonExtendableWitness{g, k, 1 + omega - k, omega};
  }
  return std::nullopt;
}

/// Solver-only value of the largest clique through vertex v: 1 + omega(N(v)).
inline std::size_t max_clique_through(const Graph& g, std::uint32_t v, const CliqueOptions& opts = {}) {
  const auto nb = g.row(v).to_indices();
  std::vector<std::uint32_t> keep(nb.begin(), nb.end());
  auto r = max_clique_exact(g.induced(keep), opts);
  if (r.status != CliqueStatus::Exact) throw std::runtime_error("neighbourhood search hit its budget");
  return 1 + r.size;
}

}  // namespace ncc
