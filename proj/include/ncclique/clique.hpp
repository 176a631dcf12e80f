#pragma once

// Exact maximum clique by branch and bound with greedy-colouring bounds on
// bitset rows (the BBMC scheme), plus the subset-enumeration oracle used to
// check it.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncclique/bitset.hpp"
#include "ncclique/graph.hpp"

namespace ncc {

using ColorClasses = std::vector<std::vector<std::uint32_t>>;

enum class VertexOrder { Natural, Degeneracy, LargestFirst };
enum class CliqueStatus { Exact, LowerBoundOnly };

struct CliqueStats {
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0;
  std::size_t initial_upper_bound = 0;
  std::string bound_used;
};

struct CliqueResult {
  std::vector<std::uint32_t> members;
  std::size_t size = 0;
  CliqueStatus status = CliqueStatus::LowerBoundOnly;
  CliqueStats stats;
};

struct CliqueOptions {
  std::vector<std::uint32_t> initial_clique;
  std::optional<ColorClasses> color_hint;
  std::uint64_t node_limit = 100'000'000;
  double time_limit_seconds = 600;
};

/// Smallest-last order: repeatedly strip a minimum-degree vertex (lowest
/// index on ties) and return the stripped vertices in reverse.
inline std::vector<std::uint32_t> degeneracy_order(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (best == n || deg[v] < deg[best])) best = v;
    removed[best] = true;
    order.push_back(static_cast<std::uint32_t>(best));
    g.row(best).for_each([&](std::size_t u) {
      if (!removed[u]) --deg[u];
    });
  }
  std::reverse(order.begin(), order.end());
  return order;
}

inline std::vector<std::uint32_t> vertex_order(const Graph& g, VertexOrder how) {
  std::vector<std::uint32_t> order(g.size());
  for (std::uint32_t v = 0; v < order.size(); ++v) order[v] = v;
  switch (how) {
    case VertexOrder::Natural: break;
    case VertexOrder::Degeneracy: order = degeneracy_order(g); break;
    case VertexOrder::LargestFirst:
      std::stable_sort(order.begin(), order.end(),
                       [&](std::uint32_t a, std::uint32_t b) { return g.degree(a) > g.degree(b); });
      break;
  }
  return order;
}

/// First-fit colouring in the given vertex order.
inline ColorClasses greedy_coloring(const Graph& g, VertexOrder how = VertexOrder::Degeneracy) {
  ColorClasses classes;
  std::vector<Bitset> members;
  for (auto v : vertex_order(g, how)) {
    std::size_t c = 0;
    while (c < classes.size() && g.row(v).intersects(members[c])) ++c;
    if (c == classes.size()) {
      classes.emplace_back();
      members.emplace_back(g.size());
    }
    classes[c].push_back(v);
    members[c].set(v);
  }
  return classes;
}

/// Empty string when `classes` is a partition of the vertices into
/// independent sets, otherwise a description of the first problem.
inline std::string coloring_diagnostic(const Graph& g, const ColorClasses& classes) {
  std::vector<int> seen(g.size(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (auto v : classes[c]) {
      if (v >= g.size()) return "class " + std::to_string(c) + " names vertex " + std::to_string(v) + " out of range";
      if (seen[v] >= 0) return "vertex " + std::to_string(v) + " appears in classes " + std::to_string(seen[v]) +
                               " and " + std::to_string(c);
      seen[v] = static_cast<int>(c);
    }
  for (std::size_t v = 0; v < g.size(); ++v)
    if (seen[v] < 0) return "vertex " + std::to_string(v) + " is not coloured";
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::size_t a = 0; a < classes[c].size(); ++a)
      for (std::size_t b = a + 1; b < classes[c].size(); ++b)
        if (g.adjacent(classes[c][a], classes[c][b]))
          return "class " + std::to_string(c) + " is not independent: edge " + std::to_string(classes[c][a]) + "-" +
                 std::to_string(classes[c][b]);
  return {};
}

/// Grows `partial` to a maximal clique, adding the first admissible vertex
/// of `order` (index order by default) each time.
inline std::vector<std::uint32_t> extend_clique(const Graph& g, std::vector<std::uint32_t> partial,
                                                const std::vector<std::uint32_t>& order = {}) {
  if (!g.is_clique(partial)) throw std::invalid_argument("extend_clique: input is not a clique");
  Bitset cand(g.size(), true);
  for (auto v : partial) {
    cand &= g.row(v);
  }
  if (order.empty()) {
    for (std::size_t v = cand.find_first(); v < g.size(); v = cand.find_first()) {
      partial.push_back(static_cast<std::uint32_t>(v));
      cand &= g.row(v);
    }
  } else {
    for (auto v : order)
      if (cand.test(v)) {
        partial.push_back(v);
        cand &= g.row(v);
      }
  }
  return partial;
}

namespace detail {

class BranchAndBound {
 public:
  BranchAndBound(const Graph& g, const CliqueOptions& opts) : opts_(opts), start_(std::chrono::steady_clock::now()) {
    order_ = degeneracy_order(g);
    const std::size_t n = g.size();
    std::vector<std::uint32_t> pos(n);
    for (std::uint32_t i = 0; i < n; ++i) pos[order_[i]] = i;
    adj_.assign(n, Bitset(n));
    for (std::uint32_t i = 0; i < n; ++i) g.row(order_[i]).for_each([&](std::size_t u) { adj_[i].set(pos[u]); });
    pos_ = std::move(pos);
  }

  void seed(const std::vector<std::uint32_t>& clique) {
    if (clique.size() <= best_.size()) return;
    best_.clear();
    for (auto v : clique) best_.push_back(pos_[v]);
  }
  void set_upper_bound(std::size_t ub) { upper_ = ub; }

  bool run() {
    if (best_.size() >= upper_) return true;
    std::vector<std::uint32_t> current;
    expand(Bitset(adj_.size(), true), current);
    return !aborted_;
  }

  [[nodiscard]] std::vector<std::uint32_t> best() const {
    std::vector<std::uint32_t> out;
    for (auto i : best_) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }
  [[nodiscard]] std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void expand(Bitset P, std::vector<std::uint32_t>& C) {
    if (++nodes_ > opts_.node_limit) aborted_ = true;
    if ((nodes_ & 1023) == 0) {
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
      if (dt.count() > opts_.time_limit_seconds) aborted_ = true;
    }
    if (aborted_) return;

    // Colour P in index order; only vertices whose colour could still beat
    // the incumbent are branched on.
    std::vector<std::uint32_t> verts, colors;
    const long kmin = static_cast<long>(best_.size()) - static_cast<long>(C.size()) + 1;
    Bitset U = P;
    long k = 0;
    while (U.any()) {
      ++k;
      Bitset Q = U;
      for (std::size_t v = Q.find_first(); v < Q.size(); v = Q.find_next(v + 1)) {
        U.reset(v);
        Q.subtract(adj_[v]);
        if (k >= kmin) {
          verts.push_back(static_cast<std::uint32_t>(v));
          colors.push_back(static_cast<std::uint32_t>(k));
        }
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (C.size() + colors[i] <= best_.size()) return;
      const auto v = verts[i];
      C.push_back(v);
      Bitset NP = P & adj_[v];
      if (NP.none()) {
        if (C.size() > best_.size()) best_ = C;
      } else {
        expand(std::move(NP), C);
      }
      C.pop_back();
      P.reset(v);
      if (aborted_ || best_.size() >= upper_) return;
    }
  }

  const CliqueOptions& opts_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::uint32_t> order_, pos_;
  std::vector<Bitset> adj_;
  std::vector<std::uint32_t> best_;
  std::size_t upper_ = static_cast<std::size_t>(-1);
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace detail

inline CliqueResult max_clique_exact(const Graph& g, const CliqueOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  CliqueResult res;
  if (g.size() == 0) {
    res.status = CliqueStatus::Exact;
    return res;
  }
  if (!g.is_clique(opts.initial_clique)) throw std::invalid_argument("initial clique is not a clique");

  const auto greedy = greedy_coloring(g);
  std::size_t ub = greedy.size();
  res.stats.bound_used = "greedy-coloring";
  if (opts.color_hint) {
    if (auto why = coloring_diagnostic(g, *opts.color_hint); !why.empty())
      throw std::invalid_argument("rejected colour hint: " + why);
    if (opts.color_hint->size() < ub) {
      ub = opts.color_hint->size();
      res.stats.bound_used = "color-hint";
    }
  }
  res.stats.initial_upper_bound = ub;

  detail::BranchAndBound bb(g, opts);
  bb.set_upper_bound(ub);
  bb.seed(extend_clique(g, {}, degeneracy_order(g)));
  bb.seed(opts.initial_clique);
  const bool finished = bb.run();

  res.members = bb.best();
  res.size = res.members.size();
  res.status = finished ? CliqueStatus::Exact : CliqueStatus::LowerBoundOnly;
  res.stats.nodes = bb.nodes();
  res.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!g.is_clique(res.members)) throw std::logic_error("solver returned a non-clique");
  if (res.size > ub) throw std::logic_error("solver exceeded a valid colouring bound");
  return res;
}

inline constexpr std::size_t kBruteForceMaxVertices = 24;

/// omega by enumerating all vertex subsets; mask is a clique iff its lowest
/// vertex is adjacent to the rest and the rest is a clique.
inline std::size_t brute_force_omega(const Graph& g) {
  const std::size_t n = g.size();
  if (n > kBruteForceMaxVertices) throw std::length_error("brute force limited to 24 vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u)
      if (g.adjacent(v, u)) nbr[v] |= 1u << u;
  std::vector<std::uint8_t> clique(std::size_t{1} << n, 0);
  clique[0] = 1;
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint32_t rest = mask & (mask - 1);
    if (clique[rest] && (nbr[low] & rest) == rest) {
      clique[mask] = 1;
      best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask)));
    }
  }
  return best;
}

}  // namespace ncc
