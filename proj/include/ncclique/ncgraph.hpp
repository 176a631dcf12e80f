#pragma once

// The non-commuting graph A_G: non-central elements, adjacent iff they do
// not commute. Central translation preserves commutation and a clique never
// holds two elements of one coset of Z(G), so the graph can be collapsed to
// one vertex per non-trivial coset without changing the clique number.

#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncclique/graph.hpp"
#include "ncclique/group.hpp"
#include "ncclique/parallel.hpp"
#include "ncclique/subgroups.hpp"

namespace ncc {

struct NCGraph {
  static constexpr std::uint32_t kNoVertex = std::numeric_limits<std::uint32_t>::max();

  /// Group element index behind each vertex (coset representative when collapsed).
  std::vector<std::uint32_t> vertices;
  Graph graph;
  bool collapsed = false;
  /// Group element index -> vertex; kNoVertex for central elements. Only
  /// filled when collapsed.
  std::vector<std::uint32_t> coset_map;
  /// Provenance lines carried into DIMACS comments.
  std::vector<std::string> metadata;

  [[nodiscard]] std::size_t size() const noexcept { return vertices.size(); }
};

inline constexpr std::size_t kBigGraphVertices = 16384;

namespace detail {
template <GroupRep R>
Graph commutation_graph(const GroupTable<R>& G, const std::vector<std::uint32_t>& verts) {
  Graph g(verts.size());
  std::vector<Bitset> rows(verts.size(), Bitset(verts.size()));
  parallel_for(verts.size(), [&](std::size_t a) {
    for (std::size_t b = 0; b < verts.size(); ++b)
      if (a != b && !G.commute(verts[a], verts[b])) rows[a].set(b);
  });
  for (std::size_t a = 0; a < verts.size(); ++a)
    rows[a].for_each([&](std::size_t b) {
      if (b > a) g.add_edge(a, b);
    });
  return g;
}

template <GroupRep R>
std::vector<std::string> group_metadata(const GroupTable<R>& G) {
  const auto& m = G.meta();
  return {"non-commuting graph of " + m.label, "family " + std::string(family_name(m.family)) + " q " +
                                                   std::to_string(m.q) + " n " + std::to_string(m.n) + " m " +
                                                   std::to_string(m.m) + " p " + std::to_string(m.p),
          "group order " + std::to_string(G.size())};
}
}  // namespace detail

template <GroupRep R>
NCGraph build_ncgraph(const GroupTable<R>& G, bool allow_big_memory = false) {
  const Subset& z = center(G);
  if (z.count() == G.size()) throw std::domain_error("abelian group: the non-commuting graph is empty");
  NCGraph out;
  for (std::uint32_t i = 0; i < G.size(); ++i)
    if (!z.test(i)) out.vertices.push_back(i);
  if (out.vertices.size() > kBigGraphVertices && !allow_big_memory)
    throw std::length_error("uncollapsed graph on " + std::to_string(out.vertices.size()) +
                            " vertices needs the large-memory flag");
  out.graph = detail::commutation_graph(G, out.vertices);
  out.metadata = detail::group_metadata(G);
  return out;
}

/// One vertex per non-trivial coset gZ(G), represented by its smallest index.
template <GroupRep R>
NCGraph collapse_by_center(const GroupTable<R>& G, const NCGraph& graph) {
  if (graph.collapsed) throw std::invalid_argument("graph is already collapsed");
  const auto zs = center(G).to_indices();
  NCGraph out;
  out.collapsed = true;
  out.coset_map.assign(G.size(), NCGraph::kNoVertex);
  for (auto g : graph.vertices) {
    if (out.coset_map[g] != NCGraph::kNoVertex) continue;
    const auto v = static_cast<std::uint32_t>(out.vertices.size());
    std::uint32_t rep = g;
    for (auto z : zs) {
      const auto gz = G.mul(g, z);
      out.coset_map[gz] = v;
      rep = std::min(rep, gz);
    }
    out.vertices.push_back(rep);
  }
  out.graph = Graph(out.vertices.size());
  std::vector<std::uint32_t> old_of(out.vertices.size());
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    if (graph.vertices[i] == out.vertices[out.coset_map[graph.vertices[i]]]) old_of[out.coset_map[graph.vertices[i]]] =
        static_cast<std::uint32_t>(i);
  for (std::size_t a = 0; a < out.vertices.size(); ++a)
    graph.graph.row(old_of[a]).for_each([&](std::size_t ob) {
      const auto b = out.coset_map[graph.vertices[ob]];
      if (b > a) out.graph.add_edge(a, b);
    });
  out.metadata = graph.metadata;
  out.metadata.push_back("collapsed by center, |Z| = " + std::to_string(zs.size()));
  return out;
}

/// The collapsed graph built directly from coset representatives, without
/// materializing the uncollapsed adjacency.
template <GroupRep R>
NCGraph build_collapsed_ncgraph(const GroupTable<R>& G) {
  const auto zs = center(G).to_indices();
  if (zs.size() == G.size()) throw std::domain_error("abelian group: the non-commuting graph is empty");
  NCGraph out;
  out.collapsed = true;
  out.coset_map.assign(G.size(), NCGraph::kNoVertex);
  for (std::uint32_t g = 0; g < G.size(); ++g) {
    if (out.coset_map[g] != NCGraph::kNoVertex || center(G).test(g)) continue;
    const auto v = static_cast<std::uint32_t>(out.vertices.size());
    for (auto z : zs) out.coset_map[G.mul(g, z)] = v;
    out.vertices.push_back(g);  // g is the smallest index of its coset
  }
  out.graph = detail::commutation_graph(G, out.vertices);
  out.metadata = detail::group_metadata(G);
  out.metadata.push_back("collapsed by center, |Z| = " + std::to_string(zs.size()));
  return out;
}

inline void export_dimacs(const NCGraph& g, std::ostream& os) {
  auto comments = g.metadata;
  comments.insert(comments.begin(), std::string("vertices ") + (g.collapsed ? "collapsed" : "uncollapsed"));
  write_dimacs(os, g.graph, comments);
}

/// Vertices of an imported graph are numbered 0..n-1; group provenance
/// survives only as metadata comments.
inline NCGraph import_dimacs(std::istream& is) {
  auto d = read_dimacs(is);
  NCGraph out;
  out.graph = std::move(d.graph);
  out.vertices.resize(out.graph.size());
  for (std::uint32_t i = 0; i < out.vertices.size(); ++i) out.vertices[i] = i;
  for (auto& c : d.comments) {
    if (c == "vertices collapsed")
      out.collapsed = true;
    else if (c != "vertices uncollapsed")
      out.metadata.push_back(std::move(c));
  }
  return out;
}

}  // namespace ncc
