#pragma once

// Simple undirected graph on bitset adjacency rows, plus DIMACS ASCII I/O.

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncclique/bitset.hpp"

namespace ncc {

class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, Bitset(n)) {}

  [[nodiscard]] std::size_t size() const noexcept { return adj_.size(); }
  [[nodiscard]] const Bitset& row(std::size_t v) const { return adj_[v]; }
  [[nodiscard]] const std::vector<Bitset>& rows() const noexcept { return adj_; }
  [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("self loop");
    adj_[u].set(v);
    adj_[v].set(u);
  }

  [[nodiscard]] std::size_t degree(std::size_t v) const { return adj_[v].count(); }
  [[nodiscard]] std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : adj_) twice += r.count();
    return twice / 2;
  }

  [[nodiscard]] bool is_clique(const std::vector<std::uint32_t>& vs) const {
    for (std::size_t a = 0; a < vs.size(); ++a)
      for (std::size_t b = a + 1; b < vs.size(); ++b)
        if (vs[a] == vs[b] || !adjacent(vs[a], vs[b])) return false;
    return true;
  }

  /// Induced subgraph on `keep` (vertex i of the result is keep[i]).
  [[nodiscard]] Graph induced(const std::vector<std::uint32_t>& keep) const {
    Graph g(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = a + 1; b < keep.size(); ++b)
        if (adjacent(keep[a], keep[b])) g.add_edge(a, b);
    return g;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bitset> adj_;
};

/// DIMACS ASCII: optional "c" lines, "p edge n m", then m "e u v" lines
/// (1-indexed, each undirected edge once, u < v).
inline void write_dimacs(std::ostream& os, const Graph& g, const std::vector<std::string>& comments = {}) {
  for (const auto& c : comments) os << "c " << c << '\n';
  os << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
  for (std::size_t u = 0; u < g.size(); ++u)
    g.row(u).for_each([&](std::size_t v) {
      if (v > u) os << "e " << u + 1 << ' ' << v + 1 << '\n';
    });
}

struct DimacsGraph {
  Graph graph;
  std::vector<std::string> comments;
};

inline DimacsGraph read_dimacs(std::istream& is) {
  DimacsGraph out;
  std::string line;
  bool have_header = false;
  std::size_t n = 0, m = 0, seen = 0, lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw std::runtime_error("DIMACS line " + std::to_string(lineno) + ": " + why);
    };
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "c") {
      out.comments.push_back(line.size() > 2 ? line.substr(2) : std::string());
    } else if (tag == "p") {
      std::string fmt;
      if (have_header) fail("duplicate header");
      if (!(ls >> fmt >> n >> m) || (fmt != "edge" && fmt != "col")) fail("malformed header");
      out.graph = Graph(n);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) fail("edge before header");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) fail("malformed edge");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
        fail("edge endpoint out of range");
      if (u == v) fail("self loop");
      if (out.graph.adjacent(u - 1, v - 1)) fail("duplicate edge");
      out.graph.add_edge(u - 1, v - 1);
      ++seen;
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  if (!have_header) throw std::runtime_error("DIMACS input has no header");
  if (seen != m)
    throw std::runtime_error("DIMACS header announces " + std::to_string(m) + " edges, found " + std::to_string(seen));
  return out;
}

}  // namespace ncc
