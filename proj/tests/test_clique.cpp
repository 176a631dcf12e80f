#include <gtest/gtest.h>

#include <random>

#include "ncclique/builders.hpp"
#include "ncclique/clique.hpp"
#include "ncclique/ncgraph.hpp"

using namespace ncc;

namespace {

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (coin(rng)) g.add_edge(a, b);
  return g;
}

std::size_t solve(const Graph& g) {
  auto r = max_clique_exact(g);
  EXPECT_EQ(r.status, CliqueStatus::Exact);
  EXPECT_TRUE(g.is_clique(r.members));
  return r.size;
}

}  // namespace

TEST(Solver, SmallGraphs) {
  EXPECT_EQ(solve(complete(4)), 4u);
  EXPECT_EQ(solve(Graph(5)), 1u);
  EXPECT_EQ(solve(Graph(0)), 0u);
  Graph c5(5);
  for (std::size_t i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  EXPECT_EQ(solve(c5), 2u);
}

TEST(Solver, GroupGraphs) {
  EXPECT_EQ(solve(build_ncgraph(build_named("symmetric(3)")).graph), 4u);
  EXPECT_EQ(solve(build_ncgraph(build_named("quaternion8")).graph), 3u);
  EXPECT_EQ(solve(build_ncgraph(build_named("dihedral(4)")).graph), 3u);
  EXPECT_EQ(solve(build_ncgraph(build_named("alternating(4)")).graph), 5u);
  EXPECT_EQ(solve(build_collapsed_ncgraph(build_extraspecial(2, 2)).graph), 5u);
  EXPECT_EQ(solve(build_collapsed_ncgraph(build_extraspecial(3, 1)).graph), 4u);
  EXPECT_EQ(solve(build_collapsed_ncgraph(build_extraspecial(5, 1)).graph), 6u);
  EXPECT_EQ(solve(build_collapsed_ncgraph(build_linear(LinearKind::PSL, 2, 5)).graph), 21u);
}

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_omega(build_ncgraph(build_named("symmetric(3)")).graph), 4u);
  EXPECT_EQ(brute_force_omega(build_ncgraph(build_named("dihedral(4)")).graph), 3u);
  EXPECT_EQ(brute_force_omega(build_ncgraph(build_named("alternating(4)")).graph), 5u);
  EXPECT_THROW(brute_force_omega(Graph(25)), std::length_error);
}

TEST(BruteForce, AgreesOnRandomGraphs) {
  std::mt19937_64 rng(20240611);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + t % 20;
    const double p = 0.2 + 0.6 * (t % 7) / 6.0;
    auto g = random_graph(n, p, rng);
    ASSERT_EQ(solve(g), brute_force_omega(g)) << "trial " << t;
  }
}

TEST(BruteForce, AgreesOnGroupGraphs) {
  for (auto name : {"symmetric(3)", "dihedral(4)", "dihedral(5)", "dihedral(6)", "quaternion8", "alternating(4)"}) {
    auto g = build_ncgraph(build_named(name)).graph;
    EXPECT_EQ(solve(g), brute_force_omega(g)) << name;
  }
  auto s4 = build_collapsed_ncgraph(build_named("symmetric(4)")).graph;
  ASSERT_LE(s4.size(), kBruteForceMaxVertices);
  EXPECT_EQ(solve(s4), brute_force_omega(s4));
}

TEST(Coloring, ProperAndBounding) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    auto g = random_graph(30, 0.5, rng);
    for (auto how : {VertexOrder::Natural, VertexOrder::Degeneracy, VertexOrder::LargestFirst}) {
      auto c = greedy_coloring(g, how);
      EXPECT_EQ(coloring_diagnostic(g, c), "");
      EXPECT_GE(c.size(), solve(g));
    }
  }
}

TEST(Coloring, Diagnostics) {
  auto g = complete(3);
  EXPECT_NE(coloring_diagnostic(g, {{0, 1}, {2}}), "");
  EXPECT_NE(coloring_diagnostic(g, {{0}, {1}}), "");
  EXPECT_NE(coloring_diagnostic(g, {{0}, {1}, {2}, {2}}), "");
  EXPECT_NE(coloring_diagnostic(g, {{0}, {1}, {5}}), "");
  EXPECT_EQ(coloring_diagnostic(g, {{0}, {1}, {2}}), "");
}

TEST(Solver, ColourHint) {
  // S3: the three reflections pairwise clash; the rotations commute. A hint
  // with 4 classes is tight.
  auto G = build_named("symmetric(3)");
  auto ng = build_ncgraph(G);
  ColorClasses hint;
  std::vector<std::uint32_t> rotations;
  for (std::uint32_t v = 0; v < ng.size(); ++v) {
    if (G.order(ng.vertices[v]) == 3)
      rotations.push_back(v);
    else
      hint.push_back({v});
  }
  hint.push_back(rotations);
  CliqueOptions opts;
  opts.color_hint = hint;
  auto r = max_clique_exact(ng.graph, opts);
  EXPECT_EQ(r.size, 4u);
  EXPECT_EQ(r.stats.initial_upper_bound, 4u);

  opts.color_hint = ColorClasses{{0, 1, 2, 3, 4}};
  EXPECT_THROW(max_clique_exact(ng.graph, opts), std::invalid_argument);
}

TEST(Solver, InitialClique) {
  auto g = complete(5);
  CliqueOptions opts;
  opts.initial_clique = {0, 1};
  EXPECT_EQ(max_clique_exact(g, opts).size, 5u);
  Graph e(3);
  opts.initial_clique = {0, 1};
  EXPECT_THROW(max_clique_exact(e, opts), std::invalid_argument);
}

TEST(Solver, NodeLimit) {
  std::mt19937_64 rng(11);
  auto g = random_graph(120, 0.9, rng);
  CliqueOptions opts;
  opts.node_limit = 5;
  auto r = max_clique_exact(g, opts);
  EXPECT_EQ(r.status, CliqueStatus::LowerBoundOnly);
  EXPECT_TRUE(g.is_clique(r.members));
  EXPECT_GT(r.size, 0u);
}

TEST(Extend, Maximal) {
  auto ng = build_ncgraph(build_linear(LinearKind::PSL, 2, 5));
  const auto& g = ng.graph;
  auto c = extend_clique(g, {0});
  EXPECT_TRUE(g.is_clique(c));
  EXPECT_EQ(c.front(), 0u);
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    if (std::find(c.begin(), c.end(), v) != c.end()) continue;
    bool all = true;
    for (auto u : c) all &= g.adjacent(u, v);
    EXPECT_FALSE(all) << v;
  }
  EXPECT_TRUE(g.is_clique(extend_clique(g, {}, degeneracy_order(g))));
  EXPECT_THROW(extend_clique(Graph(2), {0, 1}), std::invalid_argument);
}

TEST(Order, Degeneracy) {
  std::mt19937_64 rng(3);
  auto g = random_graph(40, 0.3, rng);
  auto o = degeneracy_order(g);
  ASSERT_EQ(o.size(), 40u);
  std::vector<std::uint32_t> sorted = o;
  std::sort(sorted.begin(), sorted.end());
  for (std::uint32_t i = 0; i < 40; ++i) EXPECT_EQ(sorted[i], i);
}
