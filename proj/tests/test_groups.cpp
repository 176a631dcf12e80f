#include <gtest/gtest.h>

#include <set>
#include <unordered_set>

#include "ncclique/builders.hpp"
#include "ncclique/subgroups.hpp"

using namespace ncc;

namespace {

std::uint32_t mat_index(const LinearGroup& G, std::initializer_list<std::uint8_t> entries) {
  Matrix m;
  std::size_t i = 0;
  for (auto v : entries) m.e[i++] = v;
  auto idx = G.index_of(G.rep().normalize(m));
  if (!idx) throw std::logic_error("matrix not in group");
  return *idx;
}

// All conjugates of H, deduplicated.
template <GroupRep R>
std::vector<Subset> conjugates(const GroupTable<R>& G, const Subset& H) {
  std::unordered_set<Subset, BitsetHash> seen;
  std::vector<Subset> out;
  for (std::uint32_t x = 0; x < G.size(); ++x) {
    auto c = conjugate_subset(G, H, x);
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

TEST(Build, OrdersMatchFormulas) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    EXPECT_EQ(build_linear(LinearKind::GL, 2, q).size(), (q * q - 1) * (q * q - q));
    EXPECT_EQ(build_linear(LinearKind::PSL, 2, q).size(), q * (q * q - 1) / std::gcd(2u, q - 1));
    EXPECT_EQ(build_linear(LinearKind::PGL, 2, q).size(), q * (q * q - 1));
    EXPECT_EQ(build_linear(LinearKind::SL, 2, q).size(), q * (q * q - 1));
  }
  EXPECT_EQ(build_linear(LinearKind::PSL, 2, 7).size(), 168u);
  EXPECT_EQ(build_linear(LinearKind::PGL, 2, 5).size(), 120u);
  EXPECT_EQ(build_linear(LinearKind::PSL, 3, 3).size(), 5616u);
  EXPECT_EQ(build_suzuki(1).size(), 29120u);
  EXPECT_EQ(build_extraspecial(2, 1).size(), 8u);
  EXPECT_EQ(build_extraspecial(2, 3, "minus").size(), 128u);
  EXPECT_EQ(build_extraspecial(5, 1).size(), 125u);
  EXPECT_EQ(build_named("symmetric(3)").size(), 6u);
  EXPECT_EQ(build_named("alternating(5)").size(), 60u);
  EXPECT_EQ(build_named("dihedral(6)").size(), 12u);
  EXPECT_EQ(build_named("dihedral(1)").size(), 2u);
  EXPECT_EQ(build_named("dihedral(2)").size(), 4u);
  EXPECT_TRUE(is_abelian(build_named("dihedral(2)")));
}

TEST(Build, Errors) {
  EXPECT_THROW(build_linear(LinearKind::PSL, 2, 6), std::invalid_argument);
  EXPECT_THROW(build_linear(LinearKind::PSL, 4, 2), std::invalid_argument);
  EXPECT_THROW(build_linear(LinearKind::GL, 3, 16), std::length_error);
  EXPECT_THROW(build_suzuki(2), std::length_error);
  EXPECT_THROW(build_suzuki(0), std::invalid_argument);
  EXPECT_THROW(build_extraspecial(3, 1, "minus"), std::invalid_argument);
  EXPECT_THROW(build_extraspecial(3, 6), std::length_error);  // 3^13 > 2^18
  EXPECT_THROW(build_named("cyclic(4)"), std::invalid_argument);
  EXPECT_THROW(build_named("symmetric(9)"), std::length_error);
}

TEST(Build, TablesAreGroups) {
  auto G = build_linear(LinearKind::PGL, 2, 4);
  for (std::uint32_t a = 0; a < G.size(); ++a) {
    EXPECT_EQ(G.mul(a, G.inv(a)), 0u);
    EXPECT_EQ(G.mul(0, a), a);
  }
  for (std::uint32_t a = 0; a < G.size(); a += 5)
    for (std::uint32_t b = 0; b < G.size(); b += 3)
      for (std::uint32_t c = 0; c < G.size(); c += 7)
        ASSERT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c)));
}

TEST(Build, ProjectiveFormIsCanonical) {
  auto G = build_linear(LinearKind::PSL, 2, 9);
  for (const auto& m : G.elements()) EXPECT_EQ(G.rep().normalize(m), m);
}

TEST(Center, Examples) {
  EXPECT_EQ(center(build_linear(LinearKind::PSL, 2, 7)).count(), 1u);
  EXPECT_EQ(center(build_linear(LinearKind::SL, 2, 5)).count(), 2u);
  EXPECT_EQ(center(build_linear(LinearKind::GL, 2, 5)).count(), 4u);
  EXPECT_EQ(center(build_extraspecial(3, 1)).count(), 3u);
  EXPECT_EQ(center(build_extraspecial(2, 1)).count(), 2u);
  EXPECT_EQ(center(build_linear(LinearKind::PSL, 3, 3)).count(), 1u);
  EXPECT_EQ(center(build_suzuki(1)).count(), 1u);
}

TEST(Center, BruteForce) {
  auto G = build_linear(LinearKind::SL, 2, 3);
  Subset z(G.size());
  for (std::uint32_t a = 0; a < G.size(); ++a) {
    bool central = true;
    for (std::uint32_t b = 0; b < G.size(); ++b) central &= G.mul(a, b) == G.mul(b, a);
    if (central) z.set(a);
  }
  EXPECT_EQ(center(G), z);
}

TEST(Centralizer, Properties) {
  auto G = build_linear(LinearKind::SL, 2, 5);
  const auto& Z = center(G);
  EXPECT_EQ(centralizer(G, 0).count(), G.size());
  for (std::uint32_t g = 0; g < G.size(); ++g) {
    const auto& c = centralizer(G, g);
    EXPECT_TRUE(is_subgroup(G, c));
    EXPECT_TRUE(Z.is_subset_of(c));
    EXPECT_TRUE(c.test(g));
  }
}

TEST(Centralizer, Psl33Sizes) {
  auto G = build_linear(LinearKind::PSL, 3, 3);
  std::map<std::size_t, std::unordered_set<Subset, BitsetHash>> distinct;
  for (std::uint32_t g = 1; g < G.size(); ++g) {
    const auto& c = centralizer(G, g);
    if (is_abelian(G, c)) distinct[c.count()].insert(c);
  }
  EXPECT_EQ(distinct[6].size(), 468u);
  EXPECT_EQ(distinct[8].size(), 351u);
  EXPECT_EQ(distinct[9].size(), 104u);
  EXPECT_EQ(distinct[13].size(), 144u);
  std::set<std::size_t> abelian_sizes;
  for (auto& [k, v] : distinct) abelian_sizes.insert(k);
  EXPECT_EQ(abelian_sizes, (std::set<std::size_t>{6, 8, 9, 13}));
}

TEST(Centralizer, SuzukiSylowTwo) {
  auto G = build_suzuki(1);
  const auto F = sylow_subgroup(G, 2);
  ASSERT_EQ(F.count(), 64u);
  Subset ZF(G.size());
  F.for_each([&](std::size_t x) {
    bool central = true;
    F.for_each([&](std::size_t y) { central &= G.commute(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)); });
    if (central) ZF.set(x);
  });
  EXPECT_EQ(ZF.count(), 8u);
  std::size_t checked = 0;
  F.for_each([&](std::size_t g) {
    if (ZF.test(g)) return;
    const auto g32 = static_cast<std::uint32_t>(g);
    EXPECT_EQ(centralizer(G, g32).count(), 16u);
    EXPECT_EQ(bicentralizer(G, g32).count(), 16u);
    ++checked;
  });
  EXPECT_EQ(checked, 56u);
}

TEST(Bicentralizer, AbelianHull) {
  auto G = build_linear(LinearKind::PSL, 2, 7);
  // C(C(g)) = C(g) exactly when C(g) is abelian; the 21 involutions have C(g) = D8
  std::size_t differ = 0;
  for (std::uint32_t g = 1; g < G.size(); ++g) {
    const auto c = centralizer(G, g);
    const bool same = bicentralizer(G, g) == c;
    EXPECT_EQ(same, is_abelian(G, c)) << g;
    differ += !same;
  }
  EXPECT_EQ(differ, 21u);
  EXPECT_THROW(bicentralizer(G, 0), std::domain_error);

  auto S = build_named("symmetric(4)");
  for (std::uint32_t g = 1; g < S.size(); ++g) {
    const auto b = bicentralizer(S, g);
    EXPECT_TRUE(is_abelian(S, b));
    EXPECT_TRUE(b.test(g));
    EXPECT_TRUE(b.is_subset_of(centralizer(S, g)));
  }
}

TEST(Bicentralizer, ExtraspecialRadical) {
  auto G = build_extraspecial(3, 2);
  for (std::uint32_t g = 0; g < G.size(); ++g) {
    if (is_central(G, g)) continue;
    const auto& u = G.element(g).v;
    const auto b = bicentralizer(G, g);
    ASSERT_EQ(b.count(), 9u);
    b.for_each([&](std::size_t h) {
      const auto& v = G.element(static_cast<std::uint32_t>(h)).v;
      bool multiple = false;
      for (int k = 0; k < 3 && !multiple; ++k) {
        bool eq = true;
        for (int i = 0; i < 4; ++i) eq &= v[i] == (k * u[i]) % 3;
        multiple = eq;
      }
      EXPECT_TRUE(multiple);
    });
  }
}

TEST(Extraspecial, DefiningProperties) {
  auto H = build_extraspecial(3, 1);
  for (std::uint32_t g = 0; g < H.size(); ++g) EXPECT_EQ(power(H, g, 3), 0u);
  for (auto [p, n, form] : {std::tuple{2u, 2u, "plus"}, {2u, 2u, "minus"}, {3u, 2u, "plus"}, {2u, 3u, "plus"}}) {
    auto G = build_extraspecial(p, n, form);
    EXPECT_EQ(center(G).count(), p);
    EXPECT_EQ(derived_subgroup(G), center(G));
  }
  // D8*D8 has 19 involutions, D8*Q8 has 11
  auto plus = build_extraspecial(2, 2, "plus");
  auto minus = build_extraspecial(2, 2, "minus");
  EXPECT_EQ(order_statistics(plus).at(2), 19u);
  EXPECT_EQ(order_statistics(minus).at(2), 11u);
}

TEST(Named, Quaternion) {
  auto Q = build_named("quaternion8");
  EXPECT_EQ(order_statistics(Q).at(2), 1u);
  EXPECT_EQ(order_statistics(Q).at(4), 6u);
  EXPECT_EQ(center(Q).count(), 2u);
}

TEST(Orders, Profiles) {
  EXPECT_EQ(order_profile(build_linear(LinearKind::PSL, 3, 3)), (std::set<std::uint32_t>{1, 2, 3, 4, 6, 8, 13}));
  const auto sz = order_profile(build_suzuki(1));
  for (auto o : sz) EXPECT_TRUE(std::set<std::uint32_t>({1, 2, 4, 5, 7, 13}).contains(o)) << o;
  EXPECT_EQ(order_profile(build_named("alternating(5)")), (std::set<std::uint32_t>{1, 2, 3, 5}));
}

TEST(Orders, Solvability) {
  EXPECT_TRUE(is_solvable(build_named("symmetric(4)")));
  EXPECT_FALSE(is_solvable(build_named("alternating(5)")));
  EXPECT_TRUE(is_solvable(build_linear(LinearKind::SL, 2, 3)));
  EXPECT_FALSE(is_solvable(build_linear(LinearKind::SL, 2, 5)));
  EXPECT_TRUE(is_solvable(build_extraspecial(3, 2)));
}

TEST(Sylow, Counts) {
  auto P7 = build_linear(LinearKind::PSL, 2, 7);
  EXPECT_EQ(sylow_count_cyclic(P7, 7), 8u);
  EXPECT_EQ(sylow_count(P7, 7), 8u);
  EXPECT_EQ(sylow_count(P7, 2), 21u);
  EXPECT_EQ(sylow_count_cyclic(build_linear(LinearKind::PSL, 3, 3), 13), 144u);
  auto A5 = build_named("alternating(5)");
  EXPECT_EQ(sylow_count_cyclic(A5, 5), 6u);
  EXPECT_EQ(sylow_count(A5, 2), 5u);
  EXPECT_EQ(sylow_count(build_named("symmetric(4)"), 3), 4u);
  EXPECT_EQ(sylow_count(build_suzuki(1), 2), 65u);
  EXPECT_THROW(sylow_count_cyclic(A5, 2), std::domain_error);
  EXPECT_THROW(sylow_count_cyclic(A5, 7), std::domain_error);
}

// Conjugates of the unipotent group P, the split torus D and a non-split
// torus I partition PGL(2,q) minus the identity.
TEST(Pgl2, PartitionByTori) {
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    auto G = build_linear(LinearKind::PGL, 2, q);
    Subset P(G.size()), D(G.size());
    for (std::uint32_t b = 0; b < q; ++b) P.set(mat_index(G, {1, static_cast<std::uint8_t>(b), 0, 1}));
    for (std::uint32_t a = 1; a < q; ++a) D.set(mat_index(G, {static_cast<std::uint8_t>(a), 0, 0, 1}));
    std::uint32_t singer = 0;
    for (std::uint32_t g = 0; g < G.size() && !singer; ++g)
      if (G.order(g) == q + 1) singer = g;
    ASSERT_NE(singer, 0u);
    const Subset I = subgroup_closure(G, {singer});
    ASSERT_TRUE(is_subgroup(G, P) && is_subgroup(G, D));
    ASSERT_EQ(P.count(), q);
    ASSERT_EQ(D.count(), q - 1);

    const auto cp = conjugates(G, P), cd = conjugates(G, D), ci = conjugates(G, I);
    EXPECT_EQ(cp.size(), q + 1) << q;
    EXPECT_EQ(cd.size(), q * (q + 1) / 2) << q;
    EXPECT_EQ(ci.size(), q * (q - 1) / 2) << q;
    std::vector<int> hits(G.size(), 0);
    for (const auto* family : {&cp, &cd, &ci})
      for (const auto& H : *family) H.for_each([&](std::size_t x) { ++hits[x]; });
    for (std::uint32_t g = 1; g < G.size(); ++g) EXPECT_EQ(hits[g], 1) << "q=" << q << " g=" << g;
  }
}

TEST(Pgl2, TorusCentralizers) {
  auto G = build_linear(LinearKind::PGL, 2, 7);
  const auto& f = G.rep().field();
  Subset D(G.size());
  for (std::uint32_t a = 1; a < 7; ++a) D.set(mat_index(G, {static_cast<std::uint8_t>(a), 0, 0, 1}));
  const auto inv = mat_index(G, {f.neg(1), 0, 0, 1});
  ASSERT_EQ(G.order(inv), 2u);
  D.for_each([&](std::size_t a) {
    const auto a32 = static_cast<std::uint32_t>(a);
    if (a32 == 0 || a32 == inv) return;
    EXPECT_EQ(centralizer(G, a32), D);
  });
  const auto& c = centralizer(G, inv);
  EXPECT_EQ(c.count(), 12u);
  EXPECT_FALSE(is_abelian(G, c));
  std::size_t involutions = 0, order6 = 0;
  c.for_each([&](std::size_t x) {
    involutions += G.order(static_cast<std::uint32_t>(x)) == 2;
    order6 += G.order(static_cast<std::uint32_t>(x)) == 6;
  });
  EXPECT_EQ(involutions, 7u);  // dihedral of order 12
  EXPECT_EQ(order6, 2u);
}
