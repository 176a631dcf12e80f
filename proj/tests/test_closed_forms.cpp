#include <gtest/gtest.h>

#include "ncclique/builders.hpp"
#include "ncclique/closed_forms.hpp"

using namespace ncc;

TEST(Pgl2Formula, Values) {
  EXPECT_EQ(omega_pgl2_formula(2), 4);
  EXPECT_EQ(omega_pgl2_formula(3), 10);
  EXPECT_EQ(omega_pgl2_formula(5), 31);
  EXPECT_EQ(omega_pgl2_formula(7), 57);
  EXPECT_EQ(omega_pgl2_formula(8192), BigInt(8192) * 8192 + 8192 + 1);
  EXPECT_THROW(omega_pgl2_formula(6), std::invalid_argument);
  EXPECT_THROW(omega_pgl2_formula(1), std::invalid_argument);
}

TEST(Psl2Formula, Values) {
  EXPECT_EQ(omega_psl2_formula(2), 4);
  EXPECT_EQ(omega_psl2_formula(3), 5);
  EXPECT_EQ(omega_psl2_formula(4), 21);
  EXPECT_EQ(omega_psl2_formula(5), 21);
  EXPECT_EQ(omega_psl2_formula(7), 57);
  EXPECT_EQ(omega_psl2_formula(11), 133);
  EXPECT_THROW(omega_psl2_formula(10), std::invalid_argument);
}

TEST(SuzukiFormula, Terms) {
  auto t = suzuki_terms(1);
  EXPECT_EQ(t.q, 8);
  EXPECT_EQ(t.r, 2);
  EXPECT_EQ(t.sylow_part, 455);
  EXPECT_EQ(t.split_torus, 2080);
  EXPECT_EQ(t.plus_torus, 560);
  EXPECT_EQ(t.minus_torus, 1456);
  EXPECT_EQ(omega_suzuki_formula(1), 4551);
  // q = 32, r = 4: 1025*31 + 1024*1025/2 + |G|/(4*41) + |G|/(4*25)
  const BigInt order = BigInt(1024) * 1025 * 31;
  EXPECT_EQ(omega_suzuki_formula(2), BigInt(1025) * 31 + BigInt(1024) * 1025 / 2 + order / 164 + order / 100);
  EXPECT_EQ(omega_suzuki_formula(2), 1080351);
  EXPECT_THROW(suzuki_terms(0), std::invalid_argument);
}

TEST(SuzukiFormula, Divisibility) {
  for (std::uint32_t m = 1; m <= 6; ++m) {
    const BigInt q = BigInt(1) << (2 * m + 1), r = BigInt(1) << m;
    const BigInt order = q * q * (q * q + 1) * (q - 1);
    EXPECT_EQ(order % (4 * (q + 2 * r + 1)), 0) << m;
    EXPECT_EQ(order % (4 * (q - 2 * r + 1)), 0) << m;
    EXPECT_NO_THROW(suzuki_terms(m));
  }
}

TEST(Extraspecial, Even) {
  EXPECT_EQ(extraspecial_omega_even(1), 3);
  EXPECT_EQ(extraspecial_omega_even(2), 5);
  EXPECT_EQ(extraspecial_omega_even(3), 7);
  EXPECT_THROW(extraspecial_omega_even(0), std::invalid_argument);
}

TEST(Extraspecial, OddBounds) {
  auto b0 = extraspecial_bounds_odd(5, 0);
  EXPECT_EQ(b0.lower, 6);
  EXPECT_EQ(b0.upper, 6);
  auto b1 = extraspecial_bounds_odd(3, 1);
  EXPECT_EQ(b1.lower, 4);
  EXPECT_EQ(b1.upper, 4);
  auto b2 = extraspecial_bounds_odd(3, 2);
  EXPECT_EQ(b2.lower, 7);
  EXPECT_EQ(b2.upper, 10);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u})
    for (std::uint32_t n = 0; n < 8; ++n) {
      auto b = extraspecial_bounds_odd(p, n);
      EXPECT_LE(b.lower, b.upper) << p << " " << n;
    }
  EXPECT_THROW(extraspecial_bounds_odd(2, 1), std::invalid_argument);
  EXPECT_THROW(extraspecial_bounds_odd(9, 1), std::invalid_argument);
}

TEST(Partitions, Pgl2) {
  auto pc = pgl2_partition_counts(7);
  EXPECT_EQ(pc.part("P").count, 8);
  EXPECT_EQ(pc.part("D").count, 28);
  EXPECT_EQ(pc.part("I").count, 21);
  EXPECT_EQ(pc.group_order, 336);
  EXPECT_TRUE(pc.identity_holds());
  EXPECT_THROW((void)pc.part("X"), std::out_of_range);
  EXPECT_THROW(pgl2_partition_counts(12), std::invalid_argument);
}

TEST(Partitions, Suzuki) {
  auto pc = suzuki_partition_counts(1);
  EXPECT_EQ(pc.part("F").count, 65);
  EXPECT_EQ(pc.part("A").count, 2080);
  EXPECT_EQ(pc.part("B").count, 1456);
  EXPECT_EQ(pc.part("C").count, 560);
  EXPECT_EQ(pc.part("B").order, 5);
  EXPECT_EQ(pc.part("C").order, 13);
  EXPECT_EQ(pc.group_order, 29120);
  EXPECT_TRUE(pc.identity_holds());
}

TEST(Partitions, IdentityUpTo8192) {
  for (std::uint64_t q = 2; q <= 8192; ++q)
    if (prime_power(q).p) {
      ASSERT_TRUE(pgl2_partition_counts(q).identity_holds()) << q;
    }
  for (std::uint32_t m = 1; m <= 6; ++m) EXPECT_TRUE(suzuki_partition_counts(m).identity_holds()) << m;
}

TEST(Lookup, ClosedFormFor) {
  auto psl = closed_form_for(linear_setup(LinearKind::PSL, 2, 7).meta);
  ASSERT_TRUE(psl);
  EXPECT_TRUE(psl->exact());
  EXPECT_EQ(psl->lower, 57u);
  auto odd = closed_form_for(extraspecial_setup(3, 3, "plus").meta);
  ASSERT_TRUE(odd);
  EXPECT_EQ(odd->lower, 7u);
  EXPECT_EQ(odd->upper, 10u);
  EXPECT_TRUE(odd->admits(8));
  EXPECT_FALSE(odd->admits(13));
  EXPECT_EQ(closed_form_for(extraspecial_setup(2, 3, "minus").meta)->lower, 7u);
  EXPECT_EQ(closed_form_for(suzuki_setup(1).meta)->lower, 4551u);
  EXPECT_FALSE(closed_form_for(linear_setup(LinearKind::PSL, 3, 3).meta));
  EXPECT_FALSE(closed_form_for(linear_setup(LinearKind::SL, 2, 5).meta));
  EXPECT_FALSE(closed_form_for(named_setup("symmetric(4)").meta));
}
