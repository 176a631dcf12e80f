#pragma once

// Closed-form clique numbers and partition data, evaluated in exact integer
// arithmetic. These are cross-checks for computed certificates only.

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ncclique/finite_field.hpp"
#include "ncclique/group.hpp"

namespace ncc {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {
inline void require_prime_power(const BigInt& q) {
  if (q < 2 || q > BigInt(std::numeric_limits<std::uint64_t>::max()) ||
      prime_power(static_cast<std::uint64_t>(q)).p == 0)
    throw std::invalid_argument("q must be a prime power");
}
}  // namespace detail

/// omega(A_PGL(2,q)): 4 for q = 2, 10 for q = 3, q^2+q+1 otherwise.
inline BigInt omega_pgl2_formula(const BigInt& q) {
  detail::require_prime_power(q);
  if (q == 2) return 4;
  if (q == 3) return 10;
  return q * q + q + 1;
}

/// omega(A_PSL(2,q)) with the small cases PSL(2,2) = S3, PSL(2,3) = A4 and
/// PSL(2,4) = PSL(2,5) = A5 fixed explicitly.
inline BigInt omega_psl2_formula(const BigInt& q) {
  detail::require_prime_power(q);
  if (q == 2) return 4;
  if (q == 3) return 5;
  if (q == 4 || q == 5) return 21;
  return q * q + q + 1;
}

struct SuzukiTerms {
  BigInt q, r;
  BigInt sylow_part;  ///< (q^2+1)(q-1)
  BigInt split_torus;  ///< q^2(q^2+1)/2
  BigInt plus_torus;  ///< q^2(q^2+1)(q-1) / 4(q+2r+1)
  BigInt minus_torus;  ///< q^2(q^2+1)(q-1) / 4(q-2r+1)
  [[nodiscard]] BigInt total() const { return sylow_part + split_torus + plus_torus + minus_torus; }
};

/// Each quotient is checked to be exact.
inline SuzukiTerms suzuki_terms(std::uint32_t m) {
  if (m < 1) throw std::invalid_argument("Suzuki parameter m must be at least 1");
  SuzukiTerms t;
  t.q = BigInt(1) << (2 * m + 1);
  t.r = BigInt(1) << m;
  const BigInt& q = t.q;
  const BigInt& r = t.r;
  const BigInt order = q * q * (q * q + 1) * (q - 1);
  auto exact_div = [](const BigInt& a, const BigInt& b) {
    if (a % b != 0) throw std::logic_error("Suzuki term is not integral");
    return a / b;
  };
  t.sylow_part = (q * q + 1) * (q - 1);
  t.split_torus = exact_div(q * q * (q * q + 1), 2);
  t.plus_torus = exact_div(order, 4 * (q + 2 * r + 1));
  t.minus_torus = exact_div(order, 4 * (q - 2 * r + 1));
  return t;
}

inline BigInt omega_suzuki_formula(std::uint32_t m) { return suzuki_terms(m).total(); }

/// Extra-special 2-group of order 2^{2m+1}: 2m+1.
inline BigInt extraspecial_omega_even(std::uint32_t m) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  return BigInt(2) * m + 1;
}

struct Bounds {
  BigInt lower, upper;
};

/// Odd p, extra-special group G_{n+1} of order p^{2n+3}: n = 0 gives the
/// exact value p+1 for order p^3; otherwise np+1 <= omega <= (p(p-1)^n - 2)/(p-2).
inline Bounds extraspecial_bounds_odd(std::uint32_t p, std::uint32_t n) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (n == 0) return {BigInt(p) + 1, BigInt(p) + 1};
  BigInt pw = 1;
  for (std::uint32_t i = 0; i < n; ++i) pw *= (p - 1);
  const BigInt num = BigInt(p) * pw - 2;
  return {BigInt(n) * p + 1, num / (p - 2)};
}

struct PartitionPart {
  std::string name;
  BigInt order;  ///< subgroup order
  BigInt count;  ///< number of conjugates
};

struct PartitionCounts {
  std::vector<PartitionPart> parts;
  BigInt group_order;
  /// sum count*(order-1) == |G| - 1
  [[nodiscard]] bool identity_holds() const {
    BigInt s = 0;
    for (const auto& p : parts) s += p.count * (p.order - 1);
    return s == group_order - 1;
  }
  [[nodiscard]] const PartitionPart& part(const std::string& name) const {
    for (const auto& p : parts)
      if (p.name == name) return p;
    throw std::out_of_range("no partition part " + name);
  }
};

/// PGL(2,q): Sylow P (order q, q+1 conjugates), split torus D (q-1,
/// q(q+1)/2), non-split torus I (q+1, q(q-1)/2).
inline PartitionCounts pgl2_partition_counts(const BigInt& q) {
  detail::require_prime_power(q);
  PartitionCounts pc;
  pc.group_order = q * (q * q - 1);
  pc.parts = {{"P", q, q + 1}, {"D", q - 1, q * (q + 1) / 2}, {"I", q + 1, q * (q - 1) / 2}};
  return pc;
}

/// Sz(q): Sylow F (q^2, delta), tori A (q-1, gamma), B (q-2r+1, beta),
/// C (q+2r+1, alpha).
inline PartitionCounts suzuki_partition_counts(std::uint32_t m) {
  const auto t = suzuki_terms(m);
  const BigInt& q = t.q;
  const BigInt& r = t.r;
  PartitionCounts pc;
  pc.group_order = q * q * (q * q + 1) * (q - 1);
  pc.parts = {{"F", q * q, q * q + 1},
              {"A", q - 1, t.split_torus},
              {"B", q - 2 * r + 1, t.minus_torus},
              {"C", q + 2 * r + 1, t.plus_torus}};
  return pc;
}

/// Expected clique number (exact when lower == upper) for a group's metadata,
/// when a closed form covers its family.
struct FormulaValue {
  std::uint64_t lower = 0, upper = 0;
  std::string source;
  [[nodiscard]] bool exact() const noexcept { return lower == upper; }
  [[nodiscard]] bool admits(std::uint64_t omega) const noexcept { return lower <= omega && omega <= upper; }
};

inline std::optional<FormulaValue> closed_form_for(const GroupMeta& meta) {
  auto val = [](const BigInt& x) { return static_cast<std::uint64_t>(x); };
  switch (meta.family) {
    case Family::PSL:
      if (meta.n == 2) {
        const auto v = val(omega_psl2_formula(meta.q));
        return FormulaValue{v, v, "omega_psl2_formula"};
      }
      return std::nullopt;
    case Family::PGL:
      if (meta.n == 2) {
        const auto v = val(omega_pgl2_formula(meta.q));
        return FormulaValue{v, v, "omega_pgl2_formula"};
      }
      return std::nullopt;
    case Family::Suzuki: {
      const auto v = val(omega_suzuki_formula(meta.m));
      return FormulaValue{v, v, "omega_suzuki_formula"};
    }
    case Family::Extraspecial:
      if (meta.p == 2) {
        const auto v = val(extraspecial_omega_even(meta.n));
        return FormulaValue{v, v, "extraspecial_omega_even"};
      } else {
        const auto b = extraspecial_bounds_odd(meta.p, meta.n - 1);
        return FormulaValue{val(b.lower), val(b.upper), "extraspecial_bounds_odd"};
      }
    default: return std::nullopt;
  }
}

}  // namespace ncc
