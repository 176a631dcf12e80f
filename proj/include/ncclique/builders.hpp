#pragma once

// Constructors for the group families: linear groups over GF(q), Suzuki
// groups, extra-special p-groups and a few small permutation groups. Each
// family has a "setup" (carrier + generators + metadata + known order) so the
// cache loader can rebuild the carrier without re-enumerating.

#include <cstdint>
#include <memory>
#include <numeric>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncclique/finite_field.hpp"
#include "ncclique/group.hpp"
#include "ncclique/reps.hpp"

namespace ncc {

using LinearGroup = GroupTable<MatrixRep>;
using ExtraspecialGroup = GroupTable<ExtraspecialRep>;
using PermGroup = GroupTable<PermutationRep>;

inline constexpr std::size_t kDefaultOrderCap = std::size_t{1} << 20;

template <GroupRep R>
struct GroupSetup {
  R rep;
  std::vector<typename R::element_type> generators;
  GroupMeta meta;
  std::uint64_t expected_order = 0;
};

/// Enumerates a setup and checks the result against the known order.
template <GroupRep R>
GroupTable<R> enumerate(const GroupSetup<R>& s, std::size_t cap = kDefaultOrderCap) {
  if (s.expected_order > cap)
    throw std::length_error(s.meta.label + " has order " + std::to_string(s.expected_order) + ", above the cap");
  auto g = GroupTable<R>::closure(s.rep, s.generators, s.meta, static_cast<std::size_t>(s.expected_order));
  if (g.size() != s.expected_order)
    throw std::logic_error(s.meta.label + ": closure gave " + std::to_string(g.size()) + " elements, expected " +
                           std::to_string(s.expected_order));
  return g;
}

enum class LinearKind { GL, SL, PGL, PSL };

inline std::uint64_t linear_group_order(LinearKind kind, std::uint32_t n, std::uint64_t q) {
  std::uint64_t qn = 1;
  for (std::uint32_t i = 0; i < n; ++i) qn *= q;
  std::uint64_t gl = 1, qi = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    gl *= qn - qi;
    qi *= q;
  }
  switch (kind) {
    case LinearKind::GL: return gl;
    case LinearKind::SL:
    case LinearKind::PGL: return gl / (q - 1);
    case LinearKind::PSL: return gl / (q - 1) / std::gcd<std::uint64_t>(n, q - 1);
  }
  return 0;
}

inline GroupSetup<MatrixRep> linear_setup(LinearKind kind, std::uint32_t n, std::uint32_t q) {
  if (n != 2 && n != 3) throw std::invalid_argument("matrix degree must be 2 or 3");
  const auto pp = prime_power(q);
  if (pp.p == 0) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if (q > FieldTable::kMaxOrder) throw std::invalid_argument("field order above 256");
  auto field = std::make_shared<const FieldTable>(ff_make_spec(pp.p, pp.e));
  const bool projective = kind == LinearKind::PGL || kind == LinearKind::PSL;
  MatrixRep rep(field, n, projective);

  std::vector<Matrix> gens;
  std::uint32_t basis = 1;  // code of x^i is p^i
  for (std::uint32_t b = 0; b < pp.e; ++b, basis *= pp.p)
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        if (i == j) continue;
        Matrix t = rep.identity();
        t.e[i * n + j] = static_cast<std::uint8_t>(basis);
        gens.push_back(rep.normalize(t));
      }
  if ((kind == LinearKind::GL || kind == LinearKind::PGL) && q > 2) {
    Matrix d = rep.identity();
    d.e[0] = field->primitive();
    gens.push_back(rep.normalize(d));
  }

  static constexpr const char* names[] = {"GL", "SL", "PGL", "PSL"};
  GroupMeta meta;
  meta.family = static_cast<Family>(static_cast<int>(kind));
  meta.q = q;
  meta.n = n;
  meta.p = pp.p;
  meta.k = std::gcd(q - 1, 2u);
  meta.label = std::string(names[static_cast<int>(kind)]) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
  return {std::move(rep), std::move(gens), std::move(meta), linear_group_order(kind, n, q)};
}

inline LinearGroup build_linear(LinearKind kind, std::uint32_t n, std::uint32_t q) {
  if (n != 2 && n != 3) throw std::invalid_argument("matrix degree must be 2 or 3");
  if (prime_power(q).p == 0) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if (linear_group_order(kind, n, q) > kDefaultOrderCap) throw std::length_error("order cap exceeded");
  return enumerate(linear_setup(kind, n, q));
}

inline std::uint64_t suzuki_order(std::uint32_t m) {
  const std::uint64_t q = std::uint64_t{1} << (2 * m + 1);
  return q * q * (q * q + 1) * (q - 1);
}

/// Sz(q), q = 2^{2m+1}, as 4x4 matrices: the unipotent S(a,b), the torus
/// element M(k) and the antidiagonal involution T.
inline GroupSetup<MatrixRep> suzuki_setup(std::uint32_t m) {
  if (m < 1 || m > 2) throw std::invalid_argument("Suzuki parameter m must be 1 or 2");
  const std::uint32_t e = 2 * m + 1;
  auto field = std::make_shared<const FieldTable>(ff_make_spec(2, e));
  const FieldTable& f = *field;
  MatrixRep rep(field, 4, false);
  const std::uint64_t theta_exp = std::uint64_t{1} << (m + 1);
  const std::uint64_t r = std::uint64_t{1} << m;
  auto theta = [&](std::uint8_t a) { return f.pow(a, theta_exp); };
  auto S = [&](std::uint8_t a, std::uint8_t b) {
    Matrix x = rep.identity();
    x.e[1 * 4 + 0] = a;
    x.e[2 * 4 + 0] = b;
    x.e[2 * 4 + 1] = theta(a);
    x.e[3 * 4 + 0] = f.add(f.add(f.mul(f.mul(a, a), theta(a)), f.mul(a, b)), theta(b));
    x.e[3 * 4 + 1] = f.add(f.mul(a, theta(a)), b);
    x.e[3 * 4 + 2] = a;
    return x;
  };
  std::vector<Matrix> gens;
  for (std::uint32_t i = 0, basis = 1; i < e; ++i, basis *= 2) {
    gens.push_back(S(static_cast<std::uint8_t>(basis), 0));
    gens.push_back(S(0, static_cast<std::uint8_t>(basis)));
  }
  const auto k = f.primitive();
  const auto kinv = f.inv(k);
  Matrix M;
  M.e[0] = f.pow(k, 1 + r);
  M.e[5] = f.pow(k, r);
  M.e[10] = f.pow(kinv, r);
  M.e[15] = f.pow(kinv, 1 + r);
  gens.push_back(M);
  Matrix T;
  T.e[3] = T.e[6] = T.e[9] = T.e[12] = 1;
  gens.push_back(T);

  GroupMeta meta;
  meta.family = Family::Suzuki;
  meta.q = 1u << e;
  meta.m = m;
  meta.p = 2;
  meta.n = 4;
  meta.k = 1;
  meta.label = "Sz(" + std::to_string(meta.q) + ")";
  return {std::move(rep), std::move(gens), std::move(meta), suzuki_order(m)};
}

/// m = 1 builds Sz(8). m = 2 (order about 3.3e7) needs allow_big_memory.
inline LinearGroup build_suzuki(std::uint32_t m, bool allow_big_memory = false) {
  auto s = suzuki_setup(m);
  if (m >= 2 && !allow_big_memory) throw std::length_error("Sz(32) needs the large-memory flag");
  return enumerate(s, allow_big_memory ? static_cast<std::size_t>(s.expected_order) : kDefaultOrderCap);
}

inline GroupSetup<ExtraspecialRep> extraspecial_setup(std::uint32_t p, std::uint32_t n, const std::string& form) {
  if (form != "plus" && form != "minus") throw std::invalid_argument("form must be plus or minus");
  ExtraspecialRep rep(p, n, form == "minus");
  std::uint64_t order = p;
  for (std::uint32_t i = 0; i < 2 * n; ++i) {
    order *= p;
    if (order > (1u << 18)) throw std::length_error("extra-special group above 2^18 elements");
  }
  std::vector<ExtraspecialElement> gens;
  for (std::uint32_t i = 0; i < 2 * n; ++i) {
    ExtraspecialElement x;
    x.v[i] = 1;
    gens.push_back(x);
  }
  GroupMeta meta;
  meta.family = Family::Extraspecial;
  meta.p = p;
  meta.n = n;
  meta.form = form;
  meta.label = "extraspecial(" + std::to_string(p) + "^" + std::to_string(2 * n + 1) + "," + form + ")";
  return {std::move(rep), std::move(gens), std::move(meta), order};
}

inline ExtraspecialGroup build_extraspecial(std::uint32_t p, std::uint32_t n, const std::string& form = "plus") {
  return enumerate(extraspecial_setup(p, n, form));
}

namespace detail {
inline Permutation cycle_perm(std::uint32_t degree, const std::vector<std::uint16_t>& cycle) {
  Permutation x(degree);
  for (std::uint32_t i = 0; i < degree; ++i) x[i] = static_cast<std::uint16_t>(i);
  for (std::size_t i = 0; i < cycle.size(); ++i) x[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return x;
}
}  // namespace detail

inline constexpr std::uint64_t kNamedOrderCap = 10000;

/// name: dihedral(k) (order 2k), symmetric(k), alternating(k), quaternion8.
inline GroupSetup<PermutationRep> named_setup(const std::string& name) {
  static const std::regex pattern(R"((dihedral|symmetric|alternating)\((\d+)\)|quaternion8)");
  std::smatch match;
  if (!std::regex_match(name, match, pattern)) throw std::invalid_argument("unknown named group '" + name + "'");
  GroupMeta meta;
  meta.family = Family::Named;
  meta.name = name;
  meta.label = name;
  if (name == "quaternion8") {
    // Regular representation: point 2u+s is (-1)^s times unit u in {1,i,j,k}.
    static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    auto left = [&](int u) {
      Permutation x(8);
      for (int pt = 0; pt < 8; ++pt) {
        const int v = pt / 2, s = pt % 2;
        x[pt] = static_cast<std::uint16_t>(2 * unit[u][v] + (s ^ sign[u][v]));
      }
      return x;
    };
    return {PermutationRep(8), {left(1), left(2)}, std::move(meta), 8};
  }
  const std::string kind = match[1];
  const std::uint64_t k = std::stoull(match[2]);
  if (kind == "dihedral") {
    if (k < 1 || 2 * k > kNamedOrderCap) throw std::length_error("dihedral group above the order cap");
    // k <= 2 is not faithful on k points; two spare points swapped by s fix that
    const auto deg = static_cast<std::uint32_t>(k < 3 ? k + 2 : k);
    std::vector<std::uint16_t> rot(k);
    for (std::uint32_t i = 0; i < k; ++i) rot[i] = static_cast<std::uint16_t>(i);
    Permutation s(deg);
    for (std::uint32_t i = 0; i < k; ++i) s[i] = static_cast<std::uint16_t>((k - i) % k);
    if (k < 3) {
      s[k] = static_cast<std::uint16_t>(k + 1);
      s[k + 1] = static_cast<std::uint16_t>(k);
    }
    return {PermutationRep(deg), {detail::cycle_perm(deg, rot), s}, std::move(meta), 2 * k};
  }
  if (k < 1 || k > 12) throw std::length_error(kind + " group above the order cap");
  std::uint64_t order = 1;
  for (std::uint64_t i = 2; i <= k; ++i) order *= i;
  if (kind == "alternating" && k >= 2) order /= 2;
  if (order > kNamedOrderCap) throw std::length_error(name + " above the order cap");
  const auto deg = static_cast<std::uint32_t>(k);
  std::vector<Permutation> gens;
  if (kind == "symmetric" && k >= 2) {
    std::vector<std::uint16_t> all(k);
    for (std::uint32_t i = 0; i < k; ++i) all[i] = static_cast<std::uint16_t>(i);
    gens.push_back(detail::cycle_perm(deg, {0, 1}));
    gens.push_back(detail::cycle_perm(deg, all));
  } else if (kind == "alternating") {
    for (std::uint16_t i = 2; i < k; ++i) gens.push_back(detail::cycle_perm(deg, {0, 1, i}));
  }
  return {PermutationRep(deg), std::move(gens), std::move(meta), order};
}

inline PermGroup build_named(const std::string& name) { return enumerate(named_setup(name)); }

}  // namespace ncc
