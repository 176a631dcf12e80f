#pragma once

// Arithmetic in GF(p^n) over a fixed monic irreducible modulus. Elements are
// plain coefficient tuples so they compare and hash bit-exactly; FieldTable
// adds lookup tables on integer codes for the small fields the matrix groups
// run over.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncc {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Splits q = p^e with p prime; returns {0, 0} if q is not a prime power.
struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
};

inline PrimePower prime_power(std::uint64_t q) {
  if (q < 2) return {};
  std::uint64_t p = 2;
  while (q % p) ++p;
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return {};
  return {static_cast<std::uint32_t>(p), e};
}

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t n = 1;
  /// (c_{n-1}, ..., c_0) of the modulus x^n + c_{n-1}x^{n-1} + ... + c_0.
  std::vector<std::uint32_t> irreducible;

  [[nodiscard]] std::uint32_t order() const {
    std::uint32_t q = 1;
    for (std::uint32_t i = 0; i < n; ++i) q *= p;
    return q;
  }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct FieldElement {
  /// Little-endian coefficients in the generator x, each in [0, p).
  std::vector<std::uint32_t> coeffs;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

namespace detail {

using Poly = std::vector<std::uint32_t>;  // little-endian, no trailing zeros

inline void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    std::int64_t qt = r / nr;
    t -= qt * nt;
    std::swap(t, nt);
    r -= qt * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::domain_error("residue not invertible");
  return static_cast<std::uint32_t>((t % p + p) % p);
}

inline Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  poly_trim(a);
  const std::uint64_t lead_inv = mod_inverse(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t f = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - f * m[i] % p) % p);
    poly_trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  Poly out(acc.begin(), acc.end());
  poly_trim(out);
  return out;
}

inline Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  poly_trim(a);
  return a;
}

inline Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = poly_mod(poly_mul(result, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

/// Irreducibility over Z_p: no factor of degree d <= n/2, i.e. gcd(f, x^{p^d} - x) = 1.
inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  Poly h{0, 1};
  for (std::size_t d = 1; d <= n / 2; ++d) {
    h = poly_powmod(h, p, f, p);
    Poly g = poly_gcd(f, poly_sub(h, Poly{0, 1}, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

inline Poly modulus_poly(const FieldSpec& spec) {
  Poly m(spec.n + 1, 0);
  for (std::uint32_t i = 0; i < spec.n; ++i) m[i] = spec.irreducible[spec.n - 1 - i];
  m[spec.n] = 1;
  return m;
}

inline void check_element(const FieldSpec& spec, const FieldElement& a) {
  if (a.coeffs.size() != spec.n) throw std::invalid_argument("field element does not match field spec");
  for (auto c : a.coeffs)
    if (c >= spec.p) throw std::invalid_argument("field element coefficient out of range");
}

}  // namespace detail

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// Lexicographically least monic irreducible of degree n over Z_p.
inline FieldSpec ff_make_spec(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (n < 1 || n > 16) throw std::invalid_argument("extension degree out of range [1, 16]");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) throw std::invalid_argument("field order exceeds 2^16");
  }
  for (std::uint64_t t = 0; t < q; ++t) {
    std::vector<std::uint32_t> tuple(n);
    std::uint64_t r = t;
    for (std::uint32_t i = 0; i < n; ++i) {
      tuple[n - 1 - i] = static_cast<std::uint32_t>(r % p);
      r /= p;
    }
    FieldSpec spec{p, n, tuple};
    if (detail::is_irreducible(detail::modulus_poly(spec), p)) return spec;
  }
  throw std::logic_error("no irreducible polynomial found");
}

inline FieldElement ff_zero(const FieldSpec& spec) { return {std::vector<std::uint32_t>(spec.n, 0)}; }
inline FieldElement ff_one(const FieldSpec& spec) {
  auto e = ff_zero(spec);
  e.coeffs[0] = 1;
  return e;
}
/// The class of x. In a prime field the modulus is x itself, so this is 0.
inline FieldElement ff_generator(const FieldSpec& spec) {
  auto e = ff_zero(spec);
  if (spec.n > 1)
    e.coeffs[1] = 1;
  else
    e.coeffs[0] = (spec.p - spec.irreducible[0]) % spec.p;
  return e;
}

inline bool ff_is_zero(const FieldElement& a) {
  for (auto c : a.coeffs)
    if (c) return false;
  return true;
}

inline FieldElement ff_from_poly(const FieldSpec& spec, detail::Poly poly) {
  poly = detail::poly_mod(std::move(poly), detail::modulus_poly(spec), spec.p);
  FieldElement out = ff_zero(spec);
  for (std::size_t i = 0; i < poly.size(); ++i) out.coeffs[i] = poly[i];
  return out;
}

inline FieldElement ff_add(const FieldSpec& spec, const FieldElement& a, const FieldElement& b) {
  detail::check_element(spec, a);
  detail::check_element(spec, b);
  FieldElement out = a;
  for (std::uint32_t i = 0; i < spec.n; ++i) out.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % spec.p;
  return out;
}

inline FieldElement ff_neg(const FieldSpec& spec, const FieldElement& a) {
  detail::check_element(spec, a);
  FieldElement out = a;
  for (auto& c : out.coeffs) c = (spec.p - c) % spec.p;
  return out;
}

inline FieldElement ff_sub(const FieldSpec& spec, const FieldElement& a, const FieldElement& b) {
  return ff_add(spec, a, ff_neg(spec, b));
}

inline FieldElement ff_mul(const FieldSpec& spec, const FieldElement& a, const FieldElement& b) {
  detail::check_element(spec, a);
  detail::check_element(spec, b);
  detail::Poly pa(a.coeffs), pb(b.coeffs);
  detail::poly_trim(pa);
  detail::poly_trim(pb);
  return ff_from_poly(spec, detail::poly_mul(pa, pb, spec.p));
}

inline FieldElement ff_pow(const FieldSpec& spec, FieldElement a, std::uint64_t e) {
  FieldElement result = ff_one(spec);
  while (e) {
    if (e & 1) result = ff_mul(spec, result, a);
    a = ff_mul(spec, a, a);
    e >>= 1;
  }
  return result;
}

inline FieldElement ff_inv(const FieldSpec& spec, const FieldElement& a) {
  detail::check_element(spec, a);
  if (ff_is_zero(a)) throw std::domain_error("zero has no multiplicative inverse");
  return ff_pow(spec, a, spec.order() - 2);
}

inline FieldElement ff_frobenius(const FieldSpec& spec, const FieldElement& a) { return ff_pow(spec, a, spec.p); }

/// x -> x^{2^{m+1}} on GF(2^{2m+1}); applying it twice squares.
inline FieldElement suzuki_theta(const FieldSpec& spec, const FieldElement& a, std::uint32_t m) {
  if (spec.p != 2 || m < 1 || spec.n != 2 * m + 1)
    throw std::domain_error("suzuki_theta needs GF(2^(2m+1)) with m >= 1");
  FieldElement out = a;
  for (std::uint32_t i = 0; i <= m; ++i) out = ff_mul(spec, out, out);
  return out;
}

/// Integer code sum c_i p^i, in [0, q).
inline std::uint32_t ff_encode(const FieldSpec& spec, const FieldElement& a) {
  std::uint32_t code = 0;
  for (std::uint32_t i = spec.n; i-- > 0;) code = code * spec.p + a.coeffs[i];
  return code;
}

inline FieldElement ff_decode(const FieldSpec& spec, std::uint32_t code) {
  if (code >= spec.order()) throw std::invalid_argument("field code out of range");
  FieldElement out = ff_zero(spec);
  for (std::uint32_t i = 0; i < spec.n; ++i) {
    out.coeffs[i] = code % spec.p;
    code /= spec.p;
  }
  return out;
}

/// Lookup tables over integer codes for fields of order at most 256.
class FieldTable {
 public:
  using code = std::uint8_t;
  static constexpr std::uint32_t kMaxOrder = 256;

  FieldTable() = default;
  explicit FieldTable(FieldSpec spec) : spec_(std::move(spec)), q_(spec_.order()) {
    if (q_ > kMaxOrder) throw std::invalid_argument("field too large for lookup tables");
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.resize(q_, 0);
    std::vector<FieldElement> el;
    el.reserve(q_);
    for (std::uint32_t c = 0; c < q_; ++c) el.push_back(ff_decode(spec_, c));
    for (std::uint32_t a = 0; a < q_; ++a) {
      neg_[a] = static_cast<code>(ff_encode(spec_, ff_neg(spec_, el[a])));
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_[a * q_ + b] = static_cast<code>(ff_encode(spec_, ff_add(spec_, el[a], el[b])));
        mul_[a * q_ + b] = static_cast<code>(ff_encode(spec_, ff_mul(spec_, el[a], el[b])));
      }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
      for (std::uint32_t b = 1; b < q_; ++b)
        if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<code>(b);
    for (std::uint32_t a = 1; a < q_ && !primitive_; ++a) {
      std::uint32_t x = a, k = 1;
      while (x != 1) {
        x = mul_[x * q_ + a];
        ++k;
      }
      if (k == q_ - 1) primitive_ = static_cast<code>(a);
    }
    if (q_ == 2) primitive_ = 1;
  }

  [[nodiscard]] const FieldSpec& spec() const noexcept { return spec_; }
  [[nodiscard]] std::uint32_t order() const noexcept { return q_; }
  [[nodiscard]] code add(code a, code b) const noexcept { return add_[a * q_ + b]; }
  [[nodiscard]] code sub(code a, code b) const noexcept { return add_[a * q_ + neg_[b]]; }
  [[nodiscard]] code mul(code a, code b) const noexcept { return mul_[a * q_ + b]; }
  [[nodiscard]] code neg(code a) const noexcept { return neg_[a]; }
  [[nodiscard]] code inv(code a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative inverse");
    return inv_[a];
  }
  [[nodiscard]] code pow(code a, std::uint64_t e) const noexcept {
    code r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// A generator of the multiplicative group.
  [[nodiscard]] code primitive() const noexcept { return primitive_; }

 private:
  FieldSpec spec_;
  std::uint32_t q_ = 0;
  std::vector<code> add_, mul_, neg_, inv_;
  code primitive_ = 0;
};

}  // namespace ncc
