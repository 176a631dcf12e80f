#pragma once

// Element carriers for GroupTable.

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "ncclique/finite_field.hpp"

namespace ncc {

namespace detail {
template <class T>
std::size_t hash_bytes(const T* data, std::size_t count) noexcept {
  return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(data), count * sizeof(T)));
}
}  // namespace detail

/// Square matrix of field codes, row-major, at most 4x4. Unused entries are 0.
struct Matrix {
  std::array<std::uint8_t, 16> e{};
  friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// GL/SL over a small field; with `projective` set, elements are kept in the
/// canonical scalar class representative whose first nonzero entry is 1.
class MatrixRep {
 public:
  using element_type = Matrix;
  struct element_hash {
    std::size_t operator()(const Matrix& m) const noexcept { return detail::hash_bytes(m.e.data(), m.e.size()); }
  };

  MatrixRep(std::shared_ptr<const FieldTable> field, std::uint32_t dim, bool projective)
      : field_(std::move(field)), dim_(dim), projective_(projective) {
    if (dim_ < 1 || dim_ > 4) throw std::invalid_argument("matrix degree must be in [1, 4]");
  }

  [[nodiscard]] const FieldTable& field() const noexcept { return *field_; }
  [[nodiscard]] std::shared_ptr<const FieldTable> field_ptr() const noexcept { return field_; }
  [[nodiscard]] std::uint32_t dim() const noexcept { return dim_; }
  [[nodiscard]] bool projective() const noexcept { return projective_; }

  [[nodiscard]] std::uint8_t at(const Matrix& m, std::uint32_t r, std::uint32_t c) const noexcept {
    return m.e[r * dim_ + c];
  }

  [[nodiscard]] Matrix identity() const {
    Matrix m;
    for (std::uint32_t i = 0; i < dim_; ++i) m.e[i * dim_ + i] = 1;
    return m;
  }

  [[nodiscard]] Matrix normalize(Matrix m) const {
    if (!projective_) return m;
    for (std::uint32_t i = 0; i < dim_ * dim_; ++i) {
      if (m.e[i]) {
        const auto s = field_->inv(m.e[i]);
        for (std::uint32_t j = i; j < dim_ * dim_; ++j) m.e[j] = field_->mul(m.e[j], s);
        break;
      }
    }
    return m;
  }

  [[nodiscard]] Matrix multiply(const Matrix& a, const Matrix& b) const {
    Matrix c;
    for (std::uint32_t i = 0; i < dim_; ++i)
      for (std::uint32_t j = 0; j < dim_; ++j) c.e[i * dim_ + j] = entry(a, b, i, j);
    return normalize(c);
  }

  [[nodiscard]] Matrix inverse(const Matrix& a) const {
    const FieldTable& f = *field_;
    const std::uint32_t n = dim_;
    Matrix m = a, inv = identity();
    for (std::uint32_t col = 0; col < n; ++col) {
      std::uint32_t piv = col;
      while (piv < n && m.e[piv * n + col] == 0) ++piv;
      if (piv == n) throw std::domain_error("singular matrix");
      if (piv != col)
        for (std::uint32_t j = 0; j < n; ++j) {
          std::swap(m.e[piv * n + j], m.e[col * n + j]);
          std::swap(inv.e[piv * n + j], inv.e[col * n + j]);
        }
      const auto s = f.inv(m.e[col * n + col]);
      for (std::uint32_t j = 0; j < n; ++j) {
        m.e[col * n + j] = f.mul(m.e[col * n + j], s);
        inv.e[col * n + j] = f.mul(inv.e[col * n + j], s);
      }
      for (std::uint32_t r = 0; r < n; ++r) {
        if (r == col || m.e[r * n + col] == 0) continue;
        const auto t = m.e[r * n + col];
        for (std::uint32_t j = 0; j < n; ++j) {
          m.e[r * n + j] = f.sub(m.e[r * n + j], f.mul(t, m.e[col * n + j]));
          inv.e[r * n + j] = f.sub(inv.e[r * n + j], f.mul(t, inv.e[col * n + j]));
        }
      }
    }
    return normalize(inv);
  }

  [[nodiscard]] std::uint8_t determinant(const Matrix& a) const {
    const FieldTable& f = *field_;
    const std::uint32_t n = dim_;
    Matrix m = a;
    std::uint8_t det = 1;
    for (std::uint32_t col = 0; col < n; ++col) {
      std::uint32_t piv = col;
      while (piv < n && m.e[piv * n + col] == 0) ++piv;
      if (piv == n) return 0;
      if (piv != col) {
        for (std::uint32_t j = 0; j < n; ++j) std::swap(m.e[piv * n + j], m.e[col * n + j]);
        det = f.neg(det);
      }
      det = f.mul(det, m.e[col * n + col]);
      const auto s = f.inv(m.e[col * n + col]);
      for (std::uint32_t r = col + 1; r < n; ++r) {
        const auto t = f.mul(m.e[r * n + col], s);
        for (std::uint32_t j = col; j < n; ++j) m.e[r * n + j] = f.sub(m.e[r * n + j], f.mul(t, m.e[col * n + j]));
      }
    }
    return det;
  }

  /// ab == ba, or ab == lambda*ba for projective carriers. Exits at the first
  /// entry that disagrees.
  [[nodiscard]] bool commute(const Matrix& a, const Matrix& b) const {
    const FieldTable& f = *field_;
    std::uint8_t ratio = 0;
    for (std::uint32_t i = 0; i < dim_; ++i) {
      for (std::uint32_t j = 0; j < dim_; ++j) {
        const auto x = entry(a, b, i, j);
        const auto y = entry(b, a, i, j);
        if (!projective_) {
          if (x != y) return false;
          continue;
        }
        if ((x == 0) != (y == 0)) return false;
        if (x == 0) continue;
        if (ratio == 0)
          ratio = f.mul(x, f.inv(y));
        else if (x != f.mul(ratio, y))
          return false;
      }
    }
    return true;
  }

  [[nodiscard]] std::size_t encoded_size() const noexcept { return dim_ * dim_; }
  void encode(const Matrix& m, std::uint8_t* out) const { std::memcpy(out, m.e.data(), dim_ * dim_); }
  [[nodiscard]] Matrix decode(const std::uint8_t* in) const {
    Matrix m;
    std::memcpy(m.e.data(), in, dim_ * dim_);
    for (std::uint32_t i = 0; i < dim_ * dim_; ++i)
      if (m.e[i] >= field_->order()) throw std::invalid_argument("matrix entry out of field range");
    return m;
  }

 private:
  [[nodiscard]] std::uint8_t entry(const Matrix& a, const Matrix& b, std::uint32_t i, std::uint32_t j) const noexcept {
    std::uint8_t s = 0;
    for (std::uint32_t k = 0; k < dim_; ++k) s = field_->add(s, field_->mul(a.e[i * dim_ + k], b.e[k * dim_ + j]));
    return s;
  }

  std::shared_ptr<const FieldTable> field_;
  std::uint32_t dim_;
  bool projective_;
};

/// (v, z) with v in Z_p^{2n}, z in Z_p.
struct ExtraspecialElement {
  std::array<std::uint8_t, 16> v{};
  std::uint8_t z = 0;
  friend bool operator==(const ExtraspecialElement&, const ExtraspecialElement&) = default;
};

/// (u,z)(v,w) = (u+v, z+w+B(u,v)) with B(u,v) = sum_i u_{2i} v_{2i+1}. The
/// minus type (p = 2 only) adds u_0 v_0 + u_1 v_1, which makes every
/// non-central element of the first hyperbolic pair square to the central
/// involution; the commutator form is unchanged.
class ExtraspecialRep {
 public:
  using element_type = ExtraspecialElement;
  struct element_hash {
    std::size_t operator()(const ExtraspecialElement& x) const noexcept {
      return detail::hash_bytes(x.v.data(), x.v.size()) * 31 + x.z;
    }
  };

  ExtraspecialRep(std::uint32_t p, std::uint32_t n, bool minus) : p_(p), n_(n), minus_(minus) {
    if (!is_prime(p) || p > 255) throw std::invalid_argument("extra-special prime out of range");
    if (n < 1 || 2 * n > 16) throw std::invalid_argument("extra-special half-rank out of range");
    if (minus && p != 2) throw std::invalid_argument("minus type is only provided for p = 2");
  }

  [[nodiscard]] std::uint32_t p() const noexcept { return p_; }
  [[nodiscard]] std::uint32_t n() const noexcept { return n_; }
  [[nodiscard]] bool minus() const noexcept { return minus_; }

  [[nodiscard]] std::uint32_t cocycle(const ExtraspecialElement& a, const ExtraspecialElement& b) const noexcept {
    std::uint32_t s = 0;
    for (std::uint32_t i = 0; i < n_; ++i) s += std::uint32_t{a.v[2 * i]} * b.v[2 * i + 1];
    if (minus_) s += std::uint32_t{a.v[0]} * b.v[0] + std::uint32_t{a.v[1]} * b.v[1];
    return s % p_;
  }
  /// Symplectic commutator form B(u,v) - B(v,u).
  [[nodiscard]] std::uint32_t symplectic(const ExtraspecialElement& a, const ExtraspecialElement& b) const noexcept {
    return (cocycle(a, b) + p_ - cocycle(b, a)) % p_;
  }

  [[nodiscard]] ExtraspecialElement identity() const { return {}; }
  [[nodiscard]] ExtraspecialElement multiply(const ExtraspecialElement& a, const ExtraspecialElement& b) const {
    ExtraspecialElement c;
    for (std::uint32_t i = 0; i < 2 * n_; ++i) c.v[i] = static_cast<std::uint8_t>((a.v[i] + b.v[i]) % p_);
    c.z = static_cast<std::uint8_t>((a.z + b.z + cocycle(a, b)) % p_);
    return c;
  }
  [[nodiscard]] ExtraspecialElement inverse(const ExtraspecialElement& a) const {
    ExtraspecialElement c;
    for (std::uint32_t i = 0; i < 2 * n_; ++i) c.v[i] = static_cast<std::uint8_t>((p_ - a.v[i]) % p_);
    c.z = static_cast<std::uint8_t>((2 * p_ - a.z + cocycle(a, a)) % p_);
    return c;
  }
  [[nodiscard]] bool commute(const ExtraspecialElement& a, const ExtraspecialElement& b) const noexcept {
    return symplectic(a, b) == 0;
  }

  [[nodiscard]] std::size_t encoded_size() const noexcept { return 2 * n_ + 1; }
  void encode(const ExtraspecialElement& x, std::uint8_t* out) const {
    std::memcpy(out, x.v.data(), 2 * n_);
    out[2 * n_] = x.z;
  }
  [[nodiscard]] ExtraspecialElement decode(const std::uint8_t* in) const {
    ExtraspecialElement x;
    std::memcpy(x.v.data(), in, 2 * n_);
    x.z = in[2 * n_];
    for (std::uint32_t i = 0; i <= 2 * n_; ++i)
      if (in[i] >= p_) throw std::invalid_argument("extra-special component out of range");
    return x;
  }

 private:
  std::uint32_t p_, n_;
  bool minus_;
};

using Permutation = std::vector<std::uint16_t>;

/// Permutations of {0..degree-1}; (a*b)(x) = b(a(x)).
class PermutationRep {
 public:
  using element_type = Permutation;
  struct element_hash {
    std::size_t operator()(const Permutation& x) const noexcept { return detail::hash_bytes(x.data(), x.size()); }
  };

  explicit PermutationRep(std::uint32_t degree) : degree_(degree) {
    if (degree < 1 || degree > 65535) throw std::invalid_argument("permutation degree out of range");
  }
  [[nodiscard]] std::uint32_t degree() const noexcept { return degree_; }

  [[nodiscard]] Permutation identity() const {
    Permutation x(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) x[i] = static_cast<std::uint16_t>(i);
    return x;
  }
  [[nodiscard]] Permutation multiply(const Permutation& a, const Permutation& b) const {
    Permutation c(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) c[i] = b[a[i]];
    return c;
  }
  [[nodiscard]] Permutation inverse(const Permutation& a) const {
    Permutation c(degree_);
    for (std::uint32_t i = 0; i < degree_; ++i) c[a[i]] = static_cast<std::uint16_t>(i);
    return c;
  }
  [[nodiscard]] bool commute(const Permutation& a, const Permutation& b) const noexcept {
    for (std::uint32_t i = 0; i < degree_; ++i)
      if (a[b[i]] != b[a[i]]) return false;
    return true;
  }

  [[nodiscard]] std::size_t encoded_size() const noexcept { return 2 * degree_; }
  void encode(const Permutation& x, std::uint8_t* out) const {
    for (std::uint32_t i = 0; i < degree_; ++i) {
      out[2 * i] = static_cast<std::uint8_t>(x[i] & 0xff);
      out[2 * i + 1] = static_cast<std::uint8_t>(x[i] >> 8);
    }
  }
  [[nodiscard]] Permutation decode(const std::uint8_t* in) const {
    Permutation x(degree_);
    std::vector<bool> seen(degree_, false);
    for (std::uint32_t i = 0; i < degree_; ++i) {
      x[i] = static_cast<std::uint16_t>(in[2 * i] | (in[2 * i + 1] << 8));
      if (x[i] >= degree_ || seen[x[i]]) throw std::invalid_argument("not a permutation");
      seen[x[i]] = true;
    }
    return x;
  }

 private:
  std::uint32_t degree_;
};

}  // namespace ncc
