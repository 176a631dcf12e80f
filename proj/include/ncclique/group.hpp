#pragma once

// Fully enumerated finite groups. A GroupRep describes how elements of one
// carrier (matrices, projective matrices, extra-special pairs, permutations)
// multiply; GroupTable enumerates the closure of a generating set once and
// afterwards answers everything by element index.

#include <concepts>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncclique/bitset.hpp"

namespace ncc {

template <class R>
concept GroupRep = requires(const R& rep, const typename R::element_type& a, std::uint8_t* out,
                            const std::uint8_t* in) {
  typename R::element_hash;
  { rep.identity() } -> std::same_as<typename R::element_type>;
  { rep.multiply(a, a) } -> std::same_as<typename R::element_type>;
  { rep.inverse(a) } -> std::same_as<typename R::element_type>;
  { rep.commute(a, a) } -> std::same_as<bool>;
  { rep.encoded_size() } -> std::convertible_to<std::size_t>;
  rep.encode(a, out);
  { rep.decode(in) } -> std::same_as<typename R::element_type>;
  { a == a } -> std::convertible_to<bool>;
};

enum class Family { GL, SL, PGL, PSL, Suzuki, Extraspecial, Named };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::PGL: return "PGL";
    case Family::PSL: return "PSL";
    case Family::Suzuki: return "Sz";
    case Family::Extraspecial: return "extraspecial";
    case Family::Named: return "named";
  }
  return "?";
}

/// Carrier metadata. Fields that do not apply to a family stay zero/empty.
struct GroupMeta {
  Family family = Family::Named;
  std::uint32_t q = 0;  ///< field order (linear, Suzuki)
  std::uint32_t n = 0;  ///< matrix degree, or half-rank for extra-special groups
  std::uint32_t m = 0;  ///< Suzuki tower parameter, q = 2^{2m+1}
  std::uint32_t p = 0;  ///< characteristic / prime
  std::uint32_t k = 0;  ///< gcd(q-1, 2)
  std::string form;     ///< "plus" / "minus" for extra-special groups
  std::string name;     ///< named groups: "dihedral(5)", "quaternion8", ...
  std::string label;    ///< human-readable, e.g. "PSL(2,7)"
};

template <GroupRep R>
class GroupTable {
 public:
  using rep_type = R;
  using element_type = typename R::element_type;
  using index_type = std::uint32_t;

  static constexpr index_type kIdentity = 0;

  /// Breadth-first closure of `gens`. Throws std::length_error once more than
  /// `cap` elements have been produced.
  static GroupTable closure(R rep, const std::vector<element_type>& gens, GroupMeta meta, std::size_t cap) {
    GroupTable g(std::move(rep), std::move(meta));
    g.insert(g.rep_.identity());
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
      for (const auto& s : gens) {
        g.insert(g.rep_.multiply(g.elements_[i], s));
        if (g.elements_.size() > cap)
          throw std::length_error("group closure exceeded " + std::to_string(cap) + " elements");
      }
    }
    g.finish(gens);
    return g;
  }

  /// Builds a table from an explicit element list, which must be closed
  /// under multiplication. The identity is moved to index 0.
  static GroupTable from_elements(R rep, std::vector<element_type> elements, const std::vector<element_type>& gens,
                                  GroupMeta meta) {
    GroupTable g(std::move(rep), std::move(meta));
    g.insert(g.rep_.identity());
    for (auto& e : elements) g.insert(std::move(e));
    g.finish(gens);
    for (const auto& a : g.elements_)
      for (const auto& s : gens)
        if (!g.index_of(g.rep_.multiply(a, s))) throw std::invalid_argument("element list is not closed");
    return g;
  }

  GroupTable(GroupTable&&) noexcept = default;
  GroupTable& operator=(GroupTable&&) noexcept = default;

  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] const R& rep() const noexcept { return rep_; }
  [[nodiscard]] const GroupMeta& meta() const noexcept { return meta_; }
  [[nodiscard]] const element_type& element(index_type i) const { return elements_.at(i); }
  [[nodiscard]] const std::vector<element_type>& elements() const noexcept { return elements_; }
  [[nodiscard]] const std::vector<index_type>& generators() const noexcept { return generators_; }

  [[nodiscard]] std::optional<index_type> index_of(const element_type& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] index_type mul(index_type a, index_type b) const {
    auto it = index_.find(rep_.multiply(elements_[a], elements_[b]));
    if (it == index_.end()) throw std::logic_error("product left the group table");
    return it->second;
  }
  [[nodiscard]] index_type inv(index_type a) const { return inverse_[a]; }
  [[nodiscard]] std::uint32_t order(index_type a) const { return order_[a]; }
  [[nodiscard]] bool commute(index_type a, index_type b) const {
    return rep_.commute(elements_[a], elements_[b]);
  }
  /// x a x^{-1}
  [[nodiscard]] index_type conjugate(index_type a, index_type x) const { return mul(mul(x, a), inverse_[x]); }

  [[nodiscard]] Subset empty_subset() const { return Subset(size()); }

  /// Per-table memo of computed subgroups. Entries never change once stored.
  struct Cache {
    std::mutex mutex;
    std::optional<Subset> center;
    std::unordered_map<index_type, std::shared_ptr<const Subset>> centralizers;
  };
  Cache& cache() const { return *cache_; }

 private:
  GroupTable(R rep, GroupMeta meta) : rep_(std::move(rep)), meta_(std::move(meta)), cache_(std::make_unique<Cache>()) {}

  void insert(element_type e) {
    if (index_.contains(e)) return;
    index_.emplace(e, static_cast<index_type>(elements_.size()));
    elements_.push_back(std::move(e));
  }

  void finish(const std::vector<element_type>& gens) {
    for (const auto& s : gens) {
      auto i = index_of(s);
      if (!i) throw std::invalid_argument("generator not in group");
      generators_.push_back(*i);
    }
    inverse_.resize(elements_.size());
    order_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      auto j = index_of(rep_.inverse(elements_[i]));
      if (!j) throw std::logic_error("inverse left the group table");
      inverse_[i] = *j;
      element_type x = elements_[i];
      std::uint32_t k = 1;
      while (!(x == elements_[0])) {
        x = rep_.multiply(x, elements_[i]);
        ++k;
      }
      order_[i] = k;
    }
  }

  R rep_;
  GroupMeta meta_;
  std::vector<element_type> elements_;
  std::unordered_map<element_type, index_type, typename R::element_hash> index_;
  std::vector<index_type> inverse_;
  std::vector<std::uint32_t> order_;
  std::vector<index_type> generators_;
  std::unique_ptr<Cache> cache_;
};

}  // namespace ncc
