#pragma once

// Subgroup computations on an enumerated table: center, centralizers,
// bicentralizers, closures, derived series and Sylow counts.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "ncclique/group.hpp"
#include "ncclique/parallel.hpp"

namespace ncc {

template <GroupRep R>
const Subset& center(const GroupTable<R>& G) {
  auto& cache = G.cache();
  {
    std::lock_guard lock(cache.mutex);
    if (cache.center) return *cache.center;
  }
  Subset z(G.size());
  for (std::uint32_t i = 0; i < G.size(); ++i) {
    bool central = true;
    for (auto s : G.generators())
      if (!G.commute(i, s)) {
        central = false;
        break;
      }
    if (central) z.set(i);
  }
  std::lock_guard lock(cache.mutex);
  if (!cache.center) cache.center = std::move(z);
  return *cache.center;
}

template <GroupRep R>
bool is_central(const GroupTable<R>& G, std::uint32_t g) {
  return center(G).test(g);
}

template <GroupRep R>
const Subset& centralizer(const GroupTable<R>& G, std::uint32_t g) {
  if (g >= G.size()) throw std::out_of_range("element index out of range");
  auto& cache = G.cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.centralizers.find(g); it != cache.centralizers.end()) return *it->second;
  }
  auto c = std::make_shared<Subset>(G.size());
  for (std::uint32_t h = 0; h < G.size(); ++h)
    if (G.commute(g, h)) c->set(h);
  std::lock_guard lock(cache.mutex);
  auto [it, inserted] = cache.centralizers.emplace(g, std::move(c));
  return *it->second;
}

/// Fills the centralizer cache for many elements at once, in parallel.
template <GroupRep R>
void precompute_centralizers(const GroupTable<R>& G, const std::vector<std::uint32_t>& elems) {
  parallel_for(elems.size(), [&](std::size_t i) { (void)centralizer(G, elems[i]); }, 4);
}

/// Elements commuting with every element of `elems`.
template <GroupRep R>
Subset centralizer_of(const GroupTable<R>& G, const std::vector<std::uint32_t>& elems) {
  Subset c(G.size());
  for (std::uint32_t h = 0; h < G.size(); ++h) {
    bool ok = true;
    for (auto x : elems)
      if (!G.commute(x, h)) {
        ok = false;
        break;
      }
    if (ok) c.set(h);
  }
  return c;
}

/// Subgroup generated by `gens`.
template <GroupRep R>
Subset subgroup_closure(const GroupTable<R>& G, const std::vector<std::uint32_t>& gens) {
  Subset s(G.size());
  std::vector<std::uint32_t> queue{GroupTable<R>::kIdentity};
  s.set(GroupTable<R>::kIdentity);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto g : gens) {
      const auto y = G.mul(queue[i], g);
      if (!s.test(y)) {
        s.set(y);
        queue.push_back(y);
      }
    }
  return s;
}

/// Greedy generating set of the subgroup generated by `S`: scans S in index
/// order and keeps every element not yet in the closure of those kept.
/// `closure_out` receives <S>.
template <GroupRep R>
std::vector<std::uint32_t> generating_set(const GroupTable<R>& G, const Subset& S, Subset* closure_out = nullptr) {
  std::vector<std::uint32_t> gens;
  Subset closed(G.size());
  closed.set(GroupTable<R>::kIdentity);
  S.for_each([&](std::size_t i) {
    if (closed.test(i)) return;
    gens.push_back(static_cast<std::uint32_t>(i));
    closed = subgroup_closure(G, gens);
  });
  if (closure_out) *closure_out = std::move(closed);
  return gens;
}

template <GroupRep R>
bool is_subgroup(const GroupTable<R>& G, const Subset& S) {
  if (!S.test(GroupTable<R>::kIdentity)) return false;
  Subset closed;
  generating_set(G, S, &closed);
  return closed == S;
}

/// True iff the elements of S commute pairwise.
template <GroupRep R>
bool is_abelian(const GroupTable<R>& G, const Subset& S) {
  const auto idx = S.to_indices();
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b)
      if (!G.commute(idx[a], idx[b])) return false;
  return true;
}

template <GroupRep R>
bool is_abelian(const GroupTable<R>& G) {
  const auto& gens = G.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!G.commute(gens[a], gens[b])) return false;
  return true;
}

/// C_G(C_G(g)): the abelian hull of a non-central element.
template <GroupRep R>
Subset bicentralizer(const GroupTable<R>& G, std::uint32_t g) {
  if (is_central(G, g)) throw std::domain_error("bicentralizer of a central element");
  const Subset& c = centralizer(G, g);
  const auto gens = generating_set(G, c);
  Subset out(G.size());
  c.for_each([&](std::size_t h) {
    for (auto x : gens)
      if (!G.commute(x, static_cast<std::uint32_t>(h))) return;
    out.set(h);
  });
  return out;
}

template <GroupRep R>
std::uint32_t element_order(const GroupTable<R>& G, std::uint32_t g) {
  return G.order(g);
}

template <GroupRep R>
std::set<std::uint32_t> order_profile(const GroupTable<R>& G) {
  std::set<std::uint32_t> out;
  for (std::uint32_t i = 0; i < G.size(); ++i) out.insert(G.order(i));
  return out;
}

template <GroupRep R>
std::map<std::uint32_t, std::uint64_t> order_statistics(const GroupTable<R>& G) {
  std::map<std::uint32_t, std::uint64_t> out;
  for (std::uint32_t i = 0; i < G.size(); ++i) ++out[G.order(i)];
  return out;
}

template <GroupRep R>
std::uint32_t power(const GroupTable<R>& G, std::uint32_t g, std::uint64_t e) {
  std::uint32_t r = GroupTable<R>::kIdentity;
  e %= G.order(g);
  for (std::uint64_t i = 0; i < e; ++i) r = G.mul(r, g);
  return r;
}

/// a^{-1} b^{-1} a b
template <GroupRep R>
std::uint32_t commutator(const GroupTable<R>& G, std::uint32_t a, std::uint32_t b) {
  return G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
}

/// Smallest subgroup of H containing `seeds` that is normalized by `hgens`.
template <GroupRep R>
Subset normal_closure(const GroupTable<R>& G, std::vector<std::uint32_t> seeds, const std::vector<std::uint32_t>& hgens) {
  Subset k = subgroup_closure(G, seeds);
  for (bool grown = true; grown;) {
    grown = false;
    for (std::size_t i = 0; i < seeds.size(); ++i)
      for (auto h : hgens) {
        const auto c = G.conjugate(seeds[i], h);
        if (!k.test(c)) {
          seeds.push_back(c);
          k = subgroup_closure(G, seeds);
          grown = true;
        }
      }
  }
  return k;
}

/// [H, H] for a subgroup H given as an index set.
template <GroupRep R>
Subset derived_subgroup(const GroupTable<R>& G, const Subset& H) {
  const auto gens = generating_set(G, H);
  std::vector<std::uint32_t> comms;
  for (auto a : gens)
    for (auto b : gens) {
      const auto c = commutator(G, a, b);
      if (c != GroupTable<R>::kIdentity) comms.push_back(c);
    }
  return normal_closure(G, std::move(comms), gens);
}

template <GroupRep R>
Subset derived_subgroup(const GroupTable<R>& G) {
  return derived_subgroup(G, Subset(G.size(), true));
}

/// Iterates the derived series to the trivial group or a fixed point.
template <GroupRep R>
bool is_solvable(const GroupTable<R>& G, const Subset& H) {
  Subset cur = H;
  while (cur.count() > 1) {
    Subset next = derived_subgroup(G, cur);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

template <GroupRep R>
bool is_solvable(const GroupTable<R>& G) {
  return is_solvable(G, Subset(G.size(), true));
}

template <GroupRep R>
Subset normalizer(const GroupTable<R>& G, const Subset& H) {
  const auto gens = generating_set(G, H);
  Subset out(G.size());
  for (std::uint32_t x = 0; x < G.size(); ++x) {
    bool ok = true;
    for (auto h : gens)
      if (!H.test(G.conjugate(h, x))) {
        ok = false;
        break;
      }
    if (ok) out.set(x);
  }
  return out;
}

/// x H x^{-1}
template <GroupRep R>
Subset conjugate_subset(const GroupTable<R>& G, const Subset& H, std::uint32_t x) {
  Subset out(G.size());
  H.for_each([&](std::size_t h) { out.set(G.conjugate(static_cast<std::uint32_t>(h), x)); });
  return out;
}

/// Number of Sylow p-subgroups when p divides |G| exactly once:
/// (#elements of order p) / (p - 1).
template <GroupRep R>
std::uint64_t sylow_count_cyclic(const GroupTable<R>& G, std::uint32_t p) {
  const std::uint64_t n = G.size();
  if (p < 2 || n % p != 0) throw std::domain_error("p does not divide the group order");
  if (n % (std::uint64_t{p} * p) == 0) throw std::domain_error("p^2 divides the group order; Sylow subgroup not cyclic of order p");
  std::uint64_t count = 0;
  for (std::uint32_t i = 0; i < G.size(); ++i)
    if (G.order(i) == p) ++count;
  return count / (p - 1);
}

/// A Sylow p-subgroup, grown one factor of p at a time inside normalizers.
template <GroupRep R>
Subset sylow_subgroup(const GroupTable<R>& G, std::uint32_t p) {
  std::uint64_t target = 1, n = G.size();
  while (n % p == 0) {
    n /= p;
    target *= p;
  }
  Subset Q(G.size());
  Q.set(GroupTable<R>::kIdentity);
  std::vector<std::uint32_t> gens;
  while (Q.count() < target) {
    const Subset N = normalizer(G, Q);
    std::optional<std::uint32_t> pick;
    N.for_each([&](std::size_t y) {
      if (pick || Q.test(y)) return;
      if (Q.test(power(G, static_cast<std::uint32_t>(y), p))) pick = static_cast<std::uint32_t>(y);
    });
    if (!pick) throw std::logic_error("no p-element found in the normalizer");
    gens.push_back(*pick);
    Q = subgroup_closure(G, gens);
  }
  return Q;
}

/// nu_p(G) = |G : N_G(P)|.
template <GroupRep R>
std::uint64_t sylow_count(const GroupTable<R>& G, std::uint32_t p) {
  if (p < 2 || G.size() % p != 0) return 1;
  const Subset P = sylow_subgroup(G, p);
  return G.size() / normalizer(G, P).count();
}

inline std::vector<std::uint32_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

/// For every non-identity element, the smallest index generating the same
/// cyclic subgroup. Elements with the same representative have the same
/// centralizer.
template <GroupRep R>
std::vector<std::uint32_t> cyclic_representatives(const GroupTable<R>& G) {
  std::vector<std::uint32_t> rep(G.size(), 0);
  std::vector<bool> done(G.size(), false);
  for (std::uint32_t g = 1; g < G.size(); ++g) {
    if (done[g]) continue;
    const auto ord = G.order(g);
    std::uint32_t x = g;
    for (std::uint32_t k = 1; k < ord; ++k, x = G.mul(x, g))
      if (std::gcd(k, ord) == 1) {
        rep[x] = g;
        done[x] = true;
      }
  }
  return rep;
}

}  // namespace ncc
