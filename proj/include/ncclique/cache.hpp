#pragma once

// On-disk group cache. One file per (family, parameters) key:
//
//   "NCCG" | u32 format | u64 code hash | u32 key length | key bytes
//   | u32 element bytes | u64 element count | u32 generator count
//   | u32 generator indices... | element bytes... | u64 checksum
//
// Integers are little-endian. A file with another format or code hash, a
// different key or a bad checksum is ignored and rebuilt. Writes go to a
// temporary file that is renamed over the target.

#include <cctype>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <unistd.h>

#include "ncclique/builders.hpp"
#include "ncclique/group.hpp"

namespace ncc {

inline constexpr char kCacheMagic[4] = {'N', 'C', 'C', 'G'};
inline constexpr std::uint32_t kCacheFormat = 1;
/// Bump when element encodings or enumeration order change.
inline constexpr std::string_view kCodeVersion = "ncclique-enumeration-1";

namespace detail {

inline std::uint64_t fnv1a(const std::uint8_t* p, std::size_t n, std::uint64_t h = 1469598103934665603ull) {
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t code_hash() {
  return fnv1a(reinterpret_cast<const std::uint8_t*>(kCodeVersion.data()), kCodeVersion.size());
}

class ByteWriter {
 public:
  template <class T>
  void put(T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) buf_.push_back(static_cast<std::uint8_t>(std::uint64_t(v) >> (8 * i)));
  }
  void bytes(const void* p, std::size_t n) {
    auto* b = static_cast<const std::uint8_t*>(p);
    buf_.insert(buf_.end(), b, b + n);
  }
  std::vector<std::uint8_t>& buffer() { return buf_; }

 private:
  std::vector<std::uint8_t> buf_;
};

class ByteReader {
 public:
  explicit ByteReader(const std::vector<std::uint8_t>& b) : b_(b) {}
  template <class T>
  bool get(T& v) {
    if (pos_ + sizeof(T) > b_.size()) return false;
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) x |= std::uint64_t(b_[pos_ + i]) << (8 * i);
    v = static_cast<T>(x);
    pos_ += sizeof(T);
    return true;
  }
  const std::uint8_t* take(std::size_t n) {
    if (pos_ + n > b_.size()) return nullptr;
    const auto* p = b_.data() + pos_;
    pos_ += n;
    return p;
  }
  [[nodiscard]] std::size_t pos() const { return pos_; }

 private:
  const std::vector<std::uint8_t>& b_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline std::string cache_key(const GroupMeta& m) {
  return std::string(family_name(m.family)) + "_q" + std::to_string(m.q) + "_n" + std::to_string(m.n) + "_m" +
         std::to_string(m.m) + "_p" + std::to_string(m.p) + "_" + m.form + "_" + m.name;
}

inline std::filesystem::path cache_path(const std::filesystem::path& dir, const std::string& key) {
  std::string f;
  for (char c : key) f += std::isalnum(static_cast<unsigned char>(c)) || c == '_' ? c : '-';
  return dir / (f + ".nccg");
}

enum class CacheStatus { Hit, Missing, Stale, Corrupt };

inline const char* cache_status_name(CacheStatus s) {
  switch (s) {
    case CacheStatus::Hit: return "hit";
    case CacheStatus::Missing: return "missing";
    case CacheStatus::Stale: return "stale";
    case CacheStatus::Corrupt: return "corrupt";
  }
  return "?";
}

template <GroupRep R>
void save_group(const GroupTable<R>& G, const std::filesystem::path& path) {
  const std::string key = cache_key(G.meta());
  const auto es = G.rep().encoded_size();
  detail::ByteWriter w;
  w.bytes(kCacheMagic, 4);
  w.put<std::uint32_t>(kCacheFormat);
  w.put<std::uint64_t>(detail::code_hash());
  w.put<std::uint32_t>(static_cast<std::uint32_t>(key.size()));
  w.bytes(key.data(), key.size());
  w.put<std::uint32_t>(static_cast<std::uint32_t>(es));
  w.put<std::uint64_t>(G.size());
  w.put<std::uint32_t>(static_cast<std::uint32_t>(G.generators().size()));
  for (auto g : G.generators()) w.put<std::uint32_t>(g);
  std::vector<std::uint8_t> tmp(es);
  for (const auto& e : G.elements()) {
    G.rep().encode(e, tmp.data());
    w.bytes(tmp.data(), es);
  }
  auto& buf = w.buffer();
  const auto sum = detail::fnv1a(buf.data(), buf.size());
  w.put<std::uint64_t>(sum);

  std::filesystem::create_directories(path.parent_path());
  auto part = path;
  part += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(part, std::ios::binary | std::ios::trunc);
    os.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!os) throw std::runtime_error("cannot write cache file " + part.string());
  }
  std::filesystem::rename(part, path);
}

/// Loads a cached table built from `setup`. The carrier comes from the setup,
/// the element order from the file, so indices are identical to the run that
/// wrote it.
template <GroupRep R>
std::optional<GroupTable<R>> load_group(const GroupSetup<R>& setup, const std::filesystem::path& path,
                                        CacheStatus* status = nullptr) {
  auto set = [&](CacheStatus s) {
    if (status) *status = s;
  };
  std::ifstream is(path, std::ios::binary);
  if (!is) {
    set(CacheStatus::Missing);
    return std::nullopt;
  }
  std::vector<std::uint8_t> buf((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  detail::ByteReader r(buf);
  const auto* magic = r.take(4);
  std::uint32_t format = 0, keylen = 0, es = 0, ngens = 0;
  std::uint64_t code = 0, count = 0;
  if (!magic || std::memcmp(magic, kCacheMagic, 4) != 0 || !r.get(format) || !r.get(code)) {
    set(CacheStatus::Corrupt);
    return std::nullopt;
  }
  if (format != kCacheFormat || code != detail::code_hash()) {
    set(CacheStatus::Stale);
    return std::nullopt;
  }
  const auto bad = [&] {
    set(CacheStatus::Corrupt);
    return std::nullopt;
  };
  if (buf.size() < 8) return bad();
  std::uint64_t stored = 0;
  for (std::size_t i = 0; i < 8; ++i) stored |= std::uint64_t(buf[buf.size() - 8 + i]) << (8 * i);
  if (stored != detail::fnv1a(buf.data(), buf.size() - 8)) return bad();

  if (!r.get(keylen)) return bad();
  const auto* key = r.take(keylen);
  if (!key) return bad();
  if (std::string(reinterpret_cast<const char*>(key), keylen) != cache_key(setup.meta)) {
    set(CacheStatus::Stale);
    return std::nullopt;
  }
  if (!r.get(es) || es != setup.rep.encoded_size() || !r.get(count) || count != setup.expected_order ||
      !r.get(ngens))
    return bad();
  std::vector<std::uint32_t> gidx(ngens);
  for (auto& g : gidx)
    if (!r.get(g) || g >= count) return bad();
  std::vector<typename R::element_type> elems;
  elems.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto* p = r.take(es);
    if (!p) return bad();
    elems.push_back(setup.rep.decode(p));
  }
  if (r.pos() + 8 != buf.size()) return bad();
  if (!(elems.front() == setup.rep.identity())) return bad();
  std::vector<typename R::element_type> gens;
  for (auto g : gidx) gens.push_back(elems[g]);
  try {
    auto G = GroupTable<R>::from_elements(setup.rep, std::move(elems), gens, setup.meta);
    if (G.size() != count) return bad();
    set(CacheStatus::Hit);
    return G;
  } catch (const std::exception&) {
    return bad();
  }
}

/// Cached enumeration: load when possible, otherwise enumerate and store.
/// An empty directory disables caching.
template <GroupRep R>
GroupTable<R> cached_enumerate(const GroupSetup<R>& setup, const std::filesystem::path& dir, std::size_t cap,
                               CacheStatus* status = nullptr) {
  if (dir.empty()) {
    if (status) *status = CacheStatus::Missing;
    return enumerate(setup, cap);
  }
  const auto path = cache_path(dir, cache_key(setup.meta));
  if (auto G = load_group(setup, path, status)) return std::move(*G);
  auto G = enumerate(setup, cap);
  save_group(G, path);
  return G;
}

}  // namespace ncc
