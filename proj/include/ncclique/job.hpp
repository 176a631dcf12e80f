#pragma once

// Job descriptions and a type-erased group handle for the harness.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <variant>

#include "ncclique/builders.hpp"
#include "ncclique/cache.hpp"
#include "ncclique/structure.hpp"

namespace ncc {

/// Bad user input. Maps to exit code 2.
struct JobError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct JobSpec {
  std::string family;  ///< psl2 pgl2 sl2 gl2 psl3 suzuki extraspecial named
  std::uint32_t q = 0, m = 0, p = 0, n = 0;
  std::string form = "plus";
  std::string name;
  Method method = Method::Auto;
  double time_limit_seconds = 600;
  std::uint64_t node_limit = 100'000'000;
  bool allow_big_memory = false;
  std::filesystem::path cache_dir;
  std::string out;

  [[nodiscard]] OmegaOptions omega_options() const {
    OmegaOptions o;
    o.method = method;
    o.time_limit_seconds = time_limit_seconds;
    o.node_limit = node_limit;
    o.allow_big_memory = allow_big_memory;
    return o;
  }
};

using AnyGroup = std::variant<LinearGroup, ExtraspecialGroup, PermGroup>;

inline void validate(const JobSpec& job) {
  static const std::map<std::string, int> families{{"psl2", 0}, {"pgl2", 0}, {"sl2", 0},          {"gl2", 0},
                                                   {"psl3", 0}, {"suzuki", 1}, {"extraspecial", 2}, {"named", 3}};
  auto it = families.find(job.family);
  if (it == families.end()) throw JobError("unknown family '" + job.family + "'");
  if (!(job.time_limit_seconds > 0)) throw JobError("time limit must be positive");
  if (job.node_limit == 0) throw JobError("node limit must be positive");
  switch (it->second) {
    case 0:
      if (job.q < 2 || prime_power(job.q).p == 0) throw JobError("--q must be a prime power");
      break;
    case 1:
      if (job.m < 1) throw JobError("--m must be at least 1");
      break;
    case 2:
      if (job.p < 2 || !is_prime(job.p)) throw JobError("--p must be prime");
      if (job.n < 1) throw JobError("--n must be at least 1");
      if (job.form != "plus" && job.form != "minus") throw JobError("--form must be plus or minus");
      if (job.form == "minus" && job.p != 2) throw JobError("minus type is only available for p = 2");
      break;
    default:
      if (job.name.empty()) throw JobError("--name is required for named groups");
  }
}

struct BuiltGroup {
  AnyGroup group;
  CacheStatus cache = CacheStatus::Missing;
};

inline BuiltGroup build_group(const JobSpec& job) {
  validate(job);
  BuiltGroup out{PermGroup::closure(PermutationRep(1), {}, {}, 1), CacheStatus::Missing};
  auto linear = [&](LinearKind kind, std::uint32_t n) {
    out.group = cached_enumerate(linear_setup(kind, n, job.q), job.cache_dir, kDefaultOrderCap, &out.cache);
  };
  try {
    if (job.family == "psl2") linear(LinearKind::PSL, 2);
    else if (job.family == "pgl2") linear(LinearKind::PGL, 2);
    else if (job.family == "sl2") linear(LinearKind::SL, 2);
    else if (job.family == "gl2") linear(LinearKind::GL, 2);
    else if (job.family == "psl3") linear(LinearKind::PSL, 3);
    else if (job.family == "suzuki") {
      if (job.m >= 2 && !job.allow_big_memory) throw std::length_error("Sz(32) needs --allow-big-memory");
      auto s = suzuki_setup(job.m);
      out.group = cached_enumerate(s, job.cache_dir, static_cast<std::size_t>(s.expected_order), &out.cache);
    } else if (job.family == "extraspecial") {
      out.group = cached_enumerate(extraspecial_setup(job.p, job.n, job.form), job.cache_dir, kDefaultOrderCap,
                                   &out.cache);
    } else {
      out.group = cached_enumerate(named_setup(job.name), job.cache_dir, kDefaultOrderCap, &out.cache);
    }
  } catch (const std::invalid_argument& e) {
    throw JobError(e.what());
  }
  return out;
}

}  // namespace ncc
