#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "ncclique/cache.hpp"
#include "ncclique/job.hpp"
#include "ncclique/report.hpp"
#include "ncclique/verify.hpp"

using namespace ncc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout only; stderr goes to the test log.
Run cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(NCC_CLI_PATH) + " " + args;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("ncc-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter_++));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  [[nodiscard]] const fs::path& path() const { return path_; }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

std::vector<char> slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::vector<char>& bytes) {
  std::ofstream os(p, std::ios::binary | std::ios::trunc);
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

TEST(Job, Validation) {
  auto bad = [](JobSpec j) { EXPECT_THROW(validate(j), JobError) << j.family; };
  JobSpec j;
  j.family = "psl2";
  j.q = 6;
  bad(j);
  j.q = 7;
  EXPECT_NO_THROW(validate(j));
  j.time_limit_seconds = 0;
  bad(j);
  j.time_limit_seconds = 10;
  j.node_limit = 0;
  bad(j);

  JobSpec e;
  e.family = "extraspecial";
  e.p = 3;
  e.n = 1;
  EXPECT_NO_THROW(validate(e));
  e.form = "minus";
  bad(e);
  e.form = "twisted";
  bad(e);
  e.form = "plus";
  e.p = 4;
  bad(e);

  JobSpec s;
  s.family = "suzuki";
  bad(s);
  JobSpec n;
  n.family = "named";
  bad(n);
  JobSpec u;
  u.family = "cyclic";
  bad(u);
}

TEST(Job, BuildGroup) {
  JobSpec j;
  j.family = "named";
  j.name = "symmetric(4)";
  auto b = build_group(j);
  EXPECT_EQ(std::get<PermGroup>(b.group).size(), 24u);
  j.name = "nonsense";
  EXPECT_THROW(build_group(j), JobError);
  JobSpec s;
  s.family = "suzuki";
  s.m = 2;
  EXPECT_THROW(build_group(s), std::length_error);
}

TEST(Cache, RoundTripIsBitExact) {
  TempDir dir;
  const auto setup = linear_setup(LinearKind::PSL, 2, 9);
  CacheStatus st;
  auto G = cached_enumerate(setup, dir.path(), kDefaultOrderCap, &st);
  EXPECT_EQ(st, CacheStatus::Missing);
  const auto file = cache_path(dir.path(), cache_key(setup.meta));
  ASSERT_TRUE(fs::exists(file));
  const auto bytes = slurp(file);

  auto H = cached_enumerate(setup, dir.path(), kDefaultOrderCap, &st);
  EXPECT_EQ(st, CacheStatus::Hit);
  ASSERT_EQ(H.size(), G.size());
  EXPECT_EQ(H.elements(), G.elements());
  EXPECT_EQ(H.generators(), G.generators());
  for (std::uint32_t a = 0; a < G.size(); a += 7)
    for (std::uint32_t b = 0; b < G.size(); b += 11) ASSERT_EQ(H.mul(a, b), G.mul(a, b));
  save_group(H, dir.path() / "again.nccg");
  EXPECT_EQ(slurp(dir.path() / "again.nccg"), bytes);
}

TEST(Cache, ExtraspecialAndPermutations) {
  TempDir dir;
  for (auto check : {+[](const fs::path& d) {
                       auto s = extraspecial_setup(3, 2, "plus");
                       auto G = cached_enumerate(s, d, kDefaultOrderCap);
                       CacheStatus st;
                       auto H = load_group(s, cache_path(d, cache_key(s.meta)), &st);
                       return st == CacheStatus::Hit && H && H->elements() == G.elements();
                     },
                     +[](const fs::path& d) {
                       auto s = named_setup("alternating(5)");
                       auto G = cached_enumerate(s, d, kDefaultOrderCap);
                       CacheStatus st;
                       auto H = load_group(s, cache_path(d, cache_key(s.meta)), &st);
                       return st == CacheStatus::Hit && H && H->elements() == G.elements();
                     }})
    EXPECT_TRUE(check(dir.path()));
}

TEST(Cache, CorruptAndStaleFilesAreRebuilt) {
  TempDir dir;
  const auto setup = linear_setup(LinearKind::PGL, 2, 5);
  auto G = cached_enumerate(setup, dir.path(), kDefaultOrderCap);
  const auto file = cache_path(dir.path(), cache_key(setup.meta));
  const auto good = slurp(file);

  auto flipped = good;
  flipped[flipped.size() / 2] ^= 0x5a;
  spit(file, flipped);
  CacheStatus st;
  EXPECT_FALSE(load_group(setup, file, &st));
  EXPECT_EQ(st, CacheStatus::Corrupt);
  auto H = cached_enumerate(setup, dir.path(), kDefaultOrderCap, &st);
  EXPECT_EQ(st, CacheStatus::Corrupt);
  EXPECT_EQ(H.elements(), G.elements());
  EXPECT_EQ(slurp(file), good);

  auto truncated = good;
  truncated.resize(20);
  spit(file, truncated);
  EXPECT_FALSE(load_group(setup, file, &st));
  EXPECT_EQ(st, CacheStatus::Corrupt);

  auto stale = good;
  stale[8] ^= 1;  // first byte of the code hash
  spit(file, stale);
  EXPECT_FALSE(load_group(setup, file, &st));
  EXPECT_EQ(st, CacheStatus::Stale);

  // a valid file for another key
  spit(file, good);
  EXPECT_FALSE(load_group(linear_setup(LinearKind::PGL, 2, 7), file, &st));
  EXPECT_EQ(st, CacheStatus::Stale);

  EXPECT_FALSE(load_group(setup, dir.path() / "absent.nccg", &st));
  EXPECT_EQ(st, CacheStatus::Missing);
}

TEST(Report, Schema) {
  JobSpec j;
  j.family = "psl2";
  j.q = 7;
  auto G = build_linear(LinearKind::PSL, 2, 7);
  auto cert = omega(G);
  auto r = omega_report(j, group_json(G), cert, 0.5);
  EXPECT_EQ(r["schema_version"], kReportSchema);
  EXPECT_EQ(r["job"]["family"], "psl2");
  EXPECT_EQ(r["group"]["order"], 168);
  EXPECT_EQ(r["group"]["center_size"], 1);
  EXPECT_EQ(r["certificate"]["status"], "Exact");
  EXPECT_EQ(r["certificate"]["omega"], 57);
  EXPECT_EQ(r["certificate"]["witness_clique"].size(), 57u);
  EXPECT_EQ(r["formula"]["matched"], true);
  EXPECT_EQ(r["timing"]["seconds"], 0.5);

  OmegaOptions o;
  o.method = Method::BranchBound;
  o.node_limit = 1;
  auto cut = omega(build_extraspecial(3, 2), o);
  auto c = certificate_json(cut);
  EXPECT_EQ(c["status"], "LowerBoundOnly");
  EXPECT_FALSE(c.contains("omega"));
  EXPECT_TRUE(formula_json(cut).is_null());
}

TEST(Verify, RowsAndInjection) {
  SuiteOptions o;
  o.rows = {"1", "2"};
  std::ostringstream out;
  auto res = run_acceptance(o, out);
  EXPECT_TRUE(res.ok()) << out.str();
  EXPECT_NE(out.str().find("[PASS] 1"), std::string::npos);
  EXPECT_NE(out.str().find("acceptance: 2 passed, 0 failed, 0 skipped"), std::string::npos);

  o.inject_mismatch = true;
  std::ostringstream bad;
  EXPECT_FALSE(run_acceptance(o, bad).ok());
  EXPECT_NE(bad.str().find("DIFF"), std::string::npos);

  SuiteOptions none;
  none.rows = {"2"};
  none.budget_seconds = -1;
  std::ostringstream skipped;
  auto sk = run_acceptance(none, skipped);
  EXPECT_NE(skipped.str().find("[SKIP] 2"), std::string::npos);
  EXPECT_FALSE(sk.ok());  // mandatory rows may not be skipped
}

TEST(Cli, OmegaPsl27) {
  auto r = cli("omega --family psl2 --q 7");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["certificate"]["omega"], 57);
  EXPECT_EQ(j["certificate"]["method"], "CoverCertificate");
  EXPECT_EQ(j["formula"]["matched"], true);
}

TEST(Cli, OmegaExtraspecialAndSuzuki) {
  auto e = cli("omega --family extraspecial --p 2 --n 3");
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(nlohmann::json::parse(e.out)["certificate"]["omega"], 7);

  auto s = cli("omega --family suzuki --m 1");
  ASSERT_EQ(s.code, 0);
  auto j = nlohmann::json::parse(s.out);
  EXPECT_EQ(j["certificate"]["omega"], 4551);
  std::set<std::string> agree;
  for (auto& m : j["certificate"]["agreeing_methods"]) agree.insert(m.get<std::string>());
  EXPECT_TRUE(agree.contains("CoverCertificate"));
  EXPECT_TRUE(agree.contains("Lemma20"));
  EXPECT_EQ(j["formula"]["matched"], true);
}

TEST(Cli, GroupInfo) {
  auto p = cli("group --family psl3 --q 3");
  ASSERT_EQ(p.code, 0);
  auto j = nlohmann::json::parse(p.out);
  EXPECT_EQ(j["group"]["order"], 5616);
  EXPECT_EQ(j["group"]["sylow"]["13"]["count"], 144);
  EXPECT_EQ(j["group"]["sylow"]["13"]["method"], "cyclic");

  auto s = cli("group --family suzuki --m 1");
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(nlohmann::json::parse(s.out)["group"]["sylow"]["2"]["count"], 65);

  auto a = cli("group --family psl2 --q 8");
  EXPECT_EQ(nlohmann::json::parse(a.out)["group"]["ac_group"], true);
}

TEST(Cli, Export) {
  auto G = build_linear(LinearKind::PSL, 2, 7);
  std::size_t twice = 0;
  for (std::uint32_t g = 1; g < G.size(); ++g) twice += G.size() - centralizer(G, g).count();
  auto r = cli("export --family psl2 --q 7");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p edge 167 " + std::to_string(twice / 2) + "\n"), std::string::npos);
  EXPECT_EQ(r.out.rfind("c ", 0), 0u);

  auto e = cli("export --family extraspecial --p 3 --n 2 --collapse");
  EXPECT_NE(e.out.find("p edge 80 "), std::string::npos);
  auto s = cli("export --family sl2 --q 5 --collapse");
  EXPECT_NE(s.out.find("p edge 59 "), std::string::npos);

  EXPECT_EQ(cli("export --family suzuki --m 1 2>/dev/null").code, 3);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("omega --family psl2 --q 6 2>/dev/null").code, 2);
  EXPECT_EQ(cli("omega --family nope --q 7 2>/dev/null").code, 2);
  EXPECT_EQ(cli("omega --q 7 2>/dev/null").code, 2);
  EXPECT_EQ(cli("omega --family psl2 --q 7 --method magic 2>/dev/null").code, 2);
  EXPECT_EQ(cli("omega --family named --name 'dihedral(2)' 2>/dev/null").code, 2);
  EXPECT_EQ(cli("omega --family psl2 --q 7 --method ac 2>/dev/null").code, 2);
  EXPECT_EQ(cli("omega --family extraspecial --p 3 --n 2 --method solver --node-limit 1 2>/dev/null").code, 3);
  EXPECT_EQ(cli("omega --family psl3 --q 9 2>/dev/null").code, 3);
  EXPECT_EQ(cli("bogus 2>/dev/null").code, 2);
}

TEST(Cli, Verify) {
  auto ok = cli("verify --rows 1");
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_NE(ok.out.find("[PASS] 1"), std::string::npos);
  auto bad = cli("verify --rows 1 --inject-mismatch");
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("DIFF"), std::string::npos);
}

TEST(Cli, CorruptCacheStillVerifies) {
  TempDir dir;
  const std::string flags = "--rows 7 --cache-dir " + dir.path().string();
  ASSERT_EQ(cli("verify " + flags).code, 0);
  std::size_t n = 0;
  for (const auto& f : fs::directory_iterator(dir.path())) {
    auto bytes = slurp(f.path());
    bytes[bytes.size() / 3] ^= 0xff;
    spit(f.path(), bytes);
    ++n;
  }
  EXPECT_GE(n, 2u);
  EXPECT_EQ(cli("verify " + flags).code, 0);
}

TEST(Cli, ReportsAreDeterministic) {
  TempDir dir;
  const auto a = dir.path() / "a.json", b = dir.path() / "b.json";
  ASSERT_EQ(cli("omega --family pgl2 --q 5 --out " + a.string()).code, 0);
  ASSERT_EQ(cli("omega --family pgl2 --q 5 --out " + b.string()).code, 0);
  auto ja = nlohmann::json::parse(std::ifstream(a)), jb = nlohmann::json::parse(std::ifstream(b));
  ja.erase("timing");
  jb.erase("timing");
  EXPECT_EQ(ja, jb);
  EXPECT_EQ(ja["certificate"]["omega"], 31);
}
