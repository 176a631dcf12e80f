// ncclique: clique numbers of non-commuting graphs.
//
//   ncclique group   --family psl3 --q 3
//   ncclique omega   --family suzuki --m 1 --out sz8.json
//   ncclique export  --family sl2 --q 5 --collapse --out sl25.dimacs
//   ncclique verify  --budget 3600
//
// Exit codes: 0 ok, 1 verify mismatch, 2 invalid job, 3 budget exhausted,
// 4 method inconsistency.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ncclique/job.hpp"
#include "ncclique/ncgraph.hpp"
#include "ncclique/report.hpp"
#include "ncclique/verify.hpp"

namespace {

enum Exit { kOk = 0, kMismatch = 1, kInvalid = 2, kBudget = 3, kInconsistent = 4 };

void add_job_options(CLI::App* cmd, ncc::JobSpec& job, std::string& method) {
  cmd->add_option("--family", job.family, "psl2 pgl2 sl2 gl2 psl3 suzuki extraspecial named")->required();
  cmd->add_option("--q", job.q, "field order");
  cmd->add_option("--m", job.m, "Suzuki parameter, q = 2^(2m+1)");
  cmd->add_option("--p", job.p, "prime (extraspecial)");
  cmd->add_option("--n", job.n, "half rank (extraspecial): order p^(2n+1)");
  cmd->add_option("--form", job.form, "plus or minus (extraspecial)");
  cmd->add_option("--name", job.name, "dihedral(k) symmetric(k) alternating(k) quaternion8");
  cmd->add_option("--method", method, "auto formula ac cover lemma20 solver");
  cmd->add_option("--time-limit", job.time_limit_seconds, "solver time limit in seconds");
  cmd->add_option("--node-limit", job.node_limit, "solver node limit");
  cmd->add_flag("--allow-big-memory", job.allow_big_memory, "lift the size caps");
  cmd->add_option("--cache-dir", job.cache_dir, "group cache directory");
  cmd->add_option("--out", job.out, "output file (default stdout)");
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out);
  if (!os) throw ncc::JobError("cannot open " + out);
  os << text;
}

template <class F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const ncc::JobError& e) {
    std::cerr << "invalid job: " << e.what() << "\n";
    return kInvalid;
  } catch (const ncc::InconsistencyError& e) {
    std::cerr << "method inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::length_error& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid job: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid job: " << e.what() << "\n";
    return kInvalid;
  }
}

int cmd_group(ncc::JobSpec& job) {
  auto built = ncc::build_group(job);
  return std::visit(
      [&](const auto& G) {
        auto info = ncc::group_info_json(G);
        info["cache"] = ncc::cache_status_name(built.cache);
        ncc::json r;
        r["schema_version"] = ncc::kReportSchema;
        r["job"] = ncc::job_json(job);
        r["group"] = info;
        emit(r.dump(2) + "\n", job.out);
        return int{kOk};
      },
      built.group);
}

int cmd_omega(ncc::JobSpec& job) {
  const auto t = std::chrono::steady_clock::now();
  auto built = ncc::build_group(job);
  return std::visit(
      [&](const auto& G) {
        if (ncc::center(G).count() == G.size()) throw ncc::JobError(G.meta().label + " is abelian");
        auto cert = ncc::omega(G, job.omega_options());
        auto group = ncc::group_json(G);
        group["cache"] = ncc::cache_status_name(built.cache);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
        emit(ncc::omega_report(job, group, cert, secs).dump(2) + "\n", job.out);
        if (cert.formula && !cert.formula->matched)
          std::cerr << "warning: " << cert.formula->source << " does not admit the certified value " << cert.omega
                    << "\n";
        return int{cert.exact ? kOk : kBudget};
      },
      built.group);
}

int cmd_export(ncc::JobSpec& job, bool collapse) {
  auto built = ncc::build_group(job);
  return std::visit(
      [&](const auto& G) {
        if (ncc::center(G).count() == G.size()) throw ncc::JobError(G.meta().label + " is abelian");
        const auto ng = collapse ? ncc::build_collapsed_ncgraph(G) : ncc::build_ncgraph(G, job.allow_big_memory);
        std::ostringstream os;
        ncc::export_dimacs(ng, os);
        emit(os.str(), job.out);
        return int{kOk};
      },
      built.group);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clique numbers of non-commuting graphs of finite groups"};
  app.require_subcommand(1);

  ncc::JobSpec job;
  std::string method = "auto";
  bool collapse = false;

  auto* group = app.add_subcommand("group", "order, center, order profile, Sylow counts, AC flag");
  add_job_options(group, job, method);
  auto* omega = app.add_subcommand("omega", "certified clique number");
  add_job_options(omega, job, method);
  auto* exp = app.add_subcommand("export", "non-commuting graph in DIMACS format");
  add_job_options(exp, job, method);
  exp->add_flag("--collapse", collapse, "one vertex per non-trivial coset of the center");

  ncc::SuiteOptions suite;
  std::vector<std::string> rows;
  auto* verify = app.add_subcommand("verify", "run the acceptance table");
  verify->add_option("--budget", suite.budget_seconds, "total seconds before remaining rows are skipped");
  verify->add_option("--rows", rows, "row ids to run (default all)")->delimiter(',');
  verify->add_option("--cache-dir", suite.cache_dir, "group cache directory");
  verify->add_option("--seed", suite.sample_seed, "seed for sampled rows");
  verify->add_flag("--inject-mismatch", suite.inject_mismatch, "perturb the first expected value (self-test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  if (*verify) {
    suite.rows.insert(rows.begin(), rows.end());
    auto res = ncc::run_acceptance(suite, std::cout);
    return res.ok() ? kOk : kMismatch;
  }
  return guarded([&] {
    job.method = ncc::parse_method(method);
    if (*group) return cmd_group(job);
    if (*omega) return cmd_omega(job);
    return cmd_export(job, collapse);
  });
}
