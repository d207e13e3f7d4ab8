#include <charconv>
#include <cstdio>
#include <ostream>
#include <string>
#include <system_error>

#include <CLI11.hpp>

#include "grover/baseline.hpp"
#include "grover/cli.hpp"
#include "grover/dense.hpp"
#include "grover/errors.hpp"
#include "grover/rng.hpp"
#include "grover/transforms.hpp"

namespace grover::cli {
namespace {

// Stream tag for drawing a random marked index from the run seed; keeps it
// independent of the measurement stream.
constexpr std::uint64_t kMarkedStream = 0x6d61726b;

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw InputError(std::string("invalid ") + what + ": '" + text + "'");
  }
  return v;
}

double max_state_deviation(const StateVector& a, const StateVector& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

// ---- run ----------------------------------------------------------------

RunConfig make_run_config(const RunOptions& opts) {
  RunConfig cfg;
  cfg.n = QubitCount(opts.qubits);
  cfg.seed = opts.seed;
  cfg.sample_count = opts.samples;
  cfg.trace = opts.trace;
  cfg.diffusion = opts.diffusion;
  if (opts.marked == "random") {
    cfg.marked = BasisIndex{Rng(mix_seed(opts.seed, kMarkedStream)).below(cfg.n.dimension())};
  } else {
    cfg.marked = BasisIndex{parse_u64(opts.marked, "marked index")};
  }
  cfg.iterations = opts.iterations == "auto"
                       ? IterationPlan::automatic()
                       : IterationPlan::exactly(parse_u64(opts.iterations, "iteration count"));
  cfg.validate();
  return cfg;
}

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  RunResult result;
  try {
    result = run(make_run_config(opts));
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (opts.format == OutputFormat::kJson) {
    out << run_result_json(result);
  } else if (opts.trace) {
    write_trajectory_csv(result.trajectory, out);
  } else {
    out << "qubits,marked,iterations_executed,oracle_queries,final_success_prob,"
           "sample_hit_fraction\n"
        << result.config.n.value() << ',' << result.config.marked.value << ','
        << result.iterations_executed << ',' << result.oracle_queries << ','
        << format_double(result.final_success_prob) << ','
        << format_double(result.sample_hit_fraction) << '\n';
  }
  return kExitOk;
}

// ---- verify -------------------------------------------------------------

std::vector<IdentityCheck> verify_identities(const VerifyOptions& opts) {
  if (opts.max_qubits < 1 || opts.max_qubits > kMaxVerifyQubits) {
    throw ConfigError("--max-qubits must be in [1, " + std::to_string(kMaxVerifyQubits) + "]");
  }
  using namespace dense;
  constexpr double kDenseTol = 1e-12;
  constexpr double kFastTol = 1e-10;
  constexpr int kStatesPerSize = 4;

  std::vector<IdentityCheck> checks;
  for (int q = 1; q <= opts.max_qubits; ++q) {
    const QubitCount n(q);
    auto add = [&](std::string name, double dev, double tol) {
      checks.push_back({std::move(name), q, dev, tol});
    };

    const DenseOperator id = identity(n);
    const DenseOperator w = build_w(n);
    DenseOperator r = build_r(n);
    if (opts.corrupt_r_sign) r *= -1.0;
    const DenseOperator p = build_p(n);
    const DenseOperator d = build_d(n);
    const DenseOperator wrw = mat_mul(mat_mul(w, r), w);

    add("WW=I", max_deviation(mat_mul(w, w), id), kDenseTol);
    add("R=R1+R2", max_deviation(r, build_r1(n) + build_r2(n)), kDenseTol);
    add("WR1W=-I", max_deviation(mat_mul(mat_mul(w, build_r1(n)), w), -1.0 * id), kDenseTol);
    add("WR2W=2P", max_deviation(mat_mul(mat_mul(w, build_r2(n)), w), 2.0 * p), kDenseTol);
    add("D=WRW", max_deviation(d, wrw), kDenseTol);
    add("D=-I+2P", max_deviation(d, -1.0 * id + 2.0 * p), kDenseTol);
    add("P^2=P", max_deviation(mat_mul(p, p), p), kDenseTol);
    add("D^2=I", max_deviation(mat_mul(d, d), id), kDenseTol);
    add("unitary(W)", max_deviation(mat_mul(w, conjugate_transpose(w)), id), kDenseTol);
    add("unitary(D)", max_deviation(mat_mul(d, conjugate_transpose(d)), id), kDenseTol);

    double fast_w = 0.0, fast_direct = 0.0, fast_wrw = 0.0;
    for (int k = 0; k < kStatesPerSize; ++k) {
      const StateVector v = random_state(n, mix_seed(static_cast<std::uint64_t>(q), k));
      StateVector a = v;
      walsh_hadamard(a);
      fast_w = std::max(fast_w, max_state_deviation(a, mat_vec(w, v)));
      const StateVector dv = mat_vec(d, v);
      StateVector b = v;
      diffusion_direct(b);
      fast_direct = std::max(fast_direct, max_state_deviation(b, dv));
      StateVector c = v;
      diffusion_wrw(c);
      fast_wrw = std::max(fast_wrw, max_state_deviation(c, dv));
    }
    add("fast W = dense W", fast_w, kDenseTol);
    add("direct D = dense D", fast_direct, kFastTol);
    add("WRW D = dense D", fast_wrw, kFastTol);
  }
  return checks;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<IdentityCheck> checks;
  try {
    checks = verify_identities(opts);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  bool ok = true;
  char line[160];
  std::snprintf(line, sizeof line, "%-20s %2s  %-24s %-9s %s\n", "identity", "n", "max_deviation",
                "tolerance", "result");
  out << line;
  for (const IdentityCheck& c : checks) {
    std::snprintf(line, sizeof line, "%-20s %2d  %-24.17g %-9.0e %s\n", c.name.c_str(), c.qubits,
                  c.deviation, c.tolerance, c.pass() ? "pass" : "FAIL");
    out << line;
    if (!c.pass()) {
      ok = false;
      err << "identity " << c.name << " failed at n=" << c.qubits << ": max deviation "
          << format_double(c.deviation) << " > " << c.tolerance << '\n';
    }
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

// ---- compare ------------------------------------------------------------

std::vector<CompareRow> compare_table(int max_qubits, std::uint64_t trials, std::uint64_t seed) {
  if (max_qubits < 2) throw ConfigError("--qubits must be at least 2 for compare");
  if (trials == 0) throw ConfigError("--trials must be at least 1");
  std::vector<CompareRow> rows;
  for (int q = 2; q <= max_qubits; ++q) {
    const QubitCount n(q);
    const std::uint64_t row_seed = mix_seed(seed, static_cast<std::uint64_t>(q));
    RunConfig cfg;
    cfg.n = n;
    cfg.marked = BasisIndex{Rng(mix_seed(row_seed, kMarkedStream)).below(n.dimension())};
    cfg.seed = row_seed;
    const RunResult quantum = run(cfg);
    const ClassicalSummary classical = classical_baseline(n, row_seed, trials);
    rows.push_back({n.dimension(), quantum.iterations_executed, quantum.final_success_prob,
                    classical.queries_for_half_success});
  }
  return rows;
}

int cmd_compare(int max_qubits, std::uint64_t trials, std::uint64_t seed, std::ostream& out,
                std::ostream& err) {
  std::vector<CompareRow> rows;
  try {
    rows = compare_table(max_qubits, trials, seed);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  out << "N,quantum_iterations_auto,quantum_success_prob,classical_queries_for_half_success\n";
  for (const CompareRow& r : rows) {
    out << r.dimension << ',' << r.quantum_iterations_auto << ','
        << format_double(r.quantum_success_prob) << ',' << r.classical_queries_for_half_success
        << '\n';
  }
  return kExitOk;
}

// ---- entry point --------------------------------------------------------

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"State-vector simulator for quantum search"};
  app.require_subcommand(1);

  RunOptions run_opts;
  std::string diffusion = "direct";
  std::string format = "json";
  auto* run_cmd = app.add_subcommand("run", "Run the search and print the result");
  run_cmd->add_option("--qubits", run_opts.qubits, "Register width n (N = 2^n)")->required();
  run_cmd->add_option("--marked", run_opts.marked, "Marked index, or 'random'");
  run_cmd->add_option("--iterations", run_opts.iterations, "Iteration count, or 'auto'");
  run_cmd->add_option("--seed", run_opts.seed, "Seed for sampling and random choices");
  run_cmd->add_option("--samples", run_opts.samples, "Number of measurements of the final state");
  run_cmd->add_flag("--trace", run_opts.trace, "Record the per-iteration trajectory");
  run_cmd->add_option("--diffusion", diffusion, "Diffusion path")
      ->check(CLI::IsMember({"direct", "wrw"}));
  run_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  VerifyOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Check operator identities on dense matrices");
  verify_cmd->add_option("--max-qubits", verify_opts.max_qubits, "Largest n to check")
      ->check(CLI::Range(1, kMaxVerifyQubits));
  verify_cmd->add_option("--inject-fault", "Mutation hook: 'r-sign' flips the sign of R")
      ->check(CLI::IsMember({"r-sign"}))
      ->group("");

  int compare_qubits = 10;
  std::uint64_t compare_trials = 10000;
  std::uint64_t compare_seed = 0;
  auto* compare_cmd = app.add_subcommand("compare", "Quantum AUTO vs classical scan, n = 2..q");
  compare_cmd->add_option("--qubits", compare_qubits, "Largest n");
  compare_cmd->add_option("--trials", compare_trials, "Classical trials per row");
  compare_cmd->add_option("--seed", compare_seed, "Seed");

  std::string dir_file;
  std::string dir_name;
  std::uint64_t dir_seed = 0;
  std::uint64_t dir_retries = 0;
  auto* dir_cmd = app.add_subcommand("directory", "Look up a name in a phone directory file");
  dir_cmd->add_option("--file", dir_file, "Records as 'name,number' lines")->required();
  dir_cmd->add_option("--name", dir_name, "Name to search for")->required();
  dir_cmd->add_option("--seed", dir_seed, "Seed");
  dir_cmd->add_option("--retries", dir_retries, "Extra independent attempts after a miss");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; every other parse failure is a usage error.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  if (run_cmd->parsed()) {
    run_opts.diffusion = diffusion == "wrw" ? DiffusionPath::kWrw : DiffusionPath::kDirect;
    run_opts.format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
    return cmd_run(run_opts, out, err);
  }
  if (verify_cmd->parsed()) {
    verify_opts.corrupt_r_sign = verify_cmd->count("--inject-fault") > 0;
    return cmd_verify(verify_opts, out, err);
  }
  if (compare_cmd->parsed()) return cmd_compare(compare_qubits, compare_trials, compare_seed, out, err);
  return cmd_directory(dir_file, dir_name, dir_seed, dir_retries, out, err);
}

}  // namespace grover::cli
