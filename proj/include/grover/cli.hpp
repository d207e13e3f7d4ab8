#pragma once

// Command-line front end. Each subcommand is callable in-process with its
// own output streams so tests can check exit codes and bytes directly.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "grover/engine.hpp"

namespace grover::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Bad user input (file contents, flag values). Maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// ---- run ----------------------------------------------------------------

enum class OutputFormat { kJson, kCsv };

struct RunOptions {
  int qubits = 0;
  std::string marked = "random";   // index or "random"
  std::string iterations = "auto"; // count or "auto"
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  bool trace = false;
  DiffusionPath diffusion = DiffusionPath::kDirect;
  OutputFormat format = OutputFormat::kJson;
};

/// Turns flag values into a validated RunConfig. Throws ConfigError or
/// InputError.
RunConfig make_run_config(const RunOptions& opts);

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err);

// ---- verify -------------------------------------------------------------

struct VerifyOptions {
  int max_qubits = 6;
  /// Test hook: builds R with the opposite sign so D = WRW must fail.
  bool corrupt_r_sign = false;
};

struct IdentityCheck {
  std::string name;
  int qubits = 0;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass() const { return deviation <= tolerance; }
};

inline constexpr int kMaxVerifyQubits = 8;

/// Every operator identity at every n in [1, max_qubits].
std::vector<IdentityCheck> verify_identities(const VerifyOptions& opts);

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

// ---- compare ------------------------------------------------------------

struct CompareRow {
  std::uint64_t dimension = 0;
  std::uint64_t quantum_iterations_auto = 0;
  double quantum_success_prob = 0.0;
  std::uint64_t classical_queries_for_half_success = 0;
};

std::vector<CompareRow> compare_table(int max_qubits, std::uint64_t trials, std::uint64_t seed);

int cmd_compare(int max_qubits, std::uint64_t trials, std::uint64_t seed, std::ostream& out,
                std::ostream& err);

// ---- directory ----------------------------------------------------------

struct DirectoryRecord {
  std::string key;
  std::string value;
  BasisIndex index;
};

/// Parses newline-delimited `name,number` records (LF or CRLF). Blank lines
/// are skipped. Throws InputError naming the line for malformed records.
std::vector<DirectoryRecord> parse_directory(std::istream& in);
std::vector<DirectoryRecord> load_directory(const std::string& path);

struct DirectoryOutcome {
  std::string name;
  std::optional<std::string> number;  // empty on a sampled miss
  bool found = false;
  std::uint64_t target_index = 0;
  std::uint64_t sampled_index = 0;
  double success_prob = 0.0;
  std::uint64_t oracle_queries = 0;
  std::uint64_t iterations_per_attempt = 0;
  std::uint64_t attempts = 0;
  std::uint64_t records = 0;
  std::uint64_t padded_size = 0;
  double classical_expected_queries = 0.0;
};

/// Pads the records to the next power of two, marks `name`, runs AUTO
/// iterations and measures once per attempt (1 + retries attempts at most).
/// Throws InputError if the key is absent or appears more than once.
DirectoryOutcome search_directory(const std::vector<DirectoryRecord>& records,
                                  const std::string& name, std::uint64_t seed,
                                  std::uint64_t retries);

int cmd_directory(const std::string& path, const std::string& name, std::uint64_t seed,
                  std::uint64_t retries, std::ostream& out, std::ostream& err);

// ---- serialization ------------------------------------------------------

/// Shortest-safe round-trip text: 17 significant digits, '.' decimal.
std::string format_double(double v);

inline constexpr const char* kTrajectoryHeader =
    "j,marked_amp,unmarked_amp,c_scale,average_after_flip,success_prob";

void write_trajectory_csv(const std::vector<TrajectoryPoint>& rows, std::ostream& out);

/// One JSON object, keys in fixed order, terminated by a newline.
std::string run_result_json(const RunResult& result);

}  // namespace grover::cli
