#include <bit>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>

#include <json.hpp>

#include "grover/cli.hpp"
#include "grover/errors.hpp"
#include "grover/rng.hpp"

namespace grover::cli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<DirectoryRecord> parse_directory(std::istream& in) {
  std::vector<DirectoryRecord> records;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw InputError("line " + std::to_string(line_no) + ": expected 'name,number'");
    }
    std::string key = trim(line.substr(0, comma));
    if (key.empty()) throw InputError("line " + std::to_string(line_no) + ": empty name");
    records.push_back({std::move(key), trim(line.substr(comma + 1)),
                       BasisIndex{static_cast<std::uint64_t>(records.size())}});
  }
  if (records.empty()) throw InputError("directory has no records");
  return records;
}

std::vector<DirectoryRecord> load_directory(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open directory file '" + path + "'");
  return parse_directory(in);
}

DirectoryOutcome search_directory(const std::vector<DirectoryRecord>& records,
                                  const std::string& name, std::uint64_t seed,
                                  std::uint64_t retries) {
  const DirectoryRecord* target = nullptr;
  for (const DirectoryRecord& r : records) {
    if (r.key != name) continue;
    if (target != nullptr) {
      throw InputError("name '" + name + "' appears more than once (records " +
                       std::to_string(target->index.value + 1) + " and " +
                       std::to_string(r.index.value + 1) + ")");
    }
    target = &r;
  }
  if (target == nullptr) throw InputError("name '" + name + "' not found in directory");

  // Padding entries beyond the last record are never marked.
  const std::uint64_t count = records.size();
  const int width = std::max(1, static_cast<int>(std::bit_width(count - 1)));
  const QubitCount n(width);

  DirectoryOutcome out;
  out.name = name;
  out.target_index = target->index.value;
  out.records = count;
  out.padded_size = n.dimension();
  out.classical_expected_queries = static_cast<double>(count) / 2.0;

  for (std::uint64_t attempt = 0; attempt <= retries; ++attempt) {
    RunConfig cfg;
    cfg.n = n;
    cfg.marked = target->index;
    cfg.seed = mix_seed(seed, attempt);
    cfg.sample_count = 1;
    const RunResult r = run(cfg);

    ++out.attempts;
    out.oracle_queries += r.oracle_queries;
    out.iterations_per_attempt = r.iterations_executed;
    out.success_prob = r.final_success_prob;
    out.sampled_index = r.samples.front().value;
    if (out.sampled_index == target->index.value) {
      out.found = true;
      out.number = target->value;
      break;
    }
  }
  return out;
}

int cmd_directory(const std::string& path, const std::string& name, std::uint64_t seed,
                  std::uint64_t retries, std::ostream& out, std::ostream& err) {
  DirectoryOutcome res;
  try {
    res = search_directory(load_directory(path), name, seed, retries);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  nlohmann::ordered_json j;
  j["name"] = res.name;
  j["found"] = res.found;
  j["number"] = res.number ? nlohmann::ordered_json(*res.number) : nlohmann::ordered_json(nullptr);
  j["sampled_index"] = res.sampled_index;
  j["target_index"] = res.target_index;
  j["success_prob"] = res.success_prob;
  j["oracle_queries"] = res.oracle_queries;
  j["iterations_per_attempt"] = res.iterations_per_attempt;
  j["attempts"] = res.attempts;
  j["records"] = res.records;
  j["padded_size"] = res.padded_size;
  j["classical_expected_queries"] = res.classical_expected_queries;
  out << j.dump(2) << '\n';
  return kExitOk;
}

}  // namespace grover::cli
