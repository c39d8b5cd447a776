#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tilab/indices.hpp"
#include "tilab/search.hpp"
#include "tilab/verify.hpp"

namespace tilab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitRefuted = 2;

enum class Format { Json, Csv, Plain };

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> graph6;
  std::string file;
  int n = 0;
  std::vector<int> m;
  int k = 2;
  std::vector<IndexKind> kinds;
  Format format = Format::Plain;
  std::string out;
  int workers = 1;
  std::uint64_t seed = 1;
  std::uint64_t trials = 1000;
  bool strict = false;
  bool large = false;
  std::vector<std::string> claims;
  GridSpec grid;
  int fuzz_n_min = 4;
  int fuzz_n_max = 8;
};

/// Parses argv-style arguments (without the program name). Returns nullopt
/// after printing help or a usage error; `exit_code` says which.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out,
                                    std::ostream& err, int& exit_code);

/// Runs one subcommand. Returns the process exit code.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by execute; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Report rendering, shared by the commands and the tests.

struct IndexRecord {
  std::string graph6;
  IndexKind kind;
  IndexValue value;
};

struct VkRecord {
  std::string graph6;
  int k = 2;
  int vk = 0;
};

void write_index(std::ostream& out, Format f, const std::vector<IndexRecord>& records,
                 std::size_t kinds_per_graph);
void write_vk(std::ostream& out, Format f, const std::vector<VkRecord>& records);
void write_construct(std::ostream& out, Format f, const PartitionSpec& spec,
                     const std::string& graph6);
void write_scan(std::ostream& out, Format f, const std::vector<ExtremalReport>& reports);
void write_verify(std::ostream& out, Format f, const std::vector<VerificationReport>& reports);
void write_fuzz(std::ostream& out, Format f, const std::vector<FuzzReport>& reports);

}  // namespace tilab::cli
