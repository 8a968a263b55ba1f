#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace wdfa::cli {

// Exit codes shared by every subcommand: 0 success (or VALID), 1 semantic
// verdict (verify: not a Wheeler DFA), 2 invalid parameters or guard
// violations, 3 parse and I/O failures.

struct GenerateConfig {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t sigma = 0;
  std::optional<std::uint64_t> seed;
  std::string out = "-";  // "-" = stdout
  std::string format = "edge";
  std::string sink;  // "null" discards edges, header still echoed
  bool raw_stream = false;
  std::uint64_t max_attempts = 0;  // 0 = default cap
};
int cmd_generate(const GenerateConfig& cfg);

struct CountConfig {
  std::uint64_t n = 0;
  std::uint64_t sigma = 0;
  std::optional<std::uint64_t> m;
  bool all_m = false;
  bool non_effective = false;
  bool bounds_mode = false;
  double eps = 0.5;
};
int cmd_count(const CountConfig& cfg);

int cmd_verify(const std::string& path);

struct EnumerateConfig {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t sigma = 0;
};
int cmd_enumerate(const EnumerateConfig& cfg);

struct BenchConfig {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t sigma = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t runs = 1;
  bool grid = false;
};
int cmd_bench(const BenchConfig& cfg);

}  // namespace wdfa::cli
