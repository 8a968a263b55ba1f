#include "commands.hpp"

#include <sys/resource.h>

#include <chrono>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>

#include "edge_list.hpp"
#include "sinks.hpp"
#include "wdfa/census.hpp"
#include "wdfa/oracle.hpp"
#include "wdfa/random.hpp"
#include "wdfa/stream.hpp"

namespace wdfa::cli {

namespace {

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

// The expected-attempts bound needs sigma <= m / ln m; outside that regime
// generation stays correct but may retry noticeably.
void warn_sigma_regime(const Params& p) {
  const double lnm = std::log(static_cast<double>(p.m));
  if (static_cast<double>(p.sigma) * lnm > static_cast<double>(p.m))
    std::cerr << "warning: sigma = " << p.sigma << " exceeds m/ln m = "
              << static_cast<double>(p.m) / lnm
              << "; the expected-attempts bound assumes sigma <= m/ln m\n";
}

std::uint64_t peak_rss_bytes() {
  rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  return static_cast<std::uint64_t>(ru.ru_maxrss) * 1024;  // Linux reports KiB
}

double seconds_between(std::chrono::steady_clock::time_point a,
                       std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

int generate_dot(const Params& p, std::uint64_t seed, const GenerateConfig& cfg) {
  if (p.n > 100) return usage_error("--format dot is for inspection; the cap is n <= 100");
  Rng rng(seed);
  VectorSink sink;
  sample_stream(p, rng, sink, StreamOptions{cfg.max_attempts});
  const WheelerDfa d{p.n, p.sigma, sink.edges()};
  const std::string banner = "// wdfa n=" + std::to_string(p.n) + " m=" + std::to_string(p.m) +
                             " sigma=" + std::to_string(p.sigma) +
                             " seed=" + std::to_string(seed) + "\n";
  if (cfg.out == "-") {
    std::cout << banner;
    write_dot(std::cout, d);
    std::cout.flush();
    if (!std::cout) throw io_error("write failure on stdout");
  } else {
    std::ofstream out(cfg.out, std::ios::binary);
    if (!out) throw io_error("cannot open '" + cfg.out + "' for writing");
    out << banner;
    write_dot(out, d);
    out.flush();
    if (!out) throw io_error("write failure on '" + cfg.out + "'");
  }
  return 0;
}

}  // namespace

int cmd_generate(const GenerateConfig& cfg) {
  const Params p{cfg.n, cfg.m, cfg.sigma};
  if (const auto err = validate_params(p)) return usage_error(*err);
  warn_sigma_regime(p);
  const std::uint64_t seed = cfg.seed ? *cfg.seed : entropy_seed();
  const EdgeListHeader header{p.n, p.m, p.sigma, seed};

  if (cfg.format == "dot") return generate_dot(p, seed, cfg);

  std::unique_ptr<Sink> owned;
  NullSink null;
  Sink* sink = nullptr;
  if (cfg.sink == "null") {
    sink = &null;
    std::fputs(format_header(header).c_str(), stdout);
  } else if (cfg.out == "-") {
    if (!cfg.raw_stream && restarts_possible(p))
      return usage_error(
          "rejected attempts are possible for these parameters and stdout cannot be "
          "rewound; write to a file with -o FILE or frame the stream with --raw-stream");
    owned = std::make_unique<StdoutEdgeSink>(header, cfg.raw_stream);
    sink = owned.get();
  } else {
    owned = std::make_unique<EdgeListFileSink>(cfg.out, header);
    sink = owned.get();
  }

  Rng rng(seed);
  try {
    sample_stream(p, rng, *sink, StreamOptions{cfg.max_attempts});
  } catch (const io_error&) {
    throw;
  } catch (const std::runtime_error& e) {  // exhausted the attempt cap
    owned.reset();
    if (cfg.out != "-" && cfg.sink != "null") std::remove(cfg.out.c_str());
    return usage_error(e.what());
  }
  return 0;
}

int cmd_count(const CountConfig& cfg) {
  if (cfg.bounds_mode) {
    const Bounds b = bounds(cfg.n, cfg.sigma, cfg.eps);
    const double exact = log2_count(count_all_m(cfg.n, cfg.sigma));
    std::printf("lower_bits=%.6f\nupper_bits=%.6f\nlog2_exact=%.6f\n", b.lower, b.upper, exact);
    return 0;
  }
  if (cfg.all_m) {
    std::cout << count_all_m(cfg.n, cfg.sigma).str() << "\n";
    return 0;
  }
  if (!cfg.m) return usage_error("count needs -m (or one of --all-m, --bounds)");
  const Params p{cfg.n, *cfg.m, cfg.sigma};
  std::cout << (cfg.non_effective ? count_wdfa_noneffective(p) : count_wdfa(p)).str() << "\n";
  return 0;
}

int cmd_verify(const std::string& path) {
  const ParsedFile file = read_edge_list_file(path);
  // The automaton actually present gets judged: surplus lines beyond the
  // header's m change it and the verdict below will say how it fails.
  const WheelerDfa d{file.header.n, file.header.sigma, file.edges};
  std::string reason;
  if (const auto err = validate_params(Params{d.n, d.m(), d.sigma})) {
    reason = *err;
  } else {
    try {
      const CheckResult chk = check_wheeler(d);
      if (chk.ok) {
        std::cout << "VALID\n";
        return 0;
      }
      reason = chk.reason;
    } catch (const std::out_of_range& e) {  // states or labels outside 1..n / 1..sigma
      reason = e.what();
    }
  }
  std::cout << "INVALID: " << reason << "\n";
  return 1;
}

int cmd_enumerate(const EnumerateConfig& cfg) {
  const Params p{cfg.n, cfg.m, cfg.sigma};
  require_valid(p);
  constexpr std::uint64_t kMaxFamily = 100000;
  if (p.n * p.sigma <= 24) {  // otherwise for_each_wdfa's own guard speaks below
    const BigCount family = count_wdfa(p);
    if (family > kMaxFamily)
      return usage_error("the family has " + family.str() + " members; the enumeration cap is " +
                         std::to_string(kMaxFamily));
    std::cout << family.str() << "\n";
  }
  for_each_wdfa(p, [](const WheelerDfa& d) {
    std::cout << "\n";
    for (const Transition& t : d.transitions) std::cout << format_edge(t);
  });
  std::cout.flush();
  if (!std::cout) throw io_error("write failure on stdout");
  return 0;
}

int cmd_bench(const BenchConfig& cfg) {
  Rng rng(cfg.seed ? *cfg.seed : entropy_seed());

  if (cfg.grid) {
    std::printf("n,m,sigma,edges,attempts,seconds,edges_per_sec\n");
    for (int i = 0; i <= 6; ++i) {
      const std::uint64_t n = std::uint64_t{1} << (15 + i);
      for (int j = 0; j <= 7; ++j) {
        const Params p{n, (n << j) - 1, 128};
        NullSink sink;
        const auto t0 = std::chrono::steady_clock::now();
        const StreamStats st = sample_stream(p, rng, sink);
        const double secs = seconds_between(t0, std::chrono::steady_clock::now());
        std::printf("%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%.6f,%.1f\n",
                    p.n, p.m, p.sigma, st.edges, st.attempts, secs,
                    static_cast<double>(st.edges) / secs);
        std::fflush(stdout);
      }
    }
    return 0;
  }

  const Params p{cfg.n, cfg.m, cfg.sigma};
  if (const auto err = validate_params(p)) return usage_error(*err);
  if (cfg.runs == 0) return usage_error("--runs must be positive");
  warn_sigma_regime(p);

  std::uint64_t edges = 0, attempts = 0;
  NullSink sink;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::uint64_t r = 0; r < cfg.runs; ++r) {
    const StreamStats st = sample_stream(p, rng, sink);
    edges += st.edges;
    attempts += st.attempts;
  }
  const double secs = seconds_between(t0, std::chrono::steady_clock::now());
  const double eps_rate = static_cast<double>(edges) / secs;

  std::printf("n=%" PRIu64 "\nm=%" PRIu64 "\nsigma=%" PRIu64 "\nseed=%" PRIu64 "\nruns=%" PRIu64
              "\nedges=%" PRIu64 "\nattempts=%" PRIu64 "\n",
              p.n, p.m, p.sigma, rng.seed(), cfg.runs, edges, attempts);
  std::printf("mean_attempts=%.4f\nseconds=%.6f\nedges_per_sec=%.1f\npeak_rss_bytes=%" PRIu64
              "\n",
              static_cast<double>(attempts) / static_cast<double>(cfg.runs), secs, eps_rate,
              peak_rss_bytes());
  if (eps_rate < 1e6)
    std::cerr << "warning: throughput " << eps_rate << " edges/s is below the 1e6 soft floor\n";
  return 0;
}

}  // namespace wdfa::cli
