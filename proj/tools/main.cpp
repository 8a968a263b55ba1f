#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "edge_list.hpp"

int main(int argc, char** argv) {
  CLI::App app{"uniform Wheeler DFA toolkit: generate, count, verify, enumerate, bench"};
  app.require_subcommand(1);

  wdfa::cli::GenerateConfig gen;
  CLI::App* generate = app.add_subcommand("generate", "sample one automaton uniformly");
  generate->add_option("-n", gen.n, "number of states")->required();
  generate->add_option("-m", gen.m, "number of transitions")->required();
  generate->add_option("-s,--sigma", gen.sigma, "alphabet size")->required();
  generate->add_option("--seed", gen.seed, "RNG seed (default: OS entropy)");
  generate->add_option("-o,--output", gen.out, "output file, - for stdout (default)");
  generate->add_option("--format", gen.format, "edge (default) or dot")
      ->check(CLI::IsMember({"edge", "dot"}));
  generate->add_option("--sink", gen.sink, "null: discard edges, print only the header")
      ->check(CLI::IsMember({"null"}));
  generate->add_flag("--raw-stream", gen.raw_stream,
                     "frame stdout with '# restart'/'# commit' markers");
  generate->add_option("--max-attempts", gen.max_attempts,
                       "override the rejection cap (default 64*ln(m)+64)");

  wdfa::cli::CountConfig cnt;
  CLI::App* count = app.add_subcommand("count", "exact family sizes and bit-size bounds");
  count->add_option("-n", cnt.n, "number of states")->required();
  count->add_option("-s,--sigma", cnt.sigma, "alphabet size")->required();
  CLI::Option* m_opt = count->add_option("-m", cnt.m, "number of transitions");
  CLI::Option* all_m = count->add_flag("--all-m", cnt.all_m, "sum over every feasible m");
  CLI::Option* noneff = count->add_flag("--non-effective", cnt.non_effective,
                                        "drop the every-label-used requirement");
  CLI::Option* bnd = count->add_flag("--bounds", cnt.bounds_mode,
                                     "print lower/upper bit-size bounds and the exact log2");
  count->add_option("--eps", cnt.eps, "slack parameter for --bounds (default 0.5)")->needs(bnd);
  all_m->excludes(m_opt)->excludes(noneff)->excludes(bnd);
  noneff->needs(m_opt)->excludes(bnd);
  bnd->excludes(m_opt);

  std::string verify_path;
  CLI::App* verify = app.add_subcommand("verify", "check a file against the Wheeler axioms");
  verify->add_option("path", verify_path, "edge-list file")->required();

  wdfa::cli::EnumerateConfig enu;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list every member of a small family");
  enumerate->add_option("-n", enu.n, "number of states")->required();
  enumerate->add_option("-m", enu.m, "number of transitions")->required();
  enumerate->add_option("-s,--sigma", enu.sigma, "alphabet size")->required();

  wdfa::cli::BenchConfig bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "throughput and memory measurements");
  bench_cmd->add_option("-n", bench.n, "number of states");
  bench_cmd->add_option("-m", bench.m, "number of transitions");
  bench_cmd->add_option("-s,--sigma", bench.sigma, "alphabet size");
  bench_cmd->add_option("--seed", bench.seed, "RNG seed (default: OS entropy)");
  bench_cmd->add_option("--runs", bench.runs, "generations to time (default 1)");
  bench_cmd->add_flag("--grid", bench.grid, "run the doubling grid and emit CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (generate->parsed()) return wdfa::cli::cmd_generate(gen);
    if (count->parsed()) return wdfa::cli::cmd_count(cnt);
    if (verify->parsed()) return wdfa::cli::cmd_verify(verify_path);
    if (enumerate->parsed()) return wdfa::cli::cmd_enumerate(enu);
    if (bench_cmd->parsed()) return wdfa::cli::cmd_bench(bench);
  } catch (const wdfa::cli::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const wdfa::cli::io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;  // unreachable with require_subcommand(1)
}
