#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wdfa/automaton.hpp"

namespace wdfa::cli {

// Malformed bytes (bad header, bad field, deficit against the header's m).
// The message always starts with "line <k>: ".
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File-system trouble distinct from generic runtime errors so the command
// layer can map it to the I/O exit code.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EdgeListHeader {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t sigma = 0;
  std::uint64_t seed = 0;
};

// "# wdfa n=<n> m=<m> sigma=<sigma> seed=<seed>" with a trailing newline.
std::string format_header(const EdgeListHeader& h);

// "<source>\t<label>\t<dest>" with a trailing newline.
std::string format_edge(const Transition& t);

struct ParsedFile {
  EdgeListHeader header;
  std::vector<Transition> edges;  // may exceed header.m; never falls short
};

// Strict reader for the edge-list format: exact header line, then
// tab-separated decimal triples, LF endings, empty lines ignored. Fewer
// edge lines than the header's m is a parse_error; surplus lines are kept
// so the validator can judge the automaton that is actually present.
ParsedFile read_edge_list(std::istream& in);

// Convenience: opens and reads, io_error when the file cannot be opened.
ParsedFile read_edge_list_file(const std::string& path);

}  // namespace wdfa::cli
