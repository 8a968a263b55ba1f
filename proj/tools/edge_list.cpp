#include "edge_list.hpp"

#include <charconv>
#include <fstream>

namespace wdfa::cli {

namespace {

[[noreturn]] void fail(std::uint64_t line, const std::string& what) {
  throw parse_error("line " + std::to_string(line) + ": " + what);
}

// Consumes a full decimal uint64 from pos; no sign, no leading blanks.
std::uint64_t eat_number(std::string_view s, std::size_t& pos, std::uint64_t line,
                         const char* what) {
  std::uint64_t value = 0;
  const char* begin = s.data() + pos;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec == std::errc::result_out_of_range)
    fail(line, std::string(what) + " does not fit in 64 bits");
  if (ec != std::errc() || ptr == begin)
    fail(line, std::string("expected a decimal ") + what);
  pos += static_cast<std::size_t>(ptr - begin);
  return value;
}

void eat_literal(std::string_view s, std::size_t& pos, std::string_view lit,
                 std::uint64_t line, const char* what) {
  if (s.substr(pos, lit.size()) != lit) fail(line, what);
  pos += lit.size();
}

}  // namespace

std::string format_header(const EdgeListHeader& h) {
  return "# wdfa n=" + std::to_string(h.n) + " m=" + std::to_string(h.m) +
         " sigma=" + std::to_string(h.sigma) + " seed=" + std::to_string(h.seed) + "\n";
}

std::string format_edge(const Transition& t) {
  return std::to_string(t.source) + "\t" + std::to_string(t.label) + "\t" +
         std::to_string(t.dest) + "\n";
}

ParsedFile read_edge_list(std::istream& in) {
  ParsedFile file;
  std::string raw;
  std::uint64_t line = 0;

  if (!std::getline(in, raw)) fail(1, "missing header");
  ++line;
  {
    std::size_t pos = 0;
    eat_literal(raw, pos, "# wdfa n=", line, "header must start with '# wdfa n='");
    file.header.n = eat_number(raw, pos, line, "n");
    eat_literal(raw, pos, " m=", line, "expected ' m=' in header");
    file.header.m = eat_number(raw, pos, line, "m");
    eat_literal(raw, pos, " sigma=", line, "expected ' sigma=' in header");
    file.header.sigma = eat_number(raw, pos, line, "sigma");
    eat_literal(raw, pos, " seed=", line, "expected ' seed=' in header");
    file.header.seed = eat_number(raw, pos, line, "seed");
    if (pos != raw.size()) fail(line, "trailing bytes after the header");
  }

  while (std::getline(in, raw)) {
    ++line;
    if (raw.empty()) continue;
    std::size_t pos = 0;
    Transition t;
    t.source = eat_number(raw, pos, line, "source state");
    eat_literal(raw, pos, "\t", line, "expected a tab after the source state");
    t.label = eat_number(raw, pos, line, "label");
    eat_literal(raw, pos, "\t", line, "expected a tab after the label");
    t.dest = eat_number(raw, pos, line, "destination state");
    if (pos != raw.size()) fail(line, "trailing bytes after the destination state");
    file.edges.push_back(t);
  }
  if (in.bad()) throw io_error("read failure after line " + std::to_string(line));

  if (file.edges.size() < file.header.m)
    fail(line + 1, "file ends after " + std::to_string(file.edges.size()) + " of " +
                       std::to_string(file.header.m) + " edge lines");
  return file;
}

ParsedFile read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open '" + path + "' for reading");
  return read_edge_list(in);
}

}  // namespace wdfa::cli
