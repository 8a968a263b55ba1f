#include "sinks.hpp"

#include <unistd.h>

#include <cinttypes>
#include <stdexcept>

namespace wdfa::cli {

EdgeListFileSink::EdgeListFileSink(const std::string& path, const EdgeListHeader& header)
    : path_(path) {
  file_ = std::fopen(path.c_str(), "wb");
  if (!file_) throw io_error("cannot open '" + path + "' for writing");
  const std::string h = format_header(header);
  std::fwrite(h.data(), 1, h.size(), file_);
  mark_ = std::ftell(file_);
  if (mark_ < 0) throw io_error("cannot position '" + path + "'");
}

EdgeListFileSink::~EdgeListFileSink() {
  if (file_) std::fclose(file_);
}

void EdgeListFileSink::emit(const Transition& t) {
  std::fprintf(file_, "%" PRIu64 "\t%" PRIu64 "\t%" PRIu64 "\n", t.source, t.label, t.dest);
}

void EdgeListFileSink::restart() {
  if (std::fflush(file_) != 0 || std::fseek(file_, mark_, SEEK_SET) != 0 ||
      ftruncate(fileno(file_), mark_) != 0)
    throw io_error("cannot rewind '" + path_ + "' after a rejected attempt");
}

void EdgeListFileSink::commit() {
  if (std::fflush(file_) != 0 || std::ferror(file_))
    throw io_error("write failure on '" + path_ + "'");
}

StdoutEdgeSink::StdoutEdgeSink(const EdgeListHeader& header, bool framed) : framed_(framed) {
  const std::string h = format_header(header);
  std::fwrite(h.data(), 1, h.size(), stdout);
}

void StdoutEdgeSink::emit(const Transition& t) {
  std::printf("%" PRIu64 "\t%" PRIu64 "\t%" PRIu64 "\n", t.source, t.label, t.dest);
}

void StdoutEdgeSink::restart() {
  if (!framed_)
    throw std::logic_error("stdout sink saw a restart outside --raw-stream mode");
  std::fputs("# restart\n", stdout);
}

void StdoutEdgeSink::commit() {
  if (framed_) std::fputs("# commit\n", stdout);
  if (std::fflush(stdout) != 0 || std::ferror(stdout)) throw io_error("write failure on stdout");
}

void write_dot(std::ostream& out, const WheelerDfa& d) {
  out << "digraph wdfa {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::uint64_t u = 1; u <= d.n; ++u) out << "  " << u << ";\n";
  for (const Transition& t : d.transitions)
    out << "  " << t.source << " -> " << t.dest << " [label=\"" << t.label << "\"];\n";
  out << "}\n";
}

}  // namespace wdfa::cli
