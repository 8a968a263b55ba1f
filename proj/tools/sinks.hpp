#pragma once

#include <cstdio>
#include <ostream>
#include <string>

#include "edge_list.hpp"
#include "wdfa/stream.hpp"

namespace wdfa::cli {

// Streams edges straight into a file. A restart rewinds to just past the
// header and truncates, so a committed file never carries rejected
// attempts; working space stays flat no matter how large m gets.
class EdgeListFileSink : public Sink {
 public:
  EdgeListFileSink(const std::string& path, const EdgeListHeader& header);
  ~EdgeListFileSink() override;
  EdgeListFileSink(const EdgeListFileSink&) = delete;
  EdgeListFileSink& operator=(const EdgeListFileSink&) = delete;

  void emit(const Transition& t) override;
  void restart() override;
  void commit() override;  // flushes; io_error on any accumulated failure

 private:
  std::string path_;
  FILE* file_ = nullptr;
  long mark_ = 0;  // byte offset just past the header
};

// Streams edges to stdout. Framed mode brackets attempts with "# restart"
// and "# commit" lines so a pipe reader can discard rejected prefixes;
// plain mode is only legal when restarts cannot happen and treats one as a
// logic error.
class StdoutEdgeSink : public Sink {
 public:
  StdoutEdgeSink(const EdgeListHeader& header, bool framed);

  void emit(const Transition& t) override;
  void restart() override;
  void commit() override;

 private:
  bool framed_;
};

// Graphviz export for small automata.
void write_dot(std::ostream& out, const WheelerDfa& d);

}  // namespace wdfa::cli
