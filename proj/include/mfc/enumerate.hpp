#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mfc/exec.hpp"
#include "mfc/graph.hpp"

namespace mfc {

class EnumerateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The graph6 string of the relabeling whose adjacency payload is
/// lexicographically smallest. Equal forms <=> isomorphic graphs.
struct CanonicalForm {
  std::string bytes;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// perm[v] is the new label of v in the canonical relabeling. n <= 10.
std::vector<int> canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
/// The canonically relabeled graph itself.
Graph canonical_graph(const Graph& g);

/// One canonical representative per isomorphism class on n vertices, n <= 8,
/// by canonical augmentation. Output order: parent order, then child order.
std::vector<Graph> all_graphs(int n, Exec exec = Exec::serial);

/// G(n, p) with std::mt19937_64(seed); pairs are visited in graph6 column order
/// and (i, j) is an edge iff (draw >> 11) * 2^-53 < p.
Graph random_graph(int n, double p, std::uint64_t seed);

struct Graph6LineError {
  std::size_t line = 0;
  std::string message;
};

class Graph6StreamError : public std::runtime_error {
 public:
  explicit Graph6StreamError(const Graph6LineError& e)
      : std::runtime_error("line " + std::to_string(e.line) + ": " + e.message), error_(e) {}
  const Graph6LineError& error() const { return error_; }

 private:
  Graph6LineError error_;
};

/// Newline-delimited graph6 reader. Blank lines are skipped. In strict mode a
/// malformed line throws Graph6StreamError; otherwise it is recorded and skipped.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in, bool strict = true) : in_(in), strict_(strict) {}

  std::optional<Graph> next();
  std::vector<Graph> read_all();
  const std::vector<Graph6LineError>& errors() const { return errors_; }
  std::size_t line_number() const { return line_; }

 private:
  std::istream& in_;
  bool strict_;
  std::size_t line_ = 0;
  std::vector<Graph6LineError> errors_;
};

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs);

}  // namespace mfc
