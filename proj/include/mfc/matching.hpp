#pragma once

#include <stdexcept>
#include <vector>

#include "mfc/graph.hpp"

namespace mfc {

class MatchingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pairwise vertex-disjoint edges, sorted by (u, v).
struct Matching {
  std::vector<Edge> edges;
  VertexSet covered;

  int size() const { return static_cast<int>(edges.size()); }
  bool contains(Edge e) const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Maximum-cardinality matching of g[within] in original labels (Edmonds'
/// blossom algorithm). Vertices and neighbours are scanned in ascending order,
/// so the result is a deterministic function of the labeled input.
Matching max_matching(const Graph& g, VertexSet within);
inline Matching max_matching(const Graph& g) { return max_matching(g, g.vertices()); }

int matching_number(const Graph& g, VertexSet within);
inline int matching_number(const Graph& g) { return matching_number(g, g.vertices()); }

bool has_perfect_matching(const Graph& g, VertexSet within);
inline bool has_perfect_matching(const Graph& g) { return has_perfect_matching(g, g.vertices()); }

/// n - 2 * matching number.
int deficiency(const Graph& g);

/// Exhaustive maximum matching size (memoized over remaining-vertex sets).
/// Test oracle; n <= 16.
int brute_force_max_matching(const Graph& g);

struct OddComponents {
  int count = 0;
  /// Odd components of g - X, ordered by smallest original label.
  std::vector<VertexSet> components;
};

OddComponents odd_components(const Graph& g, VertexSet x);

/// Every perfect matching of g, in the order produced by matching the lowest
/// uncovered vertex to each neighbour in ascending order. n even, n <= 14.
std::vector<Matching> all_perfect_matchings(const Graph& g);

/// True iff g[within] has a perfect matching and g[within] - e has none, i.e.
/// every perfect matching of g[within] uses e. Throws if e is not an edge of
/// g[within].
bool every_pm_contains(const Graph& g, VertexSet within, Edge e);
inline bool every_pm_contains(const Graph& g, Edge e) { return every_pm_contains(g, g.vertices(), e); }

}  // namespace mfc
