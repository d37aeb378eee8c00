#pragma once

#include <stdexcept>
#include <vector>

#include "mfc/exec.hpp"
#include "mfc/graph.hpp"

namespace mfc {

class DecompError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// g[within] has odd order and every single-vertex deletion leaves a perfect
/// matching. A single vertex is factor-critical.
bool is_factor_critical(const Graph& g, VertexSet within);
inline bool is_factor_critical(const Graph& g) { return is_factor_critical(g, g.vertices()); }

/// Gallai-Edmonds partition: D = vertices missed by some maximum matching,
/// A = N(D) - D, C = the rest.
struct GEDecomposition {
  VertexSet d;
  VertexSet a;
  VertexSet c;
};

GEDecomposition gallai_edmonds(const Graph& g);

struct BarrierComponent {
  VertexSet vertices;
  bool odd = false;
  bool factor_critical = false;
};

/// X together with the components of G - X.
struct BarrierWitness {
  VertexSet x;
  std::vector<BarrierComponent> components;

  int odd_count() const;
  bool all_factor_critical() const;
};

/// Describes g - x without any filtering.
BarrierWitness describe_barrier(const Graph& g, VertexSet x);

/// All X with |X| <= max_x such that every component of g - X is
/// factor-critical and C_o(g - X) >= |X| + 2, ordered by (|X|, bitmask).
/// Requires n <= 12 and that g has no perfect matching.
std::vector<BarrierWitness> find_barrier_witnesses(const Graph& g, int max_x, Exec exec = Exec::serial);

}  // namespace mfc
