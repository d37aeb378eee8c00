#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mfc/exec.hpp"
#include "mfc/graph.hpp"

namespace mfc {

class CriticalityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct KfcResult {
  bool kfc = false;
  /// First k-set (ascending bitmask order) whose removal leaves no perfect
  /// matching; present iff !kfc.
  std::optional<VertexSet> failing_set;
};

/// Checks every k-subset; 0 <= k < n. False straight away when n + k is odd,
/// with {0..k-1} as the witness.
KfcResult is_k_factor_critical(const Graph& g, int k, Exec exec = Exec::serial);

/// C_o(g - B) <= |B| - k for every B with |B| >= k. Oracle path, n <= 10.
bool is_k_fc_via_co(const Graph& g, int k);

/// S_e avoids both ends of edge and every perfect matching of G - S_e uses edge.
struct MinimalityCertificate {
  Edge edge;
  VertexSet s_e;
};

struct CriticalityReport {
  int k = 0;
  bool is_kfc = false;
  bool is_minimal = false;
  std::optional<VertexSet> failing_set;
  /// One per certified edge, in edge order.
  std::vector<MinimalityCertificate> certificates;
  /// Edges whose deletion keeps the graph k-factor-critical.
  std::vector<Edge> uncertified_edges;
};

/// First S_e in ascending bitmask order, or nullopt iff g - e is k-factor-critical.
/// g must be k-factor-critical.
std::optional<MinimalityCertificate> minimality_certificate(const Graph& g, int k, Edge e);

CriticalityReport is_minimal_kfc(const Graph& g, int k, Exec exec = Exec::serial);

/// Deletes deletable edges in a seed-determined order until none is left.
/// Throws CriticalityError if g is not k-factor-critical.
Graph minimalize(const Graph& g, int k, std::uint64_t seed);

/// The edge order minimalize scans for a given seed.
std::vector<Edge> minimalize_order(const Graph& g, std::uint64_t seed);

/// k-connected, (k+1)-edge-connected, and (k-2)-factor-critical when k >= 2.
/// Requires 1 <= k < n, n + k even, and g k-factor-critical.
bool check_connectivity_theorem(const Graph& g, int k);

}  // namespace mfc
