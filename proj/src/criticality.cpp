#include "mfc/criticality.hpp"

#include <string>

#include "mfc/matching.hpp"
#include "mfc/random.hpp"
#include "mfc/subsets.hpp"

namespace mfc {

namespace {

void check_k(const Graph& g, int k) {
  if (k < 0 || k >= g.order()) {
    throw CriticalityError("k = " + std::to_string(k) + " outside [0, " + std::to_string(g.order()) + ")");
  }
}

}  // namespace

KfcResult is_k_factor_critical(const Graph& g, int k, Exec exec) {
  check_k(g, k);
  const VertexSet all = g.vertices();
  if ((g.order() + k) % 2 != 0) return {false, VertexSet::range(k)};

  if (exec == Exec::serial) {
    std::optional<VertexSet> failing;
    for_each_subset_of_size(all, k, [&](VertexSet s) {
      if (has_perfect_matching(g, all - s)) return true;
      failing = s;
      return false;
    });
    return {!failing.has_value(), failing};
  }
  const auto masks = subset_index_masks(g.order(), k);
  const auto hit = first_index(masks.size(), exec, [&](std::size_t i) {
    return !has_perfect_matching(g, all - VertexSet(masks[i]));
  });
  if (!hit) return {true, std::nullopt};
  return {false, VertexSet(masks[*hit])};
}

bool is_k_fc_via_co(const Graph& g, int k) {
  check_k(g, k);
  if (g.order() > 10) throw CriticalityError("odd-component characterization is limited to 10 vertices");
  const std::uint64_t limit = std::uint64_t{1} << g.order();
  for (std::uint64_t b = 0; b < limit; ++b) {
    const VertexSet barrier(b);
    if (barrier.size() < k) continue;
    if (odd_components(g, barrier).count > barrier.size() - k) return false;
  }
  return true;
}

std::optional<MinimalityCertificate> minimality_certificate(const Graph& g, int k, Edge e) {
  check_k(g, k);
  if (e.v >= g.order() || !g.has_edge(e)) throw CriticalityError("(" + e.to_string() + ") is not an edge");
  const VertexSet all = g.vertices();
  const VertexSet pool = all - VertexSet::of({e.u, e.v});
  std::optional<MinimalityCertificate> out;
  for_each_subset_of_size(pool, k, [&](VertexSet s) {
    if (!every_pm_contains(g, all - s, e)) return true;
    out = MinimalityCertificate{e, s};
    return false;
  });
  return out;
}

CriticalityReport is_minimal_kfc(const Graph& g, int k, Exec exec) {
  CriticalityReport report;
  report.k = k;
  const KfcResult base = is_k_factor_critical(g, k, exec);
  report.is_kfc = base.kfc;
  report.failing_set = base.failing_set;
  if (!base.kfc) return report;

  const std::vector<Edge> edges = g.edges();
  const auto certs = ordered_map<std::optional<MinimalityCertificate>>(
      edges.size(), exec, [&](std::size_t i) { return minimality_certificate(g, k, edges[i]); });
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (certs[i]) {
      report.certificates.push_back(*certs[i]);
    } else {
      report.uncertified_edges.push_back(edges[i]);
    }
  }
  report.is_minimal = report.uncertified_edges.empty();
  return report;
}

std::vector<Edge> minimalize_order(const Graph& g, std::uint64_t seed) {
  std::vector<Edge> order = g.edges();
  Rng rng(seed);
  rng.shuffle(order);
  return order;
}

Graph minimalize(const Graph& g, int k, std::uint64_t seed) {
  if (!is_k_factor_critical(g, k).kfc) throw CriticalityError("input is not k-factor-critical");
  // An edge that is not deletable stays non-deletable once further edges are
  // gone, so one pass reaches the same fixpoint as restarting after each deletion.
  Graph current = g;
  for (Edge e : minimalize_order(g, seed)) {
    Graph candidate = current.without_edge_unchecked(e);
    if (is_k_factor_critical(candidate, k).kfc) current = candidate;
  }
  return current;
}

bool check_connectivity_theorem(const Graph& g, int k) {
  if (k < 1 || k >= g.order()) throw CriticalityError("connectivity theorem needs 1 <= k < n");
  if ((g.order() + k) % 2 != 0) throw CriticalityError("connectivity theorem needs n + k even");
  if (!is_k_factor_critical(g, k).kfc) throw CriticalityError("graph is not k-factor-critical");
  if (!is_k_connected(g, k) || !is_k_edge_connected(g, k + 1)) return false;
  return k < 2 || is_k_factor_critical(g, k - 2).kfc;
}

}  // namespace mfc
