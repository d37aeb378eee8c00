#include "mfc/graph.hpp"

#include <algorithm>

#include "mfc/subsets.hpp"

namespace mfc {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::string Edge::to_string() const { return std::to_string(u) + "," + std::to_string(v); }

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 1 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside [1, 64]");
  }
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) {
      throw GraphError("edge (" + e.to_string() + ") has an endpoint outside [0, " +
                       std::to_string(n) + ")");
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    g.adj_[e.u] |= std::uint64_t{1} << e.v;
    g.adj_[e.v] |= std::uint64_t{1} << e.u;
  }
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
    es.emplace_back(a, b);
  }
  return from_edges(n, es);
}

Graph Graph::complete(int n) {
  Graph g = empty(n);
  for (int v = 0; v < n; ++v) g.adj_[v] = VertexSet::range(n).bits() & ~(std::uint64_t{1} << v);
  return g;
}

Graph Graph::cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return from_edges(n, es);
}

Graph Graph::path(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return from_edges(n, es);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : VertexSet(adj_[u] & ~VertexSet::range(u + 1).bits())) out.emplace_back(u, v);
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

Graph Graph::with_edge_unchecked(Edge e) const {
  Graph g = *this;
  g.adj_[e.u] |= std::uint64_t{1} << e.v;
  g.adj_[e.v] |= std::uint64_t{1} << e.u;
  return g;
}

Graph Graph::without_edge_unchecked(Edge e) const {
  Graph g = *this;
  g.adj_[e.u] &= ~(std::uint64_t{1} << e.v);
  g.adj_[e.v] &= ~(std::uint64_t{1} << e.u);
  return g;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!keep.subset_of(g.vertices())) throw GraphError("vertex set " + keep.to_string() + " not inside V(G)");
  if (keep.empty()) throw GraphError("induced subgraph would have no vertices");
  InducedSubgraph out{Graph::empty(keep.size()), keep.to_vector()};
  std::vector<int> fresh(g.order(), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) fresh[out.original[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (int u : keep) {
    for (int v : g.neighbors(u) & keep) {
      if (u < v) es.emplace_back(fresh[u], fresh[v]);
    }
  }
  out.graph = Graph::from_edges(keep.size(), es);
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw GraphError("vertex set " + s.to_string() + " not inside V(G)");
  return induced_subgraph(g, g.vertices() - s);
}

Graph delete_edge(const Graph& g, Edge e) {
  if (e.v >= g.order() || !g.has_edge(e)) throw GraphError("(" + e.to_string() + ") is not an edge");
  return g.without_edge_unchecked(e);
}

Graph add_edge(const Graph& g, Edge e) {
  if (e.u == e.v || e.u < 0 || e.v >= g.order()) throw GraphError("invalid edge (" + e.to_string() + ")");
  if (g.has_edge(e)) throw GraphError("(" + e.to_string() + ") is already an edge");
  return g.with_edge_unchecked(e);
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> es;
  for (Edge e : g.edges()) es.emplace_back(perm[e.u], perm[e.v]);
  return Graph::from_edges(g.order(), es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (Edge e : b.edges()) es.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph::from_edges(a.order() + b.order(), es);
}

Graph petersen() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, es);
}

VertexSet closed_nonneighborhood(const Graph& g, int x) {
  if (x < 0 || x >= g.order()) throw GraphError("vertex " + std::to_string(x) + " out of range");
  VertexSet out = g.vertices() - g.neighbors(x);
  out.erase(x);
  return out;
}

VertexSet common_nonneighborhood(const Graph& g, int u, int v) {
  if (u == v) throw GraphError("common non-neighborhood needs two distinct vertices");
  return closed_nonneighborhood(g, u) & closed_nonneighborhood(g, v);
}

int min_degree(const Graph& g) {
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

VertexSet reach(const Graph& g, VertexSet within, int start) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet c = reach(g, within, rest.front());
    out.push_back(c);
    rest -= c;
  }
  return out;
}

bool is_connected(const Graph& g, VertexSet within) {
  return within.empty() || reach(g, within, within.front()) == within;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 0) throw GraphError("connectivity threshold must be non-negative");
  if (g.order() <= k) return false;
  const VertexSet all = g.vertices();
  for (int size = 0; size < k; ++size) {
    bool cut_found = false;
    for_each_subset_of_size(all, size, [&](VertexSet s) {
      if (!is_connected(g, all - s)) {
        cut_found = true;
        return false;
      }
      return true;
    });
    if (cut_found) return false;
  }
  return true;
}

bool is_k_edge_connected(const Graph& g, int k) {
  if (k < 0) throw GraphError("connectivity threshold must be non-negative");
  if (k == 0) return true;
  const int n = g.order();
  if (n == 1) return false;
  if (n > 24) throw GraphError("edge-cut enumeration is limited to 24 vertices");
  // Every edge cut separates some side S containing vertex n-1.
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  for (std::uint64_t m = 0; m + 1 < half; ++m) {
    const VertexSet side = VertexSet(m) | VertexSet::single(n - 1);
    int cut = 0;
    for (int v : side) cut += (g.neighbors(v) - side).size();
    if (cut < k) return false;
  }
  return true;
}

}  // namespace mfc
