#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mfc {

inline constexpr int kMaxVertices = 64;

/// Thrown when a graph operation is given arguments that violate its contract.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A set of vertex indices below 64, stored as one machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  /// {0, 1, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };
  /// Iterates members in ascending order.
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }
  /// "{0,3,5}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// An undirected edge, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 1;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
  std::string to_string() const;
};

/// Simple undirected graph on at most 64 vertices. Values are immutable; every
/// "mutation" returns a new graph.
class Graph {
 public:
  /// Single-vertex graph.
  Graph() : Graph(1) {}

  /// Builds a graph from an edge list; duplicates collapse. Throws GraphError
  /// on n outside [1, 64], an endpoint >= n, or a self-loop.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  static Graph from_edges(int n, const std::vector<Edge>& edges);
  static Graph empty(int n) { return from_edges(n, std::vector<Edge>{}); }
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  int degree(int v) const { return std::popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  int edge_count() const;
  /// Edges sorted by (u, v).
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b);

  /// Edge-level builders used by the free functions below; they check nothing.
  Graph with_edge_unchecked(Edge e) const;
  Graph without_edge_unchecked(Edge e) const;

 private:
  explicit Graph(int n) : n_(n) { adj_.fill(0); }

  int n_ = 1;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// Induced subgraph with dense relabeling; original[i] is the old label of new vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> original;
};

InducedSubgraph delete_vertices(const Graph& g, VertexSet s);
InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);
Graph delete_edge(const Graph& g, Edge e);
Graph add_edge(const Graph& g, Edge e);
/// Relabels so that vertex v becomes perm[v].
Graph permute(const Graph& g, const std::vector<int>& perm);
/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph petersen();

/// V(g) minus N[x].
VertexSet closed_nonneighborhood(const Graph& g, int x);
VertexSet common_nonneighborhood(const Graph& g, int u, int v);

int min_degree(const Graph& g);

/// Connected components of g[within], ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }
/// The component of g[within] containing start.
VertexSet reach(const Graph& g, VertexSet within, int start);
bool is_connected(const Graph& g, VertexSet within);
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

/// True iff n > k and no set of fewer than k vertices disconnects g.
bool is_k_connected(const Graph& g, int k);
/// True iff removing any fewer than k edges leaves g connected.
bool is_k_edge_connected(const Graph& g, int k);

}  // namespace mfc
