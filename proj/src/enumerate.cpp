#include "mfc/enumerate.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "mfc/graph6.hpp"
#include "mfc/random.hpp"

namespace mfc {

namespace {

constexpr int kCanonLimit = 10;

bool twins(const Graph& g, int a, int b) {
  return (g.neighbors(a) - VertexSet::single(b)) == (g.neighbors(b) - VertexSet::single(a));
}

// Branch-and-bound over vertex placements. The graph6 payload is column-major,
// so placing the j-th vertex fixes column j: its adjacency to the vertices
// already placed, first placed vertex most significant.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    dfs(0, g_.vertices());
    std::vector<int> perm(n_);
    for (int pos = 0; pos < n_; ++pos) perm[best_order_[pos]] = pos;
    return perm;
  }

 private:
  std::uint32_t column(int w, int j) const {
    std::uint32_t c = 0;
    for (int i = 0; i < j; ++i) c = (c << 1) | (g_.has_edge(order_[i], w) ? 1U : 0U);
    return c;
  }

  // -1, 0, 1 comparing cur_[0..j) against best_[0..j).
  int compare_prefix(int j) const {
    for (int i = 0; i < j; ++i) {
      if (cur_[i] != best_[i]) return cur_[i] < best_[i] ? -1 : 1;
    }
    return 0;
  }

  void dfs(int j, VertexSet remaining) {
    if (j == n_) {
      if (!have_best_ || compare_prefix(n_) < 0) {
        best_ = cur_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    std::array<std::uint32_t, kCanonLimit> cols{};
    std::uint32_t lowest = ~std::uint32_t{0};
    for (int w : remaining) {
      cols[w] = column(w, j);
      lowest = std::min(lowest, cols[w]);
    }
    cur_[j] = lowest;
    if (have_best_ && compare_prefix(j + 1) > 0) return;

    std::array<int, kCanonLimit> reps{};
    int rep_count = 0;
    for (int w : remaining) {
      if (cols[w] != lowest) continue;
      bool duplicate = false;
      for (int r = 0; r < rep_count && !duplicate; ++r) duplicate = twins(g_, reps[r], w);
      if (!duplicate) reps[rep_count++] = w;
    }
    for (int r = 0; r < rep_count; ++r) {
      order_[j] = reps[r];
      dfs(j + 1, remaining - VertexSet::single(reps[r]));
      // A sibling may have lowered best_ below this prefix.
      if (compare_prefix(j + 1) > 0) return;
    }
  }

  const Graph& g_;
  int n_;
  std::array<int, kCanonLimit> order_{};
  std::array<int, kCanonLimit> best_order_{};
  std::array<std::uint32_t, kCanonLimit> cur_{};
  std::array<std::uint32_t, kCanonLimit> best_{};
  bool have_best_ = false;
};

Graph add_vertex(const Graph& parent, VertexSet nbrs) {
  std::vector<Edge> es = parent.edges();
  const int v = parent.order();
  for (int u : nbrs) es.emplace_back(u, v);
  return Graph::from_edges(v + 1, es);
}

std::vector<Graph> children_of(const Graph& parent, const CanonicalForm& parent_form) {
  std::vector<Graph> out;
  std::set<std::string> seen;
  const int m = parent.order();
  const int n = m + 1;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    const Graph child = add_vertex(parent, VertexSet(s));
    const std::vector<int> perm = canonical_labeling(child);
    const int last = static_cast<int>(std::find(perm.begin(), perm.end(), n - 1) - perm.begin());
    // Keep the child only if deleting its canonically last vertex gives back this parent.
    const Graph reduced = delete_vertices(child, VertexSet::single(last)).graph;
    if (canonical_form(reduced) != parent_form) continue;
    Graph canon = permute(child, perm);
    if (seen.insert(to_graph6(canon)).second) out.push_back(std::move(canon));
  }
  return out;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() > kCanonLimit) throw EnumerateError("canonical form is limited to 10 vertices");
  return CanonicalSearch(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return {to_graph6(canonical_graph(g))}; }

Graph canonical_graph(const Graph& g) { return permute(g, canonical_labeling(g)); }

std::vector<Graph> all_graphs(int n, Exec exec) {
  if (n < 1 || n > 8) throw EnumerateError("exhaustive generation supports 1 <= n <= 8");
  std::vector<Graph> level{Graph::empty(1)};
  for (int order = 2; order <= n; ++order) {
    auto batches = ordered_map<std::vector<Graph>>(level.size(), exec, [&](std::size_t i) {
      return children_of(level[i], CanonicalForm{to_graph6(level[i])});
    });
    std::vector<Graph> next;
    for (auto& b : batches) {
      for (auto& g : b) next.push_back(std::move(g));
    }
    level = std::move(next);
  }
  return level;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw EnumerateError("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> es;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (rng.uniform01() < p) es.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, es);
}

std::optional<Graph> Graph6Reader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      return parse_graph6(line);
    } catch (const std::invalid_argument& ex) {
      Graph6LineError err{line_, ex.what()};
      if (strict_) throw Graph6StreamError(err);
      errors_.push_back(std::move(err));
    }
  }
  return std::nullopt;
}

std::vector<Graph> Graph6Reader::read_all() {
  std::vector<Graph> out;
  while (auto g = next()) out.push_back(std::move(*g));
  return out;
}

void write_graph6_stream(std::ostream& out, const std::vector<Graph>& graphs) {
  for (const auto& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace mfc
