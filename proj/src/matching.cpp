#include "mfc/matching.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>

namespace mfc {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Array-based Edmonds search: explicit base/parent arrays, one BFS per free root.
class BlossomMatcher {
 public:
  BlossomMatcher(const Graph& g, VertexSet alive) : g_(g), alive_(alive) {
    mate_.fill(-1);
    parent_.fill(-1);
    base_.fill(0);
  }

  void run() {
    for (int v : alive_) {
      if (mate_[v] != -1) continue;
      const VertexSet free_nbrs = g_.neighbors(v) & alive_;
      for (int u : free_nbrs) {
        if (mate_[u] == -1) {
          mate_[u] = v;
          mate_[v] = u;
          break;
        }
      }
    }
    for (int root : alive_) {
      if (mate_[root] != -1) continue;
      int v = find_augmenting_path(root);
      while (v != -1) {
        const int pv = parent_[v];
        const int next = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = next;
      }
    }
  }

  int size() const {
    int twice = 0;
    for (int v : alive_) twice += mate_[v] != -1;
    return twice / 2;
  }

  Matching matching() const {
    Matching m;
    for (int v : alive_) {
      if (mate_[v] > v) {
        m.edges.emplace_back(v, mate_[v]);
        m.covered.insert(v);
        m.covered.insert(mate_[v]);
      }
    }
    return m;
  }

 private:
  int lowest_common_base(int a, int b) const {
    std::uint64_t seen = 0;
    while (true) {
      a = base_[a];
      seen |= bit(a);
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen & bit(b)) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child, std::uint64_t& in_blossom) {
    while (base_[v] != b) {
      in_blossom |= bit(base_[v]) | bit(base_[mate_[v]]);
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::uint64_t used = bit(root);
    for (int v : alive_) {
      parent_[v] = -1;
      base_[v] = v;
    }
    std::array<int, kMaxVertices> queue{};
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int v = queue[head++];
      for (int to : g_.neighbors(v) & alive_) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const int b = lowest_common_base(v, to);
          std::uint64_t in_blossom = 0;
          mark_path(v, b, to, in_blossom);
          mark_path(to, b, v, in_blossom);
          for (int i : alive_) {
            if (in_blossom & bit(base_[i])) {
              base_[i] = b;
              if (!(used & bit(i))) {
                used |= bit(i);
                queue[tail++] = i;
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used |= bit(mate_[to]);
          queue[tail++] = mate_[to];
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  VertexSet alive_;
  std::array<int, kMaxVertices> mate_;
  std::array<int, kMaxVertices> parent_;
  std::array<int, kMaxVertices> base_;
};

void check_within(const Graph& g, VertexSet within) {
  if (!within.subset_of(g.vertices())) {
    throw MatchingError("vertex set " + within.to_string() + " not inside V(G)");
  }
}

int brute_force_rec(const Graph& g, VertexSet rest, std::vector<std::int8_t>& memo) {
  if (rest.size() < 2) return 0;
  auto& slot = memo[rest.bits()];
  if (slot >= 0) return slot;
  const int v = rest.front();
  const VertexSet others = rest - VertexSet::single(v);
  int best = brute_force_rec(g, others, memo);
  for (int u : g.neighbors(v) & others) {
    best = std::max(best, 1 + brute_force_rec(g, others - VertexSet::single(u), memo));
    if (best == rest.size() / 2) break;
  }
  slot = static_cast<std::int8_t>(best);
  return best;
}

void enumerate_pms(const Graph& g, VertexSet rest, std::vector<Edge>& current, std::vector<Matching>& out) {
  if (rest.empty()) {
    Matching m;
    m.edges = current;
    std::sort(m.edges.begin(), m.edges.end());
    m.covered = g.vertices();
    out.push_back(std::move(m));
    return;
  }
  const int v = rest.front();
  const VertexSet others = rest - VertexSet::single(v);
  for (int u : g.neighbors(v) & others) {
    current.emplace_back(v, u);
    enumerate_pms(g, others - VertexSet::single(u), current, out);
    current.pop_back();
  }
}

}  // namespace

bool Matching::contains(Edge e) const { return std::find(edges.begin(), edges.end(), e) != edges.end(); }

Matching max_matching(const Graph& g, VertexSet within) {
  check_within(g, within);
  BlossomMatcher m(g, within);
  m.run();
  return m.matching();
}

int matching_number(const Graph& g, VertexSet within) {
  check_within(g, within);
  BlossomMatcher m(g, within);
  m.run();
  return m.size();
}

bool has_perfect_matching(const Graph& g, VertexSet within) {
  if (within.size() % 2 != 0) return false;
  return 2 * matching_number(g, within) == within.size();
}

int deficiency(const Graph& g) { return g.order() - 2 * matching_number(g); }

int brute_force_max_matching(const Graph& g) {
  if (g.order() > 16) throw MatchingError("brute-force matching is limited to 16 vertices");
  std::vector<std::int8_t> memo(std::size_t{1} << g.order(), -1);
  return brute_force_rec(g, g.vertices(), memo);
}

OddComponents odd_components(const Graph& g, VertexSet x) {
  check_within(g, x);
  OddComponents out;
  for (VertexSet c : components(g, g.vertices() - x)) {
    if (c.size() % 2 == 1) out.components.push_back(c);
  }
  out.count = static_cast<int>(out.components.size());
  return out;
}

std::vector<Matching> all_perfect_matchings(const Graph& g) {
  if (g.order() % 2 != 0) throw MatchingError("perfect matchings need an even vertex count");
  if (g.order() > 14) throw MatchingError("perfect-matching enumeration is limited to 14 vertices");
  std::vector<Matching> out;
  std::vector<Edge> current;
  enumerate_pms(g, g.vertices(), current, out);
  return out;
}

bool every_pm_contains(const Graph& g, VertexSet within, Edge e) {
  check_within(g, within);
  if (e.v >= g.order() || !g.has_edge(e) || !within.contains(e.u) || !within.contains(e.v)) {
    throw MatchingError("(" + e.to_string() + ") is not an edge of the graph");
  }
  return has_perfect_matching(g, within) && !has_perfect_matching(g.without_edge_unchecked(e), within);
}

}  // namespace mfc
