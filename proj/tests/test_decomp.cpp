#include <doctest.h>

#include "mfc/decomp.hpp"
#include "mfc/enumerate.hpp"
#include "mfc/graph6.hpp"
#include "mfc/matching.hpp"
#include "oracles.hpp"

using namespace mfc;

namespace {

const Graph kBowtie = Graph::from_edges(5, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
const Graph kStar = Graph::from_edges(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});

bool has_witness(const std::vector<BarrierWitness>& ws, VertexSet x) {
  for (const auto& w : ws) {
    if (w.x == x) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("is_factor_critical on named graphs") {
  CHECK(is_factor_critical(Graph::cycle(5)));
  CHECK_FALSE(is_factor_critical(Graph::complete(4)));
  CHECK(is_factor_critical(Graph::empty(1)));
  // Oracle: delete each of the 5 vertices and look for a perfect matching exhaustively.
  bool bowtie_oracle = true;
  for (int v = 0; v < 5; ++v) bowtie_oracle &= oracle::has_pm_exhaustive(kBowtie, kBowtie.vertices() - VertexSet::single(v));
  CHECK(bowtie_oracle);
  CHECK(is_factor_critical(kBowtie));
  CHECK_FALSE(is_factor_critical(Graph::path(5)));
}

TEST_CASE("factor-critical graphs with n <= 9 sampled: connected, odd, delta >= 2") {
  for (int n = 1; n <= 7; n += 2) {
    for (const Graph& g : all_graphs(n)) {
      if (!is_factor_critical(g)) continue;
      CHECK(is_connected(g));
      CHECK(g.order() % 2 == 1);
      CHECK_FALSE(has_perfect_matching(g));
      if (n >= 3) CHECK(min_degree(g) >= 2);
    }
  }
  // n = 9 by random sampling since exhaustive generation stops at 8.
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const Graph g = random_graph(9, 0.35, seed);
    if (!is_factor_critical(g)) continue;
    CHECK(is_connected(g));
    CHECK(min_degree(g) >= 2);
  }
}

TEST_CASE("Gallai-Edmonds on named graphs") {
  const GEDecomposition star = gallai_edmonds(kStar);
  CHECK(star.d == VertexSet::of({1, 2, 3}));
  CHECK(star.a == VertexSet::of({0}));
  CHECK(star.c.empty());

  const GEDecomposition c5 = gallai_edmonds(Graph::cycle(5));
  CHECK(c5.d == VertexSet::range(5));
  CHECK(c5.a.empty());
  CHECK(c5.c.empty());

  const GEDecomposition p4 = gallai_edmonds(Graph::path(4));
  CHECK(p4.d.empty());
  CHECK(p4.a.empty());
  CHECK(p4.c == VertexSet::range(4));
}

TEST_CASE("Gallai-Edmonds D equals the missable vertices on every graph with n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const GEDecomposition ge = gallai_edmonds(g);
      REQUIRE(ge.d == oracle::missable_vertices(g));
      REQUIRE((ge.d | ge.a | ge.c) == g.vertices());
      REQUIRE((ge.d & ge.a).empty());
      REQUIRE((ge.d & ge.c).empty());
      REQUIRE((ge.a & ge.c).empty());
      const auto d_comps = components(g, ge.d);
      for (VertexSet c : d_comps) REQUIRE(is_factor_critical(g, c));
      REQUIRE(has_perfect_matching(g, ge.c));
      REQUIRE(2 * matching_number(g) == g.order() - static_cast<int>(d_comps.size()) + ge.a.size());
    }
  }
}

TEST_CASE("barrier witnesses on named graphs") {
  const auto star = find_barrier_witnesses(kStar, 4);
  CHECK(has_witness(star, VertexSet::of({0})));
  CHECK(find_barrier_witnesses(kStar, 1).front().components.size() == 3);

  const auto k3k7 = find_barrier_witnesses(disjoint_union(Graph::complete(3), Graph::complete(7)), 4);
  REQUIRE(!k3k7.empty());
  CHECK(k3k7.front().x.empty());
  CHECK(k3k7.front().components.size() == 2);

  const auto c5c5 = find_barrier_witnesses(disjoint_union(Graph::cycle(5), Graph::cycle(5)), 2);
  CHECK(has_witness(c5c5, VertexSet{}));

  CHECK_THROWS_AS(find_barrier_witnesses(Graph::complete(4), 2), DecompError);
  CHECK_THROWS_AS(find_barrier_witnesses(Graph::empty(13), 2), DecompError);
}

TEST_CASE("barrier witnesses re-verify and realize the deficiency on every graph with n <= 8 and no perfect matching") {
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : all_graphs(n)) {
      if (has_perfect_matching(g)) continue;
      const auto ws = find_barrier_witnesses(g, n);
      INFO(to_graph6(g));
      // A witness needs C_o >= |X| + 2, so it exists exactly when the deficiency is at least 2.
      REQUIRE(ws.empty() == (deficiency(g) < 2));
      if (ws.empty()) continue;
      bool realizes_deficiency = false;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        const auto& w = ws[i];
        if (i > 0) {
          const auto& p = ws[i - 1];
          REQUIRE((p.x.size() < w.x.size() || (p.x.size() == w.x.size() && p.x.bits() < w.x.bits())));
        }
        const BarrierWitness fresh = describe_barrier(g, w.x);
        REQUIRE(fresh.all_factor_critical());
        REQUIRE(fresh.odd_count() >= w.x.size() + 2);
        REQUIRE(fresh.components.size() == w.components.size());
        realizes_deficiency |= fresh.odd_count() - w.x.size() == deficiency(g);
      }
      REQUIRE(realizes_deficiency);
    }
  }
}
