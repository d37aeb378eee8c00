#include <doctest.h>

#include "mfc/configurations.hpp"
#include "mfc/criticality.hpp"
#include "mfc/decomp.hpp"
#include "mfc/enumerate.hpp"
#include "mfc/exec.hpp"
#include "mfc/random.hpp"
#include "oracles.hpp"

using namespace mfc;

namespace {

bool same(const BarrierWitness& a, const BarrierWitness& b) {
  if (a.x != b.x || a.components.size() != b.components.size()) return false;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    if (a.components[i].vertices != b.components[i].vertices) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("ordered_map and first_index match their serial paths") {
  set_worker_count(4);
  const auto sq = [](std::size_t i) { return static_cast<long>(i * i); };
  CHECK(ordered_map<long>(1000, Exec::parallel, sq) == ordered_map<long>(1000, Exec::serial, sq));
  for (std::size_t hit : {0, 1, 17, 999}) {
    const auto pred = [&](std::size_t i) { return i >= hit && i % 3 == hit % 3; };
    CHECK(first_index(1000, Exec::parallel, pred) == first_index(1000, Exec::serial, pred));
  }
  CHECK_FALSE(first_index(100, Exec::parallel, [](std::size_t) { return false; }).has_value());
}

TEST_CASE("all_graphs is order-identical in parallel") {
  set_worker_count(4);
  for (int n = 1; n <= 7; ++n) CHECK(all_graphs(n, Exec::parallel) == all_graphs(n, Exec::serial));
}

TEST_CASE("k-factor-criticality kernels are identical in parallel") {
  set_worker_count(4);
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const int n = 8 + 2 * static_cast<int>(rng.below(3));
    const Graph g = random_graph(n, 0.5 + 0.4 * rng.uniform01(), rng.next());
    const KfcResult s = is_k_factor_critical(g, 2, Exec::serial);
    const KfcResult p = is_k_factor_critical(g, 2, Exec::parallel);
    REQUIRE(s.kfc == p.kfc);
    REQUIRE(s.failing_set == p.failing_set);
    if (!s.kfc) continue;
    const CriticalityReport rs = is_minimal_kfc(g, 2, Exec::serial);
    const CriticalityReport rp = is_minimal_kfc(g, 2, Exec::parallel);
    REQUIRE(rs.is_minimal == rp.is_minimal);
    REQUIRE(rs.uncertified_edges == rp.uncertified_edges);
    REQUIRE(rs.certificates.size() == rp.certificates.size());
    for (std::size_t j = 0; j < rs.certificates.size(); ++j) {
      REQUIRE(rs.certificates[j].edge == rp.certificates[j].edge);
      REQUIRE(rs.certificates[j].s_e == rp.certificates[j].s_e);
    }
  }
}

TEST_CASE("barrier search and classification are identical in parallel") {
  set_worker_count(4);
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto [h, e] = oracle::draw_classifiable(rng);
    const auto s = find_barrier_witnesses(h, 4, Exec::serial);
    const auto p = find_barrier_witnesses(h, 4, Exec::parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t j = 0; j < s.size(); ++j) REQUIRE(same(s[j], p[j]));
    REQUIRE(classify(h, e, Exec::serial).labels() == classify(h, e, Exec::parallel).labels());
  }
}
