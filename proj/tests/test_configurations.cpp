#include <doctest.h>

#include <set>

#include "mfc/configurations.hpp"
#include "mfc/decomp.hpp"
#include "mfc/matching.hpp"
#include "oracles.hpp"

using namespace mfc;

namespace {

using EP = EdgePosition;

// Independently transcribed signature rows, label order.
struct Row {
  int x;
  std::vector<int> sizes;
  EP pos;
};
const std::vector<Row> kExpectedRows = {
    {0, {3, 7}, EP::between_components},
    {0, {5, 5}, EP::between_components},
    {1, {1, 1, 7}, EP::trivial_trivial},
    {1, {1, 3, 5}, EP::trivial_five},
    {1, {1, 3, 5}, EP::trivial_three},
    {1, {3, 3, 3}, EP::three_three},
    {2, {1, 1, 1, 5}, EP::trivial_five},
    {2, {1, 1, 1, 5}, EP::trivial_trivial},
    {2, {1, 1, 3, 3}, EP::three_three},
    {2, {1, 1, 3, 3}, EP::trivial_three},
    {2, {1, 1, 3, 3}, EP::trivial_trivial},
    {3, {1, 1, 1, 1, 3}, EP::trivial_trivial},
    {3, {1, 1, 1, 1, 3}, EP::trivial_three},
    {4, {1, 1, 1, 1, 1, 1}, EP::trivial_trivial},
};

// The configuration core with designated non-edge, built by hand.
std::pair<Graph, Edge> k3_k7() { return {disjoint_union(Graph::complete(3), Graph::complete(7)), Edge(0, 3)}; }

Graph k4_join_independent6() {
  std::vector<Edge> es;
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) es.emplace_back(a, b);
    for (int t = 4; t < 10; ++t) es.emplace_back(a, t);
  }
  return Graph::from_edges(10, es);
}

}  // namespace

TEST_CASE("signature table matches the transcribed rows and is injective") {
  const auto& table = signature_table();
  REQUIRE(table.size() == kExpectedRows.size());
  std::set<std::tuple<int, std::vector<int>, int>> distinct;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& row = table[i];
    CHECK(static_cast<int>(row.label) == static_cast<int>(i) + 1);
    CHECK(row.signature.x_size == kExpectedRows[i].x);
    CHECK(row.signature.comp_sizes == kExpectedRows[i].sizes);
    CHECK(row.signature.e_position == kExpectedRows[i].pos);
    int sum = 0;
    for (int s : row.signature.comp_sizes) {
      CHECK(s % 2 == 1);
      sum += s;
    }
    CHECK(sum == 10 - row.signature.x_size);
    CHECK(static_cast<int>(row.signature.comp_sizes.size()) == row.signature.x_size + 2);
    CHECK(label_for(row.signature) == row.label);
    distinct.insert({row.signature.x_size, row.signature.comp_sizes, static_cast<int>(row.signature.e_position)});
  }
  CHECK(distinct.size() == 14);
}

TEST_CASE("label names round trip") {
  for (ConfigLabel l : all_config_labels()) CHECK(parse_config_label(to_string(l)) == l);
  CHECK(to_string(ConfigLabel::C14) == "C14");
  CHECK_FALSE(parse_config_label("C15").has_value());
  CHECK_FALSE(parse_config_label("c1").has_value());
}

TEST_CASE("non-neighborhood intersection bound table") {
  const std::vector<std::pair<int, int>> expected = {{0, 5}, {0, 5}, {7, 7}, {3, 5}, {5, 5}, {3, 5}, {2, 5},
                                                     {6, 7}, {2, 5}, {4, 5}, {6, 7}, {5, 7}, {3, 5}, {4, 7}};
  for (ConfigLabel l : all_config_labels()) {
    const Claim2Bounds b = claim2_bounds(l);
    CHECK(b.label == l);
    CHECK(std::pair{b.lo, b.hi} == expected[static_cast<int>(l) - 1]);
  }
}

TEST_CASE("classify the hand-built cores") {
  const auto [h1, e1] = k3_k7();
  const ClassificationResult r1 = classify(h1, e1);
  CHECK(r1.canonical().label == ConfigLabel::C1);
  CHECK(r1.canonical().witness.x.empty());

  const Graph h2 = disjoint_union(Graph::complete(5), Graph::complete(5));
  CHECK(classify(h2, Edge(0, 5)).canonical().label == ConfigLabel::C2);

  const Graph h14 = k4_join_independent6();
  // Oracle: six odd components after removing the clique.
  CHECK(oracle::berge_deficiency(h14) == 2);
  const ClassificationResult r14 = classify(h14, Edge(4, 5));
  CHECK(r14.contains(ConfigLabel::C14));
  for (const auto& entry : r14.entries) CHECK(verify_entry(h14, Edge(4, 5), entry));
}

TEST_CASE("classification preconditions raise distinct errors") {
  auto reason = [](const Graph& h, Edge e) {
    try {
      classify(h, e);
    } catch (const ClassifyError& err) {
      return err.reason();
    }
    FAIL("classify accepted the input");
    return ClassifyFailure::no_configuration;
  };
  CHECK(reason(Graph::complete(8), Edge(0, 1)) == ClassifyFailure::wrong_order);
  const auto [h, e] = k3_k7();
  CHECK(reason(h.with_edge_unchecked(e), e) == ClassifyFailure::edge_present);
  CHECK(reason(Graph::cycle(10).without_edge_unchecked(Edge(0, 1)), Edge(0, 2)) == ClassifyFailure::has_perfect_matching);
  const Graph split = disjoint_union(Graph::complete(3), disjoint_union(Graph::complete(3), Graph::complete(4)));
  CHECK(reason(split, Edge(0, 6)) == ClassifyFailure::plus_edge_lacks_perfect_matching);
  // K1 + K9 joined by e gives a pendant vertex.
  CHECK(reason(disjoint_union(Graph::empty(1), Graph::complete(9)), Edge(0, 1)) == ClassifyFailure::pendant_vertex);
}

TEST_CASE("every classification entry re-verifies on random classifiable graphs") {
  Rng rng(123);
  for (int i = 0; i < 300; ++i) {
    const auto [h, e] = oracle::draw_classifiable(rng);
    const ClassificationResult r = classify(h, e);
    REQUIRE(!r.entries.empty());
    CHECK(deficiency(h) == 2);
    for (const auto& entry : r.entries) {
      REQUIRE(verify_entry(h, e, entry));
      REQUIRE(entry.witness.odd_count() == entry.witness.x.size() + 2);
      REQUIRE(entry.u_component != entry.v_component);
    }
  }
}

TEST_CASE("build_instance round trip and intersection bounds for n in {12, 14, 16}") {
  for (ConfigLabel l : all_config_labels()) {
    bool round_trip = false;
    for (int n : {12, 14, 16}) {
      std::optional<HostInstance> built;
      try {
        built = build_instance(l, n);
      } catch (const BuildError&) {
        continue;
      }
      const HostInstance& inst = *built;
      CHECK(inst.graph.order() == n);
      CHECK(min_degree(inst.graph) >= n - 8);
      CHECK(inst.s_e.size() == n - 10);
      CHECK(inst.core == delete_vertices(delete_edge(inst.graph, inst.e), inst.s_e).graph);
      CHECK(deficiency(inst.core) == 2);
      round_trip |= classify(inst.core, inst.e).contains(l);
      const Claim2Check c = check_claim2(inst.graph, inst.e, inst.s_e, l);
      CHECK(c.passed);
      if (l == ConfigLabel::C3) CHECK(c.intersection == 7);
      if (l == ConfigLabel::C5) CHECK(c.intersection == 5);
      // Oracle: the intersection by plain set arithmetic.
      const VertexSet inter = closed_nonneighborhood(inst.graph, inst.e.u) & closed_nonneighborhood(inst.graph, inst.e.v);
      CHECK(c.intersection == inter.size());
    }
    CHECK_MESSAGE(round_trip, to_string(l));
  }
}

TEST_CASE("optional edges inside X change the core but not the label") {
  for (ConfigLabel l : all_config_labels()) {
    const HostInstance plain = build_instance(l, 12);
    const HostInstance full = build_instance(l, 12, BuildOptions{.include_optional_edges = true});
    const int x = plain.x.size();
    CHECK(full.core.edge_count() - plain.core.edge_count() == x * (x - 1) / 2);
    CHECK(classify(full.core, full.e).contains(l));
    CHECK(check_claim2(full.graph, full.e, full.s_e, l).passed);
  }
}

TEST_CASE("alternative factor-critical components") {
  for (const ComponentFactory& f : {ComponentFactory(cycle_component), ComponentFactory(bowtie_component)}) {
    for (ConfigLabel l : all_config_labels()) {
      for (int n : {12, 14, 16}) {
        try {
          const HostInstance inst = build_instance(l, n, BuildOptions{.component = f});
          CHECK(classify(inst.core, inst.e).contains(l));
          CHECK(check_claim2(inst.graph, inst.e, inst.s_e, l).passed);
        } catch (const BuildError&) {
        }
      }
    }
  }
  CHECK(cycle_component(1).empty());
  CHECK(cycle_component(5).size() == 5);
  CHECK(bowtie_component(5).size() == 6);
  CHECK(bowtie_component(3).size() == 3);
}

TEST_CASE("build and check errors") {
  CHECK_THROWS_AS(build_instance(ConfigLabel::C1, 11), BuildError);
  const HostInstance inst = build_instance(ConfigLabel::C3, 12);
  // Removing S_e's edges to one core vertex pushes its degree below n - 8.
  Graph weak = inst.graph;
  int victim = inst.x.empty() ? 0 : inst.x.front();
  for (int s : inst.s_e) weak = weak.without_edge_unchecked(Edge(victim, s));
  for (int w : weak.neighbors(victim)) {
    if (min_degree(weak) < 4) break;
    weak = weak.without_edge_unchecked(Edge(victim, w));
  }
  REQUIRE(min_degree(weak) < 4);
  CHECK_THROWS_AS(check_claim2(weak, inst.e, inst.s_e, ConfigLabel::C3), DegreeHypothesisError);
  CHECK_THROWS_AS(check_claim2(inst.graph, inst.e, inst.s_e, ConfigLabel::C4), ClassifyError);
}
