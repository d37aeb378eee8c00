#include "mfc/configurations.hpp"

#include <algorithm>
#include <array>

#include "mfc/matching.hpp"

namespace mfc {

namespace {

using P = EdgePosition;

// C7/C8 follow the proof text: in C7 the edge joins a singleton to the
// 5-vertex component, in C8 it joins two singletons.
const std::vector<SignatureRow> kTable = {
    {ConfigLabel::C1, {0, {3, 7}, P::between_components}},
    {ConfigLabel::C2, {0, {5, 5}, P::between_components}},
    {ConfigLabel::C3, {1, {1, 1, 7}, P::trivial_trivial}},
    {ConfigLabel::C4, {1, {1, 3, 5}, P::trivial_five}},
    {ConfigLabel::C5, {1, {1, 3, 5}, P::trivial_three}},
    {ConfigLabel::C6, {1, {3, 3, 3}, P::three_three}},
    {ConfigLabel::C7, {2, {1, 1, 1, 5}, P::trivial_five}},
    {ConfigLabel::C8, {2, {1, 1, 1, 5}, P::trivial_trivial}},
    {ConfigLabel::C9, {2, {1, 1, 3, 3}, P::three_three}},
    {ConfigLabel::C10, {2, {1, 1, 3, 3}, P::trivial_three}},
    {ConfigLabel::C11, {2, {1, 1, 3, 3}, P::trivial_trivial}},
    {ConfigLabel::C12, {3, {1, 1, 1, 1, 3}, P::trivial_trivial}},
    {ConfigLabel::C13, {3, {1, 1, 1, 1, 3}, P::trivial_three}},
    {ConfigLabel::C14, {4, {1, 1, 1, 1, 1, 1}, P::trivial_trivial}},
};

// Unstated sides default to 0 and 7.
constexpr std::array<std::array<int, 2>, kConfigCount> kClaim2 = {{
    {0, 5}, {0, 5}, {7, 7}, {3, 5}, {5, 5}, {3, 5}, {2, 5},
    {6, 7}, {2, 5}, {4, 5}, {6, 7}, {5, 7}, {3, 5}, {4, 7},
}};

int index_of(ConfigLabel label) { return static_cast<int>(label) - 1; }

std::optional<EdgePosition> position_of(int x_size, int size_u, int size_v) {
  if (x_size == 0) return P::between_components;
  const int lo = std::min(size_u, size_v);
  const int hi = std::max(size_u, size_v);
  if (lo == 1 && hi == 1) return P::trivial_trivial;
  if (lo == 1 && hi == 3) return P::trivial_three;
  if (lo == 1 && hi == 5) return P::trivial_five;
  if (lo == 3 && hi == 3) return P::three_three;
  return std::nullopt;
}

int component_index(const BarrierWitness& w, int v) {
  for (std::size_t i = 0; i < w.components.size(); ++i) {
    if (w.components[i].vertices.contains(v)) return static_cast<int>(i);
  }
  return -1;
}

std::optional<ClassificationEntry> entry_for(const BarrierWitness& w, Edge e) {
  if (w.odd_count() != w.x.size() + 2) return std::nullopt;
  const int cu = component_index(w, e.u);
  const int cv = component_index(w, e.v);
  if (cu < 0 || cv < 0 || cu == cv) return std::nullopt;
  ConfigSignature sig;
  sig.x_size = w.x.size();
  for (const auto& c : w.components) sig.comp_sizes.push_back(c.vertices.size());
  std::sort(sig.comp_sizes.begin(), sig.comp_sizes.end());
  const auto pos = position_of(sig.x_size, w.components[cu].vertices.size(), w.components[cv].vertices.size());
  if (!pos) return std::nullopt;
  sig.e_position = *pos;
  const auto label = label_for(sig);
  if (!label) return std::nullopt;
  return ClassificationEntry{*label, w, cu, cv};
}

void check_classify_preconditions(const Graph& h, Edge e) {
  if (h.order() != 10) {
    throw ClassifyError(ClassifyFailure::wrong_order, "classification needs a 10-vertex graph");
  }
  if (e.u == e.v || e.u < 0 || e.v >= h.order() || h.has_edge(e)) {
    throw ClassifyError(ClassifyFailure::edge_present, "(" + e.to_string() + ") must be a non-edge of h");
  }
  if (has_perfect_matching(h)) {
    throw ClassifyError(ClassifyFailure::has_perfect_matching, "h has a perfect matching");
  }
  const Graph plus = h.with_edge_unchecked(e);
  if (!has_perfect_matching(plus)) {
    throw ClassifyError(ClassifyFailure::plus_edge_lacks_perfect_matching, "h + e has no perfect matching");
  }
  if (min_degree(plus) < 2) {
    throw ClassifyError(ClassifyFailure::pendant_vertex, "h + e has a vertex of degree at most 1");
  }
}

}  // namespace

std::string to_string(ConfigLabel label) { return "C" + std::to_string(static_cast<int>(label)); }

std::optional<ConfigLabel> parse_config_label(std::string_view text) {
  for (ConfigLabel l : all_config_labels()) {
    if (to_string(l) == text) return l;
  }
  return std::nullopt;
}

std::vector<ConfigLabel> all_config_labels() {
  std::vector<ConfigLabel> out;
  for (int i = 1; i <= kConfigCount; ++i) out.push_back(static_cast<ConfigLabel>(i));
  return out;
}

std::string to_string(EdgePosition pos) {
  switch (pos) {
    case P::between_components: return "between";
    case P::trivial_trivial: return "trivial-trivial";
    case P::trivial_three: return "trivial-3comp";
    case P::trivial_five: return "trivial-5comp";
    case P::three_three: return "comp-comp(3,3)";
  }
  return "?";
}

std::string to_string(ClassifyFailure failure) {
  switch (failure) {
    case ClassifyFailure::wrong_order: return "wrong-order";
    case ClassifyFailure::edge_present: return "edge-present";
    case ClassifyFailure::has_perfect_matching: return "has-perfect-matching";
    case ClassifyFailure::plus_edge_lacks_perfect_matching: return "plus-edge-lacks-perfect-matching";
    case ClassifyFailure::pendant_vertex: return "pendant-vertex";
    case ClassifyFailure::no_configuration: return "no-configuration";
  }
  return "?";
}

const std::vector<SignatureRow>& signature_table() { return kTable; }

const ConfigSignature& signature_of(ConfigLabel label) { return kTable[index_of(label)].signature; }

std::optional<ConfigLabel> label_for(const ConfigSignature& sig) {
  for (const auto& row : kTable) {
    if (row.signature == sig) return row.label;
  }
  return std::nullopt;
}

bool ClassificationResult::contains(ConfigLabel label) const {
  return std::any_of(entries.begin(), entries.end(), [&](const auto& en) { return en.label == label; });
}

std::vector<ConfigLabel> ClassificationResult::labels() const {
  std::vector<ConfigLabel> out;
  for (const auto& en : entries) {
    if (std::find(out.begin(), out.end(), en.label) == out.end()) out.push_back(en.label);
  }
  return out;
}

ClassificationResult classify(const Graph& h, Edge e, Exec exec) {
  check_classify_preconditions(h, e);
  ClassificationResult out;
  for (const auto& w : find_barrier_witnesses(h, 4, exec)) {
    if (auto entry = entry_for(w, e)) out.entries.push_back(std::move(*entry));
  }
  if (out.entries.empty()) {
    throw ClassifyError(ClassifyFailure::no_configuration, "no barrier witness matches a configuration");
  }
  return out;
}

bool verify_entry(const Graph& h, Edge e, const ClassificationEntry& entry) {
  const BarrierWitness fresh = describe_barrier(h, entry.witness.x);
  if (fresh.components.size() != entry.witness.components.size()) return false;
  for (std::size_t i = 0; i < fresh.components.size(); ++i) {
    const auto& a = fresh.components[i];
    const auto& b = entry.witness.components[i];
    if (a.vertices != b.vertices || a.odd != b.odd || a.factor_critical != b.factor_critical) return false;
  }
  if (!fresh.all_factor_critical() || fresh.odd_count() != fresh.x.size() + 2) return false;
  const auto again = entry_for(fresh, e);
  return again && again->label == entry.label && again->u_component == entry.u_component &&
         again->v_component == entry.v_component;
}

std::vector<Edge> clique_component(int size) {
  std::vector<Edge> out;
  for (int j = 1; j < size; ++j) {
    for (int i = 0; i < j; ++i) out.emplace_back(i, j);
  }
  return out;
}

std::vector<Edge> cycle_component(int size) {
  std::vector<Edge> out;
  if (size < 3) return out;
  for (int i = 0; i < size; ++i) out.emplace_back(i, (i + 1) % size);
  return out;
}

std::vector<Edge> bowtie_component(int size) {
  if (size != 5) return clique_component(size);
  return {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}};
}

HostInstance build_instance(ConfigLabel label, int n, const BuildOptions& options) {
  if (n < 12 || n > kMaxVertices) throw BuildError("host order must lie in [12, 64]");
  const ConfigSignature& sig = signature_of(label);
  const ComponentFactory& factory = options.component ? options.component : ComponentFactory(clique_component);

  std::vector<Edge> edges;
  const VertexSet x = VertexSet::range(sig.x_size);
  const VertexSet core_all = VertexSet::range(10);
  const VertexSet s_e = VertexSet::range(n) - core_all;

  // Lay the components out after X in table order.
  std::vector<VertexSet> comps;
  int next = sig.x_size;
  for (int size : sig.comp_sizes) {
    VertexSet c = VertexSet::range(next + size) - VertexSet::range(next);
    const Graph local = Graph::from_edges(size, factory(size));
    if (!is_factor_critical(local)) {
      throw BuildError("component factory produced a non-factor-critical graph of order " + std::to_string(size));
    }
    for (Edge le : local.edges()) edges.emplace_back(le.u + next, le.v + next);
    comps.push_back(c);
    next += size;
  }

  // Pick the components holding u and v.
  int cu = -1;
  int cv = -1;
  auto first_of_size = [&](int size, int skip) {
    for (int i = 0; i < static_cast<int>(comps.size()); ++i) {
      if (i != skip && comps[i].size() == size) return i;
    }
    return -1;
  };
  switch (sig.e_position) {
    case P::between_components: cu = 0; cv = 1; break;
    case P::trivial_trivial: cu = first_of_size(1, -1); cv = first_of_size(1, cu); break;
    case P::trivial_three: cu = first_of_size(1, -1); cv = first_of_size(3, cu); break;
    case P::trivial_five: cu = first_of_size(1, -1); cv = first_of_size(5, cu); break;
    case P::three_three: cu = first_of_size(3, -1); cv = first_of_size(3, cu); break;
  }
  const Edge e(comps[cu].front(), comps[cv].front());

  for (int a : x) {
    for (int b : core_all - x) edges.emplace_back(a, b);
  }
  if (options.include_optional_edges) {
    for (int a : x) {
      for (int b : x) {
        if (a < b) edges.emplace_back(a, b);
      }
    }
  }
  for (int s : s_e) {
    for (int t = 0; t < n; ++t) {
      if (t != s) edges.emplace_back(s, t);
    }
  }
  const Graph core = Graph::from_edges(10, [&] {
    std::vector<Edge> inner;
    for (Edge ed : edges) {
      if (ed.v < 10) inner.push_back(ed);
    }
    return inner;
  }());
  edges.push_back(e);
  HostInstance out{label, Graph::from_edges(n, edges), e, s_e, x, core};

  const int delta = min_degree(out.graph);
  if (delta < n - 8) {
    throw BuildError(to_string(label) + " at n = " + std::to_string(n) + " has minimum degree " +
                     std::to_string(delta) + " < n - 8");
  }
  return out;
}

Claim2Bounds claim2_bounds(ConfigLabel label) {
  const auto& b = kClaim2[index_of(label)];
  return {label, b[0], b[1]};
}

Claim2Check check_claim2(const Graph& g, Edge e, VertexSet s_e, ConfigLabel label) {
  const int n = g.order();
  if (min_degree(g) < n - 8) {
    throw DegreeHypothesisError("minimum degree " + std::to_string(min_degree(g)) + " below n - 8 = " +
                                std::to_string(n - 8));
  }
  if (!g.has_edge(e) || s_e.contains(e.u) || s_e.contains(e.v)) {
    throw ClassifyError(ClassifyFailure::edge_present, "e must be an edge of G outside S_e");
  }
  const InducedSubgraph core = delete_vertices(g.without_edge_unchecked(e), s_e);
  const auto relabel = [&](int v) {
    return static_cast<int>(std::find(core.original.begin(), core.original.end(), v) - core.original.begin());
  };
  const ClassificationResult cls = classify(core.graph, Edge(relabel(e.u), relabel(e.v)));
  if (!cls.contains(label)) {
    throw ClassifyError(ClassifyFailure::no_configuration, "G - e - S_e does not classify as " + to_string(label));
  }
  Claim2Check out;
  out.bounds = claim2_bounds(label);
  out.intersection = common_nonneighborhood(g, e.u, e.v).size();
  out.passed = out.bounds.lo <= out.intersection && out.intersection <= out.bounds.hi;
  return out;
}

}  // namespace mfc
