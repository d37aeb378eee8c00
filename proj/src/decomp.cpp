#include "mfc/decomp.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "mfc/matching.hpp"
#include "mfc/subsets.hpp"

namespace mfc {

bool is_factor_critical(const Graph& g, VertexSet within) {
  if (within.size() % 2 == 0) return false;
  for (int v : within) {
    if (!has_perfect_matching(g, within - VertexSet::single(v))) return false;
  }
  return true;
}

GEDecomposition gallai_edmonds(const Graph& g) {
  const int nu = matching_number(g);
  GEDecomposition out;
  for (int v = 0; v < g.order(); ++v) {
    if (matching_number(g, g.vertices() - VertexSet::single(v)) == nu) out.d.insert(v);
  }
  VertexSet nbrs;
  for (int v : out.d) nbrs |= g.neighbors(v);
  out.a = nbrs - out.d;
  out.c = g.vertices() - out.d - out.a;
  return out;
}

int BarrierWitness::odd_count() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(),
                                        [](const BarrierComponent& c) { return c.odd; }));
}

bool BarrierWitness::all_factor_critical() const {
  return std::all_of(components.begin(), components.end(),
                     [](const BarrierComponent& c) { return c.factor_critical; });
}

BarrierWitness describe_barrier(const Graph& g, VertexSet x) {
  BarrierWitness w{x, {}};
  for (VertexSet c : components(g, g.vertices() - x)) {
    w.components.push_back({c, c.size() % 2 == 1, is_factor_critical(g, c)});
  }
  return w;
}

namespace {

std::optional<BarrierWitness> test_barrier(const Graph& g, VertexSet x) {
  const auto comps = components(g, g.vertices() - x);
  if (static_cast<int>(comps.size()) < x.size() + 2) return std::nullopt;
  BarrierWitness w{x, {}};
  for (VertexSet c : comps) {
    if (c.size() % 2 == 0 || !is_factor_critical(g, c)) return std::nullopt;
    w.components.push_back({c, true, true});
  }
  return w;
}

}  // namespace

std::vector<BarrierWitness> find_barrier_witnesses(const Graph& g, int max_x, Exec exec) {
  if (g.order() > 12) throw DecompError("barrier search is limited to 12 vertices");
  if (max_x < 0 || max_x > g.order()) throw DecompError("max_x must lie in [0, n]");
  if (has_perfect_matching(g)) throw DecompError("graph has a perfect matching; no barrier witness exists");

  std::vector<BarrierWitness> out;
  const std::vector<int> members = g.vertices().to_vector();
  for (int size = 0; size <= max_x; ++size) {
    if (exec == Exec::serial) {
      for_each_subset_of_size(g.vertices(), size, [&](VertexSet x) {
        if (auto w = test_barrier(g, x)) out.push_back(std::move(*w));
        return true;
      });
      continue;
    }
    const auto masks = subset_index_masks(g.order(), size);
    auto found = ordered_map<std::optional<BarrierWitness>>(
        masks.size(), exec, [&](std::size_t i) { return test_barrier(g, scatter(masks[i], members)); });
    for (auto& w : found) {
      if (w) out.push_back(std::move(*w));
    }
  }
  return out;
}

}  // namespace mfc
