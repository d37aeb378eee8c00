#pragma once

// Slow, definition-level reference computations. Nothing here calls the
// blossom matcher, the canonical-form search or the augmentation generator.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfc/criticality.hpp"
#include "mfc/graph.hpp"
#include "mfc/random.hpp"

namespace mfc::oracle {

/// Graph with bit k of mask set iff the k-th pair in graph6 column order is an edge.
Graph graph_from_mask(int n, std::uint64_t mask);

/// Every matching of g (including the empty one), as edge lists.
std::vector<std::vector<Edge>> all_matchings(const Graph& g);

/// Perfect-matching test by exhaustive recursion.
bool has_pm_exhaustive(const Graph& g, VertexSet within);

/// max over X of C_o(g - X) - |X| by full subset enumeration.
int berge_deficiency(const Graph& g);

/// No X with C_o(g - X) > |X|.
bool tutte_condition(const Graph& g);

/// Vertices left uncovered by at least one maximum matching.
VertexSet missable_vertices(const Graph& g);

/// Every k-set S leaves g - S with a perfect matching (exhaustive matcher).
bool kfc_by_definition(const Graph& g, int k);

/// Lex-min graph6 payload over all n! relabelings (n <= 8).
std::string brute_canonical(const Graph& g);

/// Smallest graph_from_mask index in each isomorphism class of labeled
/// graphs on n vertices (n <= 8), found by marking whole orbits. Ascending.
std::vector<std::uint64_t> labeled_orbit_representatives(int n);

/// Number of isomorphism classes on n vertices by Burnside's lemma.
std::uint64_t burnside_class_count(int n);

/// Minimalization that literally restarts the scan after every deletion.
Graph minimalize_restart(const Graph& g, int k, std::uint64_t seed);

/// The certificate checked against the full list of perfect matchings of g - S_e.
bool certificate_holds_by_enumeration(const Graph& g, const MinimalityCertificate& c);

/// Draws (h, e) on 10 vertices meeting the classification preconditions.
std::pair<Graph, Edge> draw_classifiable(Rng& rng);

}  // namespace mfc::oracle
