#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mfc/decomp.hpp"
#include "mfc/exec.hpp"
#include "mfc/graph.hpp"

namespace mfc {

/// The fourteen shapes a deficient 10-vertex graph G_e = G - e - S_e can take.
enum class ConfigLabel { C1 = 1, C2, C3, C4, C5, C6, C7, C8, C9, C10, C11, C12, C13, C14 };

inline constexpr int kConfigCount = 14;

std::string to_string(ConfigLabel label);
std::optional<ConfigLabel> parse_config_label(std::string_view text);
std::vector<ConfigLabel> all_config_labels();

/// Where the designated edge e = uv sits relative to the odd components of G_e - X.
enum class EdgePosition {
  between_components,  // |X| = 0: the two components
  trivial_trivial,
  trivial_three,       // singleton to a 3-vertex component
  trivial_five,        // singleton to a 5-vertex component
  three_three,         // two 3-vertex components
};

std::string to_string(EdgePosition pos);

struct ConfigSignature {
  int x_size = 0;
  /// Ascending; odd sizes summing to 10 - x_size.
  std::vector<int> comp_sizes;
  EdgePosition e_position = EdgePosition::between_components;

  friend bool operator==(const ConfigSignature&, const ConfigSignature&) = default;
};

struct SignatureRow {
  ConfigLabel label;
  ConfigSignature signature;
};

/// The fixed fourteen-row table, in label order.
const std::vector<SignatureRow>& signature_table();
const ConfigSignature& signature_of(ConfigLabel label);
std::optional<ConfigLabel> label_for(const ConfigSignature& sig);

struct ClassificationEntry {
  ConfigLabel label;
  BarrierWitness witness;
  /// Indices into witness.components.
  int u_component = -1;
  int v_component = -1;
};

struct ClassificationResult {
  /// Ordered by (|X|, bitmask of X); never empty.
  std::vector<ClassificationEntry> entries;

  const ClassificationEntry& canonical() const { return entries.front(); }
  bool contains(ConfigLabel label) const;
  std::vector<ConfigLabel> labels() const;
};

enum class ClassifyFailure {
  wrong_order,
  edge_present,
  has_perfect_matching,
  plus_edge_lacks_perfect_matching,
  pendant_vertex,
  no_configuration,
};

std::string to_string(ClassifyFailure failure);

class ClassifyError : public std::invalid_argument {
 public:
  ClassifyError(ClassifyFailure reason, const std::string& what)
      : std::invalid_argument(what), reason_(reason) {}
  ClassifyFailure reason() const { return reason_; }

 private:
  ClassifyFailure reason_;
};

/// Classifies a 10-vertex graph h with a designated non-edge e. Requires that
/// h has no perfect matching, h + e has one, and h + e has minimum degree >= 2.
ClassificationResult classify(const Graph& h, Edge e, Exec exec = Exec::serial);

/// Re-derives every flag of an entry from scratch.
bool verify_entry(const Graph& h, Edge e, const ClassificationEntry& entry);

/// Builds the edges of a factor-critical graph on vertices 0..size-1 (size odd).
using ComponentFactory = std::function<std::vector<Edge>(int size)>;

std::vector<Edge> clique_component(int size);
/// Odd cycle; a triangle for size 3, a single vertex for size 1.
std::vector<Edge> cycle_component(int size);
/// Two triangles sharing a vertex for size 5, cliques otherwise.
std::vector<Edge> bowtie_component(int size);

struct BuildOptions {
  /// Adds every edge inside X (the optional edges of the templates).
  bool include_optional_edges = false;
  ComponentFactory component = clique_component;
};

class BuildError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A host graph G of order n whose deficient core G - e - S_e realizes a label.
/// Core vertices are 0..9 (X first, then components in table order); S_e is
/// 10..n-1 and is complete to everything.
struct HostInstance {
  ConfigLabel label;
  Graph graph;
  Edge e;
  VertexSet s_e;
  VertexSet x;
  /// G - e - S_e on vertices 0..9.
  Graph core;
};

HostInstance build_instance(ConfigLabel label, int n, const BuildOptions& options = {});

/// Bounds on |N[u]^c ∩ N[v]^c| under the hypothesis delta(G) >= n - 8.
struct Claim2Bounds {
  ConfigLabel label;
  int lo = 0;
  int hi = 7;
};

Claim2Bounds claim2_bounds(ConfigLabel label);

class DegreeHypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Claim2Check {
  bool passed = false;
  int intersection = 0;
  Claim2Bounds bounds;
};

/// Throws DegreeHypothesisError when delta(G) < n - 8 and ClassifyError when
/// G - e - S_e does not classify as label.
Claim2Check check_claim2(const Graph& g, Edge e, VertexSet s_e, ConfigLabel label);

}  // namespace mfc
