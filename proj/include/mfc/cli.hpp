#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "mfc/configurations.hpp"
#include "mfc/criticality.hpp"
#include "mfc/decomp.hpp"
#include "mfc/graph.hpp"

namespace mfc::cli {

using Json = nlohmann::ordered_json;

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitBadInput = 2;

enum class Format { text, json, tsv };

/// One scanned graph in a verification sweep.
struct VerificationRecord {
  std::string graph6;
  int n = 0;
  int k = 0;
  bool is_kfc = false;
  bool is_minimal = false;
  int min_degree = 0;
  /// Checked whenever is_kfc; nullopt otherwise.
  std::optional<bool> connectivity_ok;
  /// Sample source only: the dense start the instance was minimalized from.
  std::optional<std::string> start_graph6;
  std::optional<bool> start_connectivity_ok;
  /// Independent re-verification of a failing record.
  std::optional<std::string> witness;

  bool pass() const { return !(is_kfc && is_minimal) || min_degree == k + 1; }
};

struct VerifyCounts {
  std::size_t scanned = 0;
  std::size_t kfc = 0;
  std::size_t minimal = 0;
  std::size_t counterexamples = 0;
  std::size_t connectivity_violations = 0;
};

Json to_json(VertexSet s);
Json to_json(Edge e);
Json to_json(const CriticalityReport& r);
Json to_json(const GEDecomposition& d);
Json to_json(const BarrierWitness& w);
Json to_json(const ClassificationResult& r);
Json to_json(const VerificationRecord& r);
Json to_json(const VerifyCounts& c);

/// Builds the record for one graph of a sweep.
VerificationRecord verify_graph(const Graph& g, int k);

/// The dense start and minimalized graph for sample index i of a sample sweep.
struct SampleDraw {
  Graph start;
  Graph minimal;
  std::size_t attempts = 0;
};
SampleDraw draw_sample(int n, int k, std::uint64_t seed, std::uint64_t index);

/// Runs the command line; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mfc::cli
