#include "mfc/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mfc/enumerate.hpp"
#include "mfc/graph6.hpp"
#include "mfc/matching.hpp"
#include "mfc/random.hpp"

namespace mfc::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::vector<Graph> read_graphs(const std::string& text) {
  std::istringstream in(text);
  try {
    return Graph6Reader(in, true).read_all();
  } catch (const Graph6StreamError& ex) {
    throw InputError(ex.what());
  }
}

/// "-" reads stdin, "file:PATH" reads a file, anything else is one graph6 string.
std::vector<Graph> load_graphs(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::ostringstream s;
    s << in.rdbuf();
    return read_graphs(s.str());
  }
  if (arg.starts_with("file:")) return read_graphs(read_file(arg.substr(5)));
  try {
    return {parse_graph6(arg)};
  } catch (const Graph6Error& ex) {
    throw InputError(std::string("bad graph6 argument: ") + ex.what());
  }
}

Graph load_single_graph(const std::string& arg, std::istream& in) {
  auto graphs = load_graphs(arg, in);
  if (graphs.size() != 1) throw InputError("expected exactly one graph, got " + std::to_string(graphs.size()));
  return graphs.front();
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "tsv") return Format::tsv;
  throw InputError("unknown format '" + s + "'");
}

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void emit_records(const std::vector<Json>& records, Format format, std::ostream& out) {
  switch (format) {
    case Format::json:
      for (const auto& r : records) out << r.dump() << '\n';
      break;
    case Format::tsv: {
      if (records.empty()) break;
      bool first = true;
      for (auto it = records.front().begin(); it != records.front().end(); ++it) {
        out << (first ? "" : "\t") << it.key();
        first = false;
      }
      out << '\n';
      for (const auto& r : records) {
        first = true;
        for (auto it = r.begin(); it != r.end(); ++it) {
          out << (first ? "" : "\t") << cell(it.value());
          first = false;
        }
        out << '\n';
      }
      break;
    }
    case Format::text:
      for (std::size_t i = 0; i < records.size(); ++i) {
        if (i > 0) out << '\n';
        for (auto it = records[i].begin(); it != records[i].end(); ++it) {
          out << it.key() << ": " << cell(it.value()) << '\n';
        }
      }
      break;
  }
}

void check_k_range(const Graph& g, int k) {
  if (k < 0 || k >= g.order()) {
    throw InputError("k = " + std::to_string(k) + " must lie in [0, " + std::to_string(g.order()) + ")");
  }
}

// --- analyze ---------------------------------------------------------------

int cmd_analyze(const std::string& graph_arg, int k, Format format, std::istream& in, std::ostream& out) {
  const auto graphs = load_graphs(graph_arg, in);
  std::vector<Json> records;
  bool theorem_violated = false;
  for (const Graph& g : graphs) {
    check_k_range(g, k);
    const CriticalityReport report = is_minimal_kfc(g, k);
    Json r;
    r["graph6"] = to_graph6(g);
    r["n"] = g.order();
    r["k"] = k;
    r["parity_ok"] = (g.order() + k) % 2 == 0;
    if ((g.order() + k) % 2 != 0) r["note"] = "n + k is odd, so the graph cannot be k-factor-critical";
    r["criticality"] = to_json(report);
    r["gallai_edmonds"] = to_json(gallai_edmonds(g));
    r["deficiency"] = deficiency(g);
    r["min_degree"] = min_degree(g);
    if (report.is_kfc && k >= 1 && g.order() <= 24) {
      const bool ok = check_connectivity_theorem(g, k);
      r["connectivity_theorem"] = ok;
      theorem_violated |= !ok;
    } else {
      r["connectivity_theorem"] = nullptr;
    }
    records.push_back(std::move(r));
  }
  emit_records(records, format, out);
  return theorem_violated ? kExitCounterexample : kExitOk;
}

// --- classify --------------------------------------------------------------

Edge parse_edge(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw InputError("edge must be written U,V");
  try {
    std::size_t used_u = 0;
    std::size_t used_v = 0;
    const std::string su = s.substr(0, comma);
    const std::string sv = s.substr(comma + 1);
    const int u = std::stoi(su, &used_u);
    const int v = std::stoi(sv, &used_v);
    if (used_u != su.size() || used_v != sv.size()) throw InputError("edge must be written U,V");
    if (u == v) throw InputError("edge endpoints must differ");
    return Edge(u, v);
  } catch (const std::logic_error&) {
    throw InputError("edge must be written U,V");
  }
}

int cmd_classify(const std::string& graph_arg, const std::string& edge_arg, Format format, std::istream& in,
                 std::ostream& out, std::ostream& err) {
  const Graph h = load_single_graph(graph_arg, in);
  const Edge e = parse_edge(edge_arg);
  if (e.u < 0 || e.v >= h.order()) throw InputError("edge endpoint out of range");
  Json r;
  r["graph6"] = to_graph6(h);
  r["edge"] = to_json(e);
  try {
    const ClassificationResult result = classify(h, e);
    r["status"] = "ok";
    r["result"] = to_json(result);
    emit_records({r}, format, out);
    return kExitOk;
  } catch (const ClassifyError& ex) {
    r["status"] = "precondition-failed";
    r["reason"] = to_string(ex.reason());
    r["message"] = ex.what();
    emit_records({r}, format, out);
    err << "classify: " << ex.what() << '\n';
    return kExitCounterexample;
  }
}

// --- minimalize / certify --------------------------------------------------

int cmd_minimalize(const std::string& graph_arg, int k, std::uint64_t seed, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  const Graph g = load_single_graph(graph_arg, in);
  check_k_range(g, k);
  if (!is_k_factor_critical(g, k).kfc) {
    err << "minimalize: input is not " << k << "-factor-critical\n";
    return kExitCounterexample;
  }
  out << to_graph6(minimalize(g, k, seed)) << '\n';
  return kExitOk;
}

int cmd_certify(const std::string& graph_arg, int k, Format format, std::istream& in, std::ostream& out,
                std::ostream& err) {
  const Graph g = load_single_graph(graph_arg, in);
  check_k_range(g, k);
  const CriticalityReport report = is_minimal_kfc(g, k);
  if (!report.is_kfc) {
    err << "certify: graph is not " << k << "-factor-critical; failing set "
        << report.failing_set->to_string() << '\n';
    return kExitCounterexample;
  }
  if (!report.is_minimal) {
    err << "certify: not minimal; certificate-free edges:";
    for (Edge e : report.uncertified_edges) err << ' ' << e.u << '-' << e.v;
    err << '\n';
    Json r;
    r["graph6"] = to_graph6(g);
    r["k"] = k;
    Json free = Json::array();
    for (Edge e : report.uncertified_edges) free.push_back(to_json(e));
    r["certificate_free_edges"] = free;
    emit_records({r}, format, out);
    return kExitCounterexample;
  }
  std::vector<Json> records;
  for (const auto& c : report.certificates) {
    Json r;
    r["edge"] = to_json(c.edge);
    r["s_e"] = to_json(c.s_e);
    records.push_back(std::move(r));
  }
  emit_records(records, format, out);
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
  int n = 0;
  int k = 0;
  std::string source = "all";
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  int jobs = 1;
  Format format = Format::text;
  std::string log_path;
};

void print_verify_text(const std::vector<VerificationRecord>& records, const VerifyCounts& counts,
                       std::ostream& out) {
  out << std::left << std::setw(24) << "graph6" << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(7)
      << "k-FC" << std::setw(9) << "minimal" << std::setw(7) << "delta" << "verdict\n";
  for (const auto& r : records) {
    out << std::setw(24) << r.graph6 << std::setw(4) << r.n << std::setw(4) << r.k << std::setw(7)
        << (r.is_kfc ? "yes" : "no") << std::setw(9) << (r.is_minimal ? "yes" : "no") << std::setw(7)
        << r.min_degree << (r.pass() ? "pass" : "FAIL") << '\n';
  }
  out << "scanned " << counts.scanned << ", k-FC " << counts.kfc << ", minimal " << counts.minimal
      << ", counterexamples " << counts.counterexamples << ", connectivity violations "
      << counts.connectivity_violations << '\n';
}

void append_run_log(const VerifyOptions& opt, const std::vector<std::string>& args, const std::string& digest,
                    const VerifyCounts& counts) {
  std::ofstream log(opt.log_path, std::ios::app);
  if (!log) throw InputError("cannot open log " + opt.log_path);
  std::string cmdline;
  for (const auto& a : args) cmdline += (cmdline.empty() ? "" : " ") + a;
  Json e;
  e["timestamp"] = utc_timestamp();
  e["command_line"] = cmdline;
  e["input_digest"] = digest;
  e["seed"] = opt.seed;
  e["counts"] = to_json(counts);
  e["verdict"] = counts.counterexamples == 0 && counts.connectivity_violations == 0 ? "pass" : "fail";
  log << e.dump() << '\n';
}

int cmd_verify(const VerifyOptions& opt, const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  if (opt.n < 1 || opt.n > kMaxVertices) throw InputError("n must lie in [1, 64]");
  if (opt.k < 1 || opt.k >= opt.n) throw InputError("k must lie in [1, n)");
  if ((opt.n + opt.k) % 2 != 0) throw InputError("n + k must be even");
  set_worker_count(opt.jobs);
  const Exec exec = opt.jobs == 1 ? Exec::serial : Exec::parallel;

  std::vector<VerificationRecord> records;
  std::string digest;
  std::size_t scanned = 0;
  if (opt.source == "all" || opt.source.starts_with("file:")) {
    std::vector<Graph> graphs;
    if (opt.source == "all") {
      if (opt.n > 8) throw InputError("source=all supports n <= 8");
      graphs = all_graphs(opt.n, exec);
      digest = hex64(fnv1a("all:" + std::to_string(opt.n)));
    } else {
      const std::string text = read_file(opt.source.substr(5));
      digest = hex64(fnv1a(text));
      graphs = read_graphs(text);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (graphs[i].order() != opt.n) {
          throw InputError("graph " + std::to_string(i + 1) + " has order " + std::to_string(graphs[i].order()) +
                           ", expected " + std::to_string(opt.n));
        }
      }
    }
    scanned = graphs.size();
    auto all = ordered_map<VerificationRecord>(graphs.size(), exec,
                                               [&](std::size_t i) { return verify_graph(graphs[i], opt.k); });
    for (auto& r : all) {
      if (r.is_kfc) records.push_back(std::move(r));
    }
  } else if (opt.source == "sample") {
    digest = hex64(fnv1a("sample:" + std::to_string(opt.n) + ":" + std::to_string(opt.k)));
    records = ordered_map<VerificationRecord>(opt.samples, exec, [&](std::size_t i) {
      const SampleDraw d = draw_sample(opt.n, opt.k, opt.seed, i);
      VerificationRecord r = verify_graph(d.minimal, opt.k);
      r.start_graph6 = to_graph6(d.start);
      r.start_connectivity_ok = check_connectivity_theorem(d.start, opt.k);
      return r;
    });
    scanned = records.size();
  } else {
    throw InputError("source must be all, file:PATH or sample");
  }

  VerifyCounts counts;
  counts.scanned = scanned;
  for (const auto& r : records) {
    counts.kfc += r.is_kfc;
    counts.minimal += r.is_kfc && r.is_minimal;
    counts.counterexamples += !r.pass();
    counts.connectivity_violations += (r.connectivity_ok == false) + (r.start_connectivity_ok == false);
  }

  if (opt.format == Format::text) {
    print_verify_text(records, counts, out);
  } else {
    std::vector<Json> js;
    for (const auto& r : records) js.push_back(to_json(r));
    emit_records(js, opt.format, out);
    if (opt.format == Format::json) out << Json{{"summary", to_json(counts)}}.dump() << '\n';
  }
  for (const auto& r : records) {
    if (!r.pass()) err << "counterexample: " << r.graph6 << " k=" << r.k << '\n';
  }
  if (!opt.log_path.empty()) append_run_log(opt, args, digest, counts);
  return counts.counterexamples == 0 && counts.connectivity_violations == 0 ? kExitOk : kExitCounterexample;
}

}  // namespace

Json to_json(VertexSet s) { return s.to_vector(); }

Json to_json(Edge e) { return Json::array({e.u, e.v}); }

Json to_json(const CriticalityReport& r) {
  Json j;
  j["k"] = r.k;
  j["is_kfc"] = r.is_kfc;
  j["is_minimal"] = r.is_minimal;
  j["failing_set"] = r.failing_set ? to_json(*r.failing_set) : Json(nullptr);
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(Json{{"edge", to_json(c.edge)}, {"s_e", to_json(c.s_e)}});
  j["certificates"] = certs;
  Json free = Json::array();
  for (Edge e : r.uncertified_edges) free.push_back(to_json(e));
  j["uncertified_edges"] = free;
  return j;
}

Json to_json(const GEDecomposition& d) {
  return Json{{"D", to_json(d.d)}, {"A", to_json(d.a)}, {"C", to_json(d.c)}};
}

Json to_json(const BarrierWitness& w) {
  Json comps = Json::array();
  for (const auto& c : w.components) {
    comps.push_back(Json{{"vertices", to_json(c.vertices)}, {"odd", c.odd}, {"factor_critical", c.factor_critical}});
  }
  return Json{{"X", to_json(w.x)}, {"components", comps}};
}

Json to_json(const ClassificationResult& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"label", to_string(e.label)},
                           {"witness", to_json(e.witness)},
                           {"u_component", e.u_component},
                           {"v_component", e.v_component}});
  }
  return Json{{"canonical", to_string(r.canonical().label)}, {"labels", entries}};
}

Json to_json(const VerificationRecord& r) {
  Json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["k"] = r.k;
  j["is_kfc"] = r.is_kfc;
  j["is_minimal"] = r.is_minimal;
  j["min_degree"] = r.min_degree;
  j["verdict"] = r.pass() ? "pass" : "fail";
  j["connectivity_ok"] = r.connectivity_ok ? Json(*r.connectivity_ok) : Json(nullptr);
  j["start_graph6"] = r.start_graph6 ? Json(*r.start_graph6) : Json(nullptr);
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const VerifyCounts& c) {
  return Json{{"scanned", c.scanned},
              {"kfc", c.kfc},
              {"minimal", c.minimal},
              {"counterexamples", c.counterexamples},
              {"connectivity_violations", c.connectivity_violations}};
}

VerificationRecord verify_graph(const Graph& g, int k) {
  VerificationRecord r;
  r.graph6 = to_graph6(g);
  r.n = g.order();
  r.k = k;
  r.min_degree = min_degree(g);
  const CriticalityReport report = is_minimal_kfc(g, k);
  r.is_kfc = report.is_kfc;
  r.is_minimal = report.is_minimal;
  if (r.is_kfc) r.connectivity_ok = check_connectivity_theorem(g, k);
  if (!r.pass()) {
    // Re-check minimality by deleting each edge directly, without certificates.
    bool minimal = true;
    for (Edge e : g.edges()) minimal &= !is_k_factor_critical(g.without_edge_unchecked(e), k).kfc;
    r.witness = "edge-deletion recheck: minimal=" + std::string(minimal ? "true" : "false") +
                ", min_degree=" + std::to_string(r.min_degree) + ", expected " + std::to_string(k + 1);
  }
  return r;
}

SampleDraw draw_sample(int n, int k, std::uint64_t seed, std::uint64_t index) {
  Rng rng(splitmix64(seed ^ splitmix64(index)));
  constexpr std::size_t kMaxAttempts = 10000;
  for (std::size_t attempt = 1; attempt <= kMaxAttempts; ++attempt) {
    const double p = 0.5 + 0.5 * rng.uniform01();
    const std::uint64_t graph_seed = rng.next();
    const std::uint64_t order_seed = rng.next();
    Graph start = random_graph(n, p, graph_seed);
    if (!is_k_factor_critical(start, k).kfc) continue;
    return {start, minimalize(start, k, order_seed), attempt};
  }
  throw InputError("no k-factor-critical start found after " + std::to_string(kMaxAttempts) + " draws");
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching-theory verification toolkit for minimal k-factor-critical graphs", "mfc"};
  app.require_subcommand(1);

  std::string graph_arg;
  std::string edge_arg;
  std::string format_arg = "text";
  int k = 0;
  std::uint64_t seed = 0;
  VerifyOptions vopt;

  auto* analyze = app.add_subcommand("analyze", "Criticality, decomposition and connectivity report");
  analyze->add_option("--graph", graph_arg, "graph6 string, '-' for stdin, or file:PATH")->required();
  analyze->add_option("--k", k, "number of deleted vertices")->required();
  analyze->add_option("--format", format_arg, "text, json or tsv");

  auto* cls = app.add_subcommand("classify", "Classify a deficient 10-vertex graph with a designated edge");
  cls->add_option("--graph", graph_arg, "graph6 string")->required();
  cls->add_option("--edge", edge_arg, "U,V")->required();
  cls->add_option("--format", format_arg, "text, json or tsv");

  auto* verify = app.add_subcommand("verify", "Check delta = k+1 on minimal k-factor-critical graphs");
  verify->add_option("--n", vopt.n, "graph order")->required();
  verify->add_option("--k", vopt.k, "number of deleted vertices")->required();
  verify->add_option("--source", vopt.source, "all, file:PATH or sample");
  verify->add_option("--samples", vopt.samples, "minimalized instances for source=sample");
  verify->add_option("--seed", vopt.seed, "sampling seed");
  verify->add_option("--jobs", vopt.jobs, "worker count")->check(CLI::PositiveNumber);
  verify->add_option("--format", format_arg, "text, json or tsv");
  verify->add_option("--log", vopt.log_path, "append a run-log entry to this file");

  auto* mini = app.add_subcommand("minimalize", "Delete edges until minimal k-factor-critical");
  mini->add_option("--graph", graph_arg, "graph6 string, '-' for stdin, or file:PATH")->required();
  mini->add_option("--k", k, "number of deleted vertices")->required();
  mini->add_option("--seed", seed, "edge-order seed");

  auto* certify = app.add_subcommand("certify", "Per-edge minimality certificates");
  certify->add_option("--graph", graph_arg, "graph6 string, '-' for stdin, or file:PATH")->required();
  certify->add_option("--k", k, "number of deleted vertices")->required();
  certify->add_option("--format", format_arg, "text, json or tsv");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "mfc: " << ex.what() << '\n';
    return kExitBadInput;
  }

  try {
    const Format format = parse_format(format_arg);
    if (*analyze) return cmd_analyze(graph_arg, k, format, in, out);
    if (*cls) return cmd_classify(graph_arg, edge_arg, format, in, out, err);
    if (*mini) return cmd_minimalize(graph_arg, k, seed, in, out, err);
    if (*certify) return cmd_certify(graph_arg, k, format, in, out, err);
    vopt.format = format;
    return cmd_verify(vopt, args, out, err);
  } catch (const InputError& ex) {
    err << "mfc: " << ex.what() << '\n';
    return kExitBadInput;
  } catch (const std::invalid_argument& ex) {
    err << "mfc: " << ex.what() << '\n';
    return kExitBadInput;
  }
}

}  // namespace mfc::cli
