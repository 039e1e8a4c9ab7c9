// dcut: command-line frontend for the d-cut solver library.
//
// Verbs: solve, verify, recognize, reduce, gen, linegraph, crosscheck.
// Exit codes are a stable contract: 0 = decision yes / success,
// 1 = decision no / validation failure, 2 = usage or class error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcut/cnf.hpp"
#include "dcut/colouring.hpp"
#include "dcut/domination.hpp"
#include "dcut/errors.hpp"
#include "dcut/gadgets.hpp"
#include "dcut/generators.hpp"
#include "dcut/graph.hpp"
#include "dcut/io.hpp"
#include "dcut/json_io.hpp"
#include "dcut/line_graph.hpp"
#include "dcut/metrics.hpp"
#include "dcut/oracle.hpp"
#include "dcut/patterns.hpp"
#include "dcut/solvers.hpp"

#ifndef DCUT_VERSION
#define DCUT_VERSION "0.0.0"
#endif

namespace {

using namespace dcut;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Graph load_graph(const std::string& path) { return parse_graph_auto(read_input(path)); }

// The oracle's size guard, overridable through the environment so scripted
// campaigns can opt into bigger exhaustive runs.
int oracle_guard() {
  if (const char* s = std::getenv("DCUT_ORACLE_GUARD")) {
    try {
      int v = std::stoi(s);
      if (v > 0) return v;
    } catch (...) {
    }
    std::cerr << "warning: ignoring unparsable DCUT_ORACLE_GUARD='" << s << "'\n";
  }
  return OracleLimits{}.max_n;
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
  std::string input;
  int d = 2;
  std::string algo = "auto";
  std::string witness_path;
};

SolveOutcome run_algo(const Graph& g, int d, const std::string& algo) {
  if (algo == "auto") {
    AutoOptions opts;
    opts.oracle_limits.max_n = oracle_guard();
    return solve_auto(g, d, opts);
  }
  if (algo == "oracle") {
    OracleLimits lim;
    lim.max_n = oracle_guard();
    SolveOutcome out;
    out.algorithm = "oracle";
    auto cert = oracle_solve(g, d, lim);
    out.yes = cert.has_value();
    out.certificate = std::move(cert);
    return out;
  }
  if (algo == "diam2") return solve_diameter2(g, d);
  if (algo == "p5free") return solve_p5_free(g, d);
  if (algo == "p3p4free") return solve_p3p4_free(g, d);
  if (algo == "domset") {
    auto dom = min_dominating_set(g, g.vertex_count());
    if (!dom) throw PreconditionError("graph has no dominating set (is it empty?)");
    SolveOutcome out;
    out.algorithm = "domset";
    auto cert = solve_with_dominating_set(g, *dom, d, &out.stats);
    out.yes = cert.has_value();
    out.certificate = std::move(cert);
    return out;
  }
  throw CLI::ValidationError("--algo", "unknown algorithm '" + algo + "'");
}

int cmd_solve(const SolveArgs& a) {
  Graph g = load_graph(a.input);
  SolveOutcome out = run_algo(g, a.d, a.algo);
  std::cerr << "algo=" << out.algorithm << " stats=" << stats_to_json(out.stats);
  if (!out.yes) {
    std::cout << "NO\n";
    return 1;
  }
  std::cout << "YES\n";
  if (!a.witness_path.empty())
    write_output(a.witness_path, certificate_to_json(*out.certificate));
  else
    std::cout << certificate_to_json(*out.certificate);
  return 0;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const std::string& graph_path, const std::string& cert_path) {
  Graph g = load_graph(graph_path);
  DCutCertificate cert = certificate_from_json(read_input(cert_path));
  int n = g.vertex_count();
  for (int v : cert.red)
    if (v < 0 || v >= n) throw ParseError("certificate names vertex " + std::to_string(v) +
                                          " outside the graph");
  for (int v : cert.blue)
    if (v < 0 || v >= n) throw ParseError("certificate names vertex " + std::to_string(v) +
                                          " outside the graph");
  Bitset red = Bitset::of(n, cert.red), blue = Bitset::of(n, cert.blue);
  ValidationResult vr = validate_colouring(g, red, blue, cert.d);
  bool ok = vr.ok;
  for (const Violation& v : vr.violations) std::cout << v.message << "\n";
  if (vr.ok) {
    // The cut edges must be exactly the bichromatic edges.
    std::vector<Edge> expect;
    for (const Edge& e : g.edges())
      if (red.test(e.first) != red.test(e.second)) expect.push_back(e);
    if (expect != cert.cut_edges) {
      ok = false;
      std::cout << "cut_edges do not match the bichromatic edge set (" << cert.cut_edges.size()
                << " listed, " << expect.size() << " actual)\n";
    }
  }
  std::cout << (ok ? "VALID" : "INVALID") << "\n";
  return ok ? 0 : 1;
}

// ---- recognize ------------------------------------------------------------

int cmd_recognize(const std::string& input, int domset_cap) {
  Graph g = load_graph(input);
  std::cout << "n: " << g.vertex_count() << "\n";
  std::cout << "m: " << g.edge_count() << "\n";
  bool conn = is_connected(g);
  std::cout << "connected: " << (conn ? "yes" : "no") << "\n";
  if (conn) {
    std::cout << "diameter: " << diameter(g) << "\n";
    std::cout << "radius: " << radius(g) << "\n";
  }
  const std::pair<const char*, PatternId> checks[] = {
      {"P5-free", PatternId::P5},           {"P6-free", PatternId::P6},
      {"P7-free", PatternId::P7},           {"(P3+P4)-free", PatternId::P3plusP4},
      {"claw-free", PatternId::K1_3},       {"3P2-free", PatternId::ThreeP2},
      {"C3-free", PatternId::C3},           {"C4-free", PatternId::C4},
      {"C5-free", PatternId::C5},           {"C6-free", PatternId::C6},
      {"C7-free", PatternId::C7},
  };
  for (auto& [name, pid] : checks) {
    auto w = find_induced(g, pid);
    std::cout << name << ": " << (w ? "no (witness:" : "yes");
    if (w)
      for (int v : *w) std::cout << " " << v;
    std::cout << (w ? ")" : "") << "\n";
  }
  auto dom = min_dominating_set(g, domset_cap);
  if (dom)
    std::cout << "min_dominating_set: " << dom->size() << "\n";
  else
    std::cout << "min_dominating_set: >" << domset_cap << "\n";
  return 0;
}

// ---- reduce ---------------------------------------------------------------

struct ReduceArgs {
  std::string type;
  std::string cnf_path;
  int d = 0;
  std::string out_graph = "-";
  std::string out_pre;
  std::string out_roles;
  std::string out_pre_roles;
  std::string witness;       // comma-separated 0/1 per variable
  std::string out_witness = "-";
};

Assignment parse_assignment(const std::string& s, int n_vars) {
  Assignment a;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "0" || tok == "false")
      a.push_back(false);
    else if (tok == "1" || tok == "true")
      a.push_back(true);
    else
      throw ParseError("bad assignment token '" + tok + "' (want 0/1 per variable)");
  }
  if (int(a.size()) != n_vars)
    throw ParseError("assignment has " + std::to_string(a.size()) + " values, instance has " +
                     std::to_string(n_vars) + " variables");
  return a;
}

int cmd_reduce(const ReduceArgs& a) {
  CnfInstance inst = parse_dimacs(read_input(a.cnf_path));
  if (a.type == "nae-line") {
    if (inst.flavour != CnfFlavour::NaeAllPositive)
      throw PreconditionError("nae-line reduction wants an all-positive instance; input has "
                              "negative clauses");
    int d = a.d ? a.d : 3;
    LineGadget gadget = build_line_gadget(inst, d);
    write_output(a.out_graph, emit_graph6(gadget.graph) + "\n");
    if (!a.out_pre.empty()) write_output(a.out_pre, emit_graph6(gadget.pre_graph) + "\n");
    if (!a.out_roles.empty()) write_output(a.out_roles, role_map_to_json(gadget.line_roles));
    if (!a.out_pre_roles.empty()) write_output(a.out_pre_roles, role_map_to_json(gadget.roles));
    std::cerr << "pre-graph n=" << gadget.pre_graph.vertex_count()
              << " m=" << gadget.pre_graph.edge_count()
              << ", line graph n=" << gadget.graph.vertex_count()
              << " m=" << gadget.graph.edge_count() << "\n";
    if (!a.witness.empty()) {
      Assignment asg = parse_assignment(a.witness, inst.n_vars);
      EdgeColouring ec = witness_edge_colouring(inst, asg, d);
      write_output(a.out_witness, edge_colouring_to_json(ec));
      std::cerr << "witness edge colouring validated on the pre-graph and its line graph\n";
    }
    return 0;
  }
  if (a.type == "3p2") {
    if (inst.flavour != CnfFlavour::SplitPosNeg)
      throw PreconditionError("3p2 reduction wants a split positive/negative instance");
    int d = a.d ? a.d : 2;
    ThreeP2Gadget gadget = build_3p2_gadget(inst, d);
    write_output(a.out_graph, emit_graph6(gadget.graph) + "\n");
    if (!a.out_roles.empty()) write_output(a.out_roles, role_map_to_json(gadget.roles));
    std::cerr << "gadget n=" << gadget.graph.vertex_count() << " m=" << gadget.graph.edge_count()
              << "\n";
    if (!a.witness.empty()) {
      Assignment asg = parse_assignment(a.witness, inst.n_vars);
      auto [red, blue] = witness_colouring_3p2(inst, asg, d);
      int n = gadget.graph.vertex_count();
      DCutCertificate cert =
          cut_from_colouring(gadget.graph, Bitset::of(n, red), Bitset::of(n, blue), d);
      write_output(a.out_witness, certificate_to_json(cert));
      std::cerr << "witness colouring validated on the gadget\n";
    }
    return 0;
  }
  throw CLI::ValidationError("--type", "unknown reduction '" + a.type + "'");
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::string cls = "connected";
  int n = 8;
  int count = 10;
  std::uint64_t seed = 1;
  double p_min = 0.15, p_max = 0.85;
  long max_attempts = 1000000;
  std::string out = "-";
};

int cmd_gen(const GenArgs& a) {
  auto cls = graph_class_from_name(a.cls);
  if (!cls) throw CLI::ValidationError("--class", "unknown class '" + a.cls + "'");
  GeneratorConfig cfg;
  cfg.n = a.n;
  cfg.seed = a.seed;
  cfg.p_min = a.p_min;
  cfg.p_max = a.p_max;
  cfg.max_attempts = a.max_attempts;
  GraphGenerator gen(*cls, cfg);
  std::ostringstream out;
  int made = 0;
  for (; made < a.count; ++made) {
    auto g = gen.next();
    if (!g) break;
    out << emit_graph6(*g) << "\n";
  }
  write_output(a.out, out.str());
  std::cerr << "generated " << made << "/" << a.count << " (" << gen.attempts()
            << " attempts, acceptance rate " << gen.acceptance_rate() << ")\n";
  if (made < a.count) {
    std::cerr << "rejection budget exhausted\n";
    return 1;
  }
  return 0;
}

// ---- linegraph ------------------------------------------------------------

int cmd_linegraph(const std::string& input, const std::string& out, const std::string& map_path) {
  Graph g = load_graph(input);
  LineGraphResult lg = line_graph(g);
  write_output(out, emit_graph6(lg.graph) + "\n");
  if (!map_path.empty()) {
    nlohmann::json j = nlohmann::json::array();
    for (std::size_t i = 0; i < lg.edges.size(); ++i) {
      nlohmann::json item;
      item["vertex"] = i;
      item["edge"] = nlohmann::json::array({lg.edges[i].first, lg.edges[i].second});
      j.push_back(std::move(item));
    }
    write_output(map_path, j.dump(2) + "\n");
  }
  std::cerr << "line graph n=" << lg.graph.vertex_count() << " m=" << lg.graph.edge_count()
            << "\n";
  return 0;
}

// ---- crosscheck -----------------------------------------------------------

struct CampaignConfig {
  std::string corpus_path;       // graph6 file; empty = generated mode
  std::string cls = "connected";
  int n = 8;
  int trials = 100;
  std::uint64_t seed = 1;
  std::vector<int> ds = {2};
  std::string algo = "auto";
  double timeout_s = 60.0;
  int jobs = 1;
  bool allow_large = false;      // config-level guard override
  std::string csv_path, json_path;
};

struct CampaignRecord {
  int instance_id = 0;
  std::string graph6;
  std::string cls;
  int n = 0, m = 0, d = 0;
  std::string algo;
  std::string decision;         // yes/no/error
  std::string oracle_decision;  // yes/no/timeout
  bool agree = false;
  bool counted = false;  // false for timeouts/errors: excluded from agreement
  double solver_ms = 0, oracle_ms = 0;
  std::string note;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void write_campaign_csv(const std::string& path, const std::vector<CampaignRecord>& recs) {
  std::ostringstream out;
  out << "instance_id,class,n,m,d,algo,decision,oracle_decision,agree,solver_ms,oracle_ms\n";
  for (const CampaignRecord& r : recs)
    out << r.instance_id << "," << csv_escape(r.cls) << "," << r.n << "," << r.m << "," << r.d
        << "," << csv_escape(r.algo) << "," << r.decision << "," << r.oracle_decision << ","
        << (r.agree ? "true" : "false") << "," << r.solver_ms << "," << r.oracle_ms << "\n";
  write_output(path, out.str());
}

void write_campaign_json(const std::string& path, const CampaignConfig& cfg,
                         const std::vector<CampaignRecord>& recs, int mismatches, int timeouts,
                         int errors) {
  nlohmann::json j;
  j["version"] = DCUT_VERSION;
  j["seed"] = cfg.seed;
  j["config"] = {{"mode", cfg.corpus_path.empty() ? "generated" : "corpus"},
                 {"corpus", cfg.corpus_path},
                 {"class", cfg.cls},
                 {"n", cfg.n},
                 {"trials", cfg.trials},
                 {"d", cfg.ds},
                 {"algo", cfg.algo},
                 {"timeout_s", cfg.timeout_s},
                 {"jobs", cfg.jobs},
                 {"oracle_guard", oracle_guard()},
                 {"allow_large", cfg.allow_large}};
  j["summary"] = {{"instances", recs.size()},
                  {"mismatches", mismatches},
                  {"timeouts", timeouts},
                  {"errors", errors},
                  {"all_agree", mismatches == 0}};
  nlohmann::json arr = nlohmann::json::array();
  for (const CampaignRecord& r : recs) {
    nlohmann::json item;
    item["instance_id"] = r.instance_id;
    item["graph6"] = r.graph6;
    item["class"] = r.cls;
    item["n"] = r.n;
    item["m"] = r.m;
    item["d"] = r.d;
    item["algo"] = r.algo;
    item["decision"] = r.decision;
    item["oracle_decision"] = r.oracle_decision;
    item["agree"] = r.agree;
    item["solver_ms"] = r.solver_ms;
    item["oracle_ms"] = r.oracle_ms;
    item["note"] = r.note;
    arr.push_back(std::move(item));
  }
  j["instances"] = std::move(arr);
  write_output(path, j.dump(2) + "\n");
}

int cmd_crosscheck(const CampaignConfig& cfg) {
  int guard = oracle_guard();
  // Collect the instance graphs up front; workers then share an index.
  std::vector<std::pair<Graph, std::string>> pool;
  if (!cfg.corpus_path.empty()) {
    std::istringstream in(read_input(cfg.corpus_path));
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty()) continue;
      Graph g = parse_graph6(line);
      pool.emplace_back(std::move(g), line);
    }
    if (pool.empty()) std::cerr << "warning: empty corpus, trivially 0 mismatches\n";
  } else {
    auto cls = graph_class_from_name(cfg.cls);
    if (!cls) throw CLI::ValidationError("--class", "unknown class '" + cfg.cls + "'");
    if (cfg.n > guard && !cfg.allow_large)
      throw CLI::ValidationError(
          "--n", "n exceeds the oracle guard (" + std::to_string(guard) +
                     "); set DCUT_ORACLE_GUARD or pass --allow-large to proceed");
    GeneratorConfig gc;
    gc.n = cfg.n;
    gc.seed = cfg.seed;
    GraphGenerator gen(*cls, gc);
    for (int i = 0; i < cfg.trials; ++i) {
      auto g = gen.next();
      if (!g) {
        std::cerr << "generator budget exhausted after " << i << " instances\n";
        break;
      }
      std::string g6 = emit_graph6(*g);
      pool.emplace_back(std::move(*g), std::move(g6));
    }
  }

  std::vector<CampaignRecord> recs(pool.size() * cfg.ds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= recs.size()) return;
      const auto& [g, g6] = pool[i / cfg.ds.size()];
      int d = cfg.ds[i % cfg.ds.size()];
      CampaignRecord& r = recs[i];
      r.instance_id = int(i);
      r.graph6 = g6;
      r.cls = cfg.corpus_path.empty() ? cfg.cls : "corpus";
      r.n = g.vertex_count();
      r.m = g.edge_count();
      r.d = d;
      auto t0 = std::chrono::steady_clock::now();
      try {
        SolveOutcome out = run_algo(g, d, cfg.algo);
        r.algo = out.algorithm;
        r.decision = out.yes ? "yes" : "no";
      } catch (const std::exception& e) {
        r.algo = cfg.algo;
        r.decision = "error";
        r.note = e.what();
      }
      r.solver_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
              .count();
      OracleLimits lim;
      lim.max_n = std::max(guard, cfg.allow_large ? g.vertex_count() : 0);
      lim.max_edges = g.vertex_count() * g.vertex_count();
      lim.time_budget_ms = cfg.timeout_s * 1000.0;
      t0 = std::chrono::steady_clock::now();
      OracleOutcome oo = oracle_solve_status(g, d, {}, lim);
      r.oracle_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
              .count();
      r.oracle_decision = oo.status == OracleStatus::Yes   ? "yes"
                          : oo.status == OracleStatus::No ? "no"
                                                           : "timeout";
      if (r.decision != "error" && oo.status != OracleStatus::Timeout) {
        r.counted = true;
        r.agree = (r.decision == r.oracle_decision);
      }
    }
  };
  int jobs = std::max(1, cfg.jobs);
  std::vector<std::thread> threads;
  for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();

  std::sort(recs.begin(), recs.end(), [](const CampaignRecord& a, const CampaignRecord& b) {
    return a.instance_id < b.instance_id;
  });
  int mismatches = 0, timeouts = 0, errors = 0;
  for (const CampaignRecord& r : recs) {
    if (r.decision == "error") ++errors;
    if (r.oracle_decision == "timeout") ++timeouts;
    if (r.counted && !r.agree) {
      ++mismatches;
      std::cerr << "MISMATCH id=" << r.instance_id << " d=" << r.d << " g6=" << r.graph6
                << " solver=" << r.decision << " oracle=" << r.oracle_decision << "\n";
    }
  }
  if (!cfg.csv_path.empty()) write_campaign_csv(cfg.csv_path, recs);
  if (!cfg.json_path.empty())
    write_campaign_json(cfg.json_path, cfg, recs, mismatches, timeouts, errors);
  std::cout << "instances " << recs.size() << ", mismatches " << mismatches << ", timeouts "
            << timeouts << ", errors " << errors << "\n";
  return (mismatches == 0 && errors == 0) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"d-cut solver, reductions and cross-check campaigns (v" DCUT_VERSION ")"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve = app.add_subcommand("solve", "decide d-cut existence and emit a certificate");
  solve->add_option("input", sa.input, "graph file (graph6 or edge list; - for stdin)")
      ->required();
  solve->add_option("--d", sa.d, "cut parameter d")->required()->check(CLI::PositiveNumber);
  solve->add_option("--algo", sa.algo, "auto|oracle|diam2|p5free|p3p4free|domset");
  solve->add_option("--witness", sa.witness_path, "write the certificate JSON here");

  std::string vg, vc;
  auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
  verify->add_option("graph", vg, "graph file")->required();
  verify->add_option("certificate", vc, "certificate JSON file")->required();

  std::string rin;
  int domset_cap = 8;
  auto* rec = app.add_subcommand("recognize", "report graph class membership");
  rec->add_option("input", rin, "graph file")->required();
  rec->add_option("--domset-cap", domset_cap, "give up on min dominating set above this size");

  ReduceArgs ra;
  auto* red = app.add_subcommand("reduce", "build a hardness gadget from a CNF instance");
  red->add_option("--type", ra.type, "nae-line|3p2")->required();
  red->add_option("cnf", ra.cnf_path, "DIMACS-style CNF file")->required();
  red->add_option("--d", ra.d, "cut parameter (default: 3 for nae-line, 2 for 3p2)");
  red->add_option("--out-graph", ra.out_graph, "gadget graph6 output (- for stdout)");
  red->add_option("--out-pre", ra.out_pre, "pre-line graph6 output (nae-line only)");
  red->add_option("--out-roles", ra.out_roles, "role map JSON output");
  red->add_option("--out-pre-roles", ra.out_pre_roles, "pre-graph role map JSON (nae-line)");
  red->add_option("--witness-assignment", ra.witness,
                  "comma-separated 0/1 per variable; builds and validates the witness");
  red->add_option("--out-witness", ra.out_witness, "witness output (- for stdout)");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "generate random class members (graph6 stream)");
  gen->add_option("--class", ga.cls, "connected|diam2|p5free|p3p4free");
  gen->add_option("--n", ga.n, "vertex count")->required();
  gen->add_option("--count", ga.count, "how many graphs");
  gen->add_option("--seed", ga.seed, "RNG seed")->required();
  gen->add_option("--p-min", ga.p_min, "edge probability lower bound");
  gen->add_option("--p-max", ga.p_max, "edge probability upper bound");
  gen->add_option("--max-attempts", ga.max_attempts, "total rejection budget");
  gen->add_option("--out", ga.out, "output path (- for stdout)");

  std::string lin, lout = "-", lmap;
  auto* lg = app.add_subcommand("linegraph", "emit the line graph of a graph");
  lg->add_option("input", lin, "graph file")->required();
  lg->add_option("--out", lout, "line graph output (- for stdout)");
  lg->add_option("--map", lmap, "vertex-to-edge map JSON output");

  CampaignConfig cc;
  auto* cross = app.add_subcommand("crosscheck", "solver vs oracle agreement campaign");
  auto* corp = cross->add_option("--corpus", cc.corpus_path, "graph6 corpus file");
  cross->add_option("--class", cc.cls, "generator class for random mode")->excludes(corp);
  cross->add_option("--n", cc.n, "vertex count for random mode")->excludes(corp);
  cross->add_option("--trials", cc.trials, "instance count for random mode")->excludes(corp);
  cross->add_option("--seed", cc.seed, "RNG seed");
  cross->add_option("--d", cc.ds, "d values (repeatable)");
  cross->add_option("--algo", cc.algo, "solver to cross-check (default auto)");
  cross->add_option("--timeout", cc.timeout_s, "oracle budget per instance, seconds");
  cross->add_option("--jobs", cc.jobs, "worker threads");
  cross->add_flag("--allow-large", cc.allow_large, "run oracle beyond its size guard");
  cross->add_option("--csv", cc.csv_path, "CSV report path");
  cross->add_option("--json", cc.json_path, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve) return cmd_solve(sa);
    if (*verify) return cmd_verify(vg, vc);
    if (*rec) return cmd_recognize(rin, domset_cap);
    if (*red) return cmd_reduce(ra);
    if (*gen) return cmd_gen(ga);
    if (*lg) return cmd_linegraph(lin, lout, lmap);
    if (*cross) return cmd_crosscheck(cc);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
