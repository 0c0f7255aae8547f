#include "kuniv/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kuniv/budget.hpp"
#include "kuniv/coloring.hpp"
#include "kuniv/error.hpp"
#include "kuniv/extendibility.hpp"
#include "kuniv/families.hpp"
#include "kuniv/game.hpp"
#include "kuniv/graph_io.hpp"
#include "kuniv/sparse.hpp"
#include "kuniv/theorem3.hpp"
#include "kuniv/theorem4.hpp"
#include "kuniv/universality.hpp"

namespace kuniv::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex += kHex[md[i] >> 4];
    hex += kHex[md[i] & 15];
  }
  return hex;
}

namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Run {
  json inputs = json::object();
  std::optional<std::uint64_t> seed;
  std::ostream* err = nullptr;
  Budgets budgets;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Graph load_graph(Run& run, const std::string& path) {
  auto text = read_file(path);
  run.inputs[path] = sha256_hex(text);
  try {
    return read_graph(text);
  } catch (const std::exception& e) {
    throw UsageError("malformed graph file " + path + ": " + e.what());
  }
}

json write_graph(Run& run, const Graph& g, const std::string& path) {
  std::string text;
  switch (format_for_path(path)) {
    case GraphFormat::Json:
      text = graph_to_json(g);
      break;
    case GraphFormat::EdgeList:
      if (g.has_labels()) *run.err << "kuniv: warning: edge-list output drops vertex labels\n";
      text = graph_to_edge_list(g);
      break;
    case GraphFormat::Dot:
      text = graph_to_dot(g);
      break;
  }
  write_file(path, text);
  return {{"path", path}, {"sha256", sha256_hex(text)}};
}

ExactRational parse_alpha(const std::string& text) {
  ExactRational a;
  try {
    a = ExactRational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("--alpha: " + std::string(e.what()));
  }
  if (!(ExactRational(0) < a && a < ExactRational(1))) throw UsageError("--alpha must lie strictly between 0 and 1");
  return a;
}

std::vector<Vertex> parse_set(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      auto v = std::stoull(item, &used);
      if (used != item.size() || v > UINT32_MAX) throw std::invalid_argument(item);
      out.push_back(static_cast<Vertex>(v));
    } catch (const std::exception&) {
      throw UsageError("--set: '" + item + "' is not a vertex id");
    }
  }
  return out;
}

json to_json(const ExtendedNat& x) { return x.is_omega() ? json("omega") : json(x.value()); }

json to_json(const ExtensionPattern& p) { return {{"mask", p.mask}, {"positions", p.positions()}}; }

void warn_if_inadmissible(Run& run, const ExactRational& alpha, std::size_t n) {
  if (!is_admissible_alpha(alpha, n)) {
    *run.err << "kuniv: warning: alpha " << alpha.to_string()
             << " is not admissible for this size; ties are possible\n";
  }
}

// A verification that ran to completion but did not pass: the report is
// still printed, the exit code is 1.
struct Outcome {
  json result;
  bool ok = true;
};

struct Construct {
  std::string family;
  std::optional<std::size_t> k, n;
  std::optional<std::uint64_t> seed;
  std::string out;

  Outcome run(Run& r) const {
    auto need = [](const std::optional<std::size_t>& v, const char* flag) {
      if (!v) throw UsageError(std::string("construct: this family needs ") + flag);
      return *v;
    };
    json result{{"family", family}};
    Graph g;
    if (family == "theorem3") {
      result["k"] = need(k, "--k");
      g = theorem3_graph(*k);
    } else if (family == "theorem4") {
      result["k"] = need(k, "--k");
      result["n"] = need(n, "--n");
      g = theorem4_graph(*k, *n, r.budgets);
    } else {
      result["n"] = need(n, "--n");
      if (family == "tree") {
        if (!seed) throw UsageError("construct: random families need --seed");
        r.seed = seed;
      }
      g = standard_family(family, *n, seed.value_or(0));
    }
    result["order"] = g.order();
    result["edges"] = g.edge_count();
    result["out"] = write_graph(r, g, out);
    return {result};
  }
};

struct DecideUniversal {
  std::string graph, ranks;
  std::size_t k = 0;
  bool certificate = false;

  Outcome run(Run& r) const {
    auto g = load_graph(r, graph);
    auto table = rank_table(g, k);
    auto rep = is_k_universal(g, k, table, certificate);
    json result{{"k", k},
                {"n", g.order()},
                {"universal", rep.universal},
                {"witness", rep.witness ? json(*rep.witness) : json(nullptr)},
                {"iterations", rep.iterations}};
    if (certificate) {
      json steps = json::array();
      for (const auto& s : rep.certificate) {
        steps.push_back({{"tuple", s.tuple},
                         {"rank", to_json(s.rank)},
                         {"pattern", to_json(s.pattern)},
                         {"response", s.response ? json(*s.response) : json(nullptr)},
                         {"next", s.next ? json(*s.next) : json(nullptr)}});
      }
      result["certificate"] = steps;
    }
    if (!ranks.empty()) {
      json rows = json::array();
      for (std::size_t i = 0; i < table.set_count(); ++i) {
        rows.push_back({{"set", table.set_at(i)}, {"rank", to_json(table.rank_at(i))}});
      }
      auto text = json{{"k", k}, {"n", g.order()}, {"ranks", rows}}.dump() + "\n";
      write_file(ranks, text);
      result["ranks"] = {{"path", ranks}, {"sha256", sha256_hex(text)}};
    }
    return {result};
  }
};

struct DecideExtendible {
  std::string graph;
  std::size_t k = 0;

  Outcome run(Run& r) const {
    auto g = load_graph(r, graph);
    auto rep = is_k_extendible(g, k);
    json defect = nullptr;
    if (rep.defect) defect = {{"tuple", rep.defect->tuple}, {"pattern", to_json(rep.defect->pattern)}};
    return {{{"k", k}, {"n", g.order()}, {"extendible", rep.extendible}, {"defect", defect}}};
  }
};

struct Game {
  std::string from, to, rounds;
  std::size_t k = 0;

  Outcome run(Run& r) const {
    ExtendedNat budget = ExtendedNat::omega();
    if (rounds != "eternal" && rounds != "omega") {
      try {
        std::size_t used = 0;
        budget = ExtendedNat(std::stoull(rounds, &used));
        if (used != rounds.size()) throw std::invalid_argument(rounds);
      } catch (const std::exception&) {
        throw UsageError("--rounds must be a number or 'eternal'");
      }
    }
    auto a = load_graph(r, from);
    auto b = load_graph(r, to);
    auto v = duplicator_wins(a, b, k, budget, r.budgets);
    return {{{"k", k},
             {"rounds", to_json(budget)},
             {"winner", std::string(to_string(v.winner))},
             {"rounds_bound", to_json(v.rounds_bound)}}};
  }
};

struct Coloring {
  std::string graph;
  bool witness = false;

  Outcome run(Run& r) const {
    auto g = load_graph(r, graph);
    auto c = coloring_number(g);
    json result{{"coloring_number", c.coloring_number}};
    if (witness) {
      result["witness"] = {{"ordering", c.witness.ordering}, {"back_degrees", c.witness.back_degrees}};
    }
    return {result};
  }
};

struct Closure {
  std::string graph, set, alpha;
  std::size_t l = 0;

  Outcome run(Run& r) const {
    auto g = load_graph(r, graph);
    auto a = parse_alpha(alpha);
    warn_if_inadmissible(r, a, g.order());
    auto c = closure(g, VertexSet(g.order(), parse_set(set)), l, a, r.budgets);
    json trace = json::array();
    for (const auto& s : c.trace) trace.push_back({{"round", s.round}, {"added", s.added}, {"base", s.base}});
    return {{{"alpha", a.to_string()},
             {"l", l},
             {"closure", c.closure.members()},
             {"size", c.closure.size()},
             {"rounds", c.rounds},
             {"trace", trace}}};
  }
};

struct Sample {
  std::string model, alpha, out;
  std::size_t n = 0;
  std::optional<double> p;
  std::uint64_t seed = 0;

  Outcome run(Run& r) const {
    r.seed = seed;
    json result{{"model", model}, {"n", n}};
    Graph g;
    if (model == "gnp") {
      if (!p || !alpha.empty()) throw UsageError("sample --model gnp needs --p and no --alpha");
      if (*p < 0.0 || *p > 1.0) throw InvalidArgument("--p must lie in [0, 1]");
      result["p"] = *p;
      g = sample_gnp(n, *p, seed);
    } else {
      if (p || alpha.empty()) throw UsageError("sample --model sparse needs --alpha and no --p");
      auto a = parse_alpha(alpha);
      result["alpha"] = a.to_string();
      g = sample_sparse(n, a, seed);
    }
    result["edges"] = g.edge_count();
    result["out"] = write_graph(r, g, out);
    return {result};
  }
};

struct ClosureBound {
  std::string alpha;
  std::size_t n = 0, l = 0, trials = 0;
  std::uint64_t seed = 0;

  Outcome run(Run& r) const {
    r.seed = seed;
    auto a = parse_alpha(alpha);
    warn_if_inadmissible(r, a, n);
    auto s = closure_bound_experiment(n, a, l, trials, seed, r.budgets);
    json hist = json::object();
    for (const auto& [size, count] : s.histogram) hist[std::to_string(size)] = count;
    return {{{"experiment", "closure-bound"},
             {"n", s.n},
             {"alpha", s.alpha.to_string()},
             {"admissible", is_admissible_alpha(a, n)},
             {"l", s.l},
             {"trials", s.trials},
             {"seed", s.seed},
             {"sizes", s.sizes},
             {"max_size", s.max_size},
             {"histogram", hist}}};
  }
};

struct VerifyTheorem3 {
  std::size_t k = 0;

  Outcome run(Run&) const {
    auto rep = verify_theorem3_pairs(k);
    json violations = json::array();
    for (const auto& v : rep.violations) {
      violations.push_back({{"part", v.part}, {"f1", v.f1}, {"f2", v.f2}, {"reason", v.reason}});
    }
    return {{{"check", "theorem3-pairs"},
             {"k", rep.k},
             {"pairs_checked", rep.pairs_checked},
             {"differing_case", rep.differing_case},
             {"agreeing_case", rep.agreeing_case},
             {"violations", violations},
             {"passed", rep.passed()}},
            rep.passed()};
  }
};

struct VerifyTheorem4 {
  std::size_t k = 0, n = 0;
  std::uint64_t seed = 0;
  Theorem4Options options;

  Outcome run(Run& r) const {
    r.seed = seed;
    auto rep = verify_theorem4(k, n, seed, options);
    json distances = json::array();
    for (const auto& d : rep.bfs_distances) distances.push_back(to_json(d));
    return {{{"check", "theorem4"},
             {"k", rep.k},
             {"n", rep.n},
             {"vertices", rep.vertices},
             {"shift_pairs_exhaustive", rep.shift_pairs_exhaustive},
             {"shift_pairs_sampled", rep.shift_pairs_sampled},
             {"shift_violations", rep.shift_violations},
             {"audit_pairs", rep.audit_pairs},
             {"audit_mismatches", rep.audit_mismatches},
             {"symmetry_violations", rep.symmetry_violations},
             {"target_part", rep.target_part},
             {"required_distance", rep.required_distance},
             {"bfs_sources", rep.bfs_sources},
             {"bfs_distances", distances},
             {"passed", rep.passed()}},
            rep.passed()};
  }
};

struct ExportDot {
  std::string graph, out, name = "G";
};

struct Convert {
  std::string graph, out;

  Outcome run(Run& r) const {
    auto g = load_graph(r, graph);
    return {{{"order", g.order()}, {"edges", g.edge_count()}, {"out", write_graph(r, g, out)}}};
  }
};

std::string join(const std::vector<std::string>& args) {
  std::string s = "kuniv";
  for (const auto& a : args) s += " " + a;
  return s;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact k-universality and k-extendibility engine for finite graphs", "kuniv"};
  app.require_subcommand(1);
  std::string report_path;
  app.add_option("--report", report_path, "Write the JSON report to this file instead of stdout");
  app.footer(
      "Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.\n"
      "KUNIV_BUDGET overrides enumeration budgets, e.g. KUNIV_BUDGET=sparse=20,bruteforce=12,game=1e8");

  Construct construct;
  auto* c_construct = app.add_subcommand("construct", "Build a graph from a named family");
  c_construct->add_option("--family", construct.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"theorem3", "theorem4", "clique", "cycle", "path", "empty", "star", "tree", "paley"}));
  c_construct->add_option("--k", construct.k, "Parameter k (theorem3, theorem4)");
  c_construct->add_option("--n", construct.n, "Vertex count (paley: the prime q; theorem4: number of parts)");
  c_construct->add_option("--seed", construct.seed, "Seed for random families");
  c_construct->add_option("--out", construct.out, "Output path (.json, .dot, otherwise edge list)")->required();

  auto* c_decide = app.add_subcommand("decide", "Decide a graph property");
  c_decide->require_subcommand(1);
  DecideUniversal universal;
  auto* c_universal = c_decide->add_subcommand("universal", "Decide k-universality via the rank fixed point");
  c_universal->add_option("--graph", universal.graph, "Input graph")->required();
  c_universal->add_option("--k", universal.k, "k >= 2")->required();
  c_universal->add_option("--ranks", universal.ranks, "Also write the rank of every (k-1)-set to this file");
  c_universal->add_flag("--certificate", universal.certificate, "Include a refutation trace");
  DecideExtendible extendible;
  auto* c_extendible = c_decide->add_subcommand("extendible", "Decide k-extendibility");
  c_extendible->add_option("--graph", extendible.graph, "Input graph")->required();
  c_extendible->add_option("--k", extendible.k, "k >= 1")->required();

  Game game;
  auto* c_game = app.add_subcommand("game", "Solve the existential k-pebble game from A to B");
  c_game->add_option("--from", game.from, "Spoiler's graph A")->required();
  c_game->add_option("--to", game.to, "Duplicator's graph B")->required();
  c_game->add_option("--k", game.k, "Number of pebble pairs")->required();
  c_game->add_option("--rounds", game.rounds, "Round count or 'eternal'")->required();

  Coloring coloring;
  auto* c_coloring = app.add_subcommand("coloring", "Coloring number by minimum-degree peeling");
  c_coloring->add_option("--graph", coloring.graph, "Input graph")->required();
  c_coloring->add_flag("--witness", coloring.witness, "Include the witness ordering");

  Closure closure_cmd;
  auto* c_closure = app.add_subcommand("closure", "Rigid closure of a vertex set");
  c_closure->add_option("--graph", closure_cmd.graph, "Input graph")->required();
  c_closure->add_option("--set", closure_cmd.set, "Comma-separated seed vertices")->required();
  c_closure->add_option("--l", closure_cmd.l, "Largest set size added in one step")->required();
  c_closure->add_option("--alpha", closure_cmd.alpha, "Exponent as P/Q, 0 < alpha < 1")->required();

  Sample sample;
  auto* c_sample = app.add_subcommand("sample", "Sample a random graph");
  c_sample->add_option("--model", sample.model, "gnp or sparse")->required()->check(CLI::IsMember({"gnp", "sparse"}));
  c_sample->add_option("--n", sample.n, "Vertex count")->required();
  c_sample->add_option("--p", sample.p, "Edge probability (gnp)");
  c_sample->add_option("--alpha", sample.alpha, "Exponent P/Q, edge probability n^-alpha (sparse)");
  c_sample->add_option("--seed", sample.seed, "Random seed")->required();
  c_sample->add_option("--out", sample.out, "Output path")->required();

  auto* c_experiment = app.add_subcommand("experiment", "Run an experiment");
  c_experiment->require_subcommand(1);
  ClosureBound bound;
  auto* c_bound = c_experiment->add_subcommand("closure-bound", "Closure sizes in sparse random graphs");
  c_bound->add_option("--n", bound.n, "Vertex count")->required();
  c_bound->add_option("--alpha", bound.alpha, "Exponent P/Q")->required();
  c_bound->add_option("--l", bound.l, "Closure set size bound")->required();
  c_bound->add_option("--trials", bound.trials, "Number of sampled graphs")->required();
  c_bound->add_option("--seed", bound.seed, "Random seed")->required();

  auto* c_verify = app.add_subcommand("verify", "Check a structural claim about a construction");
  c_verify->require_subcommand(1);
  VerifyTheorem3 verify3;
  auto* c_verify3 = c_verify->add_subcommand("theorem3-pairs", "Pair lemma on the k-partite construction");
  c_verify3->add_option("--k", verify3.k, "4 <= k <= 16")->required();
  VerifyTheorem4 verify4;
  auto* c_verify4 = c_verify->add_subcommand("theorem4", "Shift symmetry, adjacency audit and distances on the cyclic construction");
  c_verify4->add_option("--k", verify4.k, "4 <= k <= 16")->required();
  c_verify4->add_option("--n", verify4.n, "Number of parts, n >= 4k")->required();
  c_verify4->add_option("--seed", verify4.seed, "Seed for the sampled checks")->capture_default_str();
  c_verify4->add_option("--audit-pairs", verify4.options.audit_pairs, "Pairs checked against the reference rule")->capture_default_str();
  c_verify4->add_option("--shift-samples", verify4.options.shift_samples, "Sampled pairs per shift")->capture_default_str();
  c_verify4->add_option("--bfs-sources", verify4.options.bfs_sources, "Sources in V_0 for the distance check")->capture_default_str();

  ExportDot dot;
  auto* c_dot = app.add_subcommand("export-dot", "Write a graph in Graphviz DOT format");
  c_dot->add_option("--graph", dot.graph, "Input graph")->required();
  c_dot->add_option("--out", dot.out, "Output path; stdout if omitted");
  c_dot->add_option("--name", dot.name, "Graph name")->capture_default_str();

  Convert convert;
  auto* c_convert = app.add_subcommand("convert", "Convert between JSON and edge-list graph files");
  c_convert->add_option("--graph", convert.graph, "Input graph")->required();
  c_convert->add_option("--out", convert.out, "Output path (.json, .dot, otherwise edge list)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsageError;
  }

  Run run;
  run.err = &err;
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    try {
      run.budgets = current_budgets();
    } catch (const Error& e) {
      throw UsageError(std::string("KUNIV_BUDGET: ") + e.what());
    }
    if (c_construct->parsed()) {
      outcome = construct.run(run);
    } else if (c_universal->parsed()) {
      outcome = universal.run(run);
    } else if (c_extendible->parsed()) {
      outcome = extendible.run(run);
    } else if (c_game->parsed()) {
      outcome = game.run(run);
    } else if (c_coloring->parsed()) {
      outcome = coloring.run(run);
    } else if (c_closure->parsed()) {
      outcome = closure_cmd.run(run);
    } else if (c_sample->parsed()) {
      outcome = sample.run(run);
    } else if (c_bound->parsed()) {
      outcome = bound.run(run);
    } else if (c_verify3->parsed()) {
      outcome = verify3.run(run);
    } else if (c_verify4->parsed()) {
      outcome = verify4.run(run);
    } else if (c_convert->parsed()) {
      outcome = convert.run(run);
    } else if (c_dot->parsed()) {
      auto g = load_graph(run, dot.graph);
      if (dot.out.empty()) {
        out << graph_to_dot(g, dot.name);
        return kExitOk;
      }
      auto text = graph_to_dot(g, dot.name);
      write_file(dot.out, text);
      outcome.result = {{"order", g.order()}, {"out", {{"path", dot.out}, {"sha256", sha256_hex(text)}}}};
    }
  } catch (const UsageError& e) {
    err << "kuniv: usage error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const BudgetExceeded& e) {
    err << "kuniv: budget exceeded: " << e.what() << " (requested " << e.requested() << ", limit " << e.limit()
        << "; raise it with KUNIV_BUDGET)\n";
    return kExitDomainError;
  } catch (const TieError& e) {
    err << "kuniv: tie: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "kuniv: error: " << e.what() << "\n";
    return kExitDomainError;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  json report = outcome.result;
  report["run"] = {{"command", join(args)},
                   {"inputs", run.inputs},
                   {"seed", run.seed ? json(*run.seed) : json(nullptr)},
                   {"wall_time_ms", elapsed}};
  const auto text = report.dump(2) + "\n";
  if (report_path.empty()) {
    out << text;
  } else {
    try {
      write_file(report_path, text);
    } catch (const UsageError& e) {
      err << "kuniv: usage error: " << e.what() << "\n";
      return kExitUsageError;
    }
  }
  if (!outcome.ok) {
    err << "kuniv: verification failed\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace kuniv::cli
