#include "kuniv/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>

#include "kuniv/cli.hpp"
#include "kuniv/coloring.hpp"
#include "kuniv/extendibility.hpp"
#include "kuniv/families.hpp"
#include "kuniv/game.hpp"
#include "kuniv/oracles.hpp"
#include "kuniv/random.hpp"
#include "kuniv/sparse.hpp"
#include "kuniv/theorem3.hpp"
#include "kuniv/theorem4.hpp"
#include "kuniv/universality.hpp"

namespace kuniv::acceptance {

using json = nlohmann::json;

bool Summary::all_passed() const {
  return std::all_of(items.begin(), items.end(), [](const CriterionResult& r) { return r.passed; });
}

std::string Summary::report_json() const {
  json criteria = json::array();
  for (const auto& r : items) {
    criteria.push_back(
        {{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"payload", r.payload}});
  }
  return json{{"seed", seed}, {"criteria", criteria}, {"passed", all_passed()}}.dump(2) + "\n";
}

void Summary::print_table(std::ostream& os) const {
  for (const auto& r : items) {
    os << (r.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] " << std::left << std::setw(34) << r.name
       << std::right << std::fixed << std::setprecision(2) << std::setw(9) << r.seconds << " s  " << r.detail << "\n";
  }
  const auto passed = std::count_if(items.begin(), items.end(), [](const CriterionResult& r) { return r.passed; });
  os << passed << "/" << items.size() << " criteria passed\n";
}

namespace {

struct Check {
  bool passed = false;
  std::string detail;
  json payload;
};

std::vector<Vertex> random_subset(Rng& rng, std::size_t n, std::size_t size) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  for (std::size_t i = 0; i < size; ++i) std::swap(all[i], all[i + rng.below(n - i)]);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

struct Interval {
  ExactRational lo, hi;
};

const std::vector<Interval>& alpha_intervals() {
  static const std::vector<Interval> intervals{
      {ExactRational(1, 5), ExactRational(1, 4)}, {ExactRational(1, 4), ExactRational(1, 3)},
      {ExactRational(1, 3), ExactRational(1, 2)}, {ExactRational(1, 2), ExactRational(2, 3)},
      {ExactRational(2, 3), ExactRational(4, 5)}};
  return intervals;
}

ExactRational random_alpha(Rng& rng, std::size_t n) {
  const auto& iv = alpha_intervals()[rng.below(alpha_intervals().size())];
  return admissible_alpha(iv.lo, iv.hi, n);
}

std::string yes(bool b) { return b ? "true" : "false"; }

Check theorem3_universal(std::uint64_t) {
  auto g = theorem3_graph(4);
  auto rep = is_k_universal(g, 4);
  return {rep.universal,
          "universal=" + yes(rep.universal) + " over " + std::to_string(g.order()) + " vertices, " +
              std::to_string(rep.iterations) + " iterations",
          {{"universal", rep.universal}, {"iterations", rep.iterations}, {"witness", rep.witness ? json(*rep.witness) : json(nullptr)}}};
}

Check theorem3_pairs(std::uint64_t) {
  auto rep = verify_theorem3_pairs(4);
  // the same check must catch an edge inside a part
  auto g = theorem3_graph(4);
  auto edges = g.edges();
  edges.emplace_back(encode_theorem3(4, {0b0000, 1}), encode_theorem3(4, {0b1111, 1}));
  auto tampered = verify_theorem3_pairs(Graph(g.order(), edges), 4);
  const bool ok = rep.passed() && !tampered.passed();
  return {ok,
          std::to_string(rep.pairs_checked) + " pairs, " + std::to_string(rep.violations.size()) +
              " violations; tampered graph flagged: " + yes(!tampered.passed()),
          {{"pairs_checked", rep.pairs_checked},
           {"differing_case", rep.differing_case},
           {"agreeing_case", rep.agreeing_case},
           {"violations", rep.violations.size()},
           {"tampered_violations", tampered.violations.size()}}};
}

Check theorem3_subgraphs(std::uint64_t seed) {
  auto g = theorem3_graph(4);
  Rng rng(derive_seed(seed, 3));
  std::size_t failing = 0;
  json sizes = json::array();
  for (int i = 0; i < 200; ++i) {
    const auto size = 5 + rng.below(g.order() - 4);
    auto sub = induced_subgraph(g, VertexSet(g.order(), random_subset(rng, g.order(), size)));
    if (!is_k_extendible(sub.graph, 4).extendible) ++failing;
    sizes.push_back(size);
  }
  return {failing == 200, std::to_string(failing) + "/200 sampled induced subgraphs are not 4-extendible",
          {{"not_extendible", failing}, {"sizes", sizes}}};
}

Check decider_vs_game(std::uint64_t seed) {
  static constexpr double kP[] = {0.2, 0.5, 0.8};
  json per_k = json::object();
  bool ok = true;
  std::ostringstream detail;
  for (std::size_t k : {2, 3}) {
    Rng rng(derive_seed(seed, 40 + k));
    const auto reference = reference_extendible(k);
    std::size_t agree = 0, universal = 0;
    json cases = json::array();
    for (int i = 0; i < 50; ++i) {
      const auto n = 1 + rng.below(12);
      const double p = kP[i % 3];
      auto g = sample_gnp(n, p, rng.next());
      const bool u = is_k_universal(g, k).universal;
      const bool game = preceq(reference, g, k);
      agree += u == game ? 1 : 0;
      universal += u ? 1 : 0;
      cases.push_back({n, p, g.edge_count(), u, game});
    }
    ok = ok && agree == 50;
    per_k[std::to_string(k)] = {{"agree", agree}, {"universal", universal}, {"cases", cases}};
    detail << "k=" << k << ": " << agree << "/50 agree (" << universal << " universal)  ";
  }
  return {ok, detail.str(), per_k};
}

Check extendible_universal(std::uint64_t) {
  auto c5 = cycle_graph(5);
  auto p29 = paley_graph(29);
  const bool e2 = is_k_extendible(c5, 2).extendible, u2 = is_k_universal(c5, 2).universal;
  const bool e3 = is_k_extendible(p29, 3).extendible, u3 = is_k_universal(p29, 3).universal;
  return {e2 && u2 && e3 && u3,
          "C5: extendible=" + yes(e2) + " universal=" + yes(u2) + "; Paley(29): extendible=" + yes(e3) +
              " universal=" + yes(u3),
          {{"c5", {{"extendible", e2}, {"universal", u2}}}, {"paley29", {{"extendible", e3}, {"universal", u3}}}}};
}

Check forest_bound(std::uint64_t seed) {
  Rng rng(derive_seed(seed, 6));
  std::size_t good = 0, max_col = 0;
  json cols = json::array();
  for (int i = 0; i < 100; ++i) {
    const auto n = 1 + rng.below(10);
    auto g = random_forest(n, 0.75, rng.next());
    const auto col = coloring_number(g).coloring_number;
    const bool u = is_k_universal(g, 4).universal;
    good += (col <= 2 && !u) ? 1 : 0;
    max_col = std::max(max_col, col);
    cols.push_back(col);
  }
  return {good == 100,
          std::to_string(good) + "/100 forests have col <= 2 and are not 4-universal (max col " +
              std::to_string(max_col) + ")",
          {{"good", good}, {"coloring_numbers", cols}}};
}

Check coloring_optimal(std::uint64_t seed) {
  std::size_t graphs = 0, mismatches = 0, bad_witness = 0;
  json by_n = json::object();
  auto check = [&](const Graph& g) {
    auto c = coloring_number(g);
    ++graphs;
    if (c.coloring_number != oracle::brute_force_coloring_number(g)) ++mismatches;
    if (!is_t_witness(g, c.witness, c.coloring_number)) ++bad_witness;
    return c.coloring_number;
  };
  for (std::size_t n = 0; n <= 6; ++n) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::map<std::size_t, std::size_t> hist;
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
      std::vector<Edge> e;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if ((mask >> i) & 1U) e.push_back(pairs[i]);
      }
      ++hist[check(Graph(n, e))];
    }
    json h = json::object();
    for (auto [c, count] : hist) h[std::to_string(c)] = count;
    by_n[std::to_string(n)] = h;
  }
  Rng rng(derive_seed(seed, 7));
  json random_cols = json::array();
  for (int i = 0; i < 100; ++i) random_cols.push_back(check(sample_gnp(8, 0.2 + 0.15 * (i % 5), rng.next())));
  return {mismatches == 0 && bad_witness == 0,
          std::to_string(graphs) + " graphs, " + std::to_string(mismatches) + " mismatches against brute force, " +
              std::to_string(bad_witness) + " invalid witnesses",
          {{"graphs", graphs},
           {"mismatches", mismatches},
           {"bad_witnesses", bad_witness},
           {"exhaustive_histograms", by_n},
           {"random_n8", random_cols}}};
}

bool subset_of(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Check closure_correct(std::uint64_t seed) {
  static constexpr double kP[] = {0.4, 0.6, 0.8};
  Rng rng(derive_seed(seed, 8));
  std::size_t agree = 0, properties = 0, grew = 0;
  json cases = json::array();
  for (int i = 0; i < 100; ++i) {
    const auto n = 4 + rng.below(5);
    const auto l = 1 + rng.below(4);
    const auto alpha = random_alpha(rng, n);
    auto h = sample_gnp(n, kP[i % 3], rng.next());
    VertexSet a(n, random_subset(rng, n, 1 + rng.below(3)));
    auto fast = closure(h, a, l, alpha).closure;
    const bool same = fast == oracle::rescan_closure(h, a, l, alpha);
    auto bigger = a.members();
    bigger.push_back(static_cast<Vertex>(rng.below(n)));
    VertexSet a2(n, bigger);
    const bool inflationary = subset_of(a, fast);
    const bool idempotent = closure(h, fast, l, alpha).closure == fast;
    const bool monotone = subset_of(fast, closure(h, a2, l, alpha).closure);
    agree += same ? 1 : 0;
    properties += (inflationary && idempotent && monotone) ? 1 : 0;
    grew += fast.size() > a.size() ? 1 : 0;
    cases.push_back({{"n", n}, {"l", l}, {"alpha", alpha.to_string()}, {"seed_set", a.members()}, {"closure", fast.members()}});
  }
  return {agree == 100 && properties == 100,
          std::to_string(agree) + "/100 match the rescan oracle, " + std::to_string(properties) +
              "/100 monotone+inflationary+idempotent (" + std::to_string(grew) + " grew)",
          {{"agree", agree}, {"properties", properties}, {"grew", grew}, {"cases", cases}}};
}

Check admissible_no_ties(std::uint64_t seed) {
  Rng rng(derive_seed(seed, 9));
  std::size_t calls = 0, ties = 0, control_ties = 0;
  std::map<std::string, std::size_t> counts;
  const ExactRational half(1, 2);
  while (calls < 10'000) {
    const auto n = 2 + rng.below(19);
    const auto alpha = random_alpha(rng, n);
    auto h = sample_gnp(n, 0.2 + 0.6 * rng.uniform01(), rng.next());
    for (int j = 0; j < 20 && calls < 10'000; ++j, ++calls) {
      VertexSet g(n, random_subset(rng, n, rng.below(n)));
      const auto c = classify_pair(h, g, alpha);
      ties += c == PairClass::Tie ? 1 : 0;
      ++counts[std::string(to_string(c))];
      control_ties += classify_pair(h, g, half) == PairClass::Tie ? 1 : 0;
    }
  }
  json by_class = json::object();
  for (const auto& [name, count] : counts) by_class[name] = count;
  return {ties == 0,
          std::to_string(calls) + " classifications, " + std::to_string(ties) + " ties (" +
              std::to_string(control_ties) + " at the inadmissible alpha 1/2)",
          {{"calls", calls}, {"ties", ties}, {"by_class", by_class}, {"control_ties_alpha_1_2", control_ties}}};
}

Check safe_coloring(std::uint64_t seed) {
  const auto alpha = admissible_alpha(ExactRational(1, 4), ExactRational(1, 3), 14);
  Rng rng(derive_seed(seed, 10));
  std::size_t safe = 0, violations = 0, max_col = 0;
  json cases = json::array();
  for (int i = 0; i < 100; ++i) {
    const auto n = 6 + rng.below(9);
    auto g = sample_sparse(n, alpha, rng.next());
    const bool s = is_safe(g, VertexSet(n, {}), alpha);
    const auto col = coloring_number(g).coloring_number;
    if (s) {
      ++safe;
      max_col = std::max(max_col, col);
      violations += col > 7 ? 1 : 0;
    }
    cases.push_back({n, g.edge_count(), s, col});
  }
  return {safe > 0 && violations == 0,
          "alpha=" + alpha.to_string() + ": " + std::to_string(safe) + "/100 samples safe, max col " +
              std::to_string(max_col) + " <= 7, " + std::to_string(violations) + " violations",
          {{"alpha", alpha.to_string()}, {"safe", safe}, {"violations", violations}, {"max_col", max_col}, {"cases", cases}}};
}

Check theorem4_structure(std::uint64_t seed) {
  auto rep = verify_theorem4(6, 24, derive_seed(seed, 11));
  json distances = json::array();
  std::ostringstream d;
  for (const auto& x : rep.bfs_distances) {
    distances.push_back(x.to_string());
    d << " " << x.to_string();
  }
  return {rep.passed(),
          std::to_string(rep.vertices) + " vertices; shift violations " + std::to_string(rep.shift_violations) +
              ", audit mismatches " + std::to_string(rep.audit_mismatches) + "/" + std::to_string(rep.audit_pairs) +
              ", distances to V_" + std::to_string(rep.target_part) + ":" + d.str() + " (need >= " +
              std::to_string(rep.required_distance) + ")",
          {{"vertices", rep.vertices},
           {"shift_pairs_exhaustive", rep.shift_pairs_exhaustive},
           {"shift_pairs_sampled", rep.shift_pairs_sampled},
           {"shift_violations", rep.shift_violations},
           {"audit_pairs", rep.audit_pairs},
           {"audit_mismatches", rep.audit_mismatches},
           {"symmetry_violations", rep.symmetry_violations},
           {"required_distance", rep.required_distance},
           {"bfs_sources", rep.bfs_sources},
           {"bfs_distances", distances}}};
}

struct Definition {
  int id;
  const char* name;
  double limit_seconds;
  Check (*run)(std::uint64_t);
};

const std::vector<Definition>& definitions() {
  static const std::vector<Definition> defs{
      {1, "theorem3 graph is 4-universal", 120, theorem3_universal},
      {2, "theorem3 pair lemma", 30, theorem3_pairs},
      {3, "theorem3 subgraphs not extendible", 30, theorem3_subgraphs},
      {4, "decider agrees with pebble game", 0, decider_vs_game},
      {5, "extendible implies universal", 0, extendible_universal},
      {6, "forests: small col, not universal", 0, forest_bound},
      {7, "coloring number is optimal", 0, coloring_optimal},
      {8, "closure matches rescan oracle", 0, closure_correct},
      {9, "admissible alpha gives no ties", 0, admissible_no_ties},
      {10, "safe implies col <= 7", 0, safe_coloring},
      {11, "cyclic construction structure", 600, theorem4_structure},
  };
  return defs;
}

CriterionResult run_one(const Definition& def, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    c = def.run(seed);
  } catch (const std::exception& e) {
    c = {false, std::string("exception: ") + e.what(), json{{"exception", e.what()}}};
  }
  CriterionResult r{def.id, def.name, c.passed, c.detail, c.payload, 0.0};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (def.limit_seconds > 0 && r.seconds > def.limit_seconds) {
    r.passed = false;
    r.detail += " [over the " + std::to_string(static_cast<int>(def.limit_seconds)) + " s limit]";
  }
  return r;
}

// CLI invocations whose result payloads (everything but the wall time)
// must repeat exactly.
std::vector<std::string> cli_payloads(std::uint64_t seed, const std::filesystem::path& dir) {
  const auto s = std::to_string(seed);
  const auto p = [&](const char* name) { return (dir / name).string(); };
  const std::vector<std::vector<std::string>> runs{
      {"construct", "--family", "theorem3", "--k", "4", "--out", p("t3.json")},
      {"decide", "universal", "--graph", p("t3.json"), "--k", "4", "--ranks", p("ranks.json")},
      {"sample", "--model", "gnp", "--n", "12", "--p", "0.5", "--seed", s, "--out", p("g.json")},
      {"decide", "universal", "--graph", p("g.json"), "--k", "3", "--certificate"},
      {"coloring", "--graph", p("g.json"), "--witness"},
      {"construct", "--family", "cycle", "--n", "5", "--out", p("c5.json")},
      {"game", "--from", p("c5.json"), "--to", p("g.json"), "--k", "2", "--rounds", "eternal"},
      {"experiment", "closure-bound", "--n", "12", "--alpha", "1/3", "--l", "3", "--trials", "10", "--seed", s},
      {"verify", "theorem4", "--k", "4", "--n", "16", "--seed", s},
  };
  std::vector<std::string> payloads;
  for (const auto& args : runs) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    std::string text = "exit " + std::to_string(code) + "\n";
    if (code == 0) {
      auto j = json::parse(out.str());
      j["run"].erase("wall_time_ms");
      text += j.dump();
    } else {
      text += err.str();
    }
    payloads.push_back(std::move(text));
  }
  return payloads;
}

Check determinism(std::uint64_t seed, const std::vector<CriterionResult>& first) {
  std::size_t same = 0, compared = 0;
  json differing = json::array();
  for (const auto& def : definitions()) {
    auto again = run_one(def, seed);
    const auto& before = first.at(static_cast<std::size_t>(def.id - 1));
    ++compared;
    if (again.payload.dump() == before.payload.dump() && again.detail == before.detail) {
      ++same;
    } else {
      differing.push_back(def.id);
    }
  }
  const auto dir = std::filesystem::temp_directory_path() / ("kuniv-acceptance-" + std::to_string(seed));
  std::filesystem::create_directories(dir);
  auto a = cli_payloads(seed, dir);
  auto b = cli_payloads(seed, dir);
  std::size_t cli_same = 0;
  for (std::size_t i = 0; i < a.size(); ++i) cli_same += a[i] == b[i] ? 1 : 0;
  std::filesystem::remove_all(dir);
  return {same == compared && cli_same == a.size(),
          std::to_string(same) + "/" + std::to_string(compared) + " criterion reports and " +
              std::to_string(cli_same) + "/" + std::to_string(a.size()) + " CLI reports byte-identical on rerun",
          {{"criteria_identical", same}, {"differing", differing}, {"cli_identical", cli_same}}};
}

}  // namespace

Summary run_acceptance_suite(const Options& options) {
  Summary summary;
  summary.seed = options.seed;
  for (const auto& def : definitions()) {
    summary.items.push_back(run_one(def, options.seed));
    if (options.on_result) options.on_result(summary.items.back());
  }
  const auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    c = determinism(options.seed, summary.items);
  } catch (const std::exception& e) {
    c = {false, std::string("exception: ") + e.what(), json{{"exception", e.what()}}};
  }
  CriterionResult r{12, "reruns are byte-identical", c.passed, c.detail, c.payload, 0.0};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  summary.items.push_back(r);
  if (options.on_result) options.on_result(summary.items.back());
  return summary;
}

}  // namespace kuniv::acceptance
