#include "spx/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spx/construct.hpp"
#include "spx/enumerate.hpp"
#include "spx/format.hpp"
#include "spx/invariants.hpp"
#include "spx/random_graphs.hpp"
#include "spx/structure.hpp"

namespace spx {

namespace {

// Collects failures; a criterion passes when nothing was recorded.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary(const std::string& when_ok) const {
    if (failures_.empty()) return when_ok;
    std::ostringstream os;
    const std::size_t shown = std::min<std::size_t>(failures_.size(), 6);
    for (std::size_t i = 0; i < shown; ++i) os << (i ? "; " : "") << failures_[i];
    if (failures_.size() > shown) os << "; ... " << failures_.size() - shown << " more";
    return os.str();
  }

 private:
  std::vector<std::string> failures_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string g6(const Graph& g) { return encode_graph6(g); }

int circumference(const Graph& g) {
  int longest = 0;
  for (const Cycle& c : all_cycles(g, g.order())) longest = std::max<int>(longest, c.size());
  return longest;
}

int degree_count(const Graph& g, int d) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.degree(v) == d;
  return count;
}

ExtremalResult search(int n, int g, Scope scope, int width) {
  return extremal_search({n, g, SearchMode::max_and_enumerate, 0, scope, true, width});
}

std::string max_string(const ExtremalResult& r) {
  return r.max_edges ? std::to_string(*r.max_edges) : std::string("none");
}

std::set<CanonicalForm> canonical_set(const std::vector<Graph>& graphs) {
  std::set<CanonicalForm> out;
  for (const Graph& g : graphs) out.insert(canonical_form(g));
  return out;
}

std::string list_forms(const std::set<CanonicalForm>& forms) {
  std::string out;
  for (const CanonicalForm& c : forms) out += (out.empty() ? "" : ",") + c.graph6;
  return out;
}

void check_runtime(Checks& checks, Clock::time_point start, double limit, const std::string& what) {
  const double s = seconds_since(start);
  char buf[96];
  std::snprintf(buf, sizeof buf, " took %.2f s, target %.0f s", s, limit);
  checks.expect(s < limit, what + buf);
}

// 1. Theta graphs meet the even-girth bound exactly.
std::string even_girth_tightness(Checks& checks) {
  const auto start = Clock::now();
  for (int k = 2; k <= 5; ++k) {
    for (int s = 2; s <= 6; ++s) {
      const Graph t = theta(k, s);
      const std::string id = "theta(" + std::to_string(k) + "," + std::to_string(s) + ")";
      checks.expect(t.order() == s * (k - 1) + 2, id + " vertex count");
      checks.expect(t.edge_count() == k * s, id + " edge count");
      checks.expect(girth(t) == Girth::finite(2 * k), id + " girth " + girth(t).to_string());
      checks.expect(is_k4_minor_free(t), id + " has a K4 minor");
      checks.expect(bound_even_girth(s * (k - 1) + 2, k) == k * s, id + " bound not tight");
    }
  }
  check_runtime(checks, start, 1, "theta sweep");
  return "20 theta graphs, k in 2..5, s in 2..6";
}

// 2. Unique extremal graphs at n = s(k-1) + 2.
std::string even_girth_uniqueness(Checks& checks) {
  struct Case {
    int n, g, expected;
    Graph witness;
  };
  const std::vector<Case> cases{{8, 6, 9, theta(3, 3)}, {6, 4, 8, theta(2, 4)}};
  std::ostringstream detail;
  for (const Case& c : cases) {
    for (Scope scope : {Scope::two_connected, Scope::any_graph}) {
      const auto start = Clock::now();
      const ExtremalResult r = search(c.n, c.g, scope, 1);
      const std::string id = "(n=" + std::to_string(c.n) + ",g=" + std::to_string(c.g) + "," +
                             to_string(scope) + ")";
      checks.expect(r.max_edges == c.expected, id + " max " + max_string(r));
      checks.expect(r.extremal.size() == 1, id + " classes " + std::to_string(r.extremal.size()));
      checks.expect(!r.extremal.empty() && r.extremal.front() == canonical_form(c.witness),
                    id + " class differs from the theta graph");
      check_runtime(checks, start, 30, id);
      detail << id << " max=" << max_string(r) << " classes=" << r.extremal.size() << ' ';
    }
  }
  return detail.str();
}

// 3. Girth-5 base cases n = 5, 6, 7.
std::string girth5_base_cases(Checks& checks) {
  const auto start = Clock::now();
  std::ostringstream detail;
  const std::vector<std::vector<Edge>> c6_edges{{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}};
  const Graph c6(6, c6_edges.front());
  for (int n = 5; n <= 7; ++n) {
    for (Scope scope : {Scope::two_connected, Scope::any_graph}) {
      const ExtremalResult r = search(n, 5, scope, 1);
      const std::string id = "(n=" + std::to_string(n) + "," + to_string(scope) + ")";
      checks.expect(r.max_edges == bound_girth5(n), id + " max " + max_string(r));
      detail << id << " max=" << max_string(r) << " classes=" << r.extremal.size() << ' ';
      if (n == 6 && scope == Scope::two_connected) {
        checks.expect(r.extremal.size() == 1 && r.extremal.front() == canonical_form(c6),
                      "C6 is not the unique 2-connected extremal class at n=6");
      }
    }
  }
  check_runtime(checks, start, 5, "base cases");
  return detail.str();
}

// 4. G_s meets ceil(3n/2 - 3) for odd n.
std::string girth5_odd_tightness(Checks& checks) {
  const auto start = Clock::now();
  for (int s = 2; s <= 5; ++s) {
    const Graph g = g5_family(s);
    const std::string id = "G_" + std::to_string(s);
    checks.expect(g.order() == 2 * s + 1, id + " vertex count");
    checks.expect(g.edge_count() == 3 * s - 1 && g.edge_count() == bound_girth5(2 * s + 1),
                  id + " edge count");
    checks.expect(girth(g) == Girth::finite(5), id + " girth " + girth(g).to_string());
    checks.expect(is_k4_minor_free(g), id + " has a K4 minor");
  }
  check_runtime(checks, start, 1, "G_s sweep");
  return "G_2..G_5";
}

// 5. Subdividing a 3-path edge of G_{s-1} meets the bound for even n.
std::string girth5_even_tightness(Checks& checks) {
  const auto start = Clock::now();
  std::string girths;
  for (int s = 3; s <= 5; ++s) {
    const Graph g = subdivide(g5_family(s - 1), kG5ThreePathEdge);
    const std::string id = "subdivided G_" + std::to_string(s - 1);
    checks.expect(g.order() == 2 * s, id + " vertex count");
    checks.expect(g.edge_count() == 3 * s - 3 && g.edge_count() == bound_girth5(2 * s),
                  id + " edge count");
    // Subdividing G_2 = C5 gives C6, so girth 6 is expected at s = 3.
    checks.expect(girth(g).at_least(5), id + " girth " + girth(g).to_string());
    checks.expect(is_k4_minor_free(g), id + " has a K4 minor");
    girths += (girths.empty() ? "" : ",") + girth(g).to_string();
  }
  check_runtime(checks, start, 1, "subdivision sweep");
  return "s = 3..5, girths " + girths;
}

// 6. The n = 10 classification against the frozen catalog.
std::string girth5_classification(Checks& checks, const VerificationOptions& options) {
  auto start = Clock::now();
  const ExtremalResult single = search(10, 5, Scope::two_connected, 1);
  check_runtime(checks, start, 300, "single-threaded search");
  start = Clock::now();
  const ExtremalResult four = search(10, 5, Scope::two_connected, 4);
  check_runtime(checks, start, 60, "search with 4 threads");
  checks.expect(single.extremal == four.extremal && single.max_edges == four.max_edges,
                "thread count changed the result");

  checks.expect(single.max_edges == 12, "max " + max_string(single) + " (expected 12)");
  checks.expect(single.extremal.size() == 8,
                std::to_string(single.extremal.size()) + " classes (expected 8)");

  const std::set<CanonicalForm> found(single.extremal.begin(), single.extremal.end());
  std::set<CanonicalForm> file_set;
  try {
    file_set = canonical_set(read_graph6_file(options.catalog_path));
  } catch (const std::exception& e) {
    checks.expect(false, std::string("catalog file unreadable: ") + e.what());
  }
  const std::set<CanonicalForm> frozen = canonical_set(h_catalog());
  checks.expect(file_set == frozen, "catalog file differs from the built-in catalog");

  std::set<CanonicalForm> extra, missing;
  std::set_difference(found.begin(), found.end(), frozen.begin(), frozen.end(),
                      std::inserter(extra, extra.end()));
  std::set_difference(frozen.begin(), frozen.end(), found.begin(), found.end(),
                      std::inserter(missing, missing.end()));
  checks.expect(extra.empty(), "found but not catalogued: " + list_forms(extra));
  checks.expect(missing.empty(), "catalogued but not found: " + list_forms(missing));

  int two_degree4 = 0, circ9 = 0;
  for (const CanonicalForm& c : single.extremal) {
    const Graph g = decode_graph6(c.graph6);
    two_degree4 += degree_count(g, 4) == 2;
    circ9 += circumference(g) == 9;
  }
  checks.expect(two_degree4 == 1,
                std::to_string(two_degree4) + " classes with two degree-4 vertices (expected 1)");
  checks.expect(circ9 == 1,
                std::to_string(circ9) + " classes with longest cycle 9 (expected 1)");

  return "max=" + max_string(single) + " classes=" + std::to_string(single.extremal.size()) +
         " nodes=" + std::to_string(single.nodes_explored);
}

// 7. Bridges of every cycle have at most two attachments and never cross.
std::string bridge_suite(Checks& checks, const VerificationOptions& options) {
  const auto start = Clock::now();
  std::vector<Graph> corpus;
  for (int k = 2; k <= 4; ++k) {
    for (int s = 2; s <= 4; ++s) corpus.push_back(theta(k, s));
  }
  for (const Graph& h : h_catalog()) corpus.push_back(h);
  Rng rng(options.seed + 7);
  std::uniform_int_distribution<int> order(3, 10);
  std::uniform_real_distribution<double> keep(0.5, 1.0);
  for (int i = 0; i < 200; ++i) corpus.push_back(random_series_parallel(order(rng), keep(rng), rng));

  long cycles = 0, bridge_count = 0;
  int max_legs = 0;
  for (const Graph& g : corpus) {
    const Prop1Report r = check_proposition1(g);
    cycles += r.cycles;
    bridge_count += r.bridges;
    max_legs = std::max(max_legs, r.max_leg_edges);
    checks.expect(r.ok(), g6(g) + ": " + std::to_string(r.violations.size()) + " violations");
  }
  check_runtime(checks, start, 60, "bridge suite");
  return std::to_string(corpus.size()) + " graphs, " + std::to_string(cycles) + " cycles, " +
         std::to_string(bridge_count) + " bridges, max leg edges per bridge " +
         std::to_string(max_legs);
}

// 8. Cutvertex elimination preserves every parameter.
std::string cutvertex_suite(Checks& checks, const VerificationOptions& options) {
  const auto start = Clock::now();
  Rng rng(options.seed + 8);
  int steps = 0;
  for (int i = 0; i < 100; ++i) {
    const Graph g = random_girth5_with_cutvertex(12, rng);
    const std::string id = g6(g);
    checks.expect(!cutvertices(g).empty() && is_connected(g), id + " generator produced a bad input");
    try {
      const Graph h = make_two_connected(g);
      steps += static_cast<int>(blocks(g).size()) - 1;
      checks.expect(h.order() == g.order() && h.edge_count() == g.edge_count(), id + " size changed");
      checks.expect(girth(h).at_least(5), id + " girth dropped to " + girth(h).to_string());
      checks.expect(is_k4_minor_free(h), id + " gained a K4 minor");
      checks.expect(cutvertices(h).empty(), id + " still has a cutvertex");
    } catch (const std::exception& e) {
      checks.expect(false, id + " threw: " + e.what());
    }
  }
  check_runtime(checks, start, 30, "cutvertex suite");
  return "100 graphs, " + std::to_string(steps) + " reduction steps";
}

// 9. Search agrees with filtering every labeled graph.
std::string oracle_equivalence(Checks& checks) {
  const auto start = Clock::now();
  int cases = 0;
  for (int n = 3; n <= kMaxBruteForceOrder; ++n) {
    for (int g = 4; g <= 6; ++g) {
      for (Scope scope : {Scope::two_connected, Scope::any_graph}) {
        const ExtremalResult fast = search(n, g, scope, 1);
        const ExtremalResult naive = brute_force_search(n, g, scope);
        const std::string id = "(n=" + std::to_string(n) + ",g=" + std::to_string(g) + "," +
                               to_string(scope) + ")";
        checks.expect(fast.max_edges == naive.max_edges,
                      id + " max " + max_string(fast) + " vs " + max_string(naive));
        checks.expect(fast.extremal == naive.extremal, id + " extremal lists differ");
        ++cases;
      }
    }
  }
  check_runtime(checks, start, 120, "oracle sweep");
  return std::to_string(cases) + " (n, g, scope) cases";
}

// 10. Reduction-based recognition agrees with the certificate search.
std::string recognition_cross_check(Checks& checks, const VerificationOptions& options) {
  const auto start = Clock::now();
  std::vector<Graph> corpus;
  Rng rng(options.seed + 10);
  std::uniform_int_distribution<int> order(1, 8);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int i = 0; i < 250; ++i) corpus.push_back(random_graph(order(rng), density(rng), rng));
  for (int i = 0; i < 250; ++i) corpus.push_back(random_series_parallel(order(rng), density(rng), rng));

  for (int k = 2; k <= 5; ++k) {
    for (int s = 2; s <= 6; ++s) corpus.push_back(theta(k, s));
  }
  for (int s = 2; s <= 5; ++s) corpus.push_back(g5_family(s));
  for (int s = 3; s <= 5; ++s) corpus.push_back(subdivide(g5_family(s - 1), kG5ThreePathEdge));
  for (const Graph& h : h_catalog()) corpus.push_back(h);
  for (auto [n, g] : {std::pair{8, 6}, {6, 4}, {5, 5}, {6, 5}, {7, 5}, {10, 5}}) {
    for (const CanonicalForm& c : search(n, g, Scope::any_graph, 1).extremal) {
      corpus.push_back(decode_graph6(c.graph6));
    }
  }

  int with_minor = 0;
  for (const Graph& g : corpus) {
    const bool free = is_k4_minor_free(g);
    const std::optional<K4Model> model = find_k4_minor(g);
    checks.expect(free != model.has_value(), g6(g) + " recognition and certificate disagree");
    if (model) {
      ++with_minor;
      checks.expect(is_k4_model(g, *model), g6(g) + " invalid certificate");
    }
  }
  check_runtime(checks, start, 30, "recognition sweep");
  return std::to_string(corpus.size()) + " graphs, " + std::to_string(with_minor) + " with a K4 minor";
}

struct Criterion {
  const char* group;
  const char* title;
  std::function<std::string(Checks&, const VerificationOptions&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> kCriteria{
      {"even", "even-girth bound is attained by theta graphs",
       [](Checks& c, const VerificationOptions&) { return even_girth_tightness(c); }},
      {"even", "even-girth extremal graphs are unique",
       [](Checks& c, const VerificationOptions&) { return even_girth_uniqueness(c); }},
      {"girth5", "girth-5 base cases n = 5, 6, 7",
       [](Checks& c, const VerificationOptions&) { return girth5_base_cases(c); }},
      {"girth5", "girth-5 bound is tight for odd n",
       [](Checks& c, const VerificationOptions&) { return girth5_odd_tightness(c); }},
      {"girth5", "girth-5 bound is tight for even n by subdivision",
       [](Checks& c, const VerificationOptions&) { return girth5_even_tightness(c); }},
      {"girth5", "n = 10 classification matches the catalog", girth5_classification},
      {"bridges", "bridges have at most two attachments and do not cross", bridge_suite},
      {"cutvertex", "cutvertex elimination preserves parameters", cutvertex_suite},
      {"oracle", "search equals brute force for n <= 7",
       [](Checks& c, const VerificationOptions&) { return oracle_equivalence(c); }},
      {"recognition", "reduction agrees with K4 certificate search", recognition_cross_check},
  };
  return kCriteria;
}

}  // namespace

std::string criterion_group(int id) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("no criterion " + std::to_string(id));
  return criteria()[id - 1].group;
}

std::vector<int> selected_criteria(const std::optional<std::string>& only) {
  std::vector<int> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!only || *only == criterion_group(id) || *only == std::to_string(id)) out.push_back(id);
  }
  if (out.empty()) throw std::invalid_argument("unknown criterion or group '" + *only + "'");
  return out;
}

CriterionResult run_criterion(int id, const VerificationOptions& options) {
  const Criterion& c = criteria().at(id - 1);
  CriterionResult result{id, c.group, c.title, false, {}, 0.0};
  const auto start = Clock::now();
  Checks checks;
  std::string detail;
  try {
    detail = c.run(checks, options);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  result.seconds = seconds_since(start);
  while (!detail.empty() && detail.back() == ' ') detail.pop_back();
  result.passed = checks.ok();
  result.detail = checks.summary(detail);
  return result;
}

std::vector<CriterionResult> run_verification(const VerificationOptions& options) {
  std::vector<CriterionResult> out;
  for (int id : selected_criteria(options.only)) out.push_back(run_criterion(id, options));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.2f s)", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.group +
         ": " + r.title + " " + buf + " | " + r.detail;
}

}  // namespace spx
