// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All checks are exact; the only tolerances are the time
// limits and the log-log slope bound below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "burling/burling_set.hpp"
#include "burling/frames.hpp"
#include "burling/generator.hpp"
#include "burling/graph.hpp"
#include "burling/mis.hpp"
#include "burling/oracles.hpp"
#include "burling/recognition.hpp"
#include "support.hpp"

using namespace burling;

namespace {

constexpr double kTriangleSeconds = 5;
constexpr double kOracleSeconds = 600;
constexpr double kWitnessSeconds = 120;
constexpr double kFramesSeconds = 120;
constexpr double kMisSeconds = 120;
constexpr double kChordalSeconds = 60;
constexpr double kMaxSlope = 5.0;
constexpr std::size_t kLinearFactor = 6;

constexpr std::size_t kRandomTriangleGraphs = 200;
constexpr std::size_t kRandomOracleGraphs = 200;
constexpr std::size_t kGeneratedCorpus = 1000;
constexpr std::size_t kGeneratedMaxSize = 60;
constexpr std::size_t kMisSets = 500;
constexpr std::size_t kMisMaxSize = 18;
constexpr std::size_t kChordalRelations = 500;
constexpr std::size_t kChordalMaxSize = 15;
const std::vector<std::size_t> kTimingSizes{50, 100, 200, 400};
constexpr int kTimingSeeds = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string failure;

  void fail(const std::string& why) {
    if (pass) failure = why;
    pass = false;
  }
};

int failures = 0;

void report(int id, const char* name, const Outcome& o, double elapsed, double limit) {
  bool pass = o.pass && (limit <= 0 || elapsed < limit);
  failures += pass ? 0 : 1;
  std::printf("%s  %d  %-24s %s (%.2fs", pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), elapsed);
  if (limit > 0) std::printf(", limit %.0fs", limit);
  std::printf(")");
  if (!o.pass) std::printf("  first failure: %s", o.failure.c_str());
  if (o.pass && !pass) std::printf("  over time limit");
  std::printf("\n");
  std::fflush(stdout);
}

bool witness_ok(const Graph& g, const BurlingSet& b) {
  return verify_axioms(b).ok() && induced_graph(b) == g;
}

// Shared state: graphs accepted by criteria 1-2 feed criteria 3 and 7.
std::vector<Graph> accepted_small;
std::vector<std::pair<std::size_t, std::size_t>> subproblem_counts;  // (n, count)

std::optional<BurlingSet> counted_recognize(const Graph& g) {
  RecognitionStats stats;
  auto b = recognize(g, &stats);
  subproblem_counts.emplace_back(g.vertex_count(), stats.subproblems);
  return b;
}

std::vector<BurlingSet> generated_corpus() {
  std::vector<BurlingSet> corpus;
  for (std::uint64_t seed = 0; seed < kGeneratedCorpus; ++seed) {
    corpus.push_back(gen_burling({seed, 1 + seed % kGeneratedMaxSize}));
  }
  return corpus;
}

void triangle_rejection() {
  auto start = Clock::now();
  Outcome o;
  std::mt19937_64 rng(1001);
  std::size_t checked = 0;
  if (counted_recognize(testing::make_graph(3, {{0, 1}, {1, 2}, {0, 2}}))) o.fail("K3 accepted");
  ++checked;
  std::size_t made = 0;
  while (made < kRandomTriangleGraphs) {
    std::size_t n = 3 + rng() % 6;
    Graph g = testing::random_graph(rng, n, 0.5);
    if (testing::naive_triangle_free(g)) continue;
    ++made;
    ++checked;
    if (counted_recognize(g)) o.fail("a graph with a triangle on " + std::to_string(n) + " vertices was accepted");
  }
  o.detail = std::to_string(checked) + " graphs with a triangle rejected";
  report(1, "triangle rejection", o, seconds_since(start), kTriangleSeconds);
}

void oracle_equivalence() {
  auto start = Clock::now();
  Outcome o;
  std::size_t compared = 0, yes = 0;
  auto compare = [&](const Graph& g) {
    ++compared;
    auto fast = counted_recognize(g);
    auto slow = exhaustive_recognize(g);
    if (fast.has_value() != slow.has_value()) {
      o.fail("disagreement on a graph with " + std::to_string(g.vertex_count()) + " vertices and " +
             std::to_string(g.edge_count()) + " edges");
    }
    if (fast) {
      ++yes;
      accepted_small.push_back(g);
      if (!witness_ok(g, *fast)) o.fail("invalid witness");
    }
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      Graph g = testing::graph_from_mask(n, mask);
      if (!testing::naive_connected(g) || !testing::naive_triangle_free(g)) continue;
      compare(g);
    }
  }
  std::mt19937_64 rng(2002);
  std::size_t made = 0;
  while (made < kRandomOracleGraphs) {
    Graph g = testing::random_graph(rng, 6, 0.4);
    if (!testing::naive_triangle_free(g)) continue;
    ++made;
    compare(g);
  }
  o.detail = std::to_string(compared) + " graphs compared, " + std::to_string(yes) + " accepted by both";
  report(2, "oracle equivalence", o, seconds_since(start), kOracleSeconds);
}

void witness_soundness(const std::vector<BurlingSet>& corpus) {
  auto start = Clock::now();
  Outcome o;
  std::size_t checked = 0;
  for (const Graph& g : accepted_small) {
    ++checked;
    auto b = recognize(g);
    if (!b || !witness_ok(g, *b)) o.fail("small accepted graph lost its witness");
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    ++checked;
    if (!verify_axioms(corpus[i]).ok()) o.fail("generated set " + std::to_string(i) + " is invalid");
    Graph g = induced_graph(corpus[i]);
    auto b = counted_recognize(g);
    if (!b) {
      o.fail("generated graph " + std::to_string(i) + " rejected");
    } else if (!witness_ok(g, *b)) {
      o.fail("generated graph " + std::to_string(i) + " has an invalid witness");
    }
  }
  o.detail = std::to_string(checked) + " witnesses valid";
  report(3, "witness soundness", o, seconds_since(start), kWitnessSeconds);
}

void frame_round_trip(const std::vector<BurlingSet>& corpus) {
  auto start = Clock::now();
  Outcome o;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const BurlingSet& b = corpus[i];
    for (bool linear : {false, true}) {
      const std::string where = "set " + std::to_string(i) + (linear ? " (linear)" : "");
      FrameFamily f = build_frames(b, linear);
      if (!verify_strict(f).ok()) {
        o.fail(where + ": not strict");
        continue;
      }
      if (!(extract_burling(f) == b)) o.fail(where + ": extraction differs");
      if (!(intersection_graph(f) == induced_graph(b))) o.fail(where + ": intersection graph differs");
    }
  }
  o.detail = std::to_string(corpus.size()) + " sets x 2 modes round-tripped";
  report(4, "frame round trip", o, seconds_since(start), kFramesSeconds);
}

void mis_exactness() {
  auto start = Clock::now();
  Outcome o;
  std::mt19937_64 rng(5005);
  std::uniform_int_distribution<Weight> weight(0, 100);
  for (std::size_t i = 0; i < kMisSets; ++i) {
    BurlingSet b = gen_burling({50000 + i, 1 + i % kMisMaxSize});
    std::vector<Weight> w(b.size());
    for (auto& x : w) x = weight(rng);
    Graph g = induced_graph(b);
    IndependentSet fast = solve_indep(b, w);
    IndependentSet slow = brute_force_mwis(g, w);
    if (fast.weight != slow.weight) o.fail("set " + std::to_string(i) + ": weight differs");
    if (!testing::is_independent(g, fast.members)) o.fail("set " + std::to_string(i) + ": not independent");
  }
  std::vector<Weight> unit(6, 1);
  Weight fig = solve_indep(testing::example_set(), unit).weight;
  if (fig != 4) o.fail("six-element example gives " + std::to_string(fig));
  o.detail = std::to_string(kMisSets) + " sets match brute force, example optimum " + std::to_string(fig);
  report(5, "MIS exactness", o, seconds_since(start), kMisSeconds);
}

void chordal_mwis() {
  auto start = Clock::now();
  Outcome o;
  std::mt19937_64 rng(6006);
  std::uniform_int_distribution<Weight> weight(0, 100);
  for (std::size_t i = 0; i < kChordalRelations; ++i) {
    const std::size_t n = 1 + i % kChordalMaxSize;
    auto relation = testing::random_chordal_relation(rng, n);
    std::vector<Weight> w(n);
    for (auto& x : w) x = weight(rng);
    Graph g = testing::relation_graph(n, relation);
    if (mwis_chordal(n, relation, w).weight != brute_force_mwis(g, w).weight) {
      o.fail("relation " + std::to_string(i) + ": weight differs");
    }
  }
  o.detail = std::to_string(kChordalRelations) + " relations match brute force";
  report(6, "chordal MWIS", o, seconds_since(start), kChordalSeconds);
}

void complexity_accounting() {
  auto start = Clock::now();
  Outcome o;
  std::size_t worst_n = 0, worst_count = 0;
  double worst_ratio = 0;
  for (auto [n, count] : subproblem_counts) {
    if (count > (n + 1) * (n + 1)) o.fail(std::to_string(count) + " subproblems at n = " + std::to_string(n));
    double ratio = static_cast<double>(count) / static_cast<double>((n + 1) * (n + 1));
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst_n = n;
      worst_count = count;
    }
  }

  std::vector<double> xs, ys;
  std::string timings;
  for (std::size_t n : kTimingSizes) {
    std::vector<double> runs;
    for (int s = 0; s < kTimingSeeds; ++s) {
      Graph g = induced_graph(gen_burling({700000 + n * 10 + s, n}));
      auto t0 = Clock::now();
      RecognitionStats stats;
      auto b = recognize(g, &stats);
      runs.push_back(seconds_since(t0));
      subproblem_counts.emplace_back(n, stats.subproblems);
      if (!b) o.fail("timing graph with n = " + std::to_string(n) + " rejected");
      if (stats.subproblems > (n + 1) * (n + 1)) o.fail("subproblem bound exceeded at n = " + std::to_string(n));
    }
    std::sort(runs.begin(), runs.end());
    double median = std::max(runs[runs.size() / 2], 1e-6);
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(median));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s%zu:%.4fs", timings.empty() ? "" : " ", n, median);
    timings += buf;
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(ys.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  double slope = sxy / sxx;
  if (!(slope < kMaxSlope)) o.fail("log-log slope " + std::to_string(slope));

  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu runs within (n+1)^2 (max %zu at n=%zu, %.2f of bound); slope %.2f [%s]",
                subproblem_counts.size(), worst_count, worst_n, worst_ratio, slope, timings.c_str());
  o.detail = buf;
  report(7, "complexity accounting", o, seconds_since(start), 0);
}

void linear_economy(const std::vector<BurlingSet>& corpus) {
  auto start = Clock::now();
  Outcome o;
  double worst = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const BurlingSet& b = corpus[i];
    const std::size_t size = b.size() + b.prec_pairs().size() + b.adj_pairs().size();
    const std::size_t constraints = horizontal_order(b, true).constraints;
    worst = std::max(worst, static_cast<double>(constraints) / static_cast<double>(size));
    if (constraints > kLinearFactor * size) o.fail("set " + std::to_string(i) + ": " + std::to_string(constraints));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max constraints / (|S|+|R|) = %.2f <= %zu over %zu sets", worst, kLinearFactor,
                corpus.size());
  o.detail = buf;
  report(8, "linear-mode economy", o, seconds_since(start), 0);
}

}  // namespace

int main() {
  triangle_rejection();
  oracle_equivalence();
  std::vector<BurlingSet> corpus = generated_corpus();
  witness_soundness(corpus);
  frame_round_trip(corpus);
  mis_exactness();
  chordal_mwis();
  complexity_accounting();
  linear_economy(corpus);
  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
