#include <doctest.h>

#include <random>

#include "burling/errors.hpp"
#include "burling/generator.hpp"
#include "burling/oracles.hpp"
#include "burling/recognition.hpp"
#include "support.hpp"

using namespace burling;
using testing::make_graph;

namespace {

// Structure restated over vertex names, for comparison with a literal set.
BurlingSet by_vertex(const BurlingStructure& s) {
  std::vector<std::string> names;
  for (Vertex v : s.elements) names.push_back(std::to_string(v));
  return BurlingSet(names, s.structure.prec_pairs(), s.structure.adj_pairs());
}

void check_structure(const Graph& g, const BurlingStructure& s, std::optional<Vertex> root) {
  CHECK(testing::naive_axioms_ok(s.structure));
  CHECK(s.elements == neighborhood(g, s.around, true));
  CHECK(induced_graph(s.structure) == g.induced(s.elements));
  for (Vertex v : neighborhood(g, s.around, false)) {
    auto at = std::lower_bound(s.elements.begin(), s.elements.end(), v) - s.elements.begin();
    auto x = static_cast<Element>(at);
    if (root && v == *root) {
      CHECK(is_root(s.structure, x));
    } else {
      CHECK(is_probe(s.structure, x));
    }
  }
}

void check_witness(const Graph& g, const BurlingSet& b) {
  CHECK(testing::naive_axioms_ok(b));
  CHECK(induced_graph(b) == g);
  for (Element x = 0; x < b.size(); ++x) CHECK(b.name(x) == std::to_string(x));
}

}  // namespace

TEST_CASE("unrooted subproblems") {
  Graph single(1);
  Recognizer r1(single);
  auto s = r1.solve_unrooted(std::nullopt, {0});
  REQUIRE(s);
  CHECK(by_vertex(*s) == testing::named_set({"0"}, {}, {}));

  Graph claw = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  Recognizer r2(claw, {true});
  auto star = r2.solve_unrooted(std::nullopt, {0, 1, 2, 3});
  REQUIRE(star);
  check_structure(claw, *star, std::nullopt);
  CHECK(classify_elements(star->structure).roots.size() == 1);

  CHECK_THROWS_AS(Recognizer(make_graph(3, {{0, 1}, {1, 2}, {0, 2}})), InputError);
}

TEST_CASE("rooted subproblems") {
  Graph cherry = make_graph(3, {{0, 1}, {0, 2}});
  Recognizer r1(cherry);
  auto leaf = r1.solve_rooted(std::nullopt, 0, {1});
  REQUIRE(leaf);
  CHECK(by_vertex(*leaf) == testing::named_set({"0", "1"}, {}, {{"1", "0"}}));

  // {3} is classifiable as inner and as outer; inner is preferred.
  Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  Recognizer r2(p4, {true});
  auto tail = r2.solve_rooted(std::nullopt, 1, {2, 3});
  REQUIRE(tail);
  check_structure(p4, *tail, 1);
  CHECK(by_vertex(*tail) == testing::named_set({"1", "2", "3"}, {{"3", "1"}}, {{"2", "1"}, {"2", "3"}}));

  Graph hook = make_graph(3, {{0, 1}, {1, 2}});
  Recognizer r3(hook, {true});
  auto inner = r3.solve_rooted(std::nullopt, 0, {1, 2});
  REQUIRE(inner);
  CHECK(by_vertex(*inner) == testing::named_set({"0", "1", "2"}, {{"2", "0"}}, {{"1", "0"}, {"1", "2"}}));

  CHECK_THROWS_AS(r3.solve_rooted(std::nullopt, 0, {2}), InputError);     // not a component
  CHECK_THROWS_AS(r3.solve_rooted(std::nullopt, 2, {0}), InputError);     // not a full component
  CHECK_THROWS_AS(r3.solve_rooted(Vertex{1}, 0, {2}), InputError);        // root inside X
  CHECK_THROWS_AS(r3.solve_unrooted(std::nullopt, {0, 2}), InputError);   // disconnected
}

TEST_CASE("recognize small graphs") {
  CHECK_FALSE(recognize(make_graph(3, {{0, 1}, {1, 2}, {0, 2}})));

  Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  auto b = recognize(p4);
  REQUIRE(b);
  check_witness(p4, *b);
  CHECK(verify_axioms(BurlingSet::numbered(4, {}, {{0, 1}, {2, 1}, {3, 2}})).ok());

  auto empty = recognize(Graph(5));
  REQUIRE(empty);
  CHECK(*empty == BurlingSet::numbered(5, {}, {}));

  Graph fig = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {3, 5}});
  auto fb = recognize(fig);
  REQUIRE(fb);
  check_witness(fig, *fb);

  CHECK_THROWS_AS(recognize(Graph(0)), InputError);
}

TEST_CASE("a triangle-free subdivision of K4 is rejected, but each vertex deletion is accepted") {
  // K4 on {0,1,2,3} with the edges of triangle 012 subdivided by 4, 5 and 6.
  Graph g = make_graph(7, {{0, 3}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}, {0, 6}, {1, 6}});
  CHECK(is_triangle_free(g));
  CHECK_FALSE(recognize(g));
  for (std::uint32_t drop = 0; drop < 7; ++drop) {
    VertexSet keep;
    for (std::uint32_t v = 0; v < 7; ++v)
      if (v != drop) keep.push_back(v);
    Graph h = g.induced(keep);
    auto b = recognize(h);
    REQUIRE(b);
    check_witness(h, *b);
  }
}

TEST_CASE("recognize agrees with exhaustive search on every graph up to four vertices") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::uint64_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask) {
      Graph g = testing::graph_from_mask(n, mask);
      auto fast = recognize(g);
      auto slow = exhaustive_recognize(g);
      CHECK(fast.has_value() == slow.has_value());
      if (fast) check_witness(g, *fast);
    }
  }
}

TEST_CASE("every memo entry satisfies its postconditions") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 2 + round % 9;
    Graph g = testing::random_graph(rng, n, 0.3);
    if (!is_triangle_free(g)) continue;
    Recognizer checked(g, {true});
    auto b = checked.recognize();
    if (b) check_witness(g, *b);
  }
}

TEST_CASE("generated Burling graphs are recognised, with hereditary acceptance") {
  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    BurlingSet truth = gen_burling({seed, 4 + seed % 30});
    Graph g = induced_graph(truth);
    RecognitionStats stats;
    auto b = recognize(g, &stats);
    REQUIRE(b);
    check_witness(g, *b);
    const std::size_t n = g.vertex_count();
    CHECK(stats.subproblems <= (n + 1) * (n + 1));

    for (int k = 0; k < 20; ++k) {
      VertexSet keep;
      for (Vertex v = 0; v < n; ++v) {
        if (rng() % 3) keep.push_back(v);
      }
      if (keep.empty()) continue;
      Graph sub = g.induced(keep);
      auto sb = recognize(sub);
      REQUIRE(sb);
      check_witness(sub, *sb);
    }
  }
}

TEST_CASE("subproblem keys pack their fields") {
  SubproblemKey a{SubproblemKey::Kind::kRooted, Vertex{3}, Vertex{4}, 5};
  SubproblemKey b{SubproblemKey::Kind::kRooted, Vertex{3}, Vertex{5}, 4};
  SubproblemKey c{SubproblemKey::Kind::kUnrooted, std::nullopt, std::nullopt, 5};
  SubproblemKey d{SubproblemKey::Kind::kUnrooted, Vertex{0}, std::nullopt, 5};
  CHECK(a.packed() != b.packed());
  CHECK(c.packed() != d.packed());
  CHECK(a.packed() == SubproblemKey(a).packed());
}
