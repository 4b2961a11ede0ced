// Fixtures and slow, obviously-correct reference checks shared by the tests.
#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "burling/burling_set.hpp"
#include "burling/frames.hpp"
#include "burling/graph.hpp"
#include "burling/mis.hpp"

namespace testing {

using burling::BurlingSet;
using burling::Element;
using burling::ElementPair;
using burling::Graph;
using burling::Vertex;
using burling::Weight;

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  std::vector<burling::Edge> list(edges.begin(), edges.end());
  return Graph(n, list);
}

using NamePair = std::pair<std::string, std::string>;

inline BurlingSet named_set(std::vector<std::string> names, std::vector<NamePair> prec, std::vector<NamePair> adj) {
  auto index = [&](const std::string& s) {
    return static_cast<Element>(std::find(names.begin(), names.end(), s) - names.begin());
  };
  std::vector<ElementPair> p, a;
  for (const auto& [x, y] : prec) p.emplace_back(index(x), index(y));
  for (const auto& [x, y] : adj) a.emplace_back(index(x), index(y));
  return BurlingSet(std::move(names), std::move(p), std::move(a));
}

// The six-element example: a is the root, e sits inside c.
inline BurlingSet example_set() {
  return named_set({"a", "b", "c", "d", "e", "f"}, {{"e", "c"}},
                   {{"b", "a"}, {"c", "a"}, {"d", "a"}, {"f", "d"}});
}

inline burling::FrameFamily example_frames() {
  return {{"a", 0, 12, 0, 28}, {"b", 10, 20, 2, 6},   {"c", 10, 20, 8, 16},
          {"d", 10, 20, 18, 26}, {"e", 15, 18, 10, 14}, {"f", 18, 24, 20, 24}};
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<burling::Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<burling::Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline bool naive_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v = 0; v < n; ++v) {
      if (g.adjacent(u, v) && !seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

inline bool naive_triangle_free(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) return false;
  return true;
}

// Transitive closure by repeated squaring of a boolean matrix.
inline std::vector<std::vector<bool>> closure(std::size_t n, const std::vector<std::vector<bool>>& rel) {
  auto c = rel;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (c[i][k] && c[k][j]) c[i][j] = true;
  return c;
}

// Axioms evaluated literally over all triples.
inline bool naive_axioms_ok(const BurlingSet& b) {
  const std::size_t n = b.size();
  if (n == 0) return false;
  std::vector<std::vector<bool>> p(n, std::vector<bool>(n)), a = p, r = p;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      p[x][y] = b.prec(x, y);
      a[x][y] = b.adj(x, y);
      r[x][y] = p[x][y] || a[x][y];
    }
  }
  auto ac = closure(n, a);
  auto rc = closure(n, r);
  for (Element x = 0; x < n; ++x) {
    if (p[x][x] || ac[x][x] || rc[x][x]) return false;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (p[x][y] && p[y][z] && !p[x][z]) return false;
        if (y == z) {
          if (a[x][y] && p[x][z] && !p[y][z]) return false;
          continue;
        }
        if (p[x][y] && p[x][z] && !p[y][z] && !p[z][y]) return false;
        if (a[x][y] && a[x][z] && !p[y][z] && !p[z][y]) return false;
        if (a[x][y] && p[x][z] && !p[y][z]) return false;
        if (a[x][y] && p[y][z] && !a[x][z] && !p[x][z]) return false;
      }
    }
  }
  return true;
}

inline bool is_independent(const Graph& g, const std::vector<std::uint32_t>& members) {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j])) return false;
  return true;
}

// Plain enumeration of all 2^n subsets.
inline Weight subset_mwis(const Graph& g, const std::vector<Weight>& w) {
  const std::size_t n = g.vertex_count();
  Weight best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Weight sum = 0;
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u) {
      if (!(mask >> u & 1)) continue;
      sum += w[u];
      for (Vertex v = u + 1; v < n; ++v) {
        if ((mask >> v & 1) && g.adjacent(u, v)) {
          ok = false;
          break;
        }
      }
    }
    if (ok) best = std::max(best, sum);
  }
  return best;
}

inline Graph relation_graph(std::size_t n, const std::vector<ElementPair>& relation) {
  std::vector<burling::Edge> edges;
  for (auto [x, y] : relation) edges.emplace_back(std::min(x, y), std::max(x, y));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, edges);
}

// Element v points at a random subset of {u} ∪ out(u) for a random later u;
// since out(u) is already pairwise related, so is out(v). Labels are then
// shuffled.
inline std::vector<ElementPair> random_chordal_relation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::vector<Element>> out(n);
  std::bernoulli_distribution keep(0.6), empty(0.2);
  for (std::size_t i = n; i-- > 0;) {
    if (i + 1 == n || empty(rng)) continue;
    std::uniform_int_distribution<std::size_t> pick(i + 1, n - 1);
    auto u = static_cast<Element>(pick(rng));
    std::vector<Element> pool = out[u];
    pool.push_back(u);
    for (Element y : pool) {
      if (keep(rng)) out[i].push_back(y);
    }
  }
  std::vector<Element> label(n);
  for (Element x = 0; x < n; ++x) label[x] = x;
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<ElementPair> relation;
  for (Element x = 0; x < n; ++x)
    for (Element y : out[x]) relation.emplace_back(label[x], label[y]);
  return relation;
}

}  // namespace testing
