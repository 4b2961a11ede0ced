#include "burling/graph.hpp"

#include <algorithm>
#include <string>

#include "burling/errors.hpp"

namespace burling {

Graph::Graph(std::size_t n) : n_(n), adjacency_(n), matrix_(n * n, 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    auto& cell = matrix_[static_cast<std::size_t>(u) * n + v];
    if (cell) {
      throw InputError("duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    cell = 1;
    matrix_[static_cast<std::size_t>(v) * n + u] = 1;
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(const VertexSet& s) const {
  std::vector<std::int64_t> index(n_, -1);
  for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<std::int64_t>(i);
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex w : adjacency_[s[i]]) {
      if (index[w] > static_cast<std::int64_t>(i)) {
        sub.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(index[w]));
      }
    }
  }
  return Graph(s.size(), sub);
}

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

VertexSet all_vertices(const Graph& g) {
  VertexSet s(g.vertex_count());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = static_cast<Vertex>(i);
  return s;
}

void check_vertex_set(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.vertex_count()) {
      throw InputError("vertex " + std::to_string(s[i]) + " is out of range");
    }
    if (i > 0 && s[i - 1] >= s[i]) throw InputError("vertex set is not sorted and duplicate-free");
  }
}

VertexSet neighborhood(const Graph& g, const VertexSet& s, bool closed) {
  check_vertex_set(g, s);
  std::vector<std::uint8_t> in_s(g.vertex_count(), 0);
  for (Vertex v : s) in_s[v] = 1;
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  VertexSet out;
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (!in_s[w] && !seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  if (closed) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
  check_vertex_set(g, s);
  std::vector<std::uint8_t> state(g.vertex_count(), 0);  // 1 = in s, 2 = visited
  for (Vertex v : s) state[v] = 1;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex start : s) {
    if (state[start] != 1) continue;
    VertexSet part;
    state[start] = 2;
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (state[w] == 1) {
          state[w] = 2;
          stack.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    out.push_back(std::move(part));
  }
  return out;
}

bool is_triangle_free(const Graph& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w > v && g.adjacent(u, w)) return false;
      }
    }
  }
  return true;
}

namespace {

bool homogeneous_unchecked(const Graph& g, const VertexSet& s_prime, const VertexSet& s) {
  for (Vertex x : s) {
    std::size_t seen = 0;
    for (Vertex y : s_prime) seen += g.adjacent(x, y) ? 1 : 0;
    if (seen != 0 && seen != s_prime.size()) return false;
  }
  return true;
}

bool intersects(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

}  // namespace

bool is_homogeneous(const Graph& g, const VertexSet& s_prime, const VertexSet& s) {
  check_vertex_set(g, s_prime);
  check_vertex_set(g, s);
  if (intersects(s_prime, s)) throw InputError("is_homogeneous: the two vertex sets overlap");
  return homogeneous_unchecked(g, s_prime, s);
}

std::optional<NestingOrder> nesting_order(const Graph& g, std::span<const VertexSet> family) {
  const std::size_t k = family.size();
  std::vector<std::uint8_t> owner(g.vertex_count(), 0);
  for (const auto& member : family) {
    check_vertex_set(g, member);
    for (Vertex v : member) {
      if (owner[v]) throw InputError("nesting_order: family members are not pairwise disjoint");
      owner[v] = 1;
    }
  }

  std::vector<VertexSet> hood;
  hood.reserve(k);
  for (const auto& member : family) hood.push_back(neighborhood(g, member, false));

  // allowed[i][j]: Ci may be placed below Cj.
  std::vector<std::uint8_t> allowed(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (!intersects(hood[i], hood[j])) continue;
      bool below = std::includes(hood[j].begin(), hood[j].end(), hood[i].begin(), hood[i].end()) &&
                   homogeneous_unchecked(g, hood[i], family[j]);
      bool above = std::includes(hood[i].begin(), hood[i].end(), hood[j].begin(), hood[j].end()) &&
                   homogeneous_unchecked(g, hood[j], family[i]);
      if (!below && !above) return std::nullopt;
      allowed[i * k + j] = below;
      allowed[j * k + i] = above;
    }
  }

  // `allowed` is transitive; breaking mutual pairs by index keeps it so.
  NestingOrder order(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !allowed[i * k + j]) continue;
      if (!allowed[j * k + i] || i < j) order.set_less(i, j);
    }
  }
  return order;
}

}  // namespace burling
