#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace burling {

using Vertex = std::uint32_t;

// Sorted ascending, duplicate-free.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the vertices 0..n-1.
///
/// Immutable once constructed. Adjacency queries are O(1) through a dense
/// byte matrix, so this is meant for graphs of up to a few thousand vertices.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  // Throws InputError on self-loops, duplicate edges (in either orientation)
  // and endpoints >= n.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return matrix_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const noexcept { return adjacency_[v]; }

  // Every edge once as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  // Subgraph induced by `s`, with s[i] relabelled to i.
  Graph induced(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint8_t> matrix_;
};

VertexSet make_vertex_set(std::vector<Vertex> vertices);
VertexSet all_vertices(const Graph& g);

// Throws InputError unless `s` is sorted, duplicate-free and within range.
void check_vertex_set(const Graph& g, const VertexSet& s);

/// N(S) when `closed` is false, N[S] = S ∪ N(S) otherwise.
VertexSet neighborhood(const Graph& g, const VertexSet& s, bool closed);

/// Connected pieces of g[s], ordered by their minimum vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);

bool is_triangle_free(const Graph& g);

/// True iff every vertex of `s` sees either all of `s_prime` or none of it.
/// The two sets must be disjoint.
bool is_homogeneous(const Graph& g, const VertexSet& s_prime, const VertexSet& s);

/// Strict partial order on the members of a nested family, by member index.
class NestingOrder {
 public:
  explicit NestingOrder(std::size_t members) : size_(members), less_(members * members, 0) {}

  std::size_t size() const noexcept { return size_; }
  bool less(std::size_t i, std::size_t j) const noexcept { return less_[i * size_ + j] != 0; }
  bool comparable(std::size_t i, std::size_t j) const noexcept { return less(i, j) || less(j, i); }
  void set_less(std::size_t i, std::size_t j) noexcept { less_[i * size_ + j] = 1; }

 private:
  std::size_t size_;
  std::vector<std::uint8_t> less_;
};

/// Returns a nesting order if the family of pairwise disjoint vertex sets is
/// nested, and nothing otherwise.
///
/// For members C1 < C2 we have N(C1) ⊆ N(C2) with N(C1) homogeneous for C2;
/// incomparable members have disjoint neighbourhoods. Members whose
/// neighbourhoods coincide in both directions are ordered by index.
std::optional<NestingOrder> nesting_order(const Graph& g, std::span<const VertexSet> family);

}  // namespace burling
