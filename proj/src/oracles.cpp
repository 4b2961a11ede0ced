#include "burling/oracles.hpp"

#include <array>
#include <string>

#include "burling/errors.hpp"

namespace burling {

IndependentSet brute_force_mwis(const Graph& g, std::span<const Weight> w) {
  const std::size_t n = g.vertex_count();
  if (n > kBruteForceMwisLimit) {
    throw InputError("brute_force_mwis handles at most " + std::to_string(kBruteForceMwisLimit) + " vertices");
  }
  if (w.size() != n) throw InputError("weight count does not match the vertex count");
  for (Weight x : w) {
    if (x < 0) throw InputError("weights must be non-negative");
  }

  std::vector<std::uint32_t> mask(n, 0);
  for (const auto& [u, v] : g.edges()) {
    mask[u] |= 1u << v;
    mask[v] |= 1u << u;
  }
  std::vector<Weight> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + w[i];

  std::uint32_t best_set = 0;
  Weight best = -1;
  // Include/exclude vertex i; `blocked` holds neighbours of chosen vertices.
  auto search = [&](auto&& self, std::size_t i, std::uint32_t chosen, std::uint32_t blocked, Weight sum) -> void {
    if (sum + suffix[i] <= best) return;
    if (i == n) {
      best = sum;
      best_set = chosen;
      return;
    }
    if (!(blocked & (1u << i))) self(self, i + 1, chosen | (1u << i), blocked | mask[i], sum + w[i]);
    self(self, i + 1, chosen, blocked, sum);
  };
  search(search, 0, 0, 0, 0);

  IndependentSet out;
  out.weight = best < 0 ? 0 : best;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (best_set & (1u << v)) out.members.push_back(v);
  }
  return out;
}

namespace {

class ExhaustiveSearch {
 public:
  explicit ExhaustiveSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {
    for (Vertex i = 0; i < n_; ++i) {
      for (Vertex j = i + 1; j < n_; ++j) pairs_.emplace_back(i, j);
    }
  }

  std::optional<BurlingSet> run() {
    if (!descend(0)) return std::nullopt;
    std::vector<ElementPair> prec, adj;
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        if (prec_[x][y]) prec.emplace_back(x, y);
        if (adj_[x][y]) adj.emplace_back(x, y);
      }
    }
    return BurlingSet::numbered(n_, std::move(prec), std::move(adj));
  }

 private:
  using Matrix = std::array<std::array<bool, kExhaustiveRecognizeLimit>, kExhaustiveRecognizeLimit>;

  bool descend(std::size_t index) {
    if (index == pairs_.size()) return adj_acyclic() && verify_axioms(candidate()).ok();
    const auto [i, j] = pairs_[index];
    const int states = g_.adjacent(i, j) ? 2 : 3;
    for (int state = 0; state < states; ++state) {
      set(i, j, state, true);
      assigned_[i][j] = assigned_[j][i] = true;
      if (triples_ok(i, j) && descend(index + 1)) return true;
      assigned_[i][j] = assigned_[j][i] = false;
      set(i, j, state, false);
    }
    return false;
  }

  void set(Vertex i, Vertex j, int state, bool on) {
    if (g_.adjacent(i, j)) {
      (state == 0 ? adj_[i][j] : adj_[j][i]) = on;
    } else if (state == 1) {
      prec_[i][j] = on;
    } else if (state == 2) {
      prec_[j][i] = on;
    }
  }

  bool triple_ok(Vertex x, Vertex y, Vertex z) const {
    if (prec_[x][y] && prec_[x][z] && !prec_[y][z] && !prec_[z][y]) return false;  // A1
    if (adj_[x][y] && adj_[x][z] && !prec_[y][z] && !prec_[z][y]) return false;    // A2
    if (adj_[x][y] && prec_[x][z] && !prec_[y][z]) return false;                    // A3
    if (adj_[x][y] && prec_[y][z] && !adj_[x][z] && !prec_[x][z]) return false;    // A4
    if (prec_[x][y] && prec_[y][z] && !prec_[x][z]) return false;                   // A5
    return true;
  }

  // Every triple through the pair {i, j} whose three pairs are all decided.
  bool triples_ok(Vertex i, Vertex j) const {
    for (Vertex k = 0; k < n_; ++k) {
      if (k == i || k == j || !assigned_[i][k] || !assigned_[j][k]) continue;
      const std::array<Vertex, 3> t{i, j, k};
      static constexpr int kPerm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      for (const auto& p : kPerm) {
        if (!triple_ok(t[p[0]], t[p[1]], t[p[2]])) return false;
      }
    }
    return true;
  }

  bool adj_acyclic() const {
    std::array<int, kExhaustiveRecognizeLimit> indegree{};
    for (Vertex x = 0; x < n_; ++x) {
      for (Vertex y = 0; y < n_; ++y) indegree[y] += adj_[x][y] ? 1 : 0;
    }
    std::vector<Vertex> ready;
    for (Vertex x = 0; x < n_; ++x) {
      if (indegree[x] == 0) ready.push_back(x);
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
      Vertex x = ready.back();
      ready.pop_back();
      ++seen;
      for (Vertex y = 0; y < n_; ++y) {
        if (adj_[x][y] && --indegree[y] == 0) ready.push_back(y);
      }
    }
    return seen == n_;
  }

  BurlingSet candidate() const {
    std::vector<ElementPair> prec, adj;
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        if (prec_[x][y]) prec.emplace_back(x, y);
        if (adj_[x][y]) adj.emplace_back(x, y);
      }
    }
    return BurlingSet::numbered(n_, std::move(prec), std::move(adj));
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  Matrix prec_{}, adj_{}, assigned_{};
};

}  // namespace

std::optional<BurlingSet> exhaustive_recognize(const Graph& g) {
  if (g.vertex_count() > kExhaustiveRecognizeLimit) {
    throw InputError("exhaustive_recognize handles at most " + std::to_string(kExhaustiveRecognizeLimit) +
                     " vertices");
  }
  if (g.vertex_count() == 0) throw InputError("exhaustive_recognize: the graph must have a vertex");
  if (!is_triangle_free(g)) return std::nullopt;
  return ExhaustiveSearch(g).run();
}

}  // namespace burling
