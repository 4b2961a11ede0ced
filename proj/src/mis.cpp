#include "burling/mis.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "burling/errors.hpp"
#include "burling/recognition.hpp"

namespace burling {

namespace {

constexpr Weight kWeightBudget = Weight{1} << 62;

struct Digraph {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::vector<std::uint32_t>> in;

  explicit Digraph(std::size_t n) : out(n), in(n) {}

  void add(std::uint32_t x, std::uint32_t y) {
    out[x].push_back(y);
    in[y].push_back(x);
  }
};

Digraph make_digraph(std::size_t n, std::span<const ElementPair> relation) {
  std::vector<ElementPair> pairs(relation.begin(), relation.end());
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  Digraph d(n);
  for (const auto& [x, y] : pairs) {
    if (x >= n || y >= n) throw InputError("relation pair references an element outside 0..n-1");
    d.add(x, y);
  }
  return d;
}

// Sources first, smallest index among the ready elements. Empty if cyclic.
std::vector<std::uint32_t> topological_order(const Digraph& d) {
  const std::size_t n = d.out.size();
  std::vector<std::size_t> indegree(n);
  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
  for (std::uint32_t v = 0; v < n; ++v) {
    indegree[v] = d.in[v].size();
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<std::uint32_t> order;
  order.reserve(n);
  while (!ready.empty()) {
    std::uint32_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::uint32_t u : d.out[v]) {
      if (--indegree[u] == 0) ready.push(u);
    }
  }
  if (order.size() != n) order.clear();
  return order;
}

void require_chordal(const Digraph& d, const std::vector<std::uint32_t>& order) {
  const std::size_t n = d.out.size();
  if (order.size() != n) throw ContractError("relation is not chordal: it has a cycle");
  std::vector<std::uint8_t> matrix(n * n, 0);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y : d.out[x]) matrix[x * n + y] = 1;
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    const auto& succ = d.out[x];
    for (std::size_t i = 0; i < succ.size(); ++i) {
      for (std::size_t j = i + 1; j < succ.size(); ++j) {
        if (!matrix[succ[i] * n + succ[j]] && !matrix[succ[j] * n + succ[i]]) {
          throw ContractError("relation is not chordal: two successors of element " +
                              std::to_string(x) + " are unrelated");
        }
      }
    }
  }
}

void require_weights(std::size_t n, std::span<const Weight> w) {
  if (w.size() != n) {
    throw InputError("expected " + std::to_string(n) + " weights, got " + std::to_string(w.size()));
  }
  Weight total = 0;
  for (Weight x : w) {
    if (x < 0) throw InputError("weights must be non-negative");
    if (x >= kWeightBudget - total) throw InputError("total weight does not fit exact 62-bit arithmetic");
    total += x;
  }
}

// Two-phase greedy on a perfect elimination order; `order` lists every
// element before its successors, so the later neighbours of v are out[v].
IndependentSet greedy(const Digraph& d, const std::vector<std::uint32_t>& order, std::span<const Weight> w) {
  const std::size_t n = d.out.size();
  std::vector<Weight> residual(w.begin(), w.end());
  std::vector<std::uint8_t> marked(n, 0);
  for (std::uint32_t v : order) {
    const Weight c = residual[v];
    if (c <= 0) continue;
    marked[v] = 1;
    residual[v] = 0;
    for (std::uint32_t u : d.out[v]) residual[u] -= c;
  }

  std::vector<std::uint8_t> chosen(n, 0);
  IndependentSet result;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::uint32_t v = *it;
    if (!marked[v]) continue;
    auto taken = [&chosen](std::uint32_t u) { return chosen[u] != 0; };
    if (std::any_of(d.out[v].begin(), d.out[v].end(), taken)) continue;
    if (std::any_of(d.in[v].begin(), d.in[v].end(), taken)) continue;
    chosen[v] = 1;
    result.members.push_back(v);
    result.weight += w[v];
  }
  std::sort(result.members.begin(), result.members.end());
  return result;
}

}  // namespace

std::vector<ElementPair> chordal_relation(const BurlingSet& b) {
  std::vector<ElementPair> relation = b.prec_pairs();
  relation.insert(relation.end(), b.adj_pairs().begin(), b.adj_pairs().end());
  std::sort(relation.begin(), relation.end());
  Digraph d = make_digraph(b.size(), relation);
  require_chordal(d, topological_order(d));
  return relation;
}

IndependentSet mwis_chordal(std::size_t n, std::span<const ElementPair> relation, std::span<const Weight> w) {
  require_weights(n, w);
  Digraph d = make_digraph(n, relation);
  auto order = topological_order(d);
  require_chordal(d, order);
  return greedy(d, order, w);
}

IndependentSet solve_indep(const BurlingSet& b, std::span<const Weight> w) {
  const std::size_t n = b.size();
  require_weights(n, w);
  Digraph whole = make_digraph(n, chordal_relation(b));

  // I_u and w(I_u) for every u, filled in order of growing |V_u|.
  std::vector<std::vector<std::uint32_t>> best(n);
  std::vector<Weight> best_weight(n, 0);

  std::vector<std::uint32_t> local(n, 0);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t generation = 0;

  auto solve_on = [&](std::span<const Element> s) {
    IndependentSet out;
    if (s.empty()) return out;
    ++generation;
    for (std::uint32_t i = 0; i < s.size(); ++i) {
      local[s[i]] = i;
      stamp[s[i]] = generation;
    }
    Digraph d(s.size());
    std::vector<Weight> lifted(s.size());
    for (std::uint32_t i = 0; i < s.size(); ++i) {
      for (std::uint32_t y : whole.out[s[i]]) {
        if (stamp[y] == generation) d.add(i, local[y]);
      }
      lifted[i] = w[s[i]] + best_weight[s[i]];
    }
    auto order = topological_order(d);
    if (order.size() != s.size()) throw ContractError("solve_indep: restricted relation is cyclic");
    IndependentSet top = greedy(d, order, lifted);
    for (std::uint32_t i : top.members) {
      Element u = s[i];
      out.members.push_back(u);
      out.members.insert(out.members.end(), best[u].begin(), best[u].end());
    }
    std::sort(out.members.begin(), out.members.end());
    for (auto v : out.members) out.weight += w[v];
    if (out.weight != top.weight) throw ContractError("solve_indep: lifted weights disagree");
    return out;
  };

  std::vector<Element> by_size(n);
  for (Element u = 0; u < n; ++u) by_size[u] = u;
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&b](Element x, Element y) { return b.prec_in(x).size() < b.prec_in(y).size(); });
  for (Element u : by_size) {
    IndependentSet sub = solve_on(b.prec_in(u));
    best[u] = std::move(sub.members);
    best_weight[u] = sub.weight;
  }

  std::vector<Element> everything(n);
  for (Element u = 0; u < n; ++u) everything[u] = u;
  return solve_on(everything);
}

std::optional<IndependentSet> max_weight_independent_set(const Graph& g, std::span<const Weight> w) {
  require_weights(g.vertex_count(), w);
  auto b = recognize(g);
  if (!b) return std::nullopt;
  return solve_indep(*b, w);
}

}  // namespace burling
