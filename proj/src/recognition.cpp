#include "burling/recognition.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "burling/errors.hpp"

namespace burling {

namespace {

constexpr Vertex kInner = ~Vertex{0};
constexpr std::uint64_t kField = (std::uint64_t{1} << 21) - 1;

struct Entry {
  bool solved = false;
  Vertex root = 0;             // unrooted: the root that worked
  std::vector<Vertex> attach;  // rooted: kInner or q_C, per component of S - N(r)
};

struct Pairs {
  std::vector<ElementPair> prec;
  std::vector<ElementPair> adj;
};

}  // namespace

std::uint64_t SubproblemKey::packed() const noexcept {
  std::uint64_t k = kind == Kind::kRooted ? 1 : 0;
  std::uint64_t x = x_center ? *x_center + 1 : 0;
  std::uint64_t r = root ? *root + 1 : 0;
  return (k << 63) | ((x & kField) << 42) | ((r & kField) << 21) | (s_id & kField);
}

class Recognizer::Impl {
 public:
  Impl(const Graph& g, RecognizerOptions options) : g_(g), n_(g.vertex_count()), options_(options) {
    if (n_ >= kField) throw InputError("graph is too large for the recognizer");
    if (!is_triangle_free(g)) throw InputError("the recognizer requires a triangle-free graph");
  }

  std::size_t size() const noexcept { return memo_.size(); }

  bool unrooted(std::optional<Vertex> xc, const VertexSet& s) {
    const auto key = SubproblemKey{SubproblemKey::Kind::kUnrooted, xc, std::nullopt, s.front()}.packed();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.solved;

    Marks in_s = mark(s);
    VertexSet hood = open_hood(s, in_s);
    Marks in_closed = in_s;
    for (Vertex p : hood) in_closed[p] = 1;

    Entry entry;
    for (Vertex r : s) {
      std::vector<std::int32_t> comp_of(n_, -1);
      auto comps = split(s, in_s, [r](Vertex v) { return v != r; }, comp_of);

      // Each probe may reach into at most one component of S - {r}.
      bool probes_ok = true;
      for (Vertex p : hood) {
        std::int32_t touched = -1;
        for (Vertex y : g_.neighbors(p)) {
          if (!in_closed[y] || y == r) continue;
          if (!in_s[y] || (touched >= 0 && touched != comp_of[y])) {
            probes_ok = false;
            break;
          }
          touched = comp_of[y];
        }
        if (!probes_ok) break;
      }
      if (!probes_ok) continue;

      bool all_rooted = std::all_of(comps.begin(), comps.end(),
                                    [&](const VertexSet& c) { return rooted(xc, r, c); });
      if (all_rooted) {
        entry.solved = true;
        entry.root = r;
        break;
      }
    }
    memo_.emplace(key, entry);
    if (entry.solved && options_.check_entries) check_entry(xc, std::nullopt, s);
    return entry.solved;
  }

  bool rooted(std::optional<Vertex> xc, Vertex r, const VertexSet& s) {
    const auto key = SubproblemKey{SubproblemKey::Kind::kRooted, xc, r, s.front()}.packed();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.solved;

    Entry entry;
    entry.solved = rooted_body(xc, r, s, entry.attach);
    memo_.emplace(key, entry);
    if (entry.solved && options_.check_entries) check_entry(xc, r, s);
    return entry.solved;
  }

  void build_unrooted(std::optional<Vertex> xc, const VertexSet& s, Pairs& out) const {
    const Entry& entry = lookup({SubproblemKey::Kind::kUnrooted, xc, std::nullopt, s.front()});
    const Vertex r = entry.root;
    Marks in_s = mark(s);
    std::vector<std::int32_t> comp_of(n_, -1);
    for (const auto& c : split(s, in_s, [r](Vertex v) { return v != r; }, comp_of)) {
      build_rooted(xc, r, c, out);
    }
    VertexSet hood = open_hood(s, in_s);
    Marks in_closed = in_s;
    for (Vertex p : hood) in_closed[p] = 1;
    for (Vertex p : hood) {
      auto np = restricted_hood(p, in_closed);
      if (np.size() == 1 && np[0] == r) out.adj.emplace_back(p, r);
    }
  }

  void build_rooted(std::optional<Vertex> xc, Vertex r, const VertexSet& s, Pairs& out) const {
    const std::vector<Vertex> attach =
        lookup({SubproblemKey::Kind::kRooted, xc, r, s.front()}).attach;
    Marks in_s = mark(s);
    std::vector<std::int32_t> comp_of(n_, -1);
    auto comps = split(s, in_s, [&](Vertex v) { return !g_.adjacent(r, v); }, comp_of);
    if (comps.size() != attach.size()) throw ContractError("recognizer: stale rooted memo entry");

    std::vector<VertexSet> inner;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (attach[i] == kInner) {
        build_unrooted(r, comps[i], out);
        for (Vertex x : comps[i]) out.prec.emplace_back(x, r);
        inner.push_back(comps[i]);
      } else {
        build_rooted(xc, attach[i], comps[i], out);
      }
    }

    auto order = nesting_order(g_, inner);
    if (!order) throw ContractError("recognizer: inner family stopped being nested");
    for (std::size_t i = 0; i < inner.size(); ++i) {
      VertexSet hood_i = neighborhood(g_, inner[i], false);
      for (std::size_t j = 0; j < inner.size(); ++j) {
        if (!order->less(i, j)) continue;
        for (Vertex y : inner[j]) {
          bool sees = std::any_of(hood_i.begin(), hood_i.end(), [&](Vertex q) { return g_.adjacent(q, y); });
          if (!sees) continue;
          for (Vertex x : inner[i]) out.prec.emplace_back(x, y);
        }
      }
    }

    VertexSet hood = open_hood(s, in_s);
    Marks in_closed = in_s;
    for (Vertex p : hood) in_closed[p] = 1;
    for (Vertex q : g_.neighbors(r)) {
      if (in_closed[q]) out.adj.emplace_back(q, r);
    }
    for (Vertex p : hood) {
      if (p == r) continue;
      auto np = restricted_hood(p, in_closed);
      if (np.size() == 1 && in_s[np[0]] && g_.adjacent(r, np[0])) out.adj.emplace_back(p, np[0]);
    }
  }

  BurlingStructure structure(std::optional<Vertex> xc, std::optional<Vertex> r, const VertexSet& s) const {
    Pairs pairs;
    if (r) {
      build_rooted(xc, *r, s, pairs);
    } else {
      build_unrooted(xc, s, pairs);
    }
    BurlingStructure out;
    out.around = s;
    out.elements = neighborhood(g_, s, true);
    std::vector<Element> index(n_, 0);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < out.elements.size(); ++i) {
      index[out.elements[i]] = static_cast<Element>(i);
      names.push_back(std::to_string(out.elements[i]));
    }
    auto renumber = [&index](std::vector<ElementPair>& v) {
      for (auto& [a, b] : v) {
        a = index[a];
        b = index[b];
      }
    };
    renumber(pairs.prec);
    renumber(pairs.adj);
    out.structure = BurlingSet(std::move(names), std::move(pairs.prec), std::move(pairs.adj));
    return out;
  }

  std::optional<BurlingSet> whole() {
    auto comps = components(g_, all_vertices(g_));
    for (const auto& c : comps) {
      if (!unrooted(std::nullopt, c)) return std::nullopt;
    }
    Pairs pairs;
    for (const auto& c : comps) build_unrooted(std::nullopt, c, pairs);
    return BurlingSet::numbered(n_, std::move(pairs.prec), std::move(pairs.adj));
  }

  const Graph& graph() const noexcept { return g_; }

 private:
  using Marks = std::vector<std::uint8_t>;

  Marks mark(const VertexSet& s) const {
    Marks m(n_, 0);
    for (Vertex v : s) m[v] = 1;
    return m;
  }

  VertexSet open_hood(const VertexSet& s, const Marks& in_s) const {
    Marks seen(n_, 0);
    VertexSet out;
    for (Vertex v : s) {
      for (Vertex w : g_.neighbors(v)) {
        if (!in_s[w] && !seen[w]) {
          seen[w] = 1;
          out.push_back(w);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // N(p) ∩ N[S], given the membership marks of N[S].
  VertexSet restricted_hood(Vertex p, const Marks& in_closed) const {
    VertexSet out;
    for (Vertex y : g_.neighbors(p)) {
      if (in_closed[y]) out.push_back(y);
    }
    return out;
  }

  // Components of {v ∈ s : keep(v)}, ordered by minimum vertex; fills comp_of.
  template <class Keep>
  std::vector<VertexSet> split(const VertexSet& s, const Marks& in_s, Keep keep,
                               std::vector<std::int32_t>& comp_of) const {
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex start : s) {
      if (comp_of[start] >= 0 || !keep(start)) continue;
      const auto id = static_cast<std::int32_t>(out.size());
      VertexSet part;
      comp_of[start] = id;
      stack.push_back(start);
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        part.push_back(v);
        for (Vertex w : g_.neighbors(v)) {
          if (in_s[w] && comp_of[w] < 0 && keep(w)) {
            comp_of[w] = id;
            stack.push_back(w);
          }
        }
      }
      std::sort(part.begin(), part.end());
      out.push_back(std::move(part));
    }
    return out;
  }

  bool rooted_body(std::optional<Vertex> xc, Vertex r, const VertexSet& s, std::vector<Vertex>& attach) {
    Marks in_s = mark(s);
    std::vector<std::int32_t> comp_of(n_, -1);
    auto comps = split(s, in_s, [&](Vertex v) { return !g_.adjacent(r, v); }, comp_of);

    // Step 1: classify components of S - N(r), inner first.
    attach.assign(comps.size(), kInner);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const VertexSet& c = comps[i];
      VertexSet hood_c = open_hood(c, mark(c));
      bool inside = std::all_of(hood_c.begin(), hood_c.end(), [&](Vertex q) { return g_.adjacent(r, q); });
      if (inside && unrooted(r, c)) continue;

      std::optional<Vertex> q_c;
      std::size_t hits = 0;
      for (Vertex q : hood_c) {
        if (g_.adjacent(r, q)) {
          ++hits;
          q_c = q;
        }
      }
      if (hits == 1 && in_s[*q_c] && rooted(xc, *q_c, c)) {
        attach[i] = *q_c;
        continue;
      }
      return false;
    }

    // Step 2: where the probes in N(S) - {r} may attach.
    VertexSet hood = open_hood(s, in_s);
    Marks in_closed = in_s;
    for (Vertex p : hood) in_closed[p] = 1;
    for (Vertex p : hood) {
      if (p == r) continue;
      auto np = restricted_hood(p, in_closed);
      bool under_r = true;
      bool one_outer = true;
      std::int32_t outer = -1;
      std::vector<Vertex> loose;  // members of N(p) ∩ N[S] outside every component
      for (Vertex y : np) {
        if (y == r) {
          one_outer = false;
        } else if (comp_of[y] >= 0) {
          if (attach[comp_of[y]] == kInner) {
            one_outer = false;
          } else {
            under_r = false;
            if (outer >= 0 && outer != comp_of[y]) one_outer = false;
            outer = comp_of[y];
          }
        } else {
          under_r = false;
          loose.push_back(y);
        }
      }
      one_outer = one_outer && outer >= 0 &&
                  std::all_of(loose.begin(), loose.end(), [&](Vertex y) { return y == attach[outer]; });
      bool single_q = np.size() == 1 && in_s[np[0]] && g_.adjacent(r, np[0]);
      if (!under_r && !one_outer && !single_q) return false;
    }

    // Step 3: the inner components must form a nested family.
    std::vector<VertexSet> inner;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (attach[i] == kInner) inner.push_back(comps[i]);
    }
    return nesting_order(g_, inner).has_value();
  }

  const Entry& lookup(const SubproblemKey& key) const {
    auto it = memo_.find(key.packed());
    if (it == memo_.end() || !it->second.solved) {
      throw ContractError("recognizer: required subproblem is not solved");
    }
    return it->second;
  }

  void check_entry(std::optional<Vertex> xc, std::optional<Vertex> r, const VertexSet& s) const {
    BurlingStructure st = structure(xc, r, s);
    const BurlingSet& b = st.structure;
    if (!verify_axioms(b).ok()) throw ContractError("recognizer: subproblem solution violates the axioms");
    if (!(induced_graph(b) == g_.induced(st.elements))) {
      throw ContractError("recognizer: subproblem solution is not an induced subgraph");
    }
    for (Element i = 0; i < st.elements.size(); ++i) {
      Vertex v = st.elements[i];
      if (r && v == *r) {
        if (!is_root(b, i)) throw ContractError("recognizer: r is not a root of its solution");
      } else if (!std::binary_search(s.begin(), s.end(), v) && !is_probe(b, i)) {
        throw ContractError("recognizer: a neighbour of S is not a probe of its solution");
      }
    }
  }

  const Graph& g_;
  std::size_t n_;
  RecognizerOptions options_;
  std::unordered_map<std::uint64_t, Entry> memo_;
};

Recognizer::Recognizer(const Graph& g, RecognizerOptions options)
    : impl_(std::make_unique<Impl>(g, options)) {}

Recognizer::~Recognizer() = default;

std::size_t Recognizer::subproblem_count() const noexcept { return impl_->size(); }

namespace {

VertexSet x_set(const Graph& g, std::optional<Vertex> xc) {
  if (!xc) return {};
  if (*xc >= g.vertex_count()) throw InputError("centre vertex out of range");
  return neighborhood(g, VertexSet{*xc}, true);
}

void require_component(const Graph& g, const VertexSet& s, const VertexSet& blocked) {
  check_vertex_set(g, s);
  if (s.empty()) throw InputError("subproblem set S must be non-empty");
  if (components(g, s).size() != 1) throw InputError("subproblem set S must be connected");
  for (Vertex v : s) {
    if (std::binary_search(blocked.begin(), blocked.end(), v)) {
      throw InputError("subproblem set S intersects the excluded set");
    }
  }
  for (Vertex p : neighborhood(g, s, false)) {
    if (!std::binary_search(blocked.begin(), blocked.end(), p)) {
      throw InputError("subproblem set S is not a full component of the remaining vertices");
    }
  }
}

}  // namespace

std::optional<BurlingStructure> Recognizer::solve_unrooted(std::optional<Vertex> x_center, const VertexSet& s) {
  require_component(impl_->graph(), s, x_set(impl_->graph(), x_center));
  if (!impl_->unrooted(x_center, s)) return std::nullopt;
  return impl_->structure(x_center, std::nullopt, s);
}

std::optional<BurlingStructure> Recognizer::solve_rooted(std::optional<Vertex> x_center, Vertex root,
                                                         const VertexSet& s) {
  const Graph& g = impl_->graph();
  if (root >= g.vertex_count()) throw InputError("root vertex out of range");
  VertexSet blocked = x_set(g, x_center);
  if (std::binary_search(blocked.begin(), blocked.end(), root)) {
    throw InputError("root must lie outside the excluded set");
  }
  blocked = make_vertex_set([&] {
    auto v = blocked;
    v.push_back(root);
    return v;
  }());
  require_component(g, s, blocked);
  if (std::none_of(s.begin(), s.end(), [&](Vertex v) { return g.adjacent(root, v); })) {
    throw InputError("subproblem set S must contain a neighbour of the root");
  }
  if (!impl_->rooted(x_center, root, s)) return std::nullopt;
  return impl_->structure(x_center, root, s);
}

std::optional<BurlingSet> Recognizer::recognize() { return impl_->whole(); }

std::optional<BurlingSet> recognize(const Graph& g, RecognitionStats* stats) {
  if (g.vertex_count() == 0) throw InputError("recognize: the graph must have at least one vertex");
  if (!is_triangle_free(g)) {
    if (stats) stats->subproblems = 0;
    return std::nullopt;
  }
  Recognizer recognizer(g);
  auto result = recognizer.recognize();
  if (stats) stats->subproblems = recognizer.subproblem_count();
  return result;
}

}  // namespace burling
