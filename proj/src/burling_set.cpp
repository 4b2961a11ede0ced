#include "burling/burling_set.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "burling/errors.hpp"

namespace burling {

namespace {

void sort_unique(std::vector<ElementPair>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

// Returns the elements of some directed cycle, or an empty vector.
std::vector<Element> find_cycle(std::size_t n,
                                const std::function<std::span<const Element>(Element)>& out) {
  std::vector<std::uint8_t> color(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<Element> parent(n, 0);
  std::vector<std::pair<Element, std::size_t>> stack;
  for (Element start = 0; start < n; ++start) {
    if (color[start]) continue;
    color[start] = 1;
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto succ = out(v);
      if (next == succ.size()) {
        color[v] = 2;
        stack.pop_back();
        continue;
      }
      Element w = succ[next++];
      if (color[w] == 1) {
        std::vector<Element> cycle{w};
        for (Element u = v; u != w; u = parent[u]) cycle.push_back(u);
        std::reverse(cycle.begin() + 1, cycle.end());
        return cycle;
      }
      if (color[w] == 0) {
        color[w] = 1;
        parent[w] = v;
        stack.emplace_back(w, 0);
      }
    }
  }
  return {};
}

[[noreturn]] void contract(const std::string& what) { throw ContractError(what); }

}  // namespace

BurlingSet::BurlingSet(std::vector<std::string> names, std::vector<ElementPair> prec,
                       std::vector<ElementPair> adj)
    : names_(std::move(names)), prec_pairs_(std::move(prec)), adj_pairs_(std::move(adj)) {
  const std::size_t n = names_.size();
  for (Element i = 0; i < n; ++i) {
    if (names_[i].empty()) throw InputError("element names must be non-empty");
    if (!index_.emplace(names_[i], i).second) {
      throw InputError("duplicate element name '" + names_[i] + "'");
    }
  }
  sort_unique(prec_pairs_);
  sort_unique(adj_pairs_);
  matrix_.assign(n * n, 0);
  prec_out_.resize(n);
  prec_in_.resize(n);
  adj_out_.resize(n);
  adj_in_.resize(n);
  auto check = [n](const ElementPair& p) {
    if (p.first >= n || p.second >= n) {
      throw InputError("relation pair references an undeclared element");
    }
  };
  for (const auto& p : prec_pairs_) {
    check(p);
    matrix_[p.first * n + p.second] |= kPrec;
    prec_out_[p.first].push_back(p.second);
    prec_in_[p.second].push_back(p.first);
  }
  for (const auto& p : adj_pairs_) {
    check(p);
    matrix_[p.first * n + p.second] |= kAdj;
    adj_out_[p.first].push_back(p.second);
    adj_in_[p.second].push_back(p.first);
  }
  for (auto& v : prec_in_) std::sort(v.begin(), v.end());
  for (auto& v : adj_in_) std::sort(v.begin(), v.end());
}

BurlingSet BurlingSet::numbered(std::size_t n, std::vector<ElementPair> prec,
                                std::vector<ElementPair> adj) {
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = std::to_string(i);
  return BurlingSet(std::move(names), std::move(prec), std::move(adj));
}

std::optional<Element> BurlingSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool operator==(const BurlingSet& a, const BurlingSet& b) {
  if (a.size() != b.size()) return false;
  std::vector<Element> map(a.size());
  for (Element i = 0; i < a.size(); ++i) {
    auto j = b.find(a.name(i));
    if (!j) return false;
    map[i] = *j;
  }
  auto same = [&map](const std::vector<ElementPair>& pa, const std::vector<ElementPair>& pb) {
    if (pa.size() != pb.size()) return false;
    std::vector<ElementPair> mapped;
    mapped.reserve(pa.size());
    for (const auto& [x, y] : pa) mapped.emplace_back(map[x], map[y]);
    std::sort(mapped.begin(), mapped.end());
    return mapped == pb;
  };
  return same(a.prec_pairs_, b.prec_pairs_) && same(a.adj_pairs_, b.adj_pairs_);
}

bool AxiomReport::violates(std::string_view axiom) const {
  return std::any_of(violations.begin(), violations.end(),
                     [axiom](const AxiomViolation& v) { return v.axiom == axiom; });
}

std::string AxiomReport::describe(const BurlingSet& b) const {
  std::ostringstream out;
  for (const auto& v : violations) {
    out << v.axiom << ":";
    for (Element x : v.witness) out << ' ' << (x < b.size() ? b.name(x) : std::to_string(x));
    out << '\n';
  }
  return out.str();
}

AxiomReport verify_axioms(const BurlingSet& b) {
  constexpr std::size_t kPerAxiom = 16;
  AxiomReport report;
  std::unordered_map<std::string, std::size_t> counts;
  auto flag = [&](const char* axiom, std::vector<Element> witness) {
    if (counts[axiom]++ < kPerAxiom) report.violations.push_back({axiom, std::move(witness)});
  };

  const std::size_t n = b.size();
  if (n == 0) {
    flag("nonempty", {});
    return report;
  }

  for (Element x = 0; x < n; ++x) {
    if (b.prec(x, x)) flag("irreflexive", {x});
  }
  // A5
  for (Element x = 0; x < n; ++x) {
    for (Element y : b.prec_out(x)) {
      for (Element z : b.prec_out(y)) {
        if (!b.prec(x, z)) flag("A5", {x, y, z});
      }
    }
  }
  if (auto cycle = find_cycle(n, [&b](Element x) { return b.adj_out(x); }); !cycle.empty()) {
    flag("adj-acyclic", std::move(cycle));
  }
  for (Element x = 0; x < n; ++x) {
    auto po = b.prec_out(x);
    auto ao = b.adj_out(x);
    // A1
    for (std::size_t i = 0; i < po.size(); ++i) {
      for (std::size_t j = i + 1; j < po.size(); ++j) {
        Element y = po[i], z = po[j];
        if (!b.prec(y, z) && !b.prec(z, y)) flag("A1", {x, y, z});
      }
    }
    // A2
    for (std::size_t i = 0; i < ao.size(); ++i) {
      for (std::size_t j = i + 1; j < ao.size(); ++j) {
        Element y = ao[i], z = ao[j];
        if (!b.prec(y, z) && !b.prec(z, y)) flag("A2", {x, y, z});
      }
    }
    for (Element y : ao) {
      // A3
      for (Element z : po) {
        if (!b.prec(y, z)) flag("A3", {x, y, z});
      }
      // A4
      for (Element z : b.prec_out(y)) {
        if (!b.adj(x, z) && !b.prec(x, z)) flag("A4", {x, y, z});
      }
    }
  }

  std::vector<std::vector<Element>> related(n);
  for (const auto& [x, y] : b.prec_pairs()) related[x].push_back(y);
  for (const auto& [x, y] : b.adj_pairs()) related[x].push_back(y);
  if (auto cycle = find_cycle(n, [&related](Element x) { return std::span<const Element>(related[x]); });
      !cycle.empty()) {
    flag("R-acyclic", std::move(cycle));
  }
  return report;
}

bool is_root(const BurlingSet& b, Element x) { return b.prec_out(x).empty() && b.adj_out(x).empty(); }

bool is_probe(const BurlingSet& b, Element x) {
  return b.prec_out(x).empty() && b.prec_in(x).empty() && b.adj_in(x).empty();
}

bool is_exposed(const BurlingSet& b, Element x) { return b.prec_out(x).empty(); }

ElementClassification classify_elements(const BurlingSet& b) {
  ElementClassification c;
  for (Element x = 0; x < b.size(); ++x) {
    if (is_root(b, x)) c.roots.push_back(x);
    if (is_probe(b, x)) c.probes.push_back(x);
    if (is_exposed(b, x)) c.exposed.push_back(x);
  }
  return c;
}

Graph induced_graph(const BurlingSet& b) {
  std::vector<Edge> edges;
  for (const auto& [x, y] : b.adj_pairs()) {
    if (x == y) continue;
    Edge e = x < y ? Edge{x, y} : Edge{y, x};
    edges.push_back(e);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(b.size(), edges);
}

BurlingSet restrict(const BurlingSet& b, std::span<const Element> u) {
  if (u.empty()) throw InputError("restrict: the subset must be non-empty");
  std::vector<Element> members(u.begin(), u.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  constexpr Element kAbsent = ~Element{0};
  std::vector<Element> index(b.size(), kAbsent);
  std::vector<std::string> names;
  for (Element x : members) {
    if (x >= b.size()) throw InputError("restrict: element index out of range");
    index[x] = static_cast<Element>(names.size());
    names.push_back(b.name(x));
  }
  auto keep = [&index](const std::vector<ElementPair>& pairs) {
    std::vector<ElementPair> out;
    for (const auto& [x, y] : pairs) {
      if (index[x] != kAbsent && index[y] != kAbsent) out.emplace_back(index[x], index[y]);
    }
    return out;
  };
  return BurlingSet(std::move(names), keep(b.prec_pairs()), keep(b.adj_pairs()));
}

namespace {

// Places b1's elements first, then the elements of b2 not in b1, and returns
// the merged names with index maps for both inputs.
struct Merged {
  std::vector<std::string> names;
  std::vector<Element> from1, from2;
  std::vector<Element> shared;  // indices in the merged numbering
};

Merged merge_names(const BurlingSet& b1, const BurlingSet& b2) {
  Merged m;
  m.names = b1.names();
  m.from1.resize(b1.size());
  for (Element i = 0; i < b1.size(); ++i) m.from1[i] = i;
  m.from2.resize(b2.size());
  for (Element i = 0; i < b2.size(); ++i) {
    if (auto j = b1.find(b2.name(i))) {
      m.from2[i] = *j;
      m.shared.push_back(*j);
    } else {
      m.from2[i] = static_cast<Element>(m.names.size());
      m.names.push_back(b2.name(i));
    }
  }
  std::sort(m.shared.begin(), m.shared.end());
  return m;
}

void append_mapped(std::vector<ElementPair>& out, const std::vector<ElementPair>& pairs,
                   const std::vector<Element>& map) {
  for (const auto& [x, y] : pairs) out.emplace_back(map[x], map[y]);
}

}  // namespace

BurlingSet outer_join(const BurlingSet& b1, const BurlingSet& b2, std::string_view q) {
  auto q1 = b1.find(q);
  auto q2 = b2.find(q);
  if (!q1 || !q2) contract("outer_join: q must be an element of both sets");
  Merged m = merge_names(b1, b2);
  if (m.shared.size() != 1) contract("outer_join: the sets must share exactly the element q");
  if (!is_root(b1, *q1)) contract("outer_join: q must be a root of the first set");
  if (!is_exposed(b2, *q2)) contract("outer_join: q must be exposed in the second set");

  std::vector<ElementPair> prec, adj;
  append_mapped(prec, b1.prec_pairs(), m.from1);
  append_mapped(prec, b2.prec_pairs(), m.from2);
  append_mapped(adj, b1.adj_pairs(), m.from1);
  append_mapped(adj, b2.adj_pairs(), m.from2);
  return BurlingSet(std::move(m.names), std::move(prec), std::move(adj));
}

BurlingSet inner_join(const BurlingSet& b1, const BurlingSet& b2,
                      std::span<const std::string> s2_prime) {
  Merged m = merge_names(b1, b2);
  if (m.shared.empty()) contract("inner_join: the sets must share at least one element");

  std::vector<Element> target;  // s2_prime as b2 indices
  for (const auto& name : s2_prime) {
    auto y = b2.find(name);
    if (!y) contract("inner_join: s2_prime must be a subset of the second set");
    target.push_back(*y);
  }
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());

  for (Element s : m.shared) {
    Element in2 = *b2.find(b1.name(s));
    if (!is_probe(b1, s)) contract("inner_join: shared element '" + b1.name(s) + "' is not a probe of the first set");
    if (!is_probe(b2, in2)) contract("inner_join: shared element '" + b1.name(s) + "' is not a probe of the second set");
    std::vector<Element> succ(b2.adj_out(in2).begin(), b2.adj_out(in2).end());
    if (succ != target) {
      contract("inner_join: s2_prime differs from the ⊣-successors of shared element '" + b1.name(s) + "'");
    }
  }

  std::vector<ElementPair> prec, adj;
  append_mapped(prec, b1.prec_pairs(), m.from1);
  append_mapped(prec, b2.prec_pairs(), m.from2);
  append_mapped(adj, b1.adj_pairs(), m.from1);
  append_mapped(adj, b2.adj_pairs(), m.from2);
  for (Element x = 0; x < b1.size(); ++x) {
    if (std::binary_search(m.shared.begin(), m.shared.end(), x)) continue;
    for (Element y : target) prec.emplace_back(x, m.from2[y]);
  }
  return BurlingSet(std::move(m.names), std::move(prec), std::move(adj));
}

}  // namespace burling
