#include "burling/frames.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "burling/errors.hpp"

namespace burling {

void check_frame_family(const FrameFamily& f) {
  std::unordered_set<std::string> ids;
  for (const auto& frame : f) {
    if (frame.id.empty()) throw InputError("frame ids must be non-empty");
    if (!ids.insert(frame.id).second) throw InputError("duplicate frame id '" + frame.id + "'");
    if (!(frame.l < frame.r) || !(frame.b < frame.t)) {
      throw InputError("frame '" + frame.id + "' needs l < r and b < t");
    }
  }
}

HorizontalOrder horizontal_order(const BurlingSet& b, bool linear) {
  const std::size_t n = b.size();
  auto left = [](Element x) { return 2 * x; };
  auto right = [](Element x) { return 2 * x + 1; };

  std::vector<std::vector<std::uint32_t>> out(2 * n);
  std::vector<std::uint32_t> indegree(2 * n, 0);
  std::size_t count = 0;
  auto less = [&](std::uint32_t lo, std::uint32_t hi) {
    out[lo].push_back(hi);
    ++indegree[hi];
    ++count;
  };

  std::vector<ElementPair> related = b.prec_pairs();
  related.insert(related.end(), b.adj_pairs().begin(), b.adj_pairs().end());

  // The ≺-largest ⊣-successor of each element; A2 makes them a ≺-chain.
  std::vector<std::optional<Element>> top_adj(n);
  for (Element z = 0; z < n; ++z) {
    for (Element x : b.adj_out(z)) {
      if (!top_adj[z] || b.prec(*top_adj[z], x)) top_adj[z] = x;
    }
  }

  for (Element x = 0; x < n; ++x) less(left(x), right(x));
  for (const auto& [y, x] : related) {
    less(left(x), left(y));
    less(left(y), right(x));
  }
  for (const auto& [x, y] : b.prec_pairs()) less(right(x), right(y));
  for (const auto& [y, x] : b.adj_pairs()) less(right(x), right(y));
  for (const auto& [y, z] : related) {
    if (linear) {
      if (top_adj[z]) less(right(*top_adj[z]), left(y));
    } else {
      for (Element x : b.adj_out(z)) less(right(x), left(y));
    }
  }

  std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
  for (std::uint32_t s = 0; s < 2 * n; ++s) {
    if (indegree[s] == 0) ready.push(s);
  }
  std::vector<Coord> value(2 * n, 0);
  Coord next = 1;
  while (!ready.empty()) {
    std::uint32_t s = ready.top();
    ready.pop();
    value[s] = next++;
    for (std::uint32_t t : out[s]) {
      if (--indegree[t] == 0) ready.push(t);
    }
  }
  if (next != static_cast<Coord>(2 * n + 1)) {
    throw ContractError("horizontal_order: the constraint system has a cycle");
  }

  HorizontalOrder h;
  h.left.resize(n);
  h.right.resize(n);
  for (Element x = 0; x < n; ++x) {
    h.left[x] = value[left(x)];
    h.right[x] = value[right(x)];
  }
  h.constraints = count;
  return h;
}

VerticalOrder vertical_order(const BurlingSet& b) {
  const std::size_t n = b.size();
  std::vector<std::vector<Element>> children(n);
  std::vector<Element> roots;
  std::vector<Element> succ;
  for (Element x = 0; x < n; ++x) {
    succ.assign(b.prec_out(x).begin(), b.prec_out(x).end());
    succ.insert(succ.end(), b.adj_out(x).begin(), b.adj_out(x).end());
    if (succ.empty()) {
      roots.push_back(x);
      continue;
    }
    std::optional<Element> parent;
    for (Element z : succ) {
      bool direct = std::none_of(succ.begin(), succ.end(), [&](Element y) { return b.related(y, z); });
      if (!direct) continue;
      if (parent) {
        throw ContractError("vertical_order: element '" + b.name(x) + "' has more than one parent");
      }
      parent = z;
    }
    if (!parent) throw ContractError("vertical_order: element '" + b.name(x) + "' has no parent");
    children[*parent].push_back(x);
  }

  VerticalOrder v;
  v.bottom.assign(n, 0);
  v.top.assign(n, 0);
  Coord clock = 0;
  std::vector<std::pair<Element, std::size_t>> stack;
  for (Element root : roots) {
    v.bottom[root] = ++clock;
    stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto& [x, next] = stack.back();
      if (next == children[x].size()) {
        v.top[x] = ++clock;
        stack.pop_back();
        continue;
      }
      Element c = children[x][next++];
      v.bottom[c] = ++clock;
      stack.emplace_back(c, 0);
    }
  }
  if (clock != static_cast<Coord>(2 * n)) {
    throw ContractError("vertical_order: the parent relation is not a forest");
  }
  return v;
}

FrameFamily build_frames(const BurlingSet& b, bool linear) {
  HorizontalOrder h = horizontal_order(b, linear);
  VerticalOrder v = vertical_order(b);
  FrameFamily f(b.size());
  for (Element x = 0; x < b.size(); ++x) {
    f[x] = Frame{b.name(x), h.left[x], h.right[x], v.bottom[x], v.top[x]};
  }
  return f;
}

bool frames_intersect(const Frame& a, const Frame& b) {
  bool overlap = a.l <= b.r && b.l <= a.r && a.b <= b.t && b.b <= a.t;
  auto inside = [](const Frame& in, const Frame& out) {
    return out.l < in.l && in.r < out.r && out.b < in.b && in.t < out.t;
  };
  return overlap && !inside(a, b) && !inside(b, a);
}

namespace {

bool corner_on(Coord x, Coord y, const Frame& f) {
  bool on_vertical = (x == f.l || x == f.r) && f.b <= y && y <= f.t;
  bool on_horizontal = (y == f.b || y == f.t) && f.l <= x && x <= f.r;
  return on_vertical || on_horizontal;
}

// Frame j crosses out of frame i to the right, as in x ⊣ y with i = y, j = x.
bool crossing(const Frame& i, const Frame& j) {
  return i.l < j.l && j.l < i.r && i.r < j.r && i.b < j.b && j.b < j.t && j.t < i.t;
}

bool nested(const Frame& in, const Frame& out) {
  return out.l < in.l && in.l < in.r && in.r < out.r && out.b < in.b && in.b < in.t && in.t < out.t;
}

}  // namespace

std::string StrictReport::describe(const FrameFamily& f) const {
  std::ostringstream out;
  for (const auto& v : violations) {
    out << v.kind << ":";
    for (std::size_t i : v.frames) out << ' ' << (i < f.size() ? f[i].id : std::to_string(i));
    out << '\n';
  }
  return out.str();
}

StrictReport verify_strict(const FrameFamily& f) {
  check_frame_family(f);
  constexpr std::size_t kPerKind = 64;
  StrictReport report;
  std::size_t corners = 0, pairs = 0, triples = 0;
  const std::size_t n = f.size();

  for (std::size_t u = 0; u < n; ++u) {
    const Frame& a = f[u];
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      if (corner_on(a.l, a.b, f[v]) || corner_on(a.l, a.t, f[v]) || corner_on(a.r, a.b, f[v]) ||
          corner_on(a.r, a.t, f[v])) {
        if (corners++ < kPerKind) report.violations.push_back({"corner", {u, v}});
      }
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> crossings;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!frames_intersect(f[i], f[j])) continue;
      if (crossing(f[i], f[j])) {
        crossings.emplace_back(i, j);
      } else if (crossing(f[j], f[i])) {
        crossings.emplace_back(j, i);
      } else if (pairs++ < kPerKind) {
        report.violations.push_back({"pair", {i, j}});
      }
    }
  }

  for (const auto& [i, j] : crossings) {
    const Frame& fi = f[i];
    const Frame& fj = f[j];
    for (std::size_t k = 0; k < n; ++k) {
      const Frame& fk = f[k];
      if (fj.l < fk.l && fk.l < fi.r && fj.b < fk.b && fk.b < fk.t && fk.t < fj.t) {
        if (triples++ < kPerKind) report.violations.push_back({"triple", {i, j, k}});
      }
    }
  }
  return report;
}

BurlingSet extract_burling(const FrameFamily& f) {
  StrictReport report = verify_strict(f);
  if (!report.ok()) throw InputError("frame family is not strict:\n" + report.describe(f));
  std::vector<std::string> names;
  names.reserve(f.size());
  for (const auto& frame : f) names.push_back(frame.id);
  std::vector<ElementPair> prec, adj;
  for (Element x = 0; x < f.size(); ++x) {
    for (Element y = 0; y < f.size(); ++y) {
      if (x == y) continue;
      if (nested(f[x], f[y])) prec.emplace_back(x, y);
      if (crossing(f[y], f[x])) adj.emplace_back(x, y);
    }
  }
  return BurlingSet(std::move(names), std::move(prec), std::move(adj));
}

Graph intersection_graph(const FrameFamily& f) {
  check_frame_family(f);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < f.size(); ++u) {
    for (Vertex v = u + 1; v < f.size(); ++v) {
      if (frames_intersect(f[u], f[v])) edges.emplace_back(u, v);
    }
  }
  return Graph(f.size(), edges);
}

}  // namespace burling
