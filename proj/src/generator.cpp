#include "burling/generator.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "burling/errors.hpp"

namespace burling {

namespace {

constexpr std::size_t kMaxPiece = 12;
constexpr int kJoinAttempts = 4;

class Growth {
 public:
  Growth(std::uint64_t seed, double probe_bias, double join_mix)
      : rng_(seed), probe_bias_(probe_bias), join_mix_(join_mix) {}

  BurlingSet grow(std::size_t target) {
    BurlingSet b({fresh()}, {}, {});
    while (b.size() < target) {
      const std::size_t remaining = target - b.size();
      if (unit() < probe_bias_) {
        b = attach_probe(b);
      } else if (unit() < join_mix_) {
        b = join(b, remaining);
      } else if (unit() < 0.25) {
        b = add_isolated(b);
      } else {
        b = attach_probe(b);
      }
    }
    return b;
  }

 private:
  // Rejection sampling keeps the draw independent of the library's
  // distribution implementation.
  std::size_t below(std::size_t bound) {
    const std::uint64_t range = bound;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do {
      x = rng_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % range);
  }

  double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

  std::string fresh() { return "g" + std::to_string(counter_++); }

  static BurlingSet extend(const BurlingSet& b, std::string name, std::vector<ElementPair> extra_adj) {
    std::vector<std::string> names = b.names();
    names.push_back(std::move(name));
    std::vector<ElementPair> adj = b.adj_pairs();
    adj.insert(adj.end(), extra_adj.begin(), extra_adj.end());
    return BurlingSet(std::move(names), b.prec_pairs(), std::move(adj));
  }

  BurlingSet attach_probe(const BurlingSet& b) {
    const Element q = pick(classify_elements(b).exposed);
    const auto p = static_cast<Element>(b.size());
    return extend(b, fresh(), {{p, q}});
  }

  BurlingSet add_isolated(const BurlingSet& b) { return extend(b, fresh(), {}); }

  static BurlingSet rename(const BurlingSet& b, const std::map<Element, std::string>& names) {
    std::vector<std::string> renamed = b.names();
    for (const auto& [x, name] : names) renamed[x] = name;
    return BurlingSet(std::move(renamed), b.prec_pairs(), b.adj_pairs());
  }

  BurlingSet join(const BurlingSet& b, std::size_t remaining) {
    for (int attempt = 0; attempt < kJoinAttempts; ++attempt) {
      auto joined = below(2) == 0 ? try_outer(b, remaining) : try_inner(b, remaining);
      if (joined) return *joined;
    }
    return attach_probe(b);
  }

  // b becomes the exposed side; a fresh piece is hung on its renamed root.
  std::optional<BurlingSet> try_outer(const BurlingSet& b, std::size_t remaining) {
    const std::size_t size = 2 + below(std::min(remaining, kMaxPiece - 1));
    BurlingSet piece = grow(size);
    const Element q = pick(classify_elements(b).exposed);
    const Element root = pick(classify_elements(piece).roots);
    piece = rename(piece, {{root, b.name(q)}});
    return outer_join(piece, b, b.name(q));
  }

  // A fresh piece shares probes with b that all have the same ⊣-successors,
  // and is nested below those successors.
  std::optional<BurlingSet> try_inner(const BurlingSet& b, std::size_t remaining) {
    std::map<std::vector<Element>, std::vector<Element>> groups;
    for (Element p : classify_elements(b).probes) {
      auto succ = b.adj_out(p);
      groups[std::vector<Element>(succ.begin(), succ.end())].push_back(p);
    }
    std::vector<const std::vector<Element>*> keys;
    for (const auto& [succ, members] : groups) keys.push_back(&succ);
    const std::vector<Element>& succ = *pick(keys);
    std::vector<Element> members = groups[succ];

    const std::size_t shared = 1 + below(std::min<std::size_t>(members.size(), 3));
    const std::size_t size = shared + 1 + below(std::min(remaining, kMaxPiece - shared));
    BurlingSet piece = grow(size);
    std::vector<Element> piece_probes = classify_elements(piece).probes;
    if (piece_probes.size() < shared) return std::nullopt;

    std::map<Element, std::string> names;
    for (std::size_t i = 0; i < shared; ++i) {
      std::swap(members[i], members[i + below(members.size() - i)]);
      std::swap(piece_probes[i], piece_probes[i + below(piece_probes.size() - i)]);
      names[piece_probes[i]] = b.name(members[i]);
    }
    piece = rename(piece, names);
    std::vector<std::string> s2_prime;
    for (Element y : succ) s2_prime.push_back(b.name(y));
    return inner_join(piece, b, s2_prime);
  }

  std::mt19937_64 rng_;
  double probe_bias_;
  double join_mix_;
  std::size_t counter_ = 0;
};

}  // namespace

BurlingSet gen_burling(const GeneratorConfig& cfg) {
  if (cfg.target_size < 1) throw InputError("target_size must be at least 1");
  auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (!in_unit(cfg.probe_bias) || !in_unit(cfg.join_mix)) {
    throw InputError("probe_bias and join_mix must lie in [0, 1]");
  }

  Growth growth(cfg.seed, cfg.probe_bias, cfg.join_mix);
  BurlingSet grown = growth.grow(cfg.target_size);
  BurlingSet b = BurlingSet::numbered(grown.size(), grown.prec_pairs(), grown.adj_pairs());

  AxiomReport report = verify_axioms(b);
  if (!report.ok()) throw ContractError("gen_burling produced an invalid set:\n" + report.describe(b));
  return b;
}

}  // namespace burling
