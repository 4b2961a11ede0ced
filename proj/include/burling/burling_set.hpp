#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "burling/graph.hpp"

namespace burling {

using Element = std::uint32_t;

// (x, y) reads "x ≺ y" or "x ⊣ y" depending on the relation it belongs to.
using ElementPair = std::pair<Element, Element>;

/// A candidate Burling set: named elements plus the relations ≺ (prec) and
/// ⊣ (adj) over them.
///
/// Construction only checks that the pairs reference declared elements; the
/// axioms are checked separately by verify_axioms(), since sets read from
/// files are untrusted. Elements are dense indices 0..size()-1 internally and
/// carry unique non-empty names at the boundary.
class BurlingSet {
 public:
  BurlingSet() = default;

  // Throws InputError on empty or duplicate names and dangling pair indices.
  BurlingSet(std::vector<std::string> names, std::vector<ElementPair> prec,
             std::vector<ElementPair> adj);

  // Elements named "0", "1", ..., matching graph vertex indices.
  static BurlingSet numbered(std::size_t n, std::vector<ElementPair> prec,
                             std::vector<ElementPair> adj);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(Element x) const { return names_[x]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Element> find(std::string_view name) const;

  bool prec(Element x, Element y) const noexcept { return cell(x, y) & kPrec; }
  bool adj(Element x, Element y) const noexcept { return cell(x, y) & kAdj; }
  // x R y for R = ≺ ∪ ⊣.
  bool related(Element x, Element y) const noexcept { return cell(x, y) != 0; }

  // Sorted, duplicate-free.
  const std::vector<ElementPair>& prec_pairs() const noexcept { return prec_pairs_; }
  const std::vector<ElementPair>& adj_pairs() const noexcept { return adj_pairs_; }

  std::span<const Element> prec_out(Element x) const noexcept { return prec_out_[x]; }
  std::span<const Element> prec_in(Element x) const noexcept { return prec_in_[x]; }
  std::span<const Element> adj_out(Element x) const noexcept { return adj_out_[x]; }
  std::span<const Element> adj_in(Element x) const noexcept { return adj_in_[x]; }

  // Same element names and the same related name pairs, regardless of the
  // order in which elements are stored.
  friend bool operator==(const BurlingSet& a, const BurlingSet& b);

 private:
  static constexpr std::uint8_t kPrec = 1;
  static constexpr std::uint8_t kAdj = 2;

  std::uint8_t cell(Element x, Element y) const noexcept {
    return matrix_[static_cast<std::size_t>(x) * names_.size() + y];
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<ElementPair> prec_pairs_;
  std::vector<ElementPair> adj_pairs_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::vector<Element>> prec_out_, prec_in_, adj_out_, adj_in_;
};

struct AxiomViolation {
  // "A1".."A5", "irreflexive", "adj-acyclic", "R-acyclic" or "nonempty".
  std::string axiom;
  std::vector<Element> witness;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool violates(std::string_view axiom) const;
  // One line per violation, witnesses spelled with element names.
  std::string describe(const BurlingSet& b) const;
};

/// Checks that ≺ is a strict partial order (irreflexive, A5), that ⊣ is
/// acyclic, axioms A1–A4, and acyclicity of ≺ ∪ ⊣. Reports at most a bounded
/// number of witnesses per axiom.
AxiomReport verify_axioms(const BurlingSet& b);

struct ElementClassification {
  std::vector<Element> roots;    // no outgoing ≺ or ⊣
  std::vector<Element> probes;   // no outgoing ≺, no incoming ≺, no incoming ⊣
  std::vector<Element> exposed;  // no outgoing ≺
};

ElementClassification classify_elements(const BurlingSet& b);

bool is_root(const BurlingSet& b, Element x);
bool is_probe(const BurlingSet& b, Element x);
bool is_exposed(const BurlingSet& b, Element x);

/// Graph on the elements with an edge xy whenever x ⊣ y or y ⊣ x.
Graph induced_graph(const BurlingSet& b);

/// Both relations restricted to `u`, elements kept in ascending index order.
BurlingSet restrict(const BurlingSet& b, std::span<const Element> u);

/// Union of two Burling sets sharing exactly the element `q`, a root of `b1`
/// and exposed in `b2`. Elements of b1 come first. Throws ContractError naming
/// the failed precondition.
BurlingSet outer_join(const BurlingSet& b1, const BurlingSet& b2, std::string_view q);

/// Union of two Burling sets whose common elements Q are probes of both, with
/// every q ∈ Q having exactly `s2_prime` as its ⊣-successors in b2. Adds
/// x ≺ y for every x ∈ b1 - b2 and y ∈ s2_prime. Elements of b1 come first.
/// Throws ContractError naming the failed precondition.
BurlingSet inner_join(const BurlingSet& b1, const BurlingSet& b2,
                      std::span<const std::string> s2_prime);

}  // namespace burling
