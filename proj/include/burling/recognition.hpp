#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>

#include "burling/burling_set.hpp"
#include "burling/graph.hpp"

namespace burling {

/// Identifies a subproblem of the recognition dynamic program.
///
/// X is encoded by its centre (X = N[center]) or by no centre (X = ∅); S by
/// its minimum vertex, which pins it down because S is a component of V - X
/// (unrooted) or of V - (X ∪ {root}) (rooted).
struct SubproblemKey {
  enum class Kind : std::uint8_t { kUnrooted, kRooted };

  Kind kind = Kind::kUnrooted;
  std::optional<Vertex> x_center;
  std::optional<Vertex> root;
  Vertex s_id = 0;

  std::uint64_t packed() const noexcept;
  friend bool operator==(const SubproblemKey&, const SubproblemKey&) = default;
};

/// A Burling set on N[S] whose adjacency graph is G[N[S]].
struct BurlingStructure {
  VertexSet around;    // S
  VertexSet elements;  // N[S]; element i of `structure` is vertex elements[i]
  BurlingSet structure;
};

struct RecognizerOptions {
  // Rebuild and check every solved subproblem (axioms, induced subgraph,
  // probe/root postconditions). Expensive; meant for tests.
  bool check_entries = false;
};

/// Memoised solver for the Unrooted(X, S) and Rooted(X, r, S) subproblems
/// over one triangle-free graph.
///
/// Subproblems are solved on demand: a subproblem is only evaluated once all
/// the strictly smaller subproblems it consults are solved, and both answers
/// (solution or failure) are cached.
class Recognizer {
 public:
  // Throws InputError if `g` contains a triangle. Keeps a reference to `g`.
  explicit Recognizer(const Graph& g, RecognizerOptions options = {});
  ~Recognizer();
  Recognizer(const Recognizer&) = delete;
  Recognizer& operator=(const Recognizer&) = delete;

  /// Burling structure around `s` in which N(s) is a set of probes.
  /// Requires `s` to be a component of V - X.
  std::optional<BurlingStructure> solve_unrooted(std::optional<Vertex> x_center, const VertexSet& s);

  /// Burling structure around `s` with `root` a root and N(s) - {root} a set
  /// of probes. Requires root ∉ X and `s` to be a component of
  /// V - (X ∪ {root}) containing a neighbour of `root`.
  std::optional<BurlingStructure> solve_rooted(std::optional<Vertex> x_center, Vertex root,
                                               const VertexSet& s);

  /// Burling set over all of V, or nothing if the graph is not a Burling graph.
  std::optional<BurlingSet> recognize();

  // Distinct subproblems evaluated so far.
  std::size_t subproblem_count() const noexcept;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

struct RecognitionStats {
  std::size_t subproblems = 0;
};

/// Decides whether `g` is a Burling graph; if so returns a Burling set over
/// its vertices (elements named "0".."n-1") whose adjacency graph is `g`.
std::optional<BurlingSet> recognize(const Graph& g, RecognitionStats* stats = nullptr);

}  // namespace burling
