#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freecomm/word.hpp"

namespace freecomm {

// A folded, based, edge-labelled graph: the Stallings core automaton of a
// finitely generated subgroup of the free group of rank `rank()`.
//
// Vertices are numbered in canonical BFS order from the basepoint (vertex 0):
// generators ascending, outgoing before incoming.  Two core graphs of the same
// subgroup are therefore equal as values.
class CoreGraph {
 public:
  static constexpr std::uint32_t base = 0;

  // The trivial subgroup: a single vertex and no edges.
  explicit CoreGraph(std::size_t rank);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::optional<std::uint32_t> target(std::uint32_t v, std::uint32_t gen) const {
    auto t = out_[v * rank_ + gen];
    return t < 0 ? std::nullopt : std::optional<std::uint32_t>(t);
  }
  std::optional<std::uint32_t> source(std::uint32_t v, std::uint32_t gen) const {
    auto s = in_[v * rank_ + gen];
    return s < 0 ? std::nullopt : std::optional<std::uint32_t>(s);
  }
  std::optional<std::uint32_t> step(std::uint32_t v, Letter l) const {
    return l.inv ? source(v, l.gen) : target(v, l.gen);
  }
  // Endpoint of the path spelled by `w` from `from`, if it can be read.
  std::optional<std::uint32_t> trace(const Word& w, std::uint32_t from = base) const;

  // Every vertex has every transition in both directions.
  bool is_complete() const noexcept { return edge_count_ == vertex_count_ * rank_; }

  // Graphviz rendering; byte-stable for a given graph and alphabet.
  std::string dot(const Alphabet& alphabet) const;

  bool operator==(const CoreGraph&) const = default;

  // Builds the canonical core graph from a deterministic transition table
  // over arbitrary vertex ids (-1 marks a missing transition).  Keeps the
  // component of `base_vertex`, trims hanging trees, and renumbers by BFS.
  // `new_to_old`, when given, receives the original id of each vertex.
  static CoreGraph canonicalize(std::size_t rank, std::size_t vertex_count,
                                std::uint32_t base_vertex,
                                const std::vector<std::int32_t>& out,
                                std::vector<std::uint32_t>* new_to_old = nullptr);

 private:
  CoreGraph() = default;

  std::size_t rank_ = 0;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::int32_t> out_;
  std::vector<std::int32_t> in_;
};

// A labelled based graph that need not be deterministic.
struct PreAutomaton {
  struct Edge {
    std::uint32_t src;
    std::uint32_t gen;
    std::uint32_t dst;
  };

  std::size_t rank = 0;
  std::size_t vertex_count = 1;
  std::uint32_t base = 0;
  std::vector<Edge> edges;

  // One petal per word, glued at a common basepoint.
  static PreAutomaton wedge(std::size_t rank, std::span<const Word> words);
  static PreAutomaton from_core(const CoreGraph& g);
};

// Stallings folding.  With a seed, edges are attached and pending merges are
// processed in a shuffled order; the result does not depend on it.
CoreGraph fold(const PreAutomaton& pre, std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace freecomm
