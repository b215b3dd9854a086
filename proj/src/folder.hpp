#pragma once

// Stallings folding engine shared by fold(), Subgroup::from_generators and
// Rewriter::from_generators.
//
// Optionally tracks witnesses: every edge carries a word over a second
// ("witness") alphabet, and every vertex a cost relative to its union-find
// root, such that the product of witnesses along any basepoint loop is the
// same before and after each fold.  Reading generator i as a petal with
// witness g_i therefore yields, after folding, a graph whose loop witnesses
// express each member in the generators.

#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <vector>

#include "freecomm/core_graph.hpp"
#include "freecomm/word.hpp"

namespace freecomm::detail {

class Folder {
 public:
  // `vertex_count` initial vertices, of which `base` is the basepoint.
  // Witnesses are tracked iff `witness_rank` is set.
  Folder(std::size_t rank, std::size_t vertex_count, std::uint32_t base,
         std::optional<std::size_t> witness_rank = std::nullopt,
         std::optional<std::uint64_t> seed = std::nullopt);

  std::uint32_t add_vertex();

  // Adds edge src --gen--> dst with the given witness (ignored when not
  // tracking) and folds to completion.
  void add_edge(std::uint32_t src, std::uint32_t gen, std::uint32_t dst, Word witness = {});

  // Adds a basepoint loop spelling `w`, reusing whatever prefix and suffix
  // the current graph can already read, then folds to completion.
  void add_loop(const Word& w, Word witness = {});

  // Two distinct witnesses were forced onto the same loop, i.e. the
  // generators satisfy a nontrivial relation.
  bool relation_found() const noexcept { return relation_found_; }

  struct Result {
    CoreGraph graph;
    // Witness of each out-slot (v * rank + gen) of `graph`; empty when not
    // tracking.
    std::vector<Word> witness;
  };
  Result finish() const;

 private:
  struct Edge {
    std::uint32_t src;
    std::uint32_t gen;
    std::uint32_t dst;
    Word witness;  // cost of traversing src -> dst
    bool alive;
  };
  struct PendingMerge {
    std::uint32_t u;
    std::uint32_t v;
    Word cost;  // cost of going from u to v
  };

  std::uint32_t find(std::uint32_t x);
  // Root of x and the cost of going from that root to x.
  std::pair<std::uint32_t, Word> find_with_cost(std::uint32_t x);

  Word mul(const Word& a, const Word& b) const;
  Word inv(const Word& a) const;
  Word traverse_cost(std::int32_t edge, bool backwards) const;

  void attach(std::uint32_t src, std::uint32_t gen, std::uint32_t dst, Word witness);
  void merge(std::uint32_t u, std::uint32_t v, Word cost);
  void kill(std::int32_t edge);
  void drain();

  std::int32_t& out(std::uint32_t v, std::uint32_t gen) { return out_[v * rank_ + gen]; }
  std::int32_t& in(std::uint32_t v, std::uint32_t gen) { return in_[v * rank_ + gen]; }

  std::size_t rank_;
  std::uint32_t base_;
  bool track_;
  std::size_t witness_rank_;
  std::optional<std::mt19937_64> rng_;

  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<Word> pot_;  // cost from parent to vertex
  std::vector<std::int32_t> out_;
  std::vector<std::int32_t> in_;
  std::vector<Edge> edges_;
  std::deque<PendingMerge> pending_;
  bool relation_found_ = false;
};

}  // namespace freecomm::detail
