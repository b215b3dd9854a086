#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "freecomm/core_graph.hpp"
#include "freecomm/word.hpp"

namespace freecomm {

// A finitely generated subgroup of a free group, held as its Stallings core
// graph together with the canonical free basis read off a BFS spanning tree.
//
// Canonical basis: the tree is the BFS discovery tree of CoreGraph (generators
// ascending, outgoing before incoming).  Scanning vertices in BFS order with
// the same edge order, each non-tree edge yields one basis element
// tree_path(u) . letter . tree_path(v)^-1 at its first encounter.
class Subgroup {
 public:
  // The trivial subgroup of the free group of the given rank.
  explicit Subgroup(std::size_t ambient_rank);
  explicit Subgroup(CoreGraph graph);

  static Subgroup from_generators(std::size_t ambient_rank, std::span<const Word> gens);
  static Subgroup from_generators(std::size_t ambient_rank,
                                  std::initializer_list<Word> gens) {
    return from_generators(ambient_rank, std::span<const Word>(gens.begin(), gens.size()));
  }
  static Subgroup whole(std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return graph_.rank(); }
  const CoreGraph& graph() const noexcept { return graph_; }
  const std::vector<Word>& basis() const noexcept { return basis_; }
  std::size_t rank() const noexcept { return basis_.size(); }

  bool is_complete() const noexcept { return graph_.is_complete(); }
  // Number of cosets, or nullopt for infinite index.
  std::optional<std::size_t> index() const {
    return is_complete() ? std::optional<std::size_t>(graph_.vertex_count()) : std::nullopt;
  }

  bool contains(const Word& w) const;

  // The word in basis letters whose substitution by the basis gives `w`.
  // Throws not_a_member.
  Word express_in_basis(const Word& w) const;

  // Graphs are canonical, so this is subgroup equality.
  bool operator==(const Subgroup& other) const { return graph_ == other.graph_; }

  // Tree path from the basepoint to each vertex.
  const std::vector<Word>& tree_paths() const noexcept { return tree_path_; }
  // Basis letter carried by traversing out-slot (v, gen) forwards, encoded
  // as +(i+1) / -(i+1); 0 for tree edges and missing slots.
  std::int32_t slot_letter(std::uint32_t v, std::uint32_t gen) const {
    return slot_letter_[v * graph_.rank() + gen];
  }

 private:
  void derive_basis();

  CoreGraph graph_;
  std::vector<Word> basis_;
  std::vector<Word> tree_path_;
  std::vector<std::int32_t> slot_letter_;
};

// Same thing as from_generators; the name used for images of injections.
inline Subgroup image_subgroup(std::size_t ambient_rank, std::span<const Word> images) {
  return Subgroup::from_generators(ambient_rank, images);
}

// Basepoint component of the product automaton, trimmed to its core.
Subgroup intersect(const Subgroup& a, const Subgroup& b);

// Expresses members of a subgroup in a chosen free basis of it.
//
// Built by folding the basis with witness tracking; each edge of the core
// graph carries a word over the basis alphabet and the witness product along
// a basepoint loop is the loop's expression.
class Rewriter {
 public:
  // Throws not_a_basis when `gens` does not freely generate.
  static Rewriter from_generators(std::size_t ambient_rank, std::span<const Word> gens);
  // Rewriter for the canonical basis of `sub`.
  static Rewriter from_subgroup(const Subgroup& sub);

  // Same subgroup, basis reindexed: old basis letter i becomes new_index[i].
  Rewriter relabeled(std::span<const std::uint32_t> new_index) const;

  std::size_t basis_size() const noexcept { return basis_size_; }
  const CoreGraph& graph() const noexcept { return graph_; }

  std::optional<Word> try_express(const Word& w) const;
  // Throws not_a_member.
  Word express(const Word& w) const;

 private:
  Rewriter(CoreGraph graph, std::vector<Word> witness, std::size_t basis_size)
      : graph_(std::move(graph)), witness_(std::move(witness)), basis_size_(basis_size) {}

  CoreGraph graph_;
  std::vector<Word> witness_;
  std::size_t basis_size_;
};

// `w` as a word in `gens`; throws not_a_member or not_a_basis.
Word express_in_generators(std::size_t ambient_rank, std::span<const Word> gens,
                           const Word& w);

}  // namespace freecomm
