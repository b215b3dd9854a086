#pragma once

// The tower G_0 = Z/3, G_{k+1} = Sym(G_k), with left-regular embeddings
// ell: G_k -> G_{k+1}, and the free-group maps between the roses on the
// generators {a_g : g in G_k} + {a_*}.
//
// Elements are identified by their position in a fixed enumeration: residues
// 0 < 1 < 2 at level 0, lexicographic one-line order at levels 1 and 2.  The
// identity is element 0 at every level.  Levels 0..2 are enumerated; level 3
// elements exist only as Perms of degree 720 (see hall.hpp).

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freecomm/perm.hpp"
#include "freecomm/subgroup.hpp"
#include "freecomm/word.hpp"

namespace freecomm {

using ElementId = std::uint32_t;

// Key-value text, one `key = value` per line, `#` comments:
//
//   g0 = Z3
//   max_level = 2
//   j0 = y, x.y.x^-1, x.x.y.x^-1.x^-1, x.x.x
//   transversal.1 = (), (01)
//
// Only Z3 is accepted for g0.  `transversal.<k>` (k = 1, 2) replaces the
// greedy-lexicographic coset representatives of ell(G_{k-1}) in G_k.
struct TowerConfig {
  std::size_t max_level = 2;
  std::vector<Word> j0;
  std::map<std::size_t, std::vector<Perm>> transversal;

  static TowerConfig defaults();
  // Throws invalid_config.
  static TowerConfig parse(std::string_view text);
  static TowerConfig load(const std::filesystem::path& path);

  // Normalized text form; equal configurations give equal text.
  std::string canonical_text() const;
  // FNV-1a of canonical_text(), as 16 hex digits.
  std::string digest() const;
};

// A homomorphism between free groups given by the images of the source
// generators.
struct Injection {
  std::size_t source_rank = 0;
  std::size_t target_rank = 0;
  std::vector<Word> images;

  Word apply(const Word& w) const { return substitute(w, images, target_rank); }
  Subgroup image() const { return image_subgroup(target_rank, images); }
  // The images freely generate their subgroup, so the map is injective.
  bool is_injective() const { return image().rank() == source_rank; }

  bool operator==(const Injection&) const = default;
};

// outer after inner.  Throws arity_mismatch.
Injection compose(const Injection& outer, const Injection& inner);

class Tower {
 public:
  static constexpr std::size_t enumerated_levels = 3;

  // Throws invalid_config for a bad transversal or j0.
  explicit Tower(TowerConfig config = TowerConfig::defaults());

  const TowerConfig& config() const noexcept { return config_; }
  std::size_t max_level() const noexcept { return config_.max_level; }

  // |G_k| for k <= 2.  Throws level_too_large.
  std::size_t order(std::size_t k) const;

  ElementId multiply(std::size_t k, ElementId a, ElementId b) const;
  ElementId inverse(std::size_t k, ElementId a) const;

  // The permutation of U(G_{k-1}) that element `id` of G_k is (k = 1, 2).
  const Perm& element(std::size_t k, ElementId id) const;
  // Inverse of element(); throws invalid_element.
  ElementId index_of(std::size_t k, const Perm& p) const;

  // Residue at level 0, cycle notation above.
  std::string element_name(std::size_t k, ElementId id) const;
  // Throws malformed_input or invalid_element.
  ElementId parse_element(std::size_t k, std::string_view text) const;

  // Generators a_<name> for each element of G_k, then a_*.
  Alphabet alphabet(std::size_t k) const;
  std::size_t star(std::size_t k) const { return order(k); }

  // x -> g.x on U(G_k), an element of G_{k+1} (k <= 2).
  Perm ell(std::size_t k, ElementId g) const;
  // h with sigma = ell(h), where sigma permutes U(G_k).
  std::optional<ElementId> is_translation(std::size_t k, const Perm& sigma) const;

  // Right coset representatives c_0 = e, ..., c_{n-1} of ell(G_{k-1}) in G_k.
  const std::vector<ElementId>& transversal(std::size_t k) const;
  // (h, j) with sigma = ell(h) o c_j.
  std::pair<ElementId, std::size_t> coset_decompose(std::size_t k, ElementId sigma) const;

  // a_x -> a_{g.x}, a_* -> a_*.
  Injection alpha(std::size_t k, ElementId g) const;
  // a_sigma -> a_*^j a_h a_*^-j for sigma = ell(h) c_j, a_* -> a_*^n (k = 1, 2).
  Injection m_map(std::size_t k) const;
  // Level-0 generators into {x, y}.
  Injection j0() const;

  // The table of m_map(k), one `a_<ell(h)><c_j> -> <image>` line per
  // generator ordered by (j, h), then the line for a_*.
  std::string m_map_table(std::size_t k) const;

 private:
  void check_level(std::size_t k, std::size_t lo = 0) const;
  void check_element(std::size_t k, ElementId id) const;
  void build_transversal(std::size_t k);

  TowerConfig config_;
  std::vector<Perm> elements_[enumerated_levels];
  // mult_[k][a * |G_k| + b] = a.b
  std::vector<std::uint16_t> mult_[enumerated_levels];
  std::vector<ElementId> inverse_[enumerated_levels];
  std::vector<ElementId> transversal_[enumerated_levels];
  std::vector<std::pair<ElementId, std::uint32_t>> decomposition_[enumerated_levels];
};

}  // namespace freecomm
