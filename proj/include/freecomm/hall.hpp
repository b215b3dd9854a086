#pragma once

// Embedding of the tower into the commensurator of F(x, y).
//
// J_k = j0 o m_1 o ... o m_k sends the rank |G_k|+1 rose group onto a
// finite-index subgroup H_k of F(x, y), and g in G_k acts on H_k by
// permuting the basis J_k(a_x).  embed(k, g) is that action as a virtual
// automorphism, on the basis J_k(a_x) (not the canonical basis of H_k).
// With the default j0, J_k(a_x) = x^e y x^-e for the e-th generator and
// J_k(a_*) = x^|G_k|.

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "freecomm/tower.hpp"
#include "freecomm/virtual_aut.hpp"

namespace freecomm {

class HallTower {
 public:
  explicit HallTower(TowerConfig config = TowerConfig::defaults());
  HallTower(const HallTower&) = delete;
  HallTower& operator=(const HallTower&) = delete;

  const Tower& tower() const noexcept { return tower_; }
  std::size_t max_level() const noexcept { return tower_.max_level(); }

  // Levels above max_level() throw level_too_large.  Built on first use.
  const Injection& big_j(std::size_t k) const;
  const Subgroup& subgroup(std::size_t k) const;

  VirtualAut embed(std::size_t k, ElementId g) const;

 private:
  struct Level {
    Injection j;
    std::shared_ptr<const Subgroup> h;
    std::shared_ptr<const Rewriter> rewriter;
    std::shared_ptr<const std::vector<Word>> basis;
  };
  const Level& level(std::size_t k) const;

  Tower tower_;
  mutable std::array<std::once_flag, Tower::enumerated_levels> once_;
  mutable std::array<std::optional<Level>, Tower::enumerated_levels> levels_;
};

// An element of the colimit U of the tower: a residue at level 0 or a
// permutation of U(G_{level-1}) at levels 1..3.  Level 3 elements permute
// the 720 points of G_2.
struct UElement {
  std::size_t level = 0;
  ElementId residue = 0;
  Perm perm;

  static UElement base(ElementId residue) { return {0, residue, {}}; }
  static UElement at(std::size_t level, Perm perm) { return {level, 0, std::move(perm)}; }

  bool operator==(const UElement&) const = default;
};

inline constexpr std::size_t max_u_level = 3;

// Throws invalid_element or level_too_large.
void u_validate(const Tower& tower, const UElement& e);
// Pushes down while the permutation is a left translation.
UElement u_normalize(const Tower& tower, UElement e);
// Lifts both to the higher level, multiplies, normalizes.
UElement u_multiply(const Tower& tower, const UElement& a, const UElement& b);
std::string to_string(const UElement& e);

// Multiplication table of a finite group on {0, ..., n-1}.
using GroupTable = std::vector<std::vector<std::uint32_t>>;

inline constexpr std::size_t max_embedded_order = 6;

// The regular representation of the group on the first n points of U(G_1),
// as normalized elements of U.  Throws invalid_table or order_too_large.
std::vector<UElement> embed_finite_group(const Tower& tower, const GroupTable& table);

// s in G_{k+1} with s ell(a_i) s^-1 = ell(b_i), where a_i -> b_i extends to
// an isomorphism <a> -> <b> of subgroups of G_k.  Throws not_subgroups for
// elements outside G_k and not_isomorphic otherwise.
Perm hall_conjugator(const Tower& tower, std::size_t k, std::span<const ElementId> a,
                     std::span<const ElementId> b);

}  // namespace freecomm
