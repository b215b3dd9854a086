#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace freecomm {

// A permutation of {0, ..., n-1} in one-line notation.
class Perm {
 public:
  Perm() = default;

  static Perm identity(std::size_t degree);
  // Throws invalid_element unless `images` is a bijection.
  static Perm from_images(std::vector<std::uint32_t> images);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  bool operator==(const Perm&) const = default;
  auto operator<=>(const Perm&) const = default;

 private:
  explicit Perm(std::vector<std::uint32_t> images) : images_(std::move(images)) {}
  std::vector<std::uint32_t> images_;
};

// (s o t)(x) = s(t(x)).  Throws degree_mismatch.
Perm compose(const Perm& s, const Perm& t);
Perm inverse(const Perm& p);

// Position of `p` among all permutations of its degree in lexicographic
// order of one-line notation.
std::uint64_t lex_rank(const Perm& p);

// Disjoint cycles, each starting at its least point, ordered by that point;
// fixed points omitted and the identity written "()".  Points are single
// digits up to degree 10 and comma-separated above.
std::string to_cycles(const Perm& p);

// Product of juxtaposed cycles, e.g. "(021)(01)" = (021) o (01).
// Whitespace-insensitive.  Throws malformed_input or invalid_element.
Perm parse_cycles(std::string_view text, std::size_t degree);

}  // namespace freecomm
