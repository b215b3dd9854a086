#pragma once

// Freely reduced words over a ranked alphabet.
//
// Letters are (generator index, sign) pairs rather than characters, since the
// alphabets used here reach several hundred generators.  Every stored Word is
// freely reduced, so equality is plain sequence comparison.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace freecomm {

struct Letter {
  std::uint32_t gen = 0;
  bool inv = false;

  constexpr Letter inverse() const noexcept { return {gen, !inv}; }
  constexpr bool cancels(Letter other) const noexcept {
    return gen == other.gen && inv != other.inv;
  }

  constexpr bool operator==(const Letter&) const = default;
  constexpr auto operator<=>(const Letter&) const = default;
};

constexpr Letter pos(std::uint32_t gen) { return {gen, false}; }
constexpr Letter neg(std::uint32_t gen) { return {gen, true}; }

// Generator count plus optional display names.  Names are presentation
// only; `g<i>` is always accepted by the parser as well.
class Alphabet {
 public:
  explicit Alphabet(std::size_t rank);
  Alphabet(std::size_t rank, std::vector<std::string> names);

  // The two-generator alphabet {x, y} used for the ambient free group.
  static Alphabet free2();

  std::size_t rank() const noexcept { return rank_; }
  std::string name(std::size_t gen) const;
  std::optional<std::uint32_t> lookup(std::string_view name) const;

 private:
  std::size_t rank_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> by_name_;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::size_t rank) : rank_(rank) {}

  // Freely reduces `raw`; throws malformed_input when a generator index is
  // not below `rank`.
  static Word reduce(std::size_t rank, std::span<const Letter> raw);
  static Word reduce(std::size_t rank, std::initializer_list<Letter> raw) {
    return reduce(rank, std::span<const Letter>(raw.begin(), raw.size()));
  }
  static Word generator(std::size_t rank, std::uint32_t gen, bool inv = false);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const Letter> letters() const noexcept { return letters_; }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  friend class WordBuilder;
  std::size_t rank_ = 0;
  std::vector<Letter> letters_;
};

// Appends letters with free cancellation at the seam, so the contents are
// always reduced.
class WordBuilder {
 public:
  explicit WordBuilder(std::size_t rank) : rank_(rank) {}

  void push(Letter l) {
    if (!letters_.empty() && letters_.back().cancels(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
  // Throws alphabet_mismatch when `w` is over a different rank.
  void append(const Word& w);
  void append_inverse(const Word& w);

  std::size_t size() const noexcept { return letters_.size(); }
  Word build() &&;

 private:
  std::size_t rank_;
  std::vector<Letter> letters_;
};

Word concat(const Word& u, const Word& v);
Word concat(std::initializer_list<std::reference_wrapper<const Word>> parts);
Word invert(const Word& w);
Word power(const Word& w, int exponent);

// Image of `w` under the homomorphism generator i -> images[i].  The target
// rank is taken from the images unless given; it must be given when there
// are no images (a map out of the trivial group).
Word substitute(const Word& w, std::span<const Word> images,
                std::optional<std::size_t> target_rank = std::nullopt);

// Text form: generators by display name or `g<i>`, inverse as trailing
// `^-1`, letters separated by `.`, and the empty word as `1`.
std::string format(const Word& w, const Alphabet& alphabet);
std::string format(const Word& w);
Word parse_word(std::string_view text, const Alphabet& alphabet);

}  // namespace freecomm

template <>
struct std::hash<freecomm::Word> {
  std::size_t operator()(const freecomm::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ULL ^ w.rank();
    for (auto l : w) {
      h = (h ^ (2 * std::size_t{l.gen} + l.inv)) * 1099511628211ULL;
    }
    return h;
  }
};
