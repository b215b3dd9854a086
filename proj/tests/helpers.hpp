#pragma once

#include <algorithm>
#include <random>
#include <string_view>
#include <vector>

#include "doctest.h"
#include "freecomm/core_graph.hpp"
#include "freecomm/error.hpp"
#include "freecomm/subgroup.hpp"
#include "freecomm/word.hpp"

namespace freecomm::test {

// Word over {x, y}.
inline Word xy(std::string_view text) { return parse_word(text, Alphabet::free2()); }

inline std::vector<Word> xy_list(std::initializer_list<std::string_view> texts) {
  std::vector<Word> out;
  for (auto t : texts) {
    out.push_back(xy(t));
  }
  return out;
}

// Uniformly random freely reduced word of exactly `length` letters.
inline Word random_reduced(std::mt19937_64& rng, std::size_t rank, std::size_t length) {
  std::uniform_int_distribution<std::uint32_t> gen(0, static_cast<std::uint32_t>(rank) - 1);
  std::bernoulli_distribution sign(0.5);
  WordBuilder b(rank);
  while (b.size() < length) {
    Letter l{gen(rng), sign(rng)};
    auto before = b.size();
    b.push(l);
    if (b.size() < before) {
      b.push(l.inverse());  // undo; redraw
    }
  }
  return std::move(b).build();
}

// Random word of length at most `max_length`.
inline Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  return random_reduced(rng, rank, len(rng));
}

// Every freely reduced word of length <= max_length.
inline std::vector<Word> all_reduced_words(std::size_t rank, std::size_t max_length) {
  std::vector<Word> out{Word(rank)};
  std::vector<std::vector<Letter>> layer{{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : layer) {
      for (std::uint32_t g = 0; g < rank; ++g) {
        for (bool inv : {false, true}) {
          Letter l{g, inv};
          if (!w.empty() && w.back().cancels(l)) {
            continue;
          }
          auto v = w;
          v.push_back(l);
          out.push_back(Word::reduce(rank, v));
          next.push_back(std::move(v));
        }
      }
    }
    layer = std::move(next);
  }
  return out;
}

// Sum of exponents of generator `gen` in `w`.
inline long exponent_sum(const Word& w, std::uint32_t gen) {
  long s = 0;
  for (auto l : w) {
    if (l.gen == gen) {
      s += l.inv ? -1 : 1;
    }
  }
  return s;
}

inline long mod(long a, long n) { return ((a % n) + n) % n; }

// Stabilizer of point 0 under a random action of F2 on `points` points,
// so a finite-index subgroup of index at most `points`.
inline Subgroup random_finite_index(std::mt19937_64& rng, std::size_t points) {
  PreAutomaton pre;
  pre.rank = 2;
  pre.vertex_count = points;
  for (std::uint32_t gen = 0; gen < 2; ++gen) {
    std::vector<std::uint32_t> perm(points);
    for (std::uint32_t i = 0; i < points; ++i) {
      perm[i] = i;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::uint32_t i = 0; i < points; ++i) {
      pre.edges.push_back({i, gen, perm[i]});
    }
  }
  return Subgroup(fold(pre));
}

// Images of (x, y) under a product of random elementary Nielsen moves.
inline std::vector<Word> random_automorphism(std::mt19937_64& rng, int moves) {
  std::vector<Word> img{Word::generator(2, 0), Word::generator(2, 1)};
  std::uniform_int_distribution<int> pick(0, 3);
  for (int m = 0; m < moves; ++m) {
    switch (pick(rng)) {
      case 0: img[0] = concat(img[0], img[1]); break;
      case 1: img[1] = concat(img[0], img[1]); break;
      case 2: img[0] = invert(img[0]); break;
      default: std::swap(img[0], img[1]); break;
    }
  }
  return img;
}

}  // namespace freecomm::test

#define CHECK_THROWS_CODE(expr, expected_code)                       \
  do {                                                               \
    bool thrown_ = false;                                            \
    try {                                                            \
      (void)(expr);                                                  \
    } catch (const ::freecomm::Error& e_) {                          \
      thrown_ = true;                                                \
      CHECK_MESSAGE(e_.code() == (expected_code), e_.what());        \
    }                                                                \
    CHECK_MESSAGE(thrown_, "expected freecomm::Error from " #expr);  \
  } while (false)
