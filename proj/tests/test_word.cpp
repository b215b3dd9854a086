#include <random>

#include "doctest.h"
#include "freecomm/word.hpp"
#include "helpers.hpp"

using namespace freecomm;
using freecomm::test::xy;

TEST_CASE("reduce") {
  CHECK(Word::reduce(2, {}).empty());
  CHECK(Word::reduce(2, {pos(0), neg(0)}).empty());
  CHECK(Word::reduce(2, {pos(0), neg(1), pos(1), pos(0)}) == Word::reduce(2, {pos(0), pos(0)}));
  CHECK_THROWS_CODE(Word::reduce(2, {pos(2)}), ErrorCode::malformed_input);
}

TEST_CASE("concat and invert") {
  CHECK(concat(xy("x"), xy("x^-1")).empty());
  CHECK(concat(xy("x.y"), xy("y^-1.x")) == xy("x.x"));
  CHECK(concat(Word(2), xy("x.y")) == xy("x.y"));
  CHECK_THROWS_CODE(concat(xy("x"), Word::generator(3, 0)), ErrorCode::alphabet_mismatch);

  CHECK(invert(Word(2)).empty());
  CHECK(invert(xy("x.y.x^-1")) == xy("x.y^-1.x^-1"));
  CHECK(invert(xy("x.x.x")) == xy("x^-1.x^-1.x^-1"));
  CHECK(power(xy("x.y"), -2) == xy("y^-1.x^-1.y^-1.x^-1"));
}

TEST_CASE("substitute") {
  // j0 after m1 on the generator a_1
  auto j0 = test::xy_list({"y", "x.y.x^-1", "x.x.y.x^-1.x^-1", "x.x.x"});
  CHECK(substitute(Word::generator(4, 1), j0) == xy("x.y.x^-1"));
  CHECK(substitute(Word(4), j0).empty());
  CHECK(substitute(Word::reduce(4, {pos(0), neg(0)}), j0).empty());
  CHECK_THROWS_CODE(substitute(Word::generator(3, 0), j0), ErrorCode::arity_mismatch);
}

TEST_CASE("text form") {
  auto ab = Alphabet::free2();
  CHECK(format(Word(2), ab) == "1");
  CHECK(format(xy("x.y^-1"), ab) == "x.y^-1");
  CHECK(format(Word::reduce(3, {pos(2), neg(0)})) == "g2.g0^-1");
  CHECK(parse_word(" g0 . y^-1 ", ab) == xy("x.y^-1"));
  CHECK(parse_word("x.x^-1", ab).empty());
  CHECK_THROWS_CODE(parse_word("z", ab), ErrorCode::malformed_input);
  CHECK_THROWS_CODE(parse_word("", ab), ErrorCode::malformed_input);
  CHECK_THROWS_CODE(parse_word("x..y", ab), ErrorCode::malformed_input);
  CHECK_THROWS_CODE(parse_word("g2", ab), ErrorCode::malformed_input);
  CHECK_THROWS_CODE(Alphabet(2, {"a", "a"}), ErrorCode::malformed_input);
  CHECK_THROWS_CODE(Alphabet(0), ErrorCode::malformed_input);
}

TEST_CASE("word properties on random inputs") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint32_t> gen(0, 2);
  std::bernoulli_distribution sign(0.5);
  auto ab = Alphabet(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> raw(rng() % 20);
    for (auto& l : raw) {
      l = {gen(rng), sign(rng)};
    }
    auto w = Word::reduce(3, raw);
    // idempotent, and cancellation removes letters in pairs
    CHECK(Word::reduce(3, w.letters()) == w);
    CHECK(w.size() <= raw.size());
    CHECK((raw.size() - w.size()) % 2 == 0);
    CHECK(parse_word(format(w, ab), ab) == w);

    auto u = test::random_word(rng, 3, 8);
    auto v = test::random_word(rng, 3, 8);
    CHECK(concat(concat(u, v), w) == concat(u, concat(v, w)));
    CHECK(invert(concat(u, v)) == concat(invert(v), invert(u)));
    CHECK(concat(w, invert(w)).empty());
    CHECK(invert(invert(w)) == w);

    // substitution respects composition
    std::vector<Word> f{test::random_word(rng, 2, 4), test::random_word(rng, 2, 4),
                        test::random_word(rng, 2, 4)};
    std::vector<Word> g{test::random_word(rng, 3, 4), test::random_word(rng, 3, 4)};
    std::vector<Word> gf;
    for (const auto& fi : f) {
      gf.push_back(substitute(fi, g));
    }
    CHECK(substitute(substitute(w, f), g) == substitute(w, gf));
    CHECK(substitute(concat(u, v), f) == concat(substitute(u, f), substitute(v, f)));
  }
}
