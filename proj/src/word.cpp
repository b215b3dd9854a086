#include "freecomm/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "freecomm/error.hpp"

namespace freecomm {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_input: return "malformed-input";
    case ErrorCode::alphabet_mismatch: return "alphabet-mismatch";
    case ErrorCode::arity_mismatch: return "arity-mismatch";
    case ErrorCode::not_a_member: return "not-a-member";
    case ErrorCode::not_a_basis: return "not-a-basis";
    case ErrorCode::incomplete_domain: return "incomplete-domain";
    case ErrorCode::infinite_index_image: return "infinite-index-image";
    case ErrorCode::not_injective: return "not-injective";
    case ErrorCode::not_in_domain: return "not-in-domain";
    case ErrorCode::not_a_subgroup_of_domain: return "not-a-subgroup-of-domain";
    case ErrorCode::level_too_large: return "level-too-large";
    case ErrorCode::invalid_element: return "invalid-element";
    case ErrorCode::degree_mismatch: return "degree-mismatch";
    case ErrorCode::invalid_table: return "invalid-table";
    case ErrorCode::order_too_large: return "order-too-large";
    case ErrorCode::not_isomorphic: return "not-isomorphic";
    case ErrorCode::not_subgroups: return "not-subgroups";
    case ErrorCode::invalid_config: return "invalid-config";
    case ErrorCode::unknown_suite: return "unknown-suite";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::size_t rank) : rank_(rank) {
  if (rank == 0) {
    throw Error(ErrorCode::malformed_input, "alphabet rank must be positive");
  }
}

Alphabet::Alphabet(std::size_t rank, std::vector<std::string> names)
    : Alphabet(rank) {
  if (names.size() != rank) {
    throw Error(ErrorCode::arity_mismatch,
                "expected " + std::to_string(rank) + " display names");
  }
  names_ = std::move(names);
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    bool bad = n.empty() || n == "1" ||
               std::any_of(n.begin(), n.end(), [](unsigned char c) {
                 return c == '.' || c == '^' || std::isspace(c);
               });
    if (bad) {
      throw Error(ErrorCode::malformed_input, "bad display name '" + n + "'");
    }
    if (!by_name_.emplace(n, i).second) {
      throw Error(ErrorCode::malformed_input, "duplicate display name '" + n + "'");
    }
  }
}

Alphabet Alphabet::free2() { return Alphabet(2, {"x", "y"}); }

std::string Alphabet::name(std::size_t gen) const {
  if (!names_.empty()) {
    return names_.at(gen);
  }
  return "g" + std::to_string(gen);
}

std::optional<std::uint32_t> Alphabet::lookup(std::string_view name) const {
  if (auto it = by_name_.find(std::string(name)); it != by_name_.end()) {
    return it->second;
  }
  if (name.size() > 1 && name[0] == 'g') {
    std::uint32_t gen = 0;
    auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), gen);
    if (ec == std::errc() && p == name.data() + name.size() && gen < rank_) {
      return gen;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Word

Word Word::reduce(std::size_t rank, std::span<const Letter> raw) {
  WordBuilder b(rank);
  for (auto l : raw) {
    if (l.gen >= rank) {
      throw Error(ErrorCode::malformed_input,
                  "generator index " + std::to_string(l.gen) +
                      " out of range for rank " + std::to_string(rank));
    }
    b.push(l);
  }
  return std::move(b).build();
}

Word Word::generator(std::size_t rank, std::uint32_t gen, bool inv) {
  return reduce(rank, {Letter{gen, inv}});
}

void WordBuilder::append(const Word& w) {
  if (w.rank() != rank_) {
    throw Error(ErrorCode::alphabet_mismatch,
                "rank " + std::to_string(w.rank()) + " vs " + std::to_string(rank_));
  }
  for (auto l : w) {
    push(l);
  }
}

void WordBuilder::append_inverse(const Word& w) {
  if (w.rank() != rank_) {
    throw Error(ErrorCode::alphabet_mismatch,
                "rank " + std::to_string(w.rank()) + " vs " + std::to_string(rank_));
  }
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) {
    push(it->inverse());
  }
}

Word WordBuilder::build() && {
  Word w(rank_);
  w.letters_ = std::move(letters_);
  return w;
}

Word concat(const Word& u, const Word& v) {
  WordBuilder b(u.rank());
  b.append(u);
  b.append(v);
  return std::move(b).build();
}

Word concat(std::initializer_list<std::reference_wrapper<const Word>> parts) {
  if (parts.size() == 0) {
    throw Error(ErrorCode::arity_mismatch, "concat of no words has no rank");
  }
  WordBuilder b(parts.begin()->get().rank());
  for (const Word& w : parts) {
    b.append(w);
  }
  return std::move(b).build();
}

Word invert(const Word& w) {
  WordBuilder b(w.rank());
  b.append_inverse(w);
  return std::move(b).build();
}

Word power(const Word& w, int exponent) {
  WordBuilder b(w.rank());
  for (int i = 0; i < std::abs(exponent); ++i) {
    if (exponent > 0) {
      b.append(w);
    } else {
      b.append_inverse(w);
    }
  }
  return std::move(b).build();
}

Word substitute(const Word& w, std::span<const Word> images,
                std::optional<std::size_t> target_rank) {
  if (images.size() != w.rank() || (images.empty() && !target_rank)) {
    throw Error(ErrorCode::arity_mismatch,
                "substitution needs " + std::to_string(w.rank()) + " images, got " +
                    std::to_string(images.size()));
  }
  WordBuilder b(target_rank ? *target_rank : images.front().rank());
  for (auto l : w) {
    if (l.inv) {
      b.append_inverse(images[l.gen]);
    } else {
      b.append(images[l.gen]);
    }
  }
  return std::move(b).build();
}

std::string format(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += '.';
    }
    out += alphabet.name(w[i].gen);
    if (w[i].inv) {
      out += "^-1";
    }
  }
  return out;
}

std::string format(const Word& w) {
  if (w.rank() == 0) {
    return "1";
  }
  return format(w, Alphabet(w.rank()));
}

namespace {
std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}
}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  text = trim(text);
  if (text == "1") {
    return Word(alphabet.rank());
  }
  if (text.empty()) {
    throw Error(ErrorCode::malformed_input, "empty word text (use '1')");
  }
  std::vector<Letter> raw;
  while (true) {
    auto dot = text.find('.');
    auto token = trim(text.substr(0, dot));
    bool inv = false;
    if (token.size() >= 3 && token.substr(token.size() - 3) == "^-1") {
      inv = true;
      token = trim(token.substr(0, token.size() - 3));
    }
    auto gen = alphabet.lookup(token);
    if (!gen) {
      throw Error(ErrorCode::malformed_input, "unknown generator '" + std::string(token) + "'");
    }
    raw.push_back({*gen, inv});
    if (dot == std::string_view::npos) {
      break;
    }
    text.remove_prefix(dot + 1);
  }
  return Word::reduce(alphabet.rank(), raw);
}

}  // namespace freecomm
