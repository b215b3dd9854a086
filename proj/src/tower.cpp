#include "freecomm/tower.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "freecomm/error.hpp"

namespace freecomm {

namespace {

constexpr std::size_t kOrders[Tower::enumerated_levels] = {3, 6, 720};

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Splits on commas outside parentheses.
std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') {
      ++depth;
    } else if (s[i] == ')') {
      --depth;
    } else if (s[i] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

std::vector<Perm> all_perms(std::size_t degree) {
  std::vector<std::uint32_t> p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm::from_images(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Word star_power(std::size_t rank, std::uint32_t star, int e) {
  return power(Word::generator(rank, star), e);
}

[[noreturn]] void bad_config(const std::string& message) {
  throw Error(ErrorCode::invalid_config, message);
}

}  // namespace

TowerConfig TowerConfig::defaults() {
  TowerConfig c;
  auto a = Alphabet::free2();
  for (auto text : {"y", "x.y.x^-1", "x.x.y.x^-1.x^-1", "x.x.x"}) {
    c.j0.push_back(parse_word(text, a));
  }
  return c;
}

TowerConfig TowerConfig::parse(std::string_view text) {
  TowerConfig c = defaults();
  std::set<std::string> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) {
      continue;
    }
    auto eq = line.find('=');
    auto where = "line " + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos) {
      bad_config(where + "expected key = value");
    }
    auto key = std::string(trim(line.substr(0, eq)));
    auto value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) {
      bad_config(where + "duplicate key " + key);
    }
    try {
      if (key == "g0") {
        if (value != "Z3") {
          bad_config(where + "only g0 = Z3 is supported");
        }
      } else if (key == "max_level") {
        std::size_t level = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), level);
        if (ec != std::errc() || ptr != value.data() + value.size() || level > 2) {
          bad_config(where + "max_level must be 0, 1 or 2");
        }
        c.max_level = level;
      } else if (key == "j0") {
        c.j0.clear();
        for (auto w : split_list(value)) {
          c.j0.push_back(parse_word(w, Alphabet::free2()));
        }
      } else if (key.rfind("transversal.", 0) == 0) {
        auto suffix = key.substr(12);
        if (suffix != "1" && suffix != "2") {
          bad_config(where + "transversal level must be 1 or 2");
        }
        std::size_t k = suffix == "1" ? 1 : 2;
        std::vector<Perm> reps;
        for (auto p : split_list(value)) {
          reps.push_back(parse_cycles(p, kOrders[k - 1]));
        }
        c.transversal[k] = std::move(reps);
      } else {
        bad_config(where + "unknown key " + key);
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::invalid_config) {
        throw;
      }
      bad_config(where + e.what());
    }
  }
  return c;
}

TowerConfig TowerConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::io, "cannot read " + path.string());
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string TowerConfig::canonical_text() const {
  std::string out = "g0 = Z3\nmax_level = " + std::to_string(max_level) + "\nj0 = ";
  for (std::size_t i = 0; i < j0.size(); ++i) {
    out += (i ? ", " : "") + format(j0[i], Alphabet::free2());
  }
  out += "\n";
  for (const auto& [k, reps] : transversal) {
    out += "transversal." + std::to_string(k) + " = ";
    for (std::size_t i = 0; i < reps.size(); ++i) {
      out += (i ? ", " : "") + to_cycles(reps[i]);
    }
    out += "\n";
  }
  return out;
}

std::string TowerConfig::digest() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : canonical_text()) {
    h = (h ^ ch) * 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Injection compose(const Injection& outer, const Injection& inner) {
  if (inner.target_rank != outer.source_rank) {
    throw Error(ErrorCode::arity_mismatch,
                "cannot compose: inner target rank " + std::to_string(inner.target_rank) +
                    ", outer source rank " + std::to_string(outer.source_rank));
  }
  Injection out{inner.source_rank, outer.target_rank, {}};
  out.images.reserve(inner.images.size());
  for (const auto& w : inner.images) {
    out.images.push_back(outer.apply(w));
  }
  return out;
}

Tower::Tower(TowerConfig config) : config_(std::move(config)) {
  if (config_.max_level > 2) {
    bad_config("max_level must be at most 2");
  }
  mult_[0].resize(9);
  inverse_[0] = {0, 2, 1};
  for (std::uint16_t a = 0; a < 3; ++a) {
    for (std::uint16_t b = 0; b < 3; ++b) {
      mult_[0][a * 3 + b] = (a + b) % 3;
    }
  }
  for (std::size_t k = 1; k < enumerated_levels; ++k) {
    elements_[k] = all_perms(kOrders[k - 1]);
    const auto n = elements_[k].size();
    mult_[k].resize(n * n);
    inverse_[k].resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      const auto& pa = elements_[k][a];
      for (std::size_t b = 0; b < n; ++b) {
        mult_[k][a * n + b] = static_cast<std::uint16_t>(lex_rank(compose(pa, elements_[k][b])));
      }
      inverse_[k][a] = static_cast<ElementId>(lex_rank(freecomm::inverse(pa)));
    }
  }
  for (std::size_t k = 1; k < enumerated_levels; ++k) {
    build_transversal(k);
  }

  Injection j{4, 2, config_.j0};
  bool valid = j.images.size() == 4;
  for (const auto& w : j.images) {
    valid = valid && w.rank() == 2;
  }
  if (!valid || !j.is_injective() || !j.image().is_complete()) {
    bad_config("j0 must be four words freely generating a finite-index subgroup");
  }
}

void Tower::build_transversal(std::size_t k) {
  const auto n = order(k);
  const auto below = order(k - 1);
  std::vector<ElementId> lifted(below);
  for (ElementId h = 0; h < below; ++h) {
    lifted[h] = index_of(k, ell(k - 1, h));
  }
  auto& reps = transversal_[k];
  auto it = config_.transversal.find(k);
  if (it != config_.transversal.end()) {
    for (const auto& p : it->second) {
      reps.push_back(index_of(k, p));
    }
    if (reps.size() != n / below || reps.empty() || reps[0] != 0) {
      bad_config("transversal." + std::to_string(k) + " must list " + std::to_string(n / below) +
                 " representatives starting with ()");
    }
  } else {
    std::vector<char> covered(n, 0);
    for (ElementId s = 0; s < n; ++s) {
      if (covered[s]) {
        continue;
      }
      reps.push_back(s);
      for (auto l : lifted) {
        covered[multiply(k, l, s)] = 1;
      }
    }
  }
  auto& dec = decomposition_[k];
  dec.assign(n, {0, UINT32_MAX});
  for (std::uint32_t j = 0; j < reps.size(); ++j) {
    for (ElementId h = 0; h < below; ++h) {
      auto s = multiply(k, lifted[h], reps[j]);
      if (dec[s].second != UINT32_MAX) {
        bad_config("transversal." + std::to_string(k) + " repeats a coset");
      }
      dec[s] = {h, j};
    }
  }
}

void Tower::check_level(std::size_t k, std::size_t lo) const {
  if (k >= enumerated_levels) {
    throw Error(ErrorCode::level_too_large, "level " + std::to_string(k) + " is not enumerated");
  }
  if (k < lo) {
    throw Error(ErrorCode::invalid_element, "level " + std::to_string(k) + " has no such data");
  }
}

void Tower::check_element(std::size_t k, ElementId id) const {
  check_level(k);
  if (id >= kOrders[k]) {
    throw Error(ErrorCode::invalid_element,
                "element " + std::to_string(id) + " at level " + std::to_string(k));
  }
}

std::size_t Tower::order(std::size_t k) const {
  check_level(k);
  return kOrders[k];
}

ElementId Tower::multiply(std::size_t k, ElementId a, ElementId b) const {
  check_element(k, a);
  check_element(k, b);
  return mult_[k][a * kOrders[k] + b];
}

ElementId Tower::inverse(std::size_t k, ElementId a) const {
  check_element(k, a);
  return inverse_[k][a];
}

const Perm& Tower::element(std::size_t k, ElementId id) const {
  check_level(k, 1);
  check_element(k, id);
  return elements_[k][id];
}

ElementId Tower::index_of(std::size_t k, const Perm& p) const {
  check_level(k, 1);
  if (p.degree() != kOrders[k - 1]) {
    throw Error(ErrorCode::invalid_element, "level " + std::to_string(k) +
                                                " elements permute " +
                                                std::to_string(kOrders[k - 1]) + " points");
  }
  return static_cast<ElementId>(lex_rank(p));
}

std::string Tower::element_name(std::size_t k, ElementId id) const {
  check_element(k, id);
  return k == 0 ? std::to_string(id) : to_cycles(elements_[k][id]);
}

ElementId Tower::parse_element(std::size_t k, std::string_view text) const {
  check_level(k);
  if (k == 0) {
    auto t = trim(text);
    ElementId v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
      throw Error(ErrorCode::malformed_input, "expected a residue mod 3, got '" +
                                                  std::string(text) + "'");
    }
    check_element(0, v);
    return v;
  }
  return index_of(k, parse_cycles(text, kOrders[k - 1]));
}

Alphabet Tower::alphabet(std::size_t k) const {
  std::vector<std::string> names;
  for (ElementId g = 0; g < order(k); ++g) {
    names.push_back("a_" + element_name(k, g));
  }
  names.push_back("a_*");
  const auto rank = names.size();
  return Alphabet(rank, std::move(names));
}

Perm Tower::ell(std::size_t k, ElementId g) const {
  check_element(k, g);
  std::vector<std::uint32_t> images(kOrders[k]);
  for (ElementId x = 0; x < images.size(); ++x) {
    images[x] = mult_[k][g * kOrders[k] + x];
  }
  return Perm::from_images(std::move(images));
}

std::optional<ElementId> Tower::is_translation(std::size_t k, const Perm& sigma) const {
  check_level(k);
  if (sigma.degree() != kOrders[k]) {
    return std::nullopt;
  }
  ElementId h = sigma(0);
  for (ElementId x = 0; x < kOrders[k]; ++x) {
    if (sigma(x) != mult_[k][h * kOrders[k] + x]) {
      return std::nullopt;
    }
  }
  return h;
}

const std::vector<ElementId>& Tower::transversal(std::size_t k) const {
  check_level(k, 1);
  return transversal_[k];
}

std::pair<ElementId, std::size_t> Tower::coset_decompose(std::size_t k, ElementId sigma) const {
  check_level(k, 1);
  check_element(k, sigma);
  auto [h, j] = decomposition_[k][sigma];
  return {h, j};
}

Injection Tower::alpha(std::size_t k, ElementId g) const {
  check_element(k, g);
  const auto n = kOrders[k];
  Injection out{n + 1, n + 1, {}};
  for (ElementId x = 0; x < n; ++x) {
    out.images.push_back(Word::generator(n + 1, multiply(k, g, x)));
  }
  out.images.push_back(Word::generator(n + 1, static_cast<std::uint32_t>(n)));
  return out;
}

Injection Tower::m_map(std::size_t k) const {
  check_level(k, 1);
  const auto n = kOrders[k];
  const auto below = kOrders[k - 1];
  const auto target = below + 1;
  const auto star = static_cast<std::uint32_t>(below);
  Injection out{n + 1, target, {}};
  for (ElementId s = 0; s < n; ++s) {
    auto [h, j] = decomposition_[k][s];
    auto conj = star_power(target, star, static_cast<int>(j));
    auto letter = Word::generator(target, h);
    auto back = invert(conj);
    out.images.push_back(concat({conj, letter, back}));
  }
  out.images.push_back(star_power(target, star, static_cast<int>(n / below)));
  return out;
}

Injection Tower::j0() const { return Injection{4, 2, config_.j0}; }

std::string Tower::m_map_table(std::size_t k) const {
  auto m = m_map(k);
  auto target = alphabet(k - 1);
  const auto below = order(k - 1);
  std::string out;
  for (std::size_t j = 0; j < transversal_[k].size(); ++j) {
    auto c = transversal_[k][j];
    for (ElementId h = 0; h < below; ++h) {
      auto label = to_cycles(ell(k - 1, h));
      if (j > 0) {
        label += to_cycles(elements_[k][c]);
      }
      auto s = multiply(k, index_of(k, ell(k - 1, h)), c);
      out += "a_" + label + " -> " + format(m.images[s], target) + "\n";
    }
  }
  out += "a_* -> " + format(m.images.back(), target) + "\n";
  return out;
}

}  // namespace freecomm
