#include "freecomm/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "freecomm/error.hpp"

namespace freecomm {

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Perm(std::move(images));
}

Perm Perm::from_images(std::vector<std::uint32_t> images) {
  std::vector<char> hit(images.size(), 0);
  for (auto x : images) {
    if (x >= images.size() || hit[x]) {
      throw Error(ErrorCode::invalid_element, "not a permutation");
    }
    hit[x] = 1;
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const noexcept {
  for (std::uint32_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return false;
    }
  }
  return true;
}

Perm compose(const Perm& s, const Perm& t) {
  if (s.degree() != t.degree()) {
    throw Error(ErrorCode::degree_mismatch, std::to_string(s.degree()) + " vs " +
                                                std::to_string(t.degree()));
  }
  std::vector<std::uint32_t> images(s.degree());
  for (std::uint32_t x = 0; x < images.size(); ++x) {
    images[x] = s(t(x));
  }
  return Perm::from_images(std::move(images));
}

Perm inverse(const Perm& p) {
  std::vector<std::uint32_t> images(p.degree());
  for (std::uint32_t x = 0; x < images.size(); ++x) {
    images[p(x)] = x;
  }
  return Perm::from_images(std::move(images));
}

std::uint64_t lex_rank(const Perm& p) {
  const auto n = p.degree();
  std::uint64_t rank = 0;
  std::vector<char> used(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::uint32_t v = 0; v < p(i); ++v) {
      smaller += !used[v];
    }
    used[p(i)] = 1;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

std::string to_cycles(const Perm& p) {
  const bool wide = p.degree() > 10;
  std::string out;
  std::vector<char> seen(p.degree(), 0);
  for (std::uint32_t start = 0; start < p.degree(); ++start) {
    if (seen[start] || p(start) == start) {
      continue;
    }
    out += '(';
    std::uint32_t x = start;
    bool first = true;
    do {
      if (wide && !first) {
        out += ',';
      }
      out += std::to_string(x);
      seen[x] = 1;
      x = p(x);
      first = false;
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
  Perm result = Perm::identity(degree);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  skip_space();
  if (i == text.size()) {
    throw Error(ErrorCode::malformed_input, "empty permutation text (use '()')");
  }
  while (i < text.size()) {
    if (text[i] != '(') {
      throw Error(ErrorCode::malformed_input, "expected '(' in '" + std::string(text) + "'");
    }
    auto close = text.find(')', i);
    if (close == std::string_view::npos) {
      throw Error(ErrorCode::malformed_input, "unclosed cycle in '" + std::string(text) + "'");
    }
    auto body = text.substr(i + 1, close - i - 1);
    bool separated = body.find(',') != std::string_view::npos;
    if (!separated) {
      // "(0 1 2)" separates by whitespace; "(012)" is one digit per point
      auto first = body.find_first_not_of(" \t\n\r");
      auto last = body.find_last_not_of(" \t\n\r");
      if (first != std::string_view::npos &&
          body.substr(first, last - first + 1).find_first_of(" \t\n\r") != std::string_view::npos) {
        separated = true;
      }
    }
    std::vector<std::uint32_t> points;
    if (separated) {
      std::size_t k = 0;
      while (k < body.size()) {
        while (k < body.size() && (body[k] == ',' || std::isspace(static_cast<unsigned char>(body[k])))) {
          ++k;
        }
        if (k == body.size()) {
          break;
        }
        std::uint32_t v = 0;
        auto [ptr, ec] = std::from_chars(body.data() + k, body.data() + body.size(), v);
        if (ec != std::errc()) {
          throw Error(ErrorCode::malformed_input, "bad point in '" + std::string(body) + "'");
        }
        points.push_back(v);
        k = static_cast<std::size_t>(ptr - body.data());
      }
    } else {
      for (char c : body) {
        if (std::isspace(static_cast<unsigned char>(c))) {
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) {
          throw Error(ErrorCode::malformed_input, "bad point '" + std::string(1, c) + "'");
        }
        points.push_back(static_cast<std::uint32_t>(c - '0'));
      }
    }
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0);
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (points[k] >= degree) {
        throw Error(ErrorCode::invalid_element, "point " + std::to_string(points[k]) +
                                                    " out of range for degree " +
                                                    std::to_string(degree));
      }
      if (std::count(points.begin(), points.end(), points[k]) > 1) {
        throw Error(ErrorCode::invalid_element, "repeated point in cycle");
      }
      images[points[k]] = points[(k + 1) % points.size()];
    }
    result = compose(result, Perm::from_images(std::move(images)));
    i = close + 1;
    skip_space();
  }
  return result;
}

}  // namespace freecomm
