#include "freecomm/hall.hpp"

#include "freecomm/error.hpp"

namespace freecomm {

HallTower::HallTower(TowerConfig config) : tower_(std::move(config)) {}

const HallTower::Level& HallTower::level(std::size_t k) const {
  if (k > max_level()) {
    throw Error(ErrorCode::level_too_large, "level " + std::to_string(k) + " exceeds max level " +
                                                std::to_string(max_level()));
  }
  std::call_once(once_[k], [&] {
    Injection j = k == 0 ? tower_.j0() : compose(level(k - 1).j, tower_.m_map(k));
    auto basis = std::make_shared<const std::vector<Word>>(j.images);
    auto rewriter = std::make_shared<const Rewriter>(Rewriter::from_generators(2, *basis));
    auto h = std::make_shared<const Subgroup>(rewriter->graph());
    levels_[k] = Level{std::move(j), std::move(h), std::move(rewriter), std::move(basis)};
  });
  return *levels_[k];
}

const Injection& HallTower::big_j(std::size_t k) const { return level(k).j; }

const Subgroup& HallTower::subgroup(std::size_t k) const { return *level(k).h; }

VirtualAut HallTower::embed(std::size_t k, ElementId g) const {
  const auto& lv = level(k);
  const auto n = tower_.order(k);
  std::vector<std::uint32_t> perm(n + 1);
  for (ElementId x = 0; x < n; ++x) {
    perm[x] = tower_.multiply(k, g, x);
  }
  perm[n] = static_cast<std::uint32_t>(n);
  return VirtualAut::permuting(lv.h, lv.rewriter, lv.basis, perm);
}

namespace {

UElement lift(const Tower& tower, const UElement& e) {
  if (e.level >= max_u_level) {
    throw Error(ErrorCode::level_too_large, "cannot lift above level " +
                                                std::to_string(max_u_level));
  }
  if (e.level == 0) {
    return UElement::at(1, tower.ell(0, e.residue));
  }
  return UElement::at(e.level + 1, tower.ell(e.level, tower.index_of(e.level, e.perm)));
}

}  // namespace

void u_validate(const Tower& tower, const UElement& e) {
  if (e.level > max_u_level) {
    throw Error(ErrorCode::level_too_large, "U elements live at levels 0.." +
                                                std::to_string(max_u_level));
  }
  if (e.level == 0) {
    if (e.residue >= tower.order(0)) {
      throw Error(ErrorCode::invalid_element, "residue " + std::to_string(e.residue));
    }
  } else if (e.perm.degree() != tower.order(e.level - 1)) {
    throw Error(ErrorCode::invalid_element,
                "level " + std::to_string(e.level) + " elements permute " +
                    std::to_string(tower.order(e.level - 1)) + " points");
  }
}

UElement u_normalize(const Tower& tower, UElement e) {
  u_validate(tower, e);
  while (e.level > 0) {
    auto h = tower.is_translation(e.level - 1, e.perm);
    if (!h) {
      break;
    }
    e = e.level == 1 ? UElement::base(*h) : UElement::at(e.level - 1, tower.element(e.level - 1, *h));
  }
  return e;
}

UElement u_multiply(const Tower& tower, const UElement& a, const UElement& b) {
  u_validate(tower, a);
  u_validate(tower, b);
  UElement x = a;
  UElement y = b;
  while (x.level < y.level) {
    x = lift(tower, x);
  }
  while (y.level < x.level) {
    y = lift(tower, y);
  }
  if (x.level == 0) {
    return UElement::base(tower.multiply(0, x.residue, y.residue));
  }
  return u_normalize(tower, UElement::at(x.level, compose(x.perm, y.perm)));
}

std::string to_string(const UElement& e) {
  return std::to_string(e.level) + ":" +
         (e.level == 0 ? std::to_string(e.residue) : to_cycles(e.perm));
}

std::vector<UElement> embed_finite_group(const Tower& tower, const GroupTable& table) {
  const auto n = table.size();
  if (n == 0) {
    throw Error(ErrorCode::invalid_table, "empty table");
  }
  if (n > max_embedded_order) {
    throw Error(ErrorCode::order_too_large, "order " + std::to_string(n) + " exceeds " +
                                                std::to_string(max_embedded_order));
  }
  for (const auto& row : table) {
    if (row.size() != n) {
      throw Error(ErrorCode::invalid_table, "table is not square");
    }
    std::vector<char> hit(n, 0);
    for (auto v : row) {
      if (v >= n || hit[v]) {
        throw Error(ErrorCode::invalid_table, "row is not a permutation");
      }
      hit[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<char> hit(n, 0);
    for (const auto& row : table) {
      if (hit[row[c]]) {
        throw Error(ErrorCode::invalid_table, "column is not a permutation");
      }
      hit[row[c]] = 1;
    }
  }
  // an associative Latin square is a group table
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorCode::invalid_table, "not associative");
        }
      }
    }
  }
  const auto points = tower.order(1);
  std::vector<UElement> out;
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::uint32_t> images(points);
    for (std::uint32_t p = 0; p < points; ++p) {
      images[p] = p < n ? table[a][p] : p;
    }
    out.push_back(u_normalize(tower, UElement::at(2, Perm::from_images(std::move(images)))));
  }
  return out;
}

Perm hall_conjugator(const Tower& tower, std::size_t k, std::span<const ElementId> a,
                     std::span<const ElementId> b) {
  const auto n = tower.order(k);
  for (auto list : {a, b}) {
    for (auto g : list) {
      if (g >= n) {
        throw Error(ErrorCode::not_subgroups,
                    "element " + std::to_string(g) + " is not in G_" + std::to_string(k));
      }
    }
  }
  if (a.size() != b.size()) {
    throw Error(ErrorCode::not_isomorphic, "generator lists differ in length");
  }

  // iota on <a>, grown by right multiplication by generators
  constexpr auto none = static_cast<ElementId>(-1);
  std::vector<ElementId> iota(n, none);
  std::vector<ElementId> members{0};
  iota[0] = 0;
  for (std::size_t q = 0; q < members.size(); ++q) {
    auto x = members[q];
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto ax = tower.multiply(k, x, a[i]);
      auto bx = tower.multiply(k, iota[x], b[i]);
      if (iota[ax] == none) {
        iota[ax] = bx;
        members.push_back(ax);
      } else if (iota[ax] != bx) {
        throw Error(ErrorCode::not_isomorphic, "generator map is not a homomorphism");
      }
    }
  }
  std::vector<char> in_image(n, 0);
  for (auto x : members) {
    if (in_image[iota[x]]) {
      throw Error(ErrorCode::not_isomorphic, "generator map is not injective");
    }
    in_image[iota[x]] = 1;
  }

  // ell(<a>) and ell(<b>) act freely; pair their orbits in enumeration order
  // and send a.r_i to iota(a).t_i
  std::vector<ElementId> images(n, none);
  std::vector<char> covered_a(n, 0);
  std::vector<char> covered_b(n, 0);
  ElementId r = 0;
  ElementId t = 0;
  while (true) {
    while (r < n && covered_a[r]) {
      ++r;
    }
    while (t < n && covered_b[t]) {
      ++t;
    }
    if (r == n) {
      break;
    }
    for (auto x : members) {
      auto from = tower.multiply(k, x, r);
      auto to = tower.multiply(k, iota[x], t);
      covered_a[from] = 1;
      covered_b[to] = 1;
      images[from] = to;
    }
  }
  auto s = Perm::from_images(std::move(images));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (compose(s, tower.ell(k, a[i])) != compose(tower.ell(k, b[i]), s)) {
      throw Error(ErrorCode::not_isomorphic, "conjugation check failed");
    }
  }
  return s;
}

}  // namespace freecomm
