// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.  Oracles come from the test helpers, not from library code paths.

#define DOCTEST_CONFIG_DISABLE

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "freecomm/hall.hpp"
#include "groups.hpp"
#include "helpers.hpp"

using namespace freecomm;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: untimed
  std::function<bool(std::string&)> body;
};

const HallTower& hall() {
  static const HallTower h;
  return h;
}

bool in_h0(const Word& w) { return test::mod(test::exponent_sum(w, 0), 3) == 0; }
bool in_parity(const Word& w) { return w.size() % 2 == 0; }

VirtualAut random_aut(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> points(1, 4);
  auto sub = test::random_finite_index(rng, points(rng));
  auto aut = test::random_automorphism(rng, 5);
  std::vector<Word> images;
  for (const auto& c : sub.basis()) {
    images.push_back(substitute(c, aut, 2));
  }
  return VirtualAut::make(sub, std::move(images));
}

bool m1_table(std::string& detail) {
  Tower t(TowerConfig::parse("transversal.1 = (), (01)\n"));
  auto table = t.m_map_table(1);
  const std::string expected =
      "a_() -> a_0\n"
      "a_(012) -> a_1\n"
      "a_(021) -> a_2\n"
      "a_()(01) -> a_*.a_0.a_*^-1\n"
      "a_(012)(01) -> a_*.a_1.a_*^-1\n"
      "a_(021)(01) -> a_*.a_2.a_*^-1\n"
      "a_* -> a_*.a_*\n";
  if (table != expected) {
    detail = "got:\n" + table;
    return false;
  }
  return true;
}

bool tower_indices(std::string& detail) {
  HallTower h;
  const std::pair<std::size_t, std::size_t> expected[] = {{3, 4}, {6, 7}, {720, 721}};
  for (std::size_t k = 0; k < 3; ++k) {
    const auto& sub = h.subgroup(k);
    auto index = sub.index().value_or(0);
    if (index != expected[k].first || sub.rank() != expected[k].second) {
      detail = "H_" + std::to_string(k) + ": (" + std::to_string(index) + ", " +
               std::to_string(sub.rank()) + ")";
      return false;
    }
    // Nielsen-Schreier in rank 2: rank = index + 1
    if (sub.rank() != index + 1) {
      detail = "rank formula";
      return false;
    }
  }
  return true;
}

bool homomorphism(std::string& detail) {
  const auto& t = hall().tower();
  for (ElementId g = 0; g < 6; ++g) {
    for (ElementId h = 0; h < 6; ++h) {
      if (!comm_equal(compose(hall().embed(1, g), hall().embed(1, h)),
                      hall().embed(1, t.multiply(1, g, h)))) {
        detail = "level 1: " + t.element_name(1, g) + " * " + t.element_name(1, h);
        return false;
      }
    }
  }
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<ElementId> pick(0, 719);
  for (int i = 0; i < 50; ++i) {
    auto g = pick(rng);
    auto h = pick(rng);
    if (!comm_equal(compose(hall().embed(2, g), hall().embed(2, h)),
                    hall().embed(2, t.multiply(2, g, h)))) {
      detail = "level 2: " + t.element_name(2, g) + " * " + t.element_name(2, h);
      return false;
    }
  }
  detail = "36 + 50 pairs";
  return true;
}

bool injectivity(std::string& detail) {
  for (std::size_t k = 0; k < 3; ++k) {
    if (!is_identity(hall().embed(k, 0))) {
      detail = "identity at level " + std::to_string(k);
      return false;
    }
  }
  for (ElementId g = 1; g < 6; ++g) {
    if (is_identity(hall().embed(1, g))) {
      detail = "level 1 element " + hall().tower().element_name(1, g);
      return false;
    }
  }
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<ElementId> pick(1, 719);
  for (int i = 0; i < 100; ++i) {
    auto g = pick(rng);
    if (is_identity(hall().embed(2, g))) {
      detail = "level 2 element " + hall().tower().element_name(2, g);
      return false;
    }
  }
  detail = "5 + 100 nontrivial, 3 identities";
  return true;
}

bool compatibility(std::string& detail) {
  const auto& t = hall().tower();
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& deeper = hall().subgroup(k + 1);
    for (ElementId g = 0; g < t.order(k); ++g) {
      auto lower = hall().embed(k, g);
      auto upper = hall().embed(k + 1, t.index_of(k + 1, t.ell(k, g)));
      if (!comm_equal(upper, lower) || !same_representative(upper, restrict(lower, deeper))) {
        detail = "level " + std::to_string(k) + " element " + t.element_name(k, g);
        return false;
      }
    }
  }
  detail = "3 + 6 elements";
  return true;
}

bool equivariance(std::string& detail) {
  Tower swapped(TowerConfig::parse("transversal.1 = (), (01)\n"));
  for (const Tower* t : std::vector<const Tower*>{&hall().tower(), &swapped}) {
    for (std::size_t k = 1; k < 3; ++k) {
      auto m = t->m_map(k);
      for (ElementId h = 0; h < t->order(k - 1); ++h) {
        auto lifted = t->index_of(k, t->ell(k - 1, h));
        if (!(compose(m, t->alpha(k, lifted)) == compose(t->alpha(k - 1, h), m))) {
          detail = "k=" + std::to_string(k) + " h=" + t->element_name(k - 1, h);
          return false;
        }
      }
    }
  }
  return true;
}

bool stallings_oracle(std::string& detail) {
  const auto& h0 = hall().subgroup(0);
  auto parity = Subgroup::from_generators(2, test::xy_list({"x.x", "x.y", "x.y^-1"}));
  auto both = intersect(h0, parity);
  auto agree = [&](const Word& w) {
    return h0.contains(w) == in_h0(w) && both.contains(w) == (in_h0(w) && in_parity(w));
  };
  auto all = test::all_reduced_words(2, 8);
  for (const auto& w : all) {
    if (!agree(w)) {
      detail = format(w, Alphabet::free2());
      return false;
    }
  }
  std::mt19937_64 rng(8);
  for (int i = 0; i < 10000; ++i) {
    auto w = test::random_word(rng, 2, 20);
    if (!agree(w)) {
      detail = format(w, Alphabet::free2());
      return false;
    }
  }
  detail = std::to_string(all.size()) + " exhaustive + 10000 random";
  return true;
}

bool fold_confluence(std::string& detail) {
  std::mt19937_64 rng(1000);
  std::uniform_int_distribution<int> count(1, 5);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Word> gens(count(rng));
    for (auto& g : gens) {
      g = test::random_word(rng, 2, 10);
    }
    auto sub = Subgroup::from_generators(2, gens);
    auto pre = PreAutomaton::wedge(2, gens);
    if (!(fold(pre, rng()) == sub.graph()) || !(fold(pre, rng()) == sub.graph())) {
      detail = "fold order dependence at set " + std::to_string(i);
      return false;
    }
    WordBuilder b(2);
    if (sub.rank() > 0) {
      std::uniform_int_distribution<std::size_t> pick(0, sub.rank() - 1);
      for (int n = 0; n < 5; ++n) {
        const auto& c = sub.basis()[pick(rng)];
        rng() % 2 ? b.append(c) : b.append_inverse(c);
      }
    }
    auto member = std::move(b).build();
    if (substitute(sub.express_in_basis(member), sub.basis(), 2) != member) {
      detail = "round trip at set " + std::to_string(i);
      return false;
    }
  }
  detail = "1000 sets, 1000 members";
  return true;
}

bool hall_properties(std::string& detail) {
  const auto& t = hall().tower();
  for (const auto& [name, table] : test::small_groups()) {
    auto images = embed_finite_group(t, table);
    for (std::size_t a = 0; a < table.size(); ++a) {
      for (std::size_t b = 0; b < table.size(); ++b) {
        if (u_multiply(t, images[a], images[b]) != images[table[a][b]] ||
            (a != b && images[a] == images[b])) {
          detail = name;
          return false;
        }
      }
    }
  }
  auto conjugates = [&](std::size_t k, ElementId a, ElementId b) {
    std::vector<ElementId> av{a};
    std::vector<ElementId> bv{b};
    auto s = hall_conjugator(t, k, av, bv);
    return compose(compose(s, t.ell(k, a)), inverse(s)) == t.ell(k, b);
  };
  if (!conjugates(1, t.parse_element(1, "(01)"), t.parse_element(1, "(12)"))) {
    detail = "<(01)> vs <(12)>";
    return false;
  }
  // both automorphisms of Z/3: 1 -> 1 and 1 -> 2
  if (!conjugates(0, 1, 1) || !conjugates(0, 1, 2)) {
    detail = "Z/3";
    return false;
  }
  detail = "8 groups, 3 conjugators";
  return true;
}

bool calculus_laws(std::string& detail) {
  std::mt19937_64 rng(10);
  auto draw = [&](int i) {
    std::uniform_int_distribution<ElementId> pick(0, 5);
    switch (i % 3) {
      case 0: return random_aut(rng);
      case 1: return hall().embed(1, pick(rng));
      default: return hall().embed(0, pick(rng) % 3);
    }
  };
  int instances = 0;
  for (int i = 0; i < 100; ++i) {
    auto a = draw(i);
    auto b = draw(i + 1);
    auto c = draw(i + 2);
    auto id = VirtualAut::identity(2);
    auto sub = intersect(a.domain(), test::random_finite_index(rng, 3));
    if (!comm_equal(compose(a, compose(b, c)), compose(compose(a, b), c)) ||
        !comm_equal(compose(a, invert(a)), id) || !comm_equal(compose(invert(a), a), id) ||
        !comm_equal(restrict(a, sub), a)) {
      detail = "instance " + std::to_string(i);
      return false;
    }
    ++instances;
  }
  // index-720 instances
  std::uniform_int_distribution<ElementId> pick(0, 719);
  for (int i = 0; i < 10; ++i) {
    auto a = hall().embed(2, pick(rng));
    auto b = hall().embed(2, pick(rng));
    auto c = hall().embed(2, pick(rng));
    auto id = VirtualAut::identity(2);
    if (!comm_equal(compose(a, compose(b, c)), compose(compose(a, b), c)) ||
        !comm_equal(compose(a, invert(a)), id) || !comm_equal(compose(invert(a), a), id) ||
        !comm_equal(restrict(a, hall().subgroup(2)), a)) {
      detail = "level-2 instance " + std::to_string(i);
      return false;
    }
    ++instances;
  }
  detail = std::to_string(instances) + " instances";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "m_1 generator table", 1.0, m1_table},
      {2, "tower indices and ranks", 10.0, tower_indices},
      {3, "homomorphism suite", 120.0, homomorphism},
      {4, "injectivity suite", 0, injectivity},
      {5, "compatibility suite", 0, compatibility},
      {6, "m_map equivariance", 0, equivariance},
      {7, "stallings oracle equivalence", 0, stallings_oracle},
      {8, "fold confluence and round trip", 0, fold_confluence},
      {9, "hall properties", 0, hall_properties},
      {10, "commensurator calculus laws", 0, calculus_laws},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    std::string detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
      ok = false;
      detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + "s limit)";
    }
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", secs);
    std::cout << "AC" << c.id << (ok ? " PASS " : " FAIL ") << c.title << " [" << time << "]"
              << (detail.empty() ? "" : ": " + detail) << std::endl;
    failed += !ok;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
