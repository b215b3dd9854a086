#include "freecomm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>

#include "freecomm/error.hpp"

namespace freecomm {

namespace {

class Collector {
 public:
  void check(std::string name, const std::function<bool(std::string&)>& body) {
    CheckResult r{std::move(name), false, {}};
    try {
      r.passed = body(r.detail);
    } catch (const Error& e) {
      r.detail = e.what();
    }
    results_.push_back(std::move(r));
  }

  void fill(RunReport& report) {
    report.attempted = results_.size();
    for (auto& r : results_) {
      if (r.passed) {
        ++report.passed;
      } else {
        report.failures.push_back(std::move(r));
      }
    }
    std::sort(report.failures.begin(), report.failures.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  }

 private:
  std::vector<CheckResult> results_;
};

std::vector<std::size_t> levels(const HallTower& hall, const VerifyOptions& opt, std::size_t lo) {
  if (opt.level) {
    if (*opt.level > hall.max_level()) {
      throw Error(ErrorCode::level_too_large, "level " + std::to_string(*opt.level) +
                                                  " exceeds max level " +
                                                  std::to_string(hall.max_level()));
    }
    if (*opt.level < lo) {
      throw Error(ErrorCode::malformed_input, "this suite starts at level " + std::to_string(lo));
    }
    return {*opt.level};
  }
  std::vector<std::size_t> out;
  for (std::size_t k = lo; k <= hall.max_level(); ++k) {
    out.push_back(k);
  }
  return out;
}

bool exhaustive(std::size_t k) { return k < 2; }

std::string name_at(const Tower& t, std::size_t k, ElementId g) {
  return std::to_string(k) + ":" + t.element_name(k, g);
}

void homomorphism(const HallTower& hall, const VerifyOptions& opt, Collector& c) {
  const auto& t = hall.tower();
  std::mt19937_64 rng(opt.seed);
  for (auto k : levels(hall, opt, 0)) {
    const auto n = static_cast<ElementId>(t.order(k));
    std::vector<std::pair<ElementId, ElementId>> pairs;
    if (exhaustive(k)) {
      for (ElementId g = 0; g < n; ++g) {
        for (ElementId h = 0; h < n; ++h) {
          pairs.emplace_back(g, h);
        }
      }
    } else {
      std::uniform_int_distribution<ElementId> pick(0, n - 1);
      for (std::size_t i = 0; i < opt.samples; ++i) {
        auto g = pick(rng);
        pairs.emplace_back(g, pick(rng));
      }
    }
    for (auto [g, h] : pairs) {
      c.check("homomorphism " + name_at(t, k, g) + " * " + t.element_name(k, h), [&](std::string&) {
        return comm_equal(compose(hall.embed(k, g), hall.embed(k, h)),
                          hall.embed(k, t.multiply(k, g, h)));
      });
    }
  }
}

void injectivity(const HallTower& hall, const VerifyOptions& opt, Collector& c) {
  const auto& t = hall.tower();
  std::mt19937_64 rng(opt.seed);
  for (auto k : levels(hall, opt, 0)) {
    const auto n = static_cast<ElementId>(t.order(k));
    std::vector<ElementId> elems(n - 1);
    std::iota(elems.begin(), elems.end(), 1);
    if (!exhaustive(k)) {
      std::shuffle(elems.begin(), elems.end(), rng);
      elems.resize(std::min<std::size_t>(elems.size(), opt.samples));
    }
    for (auto g : elems) {
      c.check("injectivity " + name_at(t, k, g),
              [&](std::string&) { return !is_identity(hall.embed(k, g)); });
    }
  }
}

void compat(const HallTower& hall, const VerifyOptions& opt, Collector& c) {
  const auto& t = hall.tower();
  for (auto k : levels(hall, opt, 1)) {
    const auto& deeper = hall.subgroup(k);
    for (ElementId g = 0; g < t.order(k - 1); ++g) {
      c.check("compat " + name_at(t, k - 1, g), [&](std::string& detail) {
        auto lower = hall.embed(k - 1, g);
        auto upper = hall.embed(k, t.index_of(k, t.ell(k - 1, g)));
        if (!comm_equal(upper, lower)) {
          detail = "not equal in the commensurator";
          return false;
        }
        if (!same_representative(upper, restrict(lower, deeper))) {
          detail = "not the restriction to H_" + std::to_string(k);
          return false;
        }
        return true;
      });
    }
  }
}

Word random_word(std::mt19937_64& rng, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<std::uint32_t> letter(0, 3);
  std::vector<Letter> raw(len(rng));
  for (auto& l : raw) {
    auto v = letter(rng);
    l = Letter{v / 2, v % 2 == 1};
  }
  return Word::reduce(2, raw);
}

long x_exponent(const Word& w) {
  long s = 0;
  for (auto l : w) {
    if (l.gen == 0) {
      s += l.inv ? -1 : 1;
    }
  }
  return s;
}

void stallings(const HallTower& hall, const VerifyOptions& opt, Collector& c) {
  std::mt19937_64 rng(opt.seed);
  const auto& h0 = hall.subgroup(0);
  // kernel of x, y -> 1 mod 2
  auto parity = Subgroup::from_generators(2, std::vector<Word>{
      Word::reduce(2, {pos(0), pos(0)}), Word::reduce(2, {pos(0), pos(1)}),
      Word::reduce(2, {pos(0), neg(1)})});
  auto both = intersect(h0, parity);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    auto w = random_word(rng, 20);
    c.check("membership " + std::to_string(i), [&](std::string& detail) {
      long e = x_exponent(w);
      bool in0 = ((e % 3) + 3) % 3 == 0;
      bool in2 = w.size() % 2 == 0;
      detail = format(w, Alphabet::free2());
      return h0.contains(w) == in0 && both.contains(w) == (in0 && in2);
    });
  }
  std::uniform_int_distribution<int> count(1, 5);
  for (std::size_t i = 0; i < opt.samples; ++i) {
    std::vector<Word> gens(count(rng));
    for (auto& g : gens) {
      g = random_word(rng, 10);
    }
    auto seed = rng();
    c.check("fold " + std::to_string(i), [&](std::string& detail) {
      auto sub = Subgroup::from_generators(2, gens);
      auto pre = PreAutomaton::wedge(2, gens);
      if (!(fold(pre, seed) == sub.graph()) || !(fold(pre, seed + 1) == sub.graph())) {
        detail = "fold depends on order";
        return false;
      }
      WordBuilder b(2);
      if (sub.rank() > 0) {
        std::uniform_int_distribution<std::size_t> pick(0, sub.rank() - 1);
        for (int n = 0; n < 4; ++n) {
          const auto& g = sub.basis()[pick(rng)];
          rng() % 2 ? b.append(g) : b.append_inverse(g);
        }
      }
      auto member = std::move(b).build();
      auto coords = sub.express_in_basis(member);
      if (substitute(coords, sub.basis(), 2) != member) {
        detail = "basis round trip";
        return false;
      }
      return true;
    });
  }
}

GroupTable cyclic(std::uint32_t n) {
  GroupTable t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      t[a][b] = (a + b) % n;
    }
  }
  return t;
}

void hall_suite(const HallTower& hall, const VerifyOptions&, Collector& c) {
  const auto& t = hall.tower();
  GroupTable klein(4, std::vector<std::uint32_t>(4));
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) {
      klein[a][b] = a ^ b;
    }
  }
  GroupTable s3(6, std::vector<std::uint32_t>(6));
  for (ElementId a = 0; a < 6; ++a) {
    for (ElementId b = 0; b < 6; ++b) {
      s3[a][b] = t.multiply(1, a, b);
    }
  }
  std::vector<std::pair<std::string, GroupTable>> groups{
      {"1", cyclic(1)},  {"Z2", cyclic(2)}, {"Z3", cyclic(3)}, {"Z4", cyclic(4)},
      {"Z2xZ2", klein}, {"Z5", cyclic(5)}, {"Z6", cyclic(6)}, {"S3", s3}};
  for (const auto& [name, table] : groups) {
    c.check("finite group " + name, [&](std::string& detail) {
      auto images = embed_finite_group(t, table);
      for (std::size_t a = 0; a < table.size(); ++a) {
        for (std::size_t b = 0; b < table.size(); ++b) {
          if (u_multiply(t, images[a], images[b]) != images[table[a][b]]) {
            detail = "table violated";
            return false;
          }
        }
        for (std::size_t b = 0; b < a; ++b) {
          if (images[a] == images[b]) {
            detail = "not injective";
            return false;
          }
        }
      }
      return true;
    });
  }

  struct Case {
    std::string name;
    std::size_t k;
    std::vector<std::string> a;
    std::vector<std::string> b;
  };
  std::vector<Case> cases{{"Z3 identity", 0, {"1"}, {"1"}},
                          {"Z3 inversion", 0, {"2"}, {"1"}},
                          {"Z3 inversion'", 0, {"1"}, {"2"}},
                          {"<(01)> ~ <(12)>", 1, {"(01)"}, {"(12)"}}};
  for (const auto& cs : cases) {
    c.check("conjugator " + cs.name, [&](std::string&) {
      std::vector<ElementId> a;
      std::vector<ElementId> b;
      for (const auto& s : cs.a) {
        a.push_back(t.parse_element(cs.k, s));
      }
      for (const auto& s : cs.b) {
        b.push_back(t.parse_element(cs.k, s));
      }
      auto s = hall_conjugator(t, cs.k, a, b);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (compose(compose(s, t.ell(cs.k, a[i])), inverse(s)) != t.ell(cs.k, b[i])) {
          return false;
        }
      }
      return true;
    });
  }

  for (std::size_t k = 1; k < Tower::enumerated_levels; ++k) {
    auto m = t.m_map(k);
    for (ElementId h = 0; h < t.order(k - 1); ++h) {
      c.check("equivariance " + name_at(t, k - 1, h), [&](std::string&) {
        auto lifted = t.index_of(k, t.ell(k - 1, h));
        return compose(m, t.alpha(k, lifted)) == compose(t.alpha(k - 1, h), m);
      });
    }
  }
}

}  // namespace

std::string RunReport::summary() const {
  char time[32];
  std::snprintf(time, sizeof time, "%.3f", seconds);
  return suite + ": " + std::to_string(passed) + "/" + std::to_string(attempted) + " passed in " +
         time + "s (config " + config_digest + ")";
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"homomorphism", "injectivity", "compat",
                                              "stallings", "hall"};
  return names;
}

RunReport run_suite(const HallTower& hall, std::string_view suite, const VerifyOptions& options) {
  using Runner = void (*)(const HallTower&, const VerifyOptions&, Collector&);
  Runner run = nullptr;
  if (suite == "homomorphism") {
    run = homomorphism;
  } else if (suite == "injectivity") {
    run = injectivity;
  } else if (suite == "compat") {
    run = compat;
  } else if (suite == "stallings") {
    run = stallings;
  } else if (suite == "hall") {
    run = hall_suite;
  } else {
    throw Error(ErrorCode::unknown_suite, std::string(suite));
  }
  auto start = std::chrono::steady_clock::now();
  Collector c;
  run(hall, options, c);
  RunReport report;
  report.suite = std::string(suite);
  report.config_digest = hall.tower().config().digest();
  c.fill(report);
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace freecomm
