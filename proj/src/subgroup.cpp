#include "freecomm/subgroup.hpp"

#include <unordered_map>

#include "folder.hpp"
#include "freecomm/error.hpp"

namespace freecomm {

namespace {
void check_rank(std::size_t ambient_rank, const Word& w) {
  if (w.rank() != ambient_rank) {
    throw Error(ErrorCode::malformed_input,
                "word over rank " + std::to_string(w.rank()) + " in a rank-" +
                    std::to_string(ambient_rank) + " free group");
  }
}
}  // namespace

Subgroup::Subgroup(std::size_t ambient_rank) : Subgroup(CoreGraph(ambient_rank)) {}

Subgroup::Subgroup(CoreGraph graph) : graph_(std::move(graph)) { derive_basis(); }

Subgroup Subgroup::from_generators(std::size_t ambient_rank, std::span<const Word> gens) {
  if (ambient_rank == 0) {
    throw Error(ErrorCode::malformed_input, "ambient rank must be positive");
  }
  detail::Folder folder(ambient_rank, 1, 0);
  for (const auto& g : gens) {
    check_rank(ambient_rank, g);
    folder.add_loop(g);
  }
  return Subgroup(folder.finish().graph);
}

Subgroup Subgroup::whole(std::size_t ambient_rank) {
  std::vector<Word> gens;
  for (std::uint32_t g = 0; g < ambient_rank; ++g) {
    gens.push_back(Word::generator(ambient_rank, g));
  }
  return from_generators(ambient_rank, gens);
}

void Subgroup::derive_basis() {
  const std::size_t rank = graph_.rank();
  const std::size_t n = graph_.vertex_count();
  std::vector<char> tree_slot(n * rank, 0);
  std::vector<char> discovered(n, 0);
  tree_path_.assign(n, Word(rank));
  discovered[CoreGraph::base] = 1;
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t g = 0; g < rank; ++g) {
      if (auto t = graph_.target(v, g); t && !discovered[*t]) {
        discovered[*t] = 1;
        tree_slot[v * rank + g] = 1;
        tree_path_[*t] = concat(tree_path_[v], Word::generator(rank, g));
      }
      if (auto s = graph_.source(v, g); s && !discovered[*s]) {
        discovered[*s] = 1;
        tree_slot[*s * rank + g] = 1;
        tree_path_[*s] = concat(tree_path_[v], Word::generator(rank, g, true));
      }
    }
  }

  basis_.clear();
  slot_letter_.assign(n * rank, 0);
  std::vector<char> seen(n * rank, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t g = 0; g < rank; ++g) {
      if (auto t = graph_.target(v, g)) {
        auto slot = v * rank + g;
        if (!tree_slot[slot] && !seen[slot]) {
          seen[slot] = 1;
          WordBuilder b(rank);
          b.append(tree_path_[v]);
          b.push(pos(g));
          b.append_inverse(tree_path_[*t]);
          basis_.push_back(std::move(b).build());
          slot_letter_[slot] = static_cast<std::int32_t>(basis_.size());
        }
      }
      if (auto s = graph_.source(v, g)) {
        auto slot = *s * rank + g;
        if (!tree_slot[slot] && !seen[slot]) {
          seen[slot] = 1;
          WordBuilder b(rank);
          b.append(tree_path_[v]);
          b.push(neg(g));
          b.append_inverse(tree_path_[*s]);
          basis_.push_back(std::move(b).build());
          slot_letter_[slot] = -static_cast<std::int32_t>(basis_.size());
        }
      }
    }
  }
}

bool Subgroup::contains(const Word& w) const {
  check_rank(ambient_rank(), w);
  auto end = graph_.trace(w);
  return end && *end == CoreGraph::base;
}

Word Subgroup::express_in_basis(const Word& w) const {
  check_rank(ambient_rank(), w);
  const std::size_t rank = graph_.rank();
  WordBuilder b(basis_.size());
  std::uint32_t v = CoreGraph::base;
  for (auto l : w) {
    std::int32_t code = 0;
    if (!l.inv) {
      auto t = graph_.target(v, l.gen);
      if (!t) {
        throw Error(ErrorCode::not_a_member, "word leaves the core graph");
      }
      code = slot_letter_[v * rank + l.gen];
      v = *t;
    } else {
      auto s = graph_.source(v, l.gen);
      if (!s) {
        throw Error(ErrorCode::not_a_member, "word leaves the core graph");
      }
      code = -slot_letter_[*s * rank + l.gen];
      v = *s;
    }
    if (code > 0) {
      b.push(pos(static_cast<std::uint32_t>(code - 1)));
    } else if (code < 0) {
      b.push(neg(static_cast<std::uint32_t>(-code - 1)));
    }
  }
  if (v != CoreGraph::base) {
    throw Error(ErrorCode::not_a_member, "word does not return to the basepoint");
  }
  return std::move(b).build();
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  if (a.ambient_rank() != b.ambient_rank()) {
    throw Error(ErrorCode::alphabet_mismatch, "intersecting subgroups of different free groups");
  }
  const std::size_t rank = a.ambient_rank();
  const auto& ga = a.graph();
  const auto& gb = b.graph();
  const std::uint64_t nb = gb.vertex_count();

  std::unordered_map<std::uint64_t, std::uint32_t> id;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs{{CoreGraph::base, CoreGraph::base}};
  id.emplace(0, 0);
  std::vector<std::int32_t> out;
  auto lookup = [&](std::uint32_t u, std::uint32_t v) {
    auto [it, fresh] = id.emplace(u * nb + v, static_cast<std::uint32_t>(pairs.size()));
    if (fresh) {
      pairs.emplace_back(u, v);
    }
    return it->second;
  };
  for (std::size_t head = 0; head < pairs.size(); ++head) {
    auto [u, v] = pairs[head];
    out.resize(pairs.size() * rank, -1);
    for (std::uint32_t g = 0; g < rank; ++g) {
      auto tu = ga.target(u, g);
      auto tv = gb.target(v, g);
      if (tu && tv) {
        out[head * rank + g] = static_cast<std::int32_t>(lookup(*tu, *tv));
      }
      auto su = ga.source(u, g);
      auto sv = gb.source(v, g);
      if (su && sv) {
        lookup(*su, *sv);
      }
    }
  }
  out.resize(pairs.size() * rank, -1);
  return Subgroup(CoreGraph::canonicalize(rank, pairs.size(), 0, out));
}

// ---------------------------------------------------------------------------
// Rewriter

Rewriter Rewriter::from_generators(std::size_t ambient_rank, std::span<const Word> gens) {
  const std::size_t n = gens.size();
  detail::Folder folder(ambient_rank, 1, 0, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    check_rank(ambient_rank, gens[i]);
    folder.add_loop(gens[i], Word::generator(n, i));
  }
  auto result = folder.finish();
  std::size_t rank = result.graph.edge_count() + 1 - result.graph.vertex_count();
  if (folder.relation_found() || rank != n) {
    throw Error(ErrorCode::not_a_basis, std::to_string(n) + " generators span a rank-" +
                                            std::to_string(rank) + " subgroup");
  }
  auto& witness = result.witness;
  for (auto& w : witness) {
    if (w.rank() != n) {
      w = Word(n);
    }
  }
  return Rewriter(std::move(result.graph), std::move(witness), n);
}

Rewriter Rewriter::from_subgroup(const Subgroup& sub) {
  const auto& g = sub.graph();
  const std::size_t n = sub.rank();
  std::vector<Word> witness(g.vertex_count() * g.rank(), Word(n));
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    for (std::uint32_t a = 0; a < g.rank(); ++a) {
      if (auto code = sub.slot_letter(v, a); code != 0) {
        auto letter = static_cast<std::uint32_t>(std::abs(code) - 1);
        witness[v * g.rank() + a] = Word::generator(n, letter, code < 0);
      }
    }
  }
  return Rewriter(g, std::move(witness), n);
}

Rewriter Rewriter::relabeled(std::span<const std::uint32_t> new_index) const {
  if (new_index.size() != basis_size_) {
    throw Error(ErrorCode::arity_mismatch, "relabelling needs one index per basis letter");
  }
  std::vector<Word> witness;
  witness.reserve(witness_.size());
  for (const auto& w : witness_) {
    std::vector<Letter> letters;
    for (auto l : w) {
      letters.push_back({new_index[l.gen], l.inv});
    }
    witness.push_back(Word::reduce(basis_size_, letters));
  }
  return Rewriter(graph_, std::move(witness), basis_size_);
}

std::optional<Word> Rewriter::try_express(const Word& w) const {
  check_rank(graph_.rank(), w);
  const std::size_t rank = graph_.rank();
  WordBuilder b(basis_size_);
  std::uint32_t v = CoreGraph::base;
  for (auto l : w) {
    if (!l.inv) {
      auto t = graph_.target(v, l.gen);
      if (!t) {
        return std::nullopt;
      }
      b.append(witness_[v * rank + l.gen]);
      v = *t;
    } else {
      auto s = graph_.source(v, l.gen);
      if (!s) {
        return std::nullopt;
      }
      b.append_inverse(witness_[*s * rank + l.gen]);
      v = *s;
    }
  }
  if (v != CoreGraph::base) {
    return std::nullopt;
  }
  return std::move(b).build();
}

Word Rewriter::express(const Word& w) const {
  auto r = try_express(w);
  if (!r) {
    throw Error(ErrorCode::not_a_member, "word is not in the subgroup");
  }
  return *std::move(r);
}

Word express_in_generators(std::size_t ambient_rank, std::span<const Word> gens,
                           const Word& w) {
  return Rewriter::from_generators(ambient_rank, gens).express(w);
}

}  // namespace freecomm
