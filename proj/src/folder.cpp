#include "folder.hpp"

#include <utility>

namespace freecomm::detail {

Folder::Folder(std::size_t rank, std::size_t vertex_count, std::uint32_t base,
               std::optional<std::size_t> witness_rank, std::optional<std::uint64_t> seed)
    : rank_(rank),
      base_(base),
      track_(witness_rank.has_value()),
      witness_rank_(witness_rank.value_or(0)) {
  if (seed) {
    rng_.emplace(*seed);
  }
  for (std::size_t i = 0; i < vertex_count; ++i) {
    add_vertex();
  }
}

std::uint32_t Folder::add_vertex() {
  auto v = static_cast<std::uint32_t>(parent_.size());
  parent_.push_back(v);
  size_.push_back(1);
  pot_.emplace_back(witness_rank_);
  out_.resize(out_.size() + rank_, -1);
  in_.resize(in_.size() + rank_, -1);
  return v;
}

std::uint32_t Folder::find(std::uint32_t x) {
  while (parent_[x] != x) {
    x = parent_[x];
  }
  return x;
}

std::pair<std::uint32_t, Word> Folder::find_with_cost(std::uint32_t x) {
  if (!track_) {
    return {find(x), Word()};
  }
  if (parent_[x] == x) {
    return {x, Word(witness_rank_)};
  }
  auto [root, to_parent] = find_with_cost(parent_[x]);
  pot_[x] = mul(to_parent, pot_[x]);
  parent_[x] = root;
  return {root, pot_[x]};
}

Word Folder::mul(const Word& a, const Word& b) const {
  if (!track_) {
    return {};
  }
  return concat(a, b);
}

Word Folder::inv(const Word& a) const {
  if (!track_) {
    return {};
  }
  return invert(a);
}

Word Folder::traverse_cost(std::int32_t edge, bool backwards) const {
  const auto& w = edges_[edge].witness;
  return backwards ? inv(w) : w;
}

void Folder::kill(std::int32_t edge) {
  auto& e = edges_[edge];
  e.alive = false;
  if (out(e.src, e.gen) == edge) {
    out(e.src, e.gen) = -1;
  }
  if (in(e.dst, e.gen) == edge) {
    in(e.dst, e.gen) = -1;
  }
}

void Folder::attach(std::uint32_t src, std::uint32_t gen, std::uint32_t dst, Word witness) {
  auto [rs, ts] = find_with_cost(src);
  auto [rd, td] = find_with_cost(dst);
  Word w = mul(mul(ts, witness), inv(td));
  if (auto e2 = out(rs, gen); e2 >= 0) {
    pending_.push_back({edges_[e2].dst, rd, mul(inv(edges_[e2].witness), w)});
    return;
  }
  if (auto e2 = in(rd, gen); e2 >= 0) {
    pending_.push_back({rs, edges_[e2].src, mul(w, inv(edges_[e2].witness))});
    return;
  }
  auto id = static_cast<std::int32_t>(edges_.size());
  edges_.push_back({rs, gen, rd, std::move(w), true});
  out(rs, gen) = id;
  in(rd, gen) = id;
}

void Folder::merge(std::uint32_t u, std::uint32_t v, Word cost) {
  auto [ru, tu] = find_with_cost(u);
  auto [rv, tv] = find_with_cost(v);
  // cost of going from ru to rv
  Word d = mul(mul(tu, cost), inv(tv));
  if (ru == rv) {
    if (track_ && !d.empty()) {
      relation_found_ = true;
    }
    return;
  }
  std::uint32_t base_root = find(base_);
  if (rv == base_root || (ru != base_root && size_[rv] > size_[ru])) {
    std::swap(ru, rv);
    d = inv(d);
  }
  parent_[rv] = ru;
  pot_[rv] = d;
  size_[ru] += size_[rv];
  Word d_inv = inv(d);

  for (std::uint32_t g = 0; g < rank_; ++g) {
    auto e = std::exchange(out(rv, g), -1);
    if (e < 0 || !edges_[e].alive) {
      continue;
    }
    edges_[e].src = ru;
    edges_[e].witness = mul(d, edges_[e].witness);
    if (auto e2 = out(ru, g); e2 >= 0) {
      pending_.push_back({edges_[e2].dst, edges_[e].dst,
                          mul(inv(edges_[e2].witness), edges_[e].witness)});
      kill(e);
    } else {
      out(ru, g) = e;
    }
  }
  for (std::uint32_t g = 0; g < rank_; ++g) {
    auto e = std::exchange(in(rv, g), -1);
    if (e < 0 || !edges_[e].alive) {
      continue;
    }
    edges_[e].dst = ru;
    edges_[e].witness = mul(edges_[e].witness, d_inv);
    if (auto e2 = in(ru, g); e2 >= 0) {
      pending_.push_back({edges_[e].src, edges_[e2].src,
                          mul(edges_[e].witness, inv(edges_[e2].witness))});
      kill(e);
    } else {
      in(ru, g) = e;
    }
  }
}

void Folder::drain() {
  while (!pending_.empty()) {
    if (rng_ && pending_.size() > 1) {
      std::uniform_int_distribution<std::size_t> pick(0, pending_.size() - 1);
      std::swap(pending_.front(), pending_[pick(*rng_)]);
    }
    auto m = std::move(pending_.front());
    pending_.pop_front();
    merge(m.u, m.v, std::move(m.cost));
  }
}

void Folder::add_edge(std::uint32_t src, std::uint32_t gen, std::uint32_t dst, Word witness) {
  attach(src, gen, dst, track_ ? std::move(witness) : Word());
  drain();
}

void Folder::add_loop(const Word& w, Word witness) {
  if (!track_) {
    witness = Word();
  }
  const auto letters = w.letters();
  const std::size_t n = letters.size();

  // Longest readable prefix, accumulating its cost.
  std::uint32_t head = find(base_);
  Word prefix_cost = track_ ? Word(witness_rank_) : Word();
  std::size_t i = 0;
  for (; i < n; ++i) {
    auto l = letters[i];
    auto e = l.inv ? in(head, l.gen) : out(head, l.gen);
    if (e < 0) {
      break;
    }
    prefix_cost = mul(prefix_cost, traverse_cost(e, l.inv));
    head = l.inv ? edges_[e].src : edges_[e].dst;
  }

  // Longest readable suffix of the remainder, read backwards from the base.
  std::uint32_t tail = find(base_);
  Word suffix_cost = track_ ? Word(witness_rank_) : Word();
  std::size_t j = n;
  for (; j > i; --j) {
    auto l = letters[j - 1];
    // arriving at `tail` by l means leaving `tail` by l^-1
    auto e = l.inv ? out(tail, l.gen) : in(tail, l.gen);
    if (e < 0) {
      break;
    }
    suffix_cost = mul(traverse_cost(e, l.inv), suffix_cost);
    tail = l.inv ? edges_[e].dst : edges_[e].src;
  }

  // cost the new middle section must carry from head to tail
  Word bridge = mul(mul(inv(prefix_cost), witness), inv(suffix_cost));
  if (i == j) {
    pending_.push_back({head, tail, std::move(bridge)});
    drain();
    return;
  }
  std::uint32_t cur = head;
  for (std::size_t k = i; k < j; ++k) {
    std::uint32_t next = (k + 1 == j) ? tail : add_vertex();
    auto l = letters[k];
    Word wit = (k == i) ? bridge : (track_ ? Word(witness_rank_) : Word());
    if (l.inv) {
      attach(next, l.gen, cur, inv(wit));
    } else {
      attach(cur, l.gen, next, std::move(wit));
    }
    cur = next;
  }
  drain();
}

Folder::Result Folder::finish() const {
  const std::size_t vertex_count = parent_.size();
  std::vector<std::int32_t> raw(vertex_count * rank_, -1);
  for (const auto& e : edges_) {
    if (e.alive) {
      raw[e.src * rank_ + e.gen] = static_cast<std::int32_t>(e.dst);
    }
  }
  std::uint32_t root = base_;
  while (parent_[root] != root) {
    root = parent_[root];
  }
  std::vector<std::uint32_t> new_to_old;
  Result result{CoreGraph::canonicalize(rank_, vertex_count, root, raw, &new_to_old), {}};
  if (track_) {
    result.witness.resize(result.graph.vertex_count() * rank_);
    for (std::uint32_t v = 0; v < result.graph.vertex_count(); ++v) {
      for (std::uint32_t g = 0; g < rank_; ++g) {
        if (result.graph.target(v, g)) {
          auto e = out_[new_to_old[v] * rank_ + g];
          result.witness[v * rank_ + g] = edges_[e].witness;
        }
      }
    }
  }
  return result;
}

}  // namespace freecomm::detail
