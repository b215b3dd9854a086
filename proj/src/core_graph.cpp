#include "freecomm/core_graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "folder.hpp"
#include "freecomm/error.hpp"

namespace freecomm {

CoreGraph::CoreGraph(std::size_t rank)
    : rank_(rank), vertex_count_(1), edge_count_(0), out_(rank, -1), in_(rank, -1) {}

std::optional<std::uint32_t> CoreGraph::trace(const Word& w, std::uint32_t from) const {
  std::uint32_t v = from;
  for (auto l : w) {
    auto next = step(v, l);
    if (!next) {
      return std::nullopt;
    }
    v = *next;
  }
  return v;
}

CoreGraph CoreGraph::canonicalize(std::size_t rank, std::size_t vertex_count,
                                  std::uint32_t base_vertex,
                                  const std::vector<std::int32_t>& out,
                                  std::vector<std::uint32_t>* new_to_old) {
  std::vector<std::int32_t> in(out.size(), -1);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    for (std::size_t g = 0; g < rank; ++g) {
      if (auto t = out[v * rank + g]; t >= 0) {
        in[t * rank + g] = static_cast<std::int32_t>(v);
      }
    }
  }

  // Component of the basepoint, with degrees (loops count twice).
  std::vector<char> alive(vertex_count, 0);
  std::vector<std::uint32_t> degree(vertex_count, 0);
  std::vector<std::uint32_t> stack{base_vertex};
  alive[base_vertex] = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (std::size_t g = 0; g < rank; ++g) {
      for (auto nb : {out[v * rank + g], in[v * rank + g]}) {
        if (nb < 0) {
          continue;
        }
        ++degree[v];
        if (!alive[nb]) {
          alive[nb] = 1;
          stack.push_back(static_cast<std::uint32_t>(nb));
        }
      }
    }
  }

  // Trim hanging trees: repeatedly drop non-base vertices of degree one.
  std::vector<char> dead_edge_out(out.size(), 0);
  for (std::uint32_t v = 0; v < vertex_count; ++v) {
    if (alive[v] && v != base_vertex && degree[v] <= 1) {
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    if (!alive[v]) {
      continue;
    }
    alive[v] = 0;
    for (std::size_t g = 0; g < rank; ++g) {
      std::int32_t nb = -1;
      if (auto t = out[v * rank + g]; t >= 0 && !dead_edge_out[v * rank + g]) {
        dead_edge_out[v * rank + g] = 1;
        nb = t;
      } else if (auto s = in[v * rank + g]; s >= 0 && !dead_edge_out[s * rank + g]) {
        dead_edge_out[s * rank + g] = 1;
        nb = s;
      }
      if (nb >= 0 && alive[nb]) {
        if (--degree[nb] <= 1 && static_cast<std::uint32_t>(nb) != base_vertex) {
          stack.push_back(static_cast<std::uint32_t>(nb));
        }
      }
    }
  }

  // BFS renumbering.
  std::vector<std::int32_t> old_to_new(vertex_count, -1);
  std::vector<std::uint32_t> order{base_vertex};
  old_to_new[base_vertex] = 0;
  auto live = [&](std::size_t v, std::size_t g, bool outgoing) -> std::int32_t {
    if (outgoing) {
      auto t = out[v * rank + g];
      return (t >= 0 && !dead_edge_out[v * rank + g]) ? t : -1;
    }
    auto s = in[v * rank + g];
    return (s >= 0 && !dead_edge_out[s * rank + g]) ? s : -1;
  };
  for (std::size_t head = 0; head < order.size(); ++head) {
    auto v = order[head];
    for (std::size_t g = 0; g < rank; ++g) {
      for (bool outgoing : {true, false}) {
        auto nb = live(v, g, outgoing);
        if (nb >= 0 && old_to_new[nb] < 0) {
          old_to_new[nb] = static_cast<std::int32_t>(order.size());
          order.push_back(static_cast<std::uint32_t>(nb));
        }
      }
    }
  }

  CoreGraph result;
  result.rank_ = rank;
  result.vertex_count_ = order.size();
  result.out_.assign(order.size() * rank, -1);
  result.in_.assign(order.size() * rank, -1);
  for (std::size_t nv = 0; nv < order.size(); ++nv) {
    for (std::size_t g = 0; g < rank; ++g) {
      if (auto t = live(order[nv], g, true); t >= 0) {
        auto nt = old_to_new[t];
        result.out_[nv * rank + g] = nt;
        result.in_[nt * rank + g] = static_cast<std::int32_t>(nv);
        ++result.edge_count_;
      }
    }
  }
  if (new_to_old) {
    *new_to_old = std::move(order);
  }
  return result;
}

std::string CoreGraph::dot(const Alphabet& alphabet) const {
  std::ostringstream os;
  os << "digraph core {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    os << "  " << v;
    if (v == base) {
      os << " [shape=doublecircle]";
    }
    os << ";\n";
  }
  for (std::uint32_t v = 0; v < vertex_count_; ++v) {
    for (std::uint32_t g = 0; g < rank_; ++g) {
      if (auto t = target(v, g)) {
        os << "  " << v << " -> " << *t << " [label=\"" << alphabet.name(g) << "\"];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

PreAutomaton PreAutomaton::wedge(std::size_t rank, std::span<const Word> words) {
  PreAutomaton pre;
  pre.rank = rank;
  for (const auto& w : words) {
    if (w.rank() != rank) {
      throw Error(ErrorCode::alphabet_mismatch, "petal over a different alphabet");
    }
    if (w.empty()) {
      continue;
    }
    std::uint32_t cur = pre.base;
    for (std::size_t k = 0; k < w.size(); ++k) {
      std::uint32_t next = pre.base;
      if (k + 1 < w.size()) {
        next = static_cast<std::uint32_t>(pre.vertex_count++);
      }
      if (w[k].inv) {
        pre.edges.push_back({next, w[k].gen, cur});
      } else {
        pre.edges.push_back({cur, w[k].gen, next});
      }
      cur = next;
    }
  }
  return pre;
}

PreAutomaton PreAutomaton::from_core(const CoreGraph& g) {
  PreAutomaton pre;
  pre.rank = g.rank();
  pre.vertex_count = g.vertex_count();
  pre.base = CoreGraph::base;
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    for (std::uint32_t a = 0; a < g.rank(); ++a) {
      if (auto t = g.target(v, a)) {
        pre.edges.push_back({v, a, *t});
      }
    }
  }
  return pre;
}

CoreGraph fold(const PreAutomaton& pre, std::optional<std::uint64_t> seed) {
  std::vector<std::size_t> order(pre.edges.size());
  std::iota(order.begin(), order.end(), 0);
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  detail::Folder folder(pre.rank, pre.vertex_count, pre.base, std::nullopt, seed);
  for (auto i : order) {
    const auto& e = pre.edges[i];
    if (e.src >= pre.vertex_count || e.dst >= pre.vertex_count || e.gen >= pre.rank) {
      throw Error(ErrorCode::malformed_input, "edge out of range in pre-automaton");
    }
    folder.add_edge(e.src, e.gen, e.dst);
  }
  return folder.finish().graph;
}

}  // namespace freecomm
