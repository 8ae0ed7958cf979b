#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "g2chart/hurwitz.hpp"
#include "g2chart/sp4.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace g2chart {

namespace {

std::string state_key(const HurwitzSystem& h) { return to_text(h.canonical()); }

std::vector<SearchMove> enumerate_moves(const HurwitzSystem& h, bool allow_conj) {
  std::vector<SearchMove> out;
  for (std::size_t i = 1; i < h.factors.size(); ++i) {
    out.push_back({SearchMove::Kind::Hurwitz, i, MoveDir::Right, {}});
    out.push_back({SearchMove::Kind::Hurwitz, i, MoveDir::Left, {}});
  }
  if (allow_conj) {
    for (int g = 0; g < kNumGens; ++g)
      for (int s : {+1, -1})
        out.push_back({SearchMove::Kind::Conjugate, 0, MoveDir::Right,
                       Letter{static_cast<Gen>(g), static_cast<std::int8_t>(s)}});
  }
  return out;
}

HurwitzSystem apply_move(const HurwitzSystem& h, const SearchMove& m) {
  if (m.kind == SearchMove::Kind::Hurwitz) return hurwitz_move(h, m.index, m.dir);
  return global_conjugate(h, Word({m.letter}));
}

// Cheap sound separators.
std::optional<std::string> distinct_witness(const HurwitzSystem& a, const HurwitzSystem& b,
                                            bool allow_conj) {
  if (counts(a) != counts(b))
    return "fiber counts differ: (" + to_string(counts(a)) + ") vs (" + to_string(counts(b)) + ")";
  if (!allow_conj) {
    // Hurwitz moves preserve the total monodromy exactly.
    const Word ta = total_monodromy(a), tb = total_monodromy(b);
    if (sp_image(ta * tb.inverse()) != SpMatrix::identity())
      return "total monodromies differ in the homology representation";
  }
  return std::nullopt;
}

struct Node {
  HurwitzSystem state;
  std::size_t parent;  // index into nodes
  SearchMove via;
  std::size_t depth;
};

std::vector<SearchMove> path_to(const std::vector<Node>& nodes, std::size_t idx) {
  std::vector<SearchMove> path;
  while (idx != 0) {
    path.push_back(nodes[idx].via);
    idx = nodes[idx].parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

SearchResult search_impl(const HurwitzSystem& a, const HurwitzSystem& b,
                         const SearchBudget& budget, bool parallel) {
  SearchResult res;
  const std::string target = state_key(b);
  if (state_key(a) == target) {
    res.kind = SearchResult::Kind::Equivalent;
    return res;
  }
  if (auto w = distinct_witness(a, b, budget.allow_global_conjugation)) {
    res.kind = SearchResult::Kind::Distinct;
    res.witness = *w;
    return res;
  }

  std::vector<Node> nodes;
  nodes.push_back({a, 0, {}, 0});
  std::unordered_set<std::string> seen;
  seen.insert(state_key(a));
  std::vector<std::size_t> frontier{0};

  while (!frontier.empty()) {
    const std::size_t depth = nodes[frontier.front()].depth;
    if (depth >= budget.max_depth) {
      res.kind = SearchResult::Kind::Unknown;
      res.states_explored = nodes.size();
      return res;
    }
    struct Cand {
      std::string key;
      HurwitzSystem state;
      std::size_t parent;
      SearchMove via;
      std::size_t ord;
    };
    std::vector<Cand> cands;
#ifdef _OPENMP
    if (parallel) {
      std::vector<std::vector<Cand>> bufs;
      #pragma omp parallel
      {
        #pragma omp single
        bufs.resize(static_cast<std::size_t>(omp_get_num_threads()));
        auto& buf = bufs[static_cast<std::size_t>(omp_get_thread_num())];
        #pragma omp for schedule(static)
        for (std::ptrdiff_t fi = 0; fi < static_cast<std::ptrdiff_t>(frontier.size()); ++fi) {
          const std::size_t ni = frontier[static_cast<std::size_t>(fi)];
          const auto moves = enumerate_moves(nodes[ni].state, budget.allow_global_conjugation);
          for (std::size_t mi = 0; mi < moves.size(); ++mi) {
            HurwitzSystem next = apply_move(nodes[ni].state, moves[mi]);
            buf.push_back({state_key(next), std::move(next), ni,
                           moves[mi], static_cast<std::size_t>(fi) * 1000 + mi});
          }
        }
      }
      for (auto& b2 : bufs)
        for (auto& c : b2) cands.push_back(std::move(c));
    } else
#endif
    {
      (void)parallel;
      for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
        const std::size_t ni = frontier[fi];
        const auto moves = enumerate_moves(nodes[ni].state, budget.allow_global_conjugation);
        for (std::size_t mi = 0; mi < moves.size(); ++mi) {
          HurwitzSystem next = apply_move(nodes[ni].state, moves[mi]);
          cands.push_back({state_key(next), std::move(next), ni, moves[mi],
                           fi * 1000 + mi});
        }
      }
    }
    // Deterministic dedup independent of expansion interleaving.
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
      if (x.key != y.key) return x.key < y.key;
      return x.ord < y.ord;
    });
    std::vector<std::size_t> next_frontier;
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
      if (ci > 0 && cands[ci].key == cands[ci - 1].key) continue;
      if (!seen.insert(cands[ci].key).second) continue;
      nodes.push_back({std::move(cands[ci].state), cands[ci].parent, cands[ci].via, depth + 1});
      next_frontier.push_back(nodes.size() - 1);
      if (cands[ci].key == target) {
        res.kind = SearchResult::Kind::Equivalent;
        res.path = path_to(nodes, nodes.size() - 1);
        res.states_explored = nodes.size();
        return res;
      }
      if (nodes.size() > budget.max_states) {
        res.kind = SearchResult::Kind::Unknown;
        res.states_explored = nodes.size();
        return res;
      }
    }
    frontier = std::move(next_frontier);
  }
  // Orbit fully enumerated without reaching the target.
  res.kind = SearchResult::Kind::Distinct;
  res.witness = "move orbit exhausted without reaching the target";
  res.states_explored = nodes.size();
  return res;
}

}  // namespace

SearchResult equivalence_search_serial(const HurwitzSystem& a, const HurwitzSystem& b,
                                       const SearchBudget& budget) {
  return search_impl(a, b, budget, false);
}

SearchResult equivalence_search(const HurwitzSystem& a, const HurwitzSystem& b,
                                const SearchBudget& budget) {
  return search_impl(a, b, budget, true);
}

}  // namespace g2chart
