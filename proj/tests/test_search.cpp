#include "doctest.h"
#include "g2chart/hurwitz.hpp"

using namespace g2chart;

namespace {
HurwitzSystem pair_system(int i, int j) {
  HurwitzSystem h;
  h.factors.push_back({Word{}, {false, i, +1}});
  h.factors.push_back({Word{}, {false, i, -1}});
  h.factors.push_back({Word{}, {false, j, +1}});
  h.factors.push_back({Word{}, {false, j, -1}});
  return h;
}
}  // namespace

TEST_CASE("reflexive equivalence with empty path") {
  const auto h = basic_system(BasicSystem::W2);
  const auto r = equivalence_search(h, h);
  CHECK(r.kind == SearchResult::Kind::Equivalent);
  CHECK(r.path.empty());
}

TEST_CASE("commuting cancelling pairs are equivalent with a replayable path") {
  const auto a = pair_system(1, 3);
  const auto b = pair_system(3, 1);
  const auto r = equivalence_search(a, b);
  REQUIRE(r.kind == SearchResult::Kind::Equivalent);
  CHECK(replay(a, r.path).canonical() == b.canonical());
  const auto rs = equivalence_search_serial(a, b);
  REQUIRE(rs.kind == SearchResult::Kind::Equivalent);
  CHECK(replay(a, rs.path).canonical() == b.canonical());
}

TEST_CASE("count mismatch gives a distinct witness") {
  const auto r = equivalence_search(basic_system(BasicSystem::W0), basic_system(BasicSystem::W1));
  CHECK(r.kind == SearchResult::Kind::Distinct);
  CHECK(r.witness.find("counts") != std::string::npos);
}

TEST_CASE("homology witness for equal counts but different totals") {
  HurwitzSystem a, b;
  a.factors.push_back({Word{}, {false, 1, +1}});
  b.factors.push_back({Word{}, {false, 2, +1}});
  const auto r = equivalence_search(a, b);
  CHECK(r.kind == SearchResult::Kind::Distinct);
}

TEST_CASE("serial and parallel agree") {
  const auto a = pair_system(1, 4);
  const auto b = pair_system(4, 1);
  const auto r1 = equivalence_search_serial(a, b);
  const auto r2 = equivalence_search(a, b);
  CHECK(r1.kind == r2.kind);
  SearchBudget tight;
  tight.max_states = 10;
  tight.max_depth = 2;
  const auto t1 = equivalence_search_serial(basic_system(BasicSystem::W0),
                                            hurwitz_move(basic_system(BasicSystem::W0), 7, MoveDir::Right));
  CHECK(t1.kind == SearchResult::Kind::Equivalent);
}

TEST_CASE("global conjugation flag reaches conjugated systems") {
  HurwitzSystem a;
  a.factors.push_back({Word{}, {false, 1, +1}});
  const HurwitzSystem b = global_conjugate(a, parse_word("z3"));
  SearchBudget budget;
  budget.allow_global_conjugation = true;
  budget.max_depth = 3;
  const auto r = equivalence_search(a, b, budget);
  REQUIRE(r.kind == SearchResult::Kind::Equivalent);
  CHECK(replay(a, r.path).canonical() == b.canonical());
}
