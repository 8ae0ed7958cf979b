#include <random>

#include "doctest.h"
#include "g2chart/hurwitz.hpp"
#include "g2chart/sp4.hpp"

using namespace g2chart;

namespace {
HurwitzSystem random_system(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> idx(1, 5), sgn(0, 1), sep(0, 5), clen(0, 3);
  std::uniform_int_distribution<int> cg(0, 5);
  HurwitzSystem h;
  for (std::size_t i = 0; i < n; ++i) {
    HurwitzFactor f;
    f.cls.separating = sep(rng) == 0;
    f.cls.index = f.cls.separating ? 1 : idx(rng);
    f.cls.sign = sgn(rng) ? +1 : -1;
    const int cl = clen(rng);
    for (int k = 0; k < cl; ++k)
      f.conjugator.push(Letter{static_cast<Gen>(cg(rng)), static_cast<std::int8_t>(sgn(rng) ? 1 : -1)});
    h.factors.push_back(f);
  }
  return h;
}
}  // namespace

TEST_CASE("basic system shapes and counts reproduce the table") {
  CHECK(basic_system(BasicSystem::W0).size() == 20);
  CHECK(basic_system(BasicSystem::W1).size() == 30);
  CHECK(basic_system(BasicSystem::W2).size() == 29);
  CHECK(basic_system(BasicSystem::W1p).size() == 2);
  CHECK(basic_system(BasicSystem::W2p).size() == 2);

  CHECK(counts(basic_system(BasicSystem::W0)) == FiberCounts{20, 0, 0, 0});
  CHECK(counts(basic_system(BasicSystem::W1)) == FiberCounts{30, 0, 0, 0});
  CHECK(counts(basic_system(BasicSystem::W2)) == FiberCounts{28, 0, 1, 0});
  CHECK(counts(basic_system(BasicSystem::W1p)) == FiberCounts{1, 1, 0, 0});
  CHECK(counts(basic_system(BasicSystem::W2p)) == FiberCounts{0, 0, 1, 1});
  CHECK(counts(HurwitzSystem{}) == FiberCounts{0, 0, 0, 0});
}

TEST_CASE("total monodromies of the cancelling pairs") {
  CHECK(total_monodromy(basic_system(BasicSystem::W1p)).empty());
  CHECK(total_monodromy(basic_system(BasicSystem::W2p)).empty());
  CHECK(total_monodromy(basic_system(BasicSystem::W1)) == word_rho().pow(6));
}

TEST_CASE("basic totals are trivial in the mapping class group") {
  for (auto b : {BasicSystem::W0, BasicSystem::W1, BasicSystem::W1p, BasicSystem::W2p}) {
    INFO(basic_system_name(b));
    CHECK(is_identity(total_monodromy(basic_system(b))).yes());
  }
}

TEST_CASE("the 29-factor system resolves within the default budget") {
  CHECK(is_identity(total_monodromy(basic_system(BasicSystem::W2))).yes());
}

TEST_CASE("hurwitz move definition unrolled") {
  HurwitzSystem h;
  h.factors.push_back({Word{}, {false, 1, +1}});
  h.factors.push_back({Word{}, {false, 3, +1}});
  const HurwitzSystem m = hurwitz_move(h, 1, MoveDir::Right);
  CHECK(m.factors[0].cls == FactorClass{false, 3, +1});
  CHECK(m.factors[0].conjugator == word_zeta(1));
  CHECK(m.factors[1].cls == FactorClass{false, 1, +1});
  CHECK(m.factors[1].conjugator.empty());
  CHECK_THROWS(hurwitz_move(h, 2, MoveDir::Right));
  CHECK_THROWS(hurwitz_move(h, 0, MoveDir::Right));
}

TEST_CASE("moves preserve totals and counts; left inverts right") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    const HurwitzSystem h = random_system(rng, 2 + static_cast<std::size_t>(t % 6));
    std::uniform_int_distribution<std::size_t> pick(1, h.size() - 1);
    const std::size_t i = pick(rng);
    const HurwitzSystem r = hurwitz_move(h, i, MoveDir::Right);
    CHECK(counts(r) == counts(h));
    CHECK(total_monodromy(r) == total_monodromy(h));
    CHECK(hurwitz_move(r, i, MoveDir::Left).canonical() == h.canonical());
    const HurwitzSystem l = hurwitz_move(h, i, MoveDir::Left);
    CHECK(hurwitz_move(l, i, MoveDir::Right).canonical() == h.canonical());
  }
}

TEST_CASE("global conjugation") {
  std::mt19937_64 rng(43);
  const HurwitzSystem h = random_system(rng, 5);
  CHECK(global_conjugate(h, Word{}).canonical() == h.canonical());
  const Word w = parse_word("z1 z4'");
  const HurwitzSystem g = global_conjugate(h, w);
  CHECK(counts(g) == counts(h));
  const Word expect = free_reduce(w * total_monodromy(h) * w.inverse());
  CHECK(total_monodromy(g) == expect);
}

TEST_CASE("fiber sums add counts") {
  const auto w0 = basic_system(BasicSystem::W0);
  CHECK(counts(fiber_sum(w0, w0)) == FiberCounts{40, 0, 0, 0});
  CHECK(fiber_sum(w0, HurwitzSystem{}) == w0);
  const BasicSystem all[] = {BasicSystem::W0, BasicSystem::W1, BasicSystem::W2,
                             BasicSystem::W1p, BasicSystem::W2p};
  for (auto a : all)
    for (auto b : all)
      CHECK(counts(fiber_sum(basic_system(a), basic_system(b))) ==
            counts(basic_system(a)) + counts(basic_system(b)));
}

TEST_CASE("system text round trip is exact") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 40; ++t) {
    const HurwitzSystem h = random_system(rng, static_cast<std::size_t>(t % 8));
    CHECK(parse_system(to_text(h)) == h);
  }
  for (auto b : {BasicSystem::W0, BasicSystem::W1, BasicSystem::W2}) {
    const auto h = basic_system(b);
    CHECK(parse_system(to_text(h)) == h);
  }
  CHECK_THROWS(parse_system("z1 | z9 | +"));
  CHECK_THROWS(parse_system("no pipes here"));
}

TEST_CASE("factor canonicalization strips core powers") {
  HurwitzFactor f;
  f.cls = {false, 3, -1};
  f.conjugator = parse_word("z1 z3 z3");
  const HurwitzFactor c = f.canonical();
  CHECK(c.conjugator == parse_word("z1"));
  CHECK(free_reduce(c.word() * f.word().inverse()).empty());
}
