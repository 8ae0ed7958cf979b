#include <random>

#include "doctest.h"
#include "g2chart/word.hpp"

using namespace g2chart;

namespace {
Word random_word(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> gen(0, 5), sgn(0, 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i)
    w.push(Letter{static_cast<Gen>(gen(rng)), static_cast<std::int8_t>(sgn(rng) ? 1 : -1)});
  return w;
}
}  // namespace

TEST_CASE("free reduction basics") {
  CHECK(free_reduce(parse_word("z1 z1'")).empty());
  CHECK(free_reduce(Word{}).empty());
  CHECK(free_reduce(parse_word("z1 z2 z2' z3")) == parse_word("z1 z3"));
}

TEST_CASE("free reduction is idempotent and length-non-increasing") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Word w = random_word(rng, static_cast<std::size_t>(t % 40));
    const Word r = free_reduce(w);
    CHECK(r.size() <= w.size());
    CHECK(free_reduce(r) == r);
  }
}

TEST_CASE("sigma expansion") {
  const Word s = parse_word("s");
  const Word e = expand_sigma(s);
  CHECK(e.size() == 12);
  CHECK(e == parse_word("z1 z2 z1 z2 z1 z2 z1 z2 z1 z2 z1 z2"));
  CHECK(expand_sigma(parse_word("z3")) == parse_word("z3"));
  CHECK(expand_sigma(parse_word("s'")) ==
        parse_word("z2' z1' z2' z1' z2' z1' z2' z1' z2' z1' z2' z1'"));
  CHECK_FALSE(contains_sigma(e));
}

TEST_CASE("named words") {
  CHECK(word_iota() == parse_word("z1 z2 z3 z4 z5 z5 z4 z3 z2 z1"));
  CHECK(word_rho() == parse_word("z1 z2 z3 z4 z5"));
  CHECK(free_reduce(word_iota() * word_iota().inverse()).empty());
}

TEST_CASE("print/parse round trip is exact") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const Word w = random_word(rng, static_cast<std::size_t>(t % 25));
    CHECK(parse_word(to_string(w)) == w);
  }
  CHECK_THROWS(parse_word("z6"));
  CHECK_THROWS(parse_word("q1"));
}

TEST_CASE("inverse and power") {
  const Word w = parse_word("z1 z2' s");
  CHECK(w.inverse() == parse_word("s' z2 z1'"));
  CHECK(w.pow(2) == w * w);
  CHECK(w.pow(-1) == w.inverse());
  CHECK(w.pow(0).empty());
}
