#include <random>

#include "doctest.h"
#include "g2chart/sp4.hpp"
#include "g2chart/surface.hpp"

using namespace g2chart;

TEST_CASE("generator matrices are symplectic transvections") {
  for (int i = 1; i <= 5; ++i) {
    for (int s : {+1, -1}) {
      const SpMatrix m = sp_generator(zeta(i), s);
      CHECK(is_symplectic(m));
      CHECK(m != SpMatrix::identity());
    }
  }
  CHECK(sp_generator(Gen::S, +1) == SpMatrix::identity());
}

TEST_CASE("homomorphism unit and inverses") {
  CHECK(sp_image(Word{}) == SpMatrix::identity());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> gen(0, 5), sgn(0, 1);
  for (int t = 0; t < 50; ++t) {
    Word w;
    for (int i = 0; i < 12; ++i)
      w.push(Letter{static_cast<Gen>(gen(rng)), static_cast<std::int8_t>(sgn(rng) ? 1 : -1)});
    CHECK(sp_image(w * w.inverse()) == SpMatrix::identity());
  }
}

TEST_CASE("sp respects products") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> gen(0, 4), sgn(0, 1);
  for (int t = 0; t < 40; ++t) {
    Word u, v;
    for (int i = 0; i < 8; ++i) {
      u.push(Letter{static_cast<Gen>(gen(rng)), static_cast<std::int8_t>(sgn(rng) ? 1 : -1)});
      v.push(Letter{static_cast<Gen>(gen(rng)), static_cast<std::int8_t>(sgn(rng) ? 1 : -1)});
    }
    const auto prod = sp_mul_checked(sp_image(u), sp_image(v));
    REQUIRE(prod.has_value());
    CHECK(sp_image(u * v) == *prod);
  }
}

TEST_CASE("separating twist acts trivially on homology") {
  // forced because s is a separating twist: a correctness gate on the
  // chosen chain classes
  CHECK(sp_image(sigma_expansion()) == SpMatrix::identity());
  CHECK(sp_image(word_sigma()) == SpMatrix::identity());
}

TEST_CASE("hyperelliptic involution acts by -1") {
  CHECK(sp_image(word_iota()) == SpMatrix::minus_identity());
  CHECK(sp_image(word_iota() * word_iota()) == SpMatrix::identity());
}

TEST_CASE("all defining relation words act trivially") {
  for (const auto& [name, w] : defining_relations()) {
    INFO(name);
    bool exact = false;
    const SpMatrix m = sp_image(w, &exact);
    CHECK(exact);
    CHECK(m == SpMatrix::identity());
  }
}

TEST_CASE("distinct transvections detected") {
  CHECK(sp_image(word_zeta(1)) != SpMatrix::identity());
  CHECK(sp_image(word_zeta(1)) != sp_image(word_zeta(2)));
  CHECK_FALSE(sp_is_identity(word_zeta(1)));
}
