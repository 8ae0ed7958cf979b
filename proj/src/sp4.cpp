#include "g2chart/sp4.hpp"

namespace g2chart {
namespace {

constexpr std::int64_t kModulus = (1LL << 61) - 1;  // prime

// Intersection form on basis (a1, b1, a2, b2).
constexpr std::array<std::array<std::int64_t, 4>, 4> kJ = {{
    {0, 1, 0, 0},
    {-1, 0, 0, 0},
    {0, 0, 0, 1},
    {0, 0, -1, 0},
}};

// Homology classes of the chain curves, matching the abelianization of the
// surface-group twist action.
constexpr std::array<std::array<std::int64_t, 4>, 5> kClasses = {{
    {1, 0, 0, 0},    // C1 = a1
    {0, 1, 0, 0},    // C2 = b1
    {-1, 0, 0, 1},   // C3 = b2 - a1
    {0, 0, 1, 0},    // C4 = a2
    {0, 0, 0, 1},    // C5 = b2
}};

std::int64_t mulmod(std::int64_t a, std::int64_t b) {
  __int128 p = static_cast<__int128>(a) * b;
  std::int64_t r = static_cast<std::int64_t>(p % kModulus);
  return r < 0 ? r + kModulus : r;
}

SpMatrix mul_mod(const SpMatrix& a, const SpMatrix& b) {
  SpMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < 4; ++k)
        acc = (acc + mulmod(a.m[i][k] % kModulus + kModulus, b.m[k][j] % kModulus + kModulus)) % kModulus;
      out.m[i][j] = acc;
    }
  return out;
}

}  // namespace

SpMatrix SpMatrix::identity() {
  SpMatrix out;
  for (int i = 0; i < 4; ++i) out.m[i][i] = 1;
  return out;
}

SpMatrix SpMatrix::minus_identity() {
  SpMatrix out;
  for (int i = 0; i < 4; ++i) out.m[i][i] = -1;
  return out;
}

std::optional<SpMatrix> sp_mul_checked(const SpMatrix& a, const SpMatrix& b) {
  SpMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < 4; ++k) {
        std::int64_t term;
        if (__builtin_mul_overflow(a.m[i][k], b.m[k][j], &term)) return std::nullopt;
        if (__builtin_add_overflow(acc, term, &acc)) return std::nullopt;
      }
      out.m[i][j] = acc;
    }
  return out;
}

bool is_symplectic(const SpMatrix& m) {
  // Mt J M == J, exact arithmetic; entries are assumed small enough here.
  std::array<std::array<std::int64_t, 4>, 4> jm{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) jm[i][j] += kJ[i][k] * m.m[k][j];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < 4; ++k) acc += m.m[k][i] * jm[k][j];
      if (acc != kJ[i][j]) return false;
    }
  return true;
}

SpMatrix sp_generator(Gen g, int sign) {
  if (g == Gen::S) {
    // s acts trivially on homology (separating curve); computed via the
    // expansion to keep one evaluation path would give the same answer.
    return SpMatrix::identity();
  }
  const auto& c = kClasses[static_cast<int>(g)];
  std::array<std::int64_t, 4> jc{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) jc[i] += kJ[i][k] * c[k];
  // Transvection x -> x + sign * <x, c> c, i.e. M = I + sign * c (J c)^T.
  SpMatrix out = SpMatrix::identity();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.m[i][j] += sign * c[i] * jc[j];
  return out;
}

SpMatrix sp_image(const Word& w, bool* exact_out) {
  SpMatrix acc = SpMatrix::identity();
  bool exact = true;
  const Word flat = expand_sigma(w);
  for (const Letter& l : flat.letters()) {
    const SpMatrix g = sp_generator(l.gen, l.sign);
    if (exact) {
      if (auto p = sp_mul_checked(acc, g)) {
        acc = *p;
        continue;
      }
      exact = false;
      for (auto& row : acc.m)
        for (auto& v : row) v = ((v % kModulus) + kModulus) % kModulus;
    }
    acc = mul_mod(acc, g);
  }
  if (exact_out) *exact_out = exact;
  return acc;
}

bool sp_is_identity(const Word& w) {
  bool exact = false;
  SpMatrix m = sp_image(w, &exact);
  if (exact) return m == SpMatrix::identity();
  SpMatrix one;
  for (int i = 0; i < 4; ++i) one.m[i][i] = 1;
  return m == one;
}

}  // namespace g2chart
