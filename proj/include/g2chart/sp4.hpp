#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "g2chart/word.hpp"

namespace g2chart {

// Integral 4x4 matrices preserving the standard symplectic form on
// H1 of the genus-two surface, basis (a1, b1, a2, b2). Used as a fast,
// non-faithful screen: sp_image(w) != I proves w != 1.
struct SpMatrix {
  std::array<std::array<std::int64_t, 4>, 4> m{};

  static SpMatrix identity();
  static SpMatrix minus_identity();

  friend bool operator==(const SpMatrix&, const SpMatrix&) = default;
};

// Exact product; returns nullopt on int64 overflow (caller falls back to
// the modular screen).
std::optional<SpMatrix> sp_mul_checked(const SpMatrix& a, const SpMatrix& b);

// Mt J M == J with J the standard form.
bool is_symplectic(const SpMatrix& m);

// Homology action of a single twist generator (s is expanded internally).
SpMatrix sp_generator(Gen g, int sign);

// Homology action of a word. Exact when it fits in int64; otherwise the
// entries are reduced modulo a large prime, which keeps "!= identity"
// conclusions sound. exact_out reports which case happened.
SpMatrix sp_image(const Word& w, bool* exact_out = nullptr);

bool sp_is_identity(const Word& w);

}  // namespace g2chart
