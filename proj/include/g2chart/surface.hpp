#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2chart/word.hpp"

namespace g2chart {

// The genus-two surface group <x1, y1, x2, y2 | [x1,y1][x2,y2]>.
// Letters are encoded 0..7 as 2*generator + (1 if inverse).
using SLetter = std::uint8_t;
using SWord = std::vector<SLetter>;

constexpr SLetter kX1 = 0, kY1 = 2, kX2 = 4, kY2 = 6;

inline SLetter s_letter(int gen, int sign) {
  return static_cast<SLetter>(2 * gen + (sign < 0 ? 1 : 0));
}
inline SLetter s_inv(SLetter l) { return l ^ 1; }
inline int s_gen(SLetter l) { return l >> 1; }
inline int s_sign(SLetter l) { return (l & 1) ? -1 : +1; }

SWord s_inverse(const SWord& w);
std::string s_to_string(const SWord& w);

// Dehn's algorithm: free reduction plus replacement of any subword longer
// than half of a cyclic rotation of the relator (or its inverse) by the
// shorter complement. The relator is C'(1/6), so fixed points representing
// the trivial element are exactly the empty word.
SWord s_reduce(const SWord& w);

bool s_equal(const SWord& a, const SWord& b);
bool s_is_trivial(const SWord& w);

// w = prefix * core * prefix^-1 with core cyclically Dehn-reduced.
struct CyclicForm {
  SWord core;
  SWord prefix;
};
CyclicForm s_cyclic_reduce(const SWord& w);

// An automorphism given by the images of the four generators. Orientation-
// preserving mapping classes fix the relator up to conjugacy.
struct SurfaceAutomorphism {
  std::array<SWord, 4> img;

  static SurfaceAutomorphism identity_auto();
  SWord apply(const SWord& w) const;
  SurfaceAutomorphism after(const SurfaceAutomorphism& other) const;  // this o other
  std::size_t max_image_size() const;
};

// The relator [x1,y1][x2,y2].
SWord surface_relator();

// Image of the relator is conjugate to the relator itself.
bool relator_conjugacy_holds(const SurfaceAutomorphism& a);

// Automorphism induced by a twist generator. Rejects s (expand first).
SurfaceAutomorphism twist_action(Letter l);

struct Budget {
  std::size_t max_image_letters = 1u << 20;  // cap on generator images during composition
  std::size_t max_conj_scan = 4096;          // cap on centralizer-power scans
};

enum class VerdictKind { Yes, No, Unknown };

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string reason;  // which screen or witness decided

  bool yes() const { return kind == VerdictKind::Yes; }
  bool no() const { return kind == VerdictKind::No; }
  bool unknown() const { return kind == VerdictKind::Unknown; }
};

// Composite action of a word (s must be expanded by the caller or is
// expanded here). Returns nullopt when the budget is exceeded.
std::optional<SurfaceAutomorphism> act(const Word& w, const Budget& budget = {});

// Inner-automorphism test with explicit witness verification. Yes and No
// are sound; Unknown reports budget exhaustion.
struct InnerResult {
  Verdict verdict;
  SWord witness;  // conjugator when Yes
};
InnerResult is_inner(const SurfaceAutomorphism& a, const Budget& budget = {});

// Word problem for the mapping class group: sp screen first, then the
// surface-group oracle.
Verdict is_identity(const Word& w, const Budget& budget = {});
Verdict equal(const Word& u, const Word& v, const Budget& budget = {});

// The defining relation words (commutations, braids, iota^2, (z1..z5)^6,
// iota-centrality, and the s-expansion), each paired with a label.
std::vector<std::pair<std::string, Word>> defining_relations();

}  // namespace g2chart
