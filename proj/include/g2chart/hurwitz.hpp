#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "g2chart/surface.hpp"
#include "g2chart/word.hpp"

namespace g2chart {

// Kind and sign of a factor determine the singular-fiber type:
// non-separating/+ -> I+, non-separating/- -> I-, separating/+ -> II+,
// separating/- -> II-.
struct FactorClass {
  bool separating = false;
  int index = 1;  // 1..5 when non-separating
  int sign = +1;

  friend bool operator==(const FactorClass&, const FactorClass&) = default;
};

// conjugator * core^sign * conjugator^-1, stored structurally so the class
// is known by construction.
struct HurwitzFactor {
  Word conjugator;
  FactorClass cls;

  Letter core_letter() const;
  Word word() const;
  HurwitzFactor canonical() const;

  friend bool operator==(const HurwitzFactor&, const HurwitzFactor&) = default;
};

struct HurwitzSystem {
  std::vector<HurwitzFactor> factors;

  std::size_t size() const { return factors.size(); }
  HurwitzSystem canonical() const;

  friend bool operator==(const HurwitzSystem&, const HurwitzSystem&) = default;
};

struct FiberCounts {
  std::int64_t nIp = 0, nIm = 0, nIIp = 0, nIIm = 0;

  FiberCounts operator+(const FiberCounts& o) const {
    return {nIp + o.nIp, nIm + o.nIm, nIIp + o.nIIp, nIIm + o.nIIm};
  }
  std::int64_t total() const { return nIp + nIm + nIIp + nIIm; }
  friend bool operator==(const FiberCounts&, const FiberCounts&) = default;
};

std::string to_string(const FiberCounts& c);

Word total_monodromy(const HurwitzSystem& h);
FiberCounts counts(const HurwitzSystem& h);
FiberCounts counts(const FactorClass& c);

enum class MoveDir { Left, Right };

// Elementary transformation at 1-based index i (1 <= i < length):
// right: (g_i, g_{i+1}) -> (g_i g_{i+1} g_i^-1, g_i); left is its inverse.
HurwitzSystem hurwitz_move(const HurwitzSystem& h, std::size_t i, MoveDir dir);

// Left-multiplies every conjugator by w.
HurwitzSystem global_conjugate(const HurwitzSystem& h, const Word& w);

HurwitzSystem fiber_sum(const HurwitzSystem& a, const HurwitzSystem& b);

enum class BasicSystem { W0, W1, W2, W1p, W2p };

HurwitzSystem basic_system(BasicSystem name);
std::optional<BasicSystem> basic_system_by_name(const std::string& name);
std::string basic_system_name(BasicSystem b);

// Textual format: one factor per line, "conjugator | core | sign", empty
// conjugator written "e". Round-trips exactly.
std::string to_text(const HurwitzSystem& h);
HurwitzSystem parse_system(const std::string& text);

// ---- equivalence search ---------------------------------------------------

struct SearchBudget {
  std::size_t max_states = 200000;
  std::size_t max_depth = 16;
  bool allow_global_conjugation = false;
};

struct SearchMove {
  enum class Kind { Hurwitz, Conjugate } kind = Kind::Hurwitz;
  std::size_t index = 0;  // 1-based factor index for Hurwitz moves
  MoveDir dir = MoveDir::Right;
  Letter letter{Gen::Z1, +1};  // for Conjugate
};

struct SearchResult {
  enum class Kind { Equivalent, Distinct, Unknown } kind = Kind::Unknown;
  std::vector<SearchMove> path;  // replayable when Equivalent
  std::string witness;           // invariant mismatch when Distinct
  std::size_t states_explored = 0;
};

HurwitzSystem replay(const HurwitzSystem& h, const std::vector<SearchMove>& path);

// Breadth-first search over Hurwitz moves with canonical-form deduplication.
// Serial reference implementation.
SearchResult equivalence_search_serial(const HurwitzSystem& a, const HurwitzSystem& b,
                                       const SearchBudget& budget = {});

// Parallel frontier expansion; identical verdicts and paths for a fixed
// budget regardless of thread count.
SearchResult equivalence_search(const HurwitzSystem& a, const HurwitzSystem& b,
                                const SearchBudget& budget = {});

}  // namespace g2chart
