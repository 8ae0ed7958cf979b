#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2chart {

// Generators of the genus-two mapping class group: the five Dehn twists
// z1..z5 along the standard chain of curves, plus the twist s along the
// separating curve. As a group element s equals (z1 z2)^6; it is kept as
// a letter of its own because chart edges carry it as a label.
enum class Gen : std::uint8_t { Z1 = 0, Z2, Z3, Z4, Z5, S };

constexpr int kNumGens = 6;

inline int chain_index(Gen g) {
  return static_cast<int>(g) + 1;  // Z1 -> 1 ... Z5 -> 5, S -> 6
}

inline Gen zeta(int i) {
  if (i < 1 || i > 5) throw std::out_of_range("zeta index must be 1..5");
  return static_cast<Gen>(i - 1);
}

struct Letter {
  Gen gen;
  std::int8_t sign;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter pos(Gen g) { return {g, +1}; }
inline Letter neg(Gen g) { return {g, -1}; }
inline Letter inverse(Letter l) { return {l.gen, static_cast<std::int8_t>(-l.sign)}; }

// A word in the generators; the universal currency for monodromies.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters_(std::move(ls)) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  void push(Letter l) { letters_.push_back(l); }
  void append(const Word& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
  }

  Word inverse() const;
  Word pow(int k) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word operator*(const Word& a, const Word& b);

// Removes adjacent cancelling pairs until none remain. Length-non-increasing
// and idempotent; the result represents the same group element.
Word free_reduce(const Word& w);

// Replaces every s^(+-1) by ((z1 z2)^6)^(+-1); the result has no S letters.
Word expand_sigma(const Word& w);

bool contains_sigma(const Word& w);

// Named words.
Word word_zeta(int i, int sign = +1);
Word word_sigma();        // the single letter s
Word sigma_expansion();   // (z1 z2)^6, twelve letters
Word word_iota();         // z1 z2 z3 z4 z5 z5 z4 z3 z2 z1
Word word_rho();          // z1 z2 z3 z4 z5

// Text form: whitespace-separated tokens z1..z5 and s, with a trailing
// apostrophe for the inverse, e.g. "z1 z2 s' z3". Round-trips exactly.
std::string to_string(const Word& w);
Word parse_word(const std::string& text);

}  // namespace g2chart
