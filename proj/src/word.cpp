#include "g2chart/word.hpp"

#include <sstream>

namespace g2chart {

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.push_back(g2chart::inverse(*it));
  return Word(std::move(out));
}

Word Word::pow(int k) const {
  const Word base = k >= 0 ? *this : inverse();
  const int n = k >= 0 ? k : -k;
  Word out;
  for (int i = 0; i < n; ++i) out.append(base);
  return out;
}

Word operator*(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const Letter& l : w.letters()) {
    if (!stack.empty() && stack.back().gen == l.gen && stack.back().sign == -l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(std::move(stack));
}

Word expand_sigma(const Word& w) {
  static const Word exp_pos = sigma_expansion();
  static const Word exp_neg = sigma_expansion().inverse();
  Word out;
  for (const Letter& l : w.letters()) {
    if (l.gen == Gen::S)
      out.append(l.sign > 0 ? exp_pos : exp_neg);
    else
      out.push(l);
  }
  return out;
}

bool contains_sigma(const Word& w) {
  for (const Letter& l : w.letters())
    if (l.gen == Gen::S) return true;
  return false;
}

Word word_zeta(int i, int sign) {
  return Word({Letter{zeta(i), static_cast<std::int8_t>(sign)}});
}

Word word_sigma() { return Word({pos(Gen::S)}); }

Word sigma_expansion() {
  Word out;
  for (int k = 0; k < 6; ++k) {
    out.push(pos(Gen::Z1));
    out.push(pos(Gen::Z2));
  }
  return out;
}

Word word_iota() {
  Word out;
  static const int idx[10] = {1, 2, 3, 4, 5, 5, 4, 3, 2, 1};
  for (int i : idx) out.push(pos(zeta(i)));
  return out;
}

Word word_rho() {
  Word out;
  for (int i = 1; i <= 5; ++i) out.push(pos(zeta(i)));
  return out;
}

std::string to_string(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters()) {
    if (!first) os << ' ';
    first = false;
    if (l.gen == Gen::S)
      os << 's';
    else
      os << 'z' << chain_index(l.gen);
    if (l.sign < 0) os << '\'';
  }
  return os.str();
}

Word parse_word(const std::string& text) {
  Word out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    std::int8_t sign = +1;
    if (!tok.empty() && tok.back() == '\'') {
      sign = -1;
      tok.pop_back();
    }
    if (tok == "s") {
      out.push(Letter{Gen::S, sign});
    } else if (tok.size() == 2 && tok[0] == 'z' && tok[1] >= '1' && tok[1] <= '5') {
      out.push(Letter{zeta(tok[1] - '0'), sign});
    } else {
      throw std::invalid_argument("bad word token: '" + tok + "'");
    }
  }
  return out;
}

}  // namespace g2chart
