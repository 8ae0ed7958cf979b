#include "g2chart/hurwitz.hpp"

#include <sstream>
#include <stdexcept>

namespace g2chart {

Letter HurwitzFactor::core_letter() const {
  if (cls.separating) return Letter{Gen::S, static_cast<std::int8_t>(cls.sign)};
  return Letter{zeta(cls.index), static_cast<std::int8_t>(cls.sign)};
}

Word HurwitzFactor::word() const {
  Word out = conjugator;
  out.push(core_letter());
  out.append(conjugator.inverse());
  return out;
}

HurwitzFactor HurwitzFactor::canonical() const {
  HurwitzFactor out = *this;
  if (out.cls.separating) out.cls.index = 1;
  out.conjugator = free_reduce(out.conjugator);
  // conj * core^s * conj^-1 is unchanged when conj ends in a power of the core.
  const Gen core = cls.separating ? Gen::S : zeta(cls.index);
  auto ls = out.conjugator.letters();
  while (!ls.empty() && ls.back().gen == core) ls.pop_back();
  out.conjugator = Word(std::move(ls));
  return out;
}

HurwitzSystem HurwitzSystem::canonical() const {
  HurwitzSystem out;
  out.factors.reserve(factors.size());
  for (const auto& f : factors) out.factors.push_back(f.canonical());
  return out;
}

std::string to_string(const FiberCounts& c) {
  std::ostringstream os;
  os << c.nIp << ' ' << c.nIm << ' ' << c.nIIp << ' ' << c.nIIm;
  return os.str();
}

Word total_monodromy(const HurwitzSystem& h) {
  Word out;
  for (const auto& f : h.factors) out.append(f.word());
  return free_reduce(out);
}

FiberCounts counts(const FactorClass& c) {
  FiberCounts out;
  if (!c.separating) {
    (c.sign > 0 ? out.nIp : out.nIm) = 1;
  } else {
    (c.sign > 0 ? out.nIIp : out.nIIm) = 1;
  }
  return out;
}

FiberCounts counts(const HurwitzSystem& h) {
  FiberCounts out;
  for (const auto& f : h.factors) out = out + counts(f.cls);
  return out;
}

HurwitzSystem hurwitz_move(const HurwitzSystem& h, std::size_t i, MoveDir dir) {
  if (i < 1 || i >= h.factors.size())
    throw std::out_of_range("hurwitz_move index out of range");
  HurwitzSystem out = h;
  HurwitzFactor& a = out.factors[i - 1];
  HurwitzFactor& b = out.factors[i];
  if (dir == MoveDir::Right) {
    // (a, b) -> (a b a^-1, a)
    HurwitzFactor nb = b;
    nb.conjugator = free_reduce(a.word() * b.conjugator);
    const HurwitzFactor na = a;
    a = nb;
    b = na;
  } else {
    // (a, b) -> (b, b^-1 a b)
    HurwitzFactor na = a;
    na.conjugator = free_reduce(b.word().inverse() * a.conjugator);
    const HurwitzFactor nb = b;
    a = nb;
    b = na;
  }
  return out;
}

HurwitzSystem global_conjugate(const HurwitzSystem& h, const Word& w) {
  HurwitzSystem out = h;
  for (auto& f : out.factors) f.conjugator = free_reduce(w * f.conjugator);
  return out;
}

HurwitzSystem fiber_sum(const HurwitzSystem& a, const HurwitzSystem& b) {
  HurwitzSystem out = a;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  return out;
}

namespace {

HurwitzFactor plain(int index, int sign = +1) {
  return HurwitzFactor{Word{}, FactorClass{false, index, sign}};
}
HurwitzFactor plain_sigma(int sign = +1) {
  return HurwitzFactor{Word{}, FactorClass{true, 1, sign}};
}

void push_tuple(HurwitzSystem& h, std::initializer_list<int> idx) {
  for (int i : idx) h.factors.push_back(plain(i));
}

}  // namespace

HurwitzSystem basic_system(BasicSystem name) {
  HurwitzSystem h;
  switch (name) {
    case BasicSystem::W0:
      for (int r = 0; r < 2; ++r) push_tuple(h, {1, 2, 3, 4, 5, 5, 4, 3, 2, 1});
      break;
    case BasicSystem::W1:
      for (int r = 0; r < 6; ++r) push_tuple(h, {1, 2, 3, 4, 5});
      break;
    case BasicSystem::W2:
      h.factors.push_back(plain_sigma());
      for (int r = 0; r < 2; ++r) push_tuple(h, {3, 4, 5, 2, 3, 4, 1, 2, 3});
      push_tuple(h, {1, 2, 3, 4, 5, 5, 4, 3, 2, 1});
      break;
    case BasicSystem::W1p:
      h.factors.push_back(plain(1, +1));
      h.factors.push_back(plain(1, -1));
      break;
    case BasicSystem::W2p:
      h.factors.push_back(plain_sigma(+1));
      h.factors.push_back(plain_sigma(-1));
      break;
  }
  return h;
}

std::optional<BasicSystem> basic_system_by_name(const std::string& name) {
  if (name == "W0") return BasicSystem::W0;
  if (name == "W1") return BasicSystem::W1;
  if (name == "W2") return BasicSystem::W2;
  if (name == "W1p") return BasicSystem::W1p;
  if (name == "W2p") return BasicSystem::W2p;
  return std::nullopt;
}

std::string basic_system_name(BasicSystem b) {
  switch (b) {
    case BasicSystem::W0: return "W0";
    case BasicSystem::W1: return "W1";
    case BasicSystem::W2: return "W2";
    case BasicSystem::W1p: return "W1p";
    case BasicSystem::W2p: return "W2p";
  }
  return "?";
}

std::string to_text(const HurwitzSystem& h) {
  std::ostringstream os;
  for (const auto& f : h.factors) {
    const std::string conj = to_string(f.conjugator);
    os << (conj.empty() ? "e" : conj) << " | ";
    if (f.cls.separating)
      os << 's';
    else
      os << 'z' << f.cls.index;
    os << " | " << (f.cls.sign > 0 ? '+' : '-') << '\n';
  }
  return os.str();
}

HurwitzSystem parse_system(const std::string& text) {
  HurwitzSystem out;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line[line.find_first_not_of(" \t")] == '#') continue;
    const auto p1 = line.find('|');
    const auto p2 = line.find('|', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
      throw std::invalid_argument("system line " + std::to_string(lineno) +
                                  ": expected 'conjugator | core | sign'");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string conj = trim(line.substr(0, p1));
    const std::string core = trim(line.substr(p1 + 1, p2 - p1 - 1));
    const std::string sign = trim(line.substr(p2 + 1));
    HurwitzFactor f;
    f.conjugator = (conj == "e") ? Word{} : parse_word(conj);
    if (core == "s") {
      f.cls.separating = true;
    } else if (core.size() == 2 && core[0] == 'z' && core[1] >= '1' && core[1] <= '5') {
      f.cls.separating = false;
      f.cls.index = core[1] - '0';
    } else {
      throw std::invalid_argument("system line " + std::to_string(lineno) +
                                  ": bad core token '" + core + "'");
    }
    if (sign == "+")
      f.cls.sign = +1;
    else if (sign == "-")
      f.cls.sign = -1;
    else
      throw std::invalid_argument("system line " + std::to_string(lineno) +
                                  ": bad sign '" + sign + "'");
    out.factors.push_back(f);
  }
  return out;
}

HurwitzSystem replay(const HurwitzSystem& h, const std::vector<SearchMove>& path) {
  HurwitzSystem cur = h;
  for (const auto& m : path) {
    if (m.kind == SearchMove::Kind::Hurwitz)
      cur = hurwitz_move(cur, m.index, m.dir);
    else
      cur = global_conjugate(cur, Word({m.letter}));
  }
  return cur;
}

}  // namespace g2chart
