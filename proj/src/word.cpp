#include "nec/word.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace nec {

std::string CanonicalGenerator::name() const {
  char letter;
  switch (kind) {
    case GenKind::Elliptic: letter = 'x'; break;
    case GenKind::Reflection: letter = 'c'; break;
    case GenKind::Connector: letter = 'e'; break;
    case GenKind::HyperbolicA: letter = 'a'; break;
    case GenKind::HyperbolicB: letter = 'b'; break;
    case GenKind::Glide: letter = 'd'; break;
    default: throw std::logic_error("bad generator kind");
  }
  if (kind == GenKind::Reflection) {
    if (i <= 9 && j <= 9) return std::string(1, letter) + std::to_string(i) + std::to_string(j);
    return std::string(1, letter) + std::to_string(i) + "_" + std::to_string(j);
  }
  return std::string(1, letter) + std::to_string(i);
}

CanonicalGenerator CanonicalGenerator::from_name(const std::string& name) {
  if (name.size() < 2) throw std::invalid_argument("bad generator name: " + name);
  GenKind kind;
  switch (name[0]) {
    case 'x': kind = GenKind::Elliptic; break;
    case 'c': kind = GenKind::Reflection; break;
    case 'e': kind = GenKind::Connector; break;
    case 'a': kind = GenKind::HyperbolicA; break;
    case 'b': kind = GenKind::HyperbolicB; break;
    case 'd': kind = GenKind::Glide; break;
    default: throw std::invalid_argument("bad generator name: " + name);
  }
  std::string digits = name.substr(1);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '_')
      throw std::invalid_argument("bad generator name: " + name);
  if (kind == GenKind::Reflection) {
    auto us = digits.find('_');
    if (us != std::string::npos)
      return reflection(std::stoi(digits.substr(0, us)), std::stoi(digits.substr(us + 1)));
    // compact form: first digit is the cycle index
    if (digits.size() < 2) throw std::invalid_argument("reflection needs two indices: " + name);
    return reflection(digits[0] - '0', std::stoi(digits.substr(1)));
  }
  if (digits.find('_') != std::string::npos)
    throw std::invalid_argument("bad generator name: " + name);
  return {kind, std::stoi(digits), 0};
}

void Word::append(const CanonicalGenerator& g, int exp) {
  if (exp == 0) return;
  if (!letters_.empty() && letters_.back().gen == g) {
    letters_.back().exp += exp;
    if (letters_.back().exp == 0) letters_.pop_back();
    return;
  }
  letters_.push_back({g, exp});
}

void Word::append(const Word& w) {
  for (const auto& l : w.letters_) append(l.gen, l.exp);
}

Word Word::inverse() const {
  Word w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.append(it->gen, -it->exp);
  return w;
}

Word Word::pow(int e) const {
  Word w;
  Word base = e < 0 ? inverse() : *this;
  for (int t = 0; t < (e < 0 ? -e : e); ++t) w.append(base);
  return w;
}

int Word::length() const {
  int n = 0;
  for (const auto& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
  return n;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& l : letters_) {
    if (!first) os << '.';
    first = false;
    os << l.gen.name();
    if (l.exp != 1) os << '^' << l.exp;
  }
  return os.str();
}

Word Word::parse(const std::string& text) {
  Word w;
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty() || t == "1") return w;
  std::size_t pos = 0;
  while (pos < t.size()) {
    auto dot = t.find('.', pos);
    std::string piece = t.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    pos = dot == std::string::npos ? t.size() : dot + 1;
    int exp = 1;
    auto caret = piece.find('^');
    if (caret != std::string::npos) {
      try {
        exp = std::stoi(piece.substr(caret + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in word: " + piece);
      }
      piece = piece.substr(0, caret);
    }
    w.append(CanonicalGenerator::from_name(piece), exp);
  }
  return w;
}

Word commutator(const Word& u, const Word& v) {
  Word w = u.inverse();
  w.append(v.inverse());
  w.append(u);
  w.append(v);
  return w;
}

std::vector<CanonicalGenerator> canonical_generators(const NecSignature& sig) {
  std::vector<CanonicalGenerator> out;
  for (int i = 1; i <= sig.genus; ++i) {
    if (sig.sign == Sign::Plus) {
      out.push_back(hyperbolic_a(i));
      out.push_back(hyperbolic_b(i));
    } else {
      out.push_back(glide(i));
    }
  }
  for (int i = 1; i <= sig.r(); ++i) out.push_back(elliptic(i));
  for (int i = 1; i <= sig.k(); ++i) {
    int s = sig.period_cycles[i - 1].length();
    for (int j = 0; j <= s; ++j) out.push_back(reflection(i, j));
    out.push_back(connector(i));
  }
  return out;
}

bool is_generator_of(const NecSignature& sig, const CanonicalGenerator& g) {
  switch (g.kind) {
    case GenKind::Elliptic: return g.i >= 1 && g.i <= sig.r();
    case GenKind::Connector: return g.i >= 1 && g.i <= sig.k();
    case GenKind::HyperbolicA:
    case GenKind::HyperbolicB:
      return sig.sign == Sign::Plus && g.i >= 1 && g.i <= sig.genus;
    case GenKind::Glide:
      return sig.sign == Sign::Minus && g.i >= 1 && g.i <= sig.genus;
    case GenKind::Reflection:
      return g.i >= 1 && g.i <= sig.k() && g.j >= 0 &&
             g.j <= sig.period_cycles[g.i - 1].length();
  }
  return false;
}

int orientation_character(const NecSignature& sig, const Word& w) {
  long long parity = 0;
  for (const auto& l : w.letters()) {
    if (!is_generator_of(sig, l.gen))
      throw std::invalid_argument("word uses unknown generator " + l.gen.name());
    if (l.gen.kind == GenKind::Reflection || l.gen.kind == GenKind::Glide) parity += l.exp;
  }
  return (parity % 2 + 2) % 2 == 1 ? -1 : +1;
}

} // namespace nec
