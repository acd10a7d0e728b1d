#pragma once

#include <compare>
#include <string>
#include <vector>

#include "nec/signature.hpp"

namespace nec {

// Canonical generator kinds of a signature's presentation. Reflections carry a
// second index j (0..s_i); all other kinds use only i (1-based).
enum class GenKind { Elliptic, Reflection, Connector, HyperbolicA, HyperbolicB, Glide };

struct CanonicalGenerator {
  GenKind kind;
  int i = 1;
  int j = 0; // reflections only

  friend auto operator<=>(const CanonicalGenerator&, const CanonicalGenerator&) = default;

  // "x3", "e1", "a2", "b2", "d1", "c10" (= c_{1,0}); indexes beyond 9 use the
  // unambiguous underscore form "c12_0".
  std::string name() const;
  static CanonicalGenerator from_name(const std::string& name);
};

inline CanonicalGenerator elliptic(int i) { return {GenKind::Elliptic, i, 0}; }
inline CanonicalGenerator reflection(int i, int j) { return {GenKind::Reflection, i, j}; }
inline CanonicalGenerator connector(int i) { return {GenKind::Connector, i, 0}; }
inline CanonicalGenerator hyperbolic_a(int i) { return {GenKind::HyperbolicA, i, 0}; }
inline CanonicalGenerator hyperbolic_b(int i) { return {GenKind::HyperbolicB, i, 0}; }
inline CanonicalGenerator glide(int i) { return {GenKind::Glide, i, 0}; }

struct Letter {
  CanonicalGenerator gen;
  int exp = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// Freely reduced word: adjacent letters have distinct generators, exponents
// are nonzero. Reduction happens on append, so the invariant always holds.
class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) {
    for (const auto& l : letters) append(l.gen, l.exp);
  }

  void append(const CanonicalGenerator& g, int exp = 1);
  void append(const Word& w);
  Word inverse() const;
  Word pow(int e) const;

  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  // Sum of |exp| over all letters.
  int length() const;

  // "a1.c10^-1.d2^3"; empty word renders as "1".
  std::string str() const;
  static Word parse(const std::string& text);

  friend bool operator==(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

inline Word operator*(const Word& a, const Word& b) {
  Word w = a;
  w.append(b);
  return w;
}

// u^-1 v^-1 u v
Word commutator(const Word& u, const Word& v);

// All canonical generators of the signature, in presentation order:
// hyperbolic/glide pairs, elliptics, then per cycle c_{i0}..c_{i s_i}, e_i.
std::vector<CanonicalGenerator> canonical_generators(const NecSignature& sig);

// True iff the generator belongs to the signature's canonical set.
bool is_generator_of(const NecSignature& sig, const CanonicalGenerator& g);

// +1 or -1: parity of the total exponent sum of reflection and glide letters.
// Throws std::invalid_argument on a generator outside the signature.
int orientation_character(const NecSignature& sig, const Word& w);

} // namespace nec
