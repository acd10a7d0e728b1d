#include "nec/presentation.hpp"

namespace nec {

Presentation canonical_presentation(const NecSignature& sig) {
  Presentation p;
  p.generators = canonical_generators(sig);

  for (int i = 1; i <= sig.r(); ++i) {
    Word w;
    w.append(elliptic(i), sig.proper_periods[i - 1]);
    p.relators.push_back(w);
  }
  for (int i = 1; i <= sig.k(); ++i) {
    const auto& cyc = sig.period_cycles[i - 1];
    int s = cyc.length();
    for (int j = 0; j <= s; ++j) {
      Word w;
      w.append(reflection(i, j), 2);
      p.relators.push_back(w);
    }
    for (int j = 1; j <= s; ++j) {
      Word pair;
      pair.append(reflection(i, j - 1));
      pair.append(reflection(i, j));
      p.relators.push_back(pair.pow(cyc.link_periods[j - 1]));
    }
    // c_{i s_i} . (e_i c_{i0} e_i^-1)^-1
    Word conj;
    conj.append(reflection(i, s));
    conj.append(connector(i));
    conj.append(reflection(i, 0), -1);
    conj.append(connector(i), -1);
    p.relators.push_back(conj);
  }

  Word long_rel;
  for (int i = 1; i <= sig.genus; ++i) {
    if (sig.sign == Sign::Plus) {
      Word a, b;
      a.append(hyperbolic_a(i));
      b.append(hyperbolic_b(i));
      long_rel.append(commutator(a, b));
    } else {
      long_rel.append(glide(i), 2);
    }
  }
  for (int i = 1; i <= sig.r(); ++i) long_rel.append(elliptic(i));
  for (int i = 1; i <= sig.k(); ++i) long_rel.append(connector(i));
  p.relators.push_back(long_rel);
  return p;
}

} // namespace nec
