#pragma once

#include <vector>

#include "nec/word.hpp"

namespace nec {

struct Presentation {
  std::vector<CanonicalGenerator> generators;
  std::vector<Word> relators;
};

// The defining relators of the signature's canonical presentation:
//   x_i^{m_i}                        for each proper period
//   c_{ij}^2                         for 0 <= j <= s_i, each cycle
//   (c_{i,j-1} c_{ij})^{n_ij}        for 1 <= j <= s_i
//   c_{i s_i} (e_i c_{i0} e_i^-1)^-1 per cycle
//   ([a_1,b_1]...[a_g,b_g] | d_1^2...d_g^2) x_1...x_r e_1...e_k
// with [u,v] = u^-1 v^-1 u v.
Presentation canonical_presentation(const NecSignature& sig);

} // namespace nec
