#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nec/perm_group.hpp"
#include "nec/presentation.hpp"
#include "nec/signature.hpp"
#include "nec/word.hpp"

namespace nec {

// Assignment of a permutation to every canonical generator of a signature.
// The homomorphism need not be onto its ambient target; the kernel index is
// the order of the subgroup the images generate.
struct Homomorphism {
  NecSignature sig;
  int degree = 1;
  std::map<CanonicalGenerator, Perm> images;

  const Perm& image_of(const CanonicalGenerator& g) const;
  PermGroup image_group() const;
  long long image_order() const { return image_group().order(); }
};

// Every generator of the presentation must have an image of the right degree.
void validate_images(const Homomorphism& h);

Perm evaluate_word(const Homomorphism& h, const Word& w);

struct RelatorCheck {
  Word relator;
  bool pass = false;
};

struct RelatorReport {
  std::vector<RelatorCheck> rows;
  bool all_pass = true;
};

RelatorReport verify_relators(const Homomorphism& h);

struct TorsionRow {
  std::string source;    // "x1", "c10", "c10*c11"
  long long required = 0;
  long long achieved = 0;
  bool pass = false;
};

struct TorsionReport {
  std::vector<TorsionRow> rows;
  bool all_pass = true;
};

// Exact-order checks for every canonical torsion generator: each elliptic
// x_i at m_i, each reflection at 2, each adjacent reflection product at its
// link period. All rows passing forces the kernel to be torsion-free (every
// torsion element is conjugate into one of these finite subgroups).
TorsionReport torsion_free_certificate(const Homomorphism& h);

// w maps to the identity and reverses orientation.
bool check_witness(const Homomorphism& h, const Word& w);

// Direct product of the targets; kernel = intersection of the kernels.
Homomorphism combine(const std::vector<Homomorphism>& hs);

// The orientation character as a two-point homomorphism (reflections and
// glides to the transposition).
Homomorphism orientation_hom(const NecSignature& sig);

// --- index-2 induction -------------------------------------------------

// Generator dictionary for the index-2 subgroup of even reflection count in
// a sign "-" one-cycle group: its own one-cycle-free signature together with
// words expressing its canonical generators inside the big group.
struct KerPsiDictionary {
  NecSignature gamma_sig;
  NecSignature kernel_sig; // (2g; -; [m_1..m_r, n_1..n_s, m_r..m_1]; {-})
  std::vector<Word> glide_expr;    // d'_1 .. d'_{2g} as words in gamma
  std::vector<Word> elliptic_expr; // x'_1 .. x'_{2r+s} as words in gamma
};

KerPsiDictionary kerpsi_dictionary(const NecSignature& sig);

// c_0 (gen) c_0 expressed over the kernel generators, in closed form.
Word c0_conjugate_rewrite(const KerPsiDictionary& dict, const CanonicalGenerator& gen);
Word c0_conjugate_rewrite(const KerPsiDictionary& dict, const Word& w);

// Reidemeister-Schreier rewriting of a word with even reflection count into a
// word over the kernel generators. Throws on odd count.
Word rewrite_even_word(const KerPsiDictionary& dict, const Word& w);

// Images for the kernel signature's canonical generators.
struct KerPsiHom {
  int degree = 1;
  std::map<CanonicalGenerator, Perm> images;
};

// Lifts kappa (defined on the even-count subgroup via the dictionary) to the
// whole group, landing in the wreath target (T x T) x| C2. The kernel of the
// result is ker(kappa) intersected with its rep-conjugate.
Homomorphism induce_index2(const NecSignature& sig, const KerPsiDictionary& dict,
                           const KerPsiHom& kappa, const Word& rep);

} // namespace nec
