#include "nec/homomorphism.hpp"

#include <algorithm>
#include <stdexcept>

namespace nec {

const Perm& Homomorphism::image_of(const CanonicalGenerator& g) const {
  auto it = images.find(g);
  if (it == images.end())
    throw std::invalid_argument("no image for generator " + g.name());
  return it->second;
}

PermGroup Homomorphism::image_group() const {
  std::vector<Perm> gens;
  for (const auto& [g, p] : images) gens.push_back(p);
  return PermGroup(degree, std::move(gens));
}

void validate_images(const Homomorphism& h) {
  for (const auto& g : canonical_generators(h.sig)) {
    auto it = h.images.find(g);
    if (it == h.images.end())
      throw std::invalid_argument("missing image for generator " + g.name());
    if (it->second.degree() != h.degree)
      throw std::invalid_argument("image degree mismatch for " + g.name());
  }
  for (const auto& [g, p] : h.images)
    if (!is_generator_of(h.sig, g))
      throw std::invalid_argument("image for unknown generator " + g.name());
}

Perm evaluate_word(const Homomorphism& h, const Word& w) {
  Perm acc = Perm::identity(h.degree);
  for (const auto& l : w.letters()) {
    if (!is_generator_of(h.sig, l.gen))
      throw std::invalid_argument("word uses unknown generator " + l.gen.name());
    acc = acc * h.image_of(l.gen).pow(l.exp);
  }
  return acc;
}

RelatorReport verify_relators(const Homomorphism& h) {
  validate_images(h);
  RelatorReport rep;
  for (const auto& rel : canonical_presentation(h.sig).relators) {
    bool ok = evaluate_word(h, rel).is_identity();
    rep.rows.push_back({rel, ok});
    rep.all_pass = rep.all_pass && ok;
  }
  return rep;
}

TorsionReport torsion_free_certificate(const Homomorphism& h) {
  TorsionReport rep;
  auto add = [&](std::string source, long long required, long long achieved) {
    bool pass = required == achieved;
    rep.rows.push_back({std::move(source), required, achieved, pass});
    rep.all_pass = rep.all_pass && pass;
  };
  for (int i = 1; i <= h.sig.r(); ++i)
    add(elliptic(i).name(), h.sig.proper_periods[i - 1], h.image_of(elliptic(i)).order());
  for (int i = 1; i <= h.sig.k(); ++i) {
    const auto& cyc = h.sig.period_cycles[i - 1];
    int s = cyc.length();
    for (int j = 0; j <= s; ++j)
      add(reflection(i, j).name(), 2, h.image_of(reflection(i, j)).order());
    for (int j = 1; j <= s; ++j) {
      Perm pair = h.image_of(reflection(i, j - 1)) * h.image_of(reflection(i, j));
      add(reflection(i, j - 1).name() + "*" + reflection(i, j).name(),
          cyc.link_periods[j - 1], pair.order());
    }
  }
  return rep;
}

bool check_witness(const Homomorphism& h, const Word& w) {
  return evaluate_word(h, w).is_identity() && orientation_character(h.sig, w) == -1;
}

Homomorphism combine(const std::vector<Homomorphism>& hs) {
  if (hs.empty()) throw std::invalid_argument("combine needs at least one factor");
  for (const auto& h : hs)
    if (!(h.sig == hs[0].sig))
      throw std::invalid_argument("combine requires a common signature");
  int total = 0;
  std::vector<int> offsets;
  for (const auto& h : hs) {
    offsets.push_back(total);
    total += h.degree;
  }
  Homomorphism out;
  out.sig = hs[0].sig;
  out.degree = total;
  for (const auto& g : canonical_generators(out.sig)) {
    Perm img = Perm::identity(total);
    for (std::size_t f = 0; f < hs.size(); ++f)
      img = img * hs[f].image_of(g).shifted(offsets[f], total);
    out.images[g] = img;
  }
  return out;
}

Homomorphism orientation_hom(const NecSignature& sig) {
  Homomorphism h;
  h.sig = sig;
  h.degree = 2;
  Perm flip = Perm::from_cycles("(1 2)", 2);
  Perm id = Perm::identity(2);
  for (const auto& g : canonical_generators(sig))
    h.images[g] = (g.kind == GenKind::Reflection || g.kind == GenKind::Glide) ? flip : id;
  return h;
}

// --- index-2 induction -------------------------------------------------

KerPsiDictionary kerpsi_dictionary(const NecSignature& sig) {
  if (sig.sign != Sign::Minus || sig.k() != 1)
    throw std::invalid_argument("dictionary needs a sign '-' signature with one cycle");
  int g = sig.genus, r = sig.r();
  int s = sig.period_cycles[0].length();
  if (r + s == 0)
    throw std::invalid_argument("dictionary needs r + s > 0");

  KerPsiDictionary dict;
  dict.gamma_sig = sig;
  dict.kernel_sig.genus = 2 * g;
  dict.kernel_sig.sign = Sign::Minus;
  for (int i = 0; i < r; ++i)
    dict.kernel_sig.proper_periods.push_back(sig.proper_periods[i]);
  for (int j = 0; j < s; ++j)
    dict.kernel_sig.proper_periods.push_back(sig.period_cycles[0].link_periods[j]);
  for (int i = r - 1; i >= 0; --i)
    dict.kernel_sig.proper_periods.push_back(sig.proper_periods[i]);

  // d'_i = d_{g+1-i}^-1, d'_{g+i} = c_0 d_i c_0
  for (int i = 1; i <= g; ++i) {
    Word w;
    w.append(glide(g + 1 - i), -1);
    dict.glide_expr.push_back(w);
  }
  for (int i = 1; i <= g; ++i) {
    Word w;
    w.append(reflection(1, 0));
    w.append(glide(i));
    w.append(reflection(1, 0));
    dict.glide_expr.push_back(w);
  }
  // x'_i = c_0 x_i c_0, x'_{r+j} = c_{j-1} c_j, x'_{r+s+i} = x_{r+1-i}^-1
  for (int i = 1; i <= r; ++i) {
    Word w;
    w.append(reflection(1, 0));
    w.append(elliptic(i));
    w.append(reflection(1, 0));
    dict.elliptic_expr.push_back(w);
  }
  for (int j = 1; j <= s; ++j) {
    Word w;
    w.append(reflection(1, j - 1));
    w.append(reflection(1, j));
    dict.elliptic_expr.push_back(w);
  }
  for (int i = 1; i <= r; ++i) {
    Word w;
    w.append(elliptic(r + 1 - i), -1);
    dict.elliptic_expr.push_back(w);
  }
  return dict;
}

namespace {

int kp_r(const KerPsiDictionary& d) { return d.gamma_sig.r(); }
int kp_s(const KerPsiDictionary& d) { return d.gamma_sig.period_cycles[0].length(); }
int kp_g(const KerPsiDictionary& d) { return d.gamma_sig.genus; }

Word kernel_gen(GenKind kind, int i, int exp) {
  Word w;
  w.append({kind, i, 0}, exp);
  return w;
}

// x'_{r+1} ... x'_{r+j}  (the word for c_0 c_j)
Word chain_word(const KerPsiDictionary& d, int j) {
  Word w;
  for (int t = 1; t <= j; ++t) w.append(elliptic(kp_r(d) + t));
  return w;
}

// translation of c_0^p gamma^exp c_0^p over kernel generators, for a
// psi-even letter gamma (glide, elliptic or connector)
Word translate_even(const KerPsiDictionary& d, const CanonicalGenerator& gen, int exp,
                    int parity);

// the connector as a word in glides and elliptics via the long relation
Word connector_expansion(const KerPsiDictionary& d) {
  Word w;
  for (int i = 1; i <= kp_g(d); ++i) w.append(glide(i), 2);
  for (int i = 1; i <= kp_r(d); ++i) w.append(elliptic(i));
  return w.inverse();
}

Word translate_even(const KerPsiDictionary& d, const CanonicalGenerator& gen, int exp,
                    int parity) {
  int g = kp_g(d), r = kp_r(d), s = kp_s(d);
  switch (gen.kind) {
    case GenKind::Glide:
      if (parity == 0) return kernel_gen(GenKind::Glide, g + 1 - gen.i, -exp);
      return kernel_gen(GenKind::Glide, g + gen.i, exp);
    case GenKind::Elliptic:
      if (parity == 0) return kernel_gen(GenKind::Elliptic, 2 * r + s + 1 - gen.i, -exp);
      return kernel_gen(GenKind::Elliptic, gen.i, exp);
    case GenKind::Connector: {
      Word out;
      Word expansion = connector_expansion(d).pow(exp);
      for (const auto& l : expansion.letters())
        out.append(translate_even(d, l.gen, l.exp, parity));
      return out;
    }
    default:
      throw std::logic_error("not a psi-even generator: " + gen.name());
  }
}

} // namespace

Word rewrite_even_word(const KerPsiDictionary& dict, const Word& w) {
  Word out;
  int parity = 0;
  for (const auto& l : w.letters()) {
    if (l.gen.kind == GenKind::Reflection) {
      if (l.gen.i != 1 || l.gen.j > kp_s(dict) || !is_generator_of(dict.gamma_sig, l.gen))
        throw std::invalid_argument("unknown reflection " + l.gen.name());
      // reflections square to torsion: only the exponent's parity matters
      if (((l.exp % 2) + 2) % 2 == 0) continue;
      int j = l.gen.j;
      if (parity == 0) {
        out.append(chain_word(dict, j).inverse()); // c_j c_0
        parity = 1;
      } else {
        out.append(chain_word(dict, j)); // c_0 c_j
        parity = 0;
      }
    } else {
      if (!is_generator_of(dict.gamma_sig, l.gen))
        throw std::invalid_argument("unknown generator " + l.gen.name());
      out.append(translate_even(dict, l.gen, l.exp, parity));
    }
  }
  if (parity != 0)
    throw std::invalid_argument("word has odd reflection count, not in the even subgroup");
  return out;
}

Word c0_conjugate_rewrite(const KerPsiDictionary& dict, const CanonicalGenerator& gen) {
  int g = kp_g(dict), r = kp_r(dict), s = kp_s(dict);
  if (gen.kind == GenKind::Glide && gen.i >= 1 && gen.i <= 2 * g)
    return kernel_gen(GenKind::Glide, 2 * g + 1 - gen.i, -1);
  if (gen.kind == GenKind::Elliptic && gen.i >= 1 && gen.i <= 2 * r + s) {
    if (gen.i <= r) return kernel_gen(GenKind::Elliptic, 2 * r + s + 1 - gen.i, -1);
    if (gen.i <= r + s) {
      int j = gen.i - r;
      Word w = chain_word(dict, j - 1);
      w.append(chain_word(dict, j).inverse());
      return w;
    }
    return kernel_gen(GenKind::Elliptic, 2 * r + s + 1 - gen.i, -1);
  }
  throw std::invalid_argument("generator outside the dictionary: " + gen.name());
}

Word c0_conjugate_rewrite(const KerPsiDictionary& dict, const Word& w) {
  Word out;
  for (const auto& l : w.letters()) {
    Word piece = c0_conjugate_rewrite(dict, l.gen);
    out.append(piece.pow(l.exp));
  }
  return out;
}

Homomorphism induce_index2(const NecSignature& sig, const KerPsiDictionary& dict,
                           const KerPsiHom& kappa, const Word& rep) {
  if (!(dict.gamma_sig == sig))
    throw std::invalid_argument("dictionary does not match the signature");
  if (rep.letters().size() != 1 || rep.letters()[0].gen != reflection(1, 0) ||
      rep.letters()[0].exp % 2 == 0)
    throw std::invalid_argument("representative must be the first reflection");

  // evaluate a kernel-alphabet word under kappa
  auto kappa_eval = [&](const Word& w) {
    Perm acc = Perm::identity(kappa.degree);
    for (const auto& l : w.letters()) {
      auto it = kappa.images.find(l.gen);
      if (it == kappa.images.end())
        throw std::invalid_argument("kappa lacks an image for " + l.gen.name());
      acc = acc * it->second.pow(l.exp);
    }
    return acc;
  };

  WreathC2 w{PermGroup(2 * kappa.degree, {}), kappa.degree};
  Homomorphism out;
  out.sig = sig;
  out.degree = 2 * kappa.degree;

  for (const auto& gen : canonical_generators(sig)) {
    Word one;
    one.append(gen);
    bool odd = gen.kind == GenKind::Reflection;
    if (!odd) {
      Word self = rewrite_even_word(dict, one);
      Word conj_gamma; // c_0 gen c_0
      conj_gamma.append(reflection(1, 0));
      conj_gamma.append(gen);
      conj_gamma.append(reflection(1, 0));
      Word conj = rewrite_even_word(dict, conj_gamma);
      out.images[gen] = w.element(kappa_eval(self), kappa_eval(conj), false);
    } else {
      // gen = (gen c_0) c_0 with gen c_0 in the even subgroup
      Word left = one;
      left.append(reflection(1, 0));
      Word right; // c_0 gen
      right.append(reflection(1, 0));
      right.append(gen);
      out.images[gen] = w.element(kappa_eval(rewrite_even_word(dict, left)),
                                  kappa_eval(rewrite_even_word(dict, right)), true);
    }
  }
  return out;
}

} // namespace nec
