#pragma once

#include <optional>
#include <string>

#include "nec/certificate.hpp"
#include "nec/homomorphism.hpp"
#include "nec/quotient_search.hpp"

namespace nec {

// recipe_for outcome: a stable recipe id, or "open" for shapes nobody has
// settled, or "not applicable" outside the proper NEC range.
struct RecipeMatch {
  enum Kind { Recipe, OpenTable2, NotApplicable } kind = NotApplicable;
  std::string id;
};

// Deterministic dispatch over admissible proper NEC signatures; the most
// specific construction wins. Fuchsian and non-hyperbolic inputs map to
// NotApplicable.
RecipeMatch recipe_for(const NecSignature& sig);

struct Instantiation {
  Homomorphism hom;
  Word witness;
  std::string recipe;
  bool convention_normalized = false;
  std::string notes;
};

// Builds the homomorphism and witness for the signature's recipe. Throws
// SearchError when a quotient search is exhausted, std::logic_error when a
// construction fails its own verification.
Instantiation instantiate(const NecSignature& sig, const SearchContext& ctx);

enum class CertifyStatus { Certified, OpenTable2, Fuchsian, NonHyperbolic, SearchFailed };

std::string to_string(CertifyStatus s);

struct CertifyOutcome {
  CertifyStatus status = CertifyStatus::Certified;
  std::optional<Certificate> cert;
  std::string detail;
};

// parse -> classify -> recipe -> instantiate -> verify -> certificate
CertifyOutcome certify_signature(const NecSignature& sig, const SearchContext& ctx);

// The two-point orientation quotient glued onto an existing torsion-exact
// homomorphism; the resulting kernel is orientable.
Certificate orientable_surface_kernel(const Homomorphism& h);

} // namespace nec
