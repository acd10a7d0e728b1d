#pragma once

#include <optional>
#include <string>

#include "nec/homomorphism.hpp"
#include "nec/rational.hpp"

namespace nec {

// Schema "fenchel-cert/1": a self-contained, independently re-checkable
// record that the kernel of the stored generator images is a torsion-free
// normal subgroup of the stated finite index, together with an
// orientation-reversing witness when the kernel is non-orientable.
struct Certificate {
  std::string schema = "fenchel-cert/1";
  std::string signature;            // rendered symbol
  std::string mu;                   // area of the big group, "p/q"
  std::string recipe;               // stable construction id
  bool convention_normalized = false;
  int degree = 1;
  std::map<std::string, std::vector<int>> images; // generator name -> 1-based images
  long long image_order = 1;        // = kernel index
  bool relators_ok = false;
  TorsionReport torsion;
  std::optional<std::string> witness; // absent for orientable kernels
  int witness_character = 0;
  bool witness_is_identity = false;
  std::string kernel_mu;            // "p/q"
  bool kernel_orientable = false;
  long long kernel_genus = 0;
  bool kernel_consistent = false;
  std::string notes;

  std::string to_json(int indent = 2) const;
  static Certificate from_json(const std::string& text);

  Homomorphism homomorphism() const;
};

// Runs all checks and fills in every derived field. Throws if the witness is
// required but fails; callers wanting a red certificate build one by hand.
Certificate make_certificate(const Homomorphism& h, const std::string& recipe,
                             const std::optional<Word>& witness,
                             bool convention_normalized = false,
                             const std::string& notes = "");

struct VerifyResult {
  bool ok = true;
  std::string failure; // first failing check, empty when ok
};

// Recomputes every stored result from the signature, images and witness
// alone and compares. Nothing from the construction side is trusted.
VerifyResult verify_certificate(const Certificate& cert);

} // namespace nec
