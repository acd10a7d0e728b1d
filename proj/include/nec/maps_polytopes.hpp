#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nec/certificate.hpp"
#include "nec/perm_group.hpp"

namespace nec {

// s involutions with prescribed cyclic product orders; the shape shared by
// reflection groups of maps and by string-polytope generator systems.
struct InvolutionSystem {
  PermGroup group;
  std::vector<Perm> gens;  // C_0 .. C_{s-1}
  std::vector<int> links;  // order(C_{i-1} C_i) = links[i-1], cyclically

  int s() const { return static_cast<int>(gens.size()); }
};

struct RotationSystem {
  PermGroup group;
  std::vector<Perm> gens;  // X_1 .. X_s, product = 1
  std::vector<int> orders;
  std::optional<Perm> z;
};

// Group file, JSON:
//   { "degree": n, "generators": [[1-based images], ...],
//     "roles": ["C0","C1",...] | ["X1","X2",...],
//     "declared_links": [n1,...], "metadata": {...} }
// Loading validates every declared order; violations throw with the field.
struct GroupFile {
  std::optional<InvolutionSystem> involutions;
  std::optional<RotationSystem> rotations;
};

GroupFile ingest_group(const std::string& path);
GroupFile ingest_group_json(const std::string& text);

// X_i = C_{i-1} C_i with the closing product dropped (it is forced).
RotationSystem rotations_of(const InvolutionSystem& sys);

struct OddWordResult {
  bool holds = false;
  std::optional<std::vector<int>> witness; // indices into gens, odd length
};

// True iff the even-length-word subgroup <C_0 C_1, ..., C_0 C_{s-1}> is all
// of G. A concrete odd identity word is extracted by parity-tracking BFS
// when |G| is small enough.
OddWordResult odd_identity_check(const InvolutionSystem& sys,
                                 long long witness_bound = 10000);

struct CorollaryResult {
  bool holds = false;           // exact order 2 at every prefix
  bool holds_with_identity = false; // prefixes allowed to collapse to 1
  std::optional<Perm> z;
  bool decided = true;          // false when the group exceeded the bound
};

// Searches for Z with Z, Z X_1, Z X_1 X_2, ... all of order exactly 2.
CorollaryResult corollary_check(const RotationSystem& sys, long long bound = 10000);

struct HemiReport {
  bool applicable = false;     // |G/N| came out as 2s
  long long subgroup_order = 0;
  long long quotient_order = 0;
  bool normal = false;
  std::string signature;       // certified symbol when applicable
  std::optional<Certificate> cert;
  bool witness_found = false;  // odd identity word inside N
  std::string detail;
};

// For a (2, s, 2n) system: N = <(C1 C2)^-j C0 (C1 C2)^j>, checked normal; if
// |G/N| = 2s the subsystem certifies the all-equal cycle symbol with s link
// periods n.
HemiReport hemi_construction(const InvolutionSystem& sys, long long bound = 10000);

struct PerfectRouteReport {
  bool perfect = false;
  bool word_found = false;     // odd-count word in <x, c> hitting the identity
  std::vector<int> word;       // 0 = x, 1 = x^-1, 2 = c
  std::string signature;
  std::optional<Certificate> cert;
  std::string detail;
};

// For a perfect (2, m, 2n) system: x = C1 C2, c = C0 generate an index-2
// subgroup presenting the one-period one-link symbol; a parity BFS finds an
// odd-c identity word, giving the orientation-reversing witness.
PerfectRouteReport perfect_route_check(const InvolutionSystem& sys,
                                       long long bound = 10000);

} // namespace nec
