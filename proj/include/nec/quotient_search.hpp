#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nec/perm_group.hpp"
#include "nec/rng.hpp"
#include "nec/signature.hpp"
#include "nec/word.hpp"

namespace nec {

class SearchError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Known small solutions, loadable from a JSON data file:
//   { "polygon":    { "2,3,3": [[...1-based images...], ...], ... },
//     "reflection": { "2,2,2": [...], ... },
//     "full":       { "(0;+;[2,2];{(-)})": { "x1": [...], ... }, ... } }
struct QuotientLookup {
  std::map<std::string, std::vector<std::vector<int>>> polygon;
  std::map<std::string, std::vector<std::vector<int>>> reflection;
  std::map<std::string, std::map<std::string, std::vector<int>>> full;

  static QuotientLookup builtin();
  static QuotientLookup load(const std::string& path); // merged over builtin
};

// Deterministic search context: same seed, same bounds, same lookup table
// always yields the same output.
struct SearchContext {
  std::uint64_t seed = 1;
  int max_degree = 16;
  long long max_attempts = 1000000;
  QuotientLookup lookup = QuotientLookup::builtin();

  SearchContext child(std::uint64_t salt) const {
    SearchContext c = *this;
    c.seed = Rng(seed).child(salt).next();
    return c;
  }
};

// Images X_1..X_r with order(X_i) = m_i exactly and X_1...X_r = 1.
// Requires r >= 3. All outputs are re-verified before returning.
std::vector<Perm> find_polygon_quotient(const std::vector<int>& periods,
                                        const SearchContext& ctx);

// Involutions C_0..C_{s-1} with order(C_{i-1} C_i) = n_i exactly, cyclically
// (pair i is (C_{i-1}, C_i) for 1 <= i < s, closing with (C_{s-1}, C_0)).
// s = 0 or 1 yields a single involution generating C_2; s = 2 is rejected
// (two-link cycles go through dedicated dihedral constructions).
std::vector<Perm> find_reflection_cycle_quotient(const std::vector<int>& links,
                                                 const SearchContext& ctx);

// Three involutions acting on the N*N points of (Z/N)^2 by affine maps, with
// pairwise product orders (C0C1, C1C2, C2C0) = type exactly. Supported types:
// (2,3,6), (2,4,4), (3,3,3). Throws SearchError if the orders collapse at
// this N (raise N and retry).
std::vector<Perm> euclidean_affine_quotient(const std::vector<int>& type, int n_mod);

// A generator-image assignment for a genus-0 sign-"+" signature whose kernel
// avoids all torsion: elliptic images of exact order, per-cycle reflection
// solutions, connector images solving the long relation.
std::map<CanonicalGenerator, Perm> find_full_quotient(const NecSignature& sig,
                                                      const SearchContext& ctx);

} // namespace nec
