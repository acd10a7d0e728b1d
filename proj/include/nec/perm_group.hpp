#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "nec/perm.hpp"

namespace nec {

inline constexpr int kDefaultDegreeCap = 4096;

// Finite permutation group given by generators. Order and membership run
// through a stabilizer chain (deterministic Schreier-Sims with the smallest
// moved point as each base point), computed once on demand.
class PermGroup {
public:
  explicit PermGroup(int degree, std::vector<Perm> generators = {},
                     int degree_cap = kDefaultDegreeCap);

  PermGroup(const PermGroup& o) : degree_(o.degree_), gens_(o.gens_) {
    std::lock_guard<std::mutex> lock(o.mu_);
    chain_ = o.chain_;
  }
  PermGroup& operator=(const PermGroup& o) {
    if (this != &o) {
      std::shared_ptr<Chain> c;
      {
        std::lock_guard<std::mutex> lock(o.mu_);
        c = o.chain_;
      }
      std::lock_guard<std::mutex> lock(mu_);
      degree_ = o.degree_;
      gens_ = o.gens_;
      chain_ = std::move(c);
    }
    return *this;
  }

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  long long order() const;
  bool contains(const Perm& p) const;
  bool is_trivial() const { return order() == 1; }

  // All elements, in BFS order from the identity; throws if the order
  // exceeds `limit`.
  std::vector<Perm> elements(std::size_t limit = 2000000) const;

private:
  struct Chain;
  Chain& chain() const;

  int degree_;
  std::vector<Perm> gens_;
  mutable std::shared_ptr<Chain> chain_;
  mutable std::mutex mu_;
};

// Smallest subgroup of <G> containing S and closed under conjugation by G's
// generators.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds);

// Normal closure of the generator commutators.
PermGroup derived_subgroup(const PermGroup& g);

bool is_perfect(const PermGroup& g);

// Direct product acting on the disjoint union of the factors' domains.
struct DirectProduct {
  PermGroup group;
  std::vector<int> offsets; // offsets[i] = start of factor i's points

  // factor element -> product element (identity elsewhere)
  Perm embed(std::size_t factor, const Perm& p) const;
};

DirectProduct direct_product(const std::vector<PermGroup>& factors);

// (Q x Q) x| C2 on two copies of Q's domain; the involution swaps the copies.
struct WreathC2 {
  PermGroup group;
  int base_degree;

  Perm element(const Perm& q1, const Perm& q2, bool swapped) const;
  Perm swap() const;
};

WreathC2 wreath_c2(const PermGroup& q);

// A named construction together with its verified permutation realization.
// Builders check the defining orders and throw on any mismatch.
struct FiniteGroupSpec {
  std::string tag;
  PermGroup realized;
  std::vector<Perm> named; // the tag's distinguished generators, in order
};

namespace groups {

// C_m as an m-cycle (degree max(m,1)).
FiniteGroupSpec cyclic(int m);
// <u, v | u^2 = v^2 = (uv)^exponent = 1>, order 2*exponent; named = {u, v}.
FiniteGroupSpec dihedral_presented(int exponent);
// arbitrary generators, verified only as permutations
FiniteGroupSpec explicit_group(int degree, std::vector<Perm> gens);

} // namespace groups

} // namespace nec
