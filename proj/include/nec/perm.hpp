#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace nec {

// Permutation of {1..n}, stored as a 0-based image table.
//
// Composition convention, fixed repo-wide: (p * q) means "apply p, then q",
// i.e. (p*q)(x) = q(p(x)). Every verifier, word evaluation and serialization
// assumes this left-to-right order.
class Perm {
public:
  Perm() = default;
  static Perm identity(int degree) {
    Perm p;
    p.img_.resize(degree);
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
  }
  // images given 0-based
  static Perm from_images(std::vector<int> images);
  // images given 1-based, as serialized (e.g. [2,1,4,3])
  static Perm from_one_based(const std::vector<int>& images);
  // cycle notation on 1-based points, e.g. "(1 2)(3 4)"; degree may pad with
  // fixed points.
  static Perm from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[x]; } // 0-based

  Perm inverse() const;
  friend Perm operator*(const Perm& p, const Perm& q); // p then q
  Perm pow(long long e) const;

  bool is_identity() const;
  long long order() const; // lcm of cycle lengths

  std::vector<int> one_based() const {
    std::vector<int> v(img_);
    for (int& x : v) ++x;
    return v;
  }
  std::string cycle_str() const; // "(1 2)(3 4)", "()" for identity

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

  // extends with fixed points; shrinking is an error
  Perm extended(int degree) const;
  // acts on points shifted up by `offset` inside a larger domain
  Perm shifted(int offset, int degree) const;

private:
  std::vector<int> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int i = 0; i < p.degree(); ++i) {
      h ^= static_cast<std::size_t>(p.apply(i));
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace nec
