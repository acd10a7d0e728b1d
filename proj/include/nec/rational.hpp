#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nec {

// Exact rational over 64-bit integers, always normalized (den > 0, gcd = 1).
// All area / Riemann-Hurwitz arithmetic goes through this type; floating point
// is never used for those computations.
class Rational {
public:
  constexpr Rational() : num_(0), den_(1) {}
  constexpr Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked(i128(a.num_) * b.den_ + i128(b.num_) * a.den_),
                    checked(i128(a.den_) * b.den_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num_, b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked(i128(a.num_) * b.num_), checked(i128(a.den_) * b.den_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return Rational(checked(i128(a.num_) * b.den_), checked(i128(a.den_) * b.num_));
  }
  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    i128 l = i128(a.num_) * b.den_, r = i128(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
         : l > r ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  bool is_integer() const { return den_ == 1; }

  // Canonical "p/q" form, e.g. "1/84", "-1/8", "2/1".
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  // Human form: integers drop the denominator.
  std::string pretty() const {
    return den_ == 1 ? std::to_string(num_) : str();
  }

  // Accepts "p/q" or a bare integer.
  static Rational parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(s));
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rational literal: " + s);
    }
  }

private:
  using i128 = __int128;

  static long long checked(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
  }

  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }

  long long num_;
  long long den_;
};

} // namespace nec
