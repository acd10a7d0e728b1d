#include "nec/signature.hpp"

#include <cctype>
#include <sstream>

namespace nec {
namespace {

// Recursive-descent parser over the whitespace-stripped text. Positions in
// errors refer to the stripped text.
class Parser {
public:
  explicit Parser(const std::string& text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  NecSignature parse() {
    NecSignature sig;
    expect('(');
    sig.genus = parse_int("genus");
    if (sig.genus < 0) fail("genus must be non-negative");
    expect(';');
    char sgn = take("sign");
    if (sgn == '+') sig.sign = Sign::Plus;
    else if (sgn == '-') sig.sign = Sign::Minus;
    else fail("expected '+' or '-'");
    expect(';');
    sig.proper_periods = parse_periods();
    expect(';');
    sig.period_cycles = parse_cycles();
    expect(')');
    if (pos_ != s_.size()) fail("trailing characters");
    if (sig.sign == Sign::Minus && sig.genus < 1)
      fail("sign '-' requires genus >= 1");
    return sig;
  }

private:
  std::vector<int> parse_periods() {
    expect('[');
    std::vector<int> out;
    if (peek() == '-') { ++pos_; expect(']'); return out; }
    out.push_back(parse_period("proper period"));
    while (peek() == ',') { ++pos_; out.push_back(parse_period("proper period")); }
    expect(']');
    return out;
  }

  std::vector<PeriodCycle> parse_cycles() {
    expect('{');
    std::vector<PeriodCycle> out;
    if (peek() == '-') { ++pos_; expect('}'); return out; }
    out.push_back(parse_cycle());
    while (peek() == ',') { ++pos_; out.push_back(parse_cycle()); }
    expect('}');
    return out;
  }

  PeriodCycle parse_cycle() {
    expect('(');
    PeriodCycle c;
    if (peek() == '-') { ++pos_; expect(')'); return c; }
    c.link_periods.push_back(parse_period("link period"));
    while (peek() == ',') { ++pos_; c.link_periods.push_back(parse_period("link period")); }
    expect(')');
    return c;
  }

  int parse_period(const char* what) {
    std::size_t at = pos_;
    int v = parse_int(what);
    if (v < 2) throw SignatureError(std::string(what) + " < 2", at);
    return v;
  }

  int parse_int(const char* what) {
    std::size_t start = pos_;
    if (peek() == '-') ++pos_; // negative genus caught by range check
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || (s_[start] == '-' && pos_ == start + 1))
      fail(std::string("expected integer for ") + what);
    try {
      return std::stoi(s_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      throw SignatureError(std::string("integer out of range for ") + what, start);
    }
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  char take(const char* what) {
    if (pos_ >= s_.size()) fail(std::string("unexpected end, wanted ") + what);
    return s_[pos_++];
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    std::ostringstream os;
    os << "signature syntax error at position " << pos_ << ": " << msg;
    throw SignatureError(os.str(), pos_);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

} // namespace

NecSignature parse_signature(const std::string& text) { return Parser(text).parse(); }

std::string render(const NecSignature& sig) {
  std::ostringstream os;
  os << '(' << sig.genus << ';' << (sig.sign == Sign::Plus ? '+' : '-') << ';';
  if (sig.proper_periods.empty()) {
    os << "[-]";
  } else {
    os << '[';
    for (int i = 0; i < sig.r(); ++i) os << (i ? "," : "") << sig.proper_periods[i];
    os << ']';
  }
  os << ';';
  if (sig.period_cycles.empty()) {
    os << "{-}";
  } else {
    os << '{';
    for (int i = 0; i < sig.k(); ++i) {
      if (i) os << ',';
      const auto& c = sig.period_cycles[i];
      if (c.empty()) {
        os << "(-)";
      } else {
        os << '(';
        for (int j = 0; j < c.length(); ++j) os << (j ? "," : "") << c.link_periods[j];
        os << ')';
      }
    }
    os << '}';
  }
  os << ')';
  return os.str();
}

Rational area_mu(const NecSignature& sig) {
  int alpha = sig.sign == Sign::Plus ? 2 : 1;
  Rational mu(static_cast<long long>(alpha) * sig.genus + sig.k() - 2);
  for (int m : sig.proper_periods) mu += Rational(m - 1, m);
  for (const auto& cyc : sig.period_cycles)
    for (int n : cyc.link_periods) mu += Rational(n - 1, 2LL * n);
  return mu;
}

Classification classify(const NecSignature& sig) {
  if (area_mu(sig) <= Rational(0)) return Classification::NonHyperbolic;
  if (sig.sign == Sign::Plus && sig.k() == 0) return Classification::AdmissibleFuchsian;
  return Classification::AdmissibleProperNec;
}

Rational riemann_hurwitz(const Rational& mu_gamma, long long index) {
  if (index < 1) throw std::invalid_argument("index must be >= 1");
  return mu_gamma * Rational(index);
}

CycleParams cycle_params(const NecSignature& sig) {
  CycleParams p;
  for (const auto& c : sig.period_cycles) {
    switch (c.length()) {
      case 0: ++p.k0; break;
      case 1: ++p.k1; break;
      case 2: ++p.k2; break;
      default: ++p.k3; break;
    }
  }
  return p;
}

bool bordered_surface_criterion(const NecSignature& sig, AdjacencyReading reading) {
  for (const auto& c : sig.period_cycles) {
    if (c.empty()) return true;
    int s = c.length();
    if (s < 2) continue;
    int last = reading == AdjacencyReading::Cyclic ? s : s - 1;
    for (int j = 0; j < last; ++j)
      if (c.link_periods[j] == 2 && c.link_periods[(j + 1) % s] == 2) return true;
  }
  return false;
}

KernelSurfaceData kernel_surface_data(const Rational& mu_gamma, long long index,
                                      bool orientable) {
  Rational mu_k = riemann_hurwitz(mu_gamma, index);
  Rational g = orientable ? (mu_k + Rational(2)) / Rational(2) : mu_k + Rational(2);
  KernelSurfaceData out;
  if (!g.is_integer()) return out;
  out.genus = g.num();
  out.consistent = orientable ? out.genus >= 2 : out.genus >= 3;
  return out;
}

} // namespace nec
