#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nec/rational.hpp"

namespace nec {

enum class Sign { Plus, Minus };

// One period cycle: its list of link periods. Empty list encodes "(-)".
struct PeriodCycle {
  std::vector<int> link_periods;

  int length() const { return static_cast<int>(link_periods.size()); }
  bool empty() const { return link_periods.empty(); }
  friend bool operator==(const PeriodCycle&, const PeriodCycle&) = default;
};

// Full symbol (g; sign; [m_1,...,m_r]; {cycles}).
struct NecSignature {
  int genus = 0;
  Sign sign = Sign::Plus;
  std::vector<int> proper_periods;
  std::vector<PeriodCycle> period_cycles;

  int r() const { return static_cast<int>(proper_periods.size()); }
  int k() const { return static_cast<int>(period_cycles.size()); }
  friend bool operator==(const NecSignature&, const NecSignature&) = default;
};

struct CycleParams {
  int k0 = 0, k1 = 0, k2 = 0, k3 = 0;
  friend bool operator==(const CycleParams&, const CycleParams&) = default;
};

enum class Classification { AdmissibleProperNec, AdmissibleFuchsian, NonHyperbolic };

class SignatureError : public std::runtime_error {
public:
  SignatureError(std::string msg, std::size_t position)
      : std::runtime_error(std::move(msg)), pos(position) {}
  std::size_t pos;
};

// Parses the textual symbol, whitespace-insensitive:
//   SIG   := "(" INT ";" ("+"|"-") ";" PERIODS ";" CYCLES ")"
//   PERIODS := "[-]" | "[" INT ("," INT)* "]"
//   CYCLES  := "{-}" | "{" CYCLE ("," CYCLE)* "}"
//   CYCLE   := "(-)" | "(" INT ("," INT)* ")"
// Rejects periods < 2 and sign "-" with genus 0.
NecSignature parse_signature(const std::string& text);

// Unique minimal rendering (no spaces); parse(render(s)) == s.
std::string render(const NecSignature& sig);

// alpha*g + k - 2 + sum(1 - 1/m_i) + (1/2) * sum(1 - 1/n_ij),
// with alpha = 2 for sign "+" and 1 for sign "-". Exact.
Rational area_mu(const NecSignature& sig);

Classification classify(const NecSignature& sig);

// mu of a finite-index subgroup: index * mu.
Rational riemann_hurwitz(const Rational& mu_gamma, long long index);

// Counts of cycles with 0, 1, 2, >=3 link periods.
CycleParams cycle_params(const NecSignature& sig);

enum class AdjacencyReading { Cyclic, Linear };

// True iff some cycle is empty or some cycle contains two consecutive link
// periods equal to 2. A period cycle closes up, so by default the pair
// (n_{i s_i}, n_{i 1}) counts as consecutive; the linear reading is kept
// around so both can be reported. k = 0 yields false (nothing is bordered).
bool bordered_surface_criterion(const NecSignature& sig,
                                AdjacencyReading reading = AdjacencyReading::Cyclic);

struct KernelSurfaceData {
  long long genus = 0;
  bool consistent = false;
};

// Genus of a torsion-free kernel of the given index, from mu(K) = index * mu.
// Non-orientable: genus = mu(K) + 2, needs integer >= 3.
// Orientable: genus = (mu(K) + 2) / 2, needs integer >= 2.
KernelSurfaceData kernel_surface_data(const Rational& mu_gamma, long long index,
                                      bool orientable);

} // namespace nec
