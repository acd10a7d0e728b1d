#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nec/rng.hpp"
#include "nec/signature.hpp"

using namespace nec;

namespace {

// random structurally valid signature; admissibility not guaranteed
NecSignature random_signature(Rng& rng) {
  NecSignature sig;
  sig.sign = rng.below(2) ? Sign::Plus : Sign::Minus;
  sig.genus = rng.below_int(4) + (sig.sign == Sign::Minus ? 1 : 0);
  int r = rng.below_int(5);
  for (int i = 0; i < r; ++i) sig.proper_periods.push_back(2 + rng.below_int(7));
  int k = rng.below_int(4);
  for (int i = 0; i < k; ++i) {
    PeriodCycle c;
    int s = rng.below_int(6);
    for (int j = 0; j < s; ++j) c.link_periods.push_back(2 + rng.below_int(7));
    sig.period_cycles.push_back(c);
  }
  return sig;
}

} // namespace

TEST_CASE("parsing the symbol") {
  NecSignature sig = parse_signature("(0;+;[-];{(2,3,7)})");
  CHECK(sig.genus == 0);
  CHECK(sig.sign == Sign::Plus);
  CHECK(sig.r() == 0);
  CHECK(sig.k() == 1);
  CHECK(sig.period_cycles[0].link_periods == std::vector<int>{2, 3, 7});

  sig = parse_signature("(3;-;[-];{-})");
  CHECK(sig.genus == 3);
  CHECK(sig.sign == Sign::Minus);
  CHECK(sig.r() == 0);
  CHECK(sig.k() == 0);

  CHECK(parse_signature(" ( 1 ; - ; [ 2 , 3 ] ; { ( - ) , ( 4 ) } ) ") ==
        parse_signature("(1;-;[2,3];{(-),(4)})"));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_signature("(0;+;[2];{(1)})"), SignatureError);
  CHECK_THROWS_AS(parse_signature("(0;+;[1];{-})"), SignatureError);
  CHECK_THROWS_AS(parse_signature("(0;+;[2];{(2)}"), SignatureError);
  CHECK_THROWS_AS(parse_signature("(0;*;[-];{-})"), SignatureError);
  CHECK_THROWS_AS(parse_signature("(0;-;[-];{(2,2,2)})"), SignatureError);
  try {
    parse_signature("(0;+;[2];{(1)})");
  } catch (const SignatureError& e) {
    CHECK(e.pos == 10);
  }
}

TEST_CASE("render round trip on random signatures") {
  Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    NecSignature sig = random_signature(rng);
    CHECK(parse_signature(render(sig)) == sig);
  }
}

TEST_CASE("area values") {
  CHECK(area_mu(parse_signature("(0;+;[-];{(2,3,7)})")) == Rational(1, 84));
  CHECK(area_mu(parse_signature("(3;-;[-];{-})")) == Rational(1));
  CHECK(area_mu(parse_signature("(0;+;[2];{(4)})")) == Rational(-1, 8));
  CHECK(area_mu(parse_signature("(1;-;[-];{(2,2,2)})")) == Rational(3, 4));
  CHECK(area_mu(parse_signature("(2;+;[-];{-})")) == Rational(2));
}

TEST_CASE("area is invariant under cycle rotation and period permutation") {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    NecSignature sig = random_signature(rng);
    Rational mu = area_mu(sig);
    NecSignature rotated = sig;
    for (auto& c : rotated.period_cycles)
      if (c.length() > 1)
        std::rotate(c.link_periods.begin(), c.link_periods.begin() + 1, c.link_periods.end());
    CHECK(area_mu(rotated) == mu);
    NecSignature permuted = sig;
    rng.shuffle(permuted.proper_periods);
    CHECK(area_mu(permuted) == mu);
  }
}

TEST_CASE("classification") {
  CHECK(classify(parse_signature("(0;+;[2,3,7];{-})")) == Classification::AdmissibleFuchsian);
  CHECK(classify(parse_signature("(0;+;[3];{(3)})")) == Classification::NonHyperbolic);
  CHECK(classify(parse_signature("(1;-;[-];{(2,2,2)})")) == Classification::AdmissibleProperNec);
  CHECK(classify(parse_signature("(0;+;[2];{(5)})")) == Classification::NonHyperbolic);
}

TEST_CASE("classification agrees with the sign of the area") {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    NecSignature sig = random_signature(rng);
    bool nonhyp = classify(sig) == Classification::NonHyperbolic;
    CHECK(nonhyp == (area_mu(sig) <= Rational(0)));
  }
}

TEST_CASE("riemann-hurwitz") {
  CHECK(riemann_hurwitz(Rational(3, 4), 8) == Rational(6));
  CHECK(riemann_hurwitz(Rational(17, 5), 1) == Rational(17, 5));
  CHECK(riemann_hurwitz(Rational(1, 84), 168) == Rational(2));
  CHECK_THROWS(riemann_hurwitz(Rational(1), 0));
}

TEST_CASE("cycle parameters") {
  auto p = cycle_params(parse_signature("(0;+;[-];{(-),(2,2),(3,4,5)})"));
  CHECK(p == CycleParams{1, 0, 1, 1});
  CHECK(cycle_params(parse_signature("(1;-;[2];{-})")) == CycleParams{0, 0, 0, 0});
  CHECK(cycle_params(parse_signature("(0;+;[-];{(2),(2)})")) == CycleParams{0, 2, 0, 0});
}

TEST_CASE("bordered-surface criterion") {
  CHECK(bordered_surface_criterion(parse_signature("(0;+;[-];{(2,2,3)})")));
  CHECK_FALSE(bordered_surface_criterion(parse_signature("(0;+;[-];{(3,4,5)})")));
  CHECK(bordered_surface_criterion(parse_signature("(0;+;[-];{(-),(3,4,5)})")));
  CHECK_FALSE(bordered_surface_criterion(parse_signature("(2;+;[2,3];{-})")));

  // the closing pair counts under the cyclic reading only
  auto wrap = parse_signature("(0;+;[-];{(2,3,2)})");
  CHECK(bordered_surface_criterion(wrap, AdjacencyReading::Cyclic));
  CHECK_FALSE(bordered_surface_criterion(wrap, AdjacencyReading::Linear));
}

TEST_CASE("kernel surface data") {
  auto d = kernel_surface_data(Rational(3, 4), 8, false);
  CHECK(d.genus == 8);
  CHECK(d.consistent);
  d = kernel_surface_data(Rational(1, 84), 168, true);
  CHECK(d.genus == 2);
  CHECK(d.consistent);
  d = kernel_surface_data(Rational(1, 84), 2, false);
  CHECK_FALSE(d.consistent);
}
