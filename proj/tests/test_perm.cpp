#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nec/perm.hpp"
#include "nec/rng.hpp"

using namespace nec;

namespace {
Perm random_perm(Rng& rng, int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  rng.shuffle(img);
  return Perm::from_images(img);
}
} // namespace

TEST_CASE("composition is left to right") {
  Perm p = Perm::from_cycles("(1 2)(3 4)", 4);
  Perm q = Perm::from_cycles("(1 2 3)", 4);
  CHECK((p * q) == Perm::from_cycles("(1 3 4)", 4));
  CHECK((p * p.inverse()).is_identity());
  CHECK((Perm::identity(4) * q) == q);
  CHECK_THROWS((p * Perm::identity(5)));
}

TEST_CASE("orders") {
  CHECK(Perm::from_cycles("(1 2 3 4 5)", 5).order() == 5);
  CHECK(Perm::from_cycles("(1 2)(3 4 5)", 5).order() == 6);
  CHECK(Perm::identity(3).order() == 1);
}

TEST_CASE("order equals the first power hitting the identity") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Perm p = random_perm(rng, 2 + rng.below_int(15));
    long long ord = p.order();
    Perm acc = p;
    long long steps = 1;
    while (!acc.is_identity()) {
      acc = acc * p;
      ++steps;
    }
    CHECK(steps == ord);
  }
}

TEST_CASE("group laws hold on random samples") {
  Rng rng(5);
  for (int t = 0; t < 2000; ++t) {
    int d = 2 + rng.below_int(31);
    Perm a = random_perm(rng, d), b = random_perm(rng, d), c = random_perm(rng, d);
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * a.inverse()).is_identity());
    CHECK((a.inverse() * a).is_identity());
  }
}

TEST_CASE("serialization") {
  Perm p = Perm::from_one_based({2, 1, 4, 3});
  CHECK(p == Perm::from_cycles("(1 2)(3 4)", 4));
  CHECK(p.one_based() == std::vector<int>{2, 1, 4, 3});
  CHECK(p.cycle_str() == "(1 2)(3 4)");
  CHECK(Perm::identity(3).cycle_str() == "()");
  CHECK_THROWS(Perm::from_one_based({1, 1, 2}));
  CHECK_THROWS(Perm::from_cycles("(1 2", 4));
  CHECK_THROWS(Perm::from_cycles("(1 2)(2 3)", 4));
}

TEST_CASE("powers") {
  Perm p = Perm::from_cycles("(1 2 3 4 5)", 5);
  CHECK(p.pow(0).is_identity());
  CHECK(p.pow(5).is_identity());
  CHECK(p.pow(-1) == p.inverse());
  CHECK(p.pow(7) == p * p);
}

TEST_CASE("shift and extend") {
  Perm p = Perm::from_cycles("(1 2)", 2);
  Perm big = p.shifted(2, 4);
  CHECK(big == Perm::from_cycles("(3 4)", 4));
  CHECK(p.extended(4) == Perm::from_cycles("(1 2)", 4));
  CHECK_THROWS(p.extended(1));
}
