#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "nec/perm_group.hpp"

using namespace nec;

namespace {

long long closure_count(const PermGroup& g) {
  return static_cast<long long>(g.elements(6000).size());
}

} // namespace

TEST_CASE("orders via the stabilizer chain") {
  PermGroup s5(5, {Perm::from_cycles("(1 2 3 4 5)", 5), Perm::from_cycles("(1 2)", 5)});
  CHECK(s5.order() == 120);
  PermGroup v4(4, {Perm::from_cycles("(1 2)(3 4)", 4), Perm::from_cycles("(1 3)(2 4)", 4)});
  CHECK(v4.order() == 4);
  PermGroup trivial(4, {});
  CHECK(trivial.order() == 1);
  CHECK(trivial.is_trivial());
}

TEST_CASE("chain order equals exhaustive closure up to 5000") {
  std::vector<PermGroup> groups;
  groups.emplace_back(5, std::vector<Perm>{Perm::from_cycles("(1 2 3 4 5)", 5),
                                           Perm::from_cycles("(1 2)", 5)}); // S5
  groups.emplace_back(6, std::vector<Perm>{Perm::from_cycles("(1 2 3 4 5 6)", 6),
                                           Perm::from_cycles("(1 2)", 6)}); // S6, 720
  groups.emplace_back(5, std::vector<Perm>{Perm::from_cycles("(1 2 3)", 5),
                                           Perm::from_cycles("(3 4 5)", 5)}); // A5
  groups.emplace_back(7, std::vector<Perm>{Perm::from_cycles("(1 2 3 4 5 6 7)", 7),
                                           Perm::from_cycles("(2 3)(4 7)", 7)}); // PSL(3,2)?
  groups.emplace_back(8, std::vector<Perm>{Perm::from_cycles("(1 2 3 4 5 6 7 8)", 8),
                                           Perm::from_cycles("(1 2)(3 4)(5 6)(7 8)", 8)});
  groups.emplace_back(12, std::vector<Perm>{Perm::from_cycles("(1 2 3 4 5 6)(7 8)", 12),
                                            Perm::from_cycles("(9 10 11 12)", 12)});
  for (const auto& g : groups) {
    long long n = closure_count(g);
    CHECK(g.order() == n);
    CHECK(n <= 5040);
  }
}

TEST_CASE("membership") {
  PermGroup a4(4, {Perm::from_cycles("(1 2 3)", 4), Perm::from_cycles("(2 3 4)", 4)});
  CHECK(a4.order() == 12);
  CHECK(a4.contains(Perm::from_cycles("(1 2)(3 4)", 4)));
  CHECK_FALSE(a4.contains(Perm::from_cycles("(1 2)", 4)));
}

TEST_CASE("normal closure") {
  PermGroup s3(3, {Perm::from_cycles("(1 2 3)", 3), Perm::from_cycles("(1 2)", 3)});
  auto a3 = normal_closure(s3, {Perm::from_cycles("(1 2 3)", 3)});
  CHECK(a3.order() == 3);

  PermGroup s4(4, {Perm::from_cycles("(1 2 3 4)", 4), Perm::from_cycles("(1 2)", 4)});
  auto v4 = normal_closure(s4, {Perm::from_cycles("(1 2)(3 4)", 4)});
  CHECK(v4.order() == 4);

  auto trivial = normal_closure(s4, {Perm::identity(4)});
  CHECK(trivial.order() == 1);
}

TEST_CASE("normal closure is conjugation invariant") {
  PermGroup s4(4, {Perm::from_cycles("(1 2 3 4)", 4), Perm::from_cycles("(1 2)", 4)});
  auto n = normal_closure(s4, {Perm::from_cycles("(1 2 3)", 4)});
  for (const auto& g : s4.generators())
    for (const auto& h : n.generators())
      CHECK(n.contains(g.inverse() * h * g));
}

TEST_CASE("derived subgroup and perfectness") {
  PermGroup a5(5, {Perm::from_cycles("(1 2 3)", 5), Perm::from_cycles("(3 4 5)", 5)});
  CHECK(a5.order() == 60);
  CHECK(is_perfect(a5));

  PermGroup s4(4, {Perm::from_cycles("(1 2 3 4)", 4), Perm::from_cycles("(1 2)", 4)});
  CHECK(derived_subgroup(s4).order() == 12);
  CHECK_FALSE(is_perfect(s4));

  PermGroup c2(2, {Perm::from_cycles("(1 2)", 2)});
  CHECK(derived_subgroup(c2).order() == 1);
  CHECK_FALSE(is_perfect(c2));
}

TEST_CASE("perfectness agrees with brute-force commutator generation") {
  std::vector<PermGroup> groups;
  groups.emplace_back(5, std::vector<Perm>{Perm::from_cycles("(1 2 3)", 5),
                                           Perm::from_cycles("(3 4 5)", 5)}); // A5
  groups.emplace_back(4, std::vector<Perm>{Perm::from_cycles("(1 2 3 4)", 4),
                                           Perm::from_cycles("(1 2)", 4)}); // S4
  groups.emplace_back(6, std::vector<Perm>{Perm::from_cycles("(1 2 3)", 6),
                                           Perm::from_cycles("(4 5 6)", 6)}); // C3 x C3
  groups.emplace_back(8, std::vector<Perm>{Perm::from_cycles("(1 2 3 4 5 6 7 8)", 8),
                                           Perm::from_cycles("(1 5)(2 6)(3 7)(4 8)", 8)});
  for (const auto& g : groups) {
    auto elems = g.elements(600);
    REQUIRE(elems.size() <= 500);
    std::vector<Perm> comms;
    for (const auto& a : elems)
      for (const auto& b : elems)
        comms.push_back(a.inverse() * b.inverse() * a * b);
    PermGroup comm_group(g.degree(), comms);
    CHECK(is_perfect(g) == (comm_group.order() == g.order()));
  }
}

TEST_CASE("direct products") {
  PermGroup c2(2, {Perm::from_cycles("(1 2)", 2)});
  PermGroup d3(3, {Perm::from_cycles("(1 2)", 3), Perm::from_cycles("(2 3)", 3)});
  PermGroup c4(4, {Perm::from_cycles("(1 2 3 4)", 4)});

  auto p = direct_product({c2, c2});
  CHECK(p.group.order() == 4);
  auto q = direct_product({d3, c4});
  CHECK(q.group.order() == 24);
  CHECK(q.embed(1, Perm::from_cycles("(1 2 3 4)", 4)) ==
        Perm::from_cycles("(4 5 6 7)", 7));
  auto single = direct_product({d3});
  CHECK(single.group.order() == 6);
}

TEST_CASE("wreath doubling") {
  PermGroup c2(2, {Perm::from_cycles("(1 2)", 2)});
  auto w = wreath_c2(c2);
  CHECK(w.group.order() == 8);
  CHECK(w.swap().order() == 2);

  PermGroup trivial(1, {});
  CHECK(wreath_c2(trivial).group.order() == 2);

  PermGroup c3(3, {Perm::from_cycles("(1 2 3)", 3)});
  auto w3 = wreath_c2(c3);
  CHECK(w3.group.order() == 18);
  CHECK(w3.swap().order() == 2);
  Perm q = Perm::from_cycles("(1 2 3)", 3);
  CHECK(w3.element(q, q.inverse(), true).order() == 2);
  CHECK(w3.element(q, Perm::identity(3), false).order() == 3);
}

TEST_CASE("degree cap") {
  CHECK_THROWS(PermGroup(5000, {}));
  PermGroup ok(5000, {}, 8192);
  CHECK(ok.order() == 1);
}

TEST_CASE("named builders verify their defining orders") {
  auto c6 = groups::cyclic(6);
  CHECK(c6.realized.order() == 6);
  CHECK(c6.named[0].order() == 6);

  auto d1 = groups::dihedral_presented(1);
  CHECK(d1.realized.order() == 2);
  auto d2 = groups::dihedral_presented(2);
  CHECK(d2.realized.order() == 4);
  for (int n : {3, 4, 5, 6, 7, 12}) {
    auto d = groups::dihedral_presented(n);
    CHECK(d.realized.order() == 2 * n);
    CHECK(d.named[0].order() == 2);
    CHECK(d.named[1].order() == 2);
    CHECK((d.named[0] * d.named[1]).order() == n);
  }
}
