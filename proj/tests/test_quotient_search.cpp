#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nec/quotient_search.hpp"

using namespace nec;

namespace {

SearchContext ctx_with_data(std::uint64_t seed = 1) {
  SearchContext ctx;
  ctx.seed = seed;
  ctx.lookup = QuotientLookup::load(std::string(NEC_SOURCE_DIR) + "/data/known_quotients.json");
  return ctx;
}

void check_polygon(const std::vector<Perm>& xs, const std::vector<int>& periods) {
  REQUIRE(xs.size() == periods.size());
  Perm prod = Perm::identity(xs[0].degree());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(xs[i].order() == periods[i]);
    prod = prod * xs[i];
  }
  CHECK(prod.is_identity());
}

void check_reflections(const std::vector<Perm>& cs, const std::vector<int>& links) {
  REQUIRE(cs.size() == links.size());
  int s = static_cast<int>(cs.size());
  for (const auto& c : cs) CHECK(c.order() == 2);
  for (int i = 1; i <= s; ++i) CHECK((cs[i - 1] * cs[i % s]).order() == links[i - 1]);
}

} // namespace

TEST_CASE("forced solutions for all-2 periods") {
  auto ctx = ctx_with_data();
  auto xs = find_polygon_quotient({2, 2, 2}, ctx);
  check_polygon(xs, {2, 2, 2});
  xs = find_polygon_quotient({2, 2, 2, 2, 2}, ctx);
  check_polygon(xs, {2, 2, 2, 2, 2});
}

TEST_CASE("lookup entries are frozen") {
  auto ctx = ctx_with_data();
  auto xs = find_polygon_quotient({2, 3, 3}, ctx);
  CHECK(xs[0] == Perm::from_cycles("(1 2)(3 4)", 4));
  CHECK(xs[1] == Perm::from_cycles("(1 2 3)", 4));
  CHECK(xs[2] == Perm::from_cycles("(1 4 3)", 4));
  check_polygon(xs, {2, 3, 3});
}

TEST_CASE("dihedral family") {
  auto ctx = ctx_with_data();
  check_polygon(find_polygon_quotient({2, 2, 7}, ctx), {2, 2, 7});
  check_polygon(find_polygon_quotient({2, 7, 2}, ctx), {2, 7, 2});
  check_polygon(find_polygon_quotient({7, 2, 2}, ctx), {7, 2, 2});
}

TEST_CASE("random search with repair") {
  auto ctx = ctx_with_data();
  check_polygon(find_polygon_quotient({3, 3, 5}, ctx), {3, 3, 5});
  check_polygon(find_polygon_quotient({4, 6, 8}, ctx), {4, 6, 8});
  check_polygon(find_polygon_quotient({2, 3, 7}, ctx), {2, 3, 7});
  check_polygon(find_polygon_quotient({2, 3, 3, 4}, ctx), {2, 3, 3, 4});
}

TEST_CASE("searches are deterministic per seed") {
  auto a = find_polygon_quotient({3, 4, 5}, ctx_with_data(99));
  auto b = find_polygon_quotient({3, 4, 5}, ctx_with_data(99));
  CHECK(a == b);
  auto c = find_reflection_cycle_quotient({2, 3, 4, 5}, ctx_with_data(99));
  auto d = find_reflection_cycle_quotient({2, 3, 4, 5}, ctx_with_data(99));
  CHECK(c == d);
}

TEST_CASE("preconditions") {
  auto ctx = ctx_with_data();
  CHECK_THROWS_AS(find_polygon_quotient({2, 3}, ctx), std::invalid_argument);
  CHECK_THROWS_AS(find_reflection_cycle_quotient({3, 4}, ctx), std::invalid_argument);
  SearchContext tight = ctx;
  tight.max_degree = 4;
  CHECK_THROWS_AS(find_polygon_quotient({9, 9, 9}, tight), SearchError);
}

TEST_CASE("reflection tuples") {
  auto ctx = ctx_with_data();
  SUBCASE("trivial sizes give the two-element group") {
    auto cs = find_reflection_cycle_quotient({}, ctx);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].order() == 2);
    cs = find_reflection_cycle_quotient({5}, ctx);
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].order() == 2);
  }
  SUBCASE("frozen small solutions") {
    auto cs = find_reflection_cycle_quotient({2, 2, 2}, ctx);
    check_reflections(cs, {2, 2, 2});
    CHECK(cs[0] == Perm::from_cycles("(1 2)", 4));
    cs = find_reflection_cycle_quotient({3, 3, 3}, ctx);
    check_reflections(cs, {3, 3, 3});
    CHECK(cs[0].degree() == 3);
  }
  SUBCASE("doubling handles mixed links") {
    check_reflections(find_reflection_cycle_quotient({2, 3, 4}, ctx), {2, 3, 4});
    check_reflections(find_reflection_cycle_quotient({2, 2, 5}, ctx), {2, 2, 5});
    check_reflections(find_reflection_cycle_quotient({3, 4, 5, 6}, ctx), {3, 4, 5, 6});
    check_reflections(find_reflection_cycle_quotient({2, 2, 2, 2, 2}, ctx), {2, 2, 2, 2, 2});
  }
}

TEST_CASE("affine triangle quotients") {
  for (auto type : {std::vector<int>{2, 4, 4}, {3, 3, 3}, {2, 3, 6}}) {
    auto cs = euclidean_affine_quotient(type, 4);
    check_reflections(cs, type);
    CHECK(cs[0].degree() == 16);
  }
  CHECK_THROWS_AS(euclidean_affine_quotient({2, 4, 4}, 1), std::invalid_argument);
  CHECK_THROWS_AS(euclidean_affine_quotient({2, 3, 5}, 4), std::invalid_argument);
  // orders stay exact at larger moduli too
  check_reflections(euclidean_affine_quotient({3, 3, 3}, 6), {3, 3, 3});
}

TEST_CASE("full assignments for genus-0 symbols") {
  auto ctx = ctx_with_data();
  SUBCASE("lookup instances") {
    auto images = find_full_quotient(parse_signature("(0;+;[2,2];{(-)})"), ctx);
    CHECK(images.at(elliptic(1)).order() == 2);
    CHECK(images.at(elliptic(2)).order() == 2);
    CHECK(images.at(elliptic(1)) != images.at(elliptic(2)));
    images = find_full_quotient(parse_signature("(0;+;[-];{(2,2,2,2)})"), ctx);
    CHECK(images.at(reflection(1, 1)).order() == 2);
    CHECK((images.at(reflection(1, 0)) * images.at(reflection(1, 1))).order() == 2);
  }
  SUBCASE("assembled instances keep exact orders") {
    auto sig = parse_signature("(0;+;[2,3];{(2,2,2)})");
    auto images = find_full_quotient(sig, ctx);
    CHECK(images.at(elliptic(1)).order() == 2);
    CHECK(images.at(elliptic(2)).order() == 3);
    CHECK((images.at(reflection(1, 0)) * images.at(reflection(1, 1))).order() == 2);
    // long relation: x1 x2 e1 = 1
    Perm prod = images.at(elliptic(1)) * images.at(elliptic(2)) * images.at(connector(1));
    CHECK(prod.is_identity());
  }
  SUBCASE("short cycles balance across connectors") {
    auto sig = parse_signature("(0;+;[-];{(3),(2,2,2)})");
    auto images = find_full_quotient(sig, ctx);
    CHECK((images.at(reflection(1, 0)) * images.at(reflection(1, 1))).order() == 3);
    Perm e_prod = images.at(connector(1)) * images.at(connector(2));
    CHECK(e_prod.is_identity());
    CHECK_THROWS_AS(find_full_quotient(parse_signature("(0;+;[5];{(2,3)})"), ctx),
                    std::invalid_argument);
  }
}
