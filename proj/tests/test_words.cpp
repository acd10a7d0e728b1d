#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nec/presentation.hpp"
#include "nec/word.hpp"

using namespace nec;

TEST_CASE("generator names round trip") {
  CHECK(glide(1).name() == "d1");
  CHECK(reflection(1, 0).name() == "c10");
  CHECK(reflection(12, 0).name() == "c12_0");
  CHECK(reflection(1, 11).name() == "c1_11");
  CHECK(CanonicalGenerator::from_name("c10") == reflection(1, 0));
  CHECK(CanonicalGenerator::from_name("c12_0") == reflection(12, 0));
  CHECK(CanonicalGenerator::from_name("x3") == elliptic(3));
  CHECK_THROWS(CanonicalGenerator::from_name("q1"));
  CHECK_THROWS(CanonicalGenerator::from_name("c1"));
}

TEST_CASE("words reduce freely") {
  Word w;
  w.append(hyperbolic_a(1));
  w.append(hyperbolic_a(1), -1);
  CHECK(w.empty());
  w.append(glide(1), 2);
  w.append(glide(1), 1);
  CHECK(w.letters().size() == 1);
  CHECK(w.letters()[0].exp == 3);
  CHECK(w.length() == 3);
  CHECK(w.inverse().letters()[0].exp == -3);
  CHECK((w * w.inverse()).empty());
}

TEST_CASE("word strings") {
  Word w = Word::parse("a1.c10^-1.d2^3");
  CHECK(w.str() == "a1.c10^-1.d2^3");
  CHECK(Word::parse("1").empty());
  CHECK(Word().str() == "1");
  CHECK(Word::parse("d1^3").length() == 3);
  CHECK_THROWS(Word::parse("a1^x"));
}

TEST_CASE("orientation character") {
  auto sig = parse_signature("(1;-;[3];{(2)})");
  Word w = Word::parse("c10.e1");
  CHECK(orientation_character(sig, w) == -1);
  CHECK(orientation_character(sig, Word::parse("d1^2.x1.e1")) == +1);
  CHECK(orientation_character(sig, Word::parse("d1^3")) == -1);
  CHECK_THROWS(orientation_character(sig, Word::parse("a1")));
}

TEST_CASE("canonical presentation of a one-cycle sign-minus symbol") {
  auto sig = parse_signature("(1;-;[3];{(2)})");
  Presentation p = canonical_presentation(sig);
  std::vector<std::string> gens;
  for (const auto& g : p.generators) gens.push_back(g.name());
  CHECK(gens == std::vector<std::string>{"d1", "x1", "c10", "c11", "e1"});
  std::vector<std::string> rels;
  for (const auto& rel : p.relators) rels.push_back(rel.str());
  CHECK(rels == std::vector<std::string>{"x1^3", "c10^2", "c11^2", "c10.c11.c10.c11",
                                         "c11.e1.c10^-1.e1^-1", "d1^2.x1.e1"});
}

TEST_CASE("presentation counts for a reflection-triple symbol") {
  auto sig = parse_signature("(0;+;[-];{(2,3,7)})");
  Presentation p = canonical_presentation(sig);
  CHECK(p.generators.size() == 5); // c10..c13, e1
  // 4 squares + 3 links + conjugation + long relator
  CHECK(p.relators.size() == 9);
  CHECK(p.relators.back().str() == "e1");
}

TEST_CASE("surface group has a single long relator") {
  auto sig = parse_signature("(2;+;[-];{-})");
  Presentation p = canonical_presentation(sig);
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0].str() == "a1^-1.b1^-1.a1.b1.a2^-1.b2^-1.a2.b2");
}

TEST_CASE("every relator preserves orientation") {
  for (const char* text :
       {"(1;-;[3];{(2)})", "(0;+;[-];{(2,3,7)})", "(2;+;[-];{-})", "(3;-;[2,5];{(-),(2,4)})",
        "(1;+;[4];{(2)})", "(0;+;[2,3];{(-),(2,2,2)})"}) {
    auto sig = parse_signature(text);
    for (const auto& rel : canonical_presentation(sig).relators)
      CHECK(orientation_character(sig, rel) == +1);
  }
}

TEST_CASE("empty cycle contributes a reflection and its conjugation relator") {
  auto sig = parse_signature("(1;-;[-];{(-)})");
  Presentation p = canonical_presentation(sig);
  std::vector<std::string> rels;
  for (const auto& rel : p.relators) rels.push_back(rel.str());
  CHECK(rels == std::vector<std::string>{"c10^2", "c10.e1.c10^-1.e1^-1", "d1^2.e1"});
}
