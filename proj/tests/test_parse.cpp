#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorv/parse.hpp"

using namespace cantorv;

namespace {
const Signature s21(2, 1);
const Signature s22(2, 2);
const Signature s32(3, 2);
}  // namespace

TEST_CASE("term parsing") {
  Term t = parse_term("m(L(g1),R(g1))", s21);
  CHECK(t == Term::mu({Term::alpha(1, Term::gen(1)),
                       Term::alpha(2, Term::gen(1))}));
  CHECK(parse_term("a1(g1)", s21) == Term::alpha(1, Term::gen(1)));
  CHECK(parse_term(" m( g1 , g2 , a3(g1) ) ", s32) ==
        Term::mu({Term::gen(1), Term::gen(2),
                  Term::alpha(3, Term::gen(1))}));
}

TEST_CASE("term round trip") {
  for (const std::string& text :
       {"g1", "m(L(g1),R(g1))", "L(m(g1,g1))"}) {
    Term t = parse_term(text, s21);
    CHECK(parse_term(print_term(t, s21), s21) == t);
  }
}

TEST_CASE("term errors carry positions") {
  CHECK_THROWS_AS(parse_term("m(g1)", s21), ParseError);
  CHECK_THROWS_AS(parse_term("g3", s22), ParseError);
  CHECK_THROWS_AS(parse_term("a3(g1)", s21), ParseError);
  CHECK_THROWS_AS(parse_term("m(g1,g1) junk", s21), ParseError);
  try {
    parse_term("m(g1,\nq)", s21);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 1);
  }
}

TEST_CASE("address parsing") {
  CHECK(parse_address("01", s21) == Address(1, "01"));
  CHECK(parse_address("e", s21) == Address(1, ""));
  CHECK(parse_address("2:10", s22) == Address(2, "10"));
  CHECK(parse_address("1:e", s22) == Address(1, ""));
  CHECK_THROWS_AS(parse_address("3:0", s22), ParseError);
  CHECK_THROWS_AS(parse_address("2", s21), ParseError);  // letter >= n
  CHECK(parse_address("1:2", s32) == Address(1, "2"));
  CHECK_THROWS_AS(parse_address("2", s32), ParseError);  // root required
}

TEST_CASE("code parsing") {
  PrefixCode p = parse_code("{0, 10, 11}", s21);
  CHECK(p.size() == 3);
  CHECK(p.str() == "{0, 10, 11}");
  CHECK(parse_code(p.str(), s21) == p);
  CHECK_THROWS(parse_code("{0,01}", s21));
  CHECK_THROWS_AS(parse_code("{0,}", s21), ParseError);
}

TEST_CASE("tableau parsing") {
  Tableau a = parse_tableau("n=2 r=1 { 0->00, 10->01, 11->1 }");
  CHECK(a.sig() == s21);
  CHECK(a.pairs().size() == 3);
  CHECK(parse_tableau(a.str()) == a);
  CHECK(parse_tableau("id(2,3)") == Tableau::identity(Signature(2, 3)));
  CHECK(parse_tableau("n=2 r=2 { 1:e->2:e, 2:e->1:e }") ==
        swap_blocks(2, 1));
  // non-complete side rejected
  CHECK_THROWS(parse_tableau("n=2 r=1 { 0->0 }"));
  // non-bijective rejected
  CHECK_THROWS(parse_tableau("n=2 r=1 { 0->0, 1->0 }"));
}

TEST_CASE("cloneseq parsing") {
  CloneSeq s = parse_cloneseq("[{0} > {00} > {000}]", s21);
  CHECK(s.materialized() == 3);
  CHECK(s.str() == "[{0} > {00} > {000}]");
  CHECK(parse_cloneseq(s.str(), s21) == s);
  CHECK_THROWS_AS(parse_cloneseq("[{0} >", s21), ParseError);
}
