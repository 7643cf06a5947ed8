#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorv/code.hpp"
#include "cantorv/parse.hpp"
#include "cantorv/rng.hpp"

using namespace cantorv;

namespace {
const Signature s21(2, 1);
const Signature s22(2, 2);
const Signature s31(3, 1);

PrefixCode code(const Signature& sig, const std::string& lit) {
  return parse_code(lit, sig);
}
}  // namespace

TEST_CASE("addresses name descent chains") {
  Address a(1, "01");
  // first letter innermost: 1:01 is a2(a1(g1))
  CHECK(term_of_address(a) == Term::alpha(2, Term::alpha(1, Term::gen(1))));
  CHECK(address_of_leaf(term_of_address(a)) == a);
  CHECK_FALSE(address_of_leaf(Term::mu({Term::gen(1), Term::gen(1)})));
}

TEST_CASE("validation: complete codes") {
  auto rep = code_validate(code(s21, "{0,1}"), CodeMode::Complete);
  CHECK(rep.ok);
  CHECK(code(s21, "{0,1}").size() == 2);  // 2 = 1 mod 1

  CHECK_THROWS(parse_code("{0,01}", s21));  // prefix violation at build time

  CHECK_FALSE(code_validate(code(s21, "{0}"), CodeMode::Complete).ok);
  CHECK(code_validate(code(s21, "{0}"), CodeMode::Clone).ok);
  CHECK_FALSE(code_validate(code(s21, "{0,1}"), CodeMode::Clone).ok);
}

TEST_CASE("validation reports a witness") {
  auto rep = code_validate(code(s21, "{0}"), CodeMode::Complete);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->word.substr(0, 1) == "1");  // the uncovered branch
}

TEST_CASE("trivial code") {
  PrefixCode t = trivial_code(s22);
  CHECK(t.size() == 2);
  CHECK(is_complete(t));
  CHECK(t.addrs[0] == Address(1, ""));
  CHECK(t.addrs[1] == Address(2, ""));
}

TEST_CASE("refinement") {
  CHECK(code_refine(trivial_code(s21), code(s21, "{0,1}")) ==
        code(s21, "{0,1}"));
  CHECK(code_refine(code(s21, "{0,1}"), code(s21, "{00,01,1}")) ==
        code(s21, "{00,01,1}"));
  CHECK(code_refine(code(s21, "{00,01,1}"), code(s21, "{0,10,11}")) ==
        code(s21, "{00,01,10,11}"));
}

TEST_CASE("refinement properties on random codes") {
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    PrefixCode p = random_complete_code(s22, 4, rng);
    PrefixCode q = random_complete_code(s22, 4, rng);
    PrefixCode r = random_complete_code(s22, 3, rng);
    CHECK(code_refine(p, p) == p);
    CHECK(code_refine(p, q) == code_refine(q, p));
    CHECK(code_refine(code_refine(p, q), r) ==
          code_refine(p, code_refine(q, r)));
    CHECK(is_complete(code_refine(p, q)));
    // size congruence for every complete code
    CHECK((p.size() - s22.rank) % (s22.arity - 1) == 0);
  }
}

TEST_CASE("complement examples") {
  CHECK(code_complement(code(s21, "{0}")) == code(s21, "{1}"));
  CHECK(code_complement(code(s21, "{00}")) == code(s21, "{01,1}"));
  CHECK(code_complement(code(s31, "{0}")) == code(s31, "{1,2}"));
}

TEST_CASE("complement is a minimal completion") {
  Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    PrefixCode p = random_complete_code(s21, 5, rng);
    // drop a random element to get a clone code
    std::vector<Address> addrs = p.addrs;
    addrs.erase(addrs.begin() + static_cast<long>(rng.below(addrs.size())));
    PrefixCode a(s21, addrs);
    PrefixCode b = code_complement(a);
    std::vector<Address> both = a.addrs;
    both.insert(both.end(), b.addrs.begin(), b.addrs.end());
    CHECK(code_validate(PrefixCode(s21, both), CodeMode::Complete).ok);
    for (size_t drop = 0; drop < b.addrs.size(); ++drop) {
      std::vector<Address> fewer = a.addrs;
      for (size_t j = 0; j < b.addrs.size(); ++j)
        if (j != drop) fewer.push_back(b.addrs[j]);
      CHECK_FALSE(is_complete(PrefixCode(s21, fewer)));
    }
  }
}

TEST_CASE("complement rejects complete input") {
  CHECK_THROWS(code_complement(code(s21, "{0,1}")));
}

TEST_CASE("expansion") {
  CHECK(expand_at(trivial_code(s21), Address(1, "")) == code(s21, "{0,1}"));
  CHECK(expand_at(code(s21, "{0,1}"), Address(1, "0")) ==
        code(s21, "{00,01,1}"));
}

TEST_CASE("leaf addresses of a normal form") {
  // m(a2(g1), a1(g1)) has leaves 0 -> address 1:1 wait: leaves in order
  Term t = Term::mu({Term::alpha(2, Term::gen(1)), Term::alpha(1, Term::gen(1))});
  auto leaves = leaf_addresses(reduce(t));
  REQUIRE(leaves.size() == 2);
  CHECK(leaves[0] == Address(1, "1"));
  CHECK(leaves[1] == Address(1, "0"));
}

TEST_CASE("covering lookup") {
  PrefixCode p = code(s21, "{0,10,11}");
  CHECK(p.covering(Address(1, "01")) == Address(1, "0"));
  CHECK(p.covering(Address(1, "10")) == Address(1, "10"));
  CHECK_FALSE(p.covering(Address(1, "1")).has_value());
}
