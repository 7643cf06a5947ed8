#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorv/hom.hpp"
#include "cantorv/rng.hpp"
#include "cantorv/term.hpp"

using namespace cantorv;

namespace {
const Signature s21(2, 1);
const Signature s22(2, 2);
const Signature s31(3, 1);
const Signature s32(3, 2);
Term g(int i) { return Term::gen(i); }
}  // namespace

TEST_CASE("projection rule") {
  // a1(m(x, y)) -> x
  Term t = Term::alpha(1, Term::mu({g(1), Term::alpha(2, g(1))}));
  CHECK(reduce(t) == g(1));
}

TEST_CASE("merge rule") {
  // m(a1(x), a2(x)) -> x
  Term t = Term::mu({Term::alpha(1, g(1)), Term::alpha(2, g(1))});
  CHECK(reduce(t) == g(1));
}

TEST_CASE("normal forms are fixed") {
  CHECK(reduce(g(1)) == g(1));
  Term t = Term::alpha(2, Term::alpha(1, g(1)));
  CHECK(reduce(t) == t);
  CHECK(is_normal(t));
}

TEST_CASE("ternary projection") {
  Term t = Term::alpha(2, Term::mu({g(1), g(2), g(1)}));
  check_wellformed(t, s32);
  CHECK(reduce(t) == g(2));
}

TEST_CASE("nested redexes") {
  // m(a1(m(x,y)), a2(m(x,y))) -> m(x, y) stays if x,y normal
  Term inner = Term::mu({g(1), g(2)});
  Term t = Term::mu({Term::alpha(1, inner), Term::alpha(2, inner)});
  CHECK(reduce(t) == inner);
  // a2(m(a1(g1), a2(g1))) -> a2(g1)
  Term u = Term::alpha(
      2, Term::mu({Term::alpha(1, g(1)), Term::alpha(2, g(1))}));
  CHECK(reduce(u) == Term::alpha(2, g(1)));
}

TEST_CASE("reduce is idempotent") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    Term t = random_term(s22, 8, rng);
    Term r = reduce(t);
    CHECK(is_normal(r));
    CHECK(reduce(r) == r);
  }
}

TEST_CASE("innermost and outermost strategies agree") {
  for (const Signature& sig : {s21, s22, s31, s32}) {
    Rng rng(101 + sig.arity * 10 + sig.rank);
    for (int i = 0; i < 2000; ++i) {
      Term t = random_term(sig, 10, rng);
      CHECK(reduce(t) == reduce_outermost(t));
    }
  }
}

TEST_CASE("rewrite steps shrink the term") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    Term t = random_term(s31, 9, rng);
    CHECK(reduce(t).size() <= t.size());
  }
}

TEST_CASE("word problem") {
  CHECK(equal(Term::mu({Term::alpha(1, g(1)), Term::alpha(2, g(1))}), g(1)));
  CHECK_FALSE(equal(Term::alpha(1, g(1)), Term::alpha(2, g(1))));
  Term t = Term::mu({g(2), g(1)});
  CHECK(equal(t, t));
}

TEST_CASE("wellformedness is checked") {
  CHECK_THROWS(check_wellformed(g(2), s21));
  CHECK_THROWS(check_wellformed(Term::mu({g(1), g(1)}), s31));
  CHECK_THROWS(check_wellformed(Term::alpha(3, g(1)), s21));
  CHECK_NOTHROW(check_wellformed(Term::mu({g(1), g(2), g(1)}), s32));
}

TEST_CASE("printing") {
  Term t = Term::mu({Term::alpha(1, g(1)), Term::alpha(2, g(1))});
  CHECK(print_term(t, s21) == "m(L(g1),R(g1))");
  CHECK(print_term(Term::alpha(3, g(2)), s32) == "a3(g2)");
}

TEST_CASE("hom application: the rank-change pair") {
  // x1 -> L(g1), x2 -> R(g1)  and its inverse  x1 -> m(g1,g2)
  Homomorphism phi(s22, s21,
                   {Term::alpha(1, g(1)), Term::alpha(2, g(1))});
  Homomorphism psi(s21, s22, {Term::mu({g(1), g(2)})});
  CHECK(apply_hom(phi, psi.images[0]) == g(1));
  CHECK(apply_hom(psi, Term::alpha(1, g(1))) == g(1));
  CHECK(verify_iso_pair(phi, psi));
}

TEST_CASE("identity hom reduces") {
  Homomorphism id = Homomorphism::identity(s22);
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    Term t = random_term(s22, 7, rng);
    CHECK(apply_hom(id, t) == reduce(t));
  }
}

TEST_CASE("hom application respects composition") {
  Rng rng(17);
  for (int i = 0; i < 300; ++i) {
    std::vector<Term> f_imgs, g_imgs;
    for (int j = 0; j < 2; ++j) f_imgs.push_back(random_term(s22, 4, rng));
    for (int j = 0; j < 2; ++j) g_imgs.push_back(random_term(s22, 4, rng));
    Homomorphism f(s22, s22, f_imgs), h(s22, s22, g_imgs);
    Homomorphism hf = compose_hom(h, f);
    Term t = random_term(s22, 5, rng);
    CHECK(apply_hom(hf, t) == apply_hom(h, apply_hom(f, t)));
  }
}
