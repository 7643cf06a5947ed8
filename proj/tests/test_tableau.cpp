#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorv/clone.hpp"
#include "cantorv/ktheory.hpp"
#include "cantorv/parse.hpp"
#include "cantorv/rng.hpp"
#include "cantorv/tableau.hpp"

using namespace cantorv;

namespace {
const Signature s21(2, 1);
const Signature s22(2, 2);
const Signature s32(3, 2);

Tableau A() { return parse_tableau("n=2 r=1 { 0->00, 10->01, 11->1 }"); }
Tableau B() {
  return parse_tableau("n=2 r=1 { 00->00, 01->01, 10->11, 11->10 }");
}
Term g(int i) { return Term::gen(i); }
}  // namespace

TEST_CASE("identity and reduction") {
  CHECK(Tableau::identity(s21).is_identity());
  // an unreduced caret pair collapses
  Tableau t = parse_tableau("n=2 r=1 { 00->10, 01->11, 1->0 }");
  CHECK(t == parse_tableau("n=2 r=1 { 0->1, 1->0 }"));
}

TEST_CASE("composition with identity and inverse") {
  Tableau a = A(), id = Tableau::identity(s21);
  CHECK(compose(id, a) == a);
  CHECK(compose(a, id) == a);
  CHECK(compose(a, inverse(a)).is_identity());
  CHECK(compose(inverse(a), a).is_identity());
  CHECK(inverse(a) == parse_tableau("n=2 r=1 { 00->0, 01->10, 1->11 }"));
  CHECK(inverse(id) == id);
}

TEST_CASE("composition matches the action on terms") {
  Tableau a = A();
  Tableau aa = compose(a, a);
  const std::vector<Term> terms = enumerate_normal_forms(s21, 5, 3000);
  for (const Term& t : terms)
    CHECK(apply(aa, t) == apply(a, apply(a, t)));
}

TEST_CASE("apply: prefix replacement") {
  // A sends the cone of 0 to the cone of 00
  CHECK(apply(A(), Term::alpha(1, g(1))) ==
        Term::alpha(1, Term::alpha(1, g(1))));
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    Term t = random_term(s21, 6, rng);
    CHECK(apply(Tableau::identity(s21), t) == reduce(t));
  }
}

TEST_CASE("apply is a homomorphism of the algebra") {
  Rng rng(31);
  Tableau a = A();
  for (int i = 0; i < 200; ++i) {
    Term x = random_term(s21, 5, rng), y = random_term(s21, 5, rng);
    CHECK(apply(a, Term::mu({x, y})) ==
          reduce(Term::mu({apply(a, x), apply(a, y)})));
    CHECK(apply(a, Term::alpha(1, x)) ==
          reduce(Term::alpha(1, apply(a, x))));
  }
}

TEST_CASE("apply respects composition on random elements") {
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    Tableau u = random_tableau(s21, 4, rng);
    Tableau v = random_tableau(s21, 4, rng);
    Term t = random_term(s21, 6, rng);
    CHECK(apply(compose(u, v), t) == apply(u, apply(v, t)));
  }
}

TEST_CASE("group axioms on random triples") {
  for (const Signature& sig : {s21, s32}) {
    Rng rng(57 + sig.arity);
    for (int i = 0; i < 300; ++i) {
      Tableau u = random_tableau(sig, 5, rng);
      Tableau v = random_tableau(sig, 5, rng);
      Tableau w = random_tableau(sig, 5, rng);
      CHECK(compose(compose(u, v), w) == compose(u, compose(v, w)));
      CHECK(compose(u, inverse(u)).is_identity());
      CHECK(inverse(inverse(u)) == u);
    }
  }
}

TEST_CASE("block sums") {
  CHECK(block_sum(Tableau::identity(s21), Tableau::identity(s21)) ==
        Tableau::identity(s22));
  Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    Tableau u = random_tableau(s21, 4, rng), u2 = random_tableau(s21, 4, rng);
    Tableau v = random_tableau(s21, 4, rng), v2 = random_tableau(s21, 4, rng);
    CHECK(commutator(block_sum(u, v), block_sum(u2, v2)) ==
          block_sum(commutator(u, u2), commutator(v, v2)));
    CHECK(compose(block_sum(u, v), block_sum(u2, v2)) ==
          block_sum(compose(u, u2), compose(v, v2)));
  }
}

TEST_CASE("stabilization and retraction") {
  CHECK(retract_check(Tableau::identity(s21)).ok);
  auto rep = retract_check(A());
  CHECK(rep.ok);
  CHECK_FALSE(rep.hypothesis);  // A + id is not the identity
  CHECK(rep.retract_recovers);
  // exhaustive small-caret injectivity
  for (const Tableau& u : enumerate_tableaux(s21, 3)) {
    CHECK(retract_check(u).ok);
    if (!u.is_identity())
      CHECK_FALSE(block_sum(u, Tableau::identity(s21)).is_identity());
  }
}

TEST_CASE("swap") {
  Tableau tau = swap_blocks(2, 1);
  CHECK(tau == parse_tableau("n=2 r=2 { 1:e->2:e, 2:e->1:e }"));
  CHECK(compose(tau, tau).is_identity());
  Rng rng(83);
  for (int i = 0; i < 50; ++i) {
    Tableau u = random_tableau(s21, 4, rng);
    Tableau lhs = compose(
        tau, compose(block_sum(u, Tableau::identity(s21)), tau));
    CHECK(lhs == block_sum(Tableau::identity(s21), u));
  }
}

TEST_CASE("whitehead witness") {
  {
    auto [a, b] = whitehead_witness(Tableau::identity(s21));
    CHECK(commutator(a, b).is_identity());
  }
  {
    Tableau w = A();
    auto [a, b] = whitehead_witness(w);
    CHECK(commutator(a, b) == block_sum(w, inverse(w)));
  }
  Rng rng(97);
  for (int i = 0; i < 200; ++i) {
    Tableau w = random_tableau(s21, 5, rng);
    auto [a, b] = whitehead_witness(w);
    CHECK(commutator(a, b) == block_sum(w, inverse(w)));
  }
}

TEST_CASE("perfectness identity") {
  {
    auto rep = perfectness_identity(Tableau::identity(s21),
                                    Tableau::identity(s21));
    CHECK(rep.equal);
    CHECK(rep.expanded_equal);
  }
  {
    auto rep = perfectness_identity(A(), inverse(A()));
    CHECK(rep.equal);
    CHECK(rep.expanded_equal);
  }
  Rng rng(113);
  for (int i = 0; i < 100; ++i) {
    Tableau u = random_tableau(s21, 4, rng);
    Tableau v = random_tableau(s21, 4, rng);
    auto rep = perfectness_identity(u, v);
    CHECK(rep.equal);
    CHECK(rep.expanded_equal);
  }
}

TEST_CASE("rank transport") {
  ExpansionIso iso = expansion_iso(2, 1);  // C_{2,2} <-> C_{2,1}
  Tableau rootswap = root_permutation(s22, {2, 1});
  Tableau down = rank_transport(rootswap, iso.forward, iso.backward);
  CHECK(down.sig() == s21);
  CHECK(compose(down, down).is_identity());
  CHECK_FALSE(down.is_identity());
  CHECK(rank_transport(Tableau::identity(s22), iso.forward, iso.backward)
            .is_identity());
  Rng rng(131);
  for (int i = 0; i < 50; ++i) {
    Tableau u = random_tableau(s22, 4, rng);
    Tableau v = random_tableau(s22, 4, rng);
    CHECK(rank_transport(compose(u, v), iso.forward, iso.backward) ==
          compose(rank_transport(u, iso.forward, iso.backward),
                  rank_transport(v, iso.forward, iso.backward)));
    // inverse transport recovers u
    CHECK(rank_transport(rank_transport(u, iso.forward, iso.backward),
                         iso.backward, iso.forward) == u);
  }
}

TEST_CASE("leaf count congruence is preserved") {
  auto congruent = [](const Tableau& t) {
    return (static_cast<int>(t.domain().size()) - t.sig().rank) %
               (t.sig().arity - 1) ==
           0;
  };
  for (const Signature& sig : {s21, s32}) {
    Rng rng(139 + sig.arity);
    for (int i = 0; i < 100; ++i) {
      Tableau u = random_tableau(sig, 5, rng);
      Tableau v = random_tableau(sig, 5, rng);
      CHECK(congruent(u));
      CHECK(congruent(compose(u, v)));
      CHECK(congruent(inverse(u)));
      CHECK(congruent(block_sum(u, v)));
      CHECK(congruent(commutator(u, v)));
    }
  }
}

TEST_CASE("canonical forms separate group elements") {
  Rng rng(149);
  const std::vector<Term> probes = enumerate_normal_forms(s21, 6, 400);
  for (int i = 0; i < 30; ++i) {
    Tableau u = random_tableau(s21, 4, rng);
    Tableau v = random_tableau(s21, 4, rng);
    bool same_action = true;
    for (const Term& t : probes)
      if (apply(u, t) != apply(v, t)) {
        same_action = false;
        break;
      }
    CHECK(same_action == (u == v));
  }
}

TEST_CASE("fixes_pointwise on named elements") {
  CHECK(fixes_pointwise(Tableau::identity(s21), Clone(parse_code("{0}", s21))));
  CHECK(fixes_pointwise(B(), Clone(parse_code("{0}", s21))));
  CHECK_FALSE(fixes_pointwise(A(), Clone(parse_code("{11}", s21))));
}
