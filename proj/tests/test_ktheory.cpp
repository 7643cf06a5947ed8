#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorv/ktheory.hpp"
#include "cantorv/parse.hpp"
#include "cantorv/rng.hpp"

using namespace cantorv;

namespace {
const Signature s21(2, 1);
const Signature s31(3, 1);
Term g(int i) { return Term::gen(i); }
}  // namespace

TEST_CASE("expansion iso binary base case") {
  ExpansionIso iso = expansion_iso(2, 1);
  CHECK(iso.verified);
  CHECK(iso.forward.images[0] == Term::alpha(1, g(1)));
  CHECK(iso.forward.images[1] == Term::alpha(2, g(1)));
  CHECK(iso.backward.images[0] == Term::mu({g(1), g(2)}));
}

TEST_CASE("expansion iso across signatures") {
  for (int n = 2; n <= 6; ++n)
    for (int r = 1; r <= 4; ++r) CHECK(expansion_iso(n, r).verified);
}

TEST_CASE("iterated expansion links congruent ranks") {
  // C_{3,1} ~ C_{3,3}: compose two verified steps
  ExpansionIso a = expansion_iso(3, 1);  // C_{3,3} <-> C_{3,1}
  CHECK(a.forward.source.rank == 3);
  CHECK(a.forward.target.rank == 1);
  ExpansionIso b = expansion_iso(3, 3);  // C_{3,5} <-> C_{3,3}
  Homomorphism fwd = compose_hom(a.forward, b.forward);
  Homomorphism back = compose_hom(b.backward, a.backward);
  CHECK(verify_iso_pair(fwd, back));
}

TEST_CASE("k0 values") {
  CHECK(k0(2).trivial());
  CHECK(k0(2).str() == "0 (trivial ring)");
  CHECK(k0(3).modulus == 2);
  CHECK(k0(3).str() == "Z/2");
  CHECK(k0(4).modulus == 3);
  CHECK(k0(3).relation.verified);
}

TEST_CASE("k0 ring laws") {
  K0Ring r = k0(5);
  for (int a = 0; a < r.modulus; ++a)
    for (int b = 0; b < r.modulus; ++b) {
      CHECK(r.add(a, b) == r.add(b, a));
      CHECK(r.mul(a, b) == r.mul(b, a));
      for (int c = 0; c < r.modulus; ++c)
        CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
    }
  CHECK(r.mul(1, 1) == 1);
  CHECK(r.cls(5) == r.cls(1));  // rank drops by n-1
}

TEST_CASE("product algebra laws") {
  ProductElement p{g(1), g(1)};
  ProductElement q{Term::alpha(1, g(1)), g(1)};
  ProductElement m = product_mu({p, q}, 2);
  CHECK(product_alpha(1, m).first == p.first);
  CHECK(product_alpha(1, m).second == p.second);
  CHECK(product_alpha(2, m).first == q.first);
  CHECK(product_alpha(2, m).second == q.second);
}

TEST_CASE("componentwise laws on random pairs") {
  Rng rng(401);
  for (int i = 0; i < 500; ++i) {
    ProductElement a{random_term(s21, 5, rng), random_term(s21, 5, rng)};
    ProductElement b{random_term(s21, 5, rng), random_term(s21, 5, rng)};
    ProductElement m = product_mu({a, b}, 2);
    CHECK(product_alpha(1, m).first == reduce(a.first));
    CHECK(product_alpha(2, m).second == reduce(b.second));
  }
}

TEST_CASE("the set-level mu is not a homomorphism: medial law fails") {
  // mu(mu(a,a'), mu(b,b')) vs mu(mu(a,b), mu(a',b'))
  Term a = g(1);
  Term a2 = Term::alpha(1, g(1)), b = Term::alpha(2, g(1)), b2 = g(1);
  Term lhs = reduce(Term::mu({Term::mu({a, a2}), Term::mu({b, b2})}));
  Term rhs = reduce(Term::mu({Term::mu({a, b}), Term::mu({a2, b2})}));
  CHECK(lhs != rhs);
}

TEST_CASE("collapse endomorphism x1 -> m(g1,g1)") {
  EndoProbeReport rep =
      collapse_endo_probe(Term::mu({g(1), g(1)}), s21, 4);
  CHECK(rep.surjective_hit);
  REQUIRE(rep.g1_preimage.has_value());
  CHECK(equal(*rep.g1_preimage, Term::alpha(1, g(1))));
  REQUIRE_FALSE(rep.collisions.empty());
  // L(g1) and R(g1) collide
  bool found = false;
  for (const auto& [u, v] : rep.collisions)
    if ((u == Term::alpha(1, g(1)) && v == Term::alpha(2, g(1))) ||
        (v == Term::alpha(1, g(1)) && u == Term::alpha(2, g(1))))
      found = true;
  CHECK(found);
  CHECK_FALSE(rep.not_surjective_certified);
}

TEST_CASE("identity endomorphism") {
  EndoProbeReport rep = collapse_endo_probe(g(1), s21, 3);
  CHECK(rep.surjective_hit);
  CHECK(rep.collisions.empty());
}

TEST_CASE("basis chain endomorphism is certified non-surjective") {
  EndoProbeReport rep = collapse_endo_probe(Term::alpha(1, g(1)), s21, 4);
  CHECK(rep.not_surjective_certified);
  CHECK_FALSE(rep.surjective_hit);
  CHECK(rep.certificate.find("start") != std::string::npos);
}

TEST_CASE("product probe: the (L(x1), R(x1)) pair is refuted") {
  ProductProbeReport rep = product_iso_probe(
      Term::alpha(1, g(1)), Term::alpha(2, g(1)), s21, 4, 4);
  CHECK(rep.verdict == ProbeVerdict::RefutedSurjective);
  REQUIRE(rep.missing.has_value());
  CHECK(rep.missing->first == g(1));
  CHECK(rep.missing->second == g(1));
}

TEST_CASE("product probe: diagonal pair") {
  ProductProbeReport rep = product_iso_probe(g(1), g(1), s21, 3, 3);
  CHECK(rep.verdict == ProbeVerdict::RefutedSurjective);
  REQUIRE(rep.missing.has_value());
  CHECK(rep.missing->second == Term::alpha(1, g(1)));
}

TEST_CASE("product probe: collapsing candidates report honest verdicts") {
  const Term collapse = Term::mu({g(1), g(1)});
  ProductProbeReport rep =
      product_iso_probe(collapse, g(1), s21, 4, 4, 5000);
  // x -> (m(g1,g1)[x], x) is injective in the second coordinate and hits
  // (g1, g1) at x = g1... the second coordinate is the identity, so the
  // probe must not refute injectivity.
  CHECK(rep.verdict != ProbeVerdict::RefutedInjective);

  ProductProbeReport rep2 =
      product_iso_probe(collapse, collapse, s21, 3, 3, 5000);
  CHECK(rep2.verdict == ProbeVerdict::RefutedInjective);
  REQUIRE(rep2.collision.has_value());
}

TEST_CASE("verdict names") {
  CHECK(verdict_name(ProbeVerdict::RefutedInjective) == "refuted-injective");
  CHECK(verdict_name(ProbeVerdict::Inconclusive) == "inconclusive");
}

TEST_CASE("normal form enumeration") {
  auto nf1 = enumerate_normal_forms(s21, 0, 100);
  CHECK(nf1.size() == 1);
  auto nf2 = enumerate_normal_forms(s21, 2, 100000);
  for (const Term& t : nf2) {
    CHECK(is_normal(t));
    CHECK(t.depth() <= 2);
  }
  // distinct
  for (size_t i = 0; i < nf2.size(); ++i)
    for (size_t j = i + 1; j < nf2.size(); ++j) CHECK(nf2[i] != nf2[j]);
  auto nf3 = enumerate_normal_forms(s31, 2, 100000);
  for (const Term& t : nf3) CHECK(is_normal(t));
}
