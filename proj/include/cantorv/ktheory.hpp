#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cantorv/hom.hpp"
#include "cantorv/term.hpp"

namespace cantorv {

// Verified pair C_{n,r+n-1} <-> C_{n,r}: the last n source generators map
// to the descent children of g_r; the backward map merges them again.
struct ExpansionIso {
  Homomorphism forward;   // source rank r+n-1, target rank r
  Homomorphism backward;  // source rank r, target rank r+n-1
  bool verified = false;  // both composites reduce to the identity
};
ExpansionIso expansion_iso(int n, int r);

// Grothendieck ring of Cantor_n: Z/(n-1), with the generating relation
// certified by expansion isomorphisms and separated by the leaf-count
// invariant of tableau arithmetic.
struct K0Ring {
  int n = 2;
  int modulus = 1;  // n-1; 1 means the trivial ring
  ExpansionIso relation;  // certifies r ~ r + (n-1) at r = 1
  std::string separation;

  int add(int a, int b) const;
  int mul(int a, int b) const;
  int cls(long long r) const;  // class of [C_{n,r}]
  bool trivial() const { return modulus == 1; }
  std::string str() const;
};
K0Ring k0(int n);

// Element of the componentwise product algebra C_{n,1} x C_{n,1}.
struct ProductElement {
  Term first;
  Term second;
};
ProductElement product_reduce(const ProductElement& p);
ProductElement product_mu(const std::vector<ProductElement>& args, int n);
ProductElement product_alpha(int k, const ProductElement& p);

enum class ProbeVerdict {
  RefutedInjective,
  RefutedSurjective,
  Inconclusive,
  VerifiedToDepth,
};
std::string verdict_name(ProbeVerdict v);

struct EndoProbeReport {
  bool surjective_hit = false;       // preimage of g1 found
  std::optional<Term> g1_preimage;
  bool not_surjective_certified = false;  // leaf-letter invariant applies
  std::string certificate;
  std::vector<std::pair<Term, Term>> collisions;  // kernel witnesses
  int search_depth = 0;
};

// Probes the endomorphism x1 -> s of C_{n,1}: bounded search for a
// preimage of g1 and for collisions; basis-chain images admit an exact
// non-surjectivity certificate.
EndoProbeReport collapse_endo_probe(const Term& s, const Signature& sig,
                                    int depth);

struct ProductProbeReport {
  ProbeVerdict verdict = ProbeVerdict::Inconclusive;
  std::string certificate;
  std::optional<ProductElement> missing;           // refuted-surjective witness
  std::optional<std::pair<Term, Term>> collision;  // refuted-injective witness
  int depth = 0;
  int search_depth = 0;
  size_t enumerated = 0;
};

// Probes h : C_1 -> C_1 x C_1, x1 -> (s, t), h(u) = (u[s], u[t]):
// injectivity over normal forms of depth <= depth (within the enumeration
// budget) and surjectivity of sampled pairs.
ProductProbeReport product_iso_probe(const Term& s, const Term& t,
                                     const Signature& sig, int depth,
                                     int search_depth,
                                     size_t budget = 200000);

// Enumerate all normal forms over C_{n,1} of depth <= depth, in size then
// print order, stopping at budget.
std::vector<Term> enumerate_normal_forms(const Signature& sig, int depth,
                                         size_t budget);

}  // namespace cantorv
