#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cantorv/code.hpp"
#include "cantorv/hom.hpp"

namespace cantorv {

class Rng;

// Element of V_{n,r}: a bijection between two complete prefix codes,
// stored reduced (no cancellable caret pair) and sorted by domain
// address. Reduced forms are canonical: equal group elements have
// identical pair lists.
class Tableau {
 public:
  Tableau() = default;

  // Validates both sides, checks bijectivity, reduces.
  static Tableau make(Signature sig,
                      std::vector<std::pair<Address, Address>> pairs);
  static Tableau identity(const Signature& sig);

  const Signature& sig() const { return sig_; }
  const std::vector<std::pair<Address, Address>>& pairs() const {
    return pairs_;
  }
  PrefixCode domain() const;
  PrefixCode range() const;
  size_t carets() const;  // internal nodes of the domain forest

  bool operator==(const Tableau& o) const {
    return sig_ == o.sig_ && pairs_ == o.pairs_;
  }
  bool operator!=(const Tableau& o) const { return !(*this == o); }
  bool is_identity() const;

  // Image of an address that extends some domain element.
  Address map_address(const Address& a) const;
  Address unmap_address(const Address& a) const;

  std::string str() const;

 private:
  Signature sig_;
  std::vector<std::pair<Address, Address>> pairs_;
};

// (u o v)(x) = u(v(x)).
Tableau compose(const Tableau& u, const Tableau& v);
Tableau inverse(const Tableau& u);
Tableau commutator(const Tableau& a, const Tableau& b);  // a b a^-1 b^-1

// Action on terms; an automorphism of C_{n,r}.
Term apply(const Tableau& u, const Term& t);

// u on roots 1..r, v shifted onto roots r+1..r+s. With v = id this is the
// stabilization homomorphism.
Tableau block_sum(const Tableau& u, const Tableau& v);

// Root permutation: root i -> perm[i-1] (1-based values).
Tableau root_permutation(const Signature& sig, const std::vector<int>& perm);

// Block transposition of T_r + T_r.
Tableau swap_blocks(int n, int r);

struct RetractReport {
  bool ok = false;           // the injectivity implication holds
  bool hypothesis = false;   // block_sum(u, id_1) was the identity
  bool retract_recovers = false;  // restriction to roots 1..r returns u
};
RetractReport retract_check(const Tableau& u);

// a = w + id_r, b = block swap; [a,b] = w + w^-1 exactly.
std::pair<Tableau, Tableau> whitehead_witness(const Tableau& w);

struct PerfectnessReport {
  bool equal = false;          // [u,v] + id_{2r} == [u+u^-1+id, v+id+v^-1]
  bool expanded_equal = false; // re-verified with bracket args expanded as
                               // commutators via whitehead_witness
};
PerfectnessReport perfectness_identity(const Tableau& u, const Tableau& v);

// Conjugation along a verified isomorphism pair C_{n,r} <-> C_{n,s};
// fwd: C_r -> C_s, back: C_s -> C_r.
Tableau rank_transport(const Tableau& u, const Homomorphism& fwd,
                       const Homomorphism& back);

// Turn a term-level automorphism into a tableau by splitting the trivial
// code until every basis image is again a basis element.
Tableau tabulate(const Signature& sig,
                 const std::function<Term(const Term&)>& act);

Tableau random_tableau(const Signature& sig, int complexity, Rng& rng);

// All tableaux (including every leaf bijection) with at most max_carets
// carets; reduced forms, possibly with duplicates.
std::vector<Tableau> enumerate_tableaux(const Signature& sig, int max_carets);

}  // namespace cantorv
