#pragma once

#include <optional>
#include <vector>

#include "cantorv/tableau.hpp"

namespace cantorv {

// Address-generated clone: the subalgebra generated by the basis elements
// at a nonempty, prefix-free, incomplete code.
struct Clone {
  PrefixCode code;

  Clone() = default;
  explicit Clone(PrefixCode c);

  const Signature& sig() const { return code.sig; }
  bool operator==(const Clone& o) const { return code == o.code; }
  bool operator!=(const Clone& o) const { return !(*this == o); }
  std::string str() const { return code.str(); }
};

// Subalgebra containment: every address of b extends some address of a.
bool clone_contains(const Clone& a, const Clone& b);

// Intersection code, or nullopt when the clones are disjoint.
std::optional<Clone> clone_intersect(const Clone& a, const Clone& b);

// The n complementary sub-clones obtained by cloning along C = C + ... + C.
std::vector<Clone> clone_split(const Clone& a);
Clone clone_child(const Clone& a, int letter);

// Refine the family, in order, into pairwise disjoint clones, each
// contained in its input. Deterministic: on overlap the intersection is
// split, child 0 going to the earlier index, children 1..n-1 to the later.
std::vector<Clone> disjointify(const std::vector<Clone>& as);

// v fixes every generator of the clone.
bool fixes_pointwise(const Tableau& v, const Clone& a);

// Image of an address-generated clone under an automorphism.
Clone clone_image(const Tableau& v, const Clone& a);

struct SegalWitness {
  std::vector<Clone> refined;  // A'_j, pairwise disjoint, contained in A_j
  Tableau g;                   // agrees with v_j on A'_j
};
// The constructive content of the Segal condition for the subgroups V(X):
// refine until sources and images are pairwise disjoint and non-spanning,
// then assemble one automorphism agreeing with every v_j on its piece.
SegalWitness segal_witness(
    const std::vector<std::pair<Tableau, Clone>>& family);

// Strictly descending chain of clones; beyond the materialized terms the
// chain continues by appending a zero letter to every address.
struct CloneSeq {
  std::vector<Clone> chain;  // nonempty, strictly descending

  CloneSeq() = default;
  explicit CloneSeq(std::vector<Clone> terms);

  const Signature& sig() const { return chain.front().sig(); }
  // 1-based level, extended by the continuation rule.
  Clone at(int level) const;
  int materialized() const { return static_cast<int>(chain.size()); }

  bool operator==(const CloneSeq& o) const;
  std::string str() const;
};

struct SeqOpsResult {
  bool leq = false;
  bool disjoint1 = false;
  std::optional<CloneSeq> sum;            // defined iff disjoint and
                                          // non-complementary termwise
  std::optional<CloneSeq> intersectwise;  // nullopt means disjoint
};
SeqOpsResult seq_ops(const CloneSeq& x, const CloneSeq& y);

bool seq_leq(const CloneSeq& x, const CloneSeq& y);

// v fixes some level of the chain pointwise, checked up to the decidable
// depth bound (max tableau address length + chain length).
bool seq_membership(const Tableau& v, const CloneSeq& x);

// V_{2,k} =~ V(X_A) with k the size of the minimal complement: transport
// root i of the source onto the i-th complement address, identity on A.
struct SupportIso {
  Clone clone;
  PrefixCode complement;  // canonical (sorted) complement addresses
  Signature source;       // (n, |complement|)

  Tableau forward(const Tableau& u) const;
  // Partial inverse: defined on elements fixing the clone pointwise whose
  // codes refine the complement cones.
  Tableau backward(const Tableau& w) const;
};
SupportIso support_iso(const Clone& a);

// Q = P u P', with P' the pairwise-disjoint minorant singletons and all
// their nonempty sums; r sends an element to the largest element of P'
// below it.
struct PosetQ {
  std::vector<CloneSeq> elements;      // P first, then P'
  size_t p_size = 0;                   // elements[0..p_size) came from P
  std::vector<std::vector<bool>> leq;  // leq[i][j]: elements[i] <= elements[j]
  std::vector<int> retract;            // index into elements, image under r
  std::vector<int> minorant_of;        // for i < p_size: index of its minorant
};
PosetQ build_q(const std::vector<CloneSeq>& p);

}  // namespace cantorv
