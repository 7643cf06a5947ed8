#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cantorv/signature.hpp"
#include "cantorv/term.hpp"

namespace cantorv {

// Leaf address in the r-rooted n-ary forest: root index plus a word over
// {0,...,n-1} read left to right as the descent from the root. The first
// letter is the innermost descent component: the node at i:w0 is
// Alpha(w0+1, gen(i)), and appending a letter applies one more Alpha on
// the outside.
struct Address {
  int root = 1;
  std::string word;  // digits '0'..char('0'+n-1)

  Address() = default;
  Address(int r, std::string w) : root(r), word(std::move(w)) {}

  bool operator==(const Address& o) const {
    return root == o.root && word == o.word;
  }
  bool operator!=(const Address& o) const { return !(*this == o); }
  bool operator<(const Address& o) const {
    return root != o.root ? root < o.root : word < o.word;
  }

  // True if *this is a prefix of (or equal to) o.
  bool prefix_of(const Address& o) const {
    return root == o.root && o.word.size() >= word.size() &&
           o.word.compare(0, word.size(), word) == 0;
  }
  bool comparable(const Address& o) const {
    return prefix_of(o) || o.prefix_of(*this);
  }

  Address child(int letter) const {
    Address a = *this;
    a.word.push_back(static_cast<char>('0' + letter));
    return a;
  }

  std::string str(int rank) const;
};

// Basis element named by an address.
Term term_of_address(const Address& a);
// Inverse: the address of a pure descent chain over a generator; nullopt
// for terms containing Mu.
std::optional<Address> address_of_leaf(const Term& t);

// Finite prefix-free address set over a signature. Complete codes model
// bases/expansions; proper incomplete ones model clones.
struct PrefixCode {
  Signature sig;
  std::vector<Address> addrs;  // sorted, canonical

  PrefixCode() = default;
  PrefixCode(Signature s, std::vector<Address> a);

  bool operator==(const PrefixCode& o) const {
    return sig == o.sig && addrs == o.addrs;
  }
  bool operator!=(const PrefixCode& o) const { return !(*this == o); }

  size_t size() const { return addrs.size(); }
  bool contains(const Address& a) const;
  // The element of the code that a extends, if any.
  std::optional<Address> covering(const Address& a) const;

  std::string str() const;
};

enum class CodeMode { Complete, Clone };

struct CodeReport {
  bool ok = false;
  std::string message;             // human-readable verdict
  std::optional<Address> witness;  // violating / uncovered address
};

CodeReport code_validate(const PrefixCode& p, CodeMode mode);

// Trivial complete code {1:e, ..., r:e}.
PrefixCode trivial_code(const Signature& sig);

bool is_prefix_free(const std::vector<Address>& sorted_addrs);
bool is_complete(const PrefixCode& p);

// Coarsest common refinement of two complete codes.
PrefixCode code_refine(const PrefixCode& p, const PrefixCode& q);

// Minimal complete completion of a clone code: the frontier of the
// sibling-closure walk, in letter order.
PrefixCode code_complement(const PrefixCode& a);

// Replace address at with its n children.
PrefixCode expand_at(const PrefixCode& p, const Address& at);

// Normal form as a leaf code: the addresses of the mu-tree leaves of
// reduce(t) together with their leaf terms' positions. Only meaningful
// for terms over rank >= 1.
std::vector<Address> leaf_addresses(const Term& normal_form);

class Rng;
// k uniformly random one-step expansions of the trivial code.
PrefixCode random_complete_code(const Signature& sig, int expansions, Rng& rng);

}  // namespace cantorv
