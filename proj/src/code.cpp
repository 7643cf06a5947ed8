#include "cantorv/code.hpp"

#include <algorithm>

#include "cantorv/rng.hpp"

namespace cantorv {

std::string Address::str(int rank) const {
  std::string w = word.empty() ? "e" : word;
  if (rank == 1) return w;
  return std::to_string(root) + ":" + w;
}

Term term_of_address(const Address& a) {
  Term t = Term::gen(a.root);
  for (char c : a.word) t = Term::alpha(c - '0' + 1, std::move(t));
  return t;
}

std::optional<Address> address_of_leaf(const Term& t) {
  std::string letters;  // outermost first while peeling
  const Term* cur = &t;
  while (cur->kind == Term::Kind::Alpha) {
    letters.push_back(static_cast<char>('0' + cur->index - 1));
    cur = &cur->args[0];
  }
  if (cur->kind != Term::Kind::Gen) return std::nullopt;
  std::reverse(letters.begin(), letters.end());  // innermost letter first
  return Address(cur->index, std::move(letters));
}

PrefixCode::PrefixCode(Signature s, std::vector<Address> a)
    : sig(s), addrs(std::move(a)) {
  for (const Address& ad : addrs) {
    if (ad.root < 1 || ad.root > sig.rank)
      throw std::invalid_argument("code: root " + std::to_string(ad.root) +
                                  " out of range for " + sig.str());
    for (char c : ad.word)
      if (c < '0' || c >= '0' + sig.arity)
        throw std::invalid_argument("code: letter out of range in address " +
                                    ad.str(sig.rank));
  }
  std::sort(addrs.begin(), addrs.end());
  addrs.erase(std::unique(addrs.begin(), addrs.end()), addrs.end());
  for (size_t i = 0; i + 1 < addrs.size(); ++i)
    if (addrs[i].prefix_of(addrs[i + 1]))
      throw std::invalid_argument("code: " + addrs[i].str(sig.rank) +
                                  " is a prefix of " +
                                  addrs[i + 1].str(sig.rank));
}

bool PrefixCode::contains(const Address& a) const {
  return std::binary_search(addrs.begin(), addrs.end(), a);
}

std::optional<Address> PrefixCode::covering(const Address& a) const {
  for (const Address& x : addrs)
    if (x.prefix_of(a)) return x;
  return std::nullopt;
}

std::string PrefixCode::str() const {
  std::string s = "{";
  for (size_t i = 0; i < addrs.size(); ++i) {
    if (i) s += ", ";
    s += addrs[i].str(sig.rank);
  }
  return s + "}";
}

bool is_prefix_free(const std::vector<Address>& sorted) {
  // In sorted order a violating prefix is immediately adjacent to its
  // first extension.
  for (size_t i = 0; i + 1 < sorted.size(); ++i)
    if (sorted[i].prefix_of(sorted[i + 1])) return false;
  return true;
}

namespace {

// Walks the subtree at `at` checking that code elements below cover every
// branch; returns false and sets witness to an uncovered address.
bool covered(const PrefixCode& p, const Address& at, Address& witness) {
  if (p.contains(at)) return true;
  // Does any element extend at? If not, the branch through at is missed.
  bool any_below = false;
  for (const Address& a : p.addrs)
    if (at.prefix_of(a)) {
      any_below = true;
      break;
    }
  if (!any_below) {
    witness = at;
    return false;
  }
  for (int c = 0; c < p.sig.arity; ++c)
    if (!covered(p, at.child(c), witness)) return false;
  return true;
}

}  // namespace

bool is_complete(const PrefixCode& p) {
  Address w;
  for (int i = 1; i <= p.sig.rank; ++i)
    if (!covered(p, Address(i, ""), w)) return false;
  return p.sig.rank > 0 || p.addrs.empty();
}

CodeReport code_validate(const PrefixCode& p, CodeMode mode) {
  CodeReport rep;
  for (size_t i = 0; i + 1 < p.addrs.size(); ++i) {
    if (p.addrs[i].prefix_of(p.addrs[i + 1])) {
      rep.message = "not prefix-free: " + p.addrs[i].str(p.sig.rank) +
                    " is a prefix of " + p.addrs[i + 1].str(p.sig.rank);
      rep.witness = p.addrs[i];
      return rep;
    }
  }
  if (mode == CodeMode::Complete) {
    Address w;
    for (int i = 1; i <= p.sig.rank; ++i) {
      if (!covered(p, Address(i, ""), w)) {
        rep.message = "incomplete: branch through " + w.str(p.sig.rank) +
                      " is uncovered";
        rep.witness = w;
        return rep;
      }
    }
    rep.ok = true;
    rep.message = "complete code, size " + std::to_string(p.addrs.size());
    return rep;
  }
  // Clone mode: nonempty, prefix-free, not complete.
  if (p.addrs.empty()) {
    rep.message = "clone code must be nonempty";
    return rep;
  }
  if (is_complete(p)) {
    rep.message = "clone code must be proper (code is complete)";
    return rep;
  }
  rep.ok = true;
  rep.message = "clone code, size " + std::to_string(p.addrs.size());
  return rep;
}

PrefixCode trivial_code(const Signature& sig) {
  std::vector<Address> a;
  for (int i = 1; i <= sig.rank; ++i) a.emplace_back(i, "");
  return PrefixCode(sig, std::move(a));
}

PrefixCode code_refine(const PrefixCode& p, const PrefixCode& q) {
  require_same_signature(p.sig, q.sig, "code_refine");
  std::vector<Address> out;
  for (const Address& a : p.addrs)
    for (const Address& b : q.addrs) {
      if (a.prefix_of(b))
        out.push_back(b);
      else if (b.prefix_of(a))
        out.push_back(a);
    }
  return PrefixCode(p.sig, std::move(out));
}

namespace {

void complement_walk(const PrefixCode& a, const Address& at,
                     std::vector<Address>& out) {
  if (a.contains(at)) return;
  bool any_below = false;
  for (const Address& x : a.addrs)
    if (at.prefix_of(x) && x != at) {
      any_below = true;
      break;
    }
  if (!any_below) {
    out.push_back(at);
    return;
  }
  for (int c = 0; c < a.sig.arity; ++c)
    complement_walk(a, at.child(c), out);
}

}  // namespace

PrefixCode code_complement(const PrefixCode& a) {
  CodeReport rep = code_validate(a, CodeMode::Clone);
  if (!rep.ok)
    throw std::invalid_argument("code_complement: " + rep.message);
  std::vector<Address> out;
  for (int i = 1; i <= a.sig.rank; ++i)
    complement_walk(a, Address(i, ""), out);
  return PrefixCode(a.sig, std::move(out));
}

PrefixCode expand_at(const PrefixCode& p, const Address& at) {
  std::vector<Address> out;
  bool found = false;
  for (const Address& a : p.addrs) {
    if (a == at) {
      found = true;
      for (int c = 0; c < p.sig.arity; ++c) out.push_back(at.child(c));
    } else {
      out.push_back(a);
    }
  }
  if (!found)
    throw std::invalid_argument("expand_at: address not in code");
  return PrefixCode(p.sig, std::move(out));
}

namespace {

void collect_leaves(const Term& t, std::vector<Address>& out) {
  if (t.kind == Term::Kind::Mu) {
    for (const Term& a : t.args) collect_leaves(a, out);
    return;
  }
  auto addr = address_of_leaf(t);
  if (!addr)
    throw std::invalid_argument("leaf_addresses: term is not in normal form");
  out.push_back(*addr);
}

}  // namespace

std::vector<Address> leaf_addresses(const Term& normal_form) {
  std::vector<Address> out;
  collect_leaves(normal_form, out);
  return out;
}

PrefixCode random_complete_code(const Signature& sig, int expansions,
                                Rng& rng) {
  PrefixCode p = trivial_code(sig);
  for (int i = 0; i < expansions; ++i) {
    const Address at = p.addrs[rng.below(p.addrs.size())];
    p = expand_at(p, at);
  }
  return p;
}

}  // namespace cantorv
