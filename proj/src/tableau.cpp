#include "cantorv/tableau.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cantorv/rng.hpp"

namespace cantorv {

namespace {

Address parent(const Address& a) {
  Address p = a;
  p.word.pop_back();
  return p;
}

int last_letter(const Address& a) { return a.word.back() - '0'; }

}  // namespace

Tableau Tableau::make(Signature sig,
                      std::vector<std::pair<Address, Address>> pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Address> dom, ran;
  dom.reserve(pairs.size());
  ran.reserve(pairs.size());
  for (const auto& [d, r] : pairs) {
    dom.push_back(d);
    ran.push_back(r);
  }
  PrefixCode dcode(sig, dom), rcode(sig, ran);
  if (dcode.size() != pairs.size() || rcode.size() != pairs.size())
    throw std::invalid_argument("tableau: sides contain duplicate addresses");
  CodeReport dr = code_validate(dcode, CodeMode::Complete);
  if (!dr.ok) throw std::invalid_argument("tableau domain: " + dr.message);
  CodeReport rr = code_validate(rcode, CodeMode::Complete);
  if (!rr.ok) throw std::invalid_argument("tableau range: " + rr.message);

  // Cancel caret pairs: a full sibling family mapping in letter order to a
  // full sibling family contracts to its parents.
  const int n = sig.arity;
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<Address, Address> fwd(pairs.begin(), pairs.end());
    for (const auto& [d, r] : fwd) {
      if (d.word.empty() || r.word.empty()) continue;
      if (last_letter(d) != 0 || last_letter(r) != 0) continue;
      const Address dp = parent(d), rp = parent(r);
      bool family = true;
      for (int c = 0; c < n && family; ++c) {
        auto it = fwd.find(dp.child(c));
        family = it != fwd.end() && it->second == rp.child(c);
      }
      if (!family) continue;
      std::vector<std::pair<Address, Address>> next;
      next.reserve(pairs.size() - n + 1);
      for (const auto& pr : pairs)
        if (!dp.prefix_of(pr.first) || pr.first == dp)
          next.push_back(pr);
        else if (pr.first.word.size() != dp.word.size() + 1)
          next.push_back(pr);
      next.emplace_back(dp, rp);
      pairs = std::move(next);
      std::sort(pairs.begin(), pairs.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      changed = true;
      break;
    }
  }

  Tableau t;
  t.sig_ = sig;
  t.pairs_ = std::move(pairs);
  return t;
}

Tableau Tableau::identity(const Signature& sig) {
  std::vector<std::pair<Address, Address>> pairs;
  for (int i = 1; i <= sig.rank; ++i)
    pairs.emplace_back(Address(i, ""), Address(i, ""));
  Tableau t;
  t.sig_ = sig;
  t.pairs_ = std::move(pairs);
  return t;
}

PrefixCode Tableau::domain() const {
  std::vector<Address> a;
  for (const auto& p : pairs_) a.push_back(p.first);
  return PrefixCode(sig_, std::move(a));
}

PrefixCode Tableau::range() const {
  std::vector<Address> a;
  for (const auto& p : pairs_) a.push_back(p.second);
  return PrefixCode(sig_, std::move(a));
}

size_t Tableau::carets() const {
  return (pairs_.size() - sig_.rank) / (sig_.arity - 1);
}

bool Tableau::is_identity() const {
  for (const auto& [d, r] : pairs_)
    if (d != r || !d.word.empty()) return false;
  return true;
}

Address Tableau::map_address(const Address& a) const {
  for (const auto& [d, r] : pairs_) {
    if (d.prefix_of(a)) {
      Address out = r;
      out.word += a.word.substr(d.word.size());
      return out;
    }
  }
  throw std::invalid_argument("map_address: address shallower than domain");
}

Address Tableau::unmap_address(const Address& a) const {
  for (const auto& [d, r] : pairs_) {
    if (r.prefix_of(a)) {
      Address out = d;
      out.word += a.word.substr(r.word.size());
      return out;
    }
  }
  throw std::invalid_argument("unmap_address: address shallower than range");
}

std::string Tableau::str() const {
  std::string s = "n=" + std::to_string(sig_.arity) +
                  " r=" + std::to_string(sig_.rank) + " { ";
  for (size_t i = 0; i < pairs_.size(); ++i) {
    if (i) s += ", ";
    s += pairs_[i].first.str(sig_.rank) + "->" +
         pairs_[i].second.str(sig_.rank);
  }
  return s + " }";
}

Tableau compose(const Tableau& u, const Tableau& v) {
  require_same_signature(u.sig(), v.sig(), "compose");
  const PrefixCode mid = code_refine(v.range(), u.domain());
  std::vector<std::pair<Address, Address>> pairs;
  pairs.reserve(mid.size());
  for (const Address& c : mid.addrs)
    pairs.emplace_back(v.unmap_address(c), u.map_address(c));
  return Tableau::make(u.sig(), std::move(pairs));
}

Tableau inverse(const Tableau& u) {
  std::vector<std::pair<Address, Address>> pairs;
  pairs.reserve(u.pairs().size());
  for (const auto& [d, r] : u.pairs()) pairs.emplace_back(r, d);
  return Tableau::make(u.sig(), std::move(pairs));
}

Tableau commutator(const Tableau& a, const Tableau& b) {
  return compose(compose(a, b), compose(inverse(a), inverse(b)));
}

namespace {

// Image of the basis element at a: a direct address when a reaches the
// domain code, otherwise the mu-tree over the cone below a.
Term image_subtree(const Tableau& u, const Address& a, int guard) {
  if (guard > 512)
    throw std::logic_error("image_subtree: domain walk did not terminate");
  for (const auto& [d, r] : u.pairs()) {
    if (d.prefix_of(a)) {
      Address out = r;
      out.word += a.word.substr(d.word.size());
      return term_of_address(out);
    }
  }
  std::vector<Term> kids;
  kids.reserve(u.sig().arity);
  for (int c = 0; c < u.sig().arity; ++c)
    kids.push_back(image_subtree(u, a.child(c), guard + 1));
  return Term::mu(std::move(kids));
}

Term apply_normal(const Tableau& u, const Term& t) {
  if (t.kind == Term::Kind::Mu) {
    std::vector<Term> kids;
    kids.reserve(t.args.size());
    for (const Term& a : t.args) kids.push_back(apply_normal(u, a));
    return Term::mu(std::move(kids));
  }
  return image_subtree(u, *address_of_leaf(t), 0);
}

}  // namespace

Term apply(const Tableau& u, const Term& t) {
  check_wellformed(t, u.sig());
  return reduce(apply_normal(u, reduce(t)));
}

namespace {

Address shift_root(const Address& a, int by) {
  return Address(a.root + by, a.word);
}

}  // namespace

Tableau block_sum(const Tableau& u, const Tableau& v) {
  if (u.sig().arity != v.sig().arity)
    throw std::invalid_argument("block_sum: arity mismatch");
  const Signature sig(u.sig().arity, u.sig().rank + v.sig().rank);
  std::vector<std::pair<Address, Address>> pairs;
  for (const auto& [d, r] : u.pairs()) pairs.emplace_back(d, r);
  for (const auto& [d, r] : v.pairs())
    pairs.emplace_back(shift_root(d, u.sig().rank),
                       shift_root(r, u.sig().rank));
  return Tableau::make(sig, std::move(pairs));
}

Tableau root_permutation(const Signature& sig, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != sig.rank)
    throw std::invalid_argument("root_permutation: wrong length");
  std::vector<std::pair<Address, Address>> pairs;
  for (int i = 1; i <= sig.rank; ++i)
    pairs.emplace_back(Address(i, ""), Address(perm[i - 1], ""));
  return Tableau::make(sig, std::move(pairs));
}

Tableau swap_blocks(int n, int r) {
  const Signature sig(n, 2 * r);
  std::vector<int> perm(2 * r);
  for (int i = 0; i < r; ++i) {
    perm[i] = r + i + 1;
    perm[r + i] = i + 1;
  }
  return root_permutation(sig, perm);
}

RetractReport retract_check(const Tableau& u) {
  RetractReport rep;
  const Tableau s = block_sum(u, Tableau::identity(Signature(u.sig().arity, 1)));
  rep.hypothesis = s.is_identity();
  // The retraction restricts to the first r roots; the added root carries
  // the identity, so restriction recovers u.
  std::vector<std::pair<Address, Address>> restricted;
  for (const auto& [d, r] : s.pairs())
    if (d.root <= u.sig().rank) restricted.emplace_back(d, r);
  rep.retract_recovers = Tableau::make(u.sig(), restricted) == u;
  rep.ok = !rep.hypothesis || u.is_identity();
  return rep;
}

std::pair<Tableau, Tableau> whitehead_witness(const Tableau& w) {
  const int r = w.sig().rank;
  Tableau a = block_sum(w, Tableau::identity(w.sig()));
  Tableau b = swap_blocks(w.sig().arity, r);
  return {std::move(a), std::move(b)};
}

PerfectnessReport perfectness_identity(const Tableau& u, const Tableau& v) {
  require_same_signature(u.sig(), v.sig(), "perfectness_identity");
  const Signature sig = u.sig();
  const int n = sig.arity, r = sig.rank;
  const Tableau id_r = Tableau::identity(sig);
  const Tableau id_2r = Tableau::identity(Signature(n, 2 * r));

  const Tableau lhs = block_sum(commutator(u, v), id_2r);
  const Tableau a = block_sum(block_sum(u, inverse(u)), id_r);
  const Tableau b = block_sum(block_sum(v, id_r), inverse(v));
  PerfectnessReport rep;
  rep.equal = commutator(a, b) == lhs;

  // Re-verify with each bracket argument expanded through the Whitehead
  // witness: u+u^-1 = [u+id, tau], and v+id+v^-1 is the block-(2 3)
  // conjugate of v+v^-1+id.
  auto expand = [&](const Tableau& w) {
    auto [x, y] = whitehead_witness(w);
    return commutator(x, y);
  };
  const Tableau a2 = block_sum(expand(u), id_r);
  std::vector<int> p23(3 * r);
  for (int i = 0; i < r; ++i) {
    p23[i] = i + 1;
    p23[r + i] = 2 * r + i + 1;
    p23[2 * r + i] = r + i + 1;
  }
  const Tableau pi = root_permutation(Signature(n, 3 * r), p23);
  const Tableau b2 =
      compose(compose(pi, block_sum(expand(v), id_r)), inverse(pi));
  rep.expanded_equal = a2 == a && b2 == b && commutator(a2, b2) == lhs;
  return rep;
}

Tableau tabulate(const Signature& sig,
                 const std::function<Term(const Term&)>& act) {
  std::vector<std::pair<Address, Address>> pairs;
  std::vector<Address> work;
  for (int i = 1; i <= sig.rank; ++i) work.emplace_back(i, "");
  while (!work.empty()) {
    Address a = work.back();
    work.pop_back();
    if (a.word.size() > 512)
      throw std::logic_error("tabulate: map is not tableau-induced");
    const Term img = reduce(act(term_of_address(a)));
    if (auto leaf = address_of_leaf(img)) {
      pairs.emplace_back(a, *leaf);
    } else {
      for (int c = sig.arity - 1; c >= 0; --c) work.push_back(a.child(c));
    }
  }
  return Tableau::make(sig, std::move(pairs));
}

Tableau rank_transport(const Tableau& u, const Homomorphism& fwd,
                       const Homomorphism& back) {
  if (!verify_iso_pair(fwd, back))
    throw std::invalid_argument(
        "rank_transport: pair is not a verified isomorphism");
  if (fwd.source != u.sig())
    throw std::invalid_argument("rank_transport: iso does not start at u");
  return tabulate(fwd.target, [&](const Term& t) {
    return apply_hom(fwd, apply(u, apply_hom(back, t)));
  });
}

Tableau random_tableau(const Signature& sig, int complexity, Rng& rng) {
  const PrefixCode dom = random_complete_code(sig, complexity, rng);
  const PrefixCode ran = random_complete_code(sig, complexity, rng);
  std::vector<Address> images = ran.addrs;
  for (size_t i = images.size(); i > 1; --i)
    std::swap(images[i - 1], images[rng.below(i)]);
  std::vector<std::pair<Address, Address>> pairs;
  for (size_t i = 0; i < dom.addrs.size(); ++i)
    pairs.emplace_back(dom.addrs[i], images[i]);
  return Tableau::make(sig, std::move(pairs));
}

namespace {

std::vector<PrefixCode> codes_with_carets(const Signature& sig, int carets) {
  std::vector<PrefixCode> cur = {trivial_code(sig)};
  for (int c = 0; c < carets; ++c) {
    std::set<std::vector<Address>> seen;
    std::vector<PrefixCode> next;
    for (const PrefixCode& p : cur)
      for (const Address& a : p.addrs) {
        PrefixCode q = expand_at(p, a);
        if (seen.insert(q.addrs).second) next.push_back(q);
      }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

std::vector<Tableau> enumerate_tableaux(const Signature& sig, int max_carets) {
  std::vector<Tableau> out;
  for (int c = 0; c <= max_carets; ++c) {
    const std::vector<PrefixCode> shapes = codes_with_carets(sig, c);
    for (const PrefixCode& dom : shapes)
      for (const PrefixCode& ran : shapes) {
        std::vector<size_t> perm(ran.addrs.size());
        for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        do {
          std::vector<std::pair<Address, Address>> pairs;
          pairs.reserve(perm.size());
          for (size_t i = 0; i < perm.size(); ++i)
            pairs.emplace_back(dom.addrs[i], ran.addrs[perm[i]]);
          out.push_back(Tableau::make(sig, std::move(pairs)));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
  }
  return out;
}

}  // namespace cantorv
