#include "cantorv/clone.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cantorv {

Clone::Clone(PrefixCode c) : code(std::move(c)) {
  CodeReport rep = code_validate(code, CodeMode::Clone);
  if (!rep.ok) throw std::invalid_argument("clone: " + rep.message);
}

bool clone_contains(const Clone& a, const Clone& b) {
  require_same_signature(a.sig(), b.sig(), "clone_contains");
  for (const Address& x : b.code.addrs)
    if (!a.code.covering(x)) return false;
  return true;
}

std::optional<Clone> clone_intersect(const Clone& a, const Clone& b) {
  require_same_signature(a.sig(), b.sig(), "clone_intersect");
  std::vector<Address> out;
  for (const Address& x : a.code.addrs)
    for (const Address& y : b.code.addrs) {
      if (x.prefix_of(y))
        out.push_back(y);
      else if (y.prefix_of(x))
        out.push_back(x);
    }
  if (out.empty()) return std::nullopt;
  return Clone(PrefixCode(a.sig(), std::move(out)));
}

Clone clone_child(const Clone& a, int letter) {
  std::vector<Address> out;
  for (const Address& x : a.code.addrs) out.push_back(x.child(letter));
  return Clone(PrefixCode(a.sig(), std::move(out)));
}

std::vector<Clone> clone_split(const Clone& a) {
  std::vector<Clone> out;
  for (int c = 0; c < a.sig().arity; ++c) out.push_back(clone_child(a, c));
  return out;
}

namespace {

// Partition of cone(at) minus the cones of the avoided addresses (all of
// which extend at), in letter order.
void frontier_walk(const Signature& sig, const Address& at,
                   const std::vector<Address>& avoid,
                   std::vector<Address>& out) {
  bool at_avoided = false, any_below = false;
  for (const Address& x : avoid) {
    if (x == at) at_avoided = true;
    if (at.prefix_of(x) && x != at) any_below = true;
  }
  if (at_avoided) return;
  if (!any_below) {
    out.push_back(at);
    return;
  }
  for (int c = 0; c < sig.arity; ++c)
    frontier_walk(sig, at.child(c), avoid, out);
}

// Make `later` disjoint from `earlier`, splitting the overlap: child 0 of
// each intersection address stays with the earlier clone, the remaining
// children go to the later one.
void resolve_pair(Clone& earlier, Clone& later) {
  auto inter = clone_intersect(earlier, later);
  if (!inter) return;
  const Signature sig = earlier.sig();
  const std::vector<Address>& overlap = inter->code.addrs;

  auto carve = [&](const Clone& c, const std::vector<int>& keep_children) {
    std::vector<Address> out;
    for (const Address& a : c.code.addrs) {
      std::vector<Address> avoid;
      for (const Address& i : overlap)
        if (a.prefix_of(i)) avoid.push_back(i);
      if (avoid.empty()) {
        out.push_back(a);
      } else {
        frontier_walk(sig, a, avoid, out);
      }
    }
    for (const Address& i : overlap)
      for (int ch : keep_children) out.push_back(i.child(ch));
    return Clone(PrefixCode(sig, std::move(out)));
  };

  std::vector<int> head = {0}, tail;
  for (int c = 1; c < sig.arity; ++c) tail.push_back(c);
  Clone e2 = carve(earlier, head);
  Clone l2 = carve(later, tail);
  earlier = std::move(e2);
  later = std::move(l2);
}

}  // namespace

std::vector<Clone> disjointify(const std::vector<Clone>& as) {
  if (as.empty()) throw std::invalid_argument("disjointify: empty family");
  for (size_t i = 1; i < as.size(); ++i)
    require_same_signature(as[0].sig(), as[i].sig(), "disjointify");
  std::vector<Clone> out = as;
  for (size_t j = 1; j < out.size(); ++j)
    for (size_t i = 0; i < j; ++i) resolve_pair(out[i], out[j]);
  return out;
}

bool fixes_pointwise(const Tableau& v, const Clone& a) {
  require_same_signature(v.sig(), a.sig(), "fixes_pointwise");
  for (const Address& x : a.code.addrs) {
    const Term t = term_of_address(x);
    if (apply(v, t) != t) return false;
  }
  return true;
}

Clone clone_image(const Tableau& v, const Clone& a) {
  require_same_signature(v.sig(), a.sig(), "clone_image");
  std::vector<Address> out;
  for (const Address& x : a.code.addrs) {
    const Term img = apply(v, term_of_address(x));
    for (Address& l : leaf_addresses(img)) out.push_back(std::move(l));
  }
  return Clone(PrefixCode(a.sig(), std::move(out)));
}

namespace {

// Restriction of the automorphism to the cone over each clone address:
// domain/range address pairs deep enough to be mapped as prefixes.
std::vector<std::pair<Address, Address>> restrict_to_clone(
    const Tableau& v, const Clone& a) {
  std::vector<std::pair<Address, Address>> out;
  for (const Address& x : a.code.addrs) {
    // Walk the cone below x until the domain code resolves each address.
    std::vector<Address> work = {x};
    while (!work.empty()) {
      Address cur = work.back();
      work.pop_back();
      bool resolved = false;
      for (const auto& [d, r] : v.pairs())
        if (d.prefix_of(cur)) {
          Address img = r;
          img.word += cur.word.substr(d.word.size());
          out.emplace_back(cur, img);
          resolved = true;
          break;
        }
      if (!resolved)
        for (int c = v.sig().arity - 1; c >= 0; --c)
          work.push_back(cur.child(c));
    }
  }
  return out;
}

Address lex_last(const std::vector<Address>& v) {
  return *std::max_element(v.begin(), v.end());
}

}  // namespace

SegalWitness segal_witness(
    const std::vector<std::pair<Tableau, Clone>>& family) {
  if (family.empty())
    throw std::invalid_argument("segal_witness: empty family");
  const Signature sig = family[0].second.sig();
  for (const auto& [v, a] : family) {
    require_same_signature(v.sig(), sig, "segal_witness");
    require_same_signature(a.sig(), sig, "segal_witness");
  }

  // Singleton family: the element itself is the witness.
  if (family.size() == 1)
    return SegalWitness{{family[0].second}, family[0].first};

  // 1. Sources pairwise disjoint.
  std::vector<Clone> refined;
  for (const auto& [v, a] : family) refined.push_back(a);
  refined = disjointify(refined);

  // 2. Images pairwise disjoint: disjointify the images and pull the
  // refinement back through each automorphism.
  std::vector<Clone> images;
  for (size_t j = 0; j < family.size(); ++j)
    images.push_back(clone_image(family[j].first, refined[j]));
  images = disjointify(images);
  for (size_t j = 0; j < family.size(); ++j)
    refined[j] = clone_image(inverse(family[j].first), images[j]);

  // 3. Clone one more piece so that neither side spans C.
  auto union_code = [&](const std::vector<Clone>& cs) {
    std::vector<Address> all;
    for (const Clone& c : cs)
      all.insert(all.end(), c.code.addrs.begin(), c.code.addrs.end());
    return PrefixCode(sig, std::move(all));
  };
  while (is_complete(union_code(refined)) ||
         is_complete(union_code(images))) {
    refined.back() = clone_child(refined.back(), 0);
    images.back() = clone_image(family.back().first, refined.back());
  }

  // 4. Assemble g: agree with v_j on its piece, match the leftovers
  // lexicographically, expanding the smaller side at its last address
  // until the sizes agree.
  std::vector<std::pair<Address, Address>> pairs;
  for (size_t j = 0; j < family.size(); ++j)
    for (auto& pr : restrict_to_clone(family[j].first, refined[j]))
      pairs.push_back(std::move(pr));

  std::vector<Address> dom_used, ran_used;
  for (const auto& [d, r] : pairs) {
    dom_used.push_back(d);
    ran_used.push_back(r);
  }
  std::vector<Address> dom_left =
      code_complement(PrefixCode(sig, dom_used)).addrs;
  std::vector<Address> ran_left =
      code_complement(PrefixCode(sig, ran_used)).addrs;
  while (dom_left.size() != ran_left.size()) {
    std::vector<Address>& small =
        dom_left.size() < ran_left.size() ? dom_left : ran_left;
    const Address at = lex_last(small);
    small.erase(std::find(small.begin(), small.end(), at));
    for (int c = 0; c < sig.arity; ++c) small.push_back(at.child(c));
    std::sort(small.begin(), small.end());
  }
  std::sort(dom_left.begin(), dom_left.end());
  std::sort(ran_left.begin(), ran_left.end());
  for (size_t i = 0; i < dom_left.size(); ++i)
    pairs.emplace_back(dom_left[i], ran_left[i]);

  return SegalWitness{std::move(refined),
                      Tableau::make(sig, std::move(pairs))};
}

CloneSeq::CloneSeq(std::vector<Clone> terms) : chain(std::move(terms)) {
  if (chain.empty()) throw std::invalid_argument("cloneseq: empty chain");
  for (size_t i = 1; i < chain.size(); ++i) {
    if (!clone_contains(chain[i - 1], chain[i]) || chain[i] == chain[i - 1])
      throw std::invalid_argument(
          "cloneseq: chain must be strictly descending at position " +
          std::to_string(i + 1));
  }
}

Clone CloneSeq::at(int level) const {
  if (level < 1) throw std::invalid_argument("cloneseq: level must be >= 1");
  if (level <= materialized()) return chain[level - 1];
  // Continuation: append zeros to the last materialized term.
  Clone c = chain.back();
  for (int k = materialized(); k < level; ++k) c = clone_child(c, 0);
  return c;
}

bool CloneSeq::operator==(const CloneSeq& o) const {
  return chain == o.chain;
}

std::string CloneSeq::str() const {
  std::string s = "[";
  for (size_t i = 0; i < chain.size(); ++i) {
    if (i) s += " > ";
    s += chain[i].str();
  }
  return s + "]";
}

namespace {

int max_word_length(const PrefixCode& p) {
  size_t m = 0;
  for (const Address& a : p.addrs) m = std::max(m, a.word.size());
  return static_cast<int>(m);
}

int seq_compare_bound(const CloneSeq& x, const CloneSeq& y) {
  int words = 0;
  for (const Clone& c : x.chain) words = std::max(words, max_word_length(c.code));
  for (const Clone& c : y.chain) words = std::max(words, max_word_length(c.code));
  // Beyond this level both chains are in the append-zero regime and the
  // comparisons are eventually constant.
  return std::max(x.materialized(), y.materialized()) + words + 1;
}

}  // namespace

bool seq_leq(const CloneSeq& x, const CloneSeq& y) {
  require_same_signature(x.sig(), y.sig(), "seq_leq");
  const int bound = seq_compare_bound(x, y);
  for (int r = 1; r <= bound; ++r)
    if (!clone_contains(y.at(r), x.at(r))) return false;
  return true;
}

SeqOpsResult seq_ops(const CloneSeq& x, const CloneSeq& y) {
  require_same_signature(x.sig(), y.sig(), "seq_ops");
  SeqOpsResult res;
  res.leq = seq_leq(x, y);
  res.disjoint1 = !clone_intersect(x.at(1), y.at(1)).has_value();

  const int len = std::max(x.materialized(), y.materialized());
  // Sum: defined iff termwise disjoint and never complementary.
  bool sum_ok = true;
  std::vector<Clone> sum_terms;
  for (int r = 1; r <= len && sum_ok; ++r) {
    const Clone xr = x.at(r), yr = y.at(r);
    if (clone_intersect(xr, yr)) {
      sum_ok = false;
      break;
    }
    std::vector<Address> all = xr.code.addrs;
    all.insert(all.end(), yr.code.addrs.begin(), yr.code.addrs.end());
    PrefixCode u(x.sig(), std::move(all));
    if (is_complete(u)) {
      sum_ok = false;
      break;
    }
    sum_terms.emplace_back(std::move(u));
  }
  if (sum_ok) res.sum = CloneSeq(std::move(sum_terms));

  // Termwise intersections; empty anywhere means the sequences are
  // disjoint. Consecutive duplicates are dropped to keep the chain strict.
  std::vector<Clone> inter_terms;
  bool disjoint = false;
  for (int r = 1; r <= len; ++r) {
    auto i = clone_intersect(x.at(r), y.at(r));
    if (!i) {
      disjoint = true;
      break;
    }
    if (inter_terms.empty() || *i != inter_terms.back())
      inter_terms.push_back(std::move(*i));
  }
  if (!disjoint) res.intersectwise = CloneSeq(std::move(inter_terms));
  return res;
}

bool seq_membership(const Tableau& v, const CloneSeq& x) {
  require_same_signature(v.sig(), x.sig(), "seq_membership");
  int depth = 0;
  for (const auto& [d, r] : v.pairs()) {
    depth = std::max(depth, static_cast<int>(d.word.size()));
    depth = std::max(depth, static_cast<int>(r.word.size()));
  }
  const int bound = depth + x.materialized();
  for (int r = 1; r <= bound; ++r)
    if (fixes_pointwise(v, x.at(r))) return true;
  return false;
}

Tableau SupportIso::forward(const Tableau& u) const {
  require_same_signature(u.sig(), source, "support_iso forward");
  std::vector<std::pair<Address, Address>> pairs;
  for (const auto& [d, r] : u.pairs()) {
    Address nd = complement.addrs[d.root - 1];
    nd.word += d.word;
    Address nr = complement.addrs[r.root - 1];
    nr.word += r.word;
    pairs.emplace_back(std::move(nd), std::move(nr));
  }
  for (const Address& a : clone.code.addrs) pairs.emplace_back(a, a);
  return Tableau::make(clone.sig(), std::move(pairs));
}

Tableau SupportIso::backward(const Tableau& w) const {
  require_same_signature(w.sig(), clone.sig(), "support_iso backward");
  if (!fixes_pointwise(w, clone))
    throw std::invalid_argument(
        "support_iso backward: element does not fix the clone pointwise");
  auto find_cone = [&](const Address& a) -> std::optional<std::pair<int, std::string>> {
    for (size_t i = 0; i < complement.addrs.size(); ++i)
      if (complement.addrs[i].prefix_of(a))
        return std::make_pair(static_cast<int>(i) + 1,
                              a.word.substr(complement.addrs[i].word.size()));
    return std::nullopt;
  };
  std::vector<std::pair<Address, Address>> pairs;
  for (const auto& [d, r] : w.pairs()) {
    auto cd = find_cone(d), cr = find_cone(r);
    if (cd && cr) {
      pairs.emplace_back(Address(cd->first, cd->second),
                         Address(cr->first, cr->second));
      continue;
    }
    if (cd || cr)
      throw std::invalid_argument(
          "support_iso backward: codes do not refine the complement cones");
    // Reduction can merge cone rows with clone-identity rows; the merged
    // pair is then an identity over every cone below it.
    if (d != r)
      throw std::invalid_argument(
          "support_iso backward: nonidentity pair outside the cones");
    for (size_t i = 0; i < complement.addrs.size(); ++i)
      if (d.prefix_of(complement.addrs[i]))
        pairs.emplace_back(Address(static_cast<int>(i) + 1, ""),
                           Address(static_cast<int>(i) + 1, ""));
  }
  return Tableau::make(source, std::move(pairs));
}

SupportIso support_iso(const Clone& a) {
  SupportIso iso;
  iso.clone = a;
  iso.complement = code_complement(a.code);
  iso.source = Signature(a.sig().arity,
                         static_cast<int>(iso.complement.size()));
  return iso;
}

namespace {

CloneSeq singleton_seq(const Signature& sig, const Address& a) {
  return CloneSeq({Clone(PrefixCode(sig, {a}))});
}

bool seq_equiv(const CloneSeq& x, const CloneSeq& y) {
  return seq_leq(x, y) && seq_leq(y, x);
}

// Pairwise-incomparable minorant addresses. Under the append-zero
// continuation rule a chain lying below a whole sequence must eventually
// follow a zero thread of it, so candidates are x . 0^j for x in the
// deepest materialized term, shallow j first.
std::vector<Address> choose_minorants(const std::vector<CloneSeq>& p) {
  const Signature sig = p[0].sig();
  int level = 1;
  for (const CloneSeq& s : p)
    level = std::max(level, s.materialized());
  std::vector<Address> chosen;
  for (const CloneSeq& s : p) {
    const Clone deep = s.at(level);
    bool found = false;
    for (int j = 1; j <= 64 && !found; ++j) {
      for (const Address& x : deep.code.addrs) {
        Address cand = x;
        cand.word.append(j, '0');
        bool clash = false;
        for (const Address& b : chosen)
          if (b.comparable(cand)) {
            clash = true;
            break;
          }
        // A minorant must be strictly below every sequence it meets;
        // skip candidates whose zero thread is itself an element of P.
        for (const CloneSeq& other : p)
          if (!clash && seq_equiv(singleton_seq(sig, cand), other))
            clash = true;
        if (!clash) {
          chosen.push_back(cand);
          found = true;
          break;
        }
      }
    }
    if (!found)
      throw std::logic_error("build_q: could not place disjoint minorants");
  }
  // Not complementary: the union must not span; drop into a child if the
  // chosen addresses happen to tile the forest.
  while (is_complete(PrefixCode(sig, chosen)))
    chosen.back() = chosen.back().child(0);
  return chosen;
}

}  // namespace

PosetQ build_q(const std::vector<CloneSeq>& p) {
  if (p.empty()) throw std::invalid_argument("build_q: empty input");
  const Signature sig = p[0].sig();
  for (const CloneSeq& s : p) require_same_signature(s.sig(), sig, "build_q");

  // P is a set: drop repeats, including chains that only differ by the
  // materialization cut of the same zero-continued sequence.
  std::vector<CloneSeq> uniq;
  for (const CloneSeq& s : p) {
    bool seen = false;
    for (const CloneSeq& t : uniq)
      if (seq_equiv(s, t)) {
        seen = true;
        break;
      }
    if (!seen) uniq.push_back(s);
  }

  const std::vector<Address> minorants = choose_minorants(uniq);
  const size_t m = uniq.size();

  PosetQ q;
  q.elements = uniq;
  q.p_size = m;

  // P': all nonempty sums of the singleton minorant sequences.
  std::vector<std::vector<int>> subset_of;  // which minorants make element
  std::map<std::vector<int>, int> sum_index;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<Address> addrs;
    std::vector<int> subset;
    for (size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) {
        addrs.push_back(minorants[i]);
        subset.push_back(static_cast<int>(i));
      }
    q.elements.push_back(CloneSeq({Clone(PrefixCode(sig, addrs))}));
    sum_index[subset] = static_cast<int>(q.elements.size()) - 1;
    subset_of.push_back(subset);
  }

  // Deduplicate elements of P that coincide with each other (the order
  // relation needs a strict poset).
  const size_t total = q.elements.size();
  q.leq.assign(total, std::vector<bool>(total, false));
  for (size_t i = 0; i < total; ++i)
    for (size_t j = 0; j < total; ++j)
      q.leq[i][j] = seq_leq(q.elements[i], q.elements[j]);
  for (size_t i = 0; i < total; ++i)
    for (size_t j = 0; j < total; ++j)
      if (i != j && q.leq[i][j] && q.leq[j][i])
        throw std::logic_error("build_q: elements " + std::to_string(i) +
                               " and " + std::to_string(j) + " coincide");

  // Retraction: largest element of P' below each element; P' is closed
  // under the sums present, so the union over the below-set is the unique
  // largest one.
  q.retract.assign(total, -1);
  q.minorant_of.assign(m, -1);
  for (size_t i = 0; i < m; ++i)
    q.minorant_of[i] = sum_index[{static_cast<int>(i)}];
  for (size_t y = 0; y < total; ++y) {
    std::vector<int> below;
    for (size_t i = 0; i < m; ++i) {
      const int bi = q.minorant_of[i];
      if (q.leq[bi][y]) below.push_back(static_cast<int>(i));
    }
    if (below.empty())
      throw std::logic_error(
          "build_q: no element of P' below element " + std::to_string(y));
    const int big = sum_index.at(below);
    if (!q.leq[big][y])
      throw std::logic_error("build_q: largest-element ambiguity at " +
                             std::to_string(y));
    q.retract[y] = big;
  }
  return q;
}

}  // namespace cantorv
