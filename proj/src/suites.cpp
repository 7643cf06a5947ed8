#include "cantorv/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <sstream>
#include <thread>

#include "cantorv/clone.hpp"
#include "cantorv/ktheory.hpp"
#include "cantorv/parse.hpp"
#include "cantorv/poset.hpp"
#include "cantorv/rng.hpp"
#include "cantorv/segal.hpp"

namespace cantorv {
namespace {

int thread_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("JF_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < hw) hw = cap;
  }
  return hw;
}

// Runs body(chunk) for every chunk; each chunk owns its generator, so the
// outcome does not depend on the thread count. Returns the failure
// message of the lowest failing chunk, empty on success.
std::string parallel_chunks(int chunks,
                            const std::function<std::string(int)>& body) {
  const int threads = std::min(thread_count(), chunks);
  std::vector<std::string> fails(chunks);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        fails[c] = body(c);
      } catch (const std::exception& e) {
        fails[c] = std::string("exception: ") + e.what();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  for (const std::string& f : fails)
    if (!f.empty()) return f;
  return "";
}

uint64_t chunk_seed(uint64_t seed, int criterion, int chunk) {
  return seed * 0x9e3779b97f4a7c15ull + criterion * 1000003ull + chunk;
}

CriterionResult done(int id, std::string name, const std::string& failure,
                     std::string detail) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.pass = failure.empty();
  r.detail = r.pass ? std::move(detail) : failure;
  return r;
}

const Signature s21(2, 1);
const Signature s32(3, 2);

Clone random_clone(const Signature& sig, Rng& rng) {
  PrefixCode p = random_complete_code(sig, rng.range(1, 4), rng);
  std::vector<Address> addrs;
  for (const Address& a : p.addrs)
    if (rng.chance(0.5)) addrs.push_back(a);
  if (addrs.empty()) addrs.push_back(p.addrs[rng.below(p.addrs.size())]);
  if (addrs.size() == p.addrs.size()) addrs.pop_back();
  if (addrs.empty()) addrs.push_back(p.addrs[0].child(0));
  return Clone(PrefixCode(sig, std::move(addrs)));
}

bool disjoint(const Clone& a, const Clone& b) {
  return !clone_intersect(a, b).has_value();
}

// ---- criterion 1: rewriting -------------------------------------------

CriterionResult c1_rewriting(bool full, uint64_t seed) {
  const std::vector<Signature> sigs = {Signature(2, 1), Signature(2, 2),
                                       Signature(3, 1), Signature(3, 2)};
  const int total = full ? 100000 : 4000;
  const int chunks = 40;
  const int per_chunk = total / chunks;
  std::string fail = parallel_chunks(chunks, [&](int c) -> std::string {
    Rng rng(chunk_seed(seed, 1, c));
    const Signature& sig = sigs[c % sigs.size()];
    for (int i = 0; i < per_chunk; ++i) {
      const Term t = random_term(sig, 12, rng);
      const Term inner = reduce(t);
      if (inner != reduce_outermost(t))
        return "strategy mismatch on " + print_term(t, sig);
      if (reduce(inner) != inner)
        return "normal form not stable: " + print_term(t, sig);
      // eta: mu(alpha_1 t, ..., alpha_n t) rewrites to t
      std::vector<Term> comps;
      for (int k = 1; k <= sig.arity; ++k) comps.push_back(Term::alpha(k, t));
      if (reduce(Term::mu(std::move(comps))) != inner)
        return "merge-of-components identity failed on " + print_term(t, sig);
      // beta: alpha_k(mu(ts)) rewrites to ts[k-1]
      std::vector<Term> ts;
      for (int k = 0; k < sig.arity; ++k)
        ts.push_back(random_term(sig, 4, rng));
      const int k = rng.range(1, sig.arity);
      const Term picked = ts[k - 1];
      if (reduce(Term::alpha(k, Term::mu(std::move(ts)))) != reduce(picked))
        return "component-of-merge identity failed near " +
               print_term(picked, sig);
    }
    return "";
  });
  return done(1, "rewriting",
              fail,
              std::to_string(total) + " random terms, depth <= 12, over 4 "
              "signatures: innermost == outermost, both axiom rewrites hold");
}

// ---- criterion 2: group arithmetic ------------------------------------

std::vector<Term> depth_chains(const Signature& sig, int depth) {
  std::vector<Term> out;
  for (int root = 1; root <= sig.rank; ++root) {
    std::vector<Address> frontier{Address(root, "")};
    for (int d = 0; d <= depth; ++d) {
      std::vector<Address> next;
      for (const Address& a : frontier) {
        out.push_back(term_of_address(a));
        if (d < depth)
          for (int c = 0; c < sig.arity; ++c) next.push_back(a.child(c));
      }
      frontier = std::move(next);
    }
  }
  return out;
}

CriterionResult c2_group(bool full, uint64_t seed) {
  const std::vector<Signature> sigs = {s21, s32};
  const int triples = full ? 10000 : 600;
  const int chunks = 32;
  std::string fail = parallel_chunks(chunks, [&](int c) -> std::string {
    Rng rng(chunk_seed(seed, 2, c));
    const Signature& sig = sigs[c % 2];
    for (int i = 0; i < triples / (chunks / 2); ++i) {
      const Tableau a = random_tableau(sig, rng.range(0, 6), rng);
      const Tableau b = random_tableau(sig, rng.range(0, 6), rng);
      const Tableau cc = random_tableau(sig, rng.range(0, 6), rng);
      if (compose(compose(a, b), cc) != compose(a, compose(b, cc)))
        return "associativity failed in V" + sig.str();
      if (!compose(a, inverse(a)).is_identity() ||
          !compose(inverse(a), a).is_identity())
        return "inverse law failed in V" + sig.str();
      if (compose(Tableau::identity(sig), a) != a ||
          compose(a, Tableau::identity(sig)) != a)
        return "identity law failed in V" + sig.str();
      if (inverse(compose(a, b)) != compose(inverse(b), inverse(a)))
        return "inverse antihomomorphism failed in V" + sig.str();
    }
    return "";
  });
  if (fail.empty()) {
    // Canonical-form equality vs the action on terms. Two reduced
    // tableaux of depth <= 5 differ iff they differ on some descent
    // chain of depth <= 6, so the chain set decides equality exactly.
    const int pairs = full ? 100 : 20;
    Rng rng(chunk_seed(seed, 2, 999));
    for (const Signature& sig : sigs) {
      const std::vector<Term> chains = depth_chains(sig, 6);
      const std::vector<Term> mus = enumerate_normal_forms(sig, 4, 200);
      for (int i = 0; i < pairs / 2 && fail.empty(); ++i) {
        const Tableau u = random_tableau(sig, rng.range(0, 5), rng);
        Tableau v = rng.chance(0.4)
                        ? compose(compose(u, random_tableau(sig, 2, rng)),
                                  Tableau::identity(sig))
                        : random_tableau(sig, rng.range(0, 5), rng);
        if (rng.chance(0.3)) v = compose(compose(u, v), inverse(v));
        bool differ = false;
        for (const Term& t : chains)
          if (apply(u, t) != apply(v, t)) {
            differ = true;
            break;
          }
        if ((u == v) == differ)
          fail = "canonical form disagrees with the action in V" + sig.str();
        if (u == v)
          for (const Term& t : mus)
            if (apply(u, t) != apply(v, t))
              fail = "equal tableaux act differently on " +
                     print_term(t, sig);
      }
    }
  }
  return done(2, "group arithmetic", fail,
              std::to_string(triples) +
              " random triples per signature (V(n=2,r=1), V(n=3,r=2)) "
              "satisfy the group axioms; canonical-form equality matches "
              "the action on all depth <= 6 chains for " +
              std::to_string(full ? 100 : 20) + " pairs");
}

// ---- criterion 3: stabilization retract --------------------------------

CriterionResult c3_retract(bool full, uint64_t seed) {
  std::string fail;
  size_t exhaustive = 0;
  for (const Tableau& u : enumerate_tableaux(s21, 3)) {
    ++exhaustive;
    const RetractReport rep = retract_check(u);
    if (!rep.ok || !rep.retract_recovers) {
      fail = "retract check failed on " + u.str();
      break;
    }
    if (rep.hypothesis && !u.is_identity()) {
      fail = "stabilized identity with nonidentity source: " + u.str();
      break;
    }
  }
  const int total = full ? 10000 : 800;
  const int chunks = 32;
  if (fail.empty())
    fail = parallel_chunks(chunks, [&](int c) -> std::string {
      Rng rng(chunk_seed(seed, 3, c));
      const Signature sig = (c % 2) ? s32 : s21;
      for (int i = 0; i < total / (chunks / 2); ++i) {
        const Tableau u = random_tableau(sig, rng.range(0, 6), rng);
        const RetractReport rep = retract_check(u);
        if (!rep.ok || !rep.retract_recovers)
          return "retract check failed on " + u.str();
      }
      return "";
    });
  return done(3, "stabilization retract", fail,
              "exhaustive over " + std::to_string(exhaustive) +
              " tableaux with <= 3 carets plus " + std::to_string(total) +
              " random elements per signature");
}

// ---- criterion 4: whitehead and perfectness ----------------------------

CriterionResult c4_perfect(bool full, uint64_t seed) {
  const int count = full ? 1000 : 100;
  const int chunks = 20;
  std::string fail = parallel_chunks(chunks, [&](int c) -> std::string {
    Rng rng(chunk_seed(seed, 4, c));
    const Signature sig = (c % 2) ? s32 : s21;
    for (int i = 0; i < count / (chunks / 2); ++i) {
      const Tableau w = random_tableau(sig, rng.range(0, 6), rng);
      const auto [a, b] = whitehead_witness(w);
      if (commutator(a, b) != block_sum(w, inverse(w)))
        return "commutator identity failed on " + w.str();
      const Tableau u = random_tableau(sig, rng.range(0, 5), rng);
      const Tableau v = random_tableau(sig, rng.range(0, 5), rng);
      const PerfectnessReport rep = perfectness_identity(u, v);
      if (!rep.equal || !rep.expanded_equal)
        return "perfectness identity failed on a random pair in V" +
               sig.str();
    }
    return "";
  });
  return done(4, "whitehead and perfectness witnesses", fail,
              std::to_string(count) + " seeded inputs each per signature, "
              "exact tableau equality");
}

// ---- criterion 5: rank rings and the leaf-count invariant --------------

CriterionResult c5_k0(bool full, uint64_t seed) {
  std::string fail;
  try {
    if (!k0(2).trivial()) fail = "k0(2) not trivial";
    if (fail.empty() && k0(3).modulus != 2) fail = "k0(3) is not Z/2";
    if (fail.empty() && k0(4).modulus != 3) fail = "k0(4) is not Z/3";
    for (int n = 2; n <= 6 && fail.empty(); ++n)
      for (int r = 1; r <= 4 && fail.empty(); ++r)
        if (!expansion_iso(n, r).verified)
          fail = "expansion pair failed at n=" + std::to_string(n) +
                 ", r=" + std::to_string(r);
  } catch (const std::exception& e) {
    fail = std::string("exception: ") + e.what();
  }
  if (fail.empty()) {
    const int rounds = full ? 400 : 60;
    const std::vector<Signature> sigs = {Signature(2, 1), Signature(3, 1),
                                         Signature(3, 2), Signature(4, 2),
                                         Signature(5, 3)};
    Rng rng(chunk_seed(seed, 5, 0));
    for (int i = 0; i < rounds && fail.empty(); ++i) {
      const Signature& sig = sigs[i % sigs.size()];
      const int m = sig.arity - 1;
      const Tableau u = random_tableau(sig, rng.range(0, 5), rng);
      const Tableau v = random_tableau(sig, rng.range(0, 5), rng);
      auto cls = [&](const Tableau& t) {
        return std::make_pair(t.domain().size() % m, t.range().size() % m);
      };
      const size_t want = sig.rank % m;
      for (const Tableau& t :
           {u, inverse(u), compose(u, v), commutator(u, v)})
        if (cls(t) != std::make_pair(want, want))
          fail = "leaf-count class broken over " + sig.str();
      if (block_sum(u, v).domain().size() % m != (2 * sig.rank) % m)
        fail = "leaf-count class broken by block sum over " + sig.str();
    }
  }
  return done(5, "rank rings and leaf-count invariant", fail,
              "k0(2) trivial, k0(3) = Z/2, k0(4) = Z/3; expansion pairs "
              "exact for n <= 6, r <= 4; leaf-count class preserved by "
              "compose, inverse, commutator and block sum");
}

// ---- criterion 6: product and collapse probes --------------------------

CriterionResult c6_probes(bool, uint64_t) {
  std::string fail;
  const Term g1 = Term::gen(1);
  const ProductProbeReport pp =
      product_iso_probe(Term::alpha(1, g1), Term::alpha(2, g1), s21, 4, 4,
                        2000);
  if (pp.verdict != ProbeVerdict::RefutedSurjective)
    fail = "component pair probe: expected refuted-surjective, got " +
           verdict_name(pp.verdict);
  if (fail.empty() &&
      !(pp.missing && pp.missing->first == g1 && pp.missing->second == g1))
    fail = "component pair probe: missing pair is not (g1, g1)";
  if (fail.empty() && pp.certificate.find("clone embeddings") ==
                          std::string::npos)
    fail = "component pair probe: invariant certificate absent";
  if (fail.empty()) {
    const EndoProbeReport ep =
        collapse_endo_probe(Term::mu({g1, g1}), s21, 5);
    if (!ep.surjective_hit || !ep.g1_preimage)
      fail = "collapse probe: no preimage of g1 found";
    else if (ep.not_surjective_certified)
      fail = "collapse probe: wrongly certified non-surjective";
    else {
      bool lr = false;
      for (const auto& [x, y] : ep.collisions)
        if ((equal(x, Term::alpha(1, g1)) && equal(y, Term::alpha(2, g1))) ||
            (equal(x, Term::alpha(2, g1)) && equal(y, Term::alpha(1, g1))))
          lr = true;
      if (!lr) fail = "collapse probe: component collision witness missing";
    }
  }
  return done(6, "product and collapse probe regressions", fail,
              "component pair (a1 x, a2 x) refuted-surjective with missing "
              "pair (g1, g1); merge endomorphism surjective with the "
              "component collision witness");
}

// ---- criterion 7: clone machinery --------------------------------------

CriterionResult c7_clones(bool full, uint64_t seed) {
  const int count = full ? 1000 : 120;
  const int chunks = 20;
  std::string fail = parallel_chunks(chunks, [&](int c) -> std::string {
    Rng rng(chunk_seed(seed, 7, c));
    const Signature sig = (c % 2) ? s32 : s21;
    for (int i = 0; i < count / (chunks / 2); ++i) {
      std::vector<Clone> in;
      const int m = rng.range(2, 5);
      for (int j = 0; j < m; ++j) in.push_back(random_clone(sig, rng));
      const std::vector<Clone> out = disjointify(in);
      if (out.size() != in.size()) return "disjointify changed family size";
      for (size_t j = 0; j < out.size(); ++j) {
        if (!clone_contains(in[j], out[j]))
          return "disjointify output escapes its input";
        for (size_t l = j + 1; l < out.size(); ++l)
          if (!disjoint(out[j], out[l]))
            return "disjointify output not pairwise disjoint";
      }
      if (disjointify(out) != out) return "disjointify not idempotent";
    }
    return "";
  });
  if (fail.empty())
    fail = parallel_chunks(chunks, [&](int c) -> std::string {
      Rng rng(chunk_seed(seed, 7, 100 + c));
      for (int i = 0; i < count / chunks; ++i) {
        std::vector<std::pair<Tableau, Clone>> fam;
        const int m = rng.range(1, 4);
        for (int j = 0; j < m; ++j)
          fam.push_back({random_tableau(s21, 3, rng), random_clone(s21, rng)});
        const SegalWitness w = segal_witness(fam);
        if (w.refined.size() != fam.size())
          return "segal witness family size mismatch";
        std::vector<Address> sources, images;
        for (size_t j = 0; j < fam.size(); ++j) {
          if (!clone_contains(fam[j].second, w.refined[j]))
            return "refined piece escapes its clone";
          if (!fixes_pointwise(compose(inverse(w.g), fam[j].first),
                               w.refined[j]))
            return "assembled element disagrees on a refined piece";
          for (size_t l = j + 1; l < fam.size(); ++l)
            if (!disjoint(w.refined[j], w.refined[l]))
              return "refined pieces overlap";
          const auto& src = w.refined[j].code.addrs;
          sources.insert(sources.end(), src.begin(), src.end());
          const auto& img = clone_image(fam[j].first, w.refined[j]).code.addrs;
          images.insert(images.end(), img.begin(), img.end());
        }
        if (fam.size() > 1 && (is_complete(PrefixCode(s21, sources)) ||
                               is_complete(PrefixCode(s21, images))))
          return "refined family spans a complete code";
      }
      return "";
    });
  if (fail.empty()) {
    Rng rng(chunk_seed(seed, 7, 500));
    const int samples = full ? 100 : 25;
    for (int i = 0; i < samples && fail.empty(); ++i) {
      const Clone a = random_clone(s21, rng);
      const SupportIso iso = support_iso(a);
      const Tableau u = random_tableau(iso.source, rng.range(0, 4), rng);
      const Tableau v = random_tableau(iso.source, rng.range(0, 4), rng);
      if (iso.forward(compose(u, v)) != compose(iso.forward(u), iso.forward(v)))
        fail = "support transport is not a homomorphism at " + a.str();
      else if (!fixes_pointwise(iso.forward(u), a))
        fail = "support transport moves the clone " + a.str();
      else if (iso.backward(iso.forward(u)) != u)
        fail = "support transport inverse fails at " + a.str();
    }
    if (fail.empty()) {
      // compatibility square along {0} > {00}: stabilize, then transport
      const SupportIso i1 = support_iso(Clone(parse_code("{0}", s21)));
      const SupportIso i2 = support_iso(Clone(parse_code("{00}", s21)));
      for (int i = 0; i < (full ? 100 : 25) && fail.empty(); ++i) {
        const Tableau u = random_tableau(s21, 4, rng);
        if (i2.forward(block_sum(Tableau::identity(s21), u)) != i1.forward(u))
          fail = "stabilization compatibility square does not commute";
      }
    }
  }
  return done(7, "clone machinery", fail,
              std::to_string(count) + " disjointify families and " +
              std::to_string(count) + " witness families of size <= 4; "
              "support transport homomorphism, fixing, inverse and the "
              "stabilization square verified on samples");
}

// ---- criterion 8: contractible poset of clone sequences ----------------

CriterionResult c8_poset(bool full, uint64_t seed) {
  const int families = full ? 100 : 25;
  const int chunks = std::min(families, 20);
  std::string fail = parallel_chunks(chunks, [&](int c) -> std::string {
    Rng rng(chunk_seed(seed, 8, c));
    for (int iter = 0; iter < families / chunks; ++iter) {
      std::vector<Clone> seeds;
      const int m = rng.range(1, 5);
      for (int j = 0; j < m; ++j) seeds.push_back(random_clone(s21, rng));
      std::vector<CloneSeq> p;
      for (const Clone& seed_clone : disjointify(seeds)) {
        std::vector<Clone> chain{seed_clone};
        if (rng.chance(0.5)) {
          auto parts = clone_split(chain.back());
          chain.push_back(parts[rng.below(parts.size())]);
        }
        p.push_back(CloneSeq(chain));
      }
      const PosetQ q = build_q(p);
      const size_t sz = q.elements.size();
      for (size_t i = 0; i < sz; ++i) {
        if (!q.leq[q.retract[i]][i]) return "retraction exceeds the identity";
        if (i >= q.p_size && q.retract[i] != static_cast<int>(i))
          return "retraction moves a minorant element";
        if (q.retract[q.retract[i]] != q.retract[i])
          return "retraction not idempotent";
        for (size_t j = 0; j < sz; ++j)
          if (q.leq[i][j] && !q.leq[q.retract[i]][q.retract[j]])
            return "retraction not monotone";
      }
      Poset nerve_p;
      nerve_p.size = sz;
      nerve_p.less.assign(sz, std::vector<bool>(sz, false));
      for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j)
          if (i != j && q.leq[i][j]) nerve_p.less[i][j] = true;
      const HomologyResult h = nerve_homology(nerve_p, 3);
      for (const auto& grp : h.groups)
        if (!grp.trivial())
          return "reduced nerve homology nontrivial for a seeded family";
    }
    return "";
  });
  return done(8, "clone sequence poset contractibility", fail,
              std::to_string(families) + " seeded families with |P| <= 5: "
              "retraction laws exact, reduced nerve homology 0 in degrees "
              "<= 3");
}

// ---- criterion 9: homology engine --------------------------------------

HomologyResult oracle(std::vector<HomologyGroup> gs) {
  return HomologyResult{std::move(gs)};
}

Subgroup whole_of(const FiniteGroup& g) {
  Subgroup w(g.order());
  for (int i = 0; i < g.order(); ++i) w[i] = i;
  return w;
}

HomologyGroup hg(size_t betti, std::vector<long> tors = {}) {
  HomologyGroup g;
  g.betti = betti;
  for (long t : tors) g.torsion.emplace_back(t);
  return g;
}

CriterionResult c9_homology(bool full, uint64_t seed) {
  const int matrices = full ? 10000 : 600;
  const int max_dim = full ? 40 : 16;
  const int chunks = 50;
  std::string fail = parallel_chunks(chunks, [&](int c) -> std::string {
    Rng rng(chunk_seed(seed, 9, c));
    for (int i = 0; i < matrices / chunks; ++i) {
      IntMatrix m(rng.range(1, max_dim), rng.range(1, max_dim));
      for (Int& x : m.data) x = rng.range(-9, 9);
      const SnfResult s = snf(m);
      if (!verify_snf(m, s)) return "smith form certificate rejected";
    }
    return "";
  });
  if (fail.empty()) {
    struct Entry {
      const char* name;
      HomologyResult h;
    };
    const std::vector<Entry> table = {
        {"Z2", oracle({hg(1), hg(0, {2}), hg(0), hg(0, {2})})},
        {"Z3", oracle({hg(1), hg(0, {3}), hg(0), hg(0, {3})})},
        {"Z4", oracle({hg(1), hg(0, {4}), hg(0), hg(0, {4})})},
        {"V4", oracle({hg(1), hg(0, {2, 2}), hg(0, {2}),
                       hg(0, {2, 2, 2})})},
        {"S3", oracle({hg(1), hg(0, {2}), hg(0), hg(0, {6})})},
    };
    for (const Entry& e : table) {
      const FiniteGroup g = builtin_group(e.name);
      if (!(bar_homology(g, {whole_of(g)}, 3) == e.h)) {
        fail = std::string("classifying space homology of ") + e.name +
               " disagrees with the oracle table";
        break;
      }
    }
  }
  if (fail.empty()) {
    // Every subgroup, checked intrinsically vs as a one-member
    // subcomplex; degree 2 keeps the order-8 groups tractable.
    std::vector<std::pair<std::string, Subgroup>> jobs;
    for (const std::string& name : builtin_group_names()) {
      const FiniteGroup g = builtin_group(name);
      for (const Subgroup& s : all_subgroups(g)) jobs.emplace_back(name, s);
    }
    fail = parallel_chunks(static_cast<int>(jobs.size()),
                           [&](int c) -> std::string {
      const auto& [name, sub] = jobs[c];
      const FiniteGroup g = builtin_group(name);
      std::vector<std::vector<int>> mul(sub.size(),
                                        std::vector<int>(sub.size()));
      for (size_t a = 0; a < sub.size(); ++a)
        for (size_t b = 0; b < sub.size(); ++b) {
          const int prod = g.times(sub[a], sub[b]);
          mul[a][b] = static_cast<int>(
              std::lower_bound(sub.begin(), sub.end(), prod) - sub.begin());
        }
      const FiniteGroup h = make_group("sub", std::move(mul));
      const int deg = 2;
      if (!(bar_homology(g, {sub}, deg) ==
            bar_homology(h, {whole_of(h)}, deg)))
        return "subgroup subcomplex homology mismatch inside " + name;
      return "";
    });
  }
  (void)seed;
  return done(9, "homology engine", fail,
              std::to_string(matrices) + " random matrices up to " +
              std::to_string(max_dim) + "x" + std::to_string(max_dim) +
              " with certified smith forms; oracle table matched to degree "
              "3; every subgroup of every builtin group matches its own "
              "classifying space homology to degree 2");
}

// ---- criterion 10: finite segal checker --------------------------------

// Independent check: the family is unsatisfiable iff no group element
// lies in every union of cosets g_j S' over collection members S'
// containing S_j.
bool family_unsatisfiable(const SubgroupCollection& c,
                          const std::vector<FamilyMember>& fam) {
  for (int g = 0; g < c.group.order(); ++g) {
    bool all = true;
    for (const FamilyMember& m : fam) {
      const Subgroup& s = c.members[m.subgroup];
      bool hit = false;
      for (const Subgroup& sup : c.members) {
        if (!std::includes(sup.begin(), sup.end(), s.begin(), s.end()))
          continue;
        for (int x : sup)
          if (c.group.times(m.element, x) == g) {
            hit = true;
            break;
          }
        if (hit) break;
      }
      if (!hit) {
        all = false;
        break;
      }
    }
    if (all) return false;
  }
  return true;
}

CriterionResult c10_segal(bool full, uint64_t) {
  std::string fail;
  int collections = 0, failures = 0;
  for (const std::string& name : builtin_group_names()) {
    const FiniteGroup g = builtin_group(name);
    const std::vector<Subgroup> subs = all_subgroups(g);
    Subgroup whole(g.order());
    for (int i = 0; i < g.order(); ++i) whole[i] = i;

    std::vector<std::vector<Subgroup>> families = {subs, {whole}};
    std::vector<Subgroup> proper;
    for (const Subgroup& s : subs)
      if (static_cast<int>(s.size()) < g.order()) proper.push_back(s);
    if (!proper.empty()) families.push_back(proper);

    for (const auto& members : families) {
      ++collections;
      const SubgroupCollection col = make_collection(g, members);
      const SegalReport rep = check_segal(col, 3);
      const bool has_whole =
          std::find(members.begin(), members.end(), whole) != members.end();
      if (has_whole && !(rep.pass && rep.certified_all_sizes)) {
        fail = "collection containing the whole group rejected for " + name;
        break;
      }
      if (!rep.pass) {
        ++failures;
        if (rep.witness.empty() || !family_unsatisfiable(col, rep.witness)) {
          fail = "failure report without a verifiable witness for " + name;
          break;
        }
      }
      const int deg = g.order() <= 6 ? 3 : 2;
      const DecompositionReport dec =
          decomposition_check(col, deg, full ? 3 : 2);
      if (dec.segal.pass && dec.segal.certified_all_sizes && !dec.all_match) {
        fail = "certified pass with a homology mismatch for " + name;
        break;
      }
    }
    if (!fail.empty()) break;
  }
  if (fail.empty()) {
    // stated minimal failures: the order-2 collection of the Klein group
    // and the trivial collection of Z/2
    const FiniteGroup v4 = builtin_group("V4");
    std::vector<Subgroup> order2;
    for (const Subgroup& s : all_subgroups(v4))
      if (s.size() == 2) order2.push_back(s);
    const SubgroupCollection cv = make_collection(v4, order2);
    const SegalReport rv = check_segal(cv, 3);
    if (rv.pass || rv.witness.size() != 2)
      fail = "klein order-2 collection: expected a size-2 witness";
    else {
      const auto& [m1, m2] = std::pair(rv.witness[0], rv.witness[1]);
      const Subgroup &s1 = cv.members[m1.subgroup],
                     &s2 = cv.members[m2.subgroup];
      const bool same_sub = s1 == s2;
      bool same_coset = same_sub;
      if (same_sub) {
        same_coset = false;
        for (int x : s1)
          if (v4.times(m1.element, x) == m2.element) same_coset = true;
      }
      if (!same_sub || same_coset || !family_unsatisfiable(cv, rv.witness))
        fail = "klein order-2 witness is not two cosets of one subgroup";
    }
    if (fail.empty()) {
      const FiniteGroup z2 = builtin_group("Z2");
      const SubgroupCollection ct = make_collection(z2, {Subgroup{0}});
      const SegalReport rt = check_segal(ct, 3);
      if (rt.pass || rt.witness.size() != 2 ||
          rt.witness[0].element == rt.witness[1].element ||
          !family_unsatisfiable(ct, rt.witness))
        fail = "trivial collection of Z/2: wrong minimal witness";
    }
  }
  return done(10, "finite segal checker", fail,
              std::to_string(collections) + " collections over the builtin "
              "groups: whole-group collections certified, " +
              std::to_string(failures) + " failures each with an "
              "independently verified minimal witness, no certified pass "
              "with a homology mismatch");
}

}  // namespace

std::vector<CriterionResult> run_acceptance(bool full, uint64_t seed) {
  using Fn = CriterionResult (*)(bool, uint64_t);
  const Fn criteria[] = {c1_rewriting, c2_group, c3_retract, c4_perfect,
                         c5_k0,        c6_probes, c7_clones, c8_poset,
                         c9_homology,  c10_segal};
  std::vector<CriterionResult> out;
  for (int i = 0; i < 10; ++i) {
    try {
      out.push_back(criteria[i](full, seed));
    } catch (const std::exception& e) {
      out.push_back(done(i + 1, "criterion", std::string("exception: ") +
                         e.what(), ""));
    }
  }
  return out;
}

}  // namespace cantorv
