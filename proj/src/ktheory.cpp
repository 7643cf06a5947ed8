#include "cantorv/ktheory.hpp"

#include <algorithm>

namespace cantorv {

ExpansionIso expansion_iso(int n, int r) {
  if (r < 1) throw std::invalid_argument("expansion_iso: r must be >= 1");
  const Signature big(n, r + n - 1), small(n, r);

  std::vector<Term> fwd_images;
  for (int i = 1; i < r; ++i) fwd_images.push_back(Term::gen(i));
  for (int k = 1; k <= n; ++k)
    fwd_images.push_back(Term::alpha(k, Term::gen(r)));

  std::vector<Term> back_images;
  for (int i = 1; i < r; ++i) back_images.push_back(Term::gen(i));
  std::vector<Term> merged;
  for (int i = r; i <= r + n - 1; ++i) merged.push_back(Term::gen(i));
  back_images.push_back(Term::mu(std::move(merged)));

  ExpansionIso iso;
  iso.forward = Homomorphism(big, small, std::move(fwd_images));
  iso.backward = Homomorphism(small, big, std::move(back_images));
  iso.verified = verify_iso_pair(iso.forward, iso.backward);
  if (!iso.verified)
    throw std::logic_error("expansion_iso: composite verification failed");
  return iso;
}

int K0Ring::add(int a, int b) const { return (a + b) % modulus; }
int K0Ring::mul(int a, int b) const { return (a * b) % modulus; }
int K0Ring::cls(long long r) const {
  return static_cast<int>(((r % modulus) + modulus) % modulus);
}

std::string K0Ring::str() const {
  return trivial() ? "0 (trivial ring)" : "Z/" + std::to_string(modulus);
}

K0Ring k0(int n) {
  if (n < 2) throw std::invalid_argument("k0: arity must be >= 2");
  K0Ring ring;
  ring.n = n;
  ring.modulus = n - 1;
  // Group completion of the rank monoid under the certified relation
  // r ~ r + (n-1); the leaf-count invariant |code| = r mod (n-1) of every
  // tableau operation separates the classes, so no further collapse.
  ring.relation = expansion_iso(n, 1);
  ring.separation =
      "complete codes over (n," + std::to_string(n) +
      ") have size congruent to the rank mod " + std::to_string(n - 1) +
      "; the congruence class is preserved by compose, inverse, block_sum "
      "and reduction";
  // Multiplication [r][s] = [rs] is well-defined mod n-1:
  // (r + (n-1))s = rs + (n-1)s.
  for (int a = 0; a < ring.modulus; ++a)
    for (int b = 0; b < ring.modulus; ++b)
      if (ring.cls((a + ring.modulus) * b) != ring.mul(a, b))
        throw std::logic_error("k0: multiplication ill-defined");
  return ring;
}

ProductElement product_reduce(const ProductElement& p) {
  return ProductElement{reduce(p.first), reduce(p.second)};
}

ProductElement product_mu(const std::vector<ProductElement>& args, int n) {
  if (static_cast<int>(args.size()) != n)
    throw std::invalid_argument("product_mu: wrong arity");
  std::vector<Term> firsts, seconds;
  for (const ProductElement& a : args) {
    firsts.push_back(a.first);
    seconds.push_back(a.second);
  }
  return product_reduce(
      ProductElement{Term::mu(std::move(firsts)), Term::mu(std::move(seconds))});
}

ProductElement product_alpha(int k, const ProductElement& p) {
  return product_reduce(
      ProductElement{Term::alpha(k, p.first), Term::alpha(k, p.second)});
}

std::string verdict_name(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::RefutedInjective:
      return "refuted-injective";
    case ProbeVerdict::RefutedSurjective:
      return "refuted-surjective";
    case ProbeVerdict::Inconclusive:
      return "inconclusive";
    case ProbeVerdict::VerifiedToDepth:
      return "verified-to-depth";
  }
  return "?";
}

std::vector<Term> enumerate_normal_forms(const Signature& sig, int depth,
                                         size_t budget) {
  // Normal forms: descent chains over generators, and mu-nodes of normal
  // forms that do not collapse. Built by increasing depth.
  std::vector<std::vector<Term>> by_depth(depth + 1);
  std::vector<Term> all;
  for (int g = 1; g <= sig.rank; ++g) by_depth[0].push_back(Term::gen(g));
  all = by_depth[0];
  for (int d = 1; d <= depth && all.size() < budget; ++d) {
    // chains: alpha over any depth d-1 chain or alpha term
    for (const Term& t : by_depth[d - 1]) {
      if (t.kind == Term::Kind::Mu) continue;
      for (int k = 1; k <= sig.arity && all.size() < budget; ++k) {
        by_depth[d].push_back(Term::alpha(k, t));
        all.push_back(by_depth[d].back());
      }
    }
    // mu over children of depth <= d-1, at least one of depth d-1
    std::vector<Term> pool;
    for (int dd = 0; dd < d; ++dd)
      pool.insert(pool.end(), by_depth[dd].begin(), by_depth[dd].end());
    std::vector<size_t> idx(sig.arity, 0);
    const size_t cutoff = pool.size() - by_depth[d - 1].size();
    while (all.size() < budget) {
      bool top = false;
      for (size_t i : idx)
        if (i >= cutoff) top = true;
      if (top) {
        std::vector<Term> kids;
        for (size_t i : idx) kids.push_back(pool[i]);
        Term m = Term::mu(std::move(kids));
        if (is_normal(m)) {
          by_depth[d].push_back(m);
          all.push_back(std::move(m));
        }
      }
      // advance odometer
      int pos = sig.arity - 1;
      while (pos >= 0 && ++idx[pos] == pool.size()) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return all;
}

namespace {

// If s is the basis element at a nonempty address w, the endomorphism
// x1 -> s embeds C_1 onto the clone at w: images of normal forms stay
// normal and every leaf lies below w, so g1 is never reached.
std::optional<Address> basis_chain_address(const Term& s) {
  auto a = address_of_leaf(reduce(s));
  if (a && !a->word.empty()) return a;
  return std::nullopt;
}

Term substitute_gen(const Term& t, const Term& s) {
  switch (t.kind) {
    case Term::Kind::Gen:
      return s;
    case Term::Kind::Alpha:
      return Term::alpha(t.index, substitute_gen(t.args[0], s));
    case Term::Kind::Mu: {
      std::vector<Term> kids;
      for (const Term& a : t.args) kids.push_back(substitute_gen(a, s));
      return Term::mu(std::move(kids));
    }
  }
  return t;
}

}  // namespace

EndoProbeReport collapse_endo_probe(const Term& s, const Signature& sig,
                                    int depth) {
  if (sig.rank != 1)
    throw std::invalid_argument("collapse_endo_probe: rank must be 1");
  check_wellformed(s, sig);
  EndoProbeReport rep;
  rep.search_depth = depth;

  if (auto w = basis_chain_address(s)) {
    rep.not_surjective_certified = true;
    rep.certificate =
        "x1 -> basis element at address " + w->str(1) +
        ": images are the clone below " + w->str(1) +
        "; every image leaf word starts with this address, so g1 has no "
        "preimage at any depth";
  }

  const std::vector<Term> candidates =
      enumerate_normal_forms(sig, depth, 20000);
  const Term g1 = Term::gen(1);
  std::vector<std::pair<Term, Term>> images;
  for (const Term& u : candidates) {
    const Term img = reduce(substitute_gen(u, s));
    if (!rep.surjective_hit && img == g1 && !(u == g1)) {
      rep.surjective_hit = true;
      rep.g1_preimage = u;
    }
    if (u == g1 && img == g1) rep.surjective_hit = true, rep.g1_preimage = u;
    images.emplace_back(u, img);
  }
  // kernel collisions among the smallest candidates, first few only
  for (size_t j = 1; j < images.size() && rep.collisions.size() < 3; ++j)
    for (size_t i = 0; i < j && rep.collisions.size() < 3; ++i)
      if (images[i].second == images[j].second)
        rep.collisions.emplace_back(images[i].first, images[j].first);
  return rep;
}

ProductProbeReport product_iso_probe(const Term& s, const Term& t,
                                     const Signature& sig, int depth,
                                     int search_depth, size_t budget) {
  if (sig.rank != 1)
    throw std::invalid_argument("product_iso_probe: rank must be 1");
  check_wellformed(s, sig);
  check_wellformed(t, sig);
  ProductProbeReport rep;
  rep.depth = depth;
  rep.search_depth = search_depth;

  // Invariant certificate: when both coordinates are basis-chain
  // embeddings, each image coordinate stays inside a proper clone, so the
  // pair (g1, g1) has no preimage.
  const auto ws = basis_chain_address(s);
  const auto wt = basis_chain_address(t);
  if (ws && wt) {
    rep.verdict = ProbeVerdict::RefutedSurjective;
    rep.missing = ProductElement{Term::gen(1), Term::gen(1)};
    rep.certificate =
        "coordinate maps are clone embeddings below " + ws->str(1) + " and " +
        wt->str(1) + "; no preimage of (g1, g1) exists at any depth";
    return rep;
  }

  const std::vector<Term> domain =
      enumerate_normal_forms(sig, depth, budget);
  rep.enumerated = domain.size();

  // Injectivity over the enumerated normal forms.
  std::vector<std::pair<ProductElement, const Term*>> images;
  images.reserve(domain.size());
  for (const Term& u : domain)
    images.push_back({ProductElement{reduce(substitute_gen(u, s)),
                                     reduce(substitute_gen(u, t))},
                      &u});
  for (size_t i = 0; i < images.size(); ++i)
    for (size_t j = i + 1; j < images.size(); ++j)
      if (images[i].first.first == images[j].first.first &&
          images[i].first.second == images[j].first.second) {
        rep.verdict = ProbeVerdict::RefutedInjective;
        rep.collision = {*images[i].second, *images[j].second};
        rep.certificate = "distinct normal forms with equal image pairs";
        return rep;
      }

  // Surjectivity sample: does (g1, alpha_1 g1) have a shallow preimage?
  const std::vector<Term> search =
      enumerate_normal_forms(sig, search_depth, budget);
  auto has_preimage = [&](const Term& a, const Term& b) {
    for (const Term& u : search)
      if (reduce(substitute_gen(u, s)) == a &&
          reduce(substitute_gen(u, t)) == b)
        return true;
    return false;
  };
  const Term g1 = Term::gen(1);
  if (reduce(s) == g1 && reduce(t) == g1) {
    // Diagonal image: (g1, alpha_1 g1) is certainly unreachable.
    rep.verdict = ProbeVerdict::RefutedSurjective;
    rep.missing = ProductElement{g1, Term::alpha(1, g1)};
    rep.certificate = "image is the diagonal";
    return rep;
  }
  if (!has_preimage(g1, g1)) {
    rep.verdict = ProbeVerdict::Inconclusive;
    rep.certificate = "injective on the enumerated normal forms; (g1,g1) has "
                      "no preimage within the search bound";
    return rep;
  }
  rep.verdict = ProbeVerdict::VerifiedToDepth;
  rep.certificate = "injective on the enumerated normal forms and (g1,g1) "
                    "reached within the search bound";
  return rep;
}

}  // namespace cantorv
