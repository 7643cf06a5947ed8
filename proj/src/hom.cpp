#include "cantorv/hom.hpp"

namespace cantorv {

Homomorphism::Homomorphism(Signature src, Signature tgt,
                           std::vector<Term> imgs)
    : source(src), target(tgt), images(std::move(imgs)) {
  if (source.arity != target.arity)
    throw std::invalid_argument("homomorphism: arity mismatch");
  if (static_cast<int>(images.size()) != source.rank)
    throw std::invalid_argument(
        "homomorphism: expected " + std::to_string(source.rank) +
        " generator images, got " + std::to_string(images.size()));
  for (const Term& t : images) check_wellformed(t, target);
}

Homomorphism Homomorphism::identity(const Signature& sig) {
  std::vector<Term> imgs;
  for (int i = 1; i <= sig.rank; ++i) imgs.push_back(Term::gen(i));
  return Homomorphism(sig, sig, std::move(imgs));
}

namespace {

Term substitute(const Homomorphism& h, const Term& t) {
  switch (t.kind) {
    case Term::Kind::Gen:
      return h.images[t.index - 1];
    case Term::Kind::Alpha:
      return Term::alpha(t.index, substitute(h, t.args[0]));
    case Term::Kind::Mu: {
      std::vector<Term> kids;
      kids.reserve(t.args.size());
      for (const Term& a : t.args) kids.push_back(substitute(h, a));
      return Term::mu(std::move(kids));
    }
  }
  return t;
}

}  // namespace

Term apply_hom(const Homomorphism& h, const Term& t) {
  check_wellformed(t, h.source);
  return reduce(substitute(h, t));
}

Homomorphism compose_hom(const Homomorphism& g, const Homomorphism& f) {
  require_same_signature(f.target, g.source, "compose_hom");
  std::vector<Term> imgs;
  imgs.reserve(f.images.size());
  for (const Term& t : f.images) imgs.push_back(apply_hom(g, t));
  return Homomorphism(f.source, g.target, std::move(imgs));
}

bool verify_iso_pair(const Homomorphism& fwd, const Homomorphism& back) {
  if (fwd.target != back.source || back.target != fwd.source) return false;
  Homomorphism rt = compose_hom(back, fwd);   // source -> source
  Homomorphism tr = compose_hom(fwd, back);   // target -> target
  for (int i = 1; i <= fwd.source.rank; ++i)
    if (rt.images[i - 1] != Term::gen(i)) return false;
  for (int i = 1; i <= fwd.target.rank; ++i)
    if (tr.images[i - 1] != Term::gen(i)) return false;
  return true;
}

}  // namespace cantorv
