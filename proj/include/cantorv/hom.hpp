#pragma once

#include <vector>

#include "cantorv/code.hpp"
#include "cantorv/term.hpp"

namespace cantorv {

// Morphism out of a free algebra: a tuple of generator images.
struct Homomorphism {
  Signature source;
  Signature target;
  std::vector<Term> images;  // images[i-1] is the image of gen(i)

  Homomorphism() = default;
  Homomorphism(Signature src, Signature tgt, std::vector<Term> imgs);

  static Homomorphism identity(const Signature& sig);
};

// Substitute generator images, then reduce.
Term apply_hom(const Homomorphism& h, const Term& t);

// g after f (source of g must be target of f... composition f then g).
Homomorphism compose_hom(const Homomorphism& g, const Homomorphism& f);

// True if both composites of the pair act as the identity on generators.
bool verify_iso_pair(const Homomorphism& fwd, const Homomorphism& back);

}  // namespace cantorv
