#pragma once

#include <vector>

#include "cantorv/chain.hpp"

namespace cantorv {

// Finite poset given by its strict order relation.
struct Poset {
  size_t size = 0;
  std::vector<std::vector<bool>> less;  // strict: less[i][j] means i < j
};

// Throws unless less is irreflexive and transitive (and antisymmetric).
void check_strict_order(const Poset& p);

// Simplicial chain complex of the order complex (chains of strictly
// comparable elements) up to degree d; reduced adds the augmentation.
ChainComplex nerve_complex(const Poset& p, int d, bool reduced);

// Reduced homology of the nerve in degrees 0..d (builds degree d+1
// internally so the top group is exact).
HomologyResult nerve_homology(const Poset& p, int d);

}  // namespace cantorv
