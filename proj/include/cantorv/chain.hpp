#pragma once

#include <string>
#include <vector>

#include "cantorv/matrix.hpp"

namespace cantorv {

// Integer chain complex in degrees 0..d. boundaries[k] is the matrix of
// d_k : C_k -> C_{k-1}; boundaries[0] is empty (or the augmentation when
// the complex is reduced). dims[k] is the rank of C_k.
struct ChainComplex {
  std::vector<size_t> dims;
  std::vector<IntMatrix> boundaries;  // boundaries[k]: dims[k-1] x dims[k]

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
};

// Checks consecutive composites vanish; throws on violation.
void check_boundary_condition(const ChainComplex& c);

struct HomologyGroup {
  size_t betti = 0;
  std::vector<Int> torsion;  // each >= 2, dividing the next

  bool trivial() const { return betti == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup& o) const {
    return betti == o.betti && torsion == o.torsion;
  }
  std::string str() const;  // e.g. "Z^2 + Z/2 + Z/4", "0"
};

struct HomologyResult {
  std::vector<HomologyGroup> groups;  // degree 0..top
  bool operator==(const HomologyResult& o) const {
    return groups == o.groups;
  }
};

// H_k = ker d_k / im d_{k+1} via Smith normal form, for k = 0..top.
// Nothing is assumed above the top degree (d_{top+1} = 0), so callers
// computing a truncation of a larger complex should build one extra
// degree and ignore the last group.
HomologyResult complex_homology(const ChainComplex& c);

}  // namespace cantorv
