#include "cantorv/chain.hpp"

#include <stdexcept>

namespace cantorv {

void check_boundary_condition(const ChainComplex& c) {
  if (c.dims.size() != c.boundaries.size())
    throw std::invalid_argument("chain complex: dims/boundaries mismatch");
  for (size_t k = 1; k < c.boundaries.size(); ++k) {
    const IntMatrix& dk = c.boundaries[k];
    if (dk.rows != c.dims[k - 1] || dk.cols != c.dims[k])
      throw std::invalid_argument("chain complex: boundary " +
                                  std::to_string(k) + " has wrong shape");
    if (k == 1 && c.boundaries[0].rows > 0) {
      // boundaries[0], when present, is the augmentation.
      IntMatrix comp = mat_mul(c.boundaries[0], dk);
      for (const Int& x : comp.data)
        if (x != 0)
          throw std::invalid_argument(
              "chain complex: augmentation does not kill boundaries");
    }
    if (k >= 2) {
      IntMatrix comp = mat_mul(c.boundaries[k - 1], dk);
      for (const Int& x : comp.data)
        if (x != 0)
          throw std::invalid_argument(
              "chain complex: d o d != 0 between degrees " +
              std::to_string(k) + " and " + std::to_string(k - 2));
    }
  }
}

std::string HomologyGroup::str() const {
  std::string s;
  if (betti == 1)
    s = "Z";
  else if (betti > 1)
    s = "Z^" + std::to_string(betti);
  for (const Int& t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + t.str();
  }
  return s.empty() ? "0" : s;
}

HomologyResult complex_homology(const ChainComplex& c) {
  check_boundary_condition(c);
  const int top = c.top_degree();
  HomologyResult res;
  res.groups.resize(top + 1);

  // rank and elementary divisors of each boundary map
  std::vector<size_t> ranks(top + 2, 0);
  std::vector<std::vector<Int>> divisors(top + 2);
  for (int k = 0; k <= top; ++k) {
    if (k == 0 && c.boundaries[0].rows == 0) continue;  // no augmentation
    SnfResult s = snf(c.boundaries[k]);
    ranks[k] = snf_rank(s.d);
    for (size_t t = 0; t < ranks[k]; ++t)
      if (s.d.at(t, t) > 1) divisors[k].push_back(s.d.at(t, t));
  }

  for (int k = 0; k <= top; ++k) {
    const size_t dim = c.dims[k];
    const size_t rank_out = ranks[k];     // rank d_k
    const size_t rank_in = ranks[k + 1];  // rank d_{k+1}
    res.groups[k].betti = dim - rank_out - rank_in;
    res.groups[k].torsion = divisors[k + 1];
  }
  return res;
}

}  // namespace cantorv
