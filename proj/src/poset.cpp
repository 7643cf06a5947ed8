#include "cantorv/poset.hpp"

#include <stdexcept>

namespace cantorv {

void check_strict_order(const Poset& p) {
  const size_t n = p.size;
  if (p.less.size() != n)
    throw std::invalid_argument("poset: relation size mismatch");
  for (size_t i = 0; i < n; ++i) {
    if (p.less[i].size() != n)
      throw std::invalid_argument("poset: relation size mismatch");
    if (p.less[i][i])
      throw std::invalid_argument("poset: relation is not irreflexive");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (p.less[i][j] && p.less[j][i])
        throw std::invalid_argument("poset: relation is not antisymmetric");
      if (!p.less[i][j]) continue;
      for (size_t k = 0; k < n; ++k)
        if (p.less[j][k] && !p.less[i][k])
          throw std::invalid_argument("poset: relation is not transitive");
    }
}

ChainComplex nerve_complex(const Poset& p, int d, bool reduced) {
  check_strict_order(p);
  const size_t n = p.size;

  // Simplices in degree k: strictly increasing chains of length k+1,
  // generated in lexicographic order.
  std::vector<std::vector<std::vector<size_t>>> simplices(d + 1);
  for (size_t i = 0; i < n; ++i) simplices[0].push_back({i});
  for (int k = 1; k <= d; ++k)
    for (const auto& chain : simplices[k - 1])
      for (size_t j = 0; j < n; ++j)
        if (p.less[chain.back()][j]) {
          auto longer = chain;
          longer.push_back(j);
          simplices[k].push_back(std::move(longer));
        }

  // index lookup per degree
  auto index_of = [&](int k, const std::vector<size_t>& s) -> size_t {
    const auto& list = simplices[k];
    size_t lo = 0, hi = list.size();
    while (lo < hi) {
      size_t mid = (lo + hi) / 2;
      if (list[mid] < s)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo;
  };

  ChainComplex c;
  c.dims.resize(d + 1);
  c.boundaries.resize(d + 1);
  for (int k = 0; k <= d; ++k) c.dims[k] = simplices[k].size();

  if (reduced) {
    c.boundaries[0] = IntMatrix(1, c.dims[0]);
    for (size_t j = 0; j < c.dims[0]; ++j) c.boundaries[0].at(0, j) = 1;
  } else {
    c.boundaries[0] = IntMatrix(0, c.dims[0]);
  }

  for (int k = 1; k <= d; ++k) {
    IntMatrix b(c.dims[k - 1], c.dims[k]);
    for (size_t j = 0; j < simplices[k].size(); ++j) {
      const auto& s = simplices[k][j];
      for (size_t f = 0; f <= s.size() - 1; ++f) {
        std::vector<size_t> face;
        for (size_t t = 0; t < s.size(); ++t)
          if (t != f) face.push_back(s[t]);
        const size_t i = index_of(k - 1, face);
        b.at(i, j) += (f % 2 == 0) ? 1 : -1;
      }
    }
    c.boundaries[k] = std::move(b);
  }
  // Chains generated lexicographically are sorted, as index_of assumes;
  // reduced complexes additionally carry the augmentation in degree 0.
  return c;
}

HomologyResult nerve_homology(const Poset& p, int d) {
  ChainComplex c = nerve_complex(p, d + 1, /*reduced=*/true);
  HomologyResult full = complex_homology(c);
  full.groups.resize(d + 1);  // top degree of the truncation is not exact
  return full;
}

}  // namespace cantorv
