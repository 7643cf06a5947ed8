#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorv/chain.hpp"
#include "cantorv/matrix.hpp"
#include "cantorv/poset.hpp"
#include "cantorv/rng.hpp"

using namespace cantorv;

namespace {
IntMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

HomologyGroup grp(size_t betti, std::vector<int> torsion = {}) {
  HomologyGroup g;
  g.betti = betti;
  for (int t : torsion) g.torsion.emplace_back(t);
  return g;
}
}  // namespace

TEST_CASE("snf small cases") {
  {
    SnfResult s = snf(from_rows({{2, 0}, {0, 3}}));
    CHECK(verify_snf(from_rows({{2, 0}, {0, 3}}), s));
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
  }
  {
    IntMatrix z(3, 2);
    SnfResult s = snf(z);
    CHECK(verify_snf(z, s));
    CHECK(snf_rank(s.d) == 0);
  }
  {
    IntMatrix id = IntMatrix::identity(4);
    SnfResult s = snf(id);
    CHECK(verify_snf(id, s));
    CHECK(s.d == id);
  }
}

TEST_CASE("snf on random matrices") {
  Rng rng(307);
  for (int iter = 0; iter < 300; ++iter) {
    const size_t r = 1 + rng.below(8), c = 1 + rng.below(8);
    IntMatrix m(r, c);
    for (Int& x : m.data)
      x = static_cast<int>(rng.below(21)) - 10;
    SnfResult s = snf(m);
    CHECK(verify_snf(m, s));
  }
}

TEST_CASE("determinant") {
  CHECK(determinant(from_rows({{2, 1}, {1, 1}})) == 1);
  CHECK(determinant(from_rows({{1, 2}, {3, 4}})) == -2);
  CHECK(determinant(IntMatrix::identity(5)) == 1);
}

TEST_CASE("circle homology") {
  // one vertex, one loop edge: d1 = 0
  ChainComplex c;
  c.dims = {1, 1};
  c.boundaries.resize(2);
  c.boundaries[0] = IntMatrix(0, 1);
  c.boundaries[1] = IntMatrix(1, 1);  // zero map
  HomologyResult h = complex_homology(c);
  CHECK(h.groups[0] == grp(1));
  CHECK(h.groups[1] == grp(1));
}

TEST_CASE("sphere boundary complex") {
  // boundary of a 3-simplex: 4 vertices, 6 edges, 4 triangles
  ChainComplex c;
  c.dims = {4, 6, 4};
  c.boundaries.resize(3);
  c.boundaries[0] = IntMatrix(0, 4);
  // edges in lex order: 01 02 03 12 13 23
  c.boundaries[1] = from_rows({{-1, -1, -1, 0, 0, 0},
                               {1, 0, 0, -1, -1, 0},
                               {0, 1, 0, 1, 0, -1},
                               {0, 0, 1, 0, 1, 1}});
  // triangles: 012 013 023 123
  c.boundaries[2] = from_rows({{1, 1, 0, 0},
                               {-1, 0, 1, 0},
                               {0, -1, -1, 0},
                               {1, 0, 0, 1},
                               {0, 1, 0, -1},
                               {0, 0, 1, 1}});
  HomologyResult h = complex_homology(c);
  CHECK(h.groups[0] == grp(1));
  CHECK(h.groups[1] == grp(0));
  CHECK(h.groups[2] == grp(1));
}

TEST_CASE("zero complex") {
  ChainComplex c;
  c.dims = {0, 0};
  c.boundaries.resize(2);
  c.boundaries[0] = IntMatrix(0, 0);
  c.boundaries[1] = IntMatrix(0, 0);
  for (const auto& g : complex_homology(c).groups) CHECK(g.trivial());
}

TEST_CASE("boundary condition enforced") {
  ChainComplex c;
  c.dims = {1, 1, 1};
  c.boundaries.resize(3);
  c.boundaries[0] = IntMatrix(0, 1);
  c.boundaries[1] = IntMatrix(1, 1);
  c.boundaries[1].at(0, 0) = 1;
  c.boundaries[2] = IntMatrix(1, 1);
  c.boundaries[2].at(0, 0) = 1;
  CHECK_THROWS(complex_homology(c));
}

TEST_CASE("group presentation string") {
  CHECK(grp(0).str() == "0");
  CHECK(grp(1).str() == "Z");
  CHECK(grp(2, {2}).str() == "Z^2 + Z/2");
  CHECK(grp(0, {2, 4}).str() == "Z/2 + Z/4");
}

TEST_CASE("nerve: chain poset is contractible") {
  Poset p;
  p.size = 2;
  p.less = {{false, true}, {false, false}};
  HomologyResult h = nerve_homology(p, 2);
  for (const auto& g : h.groups) CHECK(g.trivial());
}

TEST_CASE("nerve: two points") {
  Poset p;
  p.size = 2;
  p.less = {{false, false}, {false, false}};
  HomologyResult h = nerve_homology(p, 2);
  CHECK(h.groups[0] == grp(1));  // reduced H0 = Z
  CHECK(h.groups[1] == grp(0));
}

TEST_CASE("nerve: boundary of the 2-simplex via subsets") {
  // proper nonempty subsets of {1,2,3} by inclusion: hexagon, reduced
  // H1 = Z
  Poset p;
  p.size = 6;  // {1},{2},{3},{12},{13},{23}
  p.less.assign(6, std::vector<bool>(6, false));
  auto link = [&](int a, int b) { p.less[a][b] = true; };
  link(0, 3);
  link(0, 4);
  link(1, 3);
  link(1, 5);
  link(2, 4);
  link(2, 5);
  HomologyResult h = nerve_homology(p, 2);
  CHECK(h.groups[0] == grp(0));
  CHECK(h.groups[1] == grp(1));
  CHECK(h.groups[2] == grp(0));
}

TEST_CASE("poset validation") {
  Poset p;
  p.size = 2;
  p.less = {{true, false}, {false, false}};
  CHECK_THROWS(check_strict_order(p));
  Poset q;
  q.size = 3;
  q.less = {{false, true, false},
            {false, false, true},
            {false, false, false}};  // missing transitivity
  CHECK_THROWS(check_strict_order(q));
}
