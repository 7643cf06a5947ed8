#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorv/clone.hpp"
#include "cantorv/parse.hpp"
#include "cantorv/poset.hpp"
#include "cantorv/rng.hpp"

using namespace cantorv;

namespace {
const Signature s21(2, 1);
const Signature s31(3, 1);

Clone cl(const std::string& lit, const Signature& sig = s21) {
  return Clone(parse_code(lit, sig));
}
Tableau A() { return parse_tableau("n=2 r=1 { 0->00, 10->01, 11->1 }"); }
Tableau B() {
  return parse_tableau("n=2 r=1 { 00->00, 01->01, 10->11, 11->10 }");
}

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
}  // namespace

TEST_CASE("containment") {
  CHECK(clone_contains(cl("{0}"), cl("{00,01}")));
  CHECK_FALSE(clone_contains(cl("{0}"), cl("{1}")));
  CHECK(clone_contains(cl("{0}"), cl("{0}")));
  CHECK_FALSE(clone_contains(cl("{00,01}"), cl("{0}")));
}

TEST_CASE("intersection") {
  CHECK(clone_intersect(cl("{0}"), cl("{00,01}")) == cl("{00,01}"));
  CHECK_FALSE(clone_intersect(cl("{0}"), cl("{1}")).has_value());
  CHECK(clone_intersect(cl("{0,10}"), cl("{00,1}")) == cl("{00,10}"));
}

TEST_CASE("split") {
  auto parts = clone_split(cl("{0}"));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == cl("{00}"));
  CHECK(parts[1] == cl("{01}"));

  const Signature s22(2, 2);
  auto parts2 = clone_split(Clone(parse_code("{1:e}", s22)));
  CHECK(parts2[0] == Clone(parse_code("{1:0}", s22)));
  CHECK(parts2[1] == Clone(parse_code("{1:1}", s22)));

  auto parts3 = clone_split(cl("{0}", s31));
  REQUIRE(parts3.size() == 3);
  CHECK(parts3[0] == cl("{00}", s31));
  CHECK(parts3[1] == cl("{01}", s31));
  CHECK(parts3[2] == cl("{02}", s31));
}

TEST_CASE("disjointify examples") {
  auto r1 = disjointify({cl("{0}"), cl("{1}")});
  CHECK(r1[0] == cl("{0}"));
  CHECK(r1[1] == cl("{1}"));

  auto r2 = disjointify({cl("{0}"), cl("{0}")});
  CHECK(r2[0] == cl("{00}"));
  CHECK(r2[1] == cl("{01}"));

  auto r3 = disjointify({cl("{0}"), cl("{00,1}")});
  CHECK(disjoint(r3[0], r3[1]));
  CHECK(clone_contains(cl("{0}"), r3[0]));
  CHECK(clone_contains(cl("{00,1}"), r3[1]));
}

TEST_CASE("disjointify postconditions on random families") {
  Rng rng(211);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<Clone> in;
    const int m = rng.range(1, 4);
    for (int j = 0; j < m; ++j) in.push_back(random_clone(s21, rng));
    auto out = disjointify(in);
    REQUIRE(out.size() == in.size());
    for (size_t i = 0; i < out.size(); ++i) {
      CHECK(clone_contains(in[i], out[i]));
      for (size_t j = i + 1; j < out.size(); ++j)
        CHECK(disjoint(out[i], out[j]));
    }
    // idempotent on disjoint families
    CHECK(disjointify(out) == out);
  }
}

TEST_CASE("clone image") {
  CHECK(clone_image(A(), cl("{0}")) == cl("{00}"));
  CHECK(clone_image(A(), cl("{11}")) == cl("{1}"));
  CHECK(clone_image(Tableau::identity(s21), cl("{0,10}")) == cl("{0,10}"));
}

TEST_CASE("segal witness singleton") {
  auto w = segal_witness({{B(), cl("{0}")}});
  CHECK(w.g == B());
  CHECK(fixes_pointwise(compose(inverse(w.g), B()), w.refined[0]));
}

TEST_CASE("segal witness example family") {
  std::vector<std::pair<Tableau, Clone>> fam = {{B(), cl("{0}")},
                                                {Tableau::identity(s21), cl("{0}")}};
  auto w = segal_witness(fam);
  REQUIRE(w.refined.size() == 2);
  for (size_t j = 0; j < fam.size(); ++j) {
    CHECK(clone_contains(fam[j].second, w.refined[j]));
    CHECK(fixes_pointwise(compose(inverse(w.g), fam[j].first), w.refined[j]));
  }
  CHECK(disjoint(w.refined[0], w.refined[1]));
}

TEST_CASE("segal witness random families") {
  Rng rng(223);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<std::pair<Tableau, Clone>> fam;
    const int m = rng.range(1, 4);
    for (int j = 0; j < m; ++j)
      fam.push_back({random_tableau(s21, 3, rng), random_clone(s21, rng)});
    auto w = segal_witness(fam);
    REQUIRE(w.refined.size() == fam.size());
    std::vector<Address> sources, images;
    for (size_t j = 0; j < fam.size(); ++j) {
      CHECK(clone_contains(fam[j].second, w.refined[j]));
      CHECK(fixes_pointwise(compose(inverse(w.g), fam[j].first),
                            w.refined[j]));
      for (size_t i = j + 1; i < fam.size(); ++i)
        CHECK(disjoint(w.refined[j], w.refined[i]));
      const auto& src = w.refined[j].code.addrs;
      sources.insert(sources.end(), src.begin(), src.end());
      const auto& img = clone_image(fam[j].first, w.refined[j]).code.addrs;
      images.insert(images.end(), img.begin(), img.end());
    }
    if (fam.size() > 1) {
      CHECK_FALSE(is_complete(PrefixCode(s21, sources)));
      CHECK_FALSE(is_complete(PrefixCode(s21, images)));
    }
  }
}

TEST_CASE("clone sequences") {
  CloneSeq x = parse_cloneseq("[{0} > {00}]", s21);
  CHECK(x.materialized() == 2);
  CHECK(x.at(1) == cl("{0}"));
  CHECK(x.at(2) == cl("{00}"));
  CHECK(x.at(4) == cl("{0000}"));  // continuation appends zeros
  CHECK_THROWS(parse_cloneseq("[{0} > {1}]", s21));  // not descending
  CHECK_THROWS(parse_cloneseq("[{0} > {0}]", s21));  // not strict
}

TEST_CASE("sequence comparisons") {
  CloneSeq x = parse_cloneseq("[{0}]", s21);
  CloneSeq y = parse_cloneseq("[{1}]", s21);
  CloneSeq xx = parse_cloneseq("[{00}]", s21);
  CHECK(seq_leq(x, x));
  CHECK(seq_leq(xx, x));
  CHECK_FALSE(seq_leq(x, xx));
  CHECK_FALSE(seq_leq(x, y));
  // the continuation rule pushes every address down its 0-branch, so a
  // wider sub-code at one level need not stay inside at the next
  CHECK_FALSE(seq_leq(parse_cloneseq("[{00,01}]", s21), x));

  auto ops = seq_ops(x, y);
  CHECK(ops.disjoint1);
  // {0} u {1} is complete at level 1, so the sum is undefined there.
  CHECK_FALSE(ops.sum.has_value());
}

TEST_CASE("sequence sums and intersections") {
  CloneSeq x = parse_cloneseq("[{00}]", s21);
  CloneSeq y = parse_cloneseq("[{10}]", s21);
  auto ops = seq_ops(x, y);
  CHECK(ops.disjoint1);
  REQUIRE(ops.sum.has_value());
  CHECK(ops.sum->at(1) == cl("{00,10}"));
  CHECK_FALSE(ops.intersectwise.has_value());

  CloneSeq big = parse_cloneseq("[{0}]", s21);
  CloneSeq small = parse_cloneseq("[{00,01}]", s21);
  auto ops2 = seq_ops(big, small);
  REQUIRE(ops2.intersectwise.has_value());
  CHECK(ops2.intersectwise->at(1) == cl("{00,01}"));
  CHECK(ops2.leq == false);
  CHECK(seq_leq(parse_cloneseq("[{00}]", s21), big));
}

TEST_CASE("sequence membership") {
  CloneSeq x = parse_cloneseq("[{0}]", s21);
  CHECK(seq_membership(Tableau::identity(s21), x));
  CHECK(seq_membership(B(), x));
  CHECK_FALSE(seq_membership(A(), x));
  // an element fixing only a deep stage
  Tableau deep = parse_tableau("n=2 r=1 { 00->00, 01->1, 1->01 }");
  CHECK(fixes_pointwise(deep, cl("{00}")));
  CHECK(seq_membership(deep, parse_cloneseq("[{0} > {00}]", s21)));
}

TEST_CASE("support iso") {
  SupportIso iso = support_iso(cl("{0}"));
  CHECK(iso.source == s21);
  CHECK(iso.complement == parse_code("{1}", s21));

  // root swap of the depth-1 expansion transports onto the cone of 1
  Tableau u = parse_tableau("n=2 r=1 { 0->1, 1->0 }");
  Tableau img = iso.forward(u);
  CHECK(img == parse_tableau("n=2 r=1 { 0->0, 10->11, 11->10 }"));
  CHECK(fixes_pointwise(img, cl("{0}")));
  CHECK(iso.forward(Tableau::identity(s21)).is_identity());
  CHECK(iso.backward(img) == u);

  Rng rng(239);
  for (int i = 0; i < 100; ++i) {
    Tableau a = random_tableau(s21, 4, rng);
    Tableau b = random_tableau(s21, 4, rng);
    CHECK(iso.forward(compose(a, b)) ==
          compose(iso.forward(a), iso.forward(b)));
    CHECK(fixes_pointwise(iso.forward(a), cl("{0}")));
    CHECK(iso.backward(iso.forward(a)) == a);
  }
}

TEST_CASE("support iso compatibility along a chain") {
  // {0} > {00}: V(X_2) includes V(X_1); the sources are V_{2,1} and
  // V_{2,2}, linked by adding an identity block for the freed cone.
  SupportIso i1 = support_iso(cl("{0}"));
  SupportIso i2 = support_iso(cl("{00}"));
  REQUIRE(i2.source == Signature(2, 2));
  // complement of {00} is {01, 1}; root 1 <-> 01, root 2 <-> 1.
  Rng rng(241);
  for (int i = 0; i < 100; ++i) {
    Tableau u = random_tableau(s21, 4, rng);
    // embed u on the cone of 1 only: block_sum(id_1, u) in V_{2,2}
    Tableau emb = block_sum(Tableau::identity(s21), u);
    CHECK(i2.forward(emb) == i1.forward(u));
  }
}

TEST_CASE("build_q singleton") {
  PosetQ q = build_q({parse_cloneseq("[{0}]", s21)});
  CHECK(q.p_size == 1);
  CHECK(q.elements.size() == 2);
  CHECK(q.retract[q.retract.size() - 1] >= 0);
  Poset p;
  p.size = q.elements.size();
  p.less.assign(p.size, std::vector<bool>(p.size, false));
  for (size_t i = 0; i < p.size; ++i)
    for (size_t j = 0; j < p.size; ++j)
      if (i != j && q.leq[i][j]) p.less[i][j] = true;
  HomologyResult h = nerve_homology(p, 3);
  for (const auto& grp : h.groups) CHECK(grp.trivial());
}

TEST_CASE("build_q two disjoint sequences") {
  PosetQ q = build_q(
      {parse_cloneseq("[{00}]", s21), parse_cloneseq("[{10}]", s21)});
  CHECK(q.p_size == 2);
  CHECK(q.elements.size() == 2 + 3);  // X', Y', X'+Y'
  // retraction fixes P' and is below the identity
  for (size_t i = 0; i < q.elements.size(); ++i) {
    CHECK(q.leq[q.retract[i]][i]);
    if (i >= q.p_size) CHECK(q.retract[i] == static_cast<int>(i));
  }
  // monotone
  for (size_t i = 0; i < q.elements.size(); ++i)
    for (size_t j = 0; j < q.elements.size(); ++j)
      if (q.leq[i][j]) CHECK(q.leq[q.retract[i]][q.retract[j]]);
}

TEST_CASE("build_q overlapping sequences") {
  // shared zero thread forces the search past the first candidates
  PosetQ q = build_q(
      {parse_cloneseq("[{0}]", s21), parse_cloneseq("[{0,10}]", s21)});
  CHECK(q.p_size == 2);
  for (size_t i = 0; i < q.elements.size(); ++i)
    CHECK(q.leq[q.retract[i]][i]);
}

TEST_CASE("build_q random families") {
  Rng rng(251);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<Clone> seeds;
    const int m = rng.range(1, 4);
    for (int j = 0; j < m; ++j) seeds.push_back(random_clone(s21, rng));
    std::vector<CloneSeq> p;
    for (const Clone& seed : disjointify(seeds)) {
      std::vector<Clone> chain{seed};
      if (rng.chance(0.5)) {
        auto parts = clone_split(chain.back());
        chain.push_back(parts[rng.below(parts.size())]);
      }
      p.push_back(CloneSeq(chain));
    }
    PosetQ q = build_q(p);
    const size_t sz = q.elements.size();
    for (size_t i = 0; i < sz; ++i) {
      CHECK(q.leq[q.retract[i]][i]);
      if (i >= q.p_size) CHECK(q.retract[i] == static_cast<int>(i));
      CHECK(q.retract[q.retract[i]] == q.retract[i]);
      for (size_t j = 0; j < sz; ++j)
        if (q.leq[i][j]) CHECK(q.leq[q.retract[i]][q.retract[j]]);
    }
    Poset nerve_p;
    nerve_p.size = sz;
    nerve_p.less.assign(sz, std::vector<bool>(sz, false));
    for (size_t i = 0; i < sz; ++i)
      for (size_t j = 0; j < sz; ++j)
        if (i != j && q.leq[i][j]) nerve_p.less[i][j] = true;
    HomologyResult h = nerve_homology(nerve_p, 3);
    for (const auto& grp : h.groups) CHECK(grp.trivial());
  }
}
