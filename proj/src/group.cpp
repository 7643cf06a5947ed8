#include "cantorv/group.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cantorv {

FiniteGroup make_group(std::string name, std::vector<std::vector<int>> mul,
                       std::vector<std::string> labels) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw std::invalid_argument("group: empty table");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("group: table is not square");
    for (int x : row)
      if (x < 0 || x >= n)
        throw std::invalid_argument("group: entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (mul[0][a] != a || mul[a][0] != a)
      throw std::invalid_argument("group: element 0 is not the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw std::invalid_argument("group: multiplication not associative");

  FiniteGroup g;
  g.name = std::move(name);
  g.mul = std::move(mul);
  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul[a][b] == 0) {
        g.inv[a] = b;
        break;
      }
    if (g.inv[a] < 0)
      throw std::invalid_argument("group: element without inverse");
  }
  if (labels.empty())
    for (int a = 0; a < n; ++a) labels.push_back("x" + std::to_string(a));
  if (static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("group: label count mismatch");
  g.labels = std::move(labels);
  return g;
}

namespace {

FiniteGroup cyclic(int m, const std::string& name) {
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < m; ++b) mul[a][b] = (a + b) % m;
  }
  return make_group(name, std::move(mul), std::move(labels));
}

FiniteGroup klein_four() {
  std::vector<std::vector<int>> mul(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) mul[a][b] = a ^ b;
  return make_group("V4", std::move(mul), {"e", "a", "b", "c"});
}

FiniteGroup symmetric3() {
  // Permutations of {0,1,2}: e, r, r2, s, rs, r2s with r = (0 1 2).
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> r = {1, 2, 0}, s = {1, 0, 2}, e = {0, 1, 2};
  auto comp = [](std::array<int, 3> f, std::array<int, 3> g) {
    return std::array<int, 3>{f[g[0]], f[g[1]], f[g[2]]};
  };
  perms.push_back(e);
  perms.push_back(r);
  perms.push_back(comp(r, r));
  perms.push_back(s);
  perms.push_back(comp(r, s));
  perms.push_back(comp(comp(r, r), s));
  std::vector<std::string> labels = {"e", "r", "r2", "s", "rs", "r2s"};
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      auto p = comp(perms[a], perms[b]);
      mul[a][b] = static_cast<int>(
          std::find(perms.begin(), perms.end(), p) - perms.begin());
    }
  return make_group("S3", std::move(mul), std::move(labels));
}

FiniteGroup dihedral4() {
  // r^i s^j acting on the square's corners, r = (0 1 2 3), s = (1 3).
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> r = {1, 2, 3, 0}, s = {0, 3, 2, 1}, cur = {0, 1, 2, 3};
  auto comp = [](std::array<int, 4> f, std::array<int, 4> g) {
    return std::array<int, 4>{f[g[0]], f[g[1]], f[g[2]], f[g[3]]};
  };
  std::vector<std::string> labels;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 4; ++i) {
      cur = {0, 1, 2, 3};
      for (int t = 0; t < i; ++t) cur = comp(r, cur);
      if (j) cur = comp(cur, s);
      perms.push_back(cur);
      std::string l = i == 0 ? "" : (i == 1 ? "r" : "r" + std::to_string(i));
      if (j) l += "s";
      labels.push_back(l.empty() ? "e" : l);
    }
  std::vector<std::vector<int>> mul(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      auto p = comp(perms[a], perms[b]);
      mul[a][b] = static_cast<int>(
          std::find(perms.begin(), perms.end(), p) - perms.begin());
    }
  return make_group("D4", std::move(mul), std::move(labels));
}

FiniteGroup quaternion8() {
  // Index: 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k.
  auto enc = [](int sign, int axis) {
    return axis == 0 ? (sign > 0 ? 0 : 1) : 2 * axis + (sign > 0 ? 0 : 1);
  };
  auto axis_of = [](int x) { return x < 2 ? 0 : x / 2; };
  auto sign_of = [](int x) { return (x % 2 == 0) ? 1 : -1; };
  // i*j = k etc.: table over axes 1..3 with sign.
  auto axis_mul = [](int a, int b, int& sign) -> int {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) {
      sign = -sign;
      return 0;
    }
    // cyclic i->j->k
    static const int next[4] = {0, 2, 3, 1};
    if (next[a] == b) return 6 - a - b;  // i*j=k, j*k=i, k*i=j
    sign = -sign;
    return 6 - a - b;
  };
  std::vector<std::vector<int>> mul(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int sign = sign_of(x) * sign_of(y);
      int axis = axis_mul(axis_of(x), axis_of(y), sign);
      mul[x][y] = enc(sign, axis);
    }
  return make_group("Q8", std::move(mul),
                    {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

}  // namespace

FiniteGroup builtin_group(const std::string& name) {
  if (name == "Z2") return cyclic(2, "Z2");
  if (name == "Z3") return cyclic(3, "Z3");
  if (name == "Z4") return cyclic(4, "Z4");
  if (name == "V4") return klein_four();
  if (name == "S3") return symmetric3();
  if (name == "D4") return dihedral4();
  if (name == "Q8") return quaternion8();
  throw std::invalid_argument("unknown builtin group: " + name);
}

std::vector<std::string> builtin_group_names() {
  return {"Z2", "Z3", "Z4", "V4", "S3", "D4", "Q8"};
}

FiniteGroup group_from_csv(const std::string& csv_text,
                           const std::string& name) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(csv_text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      // trim
      size_t b = cell.find_first_not_of(" \t\r");
      size_t e = cell.find_last_not_of(" \t\r");
      row.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("csv group: empty input");
  const size_t n = rows.size();
  // Labels come from the first row read as products with the identity.
  std::vector<std::string> labels = rows[0];
  std::map<std::string, int> index;
  for (size_t i = 0; i < n; ++i) {
    if (labels[i].empty() || index.count(labels[i]))
      throw std::invalid_argument("csv group: bad or repeated label");
    index[labels[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n)
      throw std::invalid_argument("csv group: table is not square");
    for (size_t j = 0; j < n; ++j) {
      auto it = index.find(rows[i][j]);
      if (it == index.end())
        throw std::invalid_argument("csv group: unknown label " + rows[i][j]);
      mul[i][j] = it->second;
    }
  }
  return make_group(name, std::move(mul), std::move(labels));
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
  if (s.empty()) return false;
  std::set<int> set(s.begin(), s.end());
  if (set.size() != s.size()) return false;
  for (int a : s) {
    if (a < 0 || a >= g.order()) return false;
    if (!set.count(g.inv[a])) return false;
    for (int b : s)
      if (!set.count(g.times(a, b))) return false;
  }
  return set.count(0) > 0;
}

Subgroup generated_subgroup(const FiniteGroup& g,
                            const std::vector<int>& gens) {
  std::set<int> s = {0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int x : gens) {
        if (s.insert(g.times(a, x)).second) grew = true;
        if (s.insert(g.times(a, g.inv[x])).second) grew = true;
      }
  }
  return Subgroup(s.begin(), s.end());
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<Subgroup> found = {{0}};
  std::vector<Subgroup> queue = {{0}};
  while (!queue.empty()) {
    Subgroup h = queue.back();
    queue.pop_back();
    for (int x = 1; x < g.order(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<int> gens = h;
      gens.push_back(x);
      Subgroup bigger = generated_subgroup(g, gens);
      if (found.insert(bigger).second) queue.push_back(bigger);
    }
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

namespace {

using Mask = uint64_t;  // member-set bitmask; at most 64 members

struct BarBasis {
  std::vector<std::vector<int>> tuples;  // degree-p basis, lex ordered
  std::map<std::vector<int>, size_t> index;
};

}  // namespace

ChainComplex bar_subcomplex(const FiniteGroup& g,
                            const std::vector<Subgroup>& members, int d) {
  if (members.size() > 64)
    throw std::invalid_argument("bar_subcomplex: too many members");
  for (const Subgroup& s : members)
    if (!is_subgroup(g, s))
      throw std::invalid_argument("bar_subcomplex: member is not a subgroup");

  // For each nonidentity element, the set of members containing it. A
  // normalized tuple [h_1|...|h_p] belongs to the subcomplex iff some
  // single member contains every h_i (equivalently every partial product
  // g_0^{-1} g_k of the orbit-closure simplices).
  std::vector<Mask> elem_mask(g.order(), 0);
  for (size_t m = 0; m < members.size(); ++m)
    for (int x : members[m]) elem_mask[x] |= Mask(1) << m;

  std::vector<BarBasis> basis(d + 1);
  basis[0].tuples.push_back({});
  basis[0].index[{}] = 0;
  for (int p = 1; p <= d; ++p) {
    for (const auto& t : basis[p - 1].tuples) {
      Mask m = ~Mask(0);
      for (int h : t) m &= elem_mask[h];
      for (int h = 1; h < g.order(); ++h) {
        if (!(m & elem_mask[h])) continue;
        auto longer = t;
        longer.push_back(h);
        basis[p].index[longer] = basis[p].tuples.size();
        basis[p].tuples.push_back(std::move(longer));
      }
    }
  }

  ChainComplex c;
  c.dims.resize(d + 1);
  c.boundaries.resize(d + 1);
  for (int p = 0; p <= d; ++p) c.dims[p] = basis[p].tuples.size();
  c.boundaries[0] = IntMatrix(0, c.dims[0]);

  for (int p = 1; p <= d; ++p) {
    IntMatrix b(c.dims[p - 1], c.dims[p]);
    for (size_t j = 0; j < basis[p].tuples.size(); ++j) {
      const auto& t = basis[p].tuples[j];
      // face 0 drops h_1; face p drops h_p; inner faces multiply.
      auto add_face = [&](const std::vector<int>& face, int sgn) {
        auto it = basis[p - 1].index.find(face);
        if (it == basis[p - 1].index.end())
          throw std::logic_error("bar_subcomplex: face left the subcomplex");
        b.at(it->second, j) += sgn;
      };
      std::vector<int> face(t.begin() + 1, t.end());
      add_face(face, 1);
      for (int i = 1; i < p; ++i) {
        const int prod = g.times(t[i - 1], t[i]);
        if (prod == 0) continue;  // degenerate, dropped by normalization
        face.assign(t.begin(), t.end());
        face.erase(face.begin() + i);
        face[i - 1] = prod;
        add_face(face, i % 2 == 0 ? 1 : -1);
      }
      face.assign(t.begin(), t.end() - 1);
      add_face(face, p % 2 == 0 ? 1 : -1);
    }
    c.boundaries[p] = std::move(b);
  }
  return c;
}

HomologyResult bar_homology(const FiniteGroup& g,
                            const std::vector<Subgroup>& members, int d) {
  ChainComplex c = bar_subcomplex(g, members, d + 1);
  HomologyResult full = complex_homology(c);
  full.groups.resize(d + 1);
  return full;
}

}  // namespace cantorv
