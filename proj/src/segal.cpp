#include "cantorv/segal.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>

namespace cantorv {

SubgroupCollection make_collection(FiniteGroup g,
                                   std::vector<Subgroup> members) {
  for (const Subgroup& s : members)
    if (!is_subgroup(g, s))
      throw std::invalid_argument("collection: member is not a subgroup");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty())
    throw std::invalid_argument("collection: no members");
  return SubgroupCollection{std::move(g), std::move(members)};
}

std::string SegalReport::str(const SubgroupCollection& c) const {
  std::string s;
  if (pass) {
    s = certified_all_sizes
            ? "pass (certified for all family sizes)"
            : "pass (certified up to family size " + std::to_string(bound) + ")";
  } else {
    s = "fail, witness family:";
    for (const FamilyMember& m : witness) {
      s += " (" + c.group.labels[m.element] + ", {";
      const Subgroup& sg = c.members[m.subgroup];
      for (size_t i = 0; i < sg.size(); ++i) {
        if (i) s += ",";
        s += c.group.labels[sg[i]];
      }
      s += "})";
    }
  }
  return s;
}

namespace {

using Bits = uint64_t;  // element-set mask, |G| <= 64

}  // namespace

SegalReport check_segal(const SubgroupCollection& c, int k) {
  if (k < 1) throw std::invalid_argument("check_segal: k must be >= 1");
  const FiniteGroup& g = c.group;
  const int n = g.order();
  if (n > 25)
    throw std::invalid_argument("check_segal: group too large for the "
                                "exhaustive checker");

  // A family member (h, S) is satisfied by g iff g^{-1} h lies in some
  // member S' >= S, i.e. g is in the coset union  U_{S' >= S} h S'.
  // A family is a counterexample iff its coset unions have empty
  // intersection, so minimal witnesses are found by shortest-path search
  // over intersection states.
  std::vector<Bits> member_bits(c.members.size(), 0);
  for (size_t m = 0; m < c.members.size(); ++m)
    for (int x : c.members[m]) member_bits[m] |= Bits(1) << x;

  std::vector<Bits> enlarged(c.members.size(), 0);  // union of S' >= S
  for (size_t m = 0; m < c.members.size(); ++m)
    for (size_t m2 = 0; m2 < c.members.size(); ++m2)
      if ((member_bits[m] & member_bits[m2]) == member_bits[m])
        enlarged[m] |= member_bits[m2];

  std::map<Bits, FamilyMember> constraint;  // coset-union mask -> one pair
  for (int h = 0; h < n; ++h)
    for (size_t m = 0; m < c.members.size(); ++m) {
      Bits mask = 0;
      for (int x = 0; x < n; ++x)
        if (enlarged[m] & (Bits(1) << x)) mask |= Bits(1) << g.times(h, x);
      constraint.emplace(mask, FamilyMember{h, static_cast<int>(m)});
    }

  SegalReport rep;
  rep.bound = k;
  const Bits full = n == 64 ? ~Bits(0) : (Bits(1) << n) - 1;

  // Total intersection nonempty: a single g satisfies every pair at once,
  // so every family of every size passes.
  Bits total = full;
  for (const auto& [mask, fam] : constraint) total &= mask;
  if (total != 0) {
    rep.pass = true;
    rep.certified_all_sizes = true;
    return rep;
  }

  // BFS for the minimal number of constraints reaching the empty
  // intersection; the path is a minimal witness family.
  std::map<Bits, std::pair<Bits, Bits>> prev;  // state -> (parent, used mask)
  std::queue<Bits> work;
  work.push(full);
  prev[full] = {full, 0};
  int witness_size = -1;
  while (!work.empty() && witness_size < 0) {
    Bits cur = work.front();
    work.pop();
    for (const auto& [mask, fam] : constraint) {
      Bits next = cur & mask;
      if (next == cur || prev.count(next)) continue;
      prev[next] = {cur, mask};
      if (next == 0) {
        // reconstruct
        Bits state = 0;
        std::vector<Bits> used;
        while (state != full) {
          auto [par, m] = prev[state];
          used.push_back(m);
          state = par;
        }
        witness_size = static_cast<int>(used.size());
        if (witness_size <= k)
          for (Bits m : used) rep.witness.push_back(constraint.at(m));
        std::reverse(rep.witness.begin(), rep.witness.end());
        break;
      }
      work.push(next);
    }
  }

  if (witness_size > 0 && witness_size <= k) {
    rep.pass = false;
  } else {
    // Failures exist only above the inspected bound.
    rep.pass = true;
    rep.certified_all_sizes = false;
  }
  return rep;
}

DecompositionReport decomposition_check(const SubgroupCollection& c, int d,
                                        int k) {
  DecompositionReport rep;
  rep.segal = check_segal(c, k);
  rep.collection_homology = bar_homology(c.group, c.members, d);
  Subgroup whole(c.group.order());
  for (int i = 0; i < c.group.order(); ++i) whole[i] = i;
  rep.group_homology = bar_homology(c.group, {whole}, d);
  rep.degree_match.resize(d + 1);
  rep.all_match = true;
  for (int i = 0; i <= d; ++i) {
    rep.degree_match[i] =
        rep.collection_homology.groups[i] == rep.group_homology.groups[i];
    if (!rep.degree_match[i]) rep.all_match = false;
  }

  // Nerve of the member poset under strict inclusion.
  Poset p;
  p.size = c.members.size();
  p.less.assign(p.size, std::vector<bool>(p.size, false));
  for (size_t i = 0; i < p.size; ++i)
    for (size_t j = 0; j < p.size; ++j)
      if (i != j &&
          std::includes(c.members[j].begin(), c.members[j].end(),
                        c.members[i].begin(), c.members[i].end()) &&
          c.members[i] != c.members[j])
        p.less[i][j] = true;
  rep.nerve = nerve_homology(p, std::min(d, 3));
  return rep;
}

}  // namespace cantorv
