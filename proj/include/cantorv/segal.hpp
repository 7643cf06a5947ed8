#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cantorv/group.hpp"
#include "cantorv/poset.hpp"

namespace cantorv {

struct SubgroupCollection {
  FiniteGroup group;
  std::vector<Subgroup> members;  // verified subgroups
};
SubgroupCollection make_collection(FiniteGroup g, std::vector<Subgroup> members);

struct FamilyMember {
  int element;    // g_j
  int subgroup;   // index into members
};

struct SegalReport {
  bool pass = false;
  int bound = 0;                 // family sizes certified up to this bound
  bool certified_all_sizes = false;  // one g satisfies every pair at once
  std::vector<FamilyMember> witness;  // minimal failing family when !pass
  std::string str(const SubgroupCollection& c) const;
};

// Exhaustive over families of size <= k (modulo repetition, which never
// affects satisfiability). A family (g_j, S_j) is satisfiable iff the
// coset unions  U_{S' >= S_j} g_j S'  have a common element.
SegalReport check_segal(const SubgroupCollection& c, int k);

struct DecompositionReport {
  SegalReport segal;
  HomologyResult collection_homology;  // H_* of the union subcomplex
  HomologyResult group_homology;       // H_*(BG)
  std::vector<bool> degree_match;
  bool all_match = false;
  HomologyResult nerve;  // reduced homology of the member poset
};

// Runs check_segal and compares the union-subcomplex homology with
// H_*(BG) directly, degree by degree, up to d.
DecompositionReport decomposition_check(const SubgroupCollection& c, int d,
                                        int k);

}  // namespace cantorv
