#pragma once

#include <string>
#include <vector>

#include "cantorv/chain.hpp"

namespace cantorv {

// Finite group by Cayley table; element 0 is the identity.
struct FiniteGroup {
  std::string name;
  std::vector<std::vector<int>> mul;  // mul[a][b] = a*b
  std::vector<int> inv;
  std::vector<std::string> labels;

  int order() const { return static_cast<int>(mul.size()); }
  int times(int a, int b) const { return mul[a][b]; }
};

// Validates associativity, identity at 0, and inverses.
FiniteGroup make_group(std::string name, std::vector<std::vector<int>> mul,
                       std::vector<std::string> labels = {});

// Z2, Z3, Z4, V4, S3, D4, Q8.
FiniteGroup builtin_group(const std::string& name);
std::vector<std::string> builtin_group_names();

// Cayley-table CSV: one row per element, entries are element labels;
// first row's first entry is the identity.
FiniteGroup group_from_csv(const std::string& csv_text,
                           const std::string& name);

using Subgroup = std::vector<int>;  // sorted element indices

bool is_subgroup(const FiniteGroup& g, const Subgroup& s);
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens);
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

// Union-of-subgroups subcomplex of the bar construction of BG: normalized
// p-chains are tuples [h_1|...|h_p] of nonidentity elements lying in a
// single member of members; with members = {G} this is the full bar
// complex. Degrees 0..d.
ChainComplex bar_subcomplex(const FiniteGroup& g,
                            const std::vector<Subgroup>& members, int d);

// H_*(BG) up to degree d (builds one extra bar degree internally).
HomologyResult bar_homology(const FiniteGroup& g,
                            const std::vector<Subgroup>& members, int d);

}  // namespace cantorv
