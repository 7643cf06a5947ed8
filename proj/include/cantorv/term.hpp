#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cantorv/signature.hpp"

namespace cantorv {

// Element of a free Cantor algebra: generator, n-ary merge, or a descent
// component. Alpha(1) and Alpha(2) are the lambda/rho of the binary case.
struct Term {
  enum class Kind : uint8_t { Gen, Mu, Alpha };

  Kind kind = Kind::Gen;
  int index = 1;            // Gen: generator index; Alpha: component, both 1-based
  std::vector<Term> args;   // Mu: n children; Alpha: exactly one

  static Term gen(int i);
  static Term mu(std::vector<Term> children);
  static Term alpha(int k, Term child);

  bool operator==(const Term& o) const;
  bool operator!=(const Term& o) const { return !(*this == o); }

  int depth() const;
  int size() const;
};

// Checks generator indices and branching widths against the signature.
void check_wellformed(const Term& t, const Signature& sig);

// Unique normal form; innermost strategy, single structural pass.
Term reduce(const Term& t);

// Same normal form, computed by contracting leftmost-outermost redexes.
Term reduce_outermost(const Term& t);

bool is_normal(const Term& t);

// Word problem: compare normal forms.
bool equal(const Term& s, const Term& t);

std::string print_term(const Term& t, const Signature& sig);

class Rng;
// Random well-formed term of depth <= max_depth.
Term random_term(const Signature& sig, int max_depth, Rng& rng);

}  // namespace cantorv
