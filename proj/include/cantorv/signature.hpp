#pragma once

#include <stdexcept>
#include <string>

namespace cantorv {

// Arity n >= 2 and rank r >= 0 of a free Cantor algebra C_{n,r}.
struct Signature {
  int arity = 2;
  int rank = 1;

  Signature() = default;
  Signature(int n, int r) : arity(n), rank(r) {
    if (n < 2) throw std::invalid_argument("signature: arity must be >= 2");
    if (r < 0) throw std::invalid_argument("signature: rank must be >= 0");
  }

  bool operator==(const Signature& o) const {
    return arity == o.arity && rank == o.rank;
  }
  bool operator!=(const Signature& o) const { return !(*this == o); }

  std::string str() const {
    return "(n=" + std::to_string(arity) + ", r=" + std::to_string(rank) + ")";
  }
};

inline void require_same_signature(const Signature& a, const Signature& b,
                                   const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": signature mismatch " +
                                a.str() + " vs " + b.str());
}

}  // namespace cantorv
