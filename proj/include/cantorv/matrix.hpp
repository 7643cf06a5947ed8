#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace cantorv {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix with arbitrary-precision entries; SNF intermediate
// values overflow fixed width even on small inputs.
struct IntMatrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<Int> data;  // row-major

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), data(r * c, 0) {}

  Int& at(size_t i, size_t j) { return data[i * cols + j]; }
  const Int& at(size_t i, size_t j) const { return data[i * cols + j]; }

  static IntMatrix identity(size_t n);
  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
  }

  std::string str() const;
};

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
Int determinant(const IntMatrix& a);  // fraction-free Gaussian elimination

struct SnfResult {
  IntMatrix d;  // diagonal, divisibility chain, nonnegative
  IntMatrix u;  // unimodular, u * m * v == d
  IntMatrix v;
};

SnfResult snf(const IntMatrix& m);

// Certificate check: u*m*v == d, det(u), det(v) in {1,-1}, divisibility.
bool verify_snf(const IntMatrix& m, const SnfResult& s);

size_t snf_rank(const IntMatrix& d);

}  // namespace cantorv
