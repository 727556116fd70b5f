#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace braesslab {

using BigInt = mpz_class;
using Rational = mpq_class;

// Dense row-major matrix of exact scalars.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

std::string to_string(const BigInt& value);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// Rational from a decimal or "p/q" string, e.g. "0.5", "1/2", "-3".
Rational parse_rational(const std::string& text);

int sign(const Rational& value);
int sign(const BigInt& value);

// Exact determinant of a square integer matrix by fraction-free (Bareiss) elimination.
BigInt bareiss_determinant(Matrix<BigInt> a);

struct SolveResult {
  std::vector<Rational> x;
  Rational determinant;
};

// Solves a x = b over the rationals by Gaussian elimination that skips zero
// entries, so sparse systems (paths, cycles, stars) stay cheap. The
// determinant is the signed product of the pivots.
// Throws InvalidParameter if a is singular.
SolveResult solve_exact(Matrix<Rational> a, std::vector<Rational> b);

struct InverseResult {
  Matrix<Rational> inverse;
  Rational determinant;
};

// Gauss-Jordan inverse over the rationals. Throws InvalidParameter if singular.
InverseResult invert_exact(Matrix<Rational> a);

}  // namespace braesslab
