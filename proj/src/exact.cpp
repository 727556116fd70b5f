#include "braesslab/exact.hpp"

#include <algorithm>
#include <utility>

#include "braesslab/errors.hpp"

namespace braesslab {

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

double to_double(const Rational& value) { return value.get_d(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidParameter("empty rational literal");
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      Rational r(text);
      if (r.get_den() == 0) throw InvalidParameter("zero denominator in '" + text + "'");
      r.canonicalize();
      return r;
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") throw InvalidParameter("bad literal '" + text + "'");
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
    Rational r(BigInt(digits), den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InvalidParameter("bad rational literal '" + text + "'");
  }
}

int sign(const Rational& value) { return sgn(value); }
int sign(const BigInt& value) { return sgn(value); }

BigInt bareiss_determinant(Matrix<BigInt> a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw InvalidParameter("determinant of a non-square matrix");
  if (n == 0) return 1;
  BigInt prev = 1;
  int det_sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      det_sign = -det_sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  BigInt det = a(n - 1, n - 1);
  if (det_sign < 0) det = -det;
  return det;
}

namespace {

// Indices j > k with a(k, j) != 0.
std::vector<std::size_t> nonzero_tail(const Matrix<Rational>& a, std::size_t k) {
  std::vector<std::size_t> nz;
  for (std::size_t j = k + 1; j < a.cols(); ++j)
    if (a(k, j) != 0) nz.push_back(j);
  return nz;
}

std::size_t find_pivot(const Matrix<Rational>& a, std::size_t k) {
  for (std::size_t p = k; p < a.rows(); ++p)
    if (a(p, k) != 0) return p;
  throw InvalidParameter("singular matrix");
}

}  // namespace

SolveResult solve_exact(Matrix<Rational> a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (n != a.cols() || b.size() != n) throw InvalidParameter("solve_exact: dimension mismatch");
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = find_pivot(a, k);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(b[k], b[p]);
      det = -det;
    }
    det *= a(k, k);
    const auto nz = nonzero_tail(a, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational factor = a(i, k) / a(k, k);
      a(i, k) = 0;
      for (std::size_t j : nz) a(i, j) -= factor * a(k, j);
      if (b[k] != 0) b[i] -= factor * b[k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc = b[k];
    for (std::size_t j = k + 1; j < n; ++j)
      if (a(k, j) != 0 && x[j] != 0) acc -= a(k, j) * x[j];
    x[k] = acc / a(k, k);
  }
  return {std::move(x), std::move(det)};
}

InverseResult invert_exact(Matrix<Rational> a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw InvalidParameter("invert_exact: non-square matrix");
  Matrix<Rational> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = find_pivot(a, k);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
      det = -det;
    }
    const Rational pivot = a(k, k);
    det *= pivot;
    for (std::size_t j = 0; j < n; ++j) {
      if (a(k, j) != 0) a(k, j) /= pivot;
      if (inv(k, j) != 0) inv(k, j) /= pivot;
    }
    const auto nz = nonzero_tail(a, k);
    std::vector<std::size_t> nz_inv;
    for (std::size_t j = 0; j < n; ++j)
      if (inv(k, j) != 0) nz_inv.push_back(j);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational factor = a(i, k);
      a(i, k) = 0;
      for (std::size_t j : nz) a(i, j) -= factor * a(k, j);
      for (std::size_t j : nz_inv) inv(i, j) -= factor * inv(k, j);
    }
  }
  return {std::move(inv), std::move(det)};
}

}  // namespace braesslab
