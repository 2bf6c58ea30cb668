#pragma once

#include <cmath>
#include <vector>

#include "blockpoly/bigint.hpp"
#include "blockpoly/matrix.hpp"

namespace blockpoly {

// LU with partial pivoting over complex doubles; factors kept for solves.
struct LuFactors {
  Matrix<Complex> lu;
  std::vector<int> perm;
  int sign = 1;
  bool singular = false;  // an exactly zero pivot appeared
};

inline LuFactors lu_decompose(Matrix<Complex> a) {
  const int n = static_cast<int>(a.order());
  LuFactors f;
  f.perm.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) f.perm[static_cast<std::size_t>(i)] = i;
  for (int k = 0; k < n; ++k) {
    int best = k;
    double best_mag = std::abs(a.at(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double mag = std::abs(a.at(i, k));
      if (mag > best_mag) {
        best = i;
        best_mag = mag;
      }
    }
    if (best_mag == 0.0) {
      f.singular = true;
      continue;
    }
    if (best != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(best, j));
      std::swap(f.perm[static_cast<std::size_t>(k)], f.perm[static_cast<std::size_t>(best)]);
      f.sign = -f.sign;
    }
    for (int i = k + 1; i < n; ++i) {
      const Complex m = a.at(i, k) / a.at(k, k);
      a.at(i, k) = m;
      for (int j = k + 1; j < n; ++j) a.at(i, j) -= m * a.at(k, j);
    }
  }
  f.lu = std::move(a);
  return f;
}

inline Complex lu_det(const LuFactors& f) {
  if (f.singular) return {0.0, 0.0};
  Complex d{static_cast<double>(f.sign), 0.0};
  for (std::size_t i = 0; i < f.lu.order(); ++i) d *= f.lu.at(i, i);
  return d;
}

// Solve L U x = P b. Requires a non-singular factorization.
inline std::vector<Complex> lu_solve(const LuFactors& f, const std::vector<Complex>& b) {
  const int n = static_cast<int>(f.lu.order());
  std::vector<Complex> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(f.perm[static_cast<std::size_t>(i)])];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) x[static_cast<std::size_t>(i)] -= f.lu.at(i, j) * x[static_cast<std::size_t>(j)];
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) x[static_cast<std::size_t>(i)] -= f.lu.at(i, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] /= f.lu.at(i, i);
  }
  return x;
}

// Fraction-free integer determinant (Bareiss). Every division is exact.
inline BigInt bareiss_det(Matrix<BigInt> a) {
  const int n = static_cast<int>(a.order());
  if (n == 0) return BigInt(1);
  int sign = 1;
  BigInt prev(1);
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a.at(i, k).is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row == -1) return BigInt(0);
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)).divide_exact(prev);
      a.at(i, k) = BigInt(0);
    }
    prev = a.at(k, k);
  }
  BigInt det = a.at(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

}  // namespace blockpoly
