#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "blockpoly/matrix.hpp"
#include "blockpoly/polynomial.hpp"
#include "blockpoly/util.hpp"

// Brute-force and classical references. Deliberately independent of the
// block-structured engines: nothing here touches decomposition, B-partitions
// or the recurrences.

namespace blockpoly {
namespace oracle {

inline constexpr int kLeibnizPolyOrderCap = 10;   // 10! permutation terms
inline constexpr int kLeibnizValueOrderCap = 12;  // zero-skip cofactor recursion

namespace detail {

inline int parity(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

// Sum over permutations of prod_i (A - lambda I)_{i, sigma(i)}, signed or not.
// Off-diagonal factors are constants; fixed points contribute (a_ii - lambda).
template <class R>
Polynomial<R> leibniz_poly(const Matrix<R>& a, bool signed_sum, int threads) {
  using T = coeff_traits<R>;
  const int n = static_cast<int>(a.order());
  if (n > kLeibnizPolyOrderCap)
    throw SizeError("Leibniz polynomial oracle is capped at order " +
                    std::to_string(kLeibnizPolyOrderCap));
  if (n == 0) return Polynomial<R>::unit();

  // Prefix partitioning: worker w handles permutations whose first entry
  // sigma(0) falls in its slice; partials are combined in slice order.
  std::vector<std::vector<R>> partial(static_cast<std::size_t>(n),
                                      std::vector<R>(static_cast<std::size_t>(n) + 1, T::zero()));
  parallel_chunks(static_cast<std::size_t>(n), threads, [&](std::size_t lo, std::size_t hi, int) {
    std::vector<R> p;
    std::vector<int> fixed;
    for (std::size_t first = lo; first < hi; ++first) {
      auto& acc = partial[first];
      std::vector<int> tail;
      for (int i = 0; i < n; ++i)
        if (i != static_cast<int>(first)) tail.push_back(i);
      std::vector<int> perm(static_cast<std::size_t>(n));
      do {
        perm[0] = static_cast<int>(first);
        std::copy(tail.begin(), tail.end(), perm.begin() + 1);
        R c = T::one();
        bool dead = false;
        fixed.clear();
        for (int i = 0; i < n; ++i) {
          if (perm[i] == i) {
            fixed.push_back(i);
          } else {
            const R& e = a.at(i, perm[i]);
            if (T::is_zero(e)) {
              dead = true;
              break;
            }
            c = c * e;
          }
        }
        if (dead) continue;
        if (signed_sum && parity(perm) < 0) c = T::zero() - c;
        p.assign(1, c);
        for (int i : fixed) {
          p.push_back(T::zero());
          for (std::size_t d = p.size() - 1; d-- > 0;) {
            p[d + 1] -= p[d];
            p[d] = p[d] * a.at(i, i);
          }
        }
        for (std::size_t d = 0; d < p.size(); ++d) acc[d] += p[d];
      } while (std::next_permutation(tail.begin(), tail.end()));
    }
  });
  std::vector<R> acc(static_cast<std::size_t>(n) + 1, T::zero());
  for (const auto& part : partial)
    for (std::size_t d = 0; d < part.size(); ++d) acc[d] += part[d];
  return Polynomial<R>(std::move(acc));
}

// First-row cofactor recursion with zero skipping, over live column indices.
template <class R>
R leibniz_value_rec(const Matrix<R>& a, std::vector<int>& cols, int row, bool signed_sum) {
  using T = coeff_traits<R>;
  if (cols.empty()) return T::one();
  R total = T::zero();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const R& e = a.at(row, cols[k]);
    if (T::is_zero(e)) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    R term = e * leibniz_value_rec(a, rest, row + 1, signed_sum);
    if (signed_sum && k % 2 == 1) term = T::zero() - term;
    total += term;
  }
  return total;
}

template <class R>
R leibniz_value(const Matrix<R>& a, bool signed_sum) {
  const int n = static_cast<int>(a.order());
  if (n > kLeibnizValueOrderCap)
    throw SizeError("Leibniz value oracle is capped at order " +
                    std::to_string(kLeibnizValueOrderCap));
  std::vector<int> cols(static_cast<std::size_t>(n));
  std::iota(cols.begin(), cols.end(), 0);
  return leibniz_value_rec(a, cols, 0, signed_sum);
}

// det/per of the submatrix with the given (0-based, sorted) rows and columns.
template <class R>
R minor_value(const Matrix<R>& a, const std::vector<int>& rows, const std::vector<int>& cols,
              bool signed_sum) {
  Matrix<R> m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m.at(i, j) = a.at(rows[i], cols[j]);
  return leibniz_value(m, signed_sum);
}

}  // namespace detail

template <class R>
Polynomial<R> leibniz_charpoly(const Matrix<R>& a, int threads = 1) {
  return detail::leibniz_poly(a, true, resolve_threads(threads));
}
template <class R>
Polynomial<R> leibniz_permpoly(const Matrix<R>& a, int threads = 1) {
  return detail::leibniz_poly(a, false, resolve_threads(threads));
}
template <class R>
R leibniz_det(const Matrix<R>& a) {
  return detail::leibniz_value(a, true);
}
template <class R>
R leibniz_per(const Matrix<R>& a) {
  return detail::leibniz_value(a, false);
}

// Generalized Laplace expansion along a fixed row subset S (0-based indices):
//   det(A) = sum_T (-1)^{w(S,T)} det(A_{S,T}) det(A'_{S,T}),   w(S,T) = sum(S) + sum(T)
//   per(A) = sum_T per(A_{S,T}) per(A'_{S,T})
// with T running over all |S|-subsets of the columns. Index sums are taken
// 1-based as in the source statement (the parity is the same either way).
template <class R>
std::pair<R, R> laplace_expand(const Matrix<R>& a, const std::vector<int>& s_rows) {
  using T = coeff_traits<R>;
  const int n = static_cast<int>(a.order());
  if (n > 8) throw SizeError("laplace_expand is capped at order 8");
  std::vector<int> s = s_rows;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  const int k = static_cast<int>(s.size());
  if (k == 0 || k >= n) throw DomainError("laplace_expand requires 0 < |S| < n");
  for (int r : s)
    if (r < 0 || r >= n) throw DomainError("laplace_expand: row index out of range");

  std::vector<int> s_comp;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) s_comp.push_back(i);
  long long w_s = 0;
  for (int r : s) w_s += r + 1;

  R det_total = T::zero(), per_total = T::zero();
  std::vector<int> t(static_cast<std::size_t>(k));
  std::iota(t.begin(), t.end(), 0);
  while (true) {
    std::vector<int> t_comp;
    for (int i = 0; i < n; ++i)
      if (!std::binary_search(t.begin(), t.end(), i)) t_comp.push_back(i);
    long long w = w_s;
    for (int c : t) w += c + 1;
    R d = detail::minor_value(a, s, t, true) * detail::minor_value(a, s_comp, t_comp, true);
    if (w % 2 != 0) d = T::zero() - d;
    det_total += d;
    per_total += detail::minor_value(a, s, t, false) * detail::minor_value(a, s_comp, t_comp, false);
    // next k-combination of {0..n-1}
    int i = k - 1;
    while (i >= 0 && t[i] == n - k + i) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return {det_total, per_total};
}

// Classical trace-iteration reference for float-mode characteristic
// polynomials, converted to the det(A - lambda I) convention by the global
// (-1)^n sign.
inline Polynomial<Complex> faddeev_leverrier(const Matrix<Complex>& a) {
  const int n = static_cast<int>(a.order());
  if (n > 30) throw SizeError("faddeev_leverrier is capped at order 30");
  if (n == 0) return Polynomial<Complex>::unit();
  // p(lambda) = det(lambda I - A) = lambda^n + c_{n-1} lambda^{n-1} + ... + c_0
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
  c[static_cast<std::size_t>(n)] = Complex{1.0, 0.0};
  Matrix<Complex> m = a;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      for (int i = 0; i < n; ++i) m.at(i, i) += c[static_cast<std::size_t>(n - k + 1)];
      m = a * m;
    }
    Complex tr{0.0, 0.0};
    for (int i = 0; i < n; ++i) tr += m.at(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr / static_cast<double>(k);
  }
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  for (auto& coeff : c) coeff *= sign;
  return Polynomial<Complex>(std::move(c));
}

// Comparison outcome of one engine-vs-oracle check.
struct OracleReport {
  std::string subject;       // input identifier
  std::string quantity;      // charpoly | permpoly | det | per
  std::string engine;        // which engine produced engine_value
  std::string engine_value;  // printable forms
  std::string oracle_value;
  bool equal = false;
  double max_deviation = 0.0;  // 0 in exact mode
};

template <class R>
OracleReport compare_polynomials(std::string subject, std::string quantity, std::string engine,
                                 const Polynomial<R>& engine_value, const Polynomial<R>& oracle_value,
                                 double rel_tol) {
  using T = coeff_traits<R>;
  OracleReport r;
  r.subject = std::move(subject);
  r.quantity = std::move(quantity);
  r.engine = std::move(engine);
  r.engine_value = engine_value.to_string();
  r.oracle_value = oracle_value.to_string();
  r.equal = Polynomial<R>::approx_equal(engine_value, oracle_value, T::exact ? 0.0 : rel_tol);
  if (!r.equal || !T::exact) {
    double dev = 0.0;
    const std::size_t n = std::max(engine_value.coeffs().size(), oracle_value.coeffs().size());
    for (std::size_t i = 0; i < n; ++i)
      dev = std::max(dev, T::magnitude(engine_value.coeff(i) - oracle_value.coeff(i)));
    r.max_deviation = dev;
  }
  return r;
}

template <class R>
OracleReport compare_values(std::string subject, std::string quantity, std::string engine,
                            const R& engine_value, const R& oracle_value, double rel_tol) {
  using T = coeff_traits<R>;
  OracleReport r;
  r.subject = std::move(subject);
  r.quantity = std::move(quantity);
  r.engine = std::move(engine);
  r.engine_value = T::to_string(engine_value);
  r.oracle_value = T::to_string(oracle_value);
  const double dev = T::magnitude(engine_value - oracle_value);
  if (T::exact) {
    r.equal = T::is_zero(engine_value - oracle_value);
    r.max_deviation = r.equal ? 0.0 : dev;
  } else {
    const double scale = std::max({1.0, T::magnitude(engine_value), T::magnitude(oracle_value)});
    r.equal = dev <= rel_tol * scale;
    r.max_deviation = dev;
  }
  return r;
}

}  // namespace oracle
}  // namespace blockpoly
