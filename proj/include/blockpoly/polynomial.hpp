#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "blockpoly/coeff.hpp"
#include "blockpoly/errors.hpp"

namespace blockpoly {

// Dense univariate polynomial in lambda, constant term first. The value domain
// of the characteristic and permanent polynomials: phi(G) = det(A - lambda I),
// psi(G) = per(A - lambda I). The unit polynomial carries the null-graph
// convention phi(null) = psi(null) = 1.
template <class R>
class Polynomial {
 public:
  using traits = coeff_traits<R>;

  Polynomial() = default;  // the zero polynomial
  explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial unit() { return constant(traits::one()); }
  static Polynomial constant(R c) {
    Polynomial p;
    p.c_.push_back(std::move(c));
    p.normalize();
    return p;
  }
  // (lambda - a)
  static Polynomial lambda_minus(const R& a) {
    Polynomial p;
    p.c_ = {traits::zero() - a, traits::one()};
    p.normalize();
    return p;
  }
  // (a - lambda)
  static Polynomial minus_lambda_plus(const R& a) {
    Polynomial p;
    p.c_ = {a, traits::zero() - traits::one()};
    p.normalize();
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial reported as -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : traits::zero(); }
  const R& leading() const { return c_.back(); }

  R eval_at_zero() const { return c_.empty() ? traits::zero() : c_[0]; }
  R eval(const R& x) const {
    R acc = traits::zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), traits::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), traits::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, traits::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (traits::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const R& s) const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = c * s;
    r.normalize();
    return r;
  }
  Polynomial operator-() const { return scaled(traits::zero() - traits::one()); }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

  // Float-mode comparison: max coefficient deviation relative to the larger of
  // 1 and the largest coefficient magnitude. Exact mode compares exactly.
  static bool approx_equal(const Polynomial& a, const Polynomial& b, double rel_tol) {
    if constexpr (traits::exact) {
      (void)rel_tol;
      return a == b;
    } else {
      double scale = 1.0;
      for (const auto& c : a.c_) scale = std::max(scale, traits::magnitude(c));
      for (const auto& c : b.c_) scale = std::max(scale, traits::magnitude(c));
      std::size_t n = std::max(a.c_.size(), b.c_.size());
      for (std::size_t i = 0; i < n; ++i)
        if (traits::magnitude(a.coeff(i) - b.coeff(i)) > rel_tol * scale) return false;
      return true;
    }
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (traits::is_zero(c_[i]) && c_.size() > 1) continue;
      if (!s.empty()) s += " + ";
      s += "(" + traits::to_string(c_[i]) + ")";
      if (i == 1) s += "*x";
      if (i > 1) s += "*x^" + std::to_string(i);
    }
    return s;
  }

 private:
  std::vector<R> c_;

  // Trailing-coefficient trimming. In float mode a coefficient counts as zero
  // when |c_i| <= 1e-12 * max|c_j|.
  void normalize() {
    if constexpr (traits::exact) {
      while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
    } else {
      double scale = 0.0;
      for (const auto& c : c_) scale = std::max(scale, traits::magnitude(c));
      const double cut = 1e-12 * scale;
      while (!c_.empty() && traits::magnitude(c_.back()) <= cut) c_.pop_back();
    }
  }
};

}  // namespace blockpoly
