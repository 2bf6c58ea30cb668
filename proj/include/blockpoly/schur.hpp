#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "blockpoly/linalg.hpp"
#include "blockpoly/poly_engine.hpp"
#include "blockpoly/util.hpp"

namespace blockpoly {

// Single-vertex elimination for determinants of digraphs without cut-vertices.
// Every level removes one pivot vertex v (matrix written with v last):
//   case 1: A1 invertible          det(A) = det(A1) (d - c A1^{-1} b)
//   case 2: A1 singular, d != 0    det(A) = d det(A1 - b (1/d) c)
//   case 3: A1 singular, d == 0    det(A) = det(A1 - b c)
// Whenever the current digraph has cut-vertices, control returns to the
// block-structured determinant.

enum class SchurCase { Base, BlockHandoff, Case1Invertible, Case2SingularDNonzero, Case3SingularDZero };

inline const char* schur_case_name(SchurCase c) {
  switch (c) {
    case SchurCase::Base: return "base";
    case SchurCase::BlockHandoff: return "block-handoff";
    case SchurCase::Case1Invertible: return "A1-invertible";
    case SchurCase::Case2SingularDNonzero: return "A1-singular-d-nonzero";
    case SchurCase::Case3SingularDZero: return "A1-singular-d-zero";
  }
  return "?";
}

template <class R>
struct EliminationStep {
  VertexId pivot = -1;  // -1 for base / handoff levels
  SchurCase kind = SchurCase::Base;
  Matrix<R> reduced;    // the order-(n-1) matrix handed to the next level
};

enum class PivotRule { Auto, Exhaustive, MaxDegree };

struct SchurOptions {
  PivotRule rule = PivotRule::Auto;
  double singular_rel_tol = 1e-9;        // |det A1| <= tol * (max row norm)^(n-1)
  int exhaustive_cap = 12;               // Auto switches to MaxDegree above this order
  std::vector<VertexId> forced_pivots;   // test hook: per-level preferred pivots
  int threads = 1;
};

// Exhaustive vertex-selection rule: the pivot maximizing the number of blocks
// of G minus v; ties broken by smallest vertex id.
template <class R>
VertexId best_elimination_vertex(const WeightedDigraph<R>& g, int threads = 1) {
  if (g.order() < 2) throw DomainError("best_elimination_vertex requires at least 2 vertices");
  const auto& ids = g.vertices();
  std::vector<std::size_t> counts(ids.size(), 0);
  parallel_chunks(ids.size(), resolve_threads(threads), [&](std::size_t lo, std::size_t hi, int) {
    for (std::size_t i = lo; i < hi; ++i)
      counts[i] = decompose(g.without({ids[i]})).block_count();
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < ids.size(); ++i)
    if (counts[i] > counts[best]) best = i;
  return ids[best];
}

template <class R>
std::size_t blocks_after_removal(const WeightedDigraph<R>& g, VertexId v) {
  return decompose(g.without({v})).block_count();
}

// Max-degree pivot. Ties among maximum-degree vertices are broken by the
// block count of G minus v (then by smallest id), so the rule stands for the
// strongest tie-insensitive form of the small-order observation.
template <class R>
VertexId max_degree_vertex(const WeightedDigraph<R>& g) {
  if (g.order() == 0) throw DomainError("max_degree_vertex on a null graph");
  int best_deg = 0;
  for (VertexId v : g.vertices()) best_deg = std::max(best_deg, g.undirected_degree(v));
  VertexId best = -1;
  std::size_t best_blocks = 0;
  for (VertexId v : g.vertices()) {
    if (g.undirected_degree(v) != best_deg) continue;
    const std::size_t blocks = g.order() >= 2 ? blocks_after_removal(g, v) : 1;
    if (best == -1 || blocks > best_blocks) {
      best = v;
      best_blocks = blocks;
    }
  }
  return best;
}

// The degree heuristic vs the exhaustive rule.
struct HeuristicReport {
  VertexId max_degree_vertex = -1;
  int max_degree = 0;
  std::size_t blocks_after_heuristic = 0;
  VertexId exhaustive_vertex = -1;
  std::size_t blocks_after_exhaustive = 0;
  bool agree = false;  // the heuristic pivot achieves the maximum block count
};

template <class R>
HeuristicReport degree_heuristic_report(const WeightedDigraph<R>& g) {
  if (g.order() < 2) throw DomainError("degree_heuristic_report requires at least 2 vertices");
  HeuristicReport r;
  r.max_degree_vertex = max_degree_vertex(g);
  r.max_degree = g.undirected_degree(r.max_degree_vertex);
  r.blocks_after_heuristic = blocks_after_removal(g, r.max_degree_vertex);
  r.exhaustive_vertex = best_elimination_vertex(g);
  r.blocks_after_exhaustive = blocks_after_removal(g, r.exhaustive_vertex);
  r.agree = r.blocks_after_heuristic == r.blocks_after_exhaustive;
  return r;
}

namespace detail {

template <class R>
double max_abs_entry(const Matrix<R>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, coeff_traits<R>::magnitude(a.at(i, j)));
  return m;
}

template <class R>
VertexId pick_pivot(const WeightedDigraph<R>& g, const SchurOptions& opt) {
  for (VertexId v : opt.forced_pivots)
    if (g.has_vertex(v)) return v;
  switch (opt.rule) {
    case PivotRule::Exhaustive:
      return best_elimination_vertex(g, opt.threads);
    case PivotRule::MaxDegree:
      return max_degree_vertex(g);
    case PivotRule::Auto:
    default:
      return g.order() <= static_cast<std::size_t>(opt.exhaustive_cap)
                 ? best_elimination_vertex(g, opt.threads)
                 : max_degree_vertex(g);
  }
}

// A1 (pivot removed, label order), b = column into v, c = row out of v, d = loop.
template <class R>
void split_at_pivot(const WeightedDigraph<R>& g, VertexId v, Matrix<R>& a1, std::vector<R>& b,
                    std::vector<R>& c, R& d) {
  using T = coeff_traits<R>;
  std::vector<VertexId> rest;
  for (VertexId u : g.vertices())
    if (u != v) rest.push_back(u);
  const std::size_t m = rest.size();
  a1 = Matrix<R>(m, m);
  b.assign(m, T::zero());
  c.assign(m, T::zero());
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      if (const R* w = g.edge(rest[i], rest[j])) a1.at(i, j) = *w;
    if (const R* w = g.edge(rest[i], v)) b[i] = *w;
    if (const R* w = g.edge(v, rest[i])) c[i] = *w;
  }
  d = g.loop_weight(v);
}

inline bool a1_singular(const Matrix<BigInt>& a1, double, BigInt& det_out) {
  det_out = bareiss_det(a1);
  return det_out.is_zero();
}

inline bool a1_singular(const Matrix<Complex>& a1, double rel_tol, Complex& det_out) {
  det_out = lu_det(lu_decompose(a1));
  double max_row_norm = 0.0;
  for (std::size_t i = 0; i < a1.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a1.cols(); ++j) s += std::abs(a1.at(i, j));
    max_row_norm = std::max(max_row_norm, s);
  }
  const double bound = rel_tol * std::pow(max_row_norm, static_cast<double>(a1.order()));
  return std::abs(det_out) <= bound;
}

inline bool d_is_zero(const BigInt& d, double) { return d.is_zero(); }
inline bool d_is_zero(const Complex& d, double scale) { return std::abs(d) <= 1e-12 * std::max(1.0, scale); }

template <class R>
R det_schur_connected(const WeightedDigraph<R>& g, const SchurOptions& opt,
                      std::vector<EliminationStep<R>>* trace);

template <class R>
R det_schur_impl(const WeightedDigraph<R>& g, const SchurOptions& opt,
                 std::vector<EliminationStep<R>>* trace) {
  using T = coeff_traits<R>;
  auto comps = g.components();
  if (comps.size() <= 1) return det_schur_connected(g, opt, trace);
  R total = T::one();
  for (const auto& comp : comps) total = total * det_schur_connected(comp, opt, trace);
  return total;
}

template <class R>
R det_schur_connected(const WeightedDigraph<R>& g, const SchurOptions& opt,
                      std::vector<EliminationStep<R>>* trace) {
  using T = coeff_traits<R>;
  const std::size_t n = g.order();
  if (n == 0) return T::one();
  Matrix<R> a = g.to_matrix();
  if (n <= 2) {
    if (trace) trace->push_back({-1, SchurCase::Base, a});
    if (n == 1) return a.at(0, 0);
    return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
  }
  BlockDecomposition d = decompose(g);
  if (!d.cut_vertices.empty()) {
    if (trace) trace->push_back({-1, SchurCase::BlockHandoff, a});
    return determinant(g);
  }

  const VertexId pivot = pick_pivot(g, opt);
  Matrix<R> a1;
  std::vector<R> b, c;
  R dd = T::zero();
  split_at_pivot(g, pivot, a1, b, c, dd);

  R det_a1 = T::zero();
  const bool singular = a1_singular(a1, opt.singular_rel_tol, det_a1);
  const std::size_t m = a1.order();

  if (!singular) {
    if constexpr (coeff_traits<R>::exact) {
      // Exact mode avoids the inversion: fraction-free elimination on A itself.
      if (trace) trace->push_back({pivot, SchurCase::Case1Invertible, a1});
      std::vector<VertexId> order;
      for (VertexId u : g.vertices())
        if (u != pivot) order.push_back(u);
      order.push_back(pivot);
      Matrix<R> full(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (const R* w = g.edge(order[i], order[j])) full.at(i, j) = *w;
      return bareiss_det(full);
    } else {
      if (trace) trace->push_back({pivot, SchurCase::Case1Invertible, a1});
      auto lu = lu_decompose(a1);
      auto x = lu_solve(lu, b);
      R s = dd;
      for (std::size_t i = 0; i < m; ++i) s -= c[i] * x[i];
      return det_schur_impl(g.without({pivot}), opt, trace) * s;
    }
  }

  const double scale = max_abs_entry(a);
  if (!d_is_zero(dd, scale)) {
    // case 2
    Matrix<R> reduced(m, m);
    if constexpr (coeff_traits<R>::exact) {
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) reduced.at(i, j) = dd * a1.at(i, j) - b[i] * c[j];
      if (trace) trace->push_back({pivot, SchurCase::Case2SingularDNonzero, reduced});
      R sub = det_schur_impl(WeightedDigraph<R>::from_matrix(reduced), opt, trace);
      BigInt denom(1);
      for (std::size_t i = 0; i + 2 < n; ++i) denom *= dd;
      return sub.divide_exact(denom);
    } else {
      const R inv_d = T::one() / dd;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) reduced.at(i, j) = a1.at(i, j) - b[i] * inv_d * c[j];
      if (trace) trace->push_back({pivot, SchurCase::Case2SingularDNonzero, reduced});
      return dd * det_schur_impl(WeightedDigraph<R>::from_matrix(reduced), opt, trace);
    }
  }
  // case 3: det [[A1,b],[c,0]] = det(A1 - bc) - det(A1). The subtracted term
  // is exactly zero when A1 is truly singular; keeping it makes the step an
  // identity even when the float singularity predicate fires on a small but
  // nonzero determinant.
  Matrix<R> reduced(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) reduced.at(i, j) = a1.at(i, j) - b[i] * c[j];
  if (trace) trace->push_back({pivot, SchurCase::Case3SingularDZero, reduced});
  return det_schur_impl(WeightedDigraph<R>::from_matrix(reduced), opt, trace) - det_a1;
}

}  // namespace detail

template <class R>
R det_schur(const WeightedDigraph<R>& g, const SchurOptions& opt = {},
            std::vector<EliminationStep<R>>* trace = nullptr) {
  return detail::det_schur_impl(g, opt, trace);
}

}  // namespace blockpoly
