#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "blockpoly/bpartition.hpp"
#include "blockpoly/polynomial.hpp"

namespace blockpoly {

// Signed (characteristic/determinant) vs unsigned (permanent) expansion.
enum class PolyKind { Char, Perm };

// One removed-cut-vertex-set term of the closed-form sum: multiplier
// L = prod (lambda - alpha_t)(d_t - 1) over the removed vertices (d, alpha read
// from the original digraph) and the total S of all summands of the residual.
template <class R>
struct BPartitionSummand {
  std::vector<std::vector<VertexId>> parts;  // aligned with the decomposition blocks
  Polynomial<R> value;
};

template <class R>
struct TheoremTerm {
  std::vector<VertexId> removed;
  Polynomial<R> multiplier;
  Polynomial<R> summand_total;
  std::vector<BPartitionSummand<R>> summands;
};

namespace detail {

inline std::vector<VertexId> sorted_difference(const std::vector<VertexId>& a,
                                               const std::vector<VertexId>& b) {
  std::vector<VertexId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline int permutation_parity(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

// Plain Leibniz expansion of det/per(A - lambda I): sum over all n!
// permutations; off-diagonal factors are constants, diagonal fixed points
// contribute the linear factors (a_ii - lambda).
template <class R>
Polynomial<R> expand_poly_leibniz(const Matrix<R>& a, PolyKind kind) {
  using T = coeff_traits<R>;
  const int n = static_cast<int>(a.order());
  if (n == 0) return Polynomial<R>::unit();
  std::vector<R> acc(static_cast<std::size_t>(n) + 1, T::zero());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<R> p;
  do {
    R c = T::one();
    bool dead = false;
    int fixed_count = 0;
    static thread_local std::vector<int> fixed;
    fixed.clear();
    for (int i = 0; i < n; ++i) {
      if (perm[i] == i) {
        fixed.push_back(i);
        ++fixed_count;
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
    if (kind == PolyKind::Char && permutation_parity(perm) < 0) c = T::zero() - c;
    p.assign(1, c);
    p.reserve(static_cast<std::size_t>(fixed_count) + 1);
    for (int i : fixed) {
      p.push_back(T::zero());
      for (std::size_t d = p.size() - 1; d-- > 0;) {
        p[d + 1] -= p[d];
        p[d] = p[d] * a.at(i, i);
      }
    }
    for (std::size_t d = 0; d < p.size(); ++d) acc[d] += p[d];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial<R>(std::move(acc));
}

// Leibniz with memoized minors: top-down first-row expansion over unused
// column masks. Sparse entries prune branches.
template <class R>
Polynomial<R> expand_poly_memo(const Matrix<R>& a, PolyKind kind) {
  using T = coeff_traits<R>;
  const int n = static_cast<int>(a.order());
  const uint32_t full = n == 32 ? 0xffffffffu : (uint32_t(1) << n) - 1;
  std::unordered_map<uint32_t, Polynomial<R>> memo;
  auto rec = [&](auto&& self, uint32_t mask) -> const Polynomial<R>& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Polynomial<R> total;
    if (mask == full) {
      total = Polynomial<R>::unit();
    } else {
      const int r = std::popcount(mask);
      for (int j = 0; j < n; ++j) {
        if (mask & (uint32_t(1) << j)) continue;
        Polynomial<R> e;
        if (r == j) {
          e = Polynomial<R>::minus_lambda_plus(a.at(r, j));
        } else {
          if (T::is_zero(a.at(r, j))) continue;
          e = Polynomial<R>::constant(a.at(r, j));
        }
        const int below = j - std::popcount(mask & ((uint32_t(1) << j) - 1));
        const Polynomial<R>& sub = self(self, mask | (uint32_t(1) << j));
        Polynomial<R> term = e * sub;
        if (kind == PolyKind::Char && below % 2 == 1) term = -term;
        total += term;
      }
    }
    return memo.emplace(mask, std::move(total)).first->second;
  };
  return rec(rec, 0);
}

inline constexpr int kLeibnizPolyCap = 7;
inline constexpr int kMemoPolyCap = 20;
inline constexpr int kValueCap = 24;

// det/per(A - lambda I) of a cut-vertex-free digraph. Plain Leibniz up to
// order 7, memoized minors above.
template <class R>
Polynomial<R> base_poly(const WeightedDigraph<R>& g, PolyKind kind) {
  const int n = static_cast<int>(g.order());
  if (n > kMemoPolyCap)
    throw SizeError("cut-vertex-free digraph of order " + std::to_string(n) +
                    " exceeds the exact polynomial expansion cap (" + std::to_string(kMemoPolyCap) + ")");
  Matrix<R> a = g.to_matrix();
  return n <= kLeibnizPolyCap ? expand_poly_leibniz(a, kind) : expand_poly_memo(a, kind);
}

// Value-domain det/per of a cut-vertex-free digraph via memoized minors.
template <class R>
R base_value(const WeightedDigraph<R>& g, PolyKind kind) {
  using T = coeff_traits<R>;
  const int n = static_cast<int>(g.order());
  if (n > kValueCap)
    throw SizeError("cut-vertex-free digraph of order " + std::to_string(n) +
                    " exceeds the value expansion cap (" + std::to_string(kValueCap) + ")");
  if (n == 0) return T::one();
  Matrix<R> a = g.to_matrix();
  const uint32_t full = (uint32_t(1) << n) - 1;
  std::unordered_map<uint32_t, R> memo;
  auto rec = [&](auto&& self, uint32_t mask) -> R {
    if (mask == full) return T::one();
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    const int r = std::popcount(mask);
    R total = T::zero();
    for (int j = 0; j < n; ++j) {
      if (mask & (uint32_t(1) << j)) continue;
      const R& e = a.at(r, j);
      if (T::is_zero(e)) continue;
      R term = e * self(self, mask | (uint32_t(1) << j));
      const int below = j - std::popcount(mask & ((uint32_t(1) << j) - 1));
      if (kind == PolyKind::Char && below % 2 == 1) term = T::zero() - term;
      total += term;
    }
    memo.emplace(mask, total);
    return total;
  };
  return rec(rec, 0);
}

}  // namespace detail

// Computes phi/psi of induced subdigraphs of one fixed digraph by the two
// block-structured routes. One instance = one memo domain; subset results are
// cached across the nested recursion.
template <class R>
class PolyEngine {
 public:
  PolyEngine(const WeightedDigraph<R>& g, PolyKind kind) : g_(&g), kind_(kind) {}

  // Closed-form cut-vertex-removal sum, components factored first.
  Polynomial<R> theorem() { return phi_theorem(g_->vertices()); }

  // The same sum run directly over the whole digraph with the per-term
  // breakdown captured (removal groups ordered by |removed|, then by vertex
  // ids). Valid for disconnected inputs as well.
  Polynomial<R> theorem_terms(std::vector<TheoremTerm<R>>& out) {
    out.clear();
    return theorem_sum(*g_, decompose(*g_), &out);
  }

  // Pendant-block recurrence.
  Polynomial<R> recursive() { return phi_recursive(g_->vertices()); }

  // phi/psi of the induced subdigraph on `vs`, by the theorem route.
  Polynomial<R> phi_theorem(const std::vector<VertexId>& vs) {
    if (vs.empty()) return Polynomial<R>::unit();
    if (auto it = cache_.find(vs); it != cache_.end()) return it->second;
    WeightedDigraph<R> sub = g_->induced(vs);
    Polynomial<R> result;
    auto comps = sub.component_vertex_sets();
    if (comps.size() > 1) {
      result = Polynomial<R>::unit();
      for (const auto& comp : comps) result *= phi_theorem(comp);
    } else {
      BlockDecomposition d = decompose(sub);
      result = d.cut_vertices.empty() ? detail::base_poly(sub, kind_) : theorem_sum(sub, d, nullptr);
    }
    cache_.emplace(vs, result);
    return result;
  }

  PolyKind kind() const { return kind_; }

 private:
  const WeightedDigraph<R>* g_;
  PolyKind kind_;
  std::map<std::vector<VertexId>, Polynomial<R>> cache_;
  std::map<std::vector<VertexId>, Polynomial<R>> rcache_;

  Polynomial<R> phi_recursive(const std::vector<VertexId>& vs) {
    if (vs.empty()) return Polynomial<R>::unit();
    if (auto it = rcache_.find(vs); it != rcache_.end()) return it->second;
    WeightedDigraph<R> sub = g_->induced(vs);
    Polynomial<R> result;
    auto comps = sub.component_vertex_sets();
    if (comps.size() > 1) {
      result = Polynomial<R>::unit();
      for (const auto& comp : comps) result *= phi_recursive(comp);
    } else {
      BlockDecomposition d = decompose(sub);
      if (d.cut_vertices.empty()) {
        result = detail::base_poly(sub, kind_);
      } else {
        const int b1 = pendant_blocks(d).front();
        const VertexId v = d.incidence[static_cast<std::size_t>(b1)].front();
        const R alpha = sub.loop_weight(v);
        const auto& block = d.blocks[static_cast<std::size_t>(b1)];
        const std::vector<VertexId> block_minus_v = detail::sorted_difference(block, {v});
        const std::vector<VertexId> rest = detail::sorted_difference(vs, block);
        const std::vector<VertexId> rest_plus_v = detail::sorted_difference(vs, block_minus_v);
        Polynomial<R> phi_b = phi_recursive(block);
        Polynomial<R> phi_rest = phi_recursive(rest);
        Polynomial<R> phi_bmv = phi_recursive(block_minus_v);
        Polynomial<R> phi_rest_v = phi_recursive(rest_plus_v);
        result = phi_b * phi_rest + phi_bmv * phi_rest_v +
                 Polynomial<R>::lambda_minus(alpha) * phi_bmv * phi_rest;
      }
    }
    rcache_.emplace(vs, result);
    return result;
  }

  Polynomial<R> theorem_sum(const WeightedDigraph<R>& sub, const BlockDecomposition& d,
                            std::vector<TheoremTerm<R>>* terms) {
    using T = coeff_traits<R>;
    const auto& cuts = d.cut_vertices;
    const std::size_t m = cuts.size();
    if (m > 22)
      throw SizeError("cut-vertex-removal sum over " + std::to_string(m) +
                      " cut-vertices exceeds the 2^22 subset cap");
    std::vector<uint32_t> masks(std::size_t(1) << m);
    std::iota(masks.begin(), masks.end(), 0);
    std::stable_sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
      if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
      return a < b;  // ascending cut-vertex-id subsets, cuts are sorted
    });

    Polynomial<R> total;
    for (uint32_t mask : masks) {
      std::vector<VertexId> removed;
      Polynomial<R> multiplier = Polynomial<R>::unit();
      long long index_factor = 1;
      for (std::size_t i = 0; i < m; ++i) {
        if (!(mask & (uint32_t(1) << i))) continue;
        removed.push_back(cuts[i]);
        multiplier *= Polynomial<R>::lambda_minus(sub.loop_weight(cuts[i]));
        index_factor *= d.cut_index.at(cuts[i]) - 1;
      }
      multiplier = multiplier.scaled(T::from_int(index_factor));

      Polynomial<R> summand_total;
      TheoremTerm<R>* term = nullptr;
      if (terms) {
        terms->push_back({});
        term = &terms->back();
        term->removed = removed;
        term->multiplier = multiplier;
      }
      for_each_bpartition(d, removed, [&](const BPartition& p) {
        Polynomial<R> value = Polynomial<R>::unit();
        for (const auto& part : p.parts)
          if (!part.empty()) value *= phi_theorem(part);
        summand_total += value;
        if (term) term->summands.push_back({p.parts, std::move(value)});
      });
      if (term) term->summand_total = summand_total;
      total += multiplier * summand_total;
    }
    return total;
  }
};

// Value-domain determinant/permanent by the pendant-block recurrence at
// lambda = 0, with the cut-vertex-free base expanded directly.
template <class R>
class ValueEngine {
 public:
  ValueEngine(const WeightedDigraph<R>& g, PolyKind kind) : g_(&g), kind_(kind) {}

  R run() { return value(g_->vertices()); }

  R value(const std::vector<VertexId>& vs) {
    using T = coeff_traits<R>;
    if (vs.empty()) return T::one();
    if (auto it = cache_.find(vs); it != cache_.end()) return it->second;
    WeightedDigraph<R> sub = g_->induced(vs);
    R result = T::one();
    auto comps = sub.component_vertex_sets();
    if (comps.size() > 1) {
      for (const auto& comp : comps) result = result * value(comp);
    } else {
      BlockDecomposition d = decompose(sub);
      if (d.cut_vertices.empty()) {
        result = detail::base_value(sub, kind_);
      } else {
        const int b1 = pendant_blocks(d).front();
        const VertexId v = d.incidence[static_cast<std::size_t>(b1)].front();
        const R alpha = sub.loop_weight(v);
        const auto& block = d.blocks[static_cast<std::size_t>(b1)];
        const std::vector<VertexId> block_minus_v = detail::sorted_difference(block, {v});
        const std::vector<VertexId> rest = detail::sorted_difference(vs, block);
        const std::vector<VertexId> rest_plus_v = detail::sorted_difference(vs, block_minus_v);
        R d_b = value(block), d_rest = value(rest);
        R d_bmv = value(block_minus_v), d_rest_v = value(rest_plus_v);
        result = d_b * d_rest + d_bmv * d_rest_v + (T::zero() - alpha) * d_bmv * d_rest;
      }
    }
    cache_.emplace(vs, result);
    return result;
  }

 private:
  const WeightedDigraph<R>* g_;
  PolyKind kind_;
  std::map<std::vector<VertexId>, R> cache_;
};

template <class R>
Polynomial<R> charpoly_theorem(const WeightedDigraph<R>& g) {
  return PolyEngine<R>(g, PolyKind::Char).theorem();
}
template <class R>
Polynomial<R> charpoly_theorem(const WeightedDigraph<R>& g, std::vector<TheoremTerm<R>>& terms) {
  return PolyEngine<R>(g, PolyKind::Char).theorem_terms(terms);
}
template <class R>
Polynomial<R> charpoly_recursive(const WeightedDigraph<R>& g) {
  return PolyEngine<R>(g, PolyKind::Char).recursive();
}
template <class R>
Polynomial<R> permpoly_theorem(const WeightedDigraph<R>& g) {
  return PolyEngine<R>(g, PolyKind::Perm).theorem();
}
template <class R>
Polynomial<R> permpoly_theorem(const WeightedDigraph<R>& g, std::vector<TheoremTerm<R>>& terms) {
  return PolyEngine<R>(g, PolyKind::Perm).theorem_terms(terms);
}
template <class R>
Polynomial<R> permpoly_recursive(const WeightedDigraph<R>& g) {
  return PolyEngine<R>(g, PolyKind::Perm).recursive();
}

// Closed form for a connected digraph with exactly one cut-vertex v and k
// blocks, all joined at v:
//   phi = sum_i phi(B_i) prod_{j!=i} phi(B_j \ v) + (k-1)(lambda-alpha) prod_i phi(B_i \ v)
template <class R>
Polynomial<R> charpoly_single_cut(const WeightedDigraph<R>& g, VertexId v) {
  using T = coeff_traits<R>;
  if (g.component_vertex_sets().size() != 1)
    throw DomainError("charpoly_single_cut: digraph must be connected");
  BlockDecomposition d = decompose(g);
  if (d.cut_vertices.size() != 1 || d.cut_vertices.front() != v)
    throw DomainError("charpoly_single_cut: digraph must have exactly the one given cut-vertex");
  PolyEngine<R> engine(g, PolyKind::Char);
  const R alpha = g.loop_weight(v);
  const std::size_t k = d.blocks.size();
  std::vector<Polynomial<R>> phi_block(k), phi_block_mv(k);
  for (std::size_t i = 0; i < k; ++i) {
    phi_block[i] = engine.phi_theorem(d.blocks[i]);
    phi_block_mv[i] = engine.phi_theorem(detail::sorted_difference(d.blocks[i], {v}));
  }
  Polynomial<R> total;
  for (std::size_t i = 0; i < k; ++i) {
    Polynomial<R> term = phi_block[i];
    for (std::size_t j = 0; j < k; ++j)
      if (j != i) term *= phi_block_mv[j];
    total += term;
  }
  Polynomial<R> tail = Polynomial<R>::lambda_minus(alpha).scaled(T::from_int(static_cast<long long>(k) - 1));
  for (std::size_t i = 0; i < k; ++i) tail *= phi_block_mv[i];
  return total + tail;
}

// Generalized recurrence with respect to a subdigraph H containing cut-vertex
// v such that H \ v is a union of components of G \ v.
template <class R>
Polynomial<R> subdigraph_recurrence(const WeightedDigraph<R>& g,
                                    const std::vector<VertexId>& h_vertices, VertexId v) {
  BlockDecomposition d = decompose(g);
  if (!d.is_cut_vertex(v)) throw DomainError("subdigraph_recurrence: v is not a cut-vertex");
  std::vector<VertexId> h = h_vertices;
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  if (!std::binary_search(h.begin(), h.end(), v))
    throw DomainError("subdigraph_recurrence: H must contain v");
  const std::vector<VertexId> h_minus_v = detail::sorted_difference(h, {v});
  std::set<VertexId> hset(h_minus_v.begin(), h_minus_v.end());
  std::size_t covered = 0;
  for (const auto& comp : g.without({v}).component_vertex_sets()) {
    const bool inside = hset.count(comp.front()) > 0;
    for (VertexId u : comp)
      if ((hset.count(u) > 0) != inside)
        throw DomainError("subdigraph_recurrence: H minus v is not a union of components of G minus v");
    if (inside) covered += comp.size();
  }
  if (covered != hset.size())
    throw DomainError("subdigraph_recurrence: H minus v is not a union of components of G minus v");

  PolyEngine<R> engine(g, PolyKind::Char);
  const R alpha = g.loop_weight(v);
  Polynomial<R> phi_h = engine.phi_theorem(h);
  Polynomial<R> phi_rest = engine.phi_theorem(detail::sorted_difference(g.vertices(), h));
  Polynomial<R> phi_hmv = engine.phi_theorem(h_minus_v);
  Polynomial<R> phi_rest_v = engine.phi_theorem(detail::sorted_difference(g.vertices(), h_minus_v));
  return phi_h * phi_rest + phi_hmv * phi_rest_v +
         Polynomial<R>::lambda_minus(alpha) * phi_hmv * phi_rest;
}

template <class R>
R determinant(const WeightedDigraph<R>& g) {
  return ValueEngine<R>(g, PolyKind::Char).run();
}
template <class R>
R permanent(const WeightedDigraph<R>& g) {
  return ValueEngine<R>(g, PolyKind::Perm).run();
}

// phi-/psi-summand of one B-partition: the product over parts (null-graph
// parts contribute the unit).
template <class R>
Polynomial<R> summand(const BPartition& p, PolyEngine<R>& engine) {
  Polynomial<R> value = Polynomial<R>::unit();
  for (const auto& part : p.parts)
    if (!part.empty()) value *= engine.phi_theorem(part);
  return value;
}
template <class R>
Polynomial<R> phi_summand(const BPartition& p, const WeightedDigraph<R>& g) {
  PolyEngine<R> engine(g, PolyKind::Char);
  return summand(p, engine);
}
template <class R>
Polynomial<R> psi_summand(const BPartition& p, const WeightedDigraph<R>& g) {
  PolyEngine<R> engine(g, PolyKind::Perm);
  return summand(p, engine);
}

// Plain sum of det-summands (resp. per-summands) over all B-partitions: the
// whole determinant when no cut-vertex carries a loop, because every removal
// term then picks up the factor (0 - alpha) = 0.
template <class R>
R value_summand_sum(const WeightedDigraph<R>& g, PolyKind kind) {
  using T = coeff_traits<R>;
  BlockDecomposition d = decompose(g);
  ValueEngine<R> engine(g, kind);
  R total = T::zero();
  for_each_bpartition(d, {}, [&](const BPartition& p) {
    R value = T::one();
    for (const auto& part : p.parts)
      if (!part.empty()) value = value * engine.value(part);
    total += value;
  });
  return total;
}
template <class R>
R det_summand_sum(const WeightedDigraph<R>& g) {
  return value_summand_sum(g, PolyKind::Char);
}
template <class R>
R per_summand_sum(const WeightedDigraph<R>& g) {
  return value_summand_sum(g, PolyKind::Perm);
}

namespace detail {

// Within-block cycle test: connected block whose every vertex has undirected
// degree 2 inside the block.
template <class R>
bool is_cycle_block(const WeightedDigraph<R>& g, const std::vector<VertexId>& block) {
  if (block.size() < 3) return false;
  WeightedDigraph<R> sub = g.induced(block);
  for (VertexId v : block)
    if (sub.undirected_degree(v) != 2) return false;
  return true;
}

// A hanging branch of v qualifies for the tree conditions when it is acyclic
// and attached to v by exactly one edge, so that branch + v is a tree.
template <class R>
bool is_tree_branch(const WeightedDigraph<R>& g, VertexId v, const std::vector<VertexId>& comp) {
  WeightedDigraph<R> sub = g.induced(comp);
  std::size_t undirected_edges = 0;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const auto& [uv, w] : sub.edges()) {
    (void)w;
    auto key = std::minmax(uv.first, uv.second);
    seen.insert({key.first, key.second});
  }
  undirected_edges = seen.size();
  if (undirected_edges != comp.size() - 1) return false;  // acyclic + connected = tree
  int attach = 0;
  for (VertexId u : comp)
    if (g.edge(v, u) != nullptr || g.edge(u, v) != nullptr) ++attach;
  return attach == 1;
}

}  // namespace detail

// Sufficient singularity conditions for a simple graph; returns the satisfied
// condition ids out of:
//   1. a pendant cycle block C_n, n = 4r, holding one cut-vertex;
//   2. two pendant cycle blocks C_n, C_m of even length sharing a cut-vertex;
//   3. an even-order singular tree hanging at a cut-vertex (branch + v);
//   4. the graph splits at a cut-vertex into exactly two trees of equal
//      order parity.
template <class R>
std::vector<int> singularity_conditions(const WeightedDigraph<R>& g) {
  if (!g.is_simple()) throw DomainError("singularity_conditions requires a simple graph");
  std::set<int> fired;
  BlockDecomposition d = decompose(g);

  std::map<VertexId, std::vector<std::size_t>> pendant_cycles_at;  // cut-vertex -> even cycle pendant blocks
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    if (d.incidence[b].size() != 1) continue;
    if (!detail::is_cycle_block(g, d.blocks[b])) continue;
    const std::size_t len = d.blocks[b].size();
    if (len % 4 == 0) fired.insert(1);
    if (len % 2 == 0) pendant_cycles_at[d.incidence[b].front()].push_back(b);
  }
  for (const auto& [v, cycles] : pendant_cycles_at) {
    (void)v;
    if (cycles.size() >= 2) fired.insert(2);
  }

  for (VertexId v : d.cut_vertices) {
    auto comps = g.without({v}).component_vertex_sets();
    std::vector<std::vector<VertexId>> branches;  // qualifying tree branches
    bool all_branches = true;
    for (const auto& comp : comps) {
      if (detail::is_tree_branch(g, v, comp))
        branches.push_back(comp);
      else
        all_branches = false;
    }
    // condition 3: some union of branches + v is an even-order singular tree
    if (!branches.empty()) {
      if (branches.size() > 16)
        throw SizeError("singularity_conditions: too many hanging branches to enumerate");
      const uint32_t subsets = uint32_t(1) << branches.size();
      for (uint32_t s = 1; s < subsets && !fired.count(3); ++s) {
        std::vector<VertexId> tree{v};
        for (std::size_t i = 0; i < branches.size(); ++i)
          if (s & (uint32_t(1) << i)) tree.insert(tree.end(), branches[i].begin(), branches[i].end());
        if (tree.size() % 2 != 0) continue;
        if (coeff_traits<R>::is_zero(determinant(g.induced(tree)))) fired.insert(3);
      }
    }
    // condition 4: all of G hangs at v as two trees; parity matches iff the
    // total order is odd
    if (all_branches && comps.size() >= 2 && g.order() % 2 == 1) fired.insert(4);
  }
  return {fired.begin(), fired.end()};
}

}  // namespace blockpoly
