#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "blockpoly/matrix.hpp"

namespace blockpoly {

using VertexId = int;

// Weighted digraph: the faithful image of a square matrix. Vertex ids are
// stable labels (never renumbered by subdigraph operations); the matrix view
// uses label-sorted order. Edges never carry the additive zero - zero matrix
// entries produce no edge. Immutable after construction.
template <class R>
class WeightedDigraph {
 public:
  using EdgeMap = std::map<std::pair<VertexId, VertexId>, R>;

  WeightedDigraph() = default;  // the null graph

  WeightedDigraph(std::vector<VertexId> vertices, EdgeMap edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw DomainError("duplicate vertex id");
    for (auto it = edges_.begin(); it != edges_.end();) {
      if (!has_vertex(it->first.first) || !has_vertex(it->first.second))
        throw DomainError("edge endpoint is not a listed vertex");
      if (coeff_traits<R>::is_zero(it->second))
        it = edges_.erase(it);
      else
        ++it;
    }
  }

  // digraph_of_matrix: vertex ids 1..n; edge (u,v) with weight a_uv iff a_uv != 0.
  static WeightedDigraph from_matrix(const Matrix<R>& a) {
    if (!a.is_square()) throw DimensionError("digraph_of_matrix requires a square matrix");
    WeightedDigraph g;
    const std::size_t n = a.order();
    g.vertices_.resize(n);
    for (std::size_t i = 0; i < n; ++i) g.vertices_[i] = static_cast<VertexId>(i) + 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!coeff_traits<R>::is_zero(a.at(i, j)))
          g.edges_.emplace(std::make_pair(g.vertices_[i], g.vertices_[j]), a.at(i, j));
    return g;
  }

  // matrix_of_digraph, in label-sorted vertex order.
  Matrix<R> to_matrix() const {
    Matrix<R> a(vertices_.size(), vertices_.size());
    for (const auto& [uv, w] : edges_) a.at(index_of(uv.first), index_of(uv.second)) = w;
    return a;
  }

  std::size_t order() const { return vertices_.size(); }
  const std::vector<VertexId>& vertices() const { return vertices_; }
  const EdgeMap& edges() const { return edges_; }

  bool has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }
  std::size_t index_of(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) throw DomainError("unknown vertex id");
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  const R* edge(VertexId u, VertexId v) const {
    auto it = edges_.find({u, v});
    return it == edges_.end() ? nullptr : &it->second;
  }
  R loop_weight(VertexId v) const {
    const R* w = edge(v, v);
    return w ? *w : coeff_traits<R>::zero();
  }
  bool has_loop(VertexId v) const { return edge(v, v) != nullptr; }

  // Induced subdigraph on S (labels preserved). Unknown ids are a domain error.
  WeightedDigraph induced(const std::vector<VertexId>& s) const {
    WeightedDigraph g;
    g.vertices_ = s;
    std::sort(g.vertices_.begin(), g.vertices_.end());
    g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()), g.vertices_.end());
    for (VertexId v : g.vertices_)
      if (!has_vertex(v)) throw DomainError("induced_subdigraph: unknown vertex id");
    for (const auto& [uv, w] : edges_)
      if (g.has_vertex(uv.first) && g.has_vertex(uv.second)) g.edges_.emplace(uv, w);
    return g;
  }

  // Induced subdigraph on V(G) minus `removed`.
  WeightedDigraph without(const std::vector<VertexId>& removed) const {
    std::set<VertexId> drop(removed.begin(), removed.end());
    std::vector<VertexId> keep;
    keep.reserve(vertices_.size());
    for (VertexId v : vertices_)
      if (!drop.count(v)) keep.push_back(v);
    return induced(keep);
  }

  // Undirected neighbor lists (u ~ v iff (u,v) or (v,u) is an edge; loops
  // ignored), indexed by vertex position. This is the connectivity structure
  // paths are defined on.
  std::vector<std::vector<int>> undirected_adjacency() const {
    std::vector<std::set<int>> nb(vertices_.size());
    for (const auto& [uv, w] : edges_) {
      (void)w;
      if (uv.first == uv.second) continue;
      int i = static_cast<int>(index_of(uv.first));
      int j = static_cast<int>(index_of(uv.second));
      nb[i].insert(j);
      nb[j].insert(i);
    }
    std::vector<std::vector<int>> adj(vertices_.size());
    for (std::size_t i = 0; i < nb.size(); ++i) adj[i].assign(nb[i].begin(), nb[i].end());
    return adj;
  }

  int undirected_degree(VertexId v) const {
    std::set<VertexId> nb;
    for (const auto& [uv, w] : edges_) {
      (void)w;
      if (uv.first == v && uv.second != v) nb.insert(uv.second);
      if (uv.second == v && uv.first != v) nb.insert(uv.first);
    }
    return static_cast<int>(nb.size());
  }

  // Weakly connected pieces, ordered by smallest contained vertex id.
  std::vector<std::vector<VertexId>> component_vertex_sets() const {
    std::vector<std::vector<VertexId>> out;
    auto adj = undirected_adjacency();
    std::vector<char> seen(vertices_.size(), 0);
    for (std::size_t s = 0; s < vertices_.size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> stack{static_cast<int>(s)};
      std::vector<VertexId> comp;
      seen[s] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        comp.push_back(vertices_[u]);
        for (int w : adj[u])
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    // vertices_ is sorted, so discovery order is already by smallest id
    return out;
  }

  std::vector<WeightedDigraph> components() const {
    std::vector<WeightedDigraph> out;
    for (const auto& comp : component_vertex_sets()) out.push_back(induced(comp));
    return out;
  }

  // Symmetric 0/1 weights, loop-free: the "simple graph" inputs of the
  // singularity and block-graph results.
  bool is_simple() const {
    const R one = coeff_traits<R>::one();
    for (const auto& [uv, w] : edges_) {
      if (uv.first == uv.second) return false;
      if (!(w == one)) return false;
      const R* back = edge(uv.second, uv.first);
      if (back == nullptr) return false;
    }
    return true;
  }

  bool operator==(const WeightedDigraph& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_;
  }

 private:
  std::vector<VertexId> vertices_;  // sorted ascending
  EdgeMap edges_;
};

template <class R>
WeightedDigraph<R> digraph_of_matrix(const Matrix<R>& a) {
  return WeightedDigraph<R>::from_matrix(a);
}

template <class R>
Matrix<R> matrix_of_digraph(const WeightedDigraph<R>& g) {
  return g.to_matrix();
}

}  // namespace blockpoly
