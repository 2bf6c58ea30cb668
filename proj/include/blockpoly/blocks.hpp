#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "blockpoly/digraph.hpp"

namespace blockpoly {

// Blocks, cut-vertices, cut-indices and block/cut-vertex incidence of a
// digraph, computed on the underlying undirected connectivity structure
// (loops ignored). Bridges form 2-vertex blocks; isolated vertices form
// 1-vertex blocks, so blocks always cover V(G).
struct BlockDecomposition {
  std::vector<std::vector<VertexId>> blocks;       // sorted sets, lexicographic block order
  std::vector<VertexId> cut_vertices;              // sorted
  std::map<VertexId, int> cut_index;               // cut vertex -> number of blocks containing it
  std::vector<std::vector<VertexId>> incidence;    // per block: its cut-vertices
  std::map<VertexId, std::vector<int>> blocks_of_cut;  // cut vertex -> sorted block indices

  bool is_cut_vertex(VertexId v) const {
    return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
  }
  std::size_t block_count() const { return blocks.size(); }
};

namespace detail {

// Hopcroft-Tarjan biconnected components over index adjacency.
// Returns blocks as vertex-index sets.
inline std::vector<std::vector<int>> biconnected_blocks(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<int>> blocks;
  int timer = 0;

  auto pop_block = [&](int u, int v) {
    std::vector<int> verts;
    while (true) {
      auto [a, b] = edge_stack.back();
      edge_stack.pop_back();
      verts.push_back(a);
      verts.push_back(b);
      if (a == u && b == v) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    blocks.push_back(std::move(verts));
  };

  // Iterative DFS; adjacency lists are deduplicated, so the parent edge is
  // skipped exactly once per child.
  struct Frame {
    int u, parent;
    std::size_t next = 0;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1) continue;
    if (adj[root].empty()) {
      blocks.push_back({root});
      disc[root] = timer++;
      continue;
    }
    std::vector<Frame> stack{{root, -1}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.u].size()) {
        int v = adj[f.u][f.next++];
        if (v == f.parent) continue;
        if (disc[v] == -1) {
          edge_stack.emplace_back(f.u, v);
          disc[v] = low[v] = timer++;
          stack.push_back({v, f.u});
        } else if (disc[v] < disc[f.u]) {
          edge_stack.emplace_back(f.u, v);
          low[f.u] = std::min(low[f.u], disc[v]);
        }
      } else {
        int u = f.u, parent = f.parent;
        stack.pop_back();
        if (parent != -1) {
          low[parent] = std::min(low[parent], low[u]);
          if (low[u] >= disc[parent]) pop_block(parent, u);
        }
      }
    }
  }
  return blocks;
}

}  // namespace detail

template <class R>
BlockDecomposition decompose(const WeightedDigraph<R>& g) {
  BlockDecomposition d;
  const auto& ids = g.vertices();
  auto idx_blocks = detail::biconnected_blocks(g.undirected_adjacency());
  for (auto& blk : idx_blocks) {
    std::vector<VertexId> labeled;
    labeled.reserve(blk.size());
    for (int i : blk) labeled.push_back(ids[static_cast<std::size_t>(i)]);
    std::sort(labeled.begin(), labeled.end());
    d.blocks.push_back(std::move(labeled));
  }
  std::sort(d.blocks.begin(), d.blocks.end());

  std::map<VertexId, int> membership;
  for (const auto& blk : d.blocks)
    for (VertexId v : blk) ++membership[v];
  for (const auto& [v, count] : membership)
    if (count >= 2) {
      d.cut_vertices.push_back(v);
      d.cut_index[v] = count;
    }

  d.incidence.resize(d.blocks.size());
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    for (VertexId v : d.blocks[b])
      if (d.is_cut_vertex(v)) {
        d.incidence[b].push_back(v);
        d.blocks_of_cut[v].push_back(static_cast<int>(b));
      }
  return d;
}

// Blocks containing at most one cut-vertex, including sole blocks of components.
inline std::vector<int> pendant_blocks(const BlockDecomposition& d) {
  std::vector<int> out;
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    if (d.incidence[b].size() <= 1) out.push_back(static_cast<int>(b));
  return out;
}

}  // namespace blockpoly
