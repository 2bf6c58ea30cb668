#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "blockpoly/blocks.hpp"

namespace blockpoly {

// One B-partition: every cut-vertex is assigned to a single incident block,
// inducing one vertex-disjoint part per block (possibly empty = null graph).
struct BPartition {
  std::vector<std::pair<VertexId, int>> assignment;  // (cut-vertex, block index), ascending ids
  std::vector<std::vector<VertexId>> parts;          // aligned with decomposition blocks
};

// Streams every B-partition of the digraph obtained from the decomposition's
// digraph by deleting `removed` (a subset of the cut-vertices), with parts read
// off the ORIGINAL blocks: each surviving cut-vertex picks one of its incident
// blocks, and part_i = B_i minus removed minus cut-vertices assigned elsewhere.
// With `removed` empty this is exactly the B-partition definition; the removed
// form is what the cut-vertex-removal sum consumes. Enumeration is the
// cartesian product over surviving cut-vertices in id order, lexicographic in
// the per-vertex incident block lists. Returns the number of partitions.
template <class F>
uint64_t for_each_bpartition(const BlockDecomposition& d, const std::vector<VertexId>& removed,
                             F&& fn) {
  std::set<VertexId> drop(removed.begin(), removed.end());
  std::vector<VertexId> live;  // surviving cut-vertices, ascending
  std::vector<const std::vector<int>*> choices;
  for (VertexId v : d.cut_vertices)
    if (!drop.count(v)) {
      live.push_back(v);
      choices.push_back(&d.blocks_of_cut.at(v));
    }

  // Base parts: each block minus removed vertices minus all surviving
  // cut-vertices; chosen cut-vertices are appended per assignment.
  std::vector<std::vector<VertexId>> base(d.blocks.size());
  for (std::size_t b = 0; b < d.blocks.size(); ++b)
    for (VertexId v : d.blocks[b])
      if (!drop.count(v) && !std::binary_search(live.begin(), live.end(), v))
        base[b].push_back(v);

  const std::size_t m = live.size();
  std::vector<std::size_t> pick(m, 0);
  uint64_t count = 0;
  while (true) {
    BPartition p;
    p.parts = base;
    p.assignment.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      int blk = (*choices[i])[pick[i]];
      p.assignment.emplace_back(live[i], blk);
      p.parts[static_cast<std::size_t>(blk)].push_back(live[i]);
    }
    for (auto& part : p.parts) std::sort(part.begin(), part.end());
    fn(p);
    ++count;
    // odometer: last cut-vertex varies fastest
    std::size_t i = m;
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i]->size()) break;
      pick[i] = 0;
      if (i == 0) return count;
    }
    if (m == 0) return count;
  }
}

// The number of B-partitions is the product of the cut-indices.
inline uint64_t bpartition_count(const BlockDecomposition& d) {
  uint64_t n = 1;
  for (const auto& [v, idx] : d.cut_index) {
    (void)v;
    n *= static_cast<uint64_t>(idx);
  }
  return n;
}

template <class R>
std::vector<BPartition> enumerate_bpartitions(const WeightedDigraph<R>& g,
                                              const BlockDecomposition& d) {
  (void)g;
  std::vector<BPartition> out;
  for_each_bpartition(d, {}, [&](const BPartition& p) { out.push_back(p); });
  return out;
}

}  // namespace blockpoly
