#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "blockpoly/bpartition.hpp"
#include "blockpoly/poly_engine.hpp"

namespace blockpoly {

// Simple graph whose every block is a complete graph.
template <class R>
bool is_block_graph(const WeightedDigraph<R>& g) {
  if (!g.is_simple()) throw DomainError("is_block_graph requires a simple graph");
  BlockDecomposition d = decompose(g);
  for (const auto& block : d.blocks)
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (g.edge(block[i], block[j]) == nullptr) return false;
  return true;
}

namespace detail {

template <class R>
struct KTupleContext {
  std::vector<std::size_t> block_sizes;
  std::vector<uint64_t> block_bits;       // vertex membership bitset per block (n <= 64)
  std::vector<std::size_t> suffix_cap;    // sum of block sizes from i onward
  std::size_t n = 0;
};

template <class R>
KTupleContext<R> make_ktuple_context(const WeightedDigraph<R>& g, const BlockDecomposition& d) {
  KTupleContext<R> ctx;
  ctx.n = g.order();
  if (ctx.n > 64) throw SizeError("k-tuple enumeration is capped at 64 vertices");
  for (const auto& block : d.blocks) {
    ctx.block_sizes.push_back(block.size());
    uint64_t bits = 0;
    for (VertexId v : block) bits |= uint64_t(1) << g.index_of(v);
    ctx.block_bits.push_back(bits);
  }
  ctx.suffix_cap.assign(d.blocks.size() + 1, 0);
  for (std::size_t i = d.blocks.size(); i-- > 0;)
    ctx.suffix_cap[i] = ctx.suffix_cap[i + 1] + ctx.block_sizes[i];
  return ctx;
}

}  // namespace detail

// All k-tuples (alpha_1..alpha_k) of non-negative integers with
//   (1) sum alpha_i = n, and
//   (2) sum_{i in S} alpha_i <= |V(G_S)| for every nonempty S,
// where G_S is the subgraph induced by the blocks indexed by S. Backtracking
// checks condition 2 incrementally over all prefix subsets containing the
// latest block; beyond 15 blocks the constructive B-partition correspondence
// generates the tuples instead (part sizes of each B-partition).
template <class R>
std::vector<std::vector<int>> feasible_ktuples(const WeightedDigraph<R>& g) {
  if (!is_block_graph(g)) throw DomainError("feasible_ktuples requires a block graph");
  BlockDecomposition d = decompose(g);
  const std::size_t k = d.blocks.size();
  std::vector<std::vector<int>> out;
  if (k == 0) return out;

  if (k > 15) {
    for_each_bpartition(d, {}, [&](const BPartition& p) {
      std::vector<int> tuple(k);
      for (std::size_t i = 0; i < k; ++i) tuple[i] = static_cast<int>(p.parts[i].size());
      out.push_back(std::move(tuple));
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  auto ctx = detail::make_ktuple_context(g, d);
  std::vector<uint64_t> union_bits(std::size_t(1) << k, 0);
  std::vector<int> union_size(std::size_t(1) << k, 0);
  for (uint32_t mask = 1; mask < (uint32_t(1) << k); ++mask) {
    const uint32_t low = mask & (mask - 1);
    const int i = std::countr_zero(mask);
    union_bits[mask] = union_bits[low] | ctx.block_bits[static_cast<std::size_t>(i)];
    union_size[mask] = std::popcount(union_bits[mask]);
  }

  std::vector<int> tuple(k, 0);
  auto backtrack = [&](auto&& self, std::size_t i, int total) -> void {
    if (i == k) {
      if (static_cast<std::size_t>(total) == ctx.n) out.push_back(tuple);
      return;
    }
    const int remaining_cap = static_cast<int>(ctx.suffix_cap[i + 1]);
    for (int alpha = 0; alpha <= static_cast<int>(ctx.block_sizes[i]); ++alpha) {
      const int new_total = total + alpha;
      if (static_cast<std::size_t>(new_total) > ctx.n) break;
      if (static_cast<std::size_t>(new_total + remaining_cap) < ctx.n) continue;
      tuple[i] = alpha;
      // condition 2 over the subsets of the assigned prefix that contain
      // block i (subsets of earlier prefixes were checked earlier)
      bool ok = true;
      const uint32_t bit = uint32_t(1) << i;
      for (uint32_t rest = 0; rest < (uint32_t(1) << i) && ok; ++rest) {
        const uint32_t mask = bit | rest;
        int s = alpha;
        for (uint32_t m = rest; m; m &= m - 1) s += tuple[std::countr_zero(m)];
        if (s > union_size[mask]) ok = false;
      }
      if (ok) self(self, i + 1, new_total);
    }
    tuple[i] = 0;
  };
  backtrack(backtrack, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// det(A) = (-1)^(n-k) sum over feasible k-tuples of prod (alpha_i - 1).
template <class R>
BigInt det_block_graph(const WeightedDigraph<R>& g) {
  BlockDecomposition d = decompose(g);
  auto tuples = feasible_ktuples(g);  // validates block-graph precondition
  const std::size_t n = g.order();
  const std::size_t k = d.blocks.size();
  if (n == 0) return BigInt(1);
  BigInt total(0);
  for (const auto& tuple : tuples) {
    BigInt prod(1);
    for (int alpha : tuple) prod *= BigInt(alpha - 1);
    total += prod;
  }
  if ((n - k) % 2 == 1) total = -total;
  return total;
}

}  // namespace blockpoly
