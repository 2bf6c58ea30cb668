#include <doctest.h>

#include <random>

#include "blockpoly/block_graph_det.hpp"
#include "blockpoly/oracles.hpp"
#include "test_support.hpp"

using namespace blockpoly;
using namespace testsupport;

TEST_SUITE_BEGIN("block_graph_det");

namespace {

Matrix<BigInt> complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return adjacency(n, edges);
}

}  // namespace

TEST_CASE("block graph recognition") {
  CHECK(is_block_graph(digraph_of_matrix(complete_graph(4))));
  // two triangles glued at a vertex
  CHECK(is_block_graph(
      digraph_of_matrix(adjacency(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}))));
  // C4: its single block is not complete
  CHECK_FALSE(is_block_graph(digraph_of_matrix(adjacency(4, cycle_edges(0, 4)))));
  // trees are block graphs (every block is K2)
  CHECK(is_block_graph(digraph_of_matrix(adjacency(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {0, 5}}))));
  // weighted input is not simple
  CHECK_THROWS_AS(is_block_graph(digraph_of_matrix(matrix_m1())), DomainError);
}

TEST_CASE("complete graphs: k = 1") {
  for (int n = 2; n <= 8; ++n) {
    auto g = digraph_of_matrix(complete_graph(n));
    auto tuples = feasible_ktuples(g);
    REQUIRE(tuples.size() == 1);
    CHECK(tuples[0] == std::vector<int>{n});
    BigInt expected(n - 1);
    if (n % 2 == 0) expected = -expected;
    CHECK(det_block_graph(g) == expected);
  }
}

TEST_CASE("path P3: the proof's 2-tuples") {
  auto g = digraph_of_matrix(adjacency(3, path_edges(0, 3)));
  auto tuples = feasible_ktuples(g);
  REQUIRE(tuples.size() == 2);
  CHECK(tuples[0] == std::vector<int>{1, 2});
  CHECK(tuples[1] == std::vector<int>{2, 1});
  CHECK(det_block_graph(g) == BigInt(0));
  CHECK(oracle::leibniz_det(adjacency(3, path_edges(0, 3))) == BigInt(0));
}

TEST_CASE("two blocks: exactly the tuples (b1, b2-1) and (b1-1, b2)") {
  // K4 and K3 glued at one vertex: n = 6
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) edges.emplace_back(i, j);
  edges.insert(edges.end(), {{0, 4}, {4, 5}, {0, 5}});
  auto g = digraph_of_matrix(adjacency(6, edges));
  auto tuples = feasible_ktuples(g);
  REQUIRE(tuples.size() == 2);
  CHECK(tuples[0] == std::vector<int>{3, 3});
  CHECK(tuples[1] == std::vector<int>{4, 2});
  CHECK(det_block_graph(g) == oracle::leibniz_det(adjacency(6, edges)));
}

TEST_CASE("random block graphs: dets agree and tuples biject with B-partitions") {
  std::mt19937 rng(4242);
  for (int rep = 0; rep < 60; ++rep) {
    auto a = random_block_graph_matrix(rng, 12);
    auto g = digraph_of_matrix(a);
    REQUIRE(is_block_graph(g));
    auto d = decompose(g);
    auto tuples = feasible_ktuples(g);
    // one-to-one correspondence with B-partitions
    CHECK(tuples.size() == bpartition_count(d));
    // ... and the partition part-size vectors are exactly the feasible tuples
    std::vector<std::vector<int>> from_partitions;
    for_each_bpartition(d, {}, [&](const BPartition& p) {
      std::vector<int> t(p.parts.size());
      for (std::size_t i = 0; i < p.parts.size(); ++i) t[i] = static_cast<int>(p.parts[i].size());
      from_partitions.push_back(std::move(t));
    });
    std::sort(from_partitions.begin(), from_partitions.end());
    CHECK(from_partitions == tuples);

    const BigInt expected = oracle::leibniz_det(a);
    CHECK(det_block_graph(g) == expected);
    CHECK(determinant(g) == expected);
  }
}

TEST_CASE("non block graphs are rejected") {
  CHECK_THROWS_AS(det_block_graph(digraph_of_matrix(adjacency(4, cycle_edges(0, 4)))), DomainError);
}

TEST_CASE("beyond 15 blocks the constructive correspondence generates the tuples") {
  // a star of 16 K2 blocks at one center
  std::vector<std::pair<int, int>> edges;
  for (int leaf = 1; leaf <= 16; ++leaf) edges.emplace_back(0, leaf);
  auto g = digraph_of_matrix(adjacency(17, edges));
  auto d = decompose(g);
  REQUIRE(d.blocks.size() == 16);
  auto tuples = feasible_ktuples(g);
  CHECK(tuples.size() == bpartition_count(d));  // 16
  for (const auto& t : tuples) {
    int sum = 0;
    for (int alpha : t) sum += alpha;
    CHECK(sum == 17);
  }
  // det via the k-tuple formula equals the B-partition determinant
  CHECK(det_block_graph(g) == determinant(g));
  // star K_{1,16}: every tuple has one alpha = 2 and fifteen alpha = 1, so the
  // products vanish and the determinant is 0
  CHECK(det_block_graph(g) == BigInt(0));
}

TEST_SUITE_END();
