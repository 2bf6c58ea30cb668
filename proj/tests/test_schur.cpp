#include <doctest.h>

#include <random>

#include "blockpoly/oracles.hpp"
#include "blockpoly/schur.hpp"
#include "test_support.hpp"

using namespace blockpoly;
using namespace testsupport;

TEST_SUITE_BEGIN("schur");

namespace {

double rel_err(const Complex& a, const Complex& b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

// Blockless digraph with an all-zero out-row at vertex `zero_row`, so every
// principal submatrix avoiding that row is singular. Loops control the d-case.
Matrix<BigInt> zero_row_instance(std::mt19937& rng, int n, int zero_row, bool loops) {
  std::uniform_int_distribution<int> val(1, 5);
  std::uniform_real_distribution<double> coin(0, 1);
  Matrix<BigInt> a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    a.at(i, (i + 1) % n) = BigInt(val(rng));
    if (coin(rng) < 0.5) a.at((i + 1) % n, i) = BigInt(val(rng));
  }
  for (int c = 0; c < n / 2; ++c) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    int i = pick(rng), j = pick(rng);
    if (i != j) a.at(i, j) = BigInt(val(rng));
  }
  if (loops)
    for (int i = 0; i < n; ++i) a.at(i, i) = BigInt(val(rng));
  for (int j = 0; j < n; ++j) a.at(zero_row, j) = BigInt(0);
  // keep the underlying structure a 2-connected cycle: in-edges into zero_row
  a.at((zero_row + 1) % n, zero_row) = BigInt(val(rng));
  a.at((zero_row + n - 1) % n, zero_row) = BigInt(val(rng));
  return a;
}

}  // namespace

TEST_CASE("order-2 closed forms") {
  auto g = digraph_of_matrix(int_matrix({{3, 4}, {5, 6}}));
  CHECK(det_schur(g) == BigInt(3 * 6 - 4 * 5));
  // A1 = [[0]] singular with d = 5: 5 (0 - bc/5) = -bc
  auto g2 = digraph_of_matrix(int_matrix({{0, 7}, {2, 5}}));
  CHECK(det_schur(g2) == BigInt(-14));
  auto g1 = digraph_of_matrix(int_matrix({{9}}));
  CHECK(det_schur(g1) == BigInt(9));
  CHECK(det_schur(WeightedDigraph<BigInt>()) == BigInt(1));
}

TEST_CASE("float mode matches the value oracle on random blockless digraphs") {
  std::mt19937 rng(606);
  int used = 0;
  for (int rep = 0; rep < 80; ++rep) {
    std::uniform_int_distribution<int> order(3, 8);
    auto a = random_blockless_matrix(rng, order(rng));
    auto g = digraph_of_matrix(a);
    if (!decompose(g).cut_vertices.empty()) continue;
    ++used;
    auto ac = to_complex(a);
    Complex expected = oracle::leibniz_det(ac);
    Complex got = det_schur(digraph_of_matrix(ac));
    CHECK(rel_err(got, expected) < 1e-6);
  }
  CHECK(used > 50);
}

TEST_CASE("exact mode matches the value oracle, all cases") {
  std::mt19937 rng(607);
  for (int rep = 0; rep < 40; ++rep) {
    std::uniform_int_distribution<int> order(3, 7);
    auto a = random_blockless_matrix(rng, order(rng));
    auto g = digraph_of_matrix(a);
    CHECK(det_schur(g) == oracle::leibniz_det(a));
  }
}

TEST_CASE("cases 2 and 3 fire on singular leading submatrices") {
  std::mt19937 rng(608);
  int case2 = 0, case3 = 0;
  for (int rep = 0; rep < 50; ++rep) {
    std::uniform_int_distribution<int> order(4, 7);
    const int n = order(rng);
    const bool loops = rep % 2 == 0;
    std::uniform_int_distribution<int> zr(0, n - 1);
    const int zero_row = zr(rng);
    auto a = zero_row_instance(rng, n, zero_row, loops);
    auto g = digraph_of_matrix(a);
    if (!decompose(g).cut_vertices.empty()) continue;

    SchurOptions opt;
    // force a pivot whose removal keeps the zero row inside A1
    for (VertexId v : g.vertices())
      if (v != zero_row + 1) {
        opt.forced_pivots = {v};
        break;
      }
    std::vector<EliminationStep<BigInt>> trace;
    CHECK(det_schur(g, opt, &trace) == oracle::leibniz_det(a));
    for (const auto& step : trace) {
      if (step.kind == SchurCase::Case2SingularDNonzero) ++case2;
      if (step.kind == SchurCase::Case3SingularDZero) ++case3;
    }

    // float route too
    auto ac = to_complex(a);
    Complex expected = oracle::leibniz_det(ac);
    Complex got = det_schur(digraph_of_matrix(ac), opt);
    CHECK(rel_err(got, expected) < 1e-6);
  }
  CHECK(case2 > 10);
  CHECK(case3 > 10);
}

TEST_CASE("case 3 identity on singular A1") {
  // det [[A1, b], [c, 0]] = det(A1 - b c) when det(A1) = 0
  std::mt19937 rng(609);
  std::uniform_int_distribution<int> val(-4, 4);
  for (int rep = 0; rep < 40; ++rep) {
    std::uniform_int_distribution<int> order(3, 6);
    const int n = order(rng);
    Matrix<BigInt> a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    // random A1 with its last row a copy of the first: singular
    for (int i = 0; i + 1 < n; ++i)
      for (int j = 0; j + 1 < n; ++j) a.at(i, j) = BigInt(val(rng));
    for (int j = 0; j + 1 < n; ++j) a.at(n - 2, j) = a.at(0, j);
    for (int i = 0; i + 1 < n; ++i) a.at(i, n - 1) = BigInt(val(rng));  // b
    for (int j = 0; j + 1 < n; ++j) a.at(n - 1, j) = BigInt(val(rng));  // c
    a.at(n - 1, n - 1) = BigInt(0);

    Matrix<BigInt> updated(static_cast<std::size_t>(n) - 1, static_cast<std::size_t>(n) - 1);
    for (int i = 0; i + 1 < n; ++i)
      for (int j = 0; j + 1 < n; ++j)
        updated.at(i, j) = a.at(i, j) - a.at(i, n - 1) * a.at(n - 1, j);
    CHECK(oracle::leibniz_det(a) == oracle::leibniz_det(updated));
  }
}

TEST_CASE("regression: loose singularity call on an invertible A1") {
  // Found by a randomized sweep: the Hadamard-style float singularity bound
  // declares this pivot's A1 singular although det(A1) is a small nonzero
  // integer, so the d = 0 case must keep its det(A1) correction term.
  auto a = int_matrix({{0, 6, 0, 0, 0, 0, 0, 0, 2},
                       {0, 0, -2, 0, 0, 0, 0, 0, 6},
                       {0, -1, -4, -5, 0, -4, 0, 0, 0},
                       {0, 0, -4, 0, 1, 0, 0, 0, -3},
                       {0, 0, 0, 4, 0, 2, 0, 0, 0},
                       {0, 0, -5, 0, 2, 0, 2, 0, 0},
                       {0, 0, 0, 0, 0, 0, 0, -5, 0},
                       {0, 0, 0, 0, 0, 0, -5, -2, -5},
                       {4, -3, 0, -5, 0, 0, 0, -5, 0}});
  const BigInt expected = bareiss_det(a);
  CHECK(expected == BigInt(93600));
  CHECK(det_schur(digraph_of_matrix(a)) == expected);
  Complex got = det_schur(digraph_of_matrix(to_complex(a)));
  CHECK(rel_err(got, Complex{93600.0, 0.0}) < 1e-6);
}

TEST_CASE("elimination order does not change the result") {
  std::mt19937 rng(610);
  for (int rep = 0; rep < 15; ++rep) {
    auto a = random_blockless_matrix(rng, 6);
    auto g = digraph_of_matrix(to_complex(a));
    Complex reference = oracle::leibniz_det(to_complex(a));
    for (PivotRule rule : {PivotRule::Exhaustive, PivotRule::MaxDegree}) {
      SchurOptions opt;
      opt.rule = rule;
      CHECK(rel_err(det_schur(g, opt), reference) < 1e-6);
    }
    std::vector<VertexId> order(g.vertices());
    std::shuffle(order.begin(), order.end(), rng);
    SchurOptions forced;
    forced.forced_pivots = order;
    CHECK(rel_err(det_schur(g, forced), reference) < 1e-6);
  }
}

TEST_CASE("genuinely complex weights") {
  std::mt19937 rng(611);
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<int> val(-3, 3);
  int used = 0;
  for (int rep = 0; rep < 40 && used < 25; ++rep) {
    std::uniform_int_distribution<int> order(3, 7);
    auto ai = random_blockless_matrix(rng, order(rng));
    Matrix<Complex> a(ai.rows(), ai.cols());
    for (std::size_t i = 0; i < ai.rows(); ++i)
      for (std::size_t j = 0; j < ai.cols(); ++j) {
        a.at(i, j) = {ai.at(i, j).to_double(), 0.0};
        if (!ai.at(i, j).is_zero() && coin(rng) < 0.5)
          a.at(i, j) += Complex{0.0, static_cast<double>(val(rng))};
      }
    auto g = digraph_of_matrix(a);
    if (!decompose(g).cut_vertices.empty()) continue;
    ++used;
    Complex expected = oracle::leibniz_det(a);
    CHECK(rel_err(det_schur(g), expected) < 1e-6);
  }
  CHECK(used >= 20);
}

TEST_CASE("block handoff inside the recursion") {
  // M1 has cut-vertices: det_schur must hand off and still be exact
  auto g = digraph_of_matrix(matrix_m1());
  std::vector<EliminationStep<BigInt>> trace;
  CHECK(det_schur(g, {}, &trace) == load_golden("m1").det);
  REQUIRE(trace.size() == 1);
  CHECK(trace[0].kind == SchurCase::BlockHandoff);
}

TEST_CASE("best elimination vertex") {
  // P4: every deletion leaves 2 blocks; smallest id wins
  auto p4 = digraph_of_matrix(adjacency(4, path_edges(0, 4)));
  CHECK(best_elimination_vertex(p4) == 1);
  CHECK(blocks_after_removal(p4, 1) == 2);
  CHECK(blocks_after_removal(p4, 2) == 2);

  // K4: symmetry, smallest id
  std::vector<std::pair<int, int>> k4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.emplace_back(i, j);
  CHECK(best_elimination_vertex(digraph_of_matrix(adjacency(4, k4))) == 1);

  // wheel on 5 vertices: hub or rim, every deletion leaves one block
  std::vector<std::pair<int, int>> w5 = {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                         {1, 2}, {2, 3}, {3, 4}, {4, 1}};
  auto wheel = digraph_of_matrix(adjacency(5, w5));
  CHECK(best_elimination_vertex(wheel) == 1);
  CHECK(blocks_after_removal(wheel, 1) == 1);

  // C5 plus chord {0,2}: deleting vertex 1 leaves a 3-block path
  std::vector<std::pair<int, int>> c5c = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}};
  auto theta = digraph_of_matrix(adjacency(5, c5c));
  CHECK(best_elimination_vertex(theta) == 1);
  CHECK(blocks_after_removal(theta, 1) == 3);
  auto report = degree_heuristic_report(theta);
  CHECK(report.agree);
  CHECK(report.blocks_after_exhaustive == 3);

  CHECK_THROWS_AS(best_elimination_vertex(digraph_of_matrix(Matrix<BigInt>(1, 1))), DomainError);
  CHECK(best_elimination_vertex(p4, 2) == 1);  // threaded scan agrees
}

TEST_CASE("degree heuristic agrees exhaustively through order 4") {
  for (int n = 2; n <= 4; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (uint32_t mask = 0; mask < (uint32_t(1) << pairs); ++mask) {
      Matrix<BigInt> a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      int k = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k)
          if (mask & (uint32_t(1) << k)) {
            a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = BigInt(1);
            a.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = BigInt(1);
          }
      auto g = digraph_of_matrix(a);
      if (g.component_vertex_sets().size() != 1) continue;
      if (!decompose(g).cut_vertices.empty()) continue;
      CHECK(degree_heuristic_report(g).agree);
    }
  }
}

TEST_CASE("order-6 regression fixture where the degree heuristic fails") {
  // seeded random search result: no maximum-degree vertex achieves the
  // maximum block count (degree 4 vertex yields 1 block, a degree 3 vertex
  // yields 2)
  auto g = digraph_of_matrix(adjacency(
      6, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}, {2, 3}, {2, 5}, {3, 5}, {4, 5}}));
  REQUIRE(decompose(g).cut_vertices.empty());
  auto r = degree_heuristic_report(g);
  CHECK_FALSE(r.agree);
  CHECK(r.max_degree == 4);
  CHECK(r.blocks_after_heuristic == 1);
  CHECK(r.blocks_after_exhaustive == 2);
  CHECK(r.exhaustive_vertex == 1);
}

TEST_SUITE_END();
