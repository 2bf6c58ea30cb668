#include <doctest.h>

#include <random>

#include "blockpoly/oracles.hpp"
#include "test_support.hpp"

using namespace blockpoly;
using namespace testsupport;

TEST_SUITE_BEGIN("oracles");

TEST_CASE("closed forms at tiny orders") {
  Matrix<BigInt> a1(1, 1);
  a1.at(0, 0) = BigInt(9);
  CHECK(oracle::leibniz_charpoly(a1).coeffs() == std::vector<BigInt>{BigInt(9), BigInt(-1)});
  CHECK(oracle::leibniz_permpoly(a1).coeffs() == std::vector<BigInt>{BigInt(9), BigInt(-1)});

  // [[a,b],[c,d]]: phi = (a-x)(d-x) - bc, psi = (a-x)(d-x) + bc
  Matrix<BigInt> a2 = int_matrix({{2, 3}, {5, 7}});
  auto phi = oracle::leibniz_charpoly(a2);
  auto psi = oracle::leibniz_permpoly(a2);
  CHECK(phi.coeffs() == std::vector<BigInt>{BigInt(2 * 7 - 15), BigInt(-9), BigInt(1)});
  CHECK(psi.coeffs() == std::vector<BigInt>{BigInt(2 * 7 + 15), BigInt(-9), BigInt(1)});

  CHECK(oracle::leibniz_charpoly(Matrix<BigInt>(0, 0)) == Polynomial<BigInt>::unit());
  CHECK(oracle::leibniz_det(Matrix<BigInt>(0, 0)) == BigInt(1));
}

TEST_CASE("golden fixture polynomials") {
  auto g1 = load_golden("m1");
  CHECK(oracle::leibniz_charpoly(matrix_m1()) == g1.phi);
  CHECK(oracle::leibniz_permpoly(matrix_m1()) == g1.psi);
  CHECK(oracle::leibniz_det(matrix_m1()) == g1.det);
  CHECK(oracle::leibniz_per(matrix_m1()) == g1.per);

  auto g2 = load_golden("m2");
  CHECK(oracle::leibniz_charpoly(matrix_m2()) == g2.phi);
  CHECK(oracle::leibniz_permpoly(matrix_m2()) == g2.psi);
  CHECK(oracle::leibniz_det(matrix_m2()) == g2.det);
  CHECK(oracle::leibniz_per(matrix_m2()) == g2.per);
}

TEST_CASE("sign convention audit") {
  std::mt19937 rng(5);
  for (int rep = 0; rep < 40; ++rep) {
    auto a = random_int_matrix(rng, 6, 0.6);
    auto phi = oracle::leibniz_charpoly(a);
    CHECK(phi.eval_at_zero() == oracle::leibniz_det(a));
    CHECK(phi.degree() == 6);
    CHECK(phi.leading() == BigInt(1));  // (-1)^6
    auto psi = oracle::leibniz_permpoly(a);
    CHECK(psi.eval_at_zero() == oracle::leibniz_per(a));
    CHECK(psi.leading() == BigInt(1));
  }
}

TEST_CASE("polynomial oracle caps and threading") {
  Matrix<BigInt> big(11, 11);
  CHECK_THROWS_AS(oracle::leibniz_charpoly(big), SizeError);
  Matrix<BigInt> big13(13, 13);
  CHECK_THROWS_AS(oracle::leibniz_det(big13), SizeError);

  std::mt19937 rng(9);
  auto a = random_int_matrix(rng, 7, 0.7);
  CHECK(oracle::leibniz_charpoly(a, 1) == oracle::leibniz_charpoly(a, 3));

  // float-mode sums combine worker partials in a fixed order: results are
  // bit-identical across thread counts
  auto ac = to_complex(random_int_matrix(rng, 8, 0.8));
  for (std::size_t i = 0; i < ac.rows(); ++i)
    for (std::size_t j = 0; j < ac.cols(); ++j) ac.at(i, j) += Complex{0.0, 0.25 * double((i * 7 + j) % 5)};
  auto p1 = oracle::leibniz_charpoly(ac, 1);
  auto p4 = oracle::leibniz_charpoly(ac, 4);
  REQUIRE(p1.coeffs().size() == p4.coeffs().size());
  for (std::size_t i = 0; i < p1.coeffs().size(); ++i) {
    CHECK(p1.coeffs()[i].real() == p4.coeffs()[i].real());
    CHECK(p1.coeffs()[i].imag() == p4.coeffs()[i].imag());
  }
}

TEST_CASE("laplace expansion: S = {first row} is the cofactor expansion") {
  std::mt19937 rng(13);
  for (int rep = 0; rep < 25; ++rep) {
    auto a = random_int_matrix(rng, 5, 0.7);
    auto [det1, per1] = oracle::laplace_expand(a, {0});
    CHECK(det1 == oracle::leibniz_det(a));
    CHECK(per1 == oracle::leibniz_per(a));
  }
}

TEST_CASE("laplace expansion is independent of the row subset") {
  std::mt19937 rng(14);
  for (int n : {4, 5}) {
    for (int rep = 0; rep < 10; ++rep) {
      auto a = random_int_matrix(rng, n, 0.8);
      const BigInt det = oracle::leibniz_det(a);
      const BigInt per = oracle::leibniz_per(a);
      // every nonempty proper subset of rows
      for (uint32_t mask = 1; mask + 1 < (uint32_t(1) << n); ++mask) {
        std::vector<int> rows;
        for (int i = 0; i < n; ++i)
          if (mask & (uint32_t(1) << i)) rows.push_back(i);
        if (rows.size() == static_cast<std::size_t>(n)) continue;
        auto [d, p] = oracle::laplace_expand(a, rows);
        CHECK(d == det);
        CHECK(p == per);
      }
    }
  }
}

TEST_CASE("laplace per of the all-ones 3x3 is 6") {
  auto ones = int_matrix({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  auto [d, p] = oracle::laplace_expand(ones, {0, 1});
  CHECK(p == BigInt(6));
  CHECK(d == BigInt(0));
}

TEST_CASE("faddeev-leverrier") {
  // identity 3x3: (1-x)^3
  auto fl = oracle::faddeev_leverrier(Matrix<Complex>::identity(3));
  auto expected = Polynomial<Complex>(std::vector<Complex>{{1, 0}, {-3, 0}, {3, 0}, {-1, 0}});
  CHECK(Polynomial<Complex>::approx_equal(fl, expected, 1e-9));

  // nilpotent Jordan block: (-x)^n
  Matrix<Complex> jordan(4, 4);
  for (int i = 0; i + 1 < 4; ++i) jordan.at(i, i + 1) = {1, 0};
  auto flj = oracle::faddeev_leverrier(jordan);
  CHECK(Polynomial<Complex>::approx_equal(
      flj, Polynomial<Complex>(std::vector<Complex>{{0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}}),
      1e-9));

  // against the Leibniz oracle on the integer fixture, cast to float
  auto m1c = to_complex(matrix_m1());
  CHECK(Polynomial<Complex>::approx_equal(oracle::faddeev_leverrier(m1c),
                                          oracle::leibniz_charpoly(m1c), 1e-9));

  std::mt19937 rng(23);
  for (int rep = 0; rep < 100; ++rep) {
    std::uniform_int_distribution<int> order(1, 8);
    auto a = to_complex(random_int_matrix(rng, order(rng), 0.6));
    CHECK(Polynomial<Complex>::approx_equal(oracle::faddeev_leverrier(a),
                                            oracle::leibniz_charpoly(a), 1e-9));
  }
}

TEST_SUITE_END();
