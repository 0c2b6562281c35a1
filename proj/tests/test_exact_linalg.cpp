#include "oracles.hpp"
#include "segre/exact_linalg.hpp"
#include "segre/matrix_io.hpp"

#include <doctest.h>

#include <random>

using namespace segre;

namespace {

// The 10x10 example written out entry by entry with alpha..delta = 1..4.
ExactMatrix example_10x10() {
  ExactMatrix m = ExactMatrix::Zero(10, 10);
  const int diag[10] = {1, 1, 1, 2, 2, 2, 3, 4, 4, 4};
  for (int i = 0; i < 10; ++i) m(i, i) = diag[i];
  m(0, 1) = 1;
  m(3, 4) = 1;
  m(4, 5) = 1;
  m(7, 8) = 1;
  return m;
}

ExactMatrix random_matrix(int rows, int cols, std::mt19937& rng, bool rational, int zero_bias) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> coin(0, 9);
  ExactMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (coin(rng) < zero_bias) {
        m(i, j) = 0;
      } else {
        m(i, j) = rational ? Rational(num(rng), den(rng)) : Rational(num(rng));
      }
    }
  }
  return m;
}

// A low-rank product so rank deficiency actually occurs.
ExactMatrix random_low_rank(int n, int k, std::mt19937& rng) {
  return random_matrix(n, k, rng, true, 2) * random_matrix(k, n, rng, true, 2);
}

ExactMatrix from_ints(std::initializer_list<std::initializer_list<int>> rows) {
  ExactMatrix m(static_cast<Eigen::Index>(rows.size()),
                static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("rank") {
  CHECK(rank(ExactMatrix::Identity(10, 10)) == 10);
  CHECK(rank(ExactMatrix::Zero(3, 3)) == 0);
  const ExactMatrix shifted = shift(example_10x10(), Rational(1));
  // min-formula: 10 - sum min(b, 1) over alpha's blocks (2, 1).
  CHECK(rank(shifted) == 8);
  CHECK(oracle::gauss_rank(shifted) == 8);
  CHECK(rank(from_ints({{1, 2, 3}, {2, 4, 6}})) == 1);
  CHECK(rank(from_ints({{0, 0, 1}, {0, 1, 0}})) == 2);
}

TEST_CASE("bareiss rank agrees with rational Gaussian elimination") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int rows = 1 + trial % 7;
    const int cols = 1 + (trial / 7) % 7;
    ExactMatrix m = trial % 3 == 0 ? random_matrix(rows, cols, rng, trial % 2 == 0, 6)
                                   : random_matrix(rows, cols, rng, true, 3);
    if (trial % 5 == 0 && rows == cols) m = random_low_rank(rows, std::max(1, rows / 2), rng);
    REQUIRE(rank(m) == oracle::gauss_rank(m));
  }
  // Fixed-width scalars work when minors stay small.
  Eigen::Matrix<long long, 3, 3> small;
  small << 2, 4, 6, 1, 3, 5, 3, 7, 11;
  CHECK(bareiss_rank(small) == 2);
}

TEST_CASE("rank of a product is bounded by the factors") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const ExactMatrix a = random_matrix(4, 5, rng, true, 5);
    const ExactMatrix b = random_matrix(5, 3, rng, true, 5);
    CHECK(rank(mat_mul(a, b)) <= std::min(rank(a), rank(b)));
  }
}

TEST_CASE("rank is a similarity invariant under unimodular conjugation") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 5;
    const auto [u, u_inv] = oracle::random_unimodular(n, 6, rng);
    REQUIRE(mat_mul(u, u_inv) == ExactMatrix::Identity(n, n));
    const ExactMatrix a = random_low_rank(n, 1 + trial % n, rng);
    CHECK(rank(u * a * u_inv) == rank(a));
  }
}

TEST_CASE("mat_mul, mat_pow and shift") {
  CHECK(shift(from_ints({{5, 1}, {0, 5}}), Rational(5)) == from_ints({{0, 1}, {0, 0}}));
  CHECK(mat_pow(from_ints({{0, 1}, {0, 0}}), 2) == ExactMatrix::Zero(2, 2));
  CHECK(mat_pow(from_ints({{2, 1}, {0, 3}}), 0) == ExactMatrix::Identity(2, 2));
  const ExactMatrix j3 = from_ints({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(mat_pow(j3, 3) == ExactMatrix::Zero(3, 3));
  CHECK(mat_pow(j3, 2) == from_ints({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
  CHECK(rank(mat_pow(j3, 2)) == 1);
  const ExactMatrix a = from_ints({{1, 1}, {1, 0}});
  CHECK(mat_pow(a, 10)(0, 0) == 89);  // Fibonacci
  CHECK(mat_pow(a, 5) == a * a * a * a * a);

  CHECK_THROWS_AS(mat_mul(ExactMatrix::Zero(2, 3), ExactMatrix::Zero(2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(mat_pow(ExactMatrix::Zero(2, 3), 2), DimensionMismatch);
  CHECK_THROWS_AS(shift(ExactMatrix::Zero(2, 3), Rational(1)), DimensionMismatch);
}

TEST_CASE("characteristic polynomial") {
  CHECK(char_poly(from_ints({{1, 0}, {0, 2}})) == PolynomialZ({2, -3, 1}));
  CHECK(char_poly(from_ints({{5, 1}, {0, 5}})) == PolynomialZ({25, -10, 1}));

  const auto expected = oracle::expand_roots({{1, 3}, {2, 3}, {3, 1}, {4, 3}});
  std::vector<BigInt> coeffs(expected.begin(), expected.end());
  CHECK(char_poly(example_10x10()) == PolynomialZ(coeffs));
  CHECK(polynomial_from_roots({{1, 3}, {2, 3}, {3, 1}, {4, 3}}) == PolynomialZ(coeffs));

  // Rational input: char poly of 6 * A, whose roots are 6 * (1/2) and 6 * (-1/3).
  ExactMatrix r(2, 2);
  r << Rational(1, 2), Rational(0), Rational(0), Rational(-1, 3);
  CHECK(denominator_lcm(r) == 6);
  CHECK(char_poly(r) == PolynomialZ({-6, -1, 1}));

  CHECK_THROWS_AS(char_poly(ExactMatrix::Zero(2, 3)), DimensionMismatch);
  CHECK(format_polynomial(PolynomialZ({2, -3, 1})) == "x^2 - 3x + 2");
}

TEST_CASE("Cayley-Hamilton on random matrices up to 8x8") {
  std::mt19937 rng(3);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 4; ++trial) {
      const ExactMatrix a = random_matrix(n, n, rng, trial % 2 == 1, 3);
      const PolynomialZ p = char_poly(a);
      CHECK(p.degree() == n);
      CHECK(p.leading() == 1);
      const ExactMatrix scaled = a * Rational(denominator_lcm(a));
      CHECK(evaluate_at_matrix(p, scaled) == ExactMatrix::Zero(n, n));
    }
  }
}

TEST_CASE("rational roots") {
  auto split = rational_roots(PolynomialZ({2, -3, 1}));
  CHECK(split.roots == std::vector<RationalRoot>{{Rational(1), 1}, {Rational(2), 1}});
  CHECK(split.remainder_degree() == 0);

  split = rational_roots(PolynomialZ({25, -10, 1}));
  CHECK(split.roots == std::vector<RationalRoot>{{Rational(5), 2}});
  CHECK(split.remainder_degree() == 0);

  split = rational_roots(PolynomialZ({1, 0, 1}));
  CHECK(split.roots.empty());
  CHECK(split.remainder_degree() == 2);

  // (2x - 1)^2 (3x + 2) x^2 (x^2 - 2)
  // = expand by hand: (4x^2 - 4x + 1)(3x + 2) = 12x^3 - 4x^2 - 5x + 2
  //   times (x^4 - 2x^2) = 12x^7 - 4x^6 - 29x^5 + 10x^4 + 10x^3 - 4x^2
  split = rational_roots(PolynomialZ({0, 0, -4, 10, 10, -29, -4, 12}));
  CHECK(split.roots == std::vector<RationalRoot>{
                           {Rational(-2, 3), 1}, {Rational(0), 2}, {Rational(1, 2), 2}});
  CHECK(split.remainder == PolynomialZ({-2, 0, 1}));

  CHECK_THROWS(rational_roots(PolynomialZ()));
}

TEST_CASE("root multiplicities plus remainder degree equal the degree") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> root(-6, 6);
  std::uniform_int_distribution<int> mult(1, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::pair<BigInt, int>> roots;
    for (int k = 0; k < 1 + trial % 4; ++k) roots.push_back({root(rng), mult(rng)});
    // Times an irreducible quadratic on odd trials.
    PolynomialZ p = polynomial_from_roots(roots);
    if (trial % 2) {
      std::vector<BigInt> c(p.coefficients().size() + 2, BigInt(0));
      for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
        c[i] += 3 * p[i];
        c[i + 2] += p[i];
      }
      p = PolynomialZ(c);
    }
    const auto split = rational_roots(p);
    int total = 0;
    for (const auto& r : split.roots) total += r.multiplicity;
    CHECK(total + split.remainder_degree() == p.degree());
    CHECK(split.remainder_degree() == (trial % 2 ? 2 : 0));
  }
}

TEST_CASE("ranks of powers never increase") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const auto [u, u_inv] = oracle::random_unimodular(n, 5, rng);
    // Upper triangular with repeated integer eigenvalues, then conjugated.
    ExactMatrix t = ExactMatrix::Zero(n, n);
    std::uniform_int_distribution<int> ev(0, 2), off(0, 1);
    for (int i = 0; i < n; ++i) {
      t(i, i) = ev(rng);
      for (int j = i + 1; j < n; ++j) t(i, j) = off(rng);
    }
    const ExactMatrix a = u * t * u_inv;
    const auto split = rational_roots(char_poly(a));
    CHECK(split.remainder_degree() == 0);
    for (const auto& r : split.roots) {
      const ExactMatrix b = shift(a, r.value);
      Eigen::Index previous = n;
      for (unsigned k = 1; k <= static_cast<unsigned>(n) + 1; ++k) {
        const Eigen::Index rk = rank(mat_pow(b, k));
        CHECK(rk <= previous);
        previous = rk;
      }
    }
  }
}

TEST_CASE("matrix JSON format") {
  const ExactMatrix m = parse_matrix_json(
      R"({"rows": 2, "cols": 3, "entries": [[1, "-2/3", "5"], [0, "123456789012345678901234567890", -7]]})");
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m(0, 1) == Rational(-2, 3));
  CHECK(m(0, 2) == 5);
  CHECK(m(1, 1) == Rational(BigInt("123456789012345678901234567890")));
  CHECK(parse_matrix_json(format_matrix_json(m)) == m);

  CHECK_THROWS_AS(parse_matrix_json(R"({"rows": 2, "cols": 2, "entries": [[1, 2], [3]]})"),
                  MatrixFormatError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"rows": 1, "cols": 1, "entries": [["2/4"]]})"),
                  MatrixFormatError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"rows": 1, "cols": 1, "entries": [["1/0"]]})"),
                  MatrixFormatError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"rows": 1, "cols": 1, "entries": [[1.5]]})"),
                  MatrixFormatError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"rows": 1, "cols": 1})"), MatrixFormatError);
  CHECK_THROWS_AS(parse_matrix_json(R"({"rows": 2, "cols": 1, "entries": [[1]]})"),
                  MatrixFormatError);
  CHECK_THROWS_AS(parse_matrix_json("not json"), MatrixFormatError);
  CHECK_THROWS_AS(load_matrix_file("/nonexistent/matrix.json"), std::runtime_error);
}
