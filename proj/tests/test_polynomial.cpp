#include <random>
#include <set>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "subdepth/polynomial.hpp"

using namespace subdepth;

namespace {

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> value(lo, hi);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = value(rng);
  return m;
}

}  // namespace

TEST_CASE("char_poly of small matrices", "[specpoly]") {
  CHECK(char_poly(IntMatrix{{1, 1}, {1, 1}}) == IntPolynomial{0, -2, 1});
  CHECK(char_poly(IntMatrix::identity(2)) == IntPolynomial{1, -2, 1});
  CHECK(char_poly(IntMatrix{{2, 1, 0}, {1, 3, 1}, {0, 1, 2}}) == IntPolynomial{-8, 14, -7, 1});
  CHECK(char_poly(IntMatrix{{7}}) == IntPolynomial{-7, 1});
  CHECK_THROWS_AS(char_poly(IntMatrix{{1, 2}}), input_error);
}

TEST_CASE("char_poly matches the 2x2 trace-determinant formula", "[specpoly]") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> value(-20, 20);
  for (int t = 0; t < 50; ++t) {
    long a = value(rng), b = value(rng), c = value(rng), d = value(rng);
    CHECK(char_poly(IntMatrix{{a, b}, {c, d}}) == IntPolynomial{a * d - b * c, -(a + d), 1});
  }
}

TEST_CASE("Cayley-Hamilton on random symmetric matrices", "[specpoly][property]") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 40; ++t) {
    const IntMatrix m = random_symmetric(rng, 1 + t % 5, -6, 6);
    const IntMatrix zero(m.rows(), m.cols());
    CHECK(evaluate_at(char_poly(m), m) == zero);
  }
}

TEST_CASE("polynomial gcd and pseudo-remainder", "[specpoly]") {
  // (x-1)^2 (x-2) and its derivative share x - 1.
  const IntPolynomial p{-2, 5, -4, 1};
  CHECK(polynomial_gcd(p, p.derivative()) == IntPolynomial{-1, 1});
  CHECK(polynomial_gcd(IntPolynomial{2, 4}, IntPolynomial{3, 6}) == IntPolynomial{1, 2});
  CHECK(polynomial_gcd(IntPolynomial{-1, 0, 1}, IntPolynomial{1}) == IntPolynomial{1});
  CHECK(pseudo_remainder(IntPolynomial{1, 0, 1}, IntPolynomial{0, 1}) == IntPolynomial{1});
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK(IntPolynomial{-6, 0, 9}.primitive_part() == IntPolynomial{-2, 0, 3});
  CHECK(IntPolynomial{6, 0, -9}.primitive_part() == IntPolynomial{-2, 0, 3});
}

TEST_CASE("minpoly_degree counts distinct eigenvalues", "[specpoly]") {
  CHECK(minpoly_degree(IntMatrix{{1, 1}, {1, 1}}) == 2);
  CHECK(minpoly_degree(IntMatrix::identity(3)) == 1);
  CHECK(minpoly_degree(IntMatrix{{2, 1, 0}, {1, 3, 1}, {0, 1, 2}}) == 3);
  CHECK(minpoly_degree(IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}}) == 2);
  CHECK(minpoly_degree(IntMatrix{{3, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 3, 0}, {0, 0, 0, 5}}) == 3);
  // J_4 has eigenvalues 4, 0, 0, 0.
  CHECK(minpoly_degree(IntMatrix{{1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 1, 1}}) == 2);
  CHECK_THROWS_AS(minpoly_degree(IntMatrix{{1, 2}, {3, 4}}), input_error);
}

TEST_CASE("minpoly_degree of random diagonal matrices", "[specpoly][property]") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> value(-3, 3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + t % 6;
    IntMatrix d(n, n);
    std::set<long> distinct;
    for (std::size_t i = 0; i < n; ++i) {
      long v = value(rng);
      d(i, i) = v;
      distinct.insert(v);
    }
    CHECK(minpoly_degree(d) == distinct.size());
  }
}

TEST_CASE("depth_upper_bound", "[specpoly]") {
  CHECK(depth_upper_bound(InclusionMatrix{{1, 1, 0, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 0, 1, 1}}) == 5);
  CHECK(depth_upper_bound(InclusionMatrix{{1}, {1}}) == 3);
  CHECK(depth_upper_bound(InclusionMatrix(IntMatrix::identity(4))) == 1);
}

TEST_CASE("polynomial printing", "[specpoly]") {
  std::ostringstream os;
  os << IntPolynomial{-8, 14, -7, 1};
  CHECK(os.str() == "x^3 - 7x^2 + 14x - 8");
}
