#include <doctest.h>

#include <random>

#include "tsv/errors.hpp"
#include "tsv/linalg.hpp"
#include "tsv/smith.hpp"

using namespace tsv;

TEST_CASE("scalar parsing and printing round-trip") {
  for (const char* text : {"0", "3/2", "-7", "sqrt(2)", "-1/2*sqrt(2)", "1+1/3*sqrt(5)", "-2/3-sqrt(3)"}) {
    Scalar s = Scalar::parse(text);
    CHECK(Scalar::parse(s.str()) == s);
  }
  CHECK(Scalar::parse("-sqrt(2)/2") == Scalar::parse("-1/2*sqrt(2)"));
  CHECK(Scalar::parse("4/6") == Scalar(Rational(2, 3)));
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("sqrt(4)"), std::exception);
}

TEST_CASE("quadratic arithmetic is exact") {
  Scalar r2 = Scalar::parse("sqrt(2)");
  CHECK(r2 * r2 == Scalar(2));
  CHECK((r2 + 1) * (r2 - 1) == Scalar(1));
  CHECK(r2.inverse() == Scalar::parse("1/2*sqrt(2)"));
  CHECK(r2.norm() == -2);
  CHECK(Scalar::parse("3+sqrt(2)").conjugate() == Scalar::parse("3-sqrt(2)"));
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("different extension tags do not mix") {
  Scalar r2 = Scalar::parse("sqrt(2)");
  Scalar r3 = Scalar::parse("sqrt(3)");
  CHECK_THROWS_AS(r2 + r3, ExtensionMismatch);
  CHECK_THROWS_AS(r2 * r3, ExtensionMismatch);
  CHECK_NOTHROW(r2 + Scalar(Rational(1, 2)));
}

TEST_CASE("matrix shape errors") {
  IntMatrix a(2, 3), b(2, 3);
  CHECK_THROWS_AS(a * b, DimensionError);
  CHECK_THROWS_AS(a + IntMatrix(3, 2), DimensionError);
  CHECK_THROWS_AS(determinant(a), DimensionError);
  CHECK_THROWS_AS((IntMatrix{{1, 2}, {3}}), DimensionError);
}

TEST_CASE("rational inverse, solve and nullspace") {
  RatMatrix m{{2, 1}, {1, 1}};
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == RatMatrix::identity(2));
  CHECK_FALSE(inverse(RatMatrix{{1, 2}, {2, 4}}));
  auto x = solve(m, RatVector{Rational(3), Rational(2)});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  auto ns = nullspace(RatMatrix{{1, 2, 3}});
  CHECK(ns.size() == 2);
}

namespace {

Integer gcd_of_entries(const IntMatrix& m) {
  Integer g = 0;
  for (const auto& v : m.entries()) g = gcd(g, v);
  return g;
}

}  // namespace

TEST_CASE("smith normal form on random matrices") {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<long> entry(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 4;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
    SmithForm snf = smith_normal_form(m);
    CHECK(snf.U * m * snf.V == snf.D);
    CHECK(is_unimodular(snf.U));
    CHECK(is_unimodular(snf.V));
    auto d = snf.invariant_factors();
    // d_1 is the gcd of all entries.
    CHECK(d[0] == gcd_of_entries(m));
    if (rows == cols) {
      Integer prod = 1;
      for (const auto& x : d) prod *= x;
      CHECK(prod == abs(determinant(m)));
      CHECK(Rational(determinant(m)) == determinant(to_rational(m)));
    }
    CHECK(snf.rank() == rank(to_rational(m)));
  }
}

TEST_CASE("integer kernel is saturated and canonical") {
  IntMatrix m{{2, 4, 6}};
  auto k = integer_kernel(m);
  REQUIRE(k.size() == 2);
  IntMatrix cols(3, 2);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 3; ++i) cols(i, j) = k[j][i];
  CHECK((m * cols).is_zero());
  CHECK(columns_saturated(cols));
  // Same lattice from a different generating set gives the same basis.
  auto k2 = integer_kernel(IntMatrix{{1, 2, 3}, {3, 6, 9}});
  CHECK(k2 == k);
}

TEST_CASE("hermite rows") {
  IntMatrix h = hermite_rows(IntMatrix{{2, 4}, {1, 3}, {0, 0}});
  CHECK(h == IntMatrix{{1, 1}, {0, 2}});
  CHECK(hermite_rows(IntMatrix{{0, 0}}).rows() == 0);
}

TEST_CASE("complement basis completes to a unimodular matrix") {
  IntMatrix y{{1, 0}, {2, 1}, {3, 5}, {0, 1}};
  REQUIRE(columns_saturated(y));
  IntMatrix c = complement_basis(y);
  IntMatrix full(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 2; ++j) full(i, j) = y(i, j);
    for (std::size_t j = 0; j < 2; ++j) full(i, 2 + j) = c(i, j);
  }
  CHECK(is_unimodular(full));
  CHECK_FALSE(columns_saturated(IntMatrix{{2}, {0}}));
}

TEST_CASE("unimodular inverse") {
  IntMatrix m{{2, 1}, {1, 1}};
  auto inv = unimodular_inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == IntMatrix::identity(2));
  CHECK_FALSE(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("clearing quadratic entries to an integer system") {
  ScalarMatrix m{{Scalar::parse("1/2+sqrt(2)"), Scalar(1)}};
  IntMatrix c = clear_to_integer_system(m);
  CHECK(c == IntMatrix{{1, 2}, {1, 0}});
}
