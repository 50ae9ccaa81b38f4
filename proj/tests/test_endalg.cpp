#include <doctest.h>

#include <set>

#include "common.hpp"
#include "tsv/endalg.hpp"
#include "tsv/errors.hpp"

using namespace tsv;
using namespace tsvtest;

namespace {

Integer ipow(long p, int k) {
  Integer out = 1;
  for (int i = 0; i < k; ++i) out *= p;
  return out;
}

int valuation(long x, long p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

}  // namespace

// Brute-force local solvability of z^2 = a x^2 + b y^2. Over Q_p: look for a
// primitive solution mod p^k. Over R: the form a x^2 + b y^2 must take a
// nonnegative value at a nonzero point.
int hilbert_oracle(long a, long b, long p) {
  if (p == 0) {
    for (long x = -2; x <= 2; ++x)
      for (long y = -2; y <= 2; ++y)
        if ((x || y) && a * x * x + b * y * y >= 0) return 1;
    return -1;
  }
  const int v = std::max(valuation(a, p), valuation(b, p));
  int k = 3 * v + 3;
  if (p > 3) k = 2 * v + 3;  // keeps p^k small; see the module notes
  const long m = ipow(p, k).get_si();
  std::vector<char> square(m, 0), unit_square(m, 0);
  for (long z = 0; z < m; ++z) {
    long r = z * z % m;
    square[r] = 1;
    if (z % p) unit_square[r] = 1;
  }
  auto mod = [m](long x) { return ((x % m) + m) % m; };
  for (long x = 0; x < m; ++x)
    for (long y = 0; y < m; ++y) {
      long rhs = mod(mod(a * (x * x % m)) + mod(b * (y * y % m)));
      bool xy_unit = x % p || y % p;
      if (xy_unit ? square[rhs] : unit_square[rhs]) return 1;
    }
  return -1;
}

TEST_CASE("hilbert symbol against brute-force solvability") {
  const long values[] = {1, -1, 2, -2, 3, -3, 5, -5};
  for (long a : values)
    for (long b : values)
      for (long p : {0L, 2L, 3L, 5L}) {
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(p);
        CHECK(hilbert_symbol(Rational(a), Rational(b), p) == hilbert_oracle(a, b, p));
      }
}

TEST_CASE("hilbert symbol identities") {
  CHECK(hilbert_symbol(-1, -1, kInfinity) == -1);
  CHECK(hilbert_symbol(-1, -1, 2) == -1);
  CHECK(hilbert_symbol(Rational(1, 3), Rational(-2, 5), 3) == hilbert_symbol(3, -10, 3));
  for (long b : {2L, -3L, 7L, -10L})
    for (long p : {0L, 2L, 3L, 5L, 7L}) CHECK(hilbert_symbol(1, b, p) == 1);
  // Product formula.
  for (long a : {-1L, 2L, 3L, -6L})
    for (long b : {-1L, 5L, -7L}) {
      int product = 1;
      for (Place v : relevant_places(a, b)) product *= hilbert_symbol(a, b, v);
      CHECK(product == 1);
    }
  CHECK(relevant_places(Rational(3, 7), 5) == std::vector<Place>{0, 2, 3, 5, 7});
}

TEST_CASE("end algebra of E_i") {
  EndAlgebra e = end_algebra(e_i());
  CHECK(e.dim() == 2);
  CHECK(e.commutative());
  // Basis {1, u} with u = J0.
  Element u = e.basis_element(1);
  CHECK(e.multiply(u, u) == e.scale(e.one(), -1));
  RatMatrix gram = trace_gram(e);
  CHECK(gram == RatMatrix{{2, 0}, {0, -2}});
  CHECK(determinant(gram) == -4);
  CHECK(is_semisimple(e));
  DivisionVerdict v = division_verdict(e);
  CHECK(v.tag == DivisionTag::Field);
  auto cert = std::get<IrreducibleCertificate>(v.certificate);
  CHECK(cert.minimal_polynomial == Polynomial{1, 0, 1});
  CHECK(verify_certificate(e, v));
}

TEST_CASE("end algebras with matrices") {
  EndAlgebra e = end_algebra(e_i());
  for (std::size_t i = 0; i < e.dim(); ++i)
    for (std::size_t j = 0; j < e.dim(); ++j) {
      RatMatrix lhs = e.matrix_of(e.multiply(e.basis_element(i), e.basis_element(j)));
      CHECK(lhs == e.matrix_of(e.basis_element(i)) * e.matrix_of(e.basis_element(j)));
    }
  auto c = e.coordinates(RatMatrix{{Rational(1, 2), -3}, {3, Rational(1, 2)}});
  REQUIRE(c);
  CHECK((*c)[0] == Rational(1, 2));
  CHECK_FALSE(e.coordinates(RatMatrix{{1, 0}, {0, 2}}));
}

TEST_CASE("end algebra ranks and verdicts") {
  EndAlgebra nc = end_algebra(e_nc());
  CHECK(nc.dim() == 1);
  DivisionVerdict vnc = division_verdict(nc);
  CHECK(vnc.tag == DivisionTag::Field);
  CHECK(vnc.describe() == "Field (Q)");

  EndAlgebra s2 = end_algebra(e_sqrt2i());
  CHECK(s2.dim() == 2);
  DivisionVerdict vs2 = division_verdict(s2);
  CHECK(vs2.tag == DivisionTag::Field);
  CHECK(std::get<IrreducibleCertificate>(vs2.certificate).minimal_polynomial == Polynomial{2, 0, 1});

  EndAlgebra m2 = end_algebra(square(e_nc()));
  CHECK(m2.dim() == 4);
  CHECK_FALSE(m2.commutative());
  DivisionVerdict vm2 = division_verdict(m2);
  CHECK(vm2.tag == DivisionTag::NotDivision);
  CHECK(verify_certificate(m2, vm2));

  for (const auto& t : {square(e_i()), square(e_sqrt2i())}) {
    EndAlgebra big = end_algebra(t);
    CHECK(big.dim() == 8);
    DivisionVerdict v = division_verdict(big);
    CHECK(v.tag == DivisionTag::NotDivision);
    CHECK(std::holds_alternative<ZeroDivisorCertificate>(v.certificate));
    CHECK(verify_certificate(big, v));
  }
}

TEST_CASE("injected algebras") {
  EndAlgebra hamilton = quaternion_algebra(-1, -1);
  DivisionVerdict v = division_verdict(hamilton);
  CHECK(v.tag == DivisionTag::QuaternionDivision);
  auto q = std::get<QuaternionCertificate>(v.certificate);
  REQUIRE(q.place);
  CHECK(hilbert_symbol(q.a, q.b, *q.place) == -1);
  CHECK(verify_certificate(hamilton, v));

  DivisionVerdict split = division_verdict(quaternion_algebra(1, 1));
  CHECK_FALSE(split.is_division());
  CHECK(verify_certificate(quaternion_algebra(1, 1), split));

  // (-1, 3): 3 is a norm from Q(i)? No: -1 at 3, so division.
  DivisionVerdict d13 = division_verdict(quaternion_algebra(-1, 3));
  CHECK(d13.tag == DivisionTag::QuaternionDivision);
  // (-1, 2) is split: 2 = 1 + 1 is a sum of two squares.
  DivisionVerdict d12 = division_verdict(quaternion_algebra(-1, 2));
  CHECK_FALSE(d12.is_division());
  CHECK(verify_certificate(quaternion_algebra(-1, 2), d12));

  // {1, n} with n^2 = 0.
  std::vector<Rational> c(8, Rational(0));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Rational& { return c[(i * 2 + j) * 2 + k]; };
  at(0, 0, 0) = 1;
  at(0, 1, 1) = 1;
  at(1, 0, 1) = 1;
  EndAlgebra dual_numbers("dual numbers", 2, c, Element{1, 0});
  CHECK_FALSE(is_semisimple(dual_numbers));
  DivisionVerdict vd = division_verdict(dual_numbers);
  CHECK(vd.tag == DivisionTag::NotDivision);
  CHECK(verify_certificate(dual_numbers, vd));

  // Q[x]/(x^2 - 1) with a claimed identity that is not one.
  std::vector<Rational> t(8, Rational(0));
  t[0] = 1;
  t[3] = 1;
  t[5] = 1;
  t[6] = 1;
  CHECK_NOTHROW(EndAlgebra("ok", 2, t, Element{1, 0}));
  CHECK_THROWS_AS(EndAlgebra("bad", 2, t, Element{0, 1}), InvariantError);
}

TEST_CASE("Q x Q is not a field") {
  std::vector<Rational> c(8, Rational(0));
  c[0] = 1;  // e0 e0 = e0
  c[7] = 1;  // e1 e1 = e1
  EndAlgebra qq("QxQ", 2, c, Element{1, 1});
  DivisionVerdict v = division_verdict(qq);
  CHECK(v.tag == DivisionTag::NotDivision);
  CHECK(verify_certificate(qq, v));
}

TEST_CASE("minimal polynomials and factoring") {
  EndAlgebra e = end_algebra(e_i());
  CHECK(minimal_polynomial(e, e.one()) == Polynomial{-1, 1});
  CHECK(minimal_polynomial(e, e.scale(e.one(), 3)) == Polynomial{-3, 1});
  // x^4 + 4 = (x^2 + 2x + 2)(x^2 - 2x + 2)
  auto f = quadratic_factor(Polynomial{4, 0, 0, 0, 1});
  REQUIRE(f);
  CHECK(divides(*f, Polynomial{4, 0, 0, 0, 1}));
  CHECK_FALSE(find_factor(Polynomial{-2, 0, 0, 0, 1}));
  CHECK_FALSE(find_factor(Polynomial{1, 0, 1}));
  CHECK(find_factor(Polynomial{-1, 0, 1}));
  CHECK(rational_root(Polynomial{-1, 0, 4}) == Rational(1, 2));
}

TEST_CASE("conjugating End^0 through an isogeny") {
  TorusHom xi(e_i(), e_2i(), IntMatrix{{2, 0}, {0, 1}});
  EndAlgebra ea = end_algebra(e_i());
  AlgebraConjugation c = conjugate_algebra(xi, ea);
  RatMatrix j0{{0, -1}, {1, 0}};
  CHECK(c.forward(j0) == RatMatrix{{0, -2}, {Rational(1, 2), 0}});
  for (const auto& h : ea.basis()) {
    RatMatrix m = to_rational(h.T());
    CHECK(c.backward(c.forward(m)) == m);
  }
  EndAlgebra eb = end_algebra(e_2i());
  CHECK(is_semisimple(ea) == is_semisimple(eb));
  AlgebraConjugation id = conjugate_algebra(TorusHom::identity(e_i()), ea);
  CHECK(id.forward(j0) == j0);
  CHECK_THROWS_AS(conjugate_algebra(TorusHom::zero(e_i(), e_2i()), ea), NotAnIsogeny);
}
