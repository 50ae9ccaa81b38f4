#include <doctest.h>

#include "common.hpp"
#include "tsv/errors.hpp"
#include "tsv/smith.hpp"

using namespace tsv;
using namespace tsvtest;

TEST_CASE("complex structure must square to -1") {
  CHECK_THROWS_WITH_AS(ComplexTorus("E1", ScalarMatrix::identity(2)), "J^2 != -I at torus E1", InvariantError);
  CHECK_THROWS_AS(ComplexTorus("odd", ScalarMatrix::identity(3)), std::exception);
  CHECK_NOTHROW(e_sqrt2i());
  CHECK_NOTHROW(e_nc());
  CHECK(e_sqrt2i().extension() == 2);
  CHECK(e_i().extension() == 1);
}

TEST_CASE("dual is an involution") {
  for (const auto& t : {e_i(), e_2i(), e_sqrt2i(), e_nc()}) {
    ComplexTorus d = dual(t);
    CHECK(d.name() == t.name() + "^");
    CHECK(d.J() == -t.J().transpose());
    CHECK(dual(d) == t);
  }
}

TEST_CASE("homomorphisms must intertwine") {
  CHECK_NOTHROW(TorusHom(e_i(), e_2i(), IntMatrix{{2, 0}, {0, 1}}));
  CHECK_THROWS_AS(TorusHom(e_i(), e_2i(), IntMatrix{{1, 0}, {0, 1}}), InvariantError);
  CHECK_THROWS_AS(TorusHom(e_i(), e_2i(), IntMatrix{{1, 0, 0}, {0, 1, 0}}), DimensionError);
}

TEST_CASE("commutation operator matches the defining equation") {
  // Column k of the operator is the image of the k-th unit matrix.
  for (const auto& [a, b] : {std::pair{e_i(), e_2i()}, std::pair{e_sqrt2i(), e_nc()}}) {
    ScalarMatrix op = commutation_operator(a, b);
    const std::size_t n = a.lattice_rank();
    for (std::size_t k = 0; k < n * n; ++k) {
      IntMatrix unit(n, n);
      unit(k / n, k % n) = 1;
      ScalarMatrix u = to_scalar(unit);
      ScalarMatrix image = b.J() * u - u * a.J();
      for (std::size_t r = 0; r < n * n; ++r) CHECK(op(r, k) == image(r / n, r % n));
    }
  }
}

TEST_CASE("hom lattice ranks against brute force") {
  struct Case {
    ComplexTorus a, b;
    std::size_t rank;
  };
  // sqrt(2)*i generates Z[sqrt(-2)], so that curve has CM too.
  std::vector<Case> cases = {{e_i(), e_i(), 2},           {e_i(), e_2i(), 2},        {e_i(), e_sqrt2i(), 0},
                             {e_sqrt2i(), e_sqrt2i(), 2}, {e_nc(), e_nc(), 1},       {e_i(), dual(e_i()), 2},
                             {e_nc(), dual(e_nc()), 1},   {e_sqrt2i(), e_nc(), 0}};
  for (const auto& c : cases) {
    CAPTURE(c.a.name());
    CAPTURE(c.b.name());
    auto basis = hom_lattice(c.a, c.b);
    CHECK(basis.size() == c.rank);
    std::vector<IntMatrix> found;
    CHECK(brute_force_hom_rank(c.a, c.b, 3, &found) == c.rank);
    // Every small solution is an integer combination of the basis.
    if (basis.empty()) continue;
    std::vector<RatVector> cols;
    for (const auto& h : basis) {
      RatVector v;
      for (const auto& x : h.T().entries()) v.push_back(Rational(x));
      cols.push_back(v);
    }
    RatMatrix m = from_columns(cols, cols.front().size());
    for (const auto& t : found) {
      RatVector v;
      for (const auto& x : t.entries()) v.push_back(Rational(x));
      auto coeffs = solve(m, v);
      REQUIRE(coeffs);
      for (const auto& q : *coeffs) CHECK(q.get_den() == 1);
    }
  }
}

TEST_CASE("end ring of E_i x E_i has rank 8") {
  CHECK(hom_lattice(square(e_i()), square(e_i())).size() == 8);
  CHECK(hom_lattice(square(e_nc()), square(e_nc())).size() == 4);
}

TEST_CASE("isogeny degrees") {
  for (const auto& t : {e_i(), square(e_i())}) {
    for (long n = 1; n <= 3; ++n) {
      auto deg = is_isogeny(TorusHom::multiplication(t, n));
      REQUIRE(deg);
      Integer expected = 1;
      for (std::size_t k = 0; k < t.lattice_rank(); ++k) expected *= n;
      CHECK(*deg == expected);
    }
  }
  CHECK(is_isogeny(TorusHom(e_i(), e_2i(), IntMatrix{{2, 0}, {0, 1}})) == Integer(2));
  CHECK_FALSE(is_isogeny(TorusHom::zero(e_i(), e_2i())));
  CHECK_THROWS_AS(is_isogeny(TorusHom::zero(e_i(), square(e_i()))), DimensionError);
}

TEST_CASE("quasi inverse") {
  TorusHom xi(e_i(), e_2i(), IntMatrix{{2, 0}, {0, 1}});
  QuasiInverse q = quasi_inverse(xi);
  CHECK(q.n == 2);
  CHECK(compose(q.psi, xi).T() == TorusHom::multiplication(e_i(), 2).T());
  CHECK(compose(xi, q.psi).T() == TorusHom::multiplication(e_2i(), 2).T());
  TorusHom three = TorusHom::multiplication(square(e_i()), 3);
  QuasiInverse q3 = quasi_inverse(three);
  CHECK(q3.n == 3);
  CHECK(compose(q3.psi, three).T() == three.T());
  CHECK_THROWS_AS(quasi_inverse(TorusHom::zero(e_i(), e_i())), NotAnIsogeny);
}

TEST_CASE("transpose hom goes between duals") {
  TorusHom xi(e_i(), e_2i(), IntMatrix{{2, 0}, {0, 1}});
  TorusHom t = transpose_hom(xi);
  CHECK(t.source() == dual(e_2i()));
  CHECK(t.target() == dual(e_i()));
  CHECK(t.T() == xi.T().transpose());
}

TEST_CASE("bounded lattice elements") {
  std::vector<IntMatrix> basis;
  for (const auto& h : hom_lattice(e_i(), e_i())) basis.push_back(h.T());
  auto elems = bounded_lattice_elements(basis, 1);
  // a*I + b*J0 with |a|, |b| <= 1.
  CHECK(elems.size() == 9);
  for (const auto& m : elems)
    for (const auto& x : m.entries()) CHECK(abs(x) <= 1);
}

TEST_CASE("isogeny witness") {
  auto w = isogeny_witness(e_i(), e_2i());
  REQUIRE(w);
  CHECK(is_isogeny(*w) == Integer(2));
  auto self = isogeny_witness(e_i(), e_i());
  REQUIRE(self);
  CHECK(self->T() == IntMatrix::identity(2));
  CHECK_FALSE(isogeny_witness(e_i(), e_sqrt2i()));
  CHECK(hom_lattice(e_i(), e_sqrt2i()).empty());
}
