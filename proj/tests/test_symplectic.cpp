#include <doctest.h>

#include "common.hpp"
#include "tsv/errors.hpp"
#include "tsv/smith.hpp"
#include "tsv/symplectic.hpp"

using namespace tsv;
using namespace tsvtest;

namespace {

IntVector unit(std::size_t n, std::size_t k) {
  IntVector v(n, Integer(0));
  v[k] = 1;
  return v;
}

IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom) {
  IntMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

}  // namespace

TEST_CASE("symplectic pair data") {
  SymplecticPair p = build_pair(e_i());
  CHECK(p.rank() == 4);
  CHECK(p.S() == IntMatrix{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(p.psi() * p.psi() == -IntMatrix::identity(4));
  CHECK(omega(p, unit(4, 0), unit(4, 2)) == -1);
  CHECK(omega(p, unit(4, 2), unit(4, 0)) == 1);
  // The real part of H is symmetric and J_X-invariant.
  ScalarMatrix g = p.real_gram();
  CHECK(g == g.transpose());
  CHECK(p.J().transpose() * g * p.J() == g);
  for (const auto& t : {e_2i(), e_sqrt2i(), e_nc(), square(e_i())}) CHECK_NOTHROW(build_pair(t));
}

TEST_CASE("hermitian form") {
  SymplecticPair p = build_pair(e_i());
  ScalarVector x{1, 0, 0, 0}, y{0, 0, 1, 0};
  HermitianValue h = hermitian(p, x, y);
  CHECK(h.imag == Scalar(-1));
  // H(x, x) = g(x, x) is real, omega(x, x) = 0.
  HermitianValue hx = hermitian(p, x, x);
  CHECK(hx.imag == Scalar(0));
  CHECK_THROWS_AS(hermitian(p, ScalarVector{1}, y), DimensionError);
}

TEST_CASE("semicharacter") {
  SymplecticPair p = build_pair(e_i());
  CHECK(semicharacter(p, IntVector{1, 0, 1, 0}) == -1);
  CHECK(semicharacter(p, IntVector{1, 0, 0, 1}) == 1);
  CHECK(semicharacter(p, IntVector{2, 1, 1, 1}) == -1);
  CHECK(semicharacter(p, IntVector{0, 0, 0, 0}) == 1);
}

TEST_CASE("block validation names the block") {
  SymplecticPair p = build_pair(e_2i());
  IntMatrix id = IntMatrix::identity(2), zero(2, 2);
  // beta: A^ -> A needs J_A T = T J_A^; the identity fails for E_2i.
  CHECK_THROWS_WITH_AS(BlockIso(p, p, id, id, zero, id), doctest::Contains("block beta"), InvariantError);
}

TEST_CASE("dagger equals S^-1 rho^T S") {
  SymplecticPair p = build_pair(e_i());
  for (const auto& g : sp_generators(e_i(), 2)) {
    IntMatrix s_inv = *unimodular_inverse(p.S());
    CHECK(dagger(g).rho() == s_inv * g.rho().transpose() * p.S());
  }
}

TEST_CASE("three oracles agree on generators and fail together on a dilation") {
  for (const auto& t : {e_i(), e_sqrt2i(), e_nc()}) {
    for (const auto& g : sp_generators(t, 2)) {
      SymplecticVerdict v = is_symplectic(g);
      CHECK(v.dagger);
      CHECK(v.gram);
      CHECK(v.unitary);
    }
  }
  SymplecticPair p = build_pair(e_i());
  BlockIso doubled(p, p, IntMatrix{{2, 0}, {0, 2}}, IntMatrix(2, 2), IntMatrix(2, 2), IntMatrix::identity(2));
  SymplecticVerdict v = is_symplectic(doubled);
  CHECK_FALSE(v.dagger);
  CHECK_FALSE(v.gram);
  CHECK_FALSE(v.unitary);
}

TEST_CASE("psi_L is symplectic between A x A^ and A^ x A") {
  BlockIso psi = psi_block(e_2i());
  CHECK(psi.rho() == build_pair(e_2i()).psi());
  CHECK(is_symplectic(psi).symplectic());
}

TEST_CASE("ddagger lemma and swap") {
  for (const auto& g : sp_generators(e_i(), 2)) {
    CHECK(ddagger_lemma_holds(g));
    BlockIso s = swap(g);
    CHECK(s.alpha().T() == g.delta().T());
    CHECK(s.beta().T() == g.gamma().T());
    CHECK(swap(s) == g);
    CHECK(ddagger(ddagger(g)) == g);
  }
  // The lemma is matrix-level; it also holds off the symplectic group.
  SymplecticPair p = build_pair(e_i());
  BlockIso odd(p, p, IntMatrix{{3, 0}, {0, 3}}, IntMatrix{{0, 1}, {-1, 0}}, IntMatrix{{2, 0}, {0, 2}},
               IntMatrix{{1, 1}, {-1, 1}});
  CHECK(ddagger_lemma_holds(odd));
}

TEST_CASE("composition") {
  auto gens = sp_generators(e_i(), 1);
  for (const auto& f : gens)
    for (const auto& g : gens) {
      BlockIso h = compose(f, g);
      CHECK(h.rho() == f.rho() * g.rho());
      CHECK(is_symplectic(h).symplectic());
    }
  SymplecticPair a = build_pair(e_i()), b = build_pair(e_2i());
  CHECK_THROWS_AS(compose(BlockIso::identity(a), BlockIso::identity(b)), DimensionError);
}

TEST_CASE("generators") {
  auto gens = sp_generators(e_i(), 2);
  CHECK(gens.size() == 13);
  CHECK(gens.front() == BlockIso::identity(build_pair(e_i())));
  // End(E_nc) = Z: only +-I on the diagonal, symmetric shears n * polarization.
  auto nc = sp_generators(e_nc(), 2);
  for (const auto& g : nc) {
    bool diagonal = g.beta().T().is_zero() && g.gamma().T().is_zero();
    if (diagonal) CHECK((g.alpha().T() == IntMatrix::identity(2) || g.alpha().T() == -IntMatrix::identity(2)));
  }
}

TEST_CASE("lagrangian sublattices") {
  for (const auto& t : {e_i(), square(e_i())}) {
    SymplecticPair p = build_pair(t);
    const std::size_t n = t.lattice_rank();
    IntMatrix id = IntMatrix::identity(n), zero(n, n);
    CHECK(is_lagrangian(p, stack(id, zero)).lagrangian());
    CHECK(is_lagrangian(p, stack(zero, id)).lagrangian());
    CHECK(is_isotropic(p, stack(id, zero)));
  }
  SymplecticPair p = build_pair(e_i());
  // Graph of a symmetric J-compatible shear (2I) is Lagrangian, of J0 it is not.
  IntMatrix two{{2, 0}, {0, 2}}, j0{{0, -1}, {1, 0}};
  CHECK(is_lagrangian(p, stack(IntMatrix::identity(2), two)).lagrangian());
  LagrangianCheck anti = is_lagrangian(p, stack(IntMatrix::identity(2), j0));
  CHECK_FALSE(anti.isotropic);
  CHECK_FALSE(anti.lagrangian());
  // Saturation matters: 2 * (A x 0) is isotropic of half rank but not primitive.
  LagrangianCheck doubled = is_lagrangian(p, stack(two, IntMatrix(2, 2)));
  CHECK(doubled.isotropic);
  CHECK(doubled.half_rank);
  CHECK_FALSE(doubled.saturated);
  CHECK_FALSE(doubled.lagrangian());
  // A single vector is not J_X-stable.
  CHECK_THROWS_AS(is_lagrangian(p, IntMatrix{{1}, {0}, {0}, {0}}), NotJStable);
  CHECK_THROWS_AS(is_isotropic(p, IntMatrix{{1}, {0}, {0}, {0}}), NotJStable);
}
