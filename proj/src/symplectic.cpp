#include "tsv/symplectic.hpp"

#include <set>

#include "tsv/linalg.hpp"
#include "tsv/smith.hpp"

namespace tsv {

IntMatrix standard_symplectic(std::size_t g) {
  const std::size_t n = 2 * g;
  IntMatrix zero(n, n);
  IntMatrix id = IntMatrix::identity(n);
  return block2x2(zero, IntMatrix(-id), id, zero);
}

SymplecticPair::SymplecticPair(ComplexTorus base)
    : base_(std::move(base)),
      J_(block_diagonal(base_.J(), ScalarMatrix(-base_.J().transpose()))),
      S_(standard_symplectic(base_.g())),
      psi_(standard_symplectic(base_.g())) {
  if (!(S_.transpose() == -S_)) throw InvariantError("omega Gram matrix is not skew-symmetric");
  if (determinant(S_) != 1) throw InvariantError("psi_L is not an isomorphism (det S != 1)");
  if (!(psi_ * psi_ == -IntMatrix::identity(rank()))) throw InvariantError("psi_L^2 != -I");
  ScalarMatrix s = to_scalar(S_);
  if (!(J_.transpose() * s * J_ == s)) throw InvariantError("omega is not J_X-invariant at torus " + base_.name());
}

ScalarMatrix SymplecticPair::real_gram() const { return J_.transpose() * to_scalar(S_); }

SymplecticPair build_pair(const ComplexTorus& torus) { return SymplecticPair(torus); }

Integer omega(const SymplecticPair& pair, const IntVector& x, const IntVector& y) {
  if (x.size() != pair.rank() || y.size() != pair.rank()) {
    throw DimensionError("omega expects vectors of length " + std::to_string(pair.rank()));
  }
  IntVector sy = pair.S() * y;
  Integer out = 0;
  for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * sy[i];
  return out;
}

HermitianValue hermitian(const SymplecticPair& pair, const ScalarVector& x, const ScalarVector& y) {
  if (x.size() != pair.rank() || y.size() != pair.rank()) {
    throw DimensionError("hermitian expects vectors of length " + std::to_string(pair.rank()));
  }
  ScalarMatrix s = to_scalar(pair.S());
  ScalarVector sy = s * y;
  ScalarVector jx = pair.J() * x;
  HermitianValue out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out.real += jx[i] * sy[i];
    out.imag += x[i] * sy[i];
  }
  return out;
}

int semicharacter(const SymplecticPair& pair, const IntVector& lattice_point) {
  if (lattice_point.size() != pair.rank()) throw DimensionError("semicharacter expects a lattice point of length 4g");
  const std::size_t n = 2 * pair.g();
  Integer pairing = 0;
  for (std::size_t i = 0; i < n; ++i) pairing += lattice_point[n + i] * lattice_point[i];
  return mpz_even_p(pairing.get_mpz_t()) ? 1 : -1;
}

namespace {

TorusHom make_block(const char* label, const ComplexTorus& source, const ComplexTorus& target, IntMatrix T) {
  try {
    return TorusHom(source, target, std::move(T));
  } catch (const InvariantError& e) {
    throw InvariantError(std::string("block ") + label + ": " + e.what());
  } catch (const DimensionError& e) {
    throw DimensionError(std::string("block ") + label + ": " + e.what());
  }
}

}  // namespace

BlockIso::BlockIso(SymplecticPair source, SymplecticPair target, IntMatrix alpha, IntMatrix beta, IntMatrix gamma,
                   IntMatrix delta)
    : source_(std::move(source)),
      target_(std::move(target)),
      alpha_(make_block("alpha", source_.base(), target_.base(), std::move(alpha))),
      beta_(make_block("beta", dual(source_.base()), target_.base(), std::move(beta))),
      gamma_(make_block("gamma", source_.base(), dual(target_.base()), std::move(gamma))),
      delta_(make_block("delta", dual(source_.base()), dual(target_.base()), std::move(delta))),
      rho_(block2x2(alpha_.T(), beta_.T(), gamma_.T(), delta_.T())) {}

BlockIso::BlockIso(SymplecticPair source, SymplecticPair target, const IntMatrix& rho)
    : BlockIso(source, target, rho.block(0, 0, 2 * target.g(), 2 * source.g()),
               rho.block(0, 2 * source.g(), 2 * target.g(), 2 * source.g()),
               rho.block(2 * target.g(), 0, 2 * target.g(), 2 * source.g()),
               rho.block(2 * target.g(), 2 * source.g(), 2 * target.g(), 2 * source.g())) {
  if (rho.rows() != target.rank() || rho.cols() != source.rank()) {
    throw DimensionError("block map needs a " + std::to_string(target.rank()) + "x" + std::to_string(source.rank()) +
                         " matrix, got " + rho.shape());
  }
}

BlockIso BlockIso::identity(const SymplecticPair& pair) {
  return BlockIso(pair, pair, IntMatrix::identity(pair.rank()));
}

bool BlockIso::invertible() const {
  return rho_.is_square() && sgn(determinant(rho_)) != 0;
}

std::string BlockIso::dump() const {
  return source_.base().name() + " x " + dual(source_.base()).name() + " -> " + target_.base().name() + " x " +
         dual(target_.base()).name() + ", rho = " + format_matrix(rho_);
}

BlockIso compose(const BlockIso& f, const BlockIso& g) {
  if (!(g.target() == f.source())) {
    throw DimensionError("cannot compose block maps through " + g.target().base().name() + " and " +
                         f.source().base().name());
  }
  return BlockIso(g.source(), f.target(), f.rho() * g.rho());
}

BlockIso dagger(const BlockIso& f) {
  return BlockIso(f.target(), f.source(), f.delta().T().transpose(), -f.beta().T().transpose(),
                  -f.gamma().T().transpose(), f.alpha().T().transpose());
}

BlockIso swap(const BlockIso& f) {
  return BlockIso(build_pair(dual(f.source().base())), build_pair(dual(f.target().base())), f.delta().T(),
                  f.gamma().T(), f.beta().T(), f.alpha().T());
}

bool ddagger_lemma_holds(const BlockIso& f) {
  // psi^2 = -I, so psi^{-1} = -psi.
  IntMatrix lhs = -f.target().psi() * swap(f).rho() * f.source().psi();
  IntMatrix expected = block2x2(f.alpha().T(), IntMatrix(-f.beta().T()), IntMatrix(-f.gamma().T()), f.delta().T());
  return lhs == expected;
}

BlockIso ddagger(const BlockIso& f) {
#ifdef TSV_EXPENSIVE_CHECKS
  if (!ddagger_lemma_holds(f)) throw std::logic_error("psi_B^-1 rho(f^s) psi_A != rho(f^ddagger) for " + f.dump());
#endif
  return BlockIso(f.source(), f.target(), f.alpha().T(), -f.beta().T(), -f.gamma().T(), f.delta().T());
}

BlockIso psi_block(const ComplexTorus& torus) {
  const std::size_t n = torus.lattice_rank();
  IntMatrix id = IntMatrix::identity(n);
  return BlockIso(build_pair(torus), build_pair(dual(torus)), IntMatrix(n, n), IntMatrix(-id), id, IntMatrix(n, n));
}

bool dagger_oracle(const BlockIso& f) {
  BlockIso d = dagger(f);
  return d.rho() * f.rho() == IntMatrix::identity(f.source().rank()) &&
         f.rho() * d.rho() == IntMatrix::identity(f.target().rank());
}

bool gram_oracle(const BlockIso& f) {
  if (f.source().rank() != f.target().rank()) return false;
  return f.rho().transpose() * f.target().S() * f.rho() == f.source().S();
}

bool unitary_oracle(const BlockIso& f) {
  if (f.source().rank() != f.target().rank()) return false;
  ScalarMatrix rho = to_scalar(f.rho());
  if (!(rho * f.source().J() == f.target().J() * rho)) return false;
  return rho.transpose() * f.target().real_gram() * rho == f.source().real_gram();
}

SymplecticVerdict is_symplectic(const BlockIso& f) {
  SymplecticVerdict v{dagger_oracle(f), gram_oracle(f), unitary_oracle(f)};
  if (v.dagger != v.gram || v.dagger != v.unitary) {
    throw OracleDisagreement("symplectic oracles disagree (dagger=" + std::to_string(v.dagger) +
                             ", gram=" + std::to_string(v.gram) + ", unitary=" + std::to_string(v.unitary) +
                             ") on " + f.dump());
  }
  return v;
}

bool is_j_stable(const SymplecticPair& pair, const IntMatrix& columns) {
  if (columns.rows() != pair.rank()) throw DimensionError("sublattice basis must have " + std::to_string(pair.rank()) + " rows");
  if (columns.cols() == 0) return true;
  ScalarMatrix y = to_scalar(columns);
  if (rank(y) != columns.cols()) return false;
  for (std::size_t j = 0; j < columns.cols(); ++j) {
    if (!solve(y, pair.J() * y.column(j))) return false;
  }
  return true;
}

bool is_isotropic(const SymplecticPair& pair, const IntMatrix& columns) {
  if (!is_j_stable(pair, columns)) throw NotJStable("sublattice is not J_X-stable (not an abelian subvariety)");
  return (columns.transpose() * pair.S() * columns).is_zero();
}

LagrangianCheck lagrangian_sublattice(const IntMatrix& S, const IntMatrix& columns) {
  if (!S.is_square() || columns.rows() != S.rows()) throw DimensionError("sublattice basis does not match the form");
  LagrangianCheck out;
  out.isotropic = (columns.transpose() * S * columns).is_zero();
  out.half_rank = 2 * columns.cols() == S.rows() && rank(to_rational(columns)) == columns.cols();
  out.saturated = out.half_rank && columns_saturated(columns);
  if (out.saturated) {
    IntMatrix complement = complement_basis(columns);
    out.unimodular_pairing = is_unimodular(columns.transpose() * S * complement);
  }
  return out;
}

LagrangianCheck is_lagrangian(const SymplecticPair& pair, const IntMatrix& columns) {
  if (!is_j_stable(pair, columns)) throw NotJStable("sublattice is not J_X-stable (not an abelian subvariety)");
  return lagrangian_sublattice(pair.S(), columns);
}

namespace {

std::vector<IntMatrix> bounded_homs(const ComplexTorus& a, const ComplexTorus& b, long bound) {
  std::vector<IntMatrix> basis;
  for (const auto& h : hom_lattice(a, b)) basis.push_back(h.T());
  return bounded_lattice_elements(basis, bound);
}

}  // namespace

std::vector<BlockIso> sp_generators(const ComplexTorus& torus, long bound) {
  SymplecticPair pair = build_pair(torus);
  ComplexTorus dual_torus = dual(torus);
  const std::size_t n = torus.lattice_rank();
  IntMatrix id = IntMatrix::identity(n);
  IntMatrix zero(n, n);

  std::vector<BlockIso> out;
  std::set<IntMatrix, MatrixLess> seen;
  auto emit = [&](BlockIso f) {
    if (!seen.insert(f.rho()).second) return;
    if (!is_symplectic(f).symplectic()) throw std::logic_error("generator is not symplectic: " + f.dump());
    out.push_back(std::move(f));
  };

  emit(BlockIso::identity(pair));
  for (const auto& a : bounded_homs(torus, torus, bound)) {
    if (auto inv = unimodular_inverse(a.transpose())) emit(BlockIso(pair, pair, a, zero, zero, *inv));
  }
  for (const auto& c : bounded_homs(torus, dual_torus, bound)) {
    if (c == c.transpose()) emit(BlockIso(pair, pair, id, zero, c, id));
  }
  for (const auto& b : bounded_homs(dual_torus, torus, bound)) {
    if (b == b.transpose()) emit(BlockIso(pair, pair, id, b, zero, id));
  }
  if (dual_torus.J() == torus.J()) emit(BlockIso(pair, pair, zero, IntMatrix(-id), id, zero));
  return out;
}

}  // namespace tsv
