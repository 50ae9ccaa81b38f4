#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tsv/torus.hpp"

namespace tsv {

/// X = A x A^ on the lattice Lambda (+) Lambda*, with its complex structure,
/// the Gram matrix S of omega and the matrix of psi_L : A x A^ -> A^ x A.
///
/// omega((v1, l1), (v2, l2)) = l1(v2) - l2(v1), so S = ((0, -I), (I, 0)).
/// psi_L(a, a^) = (-a^, a) has the same block matrix.
class SymplecticPair {
 public:
  /// Verifies S^T = -S, det S = 1 and J_X^T S J_X = S.
  explicit SymplecticPair(ComplexTorus base);

  const ComplexTorus& base() const noexcept { return base_; }
  std::size_t g() const noexcept { return base_.g(); }
  std::size_t rank() const noexcept { return 4 * base_.g(); }
  const ScalarMatrix& J() const noexcept { return J_; }
  const IntMatrix& S() const noexcept { return S_; }
  const IntMatrix& psi() const noexcept { return psi_; }
  /// Gram matrix of g(x, y) = omega(J_X x, y), i.e. J_X^T S.
  ScalarMatrix real_gram() const;

  friend bool operator==(const SymplecticPair& lhs, const SymplecticPair& rhs) { return lhs.base_ == rhs.base_; }

 private:
  ComplexTorus base_;
  ScalarMatrix J_;
  IntMatrix S_;
  IntMatrix psi_;
};

SymplecticPair build_pair(const ComplexTorus& torus);

/// The standard skew form ((0, -I), (I, 0)) of size 4g.
IntMatrix standard_symplectic(std::size_t g);

Integer omega(const SymplecticPair& pair, const IntVector& x, const IntVector& y);

struct HermitianValue {
  Scalar real;   // g(x, y) = omega(J_X x, y)
  Scalar imag;   // omega(x, y)
};
HermitianValue hermitian(const SymplecticPair& pair, const ScalarVector& x, const ScalarVector& y);

/// chi((v, l)) = (-1)^{l(v)} for a lattice point (v, l).
int semicharacter(const SymplecticPair& pair, const IntVector& lattice_point);

/// Map A x A^ -> B x B^ given by blocks alpha: A->B, beta: A^->B,
/// gamma: A->B^, delta: A^->B^ and their assembled matrix rho.
class BlockIso {
 public:
  BlockIso(SymplecticPair source, SymplecticPair target, IntMatrix alpha, IntMatrix beta, IntMatrix gamma,
           IntMatrix delta);
  /// Splits a 4g x 4g matrix into its four blocks.
  BlockIso(SymplecticPair source, SymplecticPair target, const IntMatrix& rho);

  static BlockIso identity(const SymplecticPair& pair);

  const SymplecticPair& source() const noexcept { return source_; }
  const SymplecticPair& target() const noexcept { return target_; }
  const TorusHom& alpha() const noexcept { return alpha_; }
  const TorusHom& beta() const noexcept { return beta_; }
  const TorusHom& gamma() const noexcept { return gamma_; }
  const TorusHom& delta() const noexcept { return delta_; }
  const IntMatrix& rho() const noexcept { return rho_; }
  bool invertible() const;

  std::string dump() const;

  friend bool operator==(const BlockIso& lhs, const BlockIso& rhs) {
    return lhs.source_ == rhs.source_ && lhs.target_ == rhs.target_ && lhs.rho_ == rhs.rho_;
  }

 private:
  SymplecticPair source_;
  SymplecticPair target_;
  TorusHom alpha_;
  TorusHom beta_;
  TorusHom gamma_;
  TorusHom delta_;
  IntMatrix rho_;
};

/// f o g (apply g first).
BlockIso compose(const BlockIso& f, const BlockIso& g);

/// ((delta^, -beta^), (-gamma^, alpha^)) : B x B^ -> A x A^.
BlockIso dagger(const BlockIso& f);
/// ((alpha, -beta), (-gamma, delta)).
BlockIso ddagger(const BlockIso& f);
/// The same map read as A^ x A -> B^ x B: ((delta, gamma), (beta, alpha)).
BlockIso swap(const BlockIso& f);
/// psi_L of A as a block map A x A^ -> A^ x A.
BlockIso psi_block(const ComplexTorus& torus);

/// psi_{L_B}^{-1} * rho(f^s) * psi_{L_A} == rho(f^ddagger).
bool ddagger_lemma_holds(const BlockIso& f);

// The three membership oracles, usable on their own.
bool dagger_oracle(const BlockIso& f);    // f^dagger f = Id and f f^dagger = Id
bool gram_oracle(const BlockIso& f);      // rho^T S_B rho = S_A
bool unitary_oracle(const BlockIso& f);   // rho J_A = J_B rho and rho^T G_B rho = G_A, G = Re H

struct SymplecticVerdict {
  bool dagger = false;
  bool gram = false;
  bool unitary = false;
  bool symplectic() const noexcept { return dagger; }
};

/// Runs all three oracles; throws OracleDisagreement if they differ.
SymplecticVerdict is_symplectic(const BlockIso& f);

/// Y has independent columns spanning a J_X-stable rational subspace.
bool is_j_stable(const SymplecticPair& pair, const IntMatrix& columns);

/// Y^T S Y == 0. Throws NotJStable for a sublattice that is not J_X-stable.
bool is_isotropic(const SymplecticPair& pair, const IntMatrix& columns);

struct LagrangianCheck {
  bool isotropic = false;
  bool half_rank = false;
  bool saturated = false;
  bool unimodular_pairing = false;
  bool lagrangian() const noexcept { return isotropic && half_rank && saturated && unimodular_pairing; }
};

/// The lattice-level part of the Lagrangian test against a skew form S,
/// without any complex structure.
LagrangianCheck lagrangian_sublattice(const IntMatrix& S, const IntMatrix& columns);

/// Throws NotJStable for a sublattice that is not J_X-stable.
LagrangianCheck is_lagrangian(const SymplecticPair& pair, const IntMatrix& columns);

/// Symplectic generators with entries bounded by `bound`: diagonal
/// blockdiag(a, (a^T)^-1) for units a of End(A), symmetric lower and upper
/// shears, and the S-element when A^ and A share J. Deduplicated; Identity
/// first.
std::vector<BlockIso> sp_generators(const ComplexTorus& torus, long bound);

}  // namespace tsv
