#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tsv/matrix.hpp"

namespace tsv {

/// Complex torus V/Lambda with Lambda = Z^{2g} and complex structure J on
/// V = R^{2g}. Equality is by name and exact J.
class ComplexTorus {
 public:
  /// Throws InvariantError unless J is 2g x 2g with J*J = -I.
  ComplexTorus(std::string name, ScalarMatrix J);

  const std::string& name() const noexcept { return name_; }
  std::size_t g() const noexcept { return J_.rows() / 2; }
  std::size_t lattice_rank() const noexcept { return J_.rows(); }
  const ScalarMatrix& J() const noexcept { return J_; }
  /// Extension tag shared by all entries of J (1 when J is rational).
  std::int64_t extension() const;

  friend bool operator==(const ComplexTorus& lhs, const ComplexTorus& rhs) {
    return lhs.name_ == rhs.name_ && lhs.J_ == rhs.J_;
  }

 private:
  std::string name_;
  ScalarMatrix J_;
};

/// Dual torus (V*/Lambda*, -J^T). Names toggle a trailing '^', so
/// dual(dual(A)) == A.
ComplexTorus dual(const ComplexTorus& torus);
/// Product torus with block-diagonal complex structure.
ComplexTorus product(const ComplexTorus& a, const ComplexTorus& b, std::string name);

/// Homomorphism of complex tori through its rational representation T
/// (2g_B x 2g_A integer). The analytic representation is the same matrix read
/// over the scalar field.
class TorusHom {
 public:
  /// Throws InvariantError unless J_B * T == T * J_A.
  TorusHom(ComplexTorus source, ComplexTorus target, IntMatrix T);

  static TorusHom identity(const ComplexTorus& torus);
  static TorusHom multiplication(const ComplexTorus& torus, long n);
  static TorusHom zero(const ComplexTorus& source, const ComplexTorus& target);

  const ComplexTorus& source() const noexcept { return source_; }
  const ComplexTorus& target() const noexcept { return target_; }
  const IntMatrix& T() const noexcept { return T_; }
  ScalarMatrix analytic() const { return to_scalar(T_); }

  friend bool operator==(const TorusHom& lhs, const TorusHom& rhs) {
    return lhs.source_ == rhs.source_ && lhs.target_ == rhs.target_ && lhs.T_ == rhs.T_;
  }

 private:
  ComplexTorus source_;
  ComplexTorus target_;
  IntMatrix T_;
};

/// g o f (apply f first).
TorusHom compose(const TorusHom& g, const TorusHom& f);
TorusHom add(const TorusHom& f, const TorusHom& g);

/// Matrix of the linear map T -> J_B T - T J_A on row-major vec(T).
ScalarMatrix commutation_operator(const ComplexTorus& a, const ComplexTorus& b);

/// Saturated Z-basis of Hom(A, B), canonical (Hermite) order.
std::vector<TorusHom> hom_lattice(const ComplexTorus& a, const ComplexTorus& b);

/// f^ : B^ -> A^ with matrix T^T.
TorusHom transpose_hom(const TorusHom& f);

/// Degree [Lambda_B : T Lambda_A] when T has full rank, else nullopt.
/// Different dimensions are a DimensionError.
std::optional<Integer> is_isogeny(const TorusHom& f);

struct QuasiInverse {
  Integer n;     // least n with n * T^-1 integral
  TorusHom psi;  // B -> A, psi o f = n_A, f o psi = n_B
};

/// Throws NotAnIsogeny when det T == 0.
QuasiInverse quasi_inverse(const TorusHom& f);

/// Lattice elements sum c_i * basis_i whose matrix entries all lie in
/// [-bound, bound], in a deterministic order. Basis must be in Hermite form.
std::vector<IntMatrix> bounded_lattice_elements(const std::vector<IntMatrix>& basis, long bound);

/// First combination of the Hom(A, B) basis with |c_i| <= bound and nonzero
/// determinant. Order: by l1-norm of c, then coefficient pattern 1, -1, 2, -2,
/// ... before 0 in the leading positions. nullopt is only a proof of
/// non-isogeny when hom_lattice(A, B) is empty.
std::optional<TorusHom> isogeny_witness(const ComplexTorus& a, const ComplexTorus& b, long bound = 3);

}  // namespace tsv
