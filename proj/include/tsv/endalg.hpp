#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tsv/hilbert.hpp"
#include "tsv/polynomial.hpp"
#include "tsv/torus.hpp"

namespace tsv {

/// Coordinates of an algebra element in the algebra's basis.
using Element = RatVector;

/// A finite-dimensional associative Q-algebra given by structure constants,
/// e_i e_j = sum_k c[i][j][k] e_k. When built from a torus the basis is the
/// Hom(A, A) lattice basis and each element also has a matrix.
class EndAlgebra {
 public:
  /// Verifies associativity on all basis triples and that `one` is a two-sided
  /// identity; throws InvariantError otherwise.
  EndAlgebra(std::string label, std::size_t dim, std::vector<Rational> constants, Element one);

  const std::string& label() const noexcept { return label_; }
  std::size_t dim() const noexcept { return dim_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  const Element& one() const noexcept { return one_; }
  Element basis_element(std::size_t i) const;
  Element zero() const { return Element(dim_, Rational(0)); }

  Element multiply(const Element& x, const Element& y) const;
  Element add(const Element& x, const Element& y) const;
  Element scale(const Element& x, const Rational& factor) const;
  bool is_scalar(const Element& x, Rational* value = nullptr) const;
  /// Matrix of y -> x y in the basis.
  RatMatrix left_regular(const Element& x) const;
  /// Trace of the left-regular representation.
  Rational trace(const Element& x) const;
  bool commutative() const;

  /// Torus-backed algebras only.
  bool has_matrices() const noexcept { return !basis_.empty(); }
  const std::vector<TorusHom>& basis() const noexcept { return basis_; }
  RatMatrix matrix_of(const Element& x) const;
  /// Coordinates of a rational matrix in End^0, if it lies there.
  std::optional<Element> coordinates(const RatMatrix& m) const;

  friend EndAlgebra end_algebra(const ComplexTorus& torus);

 private:
  std::string label_;
  std::size_t dim_;
  std::vector<Rational> constants_;
  Element one_;
  std::vector<TorusHom> basis_;
};

EndAlgebra end_algebra(const ComplexTorus& torus);
/// The quaternion algebra (a, b): i^2 = a, j^2 = b, k = ij = -ji. Basis 1, i, j, k.
EndAlgebra quaternion_algebra(const Rational& a, const Rational& b);

/// Gram(i, j) = trace of the left-regular representation of e_i e_j.
RatMatrix trace_gram(const EndAlgebra& algebra);
bool is_semisimple(const EndAlgebra& algebra);
std::size_t center_dimension(const EndAlgebra& algebra);
/// Monic minimal polynomial of x over Q.
Polynomial minimal_polynomial(const EndAlgebra& algebra, const Element& x);

enum class DivisionTag { Field, QuaternionDivision, Split, NotDivision, Undetermined };
std::string to_string(DivisionTag tag);

/// x has minimal polynomial p of degree dim with no nontrivial factor.
struct IrreducibleCertificate {
  Element element;
  Polynomial minimal_polynomial;
};
/// x has minimal polynomial p and `factor` properly divides p.
struct FactorCertificate {
  Element element;
  Polynomial minimal_polynomial;
  Polynomial factor;
};
/// i^2 = a, j^2 = b, ij = -ji, k = ij. For QuaternionDivision `place` has
/// (a, b)_place = -1; for Split it is unset.
struct QuaternionCertificate {
  Rational a;
  Rational b;
  Element i;
  Element j;
  Element k;
  std::optional<Place> place;
};
/// left * right == 0 with both nonzero.
struct ZeroDivisorCertificate {
  Element left;
  Element right;
};
struct ReasonCertificate {
  std::string reason;
};

using Certificate =
    std::variant<IrreducibleCertificate, FactorCertificate, QuaternionCertificate, ZeroDivisorCertificate, ReasonCertificate>;

struct DivisionVerdict {
  DivisionTag tag = DivisionTag::Undetermined;
  Certificate certificate;

  bool is_division() const noexcept { return tag == DivisionTag::Field || tag == DivisionTag::QuaternionDivision; }
  std::string describe() const;
};

DivisionVerdict division_verdict(const EndAlgebra& algebra);
/// Re-checks the certificate exactly against the algebra.
bool verify_certificate(const EndAlgebra& algebra, const DivisionVerdict& verdict);

/// f -> xi f (psi / n) from End^0(A) to End^0(B), with its inverse.
class AlgebraConjugation {
 public:
  /// Throws NotAnIsogeny; verifies images commute with J_B and that the map is
  /// multiplicative on all basis pairs.
  AlgebraConjugation(const TorusHom& xi, const EndAlgebra& source);

  RatMatrix forward(const RatMatrix& f) const;
  RatMatrix backward(const RatMatrix& g) const;
  const std::vector<RatMatrix>& basis_images() const noexcept { return images_; }
  const QuasiInverse& quasi() const noexcept { return quasi_; }

 private:
  TorusHom xi_;
  QuasiInverse quasi_;
  std::vector<RatMatrix> images_;
};

AlgebraConjugation conjugate_algebra(const TorusHom& xi, const EndAlgebra& source);

}  // namespace tsv
