#include "tsv/endalg.hpp"

#include <functional>

#include "tsv/linalg.hpp"

namespace tsv {

EndAlgebra::EndAlgebra(std::string label, std::size_t dim, std::vector<Rational> constants, Element one)
    : label_(std::move(label)), dim_(dim), constants_(std::move(constants)), one_(std::move(one)) {
  if (dim_ == 0 || constants_.size() != dim_ * dim_ * dim_ || one_.size() != dim_) {
    throw DimensionError("structure constants do not match dimension " + std::to_string(dim_));
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    Element ei = basis_element(i);
    if (multiply(one_, ei) != ei || multiply(ei, one_) != ei) {
      throw InvariantError("identity element does not act as identity on e" + std::to_string(i) + " in " + label_);
    }
    for (std::size_t j = 0; j < dim_; ++j) {
      Element eij = multiply(ei, basis_element(j));
      for (std::size_t k = 0; k < dim_; ++k) {
        Element ek = basis_element(k);
        if (multiply(eij, ek) != multiply(ei, multiply(basis_element(j), ek))) {
          throw InvariantError("structure constants not associative at (" + std::to_string(i) + "," + std::to_string(j) +
                               "," + std::to_string(k) + ") in " + label_);
        }
      }
    }
  }
}

Element EndAlgebra::basis_element(std::size_t i) const {
  Element out = zero();
  out.at(i) = 1;
  return out;
}

Element EndAlgebra::multiply(const Element& x, const Element& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionError("algebra element of wrong length");
  Element out = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& c = constant(i, j, k);
        if (sgn(c) != 0) out[k] += xy * c;
      }
    }
  }
  return out;
}

Element EndAlgebra::add(const Element& x, const Element& y) const {
  Element out = x;
  for (std::size_t k = 0; k < dim_; ++k) out[k] += y[k];
  return out;
}

Element EndAlgebra::scale(const Element& x, const Rational& factor) const {
  Element out = x;
  for (auto& v : out) v *= factor;
  return out;
}

bool EndAlgebra::is_scalar(const Element& x, Rational* value) const {
  // x = s * one for the s read off a nonzero coordinate of one.
  std::size_t k = 0;
  while (k < dim_ && sgn(one_[k]) == 0) ++k;
  Rational s = x[k] / one_[k];
  if (scale(one_, s) != x) return false;
  if (value) *value = s;
  return true;
}

RatMatrix EndAlgebra::left_regular(const Element& x) const {
  RatMatrix out(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    Element col = multiply(x, basis_element(j));
    for (std::size_t k = 0; k < dim_; ++k) out(k, j) = col[k];
  }
  return out;
}

Rational EndAlgebra::trace(const Element& x) const {
  RatMatrix l = left_regular(x);
  Rational out = 0;
  for (std::size_t k = 0; k < dim_; ++k) out += l(k, k);
  return out;
}

bool EndAlgebra::commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (constant(i, j, k) != constant(j, i, k)) return false;
  return true;
}

RatMatrix EndAlgebra::matrix_of(const Element& x) const {
  if (!has_matrices()) throw std::logic_error("algebra " + label_ + " has no matrix realization");
  const IntMatrix& first = basis_.front().T();
  RatMatrix out(first.rows(), first.cols());
  for (std::size_t i = 0; i < dim_; ++i)
    if (sgn(x[i]) != 0) out += to_rational(basis_[i].T()) * x[i];
  return out;
}

namespace {

RatMatrix basis_columns(const std::vector<TorusHom>& basis) {
  const std::size_t len = basis.front().T().rows() * basis.front().T().cols();
  RatMatrix out(len, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto e = basis[j].T().entries();
    for (std::size_t i = 0; i < len; ++i) out(i, j) = e[i];
  }
  return out;
}

}  // namespace

std::optional<Element> EndAlgebra::coordinates(const RatMatrix& m) const {
  if (!has_matrices()) throw std::logic_error("algebra " + label_ + " has no matrix realization");
  auto e = m.entries();
  return solve(basis_columns(basis_), RatVector(e.begin(), e.end()));
}

EndAlgebra end_algebra(const ComplexTorus& torus) {
  auto basis = hom_lattice(torus, torus);
  const std::size_t r = basis.size();
  RatMatrix columns = basis_columns(basis);
  auto coords = [&](const IntMatrix& m) {
    auto e = m.entries();
    RatVector v;
    for (const auto& x : e) v.emplace_back(x);
    auto sol = solve(columns, v);
    if (!sol) throw InvariantError("End(" + torus.name() + ") is not closed under composition");
    return *sol;
  };
  std::vector<Rational> constants;
  constants.reserve(r * r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (auto& c : coords(basis[i].T() * basis[j].T())) constants.push_back(std::move(c));
  EndAlgebra out("End0(" + torus.name() + ")", r, std::move(constants),
                 coords(IntMatrix::identity(torus.lattice_rank())));
  out.basis_ = std::move(basis);
  return out;
}

EndAlgebra quaternion_algebra(const Rational& a, const Rational& b) {
  if (sgn(a) == 0 || sgn(b) == 0) throw std::invalid_argument("quaternion parameters must be nonzero");
  // basis 1, i, j, k
  std::vector<Rational> c(64, Rational(0));
  auto set = [&c](int x, int y, int z, const Rational& v) { c[(x * 4 + y) * 4 + z] = v; };
  for (int x = 0; x < 4; ++x) {
    set(0, x, x, 1);
    set(x, 0, x, 1);
  }
  Rational ab = a * b;
  set(1, 1, 0, a);
  set(2, 2, 0, b);
  set(3, 3, 0, Rational(-ab));
  set(1, 2, 3, 1);
  set(2, 1, 3, -1);
  set(1, 3, 2, a);            // i k = i i j = a j
  set(3, 1, 2, Rational(-a)); // k i = -a j
  set(3, 2, 1, b);            // k j = i j j = b i
  set(2, 3, 1, Rational(-b)); // j k = -b i
  return EndAlgebra("(" + a.get_str() + "," + b.get_str() + ")", 4, std::move(c), Element{1, 0, 0, 0});
}

RatMatrix trace_gram(const EndAlgebra& algebra) {
  const std::size_t r = algebra.dim();
  RatMatrix out(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      out(i, j) = algebra.trace(algebra.multiply(algebra.basis_element(i), algebra.basis_element(j)));
  return out;
}

bool is_semisimple(const EndAlgebra& algebra) { return sgn(determinant(trace_gram(algebra))) != 0; }

std::size_t center_dimension(const EndAlgebra& algebra) {
  const std::size_t r = algebra.dim();
  // x e_j - e_j x = 0 for all j, linear in x.
  RatMatrix system(r * r, r);
  for (std::size_t i = 0; i < r; ++i) {
    Element ei = algebra.basis_element(i);
    for (std::size_t j = 0; j < r; ++j) {
      Element ej = algebra.basis_element(j);
      Element comm = algebra.add(algebra.multiply(ei, ej), algebra.scale(algebra.multiply(ej, ei), Rational(-1)));
      for (std::size_t k = 0; k < r; ++k) system(j * r + k, i) = comm[k];
    }
  }
  return nullspace(system).size();
}

Polynomial minimal_polynomial(const EndAlgebra& algebra, const Element& x) {
  std::vector<Element> powers{algebra.one()};
  while (true) {
    Element next = algebra.multiply(powers.back(), x);
    auto coeffs = solve(from_columns(powers, algebra.dim()), next);
    if (coeffs) {
      Polynomial p;
      for (auto& c : *coeffs) p.push_back(-c);
      p.push_back(1);
      return p;
    }
    powers.push_back(std::move(next));
  }
}

std::string to_string(DivisionTag tag) {
  switch (tag) {
    case DivisionTag::Field: return "Field";
    case DivisionTag::QuaternionDivision: return "QuaternionDivision";
    case DivisionTag::Split: return "Split";
    case DivisionTag::NotDivision: return "NotDivision";
    case DivisionTag::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string DivisionVerdict::describe() const {
  std::string head = to_string(tag);
  return std::visit(
      [&](const auto& cert) -> std::string {
        using C = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<C, IrreducibleCertificate>) {
          if (degree(cert.minimal_polynomial) == 1) return head + " (Q)";
          return head + " (Q[x]/(" + format_polynomial(cert.minimal_polynomial) + "))";
        } else if constexpr (std::is_same_v<C, FactorCertificate>) {
          return head + " (minimal polynomial " + format_polynomial(cert.minimal_polynomial) + " has factor " +
                 format_polynomial(cert.factor) + ")";
        } else if constexpr (std::is_same_v<C, QuaternionCertificate>) {
          std::string s = head + " ((" + cert.a.get_str() + "," + cert.b.get_str() + ")";
          if (cert.place) s += ", Hilbert symbol -1 at " + place_name(*cert.place);
          return s + ")";
        } else if constexpr (std::is_same_v<C, ZeroDivisorCertificate>) {
          return head + " (zero divisor " + format_vector(cert.left) + " * " + format_vector(cert.right) + " = 0)";
        } else {
          return head + " (" + cert.reason + ")";
        }
      },
      certificate);
}

namespace {

bool is_zero_element(const Element& x) {
  for (const auto& v : x)
    if (sgn(v) != 0) return false;
  return true;
}

// Nonzero coefficient vectors over {0, 1, -1, 2, -2} in lexicographic order.
std::vector<RatVector> small_combinations(std::size_t n) {
  static const long values[] = {0, 1, -1, 2, -2};
  std::vector<RatVector> out;
  RatVector current(n, Rational(0));
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      if (!is_zero_element(current)) out.push_back(current);
      return;
    }
    for (long v : values) {
      current[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

Element combine(const EndAlgebra& algebra, const std::vector<RatVector>& basis, const RatVector& coeffs) {
  Element out = algebra.zero();
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (sgn(coeffs[k]) != 0) out = algebra.add(out, algebra.scale(basis[k], coeffs[k]));
  return out;
}

DivisionVerdict undetermined(std::string reason) {
  return {DivisionTag::Undetermined, ReasonCertificate{std::move(reason)}};
}

// Outside the certified dimensions a zero divisor still settles the question.
// Tries basis pairs, then squares of {0, +-1}-combinations.
std::optional<DivisionVerdict> zero_divisor_scan(const EndAlgebra& algebra) {
  const std::size_t r = algebra.dim();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Element x = algebra.basis_element(i), y = algebra.basis_element(j);
      if (is_zero_element(algebra.multiply(x, y))) return DivisionVerdict{DivisionTag::NotDivision, ZeroDivisorCertificate{x, y}};
    }
  if (r > 10) return std::nullopt;
  RatVector current(r, Rational(0));
  std::optional<DivisionVerdict> found;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (found) return;
    if (i == r) {
      if (!is_zero_element(current) && is_zero_element(algebra.multiply(current, current)))
        found = DivisionVerdict{DivisionTag::NotDivision, ZeroDivisorCertificate{current, current}};
      return;
    }
    for (long v : {0L, 1L, -1L}) {
      current[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return found;
}

DivisionVerdict commutative_verdict(const EndAlgebra& algebra) {
  const std::size_t r = algebra.dim();
  std::vector<RatVector> unit_basis;
  for (std::size_t i = 0; i < r; ++i) unit_basis.push_back(algebra.basis_element(i));
  for (const auto& coeffs : small_combinations(r)) {
    Element x = combine(algebra, unit_basis, coeffs);
    Polynomial p = minimal_polynomial(algebra, x);
    if (degree(p) != static_cast<int>(r)) continue;
    if (auto factor = find_factor(p)) return {DivisionTag::NotDivision, FactorCertificate{x, p, *factor}};
    return {DivisionTag::Field, IrreducibleCertificate{x, p}};
  }
  return undetermined("no primitive element with coefficients in {0,+-1,+-2}");
}

DivisionVerdict nilpotent_verdict(const EndAlgebra& algebra) {
  auto radical = nullspace(trace_gram(algebra));
  const Element& x = radical.front();
  Element power = x;
  for (std::size_t m = 1; m <= algebra.dim() + 1; ++m) {
    Element next = algebra.multiply(power, x);
    if (is_zero_element(next)) return {DivisionTag::NotDivision, ZeroDivisorCertificate{power, x}};
    power = std::move(next);
  }
  throw InvariantError("trace-form radical element is not nilpotent in " + algebra.label());
}

// Norm-zero element z + x i + y j of a split quaternion algebra.
std::optional<ZeroDivisorCertificate> split_zero_divisor(const EndAlgebra& algebra, const QuaternionCertificate& q) {
  for (long x = -20; x <= 20; ++x)
    for (long y = -20; y <= 20; ++y) {
      if (x == 0 && y == 0) continue;
      Rational z2 = q.a * x * x + q.b * y * y;
      if (sgn(z2) < 0) continue;
      if (!mpz_perfect_square_p(z2.get_num_mpz_t()) || !mpz_perfect_square_p(z2.get_den_mpz_t())) continue;
      Integer zn = sqrt(z2.get_num()), zd = sqrt(z2.get_den());
      Rational z(zn, zd);
      Element pure = algebra.add(algebra.scale(q.i, Rational(x)), algebra.scale(q.j, Rational(y)));
      Element left = algebra.add(algebra.scale(algebra.one(), z), pure);
      Element right = algebra.add(algebra.scale(algebra.one(), z), algebra.scale(pure, Rational(-1)));
      if (is_zero_element(algebra.multiply(left, right))) return ZeroDivisorCertificate{left, right};
    }
  return std::nullopt;
}

DivisionVerdict quaternion_verdict(const EndAlgebra& algebra) {
  if (!is_semisimple(algebra)) return nilpotent_verdict(algebra);
  if (center_dimension(algebra) != 1) return undetermined("noncommutative of dimension 4 with center larger than Q");

  RatMatrix trace_row(1, algebra.dim());
  for (std::size_t k = 0; k < algebra.dim(); ++k) trace_row(0, k) = algebra.trace(algebra.basis_element(k));
  auto trace_zero = nullspace(trace_row);

  std::optional<Element> qi;
  Rational a;
  for (const auto& coeffs : small_combinations(trace_zero.size())) {
    Element x = combine(algebra, trace_zero, coeffs);
    Element sq = algebra.multiply(x, x);
    if (is_zero_element(sq)) return {DivisionTag::NotDivision, ZeroDivisorCertificate{x, x}};
    if (algebra.is_scalar(sq, &a)) {
      qi = x;
      break;
    }
  }
  if (!qi) return undetermined("no trace-zero element squaring to a scalar");

  RatMatrix ortho(2, algebra.dim());
  for (std::size_t k = 0; k < algebra.dim(); ++k) {
    ortho(0, k) = trace_row(0, k);
    ortho(1, k) = algebra.trace(algebra.multiply(*qi, algebra.basis_element(k)));
  }
  auto complement = nullspace(ortho);
  for (const auto& coeffs : small_combinations(complement.size())) {
    Element y = combine(algebra, complement, coeffs);
    Element sq = algebra.multiply(y, y);
    if (is_zero_element(sq)) return {DivisionTag::NotDivision, ZeroDivisorCertificate{y, y}};
    Rational b;
    if (!algebra.is_scalar(sq, &b)) continue;
    Element k = algebra.multiply(*qi, y);
    if (algebra.add(k, algebra.multiply(y, *qi)) != algebra.zero()) continue;
    QuaternionCertificate cert{a, b, *qi, y, k, std::nullopt};
    for (Place v : relevant_places(a, b)) {
      if (hilbert_symbol(a, b, v) == -1) {
        cert.place = v;
        return {DivisionTag::QuaternionDivision, cert};
      }
    }
    if (auto zd = split_zero_divisor(algebra, cert)) return {DivisionTag::NotDivision, *zd};
    return {DivisionTag::Split, cert};
  }
  return undetermined("no anticommuting trace-zero partner found");
}

}  // namespace

DivisionVerdict division_verdict(const EndAlgebra& algebra) {
  const std::size_t r = algebra.dim();
  if (r == 1) {
    return {DivisionTag::Field, IrreducibleCertificate{algebra.one(), Polynomial{Rational(-1), Rational(1)}}};
  }
  if (algebra.commutative()) {
    if (r == 2 || r == 4) return commutative_verdict(algebra);
    if (auto v = zero_divisor_scan(algebra)) return *v;
    return undetermined("commutative of dimension " + std::to_string(r));
  }
  if (r == 4) return quaternion_verdict(algebra);
  if (auto v = zero_divisor_scan(algebra)) return *v;
  return undetermined("noncommutative of dimension " + std::to_string(r));
}

bool verify_certificate(const EndAlgebra& algebra, const DivisionVerdict& verdict) {
  return std::visit(
      [&](const auto& cert) -> bool {
        using C = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<C, IrreducibleCertificate>) {
          return verdict.tag == DivisionTag::Field && minimal_polynomial(algebra, cert.element) == cert.minimal_polynomial &&
                 degree(cert.minimal_polynomial) == static_cast<int>(algebra.dim()) &&
                 !find_factor(cert.minimal_polynomial);
        } else if constexpr (std::is_same_v<C, FactorCertificate>) {
          int df = degree(cert.factor);
          return verdict.tag == DivisionTag::NotDivision &&
                 minimal_polynomial(algebra, cert.element) == cert.minimal_polynomial && df >= 1 &&
                 df < degree(cert.minimal_polynomial) && divides(cert.factor, cert.minimal_polynomial);
        } else if constexpr (std::is_same_v<C, QuaternionCertificate>) {
          if (sgn(cert.a) == 0 || sgn(cert.b) == 0) return false;
          if (algebra.multiply(cert.i, cert.i) != algebra.scale(algebra.one(), cert.a)) return false;
          if (algebra.multiply(cert.j, cert.j) != algebra.scale(algebra.one(), cert.b)) return false;
          if (algebra.multiply(cert.i, cert.j) != cert.k) return false;
          if (algebra.add(cert.k, algebra.multiply(cert.j, cert.i)) != algebra.zero()) return false;
          if (rank(from_columns(std::vector<Element>{algebra.one(), cert.i, cert.j, cert.k}, algebra.dim())) != 4)
            return false;
          if (verdict.tag == DivisionTag::QuaternionDivision)
            return cert.place && hilbert_symbol(cert.a, cert.b, *cert.place) == -1;
          if (verdict.tag == DivisionTag::Split) {
            for (Place v : relevant_places(cert.a, cert.b))
              if (hilbert_symbol(cert.a, cert.b, v) == -1) return false;
            return true;
          }
          return false;
        } else if constexpr (std::is_same_v<C, ZeroDivisorCertificate>) {
          return verdict.tag == DivisionTag::NotDivision && !is_zero_element(cert.left) &&
                 !is_zero_element(cert.right) && is_zero_element(algebra.multiply(cert.left, cert.right));
        } else {
          return verdict.tag == DivisionTag::Undetermined;
        }
      },
      verdict.certificate);
}

AlgebraConjugation::AlgebraConjugation(const TorusHom& xi, const EndAlgebra& source)
    : xi_(xi), quasi_(quasi_inverse(xi)) {
  if (!source.has_matrices() || !(source.basis().front().source() == xi.source())) {
    throw DimensionError("conjugation needs End0 of the isogeny's source torus");
  }
  const ScalarMatrix& jb = xi.target().J();
  for (const auto& e : source.basis()) {
    RatMatrix image = forward(to_rational(e.T()));
    ScalarMatrix s = to_scalar(image);
    if (!(jb * s == s * jb)) throw InvariantError("conjugated endomorphism does not commute with J_B");
    if (backward(image) != to_rational(e.T())) throw InvariantError("conjugation round trip failed");
    images_.push_back(std::move(image));
  }
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = 0; j < images_.size(); ++j) {
      RatMatrix product = to_rational(source.basis()[i].T() * source.basis()[j].T());
      if (forward(product) != images_[i] * images_[j]) throw InvariantError("conjugation is not multiplicative");
    }
}

RatMatrix AlgebraConjugation::forward(const RatMatrix& f) const {
  return to_rational(xi_.T()) * f * to_rational(quasi_.psi.T()) * Rational(Integer(1), quasi_.n);
}

RatMatrix AlgebraConjugation::backward(const RatMatrix& g) const {
  return to_rational(quasi_.psi.T()) * g * to_rational(xi_.T()) * Rational(Integer(1), quasi_.n);
}

AlgebraConjugation conjugate_algebra(const TorusHom& xi, const EndAlgebra& source) {
  return AlgebraConjugation(xi, source);
}

}  // namespace tsv
