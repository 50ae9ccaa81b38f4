#include "tsv/torus.hpp"

#include <algorithm>
#include <functional>

#include "tsv/linalg.hpp"
#include "tsv/smith.hpp"

namespace tsv {

ComplexTorus::ComplexTorus(std::string name, ScalarMatrix J) : name_(std::move(name)), J_(std::move(J)) {
  if (J_.rows() == 0 || !J_.is_square() || J_.rows() % 2 != 0) {
    throw InvariantError("complex structure must be 2g x 2g with g >= 1 at torus " + name_ + ", got " + J_.shape());
  }
  extension();  // rejects mixed tags
  if (!(J_ * J_ == -ScalarMatrix::identity(J_.rows()))) {
    throw InvariantError("J^2 != -I at torus " + name_);
  }
}

std::int64_t ComplexTorus::extension() const {
  std::int64_t d = 1;
  for (const auto& v : J_.entries()) d = combine_tags(d, v.is_rational() ? 1 : v.d());
  return d;
}

ComplexTorus dual(const ComplexTorus& torus) {
  const std::string& name = torus.name();
  std::string dual_name = !name.empty() && name.back() == '^' ? name.substr(0, name.size() - 1) : name + "^";
  return ComplexTorus(std::move(dual_name), -torus.J().transpose());
}

ComplexTorus product(const ComplexTorus& a, const ComplexTorus& b, std::string name) {
  return ComplexTorus(std::move(name), block_diagonal(a.J(), b.J()));
}

TorusHom::TorusHom(ComplexTorus source, ComplexTorus target, IntMatrix T)
    : source_(std::move(source)), target_(std::move(target)), T_(std::move(T)) {
  if (T_.rows() != target_.lattice_rank() || T_.cols() != source_.lattice_rank()) {
    throw DimensionError("homomorphism " + source_.name() + " -> " + target_.name() + " needs a " +
                         std::to_string(target_.lattice_rank()) + "x" + std::to_string(source_.lattice_rank()) +
                         " matrix, got " + T_.shape());
  }
  ScalarMatrix analytic = to_scalar(T_);
  if (!(target_.J() * analytic == analytic * source_.J())) {
    throw InvariantError("J_B*T != T*J_A for map " + source_.name() + " -> " + target_.name());
  }
}

TorusHom TorusHom::identity(const ComplexTorus& torus) {
  return TorusHom(torus, torus, IntMatrix::identity(torus.lattice_rank()));
}

TorusHom TorusHom::multiplication(const ComplexTorus& torus, long n) {
  return TorusHom(torus, torus, IntMatrix::identity(torus.lattice_rank()) * Integer(n));
}

TorusHom TorusHom::zero(const ComplexTorus& source, const ComplexTorus& target) {
  return TorusHom(source, target, IntMatrix(target.lattice_rank(), source.lattice_rank()));
}

TorusHom compose(const TorusHom& g, const TorusHom& f) {
  if (!(f.target() == g.source())) {
    throw DimensionError("cannot compose " + f.source().name() + " -> " + f.target().name() + " with " +
                         g.source().name() + " -> " + g.target().name());
  }
  return TorusHom(f.source(), g.target(), g.T() * f.T());
}

TorusHom add(const TorusHom& f, const TorusHom& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target())) throw DimensionError("adding maps between different tori");
  return TorusHom(f.source(), f.target(), f.T() + g.T());
}

ScalarMatrix commutation_operator(const ComplexTorus& a, const ComplexTorus& b) {
  const std::size_t m = b.lattice_rank();
  const std::size_t n = a.lattice_rank();
  ScalarMatrix op(m * n, m * n);
  // (J_B T)_{ij} = sum_k JB(i,k) T(k,j);  (T J_A)_{ij} = sum_k T(i,k) JA(k,j)
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t eq = i * n + j;
      for (std::size_t k = 0; k < m; ++k) op(eq, k * n + j) += b.J()(i, k);
      for (std::size_t k = 0; k < n; ++k) op(eq, i * n + k) -= a.J()(k, j);
    }
  return op;
}

std::vector<TorusHom> hom_lattice(const ComplexTorus& a, const ComplexTorus& b) {
  combine_tags(a.extension(), b.extension());
  const std::size_t m = b.lattice_rank();
  const std::size_t n = a.lattice_rank();
  std::vector<TorusHom> out;
  for (auto& v : integer_kernel(commutation_operator(a, b))) {
    out.emplace_back(a, b, IntMatrix(m, n, std::move(v)));
  }
  return out;
}

TorusHom transpose_hom(const TorusHom& f) {
  return TorusHom(dual(f.target()), dual(f.source()), f.T().transpose());
}

std::optional<Integer> is_isogeny(const TorusHom& f) {
  if (f.source().g() != f.target().g()) {
    throw DimensionError("isogeny test between tori of dimension " + std::to_string(f.source().g()) + " and " +
                         std::to_string(f.target().g()));
  }
  auto snf = smith_normal_form(f.T());
  Integer degree = 1;
  for (const auto& d : snf.invariant_factors()) degree *= d;
  if (sgn(degree) == 0) return std::nullopt;
  return degree;
}

QuasiInverse quasi_inverse(const TorusHom& f) {
  if (!is_isogeny(f)) throw NotAnIsogeny("map " + f.source().name() + " -> " + f.target().name() + " is not an isogeny");
  auto inv = inverse(to_rational(f.T()));
  Integer n = 1;
  for (const auto& q : inv->entries()) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), q.get_den_mpz_t());
  IntMatrix psi(inv->rows(), inv->cols());
  for (std::size_t i = 0; i < psi.rows(); ++i)
    for (std::size_t j = 0; j < psi.cols(); ++j) {
      Rational scaled = (*inv)(i, j) * Rational(n);
      psi(i, j) = scaled.get_num();
    }
  return {n, TorusHom(f.target(), f.source(), std::move(psi))};
}

std::vector<IntMatrix> bounded_lattice_elements(const std::vector<IntMatrix>& basis, long bound) {
  std::vector<IntMatrix> out;
  if (basis.empty()) return out;
  const std::size_t rows = basis.front().rows();
  const std::size_t cols = basis.front().cols();
  const std::size_t len = rows * cols;
  std::vector<std::size_t> pivots;
  for (const auto& b : basis) {
    auto e = b.entries();
    std::size_t p = 0;
    while (p < len && sgn(e[p]) == 0) ++p;
    if (p == len) throw std::invalid_argument("bounded_lattice_elements: zero basis vector");
    pivots.push_back(p);
  }
  const Integer lo(-bound), hi(bound);
  std::vector<Integer> acc(len, Integer(0));
  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == basis.size()) {
      for (const auto& v : acc)
        if (v < lo || v > hi) return;
      out.emplace_back(rows, cols, acc);
      return;
    }
    const Integer& piv = basis[i].entries()[pivots[i]];
    const Integer& partial = acc[pivots[i]];
    // c * piv + partial must land in [-bound, bound]
    Integer first, last;
    Integer num_lo = lo - partial, num_hi = hi - partial;
    if (sgn(piv) > 0) {
      mpz_cdiv_q(first.get_mpz_t(), num_lo.get_mpz_t(), piv.get_mpz_t());
      mpz_fdiv_q(last.get_mpz_t(), num_hi.get_mpz_t(), piv.get_mpz_t());
    } else {
      mpz_cdiv_q(first.get_mpz_t(), num_hi.get_mpz_t(), piv.get_mpz_t());
      mpz_fdiv_q(last.get_mpz_t(), num_lo.get_mpz_t(), piv.get_mpz_t());
    }
    auto e = basis[i].entries();
    for (Integer c = first; c <= last; ++c) {
      for (std::size_t k = 0; k < len; ++k) acc[k] += c * e[k];
      recurse(i + 1);
      for (std::size_t k = 0; k < len; ++k) acc[k] -= c * e[k];
    }
  };
  recurse(0);
  return out;
}

namespace {

// 1, -1, 2, -2, ... rank first; 0 last.
long coefficient_rank(long c) {
  if (c == 0) return 1L << 30;
  return c > 0 ? 2 * (c - 1) : 2 * (-c - 1) + 1;
}

}  // namespace

std::optional<TorusHom> isogeny_witness(const ComplexTorus& a, const ComplexTorus& b, long bound) {
  if (a.g() != b.g()) throw DimensionError("isogeny_witness between tori of different dimension");
  auto basis = hom_lattice(a, b);
  const std::size_t r = basis.size();
  if (r == 0 || bound < 1) return std::nullopt;

  for (long weight = 1; weight <= static_cast<long>(r) * bound; ++weight) {
    std::vector<std::vector<long>> layer;
    std::vector<long> coeffs(r, 0);
    std::function<void(std::size_t, long)> fill = [&](std::size_t i, long remaining) {
      if (i == r) {
        if (remaining == 0) layer.push_back(coeffs);
        return;
      }
      for (long c = -std::min(bound, remaining); c <= std::min(bound, remaining); ++c) {
        coeffs[i] = c;
        fill(i + 1, remaining - (c < 0 ? -c : c));
      }
      coeffs[i] = 0;
    };
    fill(0, weight);
    std::sort(layer.begin(), layer.end(), [](const std::vector<long>& x, const std::vector<long>& y) {
      for (std::size_t k = 0; k < x.size(); ++k) {
        long rx = coefficient_rank(x[k]), ry = coefficient_rank(y[k]);
        if (rx != ry) return rx < ry;
      }
      return false;
    });
    for (const auto& c : layer) {
      IntMatrix T(b.lattice_rank(), a.lattice_rank());
      for (std::size_t k = 0; k < r; ++k)
        if (c[k] != 0) T += basis[k].T() * Integer(c[k]);
      if (sgn(determinant(T)) != 0) return TorusHom(a, b, std::move(T));
    }
  }
  return std::nullopt;
}

}  // namespace tsv
