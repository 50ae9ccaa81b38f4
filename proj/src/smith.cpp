#include "tsv/smith.hpp"

#include <numeric>

#include "tsv/linalg.hpp"

namespace tsv {

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row[target] += factor * row[source]
void add_row(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void add_col(IntMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += factor * m(i, source);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

#ifdef TSV_EXPENSIVE_CHECKS
void check_smith(const IntMatrix& input, const SmithForm& snf) {
  if (!(snf.U * input * snf.V == snf.D)) throw std::logic_error("SNF: U*M*V != D");
  if (!is_unimodular(snf.U) || !is_unimodular(snf.V)) throw std::logic_error("SNF: transform not unimodular");
  auto diag = snf.invariant_factors();
  for (std::size_t i = 0; i < snf.D.rows(); ++i)
    for (std::size_t j = 0; j < snf.D.cols(); ++j)
      if (i != j && sgn(snf.D(i, j)) != 0) throw std::logic_error("SNF: D not diagonal");
  for (std::size_t k = 0; k + 1 < diag.size(); ++k) {
    if (sgn(diag[k]) < 0) throw std::logic_error("SNF: negative invariant factor");
    if (sgn(diag[k]) == 0 ? sgn(diag[k + 1]) != 0 : !mpz_divisible_p(diag[k + 1].get_mpz_t(), diag[k].get_mpz_t()))
      throw std::logic_error("SNF: divisibility chain broken");
  }
}
#endif

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) out.push_back(D(i, i));
  return out;
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (const auto& d : invariant_factors()) r += sgn(d) != 0;
  return r;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Pivot: smallest nonzero |entry| in the trailing submatrix.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(a(i, j)) == 0) continue;
          if (pi == rows || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi == rows) break;  // trailing block is zero
      swap_rows(a, t, pi);
      swap_rows(u, t, pi);
      swap_cols(a, t, pj);
      swap_cols(v, t, pj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        Integer neg = -q;
        add_row(a, i, t, neg);
        add_row(u, i, t, neg);
        dirty |= sgn(a(i, t)) != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        Integer neg = -q;
        add_col(a, j, t, neg);
        add_col(v, j, t, neg);
        dirty |= sgn(a(t, j)) != 0;
      }
      if (dirty) continue;

      // Row and column cleared; enforce divisibility of the trailing block.
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            add_row(a, t, i, Integer(1));
            add_row(u, t, i, Integer(1));
            divisible = false;
            break;
          }
        }
      if (divisible) break;
    }
    if (sgn(a(t, t)) < 0) {
      negate_row(a, t);
      negate_row(u, t);
    }
  }

  SmithForm out{std::move(u), std::move(a), std::move(v)};
#ifdef TSV_EXPENSIVE_CHECKS
  check_smith(m, out);
#endif
  return out;
}

IntMatrix hermite_rows(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid down the column until only row r is nonzero there.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (sgn(a(i, c)) == 0) continue;
        if (best == rows || mpz_cmpabs(a(i, c).get_mpz_t(), a(best, c).get_mpz_t()) < 0) best = i;
      }
      if (best == rows) break;
      swap_rows(a, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (sgn(a(i, c)) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        add_row(a, i, r, Integer(-q));
        done &= sgn(a(i, c)) == 0;
      }
      if (done) break;
    }
    if (sgn(a(r, c)) == 0) continue;
    if (sgn(a(r, c)) < 0) negate_row(a, r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      if (sgn(q) != 0) add_row(a, i, r, Integer(-q));
    }
    pivots.push_back(c);
    ++r;
  }
  return a.block(0, 0, r, cols);
}

IntMatrix clear_to_integer_system(const ScalarMatrix& m) {
  bool has_surd = false;
  for (const auto& v : m.entries()) has_surd |= !v.is_rational();
  const std::size_t blocks = has_surd ? 2 : 1;
  IntMatrix out(m.rows() * blocks, m.cols());
  for (std::size_t part = 0; part < blocks; ++part) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Integer lcm = 1;
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rational& q = part == 0 ? m(i, j).rational_part() : m(i, j).surd_part();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
      }
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rational& q = part == 0 ? m(i, j).rational_part() : m(i, j).surd_part();
        out(part * m.rows() + i, j) = q.get_num() * (lcm / q.get_den());
      }
    }
  }
  return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  const std::size_t r = snf.rank();
  if (r == m.cols()) return {};
  IntMatrix basis_rows = snf.V.block(0, r, m.cols(), m.cols() - r).transpose();
  IntMatrix canonical = hermite_rows(basis_rows);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < canonical.rows(); ++i) {
    auto row = canonical.row(i);
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

std::vector<IntVector> integer_kernel(const ScalarMatrix& m) {
  return integer_kernel(clear_to_integer_system(m));
}

bool columns_saturated(const IntMatrix& columns) {
  auto snf = smith_normal_form(columns);
  if (snf.rank() != columns.cols()) return false;
  for (const auto& d : snf.invariant_factors())
    if (d != 1) return false;
  return true;
}

IntMatrix complement_basis(const IntMatrix& columns) {
  if (!columns_saturated(columns)) throw std::invalid_argument("complement_basis: columns not a saturated basis");
  auto snf = smith_normal_form(columns);
  auto u_inv = inverse(to_rational(snf.U));
  const std::size_t n = columns.rows();
  const std::size_t k = columns.cols();
  IntMatrix out(n, n - k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n - k; ++j) out(i, j) = (*u_inv)(i, k + j).get_num();
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square " + m.shape() + " matrix");
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  Integer det = determinant(m);
  return det == 1 || det == -1;
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m) {
  if (!is_unimodular(m)) return std::nullopt;
  auto inv = inverse(to_rational(m));
  return inv->map([](const Rational& q) { return Integer(q.get_num()); });
}

}  // namespace tsv
