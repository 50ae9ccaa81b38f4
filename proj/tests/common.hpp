#pragma once

#include <set>
#include <vector>

#include "tsv/linalg.hpp"
#include "tsv/scalar.hpp"
#include "tsv/torus.hpp"

namespace tsvtest {

using namespace tsv;

inline Scalar surd(long num, long den, std::int64_t d) { return Scalar(Rational(0), Rational(num, den), d); }

// Lattice basis (1, tau); J is multiplication by i in those coordinates.
inline ComplexTorus e_i() { return ComplexTorus("E_i", ScalarMatrix{{0, -1}, {1, 0}}); }
inline ComplexTorus e_2i() { return ComplexTorus("E_2i", ScalarMatrix{{0, -2}, {Rational(1, 2), 0}}); }
inline ComplexTorus e_sqrt2i() { return ComplexTorus("E_sqrt2i", ScalarMatrix{{0, surd(-1, 1, 2)}, {surd(1, 2, 2), 0}}); }
// tau = sqrt(2) + i is not imaginary quadratic, so End = Z.
inline ComplexTorus e_nc() {
  return ComplexTorus("E_nc", ScalarMatrix{{surd(-1, 1, 2), -3}, {1, surd(1, 1, 2)}});
}
inline ComplexTorus square(const ComplexTorus& e) { return product(e, e, e.name() + "2"); }

// Every integer matrix with entries in [-range, range] and the given shape.
inline std::vector<IntMatrix> all_small_matrices(std::size_t rows, std::size_t cols, long range) {
  std::vector<IntMatrix> out;
  const std::size_t n = rows * cols;
  std::vector<long> e(n, -range);
  while (true) {
    IntMatrix m(rows, cols);
    for (std::size_t k = 0; k < n; ++k) m(k / cols, k % cols) = e[k];
    out.push_back(std::move(m));
    std::size_t k = 0;
    while (k < n && e[k] == range) e[k++] = -range;
    if (k == n) break;
    ++e[k];
  }
  return out;
}

// Brute-force Hom(A, B): search small matrices directly against J_B T = T J_A
// and return the dimension of their span. Only for g = 1.
inline std::size_t brute_force_hom_rank(const ComplexTorus& a, const ComplexTorus& b, long range,
                                        std::vector<IntMatrix>* found = nullptr) {
  std::vector<RatVector> span;
  for (const auto& t : all_small_matrices(b.lattice_rank(), a.lattice_rank(), range)) {
    ScalarMatrix ts = to_scalar(t);
    if (!(b.J() * ts == ts * a.J())) continue;
    if (found) found->push_back(t);
    RatVector v;
    for (const auto& x : t.entries()) v.push_back(Rational(x));
    span.push_back(std::move(v));
  }
  if (span.empty()) return 0;
  return rank(from_columns(span, span.front().size()));
}

}  // namespace tsvtest
