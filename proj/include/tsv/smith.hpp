#pragma once

#include <optional>
#include <vector>

#include "tsv/matrix.hpp"

namespace tsv {

/// U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal of D, length min(rows, cols).
  std::vector<Integer> invariant_factors() const;
  /// Number of nonzero invariant factors.
  std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of the row space: echelon rows with positive
/// pivots and entries above each pivot reduced into [0, pivot). Zero rows are
/// dropped, so the result is a canonical basis of the row lattice.
IntMatrix hermite_rows(const IntMatrix& m);

/// Saturated basis of {x in Z^cols : M x = 0}, in Hermite order. Scalar entries
/// are split into their rational and sqrt(d) coordinates first.
std::vector<IntVector> integer_kernel(const ScalarMatrix& m);
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// Integer matrix with the same rational kernel: each row scaled by the lcm
/// of its denominators, surd parts stacked below rational parts.
IntMatrix clear_to_integer_system(const ScalarMatrix& m);

/// Columns of the given matrix span a saturated sublattice of Z^rows.
bool columns_saturated(const IntMatrix& columns);

/// For a saturated column basis Y (n x k), n x (n-k) columns C with [Y | C]
/// unimodular.
IntMatrix complement_basis(const IntMatrix& columns);

Integer determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);
/// Integer inverse of a unimodular matrix, nullopt otherwise.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

}  // namespace tsv
