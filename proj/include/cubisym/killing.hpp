#pragma once

#include <vector>

#include "cubisym/cubic_form.hpp"
#include "cubisym/linalg.hpp"

namespace cubisym {

/// Linear map vec(A) -> vec(K(A)) for a fixed metric. Columns are the nine
/// entries of A, row-major by (target, source); rows are the ten components in
/// sorted multi-index order 111,112,113,122,123,133,222,223,233,333.
struct KillingSystem {
  RationalMatrix matrix{10, 9};
};

/// Linear (non-translation) Killing fields of a constant cubic metric.
struct SymmetryAlgebra {
  /// Canonical nullspace basis of the Killing system.
  std::vector<Mat3> generators;
  std::vector<Vec3> radical_basis;
  /// Set exactly when the radical is nontrivial: each radical vector v
  /// generates the field f(x) v for an arbitrary function f.
  bool has_infinite_family = false;
  /// |generators| - 3 |radical|: the part not explained by the radical.
  int finite_nontrivial_dim = 0;

  int radical_dim() const { return static_cast<int>(radical_basis.size()); }
  int kernel_dim() const { return static_cast<int>(generators.size()); }
};

/// Lie derivative of G along X^a = A^a_b x^b:
/// K(A)_{abc} = sum_d (A^d_a G_{dbc} + A^d_b G_{adc} + A^d_c G_{abd}).
CubicForm killing_operator(const CubicForm& form, const Mat3& a);

KillingSystem build_system(const CubicForm& form);

SymmetryAlgebra solve(const CubicForm& form);

bool verify_killing(const CubicForm& form, const Mat3& a);

}  // namespace cubisym
