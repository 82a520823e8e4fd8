#include "cubisym/killing.hpp"

namespace cubisym {

CubicForm killing_operator(const CubicForm& form, const Mat3& a) {
  CubicForm out;
  for (Component c : kComponentOrder) {
    const auto idx = component_index(c);
    const std::size_t i = idx.a - 1, j = idx.b - 1, k = idx.c - 1;
    Scalar sum;
    for (std::size_t d = 0; d < 3; ++d) {
      sum += a(d, i) * form.at(d, j, k);
      sum += a(d, j) * form.at(i, d, k);
      sum += a(d, k) * form.at(i, j, d);
    }
    out[c] = sum;
  }
  return out;
}

KillingSystem build_system(const CubicForm& form) {
  KillingSystem sys;
  for (std::size_t row = 0; row < kComponentCount; ++row) {
    const auto idx = component_index(kComponentOrder[row]);
    const std::size_t slot[3] = {static_cast<std::size_t>(idx.a - 1), static_cast<std::size_t>(idx.b - 1),
                                 static_cast<std::size_t>(idx.c - 1)};
    // Slot s of the index is replaced by d; the coefficient multiplies A^d_{slot[s]}.
    for (std::size_t s = 0; s < 3; ++s) {
      for (std::size_t d = 0; d < 3; ++d) {
        std::size_t t[3] = {slot[0], slot[1], slot[2]};
        t[s] = d;
        sys.matrix(row, 3 * d + slot[s]) += form.at(t[0], t[1], t[2]);
      }
    }
  }
  return sys;
}

SymmetryAlgebra solve(const CubicForm& form) {
  SymmetryAlgebra alg;
  for (const auto& v : nullspace(build_system(form).matrix)) alg.generators.push_back(Mat3::unflatten(v));
  alg.radical_basis = radical(form);
  alg.has_infinite_family = !alg.radical_basis.empty();
  alg.finite_nontrivial_dim = alg.kernel_dim() - 3 * alg.radical_dim();
  return alg;
}

bool verify_killing(const CubicForm& form, const Mat3& a) { return killing_operator(form, a).is_zero(); }

}  // namespace cubisym
