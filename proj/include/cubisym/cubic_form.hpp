#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "cubisym/linalg.hpp"
#include "cubisym/scalar.hpp"

namespace cubisym {

/// Index triple with entries in {1, 2, 3}.
struct MultiIndex {
  int a, b, c;
};

/// The ten independent components of a totally symmetric cubic tensor
/// G_{abc} on R^3, in sorted multi-index order:
///   111 112 113 122 123 133 222 223 233 333.
enum class Component : std::size_t { A1, C1, C2, B1, F, B2, A2, C3, B3, A3 };

inline constexpr std::size_t kComponentCount = 10;

/// Components in sorted multi-index order (the row order of the Killing system).
inline constexpr std::array<Component, kComponentCount> kComponentOrder = {
    Component::A1, Component::C1, Component::C2, Component::B1, Component::F,
    Component::B2, Component::A2, Component::C3, Component::B3, Component::A3};

std::string_view component_name(Component c);
/// Throws std::invalid_argument for an unknown name.
Component component_from_name(std::string_view name);
/// Sorted multi-index of a component, e.g. B1 -> (1,2,2).
MultiIndex component_index(Component c);
/// Number of distinct permutations of the index: 1, 3 or 6.
int multiplicity(Component c);
/// Throws std::out_of_range if any index is outside 1..3.
Component component_at(MultiIndex idx);

/// Homogeneous cubic metric with constant components. Total symmetry is
/// structural: only the sorted multi-index is stored.
class CubicForm {
public:
  CubicForm() = default;

  Scalar& operator[](Component c) { return v_[static_cast<std::size_t>(c)]; }
  const Scalar& operator[](Component c) const { return v_[static_cast<std::size_t>(c)]; }

  /// G_{abc} for any ordering of the index triple.
  const Scalar& component(MultiIndex idx) const { return (*this)[component_at(idx)]; }
  /// Zero-based tensor access, i,j,k in 0..2.
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const;

  bool is_zero() const;

  CubicForm& operator+=(const CubicForm& o);
  CubicForm& operator-=(const CubicForm& o);
  CubicForm& operator*=(const Scalar& s);

  friend bool operator==(const CubicForm&, const CubicForm&) = default;

private:
  std::array<Scalar, kComponentCount> v_{};
};

CubicForm operator+(CubicForm a, const CubicForm& b);
CubicForm operator-(CubicForm a, const CubicForm& b);
CubicForm operator*(const Scalar& s, CubicForm a);

/// sum_{abc} G_{abc} v^a v^b v^c over all 27 index triples.
Scalar evaluate(const CubicForm& form, const Vec3& v);

/// Form whose only nonzero component is the sorted index (i,j,k), with value 1.
/// Symmetrization carries no 1/3! weight, so component values equal the
/// coefficient names used by canonical metrics directly.
CubicForm symmetrized_monomial(int i, int j, int k);

/// G'_{abc} = G_{def} T^d_a T^e_b T^f_c. Throws std::domain_error if T is singular.
CubicForm pullback(const CubicForm& form, const Mat3& t);

/// The 6x3 map v -> (v^d G_{dbc}) over sorted pairs (b,c); linear in G.
RationalMatrix contraction_matrix(const CubicForm& form);

/// Basis of {v : v^d G_{dbc} = 0 for all b, c}, canonical nullspace form.
std::vector<Vec3> radical(const CubicForm& form);

/// Number of nonzero stored components. Depends on the frame.
int affine_type(const CubicForm& form);

struct Tau0Bound {
  int bound;
  Mat3 witness;
};

/// Smallest affine type reachable by pulling back along invertible integer
/// matrices with entries in [-radius, radius]. An upper bound on the exact
/// (frame-independent) affine type. Throws std::invalid_argument for radius < 1.
Tau0Bound tau0_upper_bound(const CubicForm& form, int radius);

}  // namespace cubisym
