#include "cubisym/cubic_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cubisym {

namespace {

constexpr std::array<std::string_view, kComponentCount> kNames = {"A1", "C1", "C2", "B1", "F",
                                                                  "B2", "A2", "C3", "B3", "A3"};

constexpr std::array<MultiIndex, kComponentCount> kIndices = {{{1, 1, 1},
                                                               {1, 1, 2},
                                                               {1, 1, 3},
                                                               {1, 2, 2},
                                                               {1, 2, 3},
                                                               {1, 3, 3},
                                                               {2, 2, 2},
                                                               {2, 2, 3},
                                                               {2, 3, 3},
                                                               {3, 3, 3}}};

// Component for each zero-based (i,j,k), filled from the sorted table.
struct TensorSlots {
  std::array<Component, 27> slot{};
  TensorSlots() {
    for (std::size_t n = 0; n < kComponentCount; ++n) {
      const auto [a, b, c] = kIndices[n];
      const int p[3] = {a - 1, b - 1, c - 1};
      const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      for (const auto& q : perms) slot[9 * p[q[0]] + 3 * p[q[1]] + p[q[2]]] = static_cast<Component>(n);
    }
  }
};

const TensorSlots& slots() {
  static const TensorSlots s;
  return s;
}

Scalar trilinear(const CubicForm& g, const Vec3& u, const Vec3& v, const Vec3& w) {
  Scalar sum;
  for (std::size_t i = 0; i < 3; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < 3; ++j) {
      if (v[j].is_zero()) continue;
      const Scalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < 3; ++k) {
        if (w[k].is_zero()) continue;
        const Scalar& gijk = g.at(i, j, k);
        if (!gijk.is_zero()) sum += gijk * uv * w[k];
      }
    }
  }
  return sum;
}

}  // namespace

std::string_view component_name(Component c) { return kNames[static_cast<std::size_t>(c)]; }

Component component_from_name(std::string_view name) {
  for (std::size_t n = 0; n < kComponentCount; ++n)
    if (kNames[n] == name) return static_cast<Component>(n);
  throw std::invalid_argument("unknown cubic form component '" + std::string(name) + "'");
}

MultiIndex component_index(Component c) { return kIndices[static_cast<std::size_t>(c)]; }

int multiplicity(Component c) {
  const auto [a, b, cc] = component_index(c);
  if (a == b && b == cc) return 1;
  if (a == b || b == cc) return 3;
  return 6;
}

Component component_at(MultiIndex idx) {
  for (int v : {idx.a, idx.b, idx.c})
    if (v < 1 || v > 3) throw std::out_of_range("cubic form index out of range: " + std::to_string(v));
  return slots().slot[9 * (idx.a - 1) + 3 * (idx.b - 1) + (idx.c - 1)];
}

const Scalar& CubicForm::at(std::size_t i, std::size_t j, std::size_t k) const {
  return (*this)[slots().slot[9 * i + 3 * j + k]];
}

bool CubicForm::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Scalar& s) { return s.is_zero(); });
}

CubicForm& CubicForm::operator+=(const CubicForm& o) {
  for (std::size_t n = 0; n < kComponentCount; ++n) v_[n] += o.v_[n];
  return *this;
}

CubicForm& CubicForm::operator-=(const CubicForm& o) {
  for (std::size_t n = 0; n < kComponentCount; ++n) v_[n] -= o.v_[n];
  return *this;
}

CubicForm& CubicForm::operator*=(const Scalar& s) {
  for (auto& v : v_) v *= s;
  return *this;
}

CubicForm operator+(CubicForm a, const CubicForm& b) { return a += b; }
CubicForm operator-(CubicForm a, const CubicForm& b) { return a -= b; }
CubicForm operator*(const Scalar& s, CubicForm a) { return a *= s; }

Scalar evaluate(const CubicForm& form, const Vec3& v) {
  Scalar sum;
  for (Component c : kComponentOrder) {
    if (form[c].is_zero()) continue;
    const auto [a, b, cc] = component_index(c);
    sum += Scalar(multiplicity(c)) * form[c] * v[a - 1] * v[b - 1] * v[cc - 1];
  }
  return sum;
}

CubicForm symmetrized_monomial(int i, int j, int k) {
  CubicForm g;
  g[component_at({i, j, k})] = 1;
  return g;
}

CubicForm pullback(const CubicForm& form, const Mat3& t) {
  if (t.determinant().is_zero()) throw std::domain_error("pullback: singular transform");
  const std::array<Vec3, 3> cols = {t.column(0), t.column(1), t.column(2)};
  CubicForm out;
  for (Component c : kComponentOrder) {
    const auto [a, b, cc] = component_index(c);
    out[c] = trilinear(form, cols[a - 1], cols[b - 1], cols[cc - 1]);
  }
  return out;
}

RationalMatrix contraction_matrix(const CubicForm& form) {
  // Row (b,c), column d: G_{dbc}.
  RationalMatrix contraction(6, 3);
  std::size_t row = 0;
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t c = b; c < 3; ++c, ++row)
      for (std::size_t d = 0; d < 3; ++d) contraction(row, d) = form.at(d, b, c);
  return contraction;
}

std::vector<Vec3> radical(const CubicForm& form) {
  std::vector<Vec3> basis;
  for (const auto& v : nullspace(contraction_matrix(form))) basis.push_back(Vec3{{v[0], v[1], v[2]}});
  return basis;
}

int affine_type(const CubicForm& form) {
  int n = 0;
  for (Component c : kComponentOrder) n += form[c].is_zero() ? 0 : 1;
  return n;
}

Tau0Bound tau0_upper_bound(const CubicForm& form, int radius) {
  if (radius < 1) throw std::invalid_argument("tau0_upper_bound: radius must be >= 1");

  // Column permutations and column sign flips permute or negate components,
  // so they never change the affine type: enumerate column vectors up to
  // sign (first nonzero entry positive), as strictly increasing triples.
  std::vector<Vec3> columns;
  for (int x = -radius; x <= radius; ++x)
    for (int y = -radius; y <= radius; ++y)
      for (int z = -radius; z <= radius; ++z) {
        const int first = x != 0 ? x : (y != 0 ? y : z);
        if (first <= 0) continue;
        columns.push_back(Vec3{{x, y, z}});
      }

  Tau0Bound best{affine_type(form), Mat3::identity()};
  if (best.bound == 0) return best;

  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      for (std::size_t k = j + 1; k < columns.size(); ++k) {
        const Mat3 t = Mat3::from_columns(columns[i], columns[j], columns[k]);
        if (t.determinant().is_zero()) continue;
        const std::array<const Vec3*, 3> cols = {&columns[i], &columns[j], &columns[k]};
        int count = 0;
        for (Component c : kComponentOrder) {
          const auto [a, b, cc] = component_index(c);
          if (!trilinear(form, *cols[a - 1], *cols[b - 1], *cols[cc - 1]).is_zero()) ++count;
          if (count >= best.bound) break;
        }
        if (count < best.bound) {
          best = {count, t};
          if (count <= 1) return best;  // a nonzero form never reaches 0
        }
      }
    }
  }
  return best;
}

}  // namespace cubisym
