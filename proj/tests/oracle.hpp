#pragma once

// Independent reference computations. They use raw GMP rationals and direct
// index loops, and share no code paths with the library beyond CubicForm::at.

#include <array>
#include <vector>

#include <gmpxx.h>

#include "cubisym/cubic_form.hpp"
#include "cubisym/linalg.hpp"

namespace oracle {

using Tensor = std::array<std::array<std::array<mpq_class, 3>, 3>, 3>;
using Dense = std::vector<std::vector<mpq_class>>;

inline mpq_class q(const cubisym::Scalar& s) { return s.raw(); }

inline Tensor tensor(const cubisym::CubicForm& g) {
  Tensor t;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) t[a][b][c] = q(g.at(a, b, c));
  return t;
}

// The 27-term Lie derivative, every index triple written out.
inline Tensor lie_derivative(const cubisym::CubicForm& g, const cubisym::Mat3& m) {
  const Tensor t = tensor(g);
  Tensor out;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) {
        mpq_class s = 0;
        for (std::size_t d = 0; d < 3; ++d)
          s += q(m(d, a)) * t[d][b][c] + q(m(d, b)) * t[a][d][c] + q(m(d, c)) * t[a][b][d];
        out[a][b][c] = s;
      }
  return out;
}

// Plain Gauss-Jordan rank on rationals.
inline std::size_t rank(Dense m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Killing system assembled column by column from the 27-term operator on E_ij.
inline Dense killing_matrix(const cubisym::CubicForm& g) {
  Dense m(27, std::vector<mpq_class>(9));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const Tensor k = lie_derivative(g, cubisym::Mat3::unit(i, j));
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
          for (std::size_t c = 0; c < 3; ++c) m[9 * a + 3 * b + c][3 * i + j] = k[a][b][c];
    }
  return m;
}

inline std::size_t kernel_dim(const cubisym::CubicForm& g) { return 9 - rank(killing_matrix(g)); }

inline std::size_t radical_dim(const cubisym::CubicForm& g) {
  const Tensor t = tensor(g);
  Dense m(9, std::vector<mpq_class>(3));
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t c = 0; c < 3; ++c)
      for (std::size_t d = 0; d < 3; ++d) m[3 * b + c][d] = t[d][b][c];
  return 3 - rank(m);
}

inline mpq_class evaluate(const cubisym::CubicForm& g, const std::array<mpq_class, 3>& v) {
  const Tensor t = tensor(g);
  mpq_class s = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) s += t[a][b][c] * v[a] * v[b] * v[c];
  return s;
}

// Traces of powers by repeated multiplication and the determinant by cofactors.
inline std::array<mpq_class, 6> trace_powers(const cubisym::Mat3& m) {
  std::array<std::array<mpq_class, 3>, 3> a, p;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a[i][j] = p[i][j] = q(m(i, j));
  std::array<mpq_class, 6> out;
  for (int n = 0; n < 6; ++n) {
    out[n] = p[0][0] + p[1][1] + p[2][2];
    std::array<std::array<mpq_class, 3>, 3> next;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        next[i][j] = 0;
        for (std::size_t k = 0; k < 3; ++k) next[i][j] += p[i][k] * a[k][j];
      }
    p = next;
  }
  return out;
}

inline mpq_class determinant(const cubisym::Mat3& m) {
  auto e = [&](std::size_t i, std::size_t j) { return q(m(i, j)); };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

}  // namespace oracle
