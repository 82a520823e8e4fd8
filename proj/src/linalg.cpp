#include "cubisym/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace cubisym {

bool Vec3::is_zero() const { return x[0].is_zero() && x[1].is_zero() && x[2].is_zero(); }

Vec3 operator+(const Vec3& a, const Vec3& b) { return {{a[0] + b[0], a[1] + b[1], a[2] + b[2]}}; }
Vec3 operator-(const Vec3& a, const Vec3& b) { return {{a[0] - b[0], a[1] - b[1], a[2] - b[2]}}; }
Vec3 operator*(const Scalar& s, const Vec3& v) { return {{s * v[0], s * v[1], s * v[2]}}; }
Scalar dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Mat3::Mat3(std::initializer_list<std::initializer_list<Scalar>> rows) {
  if (rows.size() != 3) throw std::invalid_argument("Mat3 needs 3 rows");
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != 3) throw std::invalid_argument("Mat3 needs 3 columns");
    std::size_t c = 0;
    for (const auto& v : row) a_[r][c++] = v;
    ++r;
  }
}

Mat3 Mat3::identity() { return diagonal(1, 1, 1); }

Mat3 Mat3::diagonal(const Scalar& a, const Scalar& b, const Scalar& c) {
  Mat3 m;
  m.a_[0][0] = a;
  m.a_[1][1] = b;
  m.a_[2][2] = c;
  return m;
}

Mat3 Mat3::unit(std::size_t row, std::size_t col) {
  Mat3 m;
  m.a_[row][col] = 1;
  return m;
}

Mat3 Mat3::from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Mat3 m;
  for (std::size_t r = 0; r < 3; ++r) {
    m.a_[r][0] = c0[r];
    m.a_[r][1] = c1[r];
    m.a_[r][2] = c2[r];
  }
  return m;
}

Vec3 Mat3::column(std::size_t c) const { return {{a_[0][c], a_[1][c], a_[2][c]}}; }

Mat3 Mat3::transpose() const {
  Mat3 t;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) t.a_[c][r] = a_[r][c];
  return t;
}

Scalar Mat3::trace() const { return a_[0][0] + a_[1][1] + a_[2][2]; }

Scalar Mat3::determinant() const {
  return a_[0][0] * (a_[1][1] * a_[2][2] - a_[1][2] * a_[2][1]) -
         a_[0][1] * (a_[1][0] * a_[2][2] - a_[1][2] * a_[2][0]) +
         a_[0][2] * (a_[1][0] * a_[2][1] - a_[1][1] * a_[2][0]);
}

bool Mat3::is_zero() const {
  for (const auto& row : a_)
    for (const auto& v : row)
      if (!v.is_zero()) return false;
  return true;
}

Mat3 Mat3::inverse() const {
  const Scalar det = determinant();
  if (det.is_zero()) throw std::domain_error("singular matrix");
  Mat3 adj;
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t r1 = (c + 1) % 3, r2 = (c + 2) % 3;
      const std::size_t c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      adj.a_[r][c] = a_[r1][c1] * a_[r2][c2] - a_[r1][c2] * a_[r2][c1];
    }
  }
  return det.inverse() * adj;
}

std::array<Scalar, 9> Mat3::flatten() const {
  std::array<Scalar, 9> v;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) v[3 * r + c] = a_[r][c];
  return v;
}

Mat3 Mat3::unflatten(std::span<const Scalar> v) {
  if (v.size() != 9) throw std::invalid_argument("Mat3::unflatten needs 9 entries");
  Mat3 m;
  for (std::size_t i = 0; i < 9; ++i) m.a_[i / 3][i % 3] = v[i];
  return m;
}

Mat3& Mat3::operator+=(const Mat3& o) {
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) a_[r][c] += o.a_[r][c];
  return *this;
}

Mat3& Mat3::operator-=(const Mat3& o) {
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) a_[r][c] -= o.a_[r][c];
  return *this;
}

Mat3& Mat3::operator*=(const Scalar& s) {
  for (auto& row : a_)
    for (auto& v : row) v *= s;
  return *this;
}

Mat3 operator+(Mat3 a, const Mat3& b) { return a += b; }
Mat3 operator-(Mat3 a, const Mat3& b) { return a -= b; }
Mat3 operator*(const Scalar& s, Mat3 a) { return a *= s; }

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 p;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) p(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c) + a(r, 2) * b(2, c);
  return p;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
  Vec3 out;
  for (std::size_t r = 0; r < 3; ++r) out[r] = a(r, 0) * v[0] + a(r, 1) * v[1] + a(r, 2) * v[2];
  return out;
}

std::vector<Scalar> RationalMatrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw std::invalid_argument("RationalMatrix::apply: size mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

EchelonForm reduced_echelon(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();

  // Scale every row to integers.
  std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) z[r][c] = m(r, c).raw().get_num() * (l / m(r, c).raw().get_den());
  }

  // Bareiss forward elimination; every division below is exact.
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && z[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(z[p], z[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = z[r][c] * z[i][j] - z[i][c] * z[r][j];
        mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      z[i][c] = 0;
    }
    prev = z[r][c];
    pivots.push_back(c);
    ++r;
  }

  // Back-substitution to reduced form over the rationals.
  RationalMatrix red(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) red(i, j) = Scalar(mpq_class(z[i][j]));
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t pc = pivots[k];
    const Scalar inv = red(k, pc).inverse();
    for (std::size_t j = 0; j < cols; ++j) red(k, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      const Scalar f = red(i, pc);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) red(i, j) -= f * red(k, j);
    }
  }
  return {std::move(red), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m) { return reduced_echelon(m).rank(); }

std::vector<std::vector<Scalar>> nullspace(const RationalMatrix& m) {
  const EchelonForm ef = reduced_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ef.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols);
    v[f] = 1;
    for (std::size_t k = 0; k < ef.pivot_columns.size(); ++k) v[ef.pivot_columns[k]] = -ef.reduced(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix matrix_from_rows(std::span<const std::vector<Scalar>> rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("matrix_from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<Scalar>> span_basis(std::span<const std::vector<Scalar>> vectors, std::size_t length) {
  if (vectors.empty()) return {};
  const EchelonForm ef = reduced_echelon(matrix_from_rows(vectors, length));
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t k = 0; k < ef.rank(); ++k) {
    std::vector<Scalar> row(length);
    for (std::size_t j = 0; j < length; ++j) row[j] = ef.reduced(k, j);
    basis.push_back(std::move(row));
  }
  return basis;
}

bool coordinates_in(std::span<const std::vector<Scalar>> basis, std::span<const Scalar> v,
                    std::vector<Scalar>& coords) {
  // Solve sum_i c_i basis_i = v as an augmented system with basis vectors as columns.
  const std::size_t n = v.size(), k = basis.size();
  RationalMatrix aug(n, k + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug(j, i) = basis[i][j];
    aug(j, k) = v[j];
  }
  const EchelonForm ef = reduced_echelon(aug);
  for (auto pc : ef.pivot_columns)
    if (pc == k) return false;
  coords.assign(k, Scalar{});
  for (std::size_t r = 0; r < ef.rank(); ++r) coords[ef.pivot_columns[r]] = ef.reduced(r, k);
  return true;
}

bool same_span(std::span<const std::vector<Scalar>> a, std::span<const std::vector<Scalar>> b, std::size_t length) {
  return span_basis(a, length) == span_basis(b, length);
}

std::vector<Scalar> to_vector(const Mat3& m) {
  const auto f = m.flatten();
  return {f.begin(), f.end()};
}

std::vector<Scalar> to_vector(const Vec3& v) { return {v[0], v[1], v[2]}; }

std::vector<std::vector<Scalar>> to_vectors(std::span<const Mat3> ms) {
  std::vector<std::vector<Scalar>> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(to_vector(m));
  return out;
}

std::vector<std::vector<Scalar>> to_vectors(std::span<const Vec3> vs) {
  std::vector<std::vector<Scalar>> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(to_vector(v));
  return out;
}

std::string to_string(const Mat3& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < 3; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < 3; ++c) os << (c ? " " : "") << m(r, c);
  }
  os << "]";
  return os.str();
}

std::string to_string(const Vec3& v) {
  std::ostringstream os;
  os << "(" << v[0] << ", " << v[1] << ", " << v[2] << ")";
  return os.str();
}

}  // namespace cubisym
