#include "cubisym/quadratic_field.hpp"

#include <stdexcept>

namespace cubisym {

std::size_t quadratic_rank(const RationalMatrix& rational, const RationalMatrix& radical, long d) {
  if (rational.rows() != radical.rows() || rational.cols() != radical.cols())
    throw std::invalid_argument("quadratic_rank: shape mismatch");
  const std::size_t rows = rational.rows(), cols = rational.cols();
  std::vector<std::vector<QuadraticScalar>> m(rows, std::vector<QuadraticScalar>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = QuadraticScalar(rational(r, c), radical(r, c), d);

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const QuadraticScalar inv = m[rank][c].inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c].is_zero()) continue;
      const QuadraticScalar f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace cubisym
