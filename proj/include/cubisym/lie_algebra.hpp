#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubisym/linalg.hpp"

namespace cubisym {

class NotClosedError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DependentBasisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Matrix of the vector-field commutator [X_A, X_B] for linear fields
/// X^a = A^a_b x^b, i.e. B A - A B.
Mat3 bracket(const Mat3& a, const Mat3& b);

/// [X_i, X_j] = sum_k c(k, i, j) X_k over a fixed basis.
class StructureConstants {
public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  Scalar& operator()(std::size_t k, std::size_t i, std::size_t j) { return c_[(k * dim_ + i) * dim_ + j]; }
  const Scalar& operator()(std::size_t k, std::size_t i, std::size_t j) const { return c_[(k * dim_ + i) * dim_ + j]; }

  bool all_zero() const;
  bool antisymmetric() const;
  bool satisfies_jacobi() const;

private:
  std::size_t dim_ = 0;
  std::vector<Scalar> c_;
};

/// Throws DependentBasisError or NotClosedError.
StructureConstants structure_constants(const std::vector<Mat3>& basis);

/// Throws NotClosedError when the span is not a subalgebra.
bool is_abelian(const std::vector<Mat3>& basis);

/// Canonical echelon basis of the span of all pairwise brackets.
/// Throws NotClosedError when the span is not a subalgebra.
std::vector<Mat3> derived_algebra(const std::vector<Mat3>& basis);

/// Trace powers I_n = Tr(A^n) for n = 1..6, the determinant, and the
/// characteristic polynomial det(t Id - A) = t^3 + p2 t^2 + p1 t + p0 stored
/// as {1, p2, p1, p0}.
struct InvariantSeries {
  std::array<Scalar, 6> trace_powers{};
  Scalar delta;
  std::array<Scalar, 4> charpoly{};

  const Scalar& I(int n) const { return trace_powers.at(static_cast<std::size_t>(n - 1)); }
  bool all_zero() const;
  /// I_4..I_6 and Delta agree with the Newton recursion seeded by I_1..I_3.
  bool newton_consistent() const;

  friend bool operator==(const InvariantSeries&, const InvariantSeries&) = default;
};

InvariantSeries invariants(const Mat3& a);

/// Series with I_n given for n = 1..6 and Delta derived from I_1..I_3.
InvariantSeries series_from_traces(const std::array<Scalar, 6>& traces);

enum class Colinearity { Real, ComplexOnly, None };

std::string to_string(Colinearity c);

/// Outcome of looking for C with I_n = C^n I'_n (n = 1..6) and Delta = C^3 Delta'.
/// The nonzero ratios only pin down C^power; power is the gcd of the
/// exponents that carry information (0 when both series vanish).
struct ColinearityVerdict {
  Colinearity kind = Colinearity::None;
  int power = 0;
  std::optional<Scalar> c_power;  // C^power
  std::optional<Scalar> c;        // exact rational C when one exists (positive root for even power)
  std::string reason;
};

ColinearityVerdict colinearity(const InvariantSeries& s1, const InvariantSeries& s2);

}  // namespace cubisym
