#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cubisym/linalg.hpp"
#include "cubisym/scalar.hpp"

namespace cubisym {

/// Element a + b*sqrt(d) of Q(sqrt d) for a fixed non-square integer d.
/// Used to evaluate metric families at irrational parameter values exactly.
class QuadraticScalar {
public:
  QuadraticScalar() = default;
  QuadraticScalar(Scalar a, Scalar b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {}

  const Scalar& rational_part() const { return a_; }
  const Scalar& radical_part() const { return b_; }
  long radicand() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadraticScalar operator+(const QuadraticScalar& o) const { return {a_ + o.a_, b_ + o.b_, d_}; }
  QuadraticScalar operator-(const QuadraticScalar& o) const { return {a_ - o.a_, b_ - o.b_, d_}; }
  QuadraticScalar operator*(const QuadraticScalar& o) const {
    return {a_ * o.a_ + Scalar(d_) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d_};
  }
  QuadraticScalar inverse() const {
    const Scalar norm = a_ * a_ - Scalar(d_) * b_ * b_;  // nonzero for d non-square
    return {a_ / norm, -b_ / norm, d_};
  }
  QuadraticScalar operator/(const QuadraticScalar& o) const { return *this * o.inverse(); }

private:
  Scalar a_;
  Scalar b_;
  long d_ = 2;
};

/// Rank of rational + sqrt(d) * radical, computed by elimination in Q(sqrt d).
std::size_t quadratic_rank(const RationalMatrix& rational, const RationalMatrix& radical, long d);

}  // namespace cubisym
