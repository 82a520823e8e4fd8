#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cubisym {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Zero is 0/1.
class Scalar {
public:
  Scalar() = default;
  Scalar(int v) : value_(v) {}
  Scalar(long v) : value_(v) {}
  Scalar(long long v) : value_(mpz_class(std::to_string(v))) {}
  Scalar(std::int64_t num, std::int64_t den);
  explicit Scalar(mpq_class v);

  /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
  /// text or a zero denominator.
  static Scalar parse(std::string_view text);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Scalar abs() const { return Scalar(mpq_class(::abs(value_))); }
  Scalar inverse() const;
  Scalar pow(int exponent) const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(mpq_class(-value_)); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
  mpq_class value_{0};
};

/// Exact square root of a non-negative rational when it is a perfect square.
bool exact_sqrt(const Scalar& s, Scalar& root);

/// Exact k-th root (k >= 1) when it exists in the rationals; for odd k the
/// real root of a negative number is returned.
bool exact_root(const Scalar& s, int k, Scalar& root);

}  // namespace cubisym
