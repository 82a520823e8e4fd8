#include "cubisym/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace cubisym {

Scalar::Scalar(std::int64_t num, std::int64_t den)
    : value_(mpz_class(std::to_string(num)), mpz_class(std::to_string(den))) {
  if (den == 0) throw std::domain_error("Scalar: zero denominator");
  value_.canonicalize();
}

Scalar::Scalar(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s));
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!is_integer_text(num_text))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  mpz_class num = to_mpz(num_text);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!is_integer_text(den_text) || den_text[0] == '-')
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    den = to_mpz(den_text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  return Scalar(mpq_class(1 / value_));
}

Scalar Scalar::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Scalar(mpq_class(num, den));
}

std::string Scalar::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  value_ += o.value_;
  return *this;
}
Scalar& Scalar::operator-=(const Scalar& o) {
  value_ -= o.value_;
  return *this;
}
Scalar& Scalar::operator*=(const Scalar& o) {
  value_ *= o.value_;
  return *this;
}
Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  value_ /= o.value_;
  return *this;
}

bool exact_root(const Scalar& s, int k, Scalar& root) {
  if (k < 1) return false;
  if (s.sign() < 0 && k % 2 == 0) return false;
  const mpz_class num = ::abs(s.numerator());
  const mpz_class den = s.denominator();
  mpz_class rn, rd;
  if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k)) == 0) return false;
  root = Scalar(mpq_class(s.sign() < 0 ? mpz_class(-rn) : rn, rd));
  return true;
}

bool exact_sqrt(const Scalar& s, Scalar& root) { return exact_root(s, 2, root); }

}  // namespace cubisym
