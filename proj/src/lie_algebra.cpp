#include "cubisym/lie_algebra.hpp"

#include <numeric>

namespace cubisym {

Mat3 bracket(const Mat3& a, const Mat3& b) { return b * a - a * b; }

bool StructureConstants::all_zero() const {
  for (const auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

bool StructureConstants::antisymmetric() const {
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if ((*this)(k, i, j) != -(*this)(k, j, i)) return false;
  return true;
}

bool StructureConstants::satisfies_jacobi() const {
  // sum_m c^m_ij c^l_mk + c^m_jk c^l_mi + c^m_ki c^l_mj = 0
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t l = 0; l < dim_; ++l) {
          Scalar s;
          for (std::size_t m = 0; m < dim_; ++m) {
            s += (*this)(m, i, j) * (*this)(l, m, k);
            s += (*this)(m, j, k) * (*this)(l, m, i);
            s += (*this)(m, k, i) * (*this)(l, m, j);
          }
          if (!s.is_zero()) return false;
        }
  return true;
}

StructureConstants structure_constants(const std::vector<Mat3>& basis) {
  const auto vecs = to_vectors(basis);
  if (!vecs.empty() && rank(matrix_from_rows(vecs, 9)) != vecs.size())
    throw DependentBasisError("structure_constants: basis is linearly dependent");
  const std::size_t n = basis.size();
  StructureConstants sc(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto br = to_vector(bracket(basis[i], basis[j]));
      std::vector<Scalar> coords;
      if (!coordinates_in(vecs, br, coords))
        throw NotClosedError("bracket of generators " + std::to_string(i) + " and " + std::to_string(j) +
                             " leaves the span");
      for (std::size_t k = 0; k < n; ++k) {
        sc(k, i, j) = coords[k];
        sc(k, j, i) = -coords[k];
      }
    }
  }
  return sc;
}

bool is_abelian(const std::vector<Mat3>& basis) { return structure_constants(basis).all_zero(); }

std::vector<Mat3> derived_algebra(const std::vector<Mat3>& basis) {
  structure_constants(basis);  // closure check
  std::vector<std::vector<Scalar>> brackets;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) brackets.push_back(to_vector(bracket(basis[i], basis[j])));
  std::vector<Mat3> out;
  for (const auto& v : span_basis(brackets, 9)) out.push_back(Mat3::unflatten(v));
  return out;
}

bool InvariantSeries::all_zero() const {
  for (const auto& t : trace_powers)
    if (!t.is_zero()) return false;
  return delta.is_zero();
}

InvariantSeries series_from_traces(const std::array<Scalar, 6>& traces) {
  InvariantSeries s;
  s.trace_powers = traces;
  const Scalar& i1 = traces[0];
  const Scalar& i2 = traces[1];
  const Scalar& i3 = traces[2];
  s.delta = (i1 * i1 * i1 - Scalar(3) * i1 * i2 + Scalar(2) * i3) / Scalar(6);
  s.charpoly = {Scalar(1), -i1, (i1 * i1 - i2) / Scalar(2), -s.delta};
  return s;
}

bool InvariantSeries::newton_consistent() const {
  // Elementary symmetric functions of the eigenvalues.
  const Scalar e1 = trace_powers[0];
  const Scalar e2 = (e1 * e1 - trace_powers[1]) / Scalar(2);
  const Scalar e3 = (e1 * e1 * e1 - Scalar(3) * e1 * trace_powers[1] + Scalar(2) * trace_powers[2]) / Scalar(6);
  if (e3 != delta) return false;
  if (charpoly != std::array<Scalar, 4>{Scalar(1), -e1, e2, -e3}) return false;
  // p_n = e1 p_{n-1} - e2 p_{n-2} + e3 p_{n-3} for n >= 4.
  for (std::size_t n = 3; n < 6; ++n) {
    const Scalar expected = e1 * trace_powers[n - 1] - e2 * trace_powers[n - 2] + e3 * trace_powers[n - 3];
    if (expected != trace_powers[n]) return false;
  }
  return true;
}

InvariantSeries invariants(const Mat3& a) {
  InvariantSeries s;
  Mat3 power = a;
  for (std::size_t n = 0; n < 6; ++n) {
    s.trace_powers[n] = power.trace();
    power = power * a;
  }
  s.delta = a.determinant();
  const Scalar i1 = s.trace_powers[0];
  s.charpoly = {Scalar(1), -i1, (i1 * i1 - s.trace_powers[1]) / Scalar(2), -s.delta};
  return s;
}

std::string to_string(Colinearity c) {
  switch (c) {
    case Colinearity::Real: return "real";
    case Colinearity::ComplexOnly: return "complex-only";
    case Colinearity::None: return "none";
  }
  return "none";
}

ColinearityVerdict colinearity(const InvariantSeries& s1, const InvariantSeries& s2) {
  struct Ratio {
    int exponent;
    Scalar value;
  };
  std::vector<Ratio> ratios;
  auto take = [&](int exponent, const Scalar& a, const Scalar& b, const char* name) -> std::optional<std::string> {
    if (a.is_zero() != b.is_zero()) return std::string("zero pattern differs at ") + name;
    if (!a.is_zero()) ratios.push_back({exponent, a / b});
    return std::nullopt;
  };

  ColinearityVerdict v;
  const char* names[6] = {"I1", "I2", "I3", "I4", "I5", "I6"};
  for (int n = 1; n <= 6; ++n)
    if (auto why = take(n, s1.I(n), s2.I(n), names[n - 1])) {
      v.reason = *why;
      return v;
    }
  if (auto why = take(3, s1.delta, s2.delta, "Delta")) {
    v.reason = *why;
    return v;
  }

  if (ratios.empty()) {
    v.kind = Colinearity::Real;
    v.reason = "both series vanish";
    return v;
  }

  // Extended Euclid on exponents: combine C^e1 and C^e2 into C^gcd(e1, e2).
  int e = ratios[0].exponent;
  Scalar ce = ratios[0].value;
  for (std::size_t i = 1; i < ratios.size(); ++i) {
    int a = e, b = ratios[i].exponent;
    Scalar ca = ce, cb = ratios[i].value;
    while (b != 0) {
      const int q = a / b;
      const int r = a - q * b;
      const Scalar cr = ca / cb.pow(q);
      a = b;
      ca = cb;
      b = r;
      cb = cr;
    }
    e = a;
    ce = ca;
  }

  for (const auto& r : ratios) {
    if (ce.pow(r.exponent / e) != r.value) {
      v.reason = "ratios are not powers of a common constant";
      return v;
    }
  }

  v.power = e;
  v.c_power = ce;
  if (e % 2 == 0 && ce.sign() < 0) {
    v.kind = Colinearity::ComplexOnly;
    v.reason = "C^" + std::to_string(e) + " = " + ce.to_string() + " < 0";
    return v;
  }
  v.kind = Colinearity::Real;
  Scalar root;
  if (exact_root(ce, e, root)) v.c = root;
  v.reason = "C^" + std::to_string(e) + " = " + ce.to_string();
  return v;
}

}  // namespace cubisym
