#include "cubisym/properties.hpp"

#include <functional>
#include <random>

#include "cubisym/catalog.hpp"
#include "cubisym/classifier.hpp"
#include "cubisym/killing.hpp"
#include "cubisym/lie_algebra.hpp"

namespace cubisym {

namespace {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Mat3 matrix(int r) {
    Mat3 m;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = integer(-r, r);
    return m;
  }

  Mat3 invertible(int r) {
    for (;;) {
      Mat3 m = matrix(r);
      if (!m.determinant().is_zero()) return m;
    }
  }

  Vec3 vector(int r) {
    Vec3 v;
    for (std::size_t i = 0; i < 3; ++i) v[i] = integer(-r, r);
    return v;
  }

  /// Half catalog metrics (nontrivial algebras), half sparse random forms.
  CubicForm form() {
    if (integer(0, 1) == 0) {
      const auto& cat = catalog();
      const auto& e = cat[static_cast<std::size_t>(integer(0, static_cast<int>(cat.size()) - 1))];
      const auto branches = sign_branches(e);
      return e.form(branches[static_cast<std::size_t>(integer(0, static_cast<int>(branches.size()) - 1))]);
    }
    CubicForm g;
    for (Component c : kComponentOrder)
      if (integer(0, 9) < 4) g[c] = integer(-2, 2);
    return g;
  }

  /// A form in two of the three variables, moved to a random frame.
  CubicForm degenerate_form() {
    CubicForm g;
    for (Component c : {Component::A1, Component::C1, Component::B1, Component::A2})
      if (integer(0, 1)) g[c] = integer(-2, 2);
    return pullback(g, invertible(2));
  }

private:
  std::mt19937_64 rng_;
};

using Property = std::function<std::string(Sampler&)>;

PropertyResult run(const std::string& name, const Property& prop, Sampler& s, int instances) {
  PropertyResult r{name, instances, 0, ""};
  for (int i = 0; i < instances; ++i) {
    const std::string failure = prop(s);
    if (failure.empty()) continue;
    if (r.failures++ == 0) r.first_failure = failure;
  }
  return r;
}

std::vector<Mat3> conjugated(const std::vector<Mat3>& gens, const Mat3& t) {
  const Mat3 ti = t.inverse();
  std::vector<Mat3> out;
  for (const auto& a : gens) out.push_back(ti * a * t);
  return out;
}

}  // namespace

std::vector<PropertyResult> run_property_suites(std::uint64_t seed, int instances) {
  Sampler s(seed);
  std::vector<PropertyResult> out;

  out.push_back(run("affine covariance of kernel and class", [](Sampler& s) -> std::string {
    const CubicForm g = s.form();
    const Mat3 t = s.invertible(2);
    const CubicForm h = pullback(g, t);
    const SymmetryAlgebra ag = solve(g), ah = solve(h);
    const auto moved = conjugated(ag.generators, t);
    if (!same_span(to_vectors(moved), to_vectors(ah.generators), 9)) return "kernel span not covariant for T=" + to_string(t);
    if (classify(g).symmetry_class != classify(h).symmetry_class) return "class changed under T=" + to_string(t);
    return "";
  }, s, instances));

  out.push_back(run("Lie closure of the kernel", [](Sampler& s) -> std::string {
    const SymmetryAlgebra a = solve(s.form());
    try {
      const StructureConstants c = structure_constants(a.generators);
      if (!c.antisymmetric() || !c.satisfies_jacobi()) return "structure constants violate Lie axioms";
    } catch (const NotClosedError& e) {
      return e.what();
    }
    return "";
  }, s, instances));

  out.push_back(run("Cayley-Hamilton", [](Sampler& s) -> std::string {
    const Mat3 a = s.matrix(3);
    const InvariantSeries inv = invariants(a);
    const Mat3 a2 = a * a;
    const Mat3 r = a2 * a + inv.charpoly[1] * a2 + inv.charpoly[2] * a + inv.charpoly[3] * Mat3::identity();
    if (!r.is_zero()) return "p(A) != 0 for A=" + to_string(a);
    if (!inv.newton_consistent()) return "Newton identities fail for A=" + to_string(a);
    return "";
  }, s, instances));

  out.push_back(run("conjugation invariance of invariants", [](Sampler& s) -> std::string {
    const Mat3 a = s.matrix(3), t = s.invertible(2);
    if (invariants(t * a * t.inverse()) != invariants(a)) return "invariants changed for A=" + to_string(a);
    return "";
  }, s, instances));

  out.push_back(run("radical covariance", [](Sampler& s) -> std::string {
    const CubicForm g = s.integer(0, 1) ? s.degenerate_form() : s.form();
    const Mat3 t = s.invertible(2), ti = t.inverse();
    std::vector<Vec3> moved;
    for (const auto& v : radical(g)) moved.push_back(ti * v);
    if (!same_span(to_vectors(moved), to_vectors(radical(pullback(g, t))), 3)) return "radical not covariant";
    return "";
  }, s, instances));

  out.push_back(run("evaluate/pullback compatibility", [](Sampler& s) -> std::string {
    const CubicForm g = s.form();
    const Mat3 t = s.invertible(3);
    const Vec3 v = s.vector(4);
    if (evaluate(pullback(g, t), v) != evaluate(g, t * v)) return "G'(v) != G(Tv) for T=" + to_string(t);
    return "";
  }, s, instances));

  out.push_back(run("radical fields lie in the kernel", [](Sampler& s) -> std::string {
    const CubicForm g = s.degenerate_form();
    const SymmetryAlgebra a = solve(g);
    std::vector<Scalar> coords;
    for (const auto& v : a.radical_basis)
      for (std::size_t j = 0; j < 3; ++j) {
        const Mat3 field = Mat3::from_columns(j == 0 ? v : Vec3{}, j == 1 ? v : Vec3{}, j == 2 ? v : Vec3{});
        if (!verify_killing(g, field)) return "x^j v not Killing for v=" + to_string(v);
        if (!coordinates_in(to_vectors(a.generators), to_vector(field), coords)) return "x^j v outside kernel";
      }
    return "";
  }, s, instances));

  out.push_back(run("bracket bilinearity and Jacobi", [](Sampler& s) -> std::string {
    const Mat3 a = s.matrix(2), b = s.matrix(2), c = s.matrix(2);
    const Scalar k = s.integer(-3, 3);
    if (bracket(a, b) != Scalar(-1) * bracket(b, a)) return "bracket not antisymmetric";
    if (bracket(a + k * b, c) != bracket(a, c) + k * bracket(b, c)) return "bracket not bilinear";
    if (!(bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))).is_zero())
      return "Jacobi identity fails";
    return "";
  }, s, instances));

  return out;
}

}  // namespace cubisym
