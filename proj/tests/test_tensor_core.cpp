#include <doctest.h>

#include <random>

#include "cubisym/cubic_form.hpp"
#include "cubisym/form_io.hpp"
#include "oracle.hpp"

using namespace cubisym;

namespace {

CubicForm bm() { return symmetrized_monomial(1, 2, 3); }

CubicForm general(const Scalar& f) {
  CubicForm g;
  g[Component::A1] = g[Component::A2] = g[Component::A3] = 1;
  g[Component::F] = f;
  return g;
}

}  // namespace

TEST_CASE("scalar normal form and errors") {
  CHECK(Scalar(6, -4).to_string() == "-3/2");
  CHECK(Scalar(0, 5) == Scalar(0));
  CHECK(Scalar(0, 5).denominator() == 1);
  CHECK(Scalar::parse("-10/4") == Scalar(-5, 2));
  CHECK(Scalar::parse("7") == Scalar(7));
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
  CHECK(Scalar(-2).pow(-3) == Scalar(-1, 8));
  Scalar r;
  CHECK(exact_sqrt(Scalar(9, 4), r));
  CHECK(r == Scalar(3, 2));
  CHECK_FALSE(exact_sqrt(Scalar(3), r));
  CHECK(exact_root(Scalar(-8, 27), 3, r));
  CHECK(r == Scalar(-2, 3));
}

TEST_CASE("component lookup is permutation invariant") {
  CHECK(bm().component({3, 2, 1}) == 1);
  CHECK(CubicForm{}.component({2, 3, 1}) == 0);
  CHECK(symmetrized_monomial(1, 2, 2).component({2, 1, 2}) == 1);
  CHECK_THROWS_AS(bm().component({0, 1, 2}), std::out_of_range);
  CHECK_THROWS_AS(bm().component({1, 2, 4}), std::out_of_range);

  const CubicForm g = general(Scalar(5, 3));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        CHECK(g.component({a, b, c}) == g.component({b, c, a}));
        CHECK(g.component({a, b, c}) == g.component({c, b, a}));
      }
}

TEST_CASE("component names follow the sorted index bijection") {
  CHECK(component_index(Component::B1).a == 1);
  CHECK(component_index(Component::B1).b == 2);
  CHECK(component_index(Component::B1).c == 2);
  CHECK(component_at({1, 1, 3}) == Component::C2);
  CHECK(component_at({3, 2, 2}) == Component::C3);
  CHECK(component_at({3, 3, 2}) == Component::B3);
  CHECK(component_from_name("F") == Component::F);
  CHECK(component_name(Component::A3) == "A3");
  CHECK_THROWS_AS(component_from_name("D1"), std::invalid_argument);
  CHECK(multiplicity(Component::A2) == 1);
  CHECK(multiplicity(Component::C1) == 3);
  CHECK(multiplicity(Component::F) == 6);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(bm(), Vec3{{1, 1, 1}}) == 6);
  CHECK(evaluate(general(0), Vec3{{1, 2, 3}}) == 36);
  CHECK(evaluate(symmetrized_monomial(1, 2, 2), Vec3{{1, 1, 1}}) == 3);

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int i = 0; i < 50; ++i) {
    CubicForm g;
    for (Component c : kComponentOrder) g[c] = d(rng);
    const Vec3 v{{d(rng), d(rng), d(rng)}};
    CHECK(evaluate(g, v).raw() == oracle::evaluate(g, {v[0].raw(), v[1].raw(), v[2].raw()}));
    const Scalar lambda(d(rng), 2);
    CHECK(evaluate(g, lambda * v) == lambda.pow(3) * evaluate(g, v));
  }
}

TEST_CASE("symmetrized monomial carries no factorial weight") {
  CHECK(symmetrized_monomial(1, 2, 3) == bm());
  CHECK(symmetrized_monomial(2, 2, 1)[Component::B1] == 1);
  CHECK(symmetrized_monomial(1, 1, 1)[Component::A1] == 1);
  CHECK(affine_type(symmetrized_monomial(3, 1, 2)) == 1);
}

TEST_CASE("pullback") {
  const Mat3 perm{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  CHECK(pullback(bm(), perm) == bm());
  CHECK(pullback(bm(), Mat3{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}) == bm());
  const CubicForm g = general(Scalar(2, 7));
  CHECK(pullback(g, Mat3::identity()) == g);
  CHECK_THROWS_AS(pullback(g, Mat3{{1, 2, 3}, {2, 4, 6}, {0, 0, 1}}), std::domain_error);

  const Mat3 t1{{1, 2, 0}, {0, 1, -1}, {3, 0, 1}}, t2{{2, 0, 1}, {1, 1, 0}, {0, -1, 1}};
  CHECK(pullback(pullback(g, t1), t2) == pullback(g, t1 * t2));

  // Scaling by s multiplies every component by s^3.
  CHECK(pullback(g, Mat3::diagonal(2, 2, 2)) == Scalar(8) * g);
}

TEST_CASE("F = -1/2 general form splits as a line times a semidefinite quadric") {
  // x^3+y^3+z^3-3xyz = u (p^2 + 3 q^2) with u = x+y+z, p = x-(y+z)/2, q = (y-z)/2.
  const Mat3 m{{1, 1, 1}, {1, Scalar(-1, 2), Scalar(-1, 2)}, {0, Scalar(1, 2), Scalar(-1, 2)}};
  const CubicForm h = pullback(general(Scalar(-1, 2)), m.inverse());
  CubicForm expected;
  expected[Component::B1] = Scalar(1, 3);
  expected[Component::B2] = 1;
  CHECK(h == expected);
  // The quadric factor is definite on the plane u = 0, so no real frame
  // splits the form into three linear factors: the small search stops at 2.
  CHECK(tau0_upper_bound(general(Scalar(-1, 2)), 2).bound == 2);
}

TEST_CASE("radical") {
  const auto r1 = radical(symmetrized_monomial(1, 2, 2));
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == Vec3{{0, 0, 1}});
  const auto r2 = radical(symmetrized_monomial(1, 1, 1));
  REQUIRE(r2.size() == 2);
  CHECK(r2[0] == Vec3{{0, 1, 0}});
  CHECK(r2[1] == Vec3{{0, 0, 1}});
  CHECK(radical(bm()).empty());
  CHECK(radical(CubicForm{}).size() == 3);
  CHECK(contraction_matrix(bm()).rows() == 6);
  CHECK(rank(contraction_matrix(bm())) == 3);
}

TEST_CASE("affine type and its upper bound") {
  CHECK(affine_type(bm()) == 1);
  CHECK(affine_type(CubicForm{}) == 0);
  CHECK(affine_type(general(1)) == 4);

  const Tau0Bound b = tau0_upper_bound(bm(), 1);
  CHECK(b.bound == 1);
  CHECK(b.witness == Mat3::identity());
  const Tau0Bound z = tau0_upper_bound(CubicForm{}, 1);
  CHECK(z.bound == 0);
  CHECK(z.witness == Mat3::identity());
  CHECK_THROWS_AS(tau0_upper_bound(bm(), 0), std::invalid_argument);

  // x^2 (x + 3y) is 27 X^2 Y under x = 3X, y = Y - X, which needs radius 3.
  CubicForm g;
  g[Component::A1] = 1;
  g[Component::C1] = 1;
  CHECK(tau0_upper_bound(g, 1).bound == 2);
  const Tau0Bound c = tau0_upper_bound(g, 3);
  CHECK(c.bound == 1);
  CHECK(affine_type(pullback(g, c.witness)) == 1);
}

TEST_CASE("JSON format") {
  const CubicForm g = general(Scalar(-1, 2));
  const auto j = form_to_json(g);
  CHECK(j.size() == 10);
  CHECK(j["F"] == "-1/2");
  CHECK(j["A1"] == 1);
  CHECK(form_from_json(j) == g);
  CHECK(form_from_json(nlohmann::json::parse(R"({"F": 1})")) == bm());
  CHECK(form_from_json(nlohmann::json::parse(R"({"C2": "6/4"})"))[Component::C2] == Scalar(3, 2));

  try {
    form_from_json(nlohmann::json::parse(R"({"F": 1, "Q7": 2})"));
    FAIL("unknown key accepted");
  } catch (const FormatError& e) {
    CHECK(std::string(e.what()).find("Q7") != std::string::npos);
  }
  CHECK_THROWS_AS(form_from_json(nlohmann::json::parse(R"({"F": 1.5})")), FormatError);
  CHECK_THROWS_AS(form_from_json(nlohmann::json::parse(R"({"F": "1/0"})")), FormatError);
  CHECK_THROWS_AS(form_from_json(nlohmann::json::parse("[1,2]")), FormatError);

  const Mat3 m{{1, Scalar(-1, 2), 0}, {0, 3, 0}, {Scalar(2, 3), 0, -1}};
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK(matrix_from_json(nlohmann::json::parse("[[1,0,0],[0,1,0],[0,0,\"-1/3\"]]")) ==
        Mat3::diagonal(1, 1, Scalar(-1, 3)));
  CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse("[[1,0],[0,1]]")), FormatError);
  CHECK(load_json_argument(R"({"F":2})")["F"] == 2);
  CHECK_THROWS_AS(load_json_argument("/nonexistent/form.json"), FormatError);
}
