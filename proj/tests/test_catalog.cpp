#include <doctest.h>

#include <fstream>
#include <set>

#include "cubisym/audit.hpp"
#include "cubisym/catalog.hpp"
#include "cubisym/form_io.hpp"

using namespace cubisym;

namespace {

const Check* find_check(const EntryReport& r, const std::string& kind) {
  for (const auto& c : r.checks)
    if (c.kind == kind) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("catalog shape") {
  const auto& cat = catalog();
  CHECK(cat.size() == 41);
  std::map<int, int> per_tau;
  std::set<std::string> ids;
  for (const auto& e : cat) {
    ++per_tau[e.tau];
    ids.insert(e.id);
    for (const auto& p : sign_branches(e)) CHECK(affine_type(e.form(p)) == e.tau);
  }
  CHECK(ids.size() == 41);
  CHECK(per_tau == std::map<int, int>{{1, 3}, {2, 9}, {3, 13}, {4, 10}, {5, 5}, {6, 1}});
  CHECK(projective_classes().size() == 14);
}

TEST_CASE("instantiate") {
  CubicForm bm;
  bm[Component::F] = 1;
  CHECK(instantiate(find_entry("1.1")) == bm);

  const CubicForm g = instantiate(find_entry("3.8"), {{"eps1", 1}, {"eps2", -1}});
  CHECK(g[Component::A1] == 1);
  CHECK(g[Component::B1] == 1);
  CHECK(g[Component::B2] == -1);
  CHECK(affine_type(g) == 3);

  for (const auto& p : projective_classes())
    if (p.id == "III") CHECK(p.form(Scalar(0)) == bm);

  CHECK_THROWS_AS(find_entry("9.9"), UnknownEntryError);
  CHECK_THROWS_AS(instantiate(find_entry("3.8"), {{"eps1", 2}}), ParameterError);
  CHECK_THROWS_AS(instantiate(find_entry("4.2"), {{"F", 0}}), ParameterError);
  CHECK_THROWS_AS(instantiate(find_entry("1.1"), {{"F", 1}}), ParameterError);
  CHECK(sign_branches(find_entry("4.1")).size() == 4);
  CHECK(sign_branches(find_entry("4.1"), {{"eps1", 1}}).size() == 2);
}

TEST_CASE("verify entry examples") {
  const EntryReport r21 = verify_entry(find_entry("2.1"), {});
  CHECK(r21.matches());
  CHECK(r21.classification.algebra.kernel_dim() == 1);
  CHECK(r21.classification.symmetry_class.label == ClassLabel::Five);
  REQUIRE(find_check(r21, "closed_form"));
  CHECK(find_check(r21, "closed_form")->status == CheckStatus::Match);

  const EntryReport r12 = verify_entry(find_entry("1.2"), {});
  CHECK(r12.matches());
  CHECK(r12.classification.algebra.radical_dim() == 1);
  CHECK(r12.classification.algebra.finite_nontrivial_dim == 1);
  CHECK(r12.classification.symmetry_class.label == ClassLabel::ThreeInfPlusOne);

  const EntryReport r26 = verify_entry(find_entry("2.6"), {});
  CHECK_FALSE(r26.matches());
  CHECK_FALSE(r26.has_unknown());
  const Check* dim = find_check(r26, "stated_dimension");
  REQUIRE(dim);
  CHECK(dim->status == CheckStatus::KnownDiscrepancy);
  CHECK(dim->computed == "2");
  CHECK(r26.classification.symmetry_class.label == ClassLabel::Two);
}

TEST_CASE("typo corrections come from the kernel") {
  const EntryReport r = verify_entry(find_entry("3.11"), {{"pm", -1}});
  const Check* g = find_check(r, "generator");
  REQUIRE(g);
  CHECK(g->status == CheckStatus::KnownDiscrepancy);
  REQUIRE(g->correction);
  CHECK(verify_killing(r.form, *g->correction));

  const Mat3 printed{{0, 0, 0}, {0, 0, 1}, {1, 2, 0}};
  const auto closest = closest_kernel_element(r.classification.algebra.generators, printed);
  REQUIRE(closest);
  CHECK(*closest == Mat3{{0, 0, 0}, {0, 0, 2}, {1, 2, 0}});
  CHECK_FALSE(closest_kernel_element({}, printed));
}

TEST_CASE("full audit has only ledgered discrepancies") {
  const AuditReport a = verify_all();
  CHECK(a.unknown_count() == 0);
  CHECK(a.known_count() > 0);
  for (const auto& e : a.entries)
    for (const auto& c : e.checks)
      if (c.kind == "generator" && c.status != CheckStatus::Match) CHECK(c.correction);
}

TEST_CASE("general projective class") {
  CHECK(general_subclass(Scalar(-1, 2)) == -1);
  CHECK(general_subclass(Scalar(-2)) == 0);
  CHECK(general_subclass(Scalar(-1)) == 2);
  CHECK(general_subclass(Scalar(0)) == 4);
  CHECK(general_subclass(Scalar(1)) == 8);
  CHECK(general_subclass(Scalar(2)) == 9);
  // (sqrt3 - 1)/2 ~ 0.366: 0.36 and 0.37 straddle it.
  CHECK(general_subclass(Scalar(36, 100)) == 5);
  CHECK(general_subclass(Scalar(37, 100)) == 7);
  // -(sqrt3 + 1)/2 ~ -1.366.
  CHECK(general_subclass(Scalar(-137, 100)) == 0);
  CHECK(general_subclass(Scalar(-136, 100)) == 2);

  std::set<int> covered;
  for (const auto& s : general_rational_samples()) {
    CHECK(general_subclass(s.f) == s.subclass);
    covered.insert(s.subclass);
  }
  CHECK(covered.size() == 8);
}

TEST_CASE("projective examples") {
  const auto rows = projective_rows();
  auto computed = [&](const std::string& id, const std::string& sample) {
    for (const auto& r : rows)
      if (r.id == id && r.sample.rfind(sample, 0) == 0) return r.computed;
    FAIL("missing row " << id << " " << sample);
    return ClassLabel::Seven;
  };
  CHECK(computed("V", "") == ClassLabel::Two);
  CHECK(computed("general", "F=-1/2") == ClassLabel::One);
  CHECK(computed("general", "F=1 ") == ClassLabel::Eight);
  CHECK(computed("general", "F=(-1+sqrt3)/2") == ClassLabel::Eight);
  CHECK(computed("general", "F=(-1-sqrt3)/2") == ClassLabel::Eight);
  // Both cubics y(3x^2 + 3z^2 -+ y^2) admit a rotation with I2 < 0.
  CHECK(computed("X", "") == ClassLabel::Six);
  CHECK(computed("XI", "") == ClassLabel::Six);
}

TEST_CASE("shipped catalog file matches the compiled catalog") {
  std::ifstream in(std::string(CUBISYM_DATA_DIR) + "/catalog.json");
  REQUIRE(in.good());
  const nlohmann::json shipped = nlohmann::json::parse(in);
  CHECK(shipped == catalog_to_json());
}
