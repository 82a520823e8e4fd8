// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any
// criterion fails.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>

#include "cubisym/audit.hpp"
#include "cubisym/catalog.hpp"
#include "cubisym/classifier.hpp"
#include "cubisym/cubic_form.hpp"
#include "cubisym/killing.hpp"
#include "cubisym/lie_algebra.hpp"
#include "cubisym/properties.hpp"

using namespace cubisym;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void fail(const std::string& why) {
    pass = false;
    details.push_back(why);
  }
  void note(const std::string& what) { details.push_back(what); }
};

int failures = 0;

void report(int n, const std::string& title, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << title << "\n";
  for (const auto& d : o.details) std::cout << "    " << d << "\n";
  if (!o.pass) ++failures;
}

std::string describe(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : ",") + k + "=" + v.to_string();
  return s.empty() ? "-" : s;
}

const Check* find_check(const EntryReport& r, const std::string& kind) {
  for (const auto& c : r.checks)
    if (c.kind == kind) return &c;
  return nullptr;
}

// Dimension mismatches the criterion allows, resolved by the solver.
const std::set<std::string> allowed_dimension_ledger = {"2.5", "2.6", "3.6", "4.8", "5.2"};

Outcome catalog_dimensions() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::set<std::string> ledgered;
  int branches = 0;
  for (const auto& e : catalog()) {
    for (const auto& p : sign_branches(e)) {
      ++branches;
      const EntryReport r = verify_entry(e, p);
      const Check* c = find_check(r, "stated_dimension");
      if (!c || c->status == CheckStatus::Match) continue;
      const std::string where = e.id + " [" + describe(p) + "] stated " + c->claimed + ", computed " + c->computed;
      if (c->status == CheckStatus::UnknownDiscrepancy) {
        o.fail("unresolved: " + where);
      } else if (!allowed_dimension_ledger.count(e.id)) {
        o.fail("ledgered outside the allowed list: " + where + " (" + c->resolution + ")");
      } else {
        ledgered.insert(e.id);
        o.note("ledgered: " + where);
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ledgered.size() > 5) o.fail("more than 5 ledgered entries");
  if (secs >= 5.0) o.fail("runtime " + std::to_string(secs) + " s");
  o.note(std::to_string(branches) + " sign branches in " + std::to_string(secs) + " s");
  return o;
}

Outcome generator_verification() {
  Outcome o;
  int total = 0, as_written = 0;
  for (const auto& e : catalog()) {
    for (const auto& r : verify_entry_samples(e)) {
      if (r.sample != "default") continue;
      for (const auto& c : r.checks) {
        if (c.kind != "generator") continue;
        ++total;
        if (c.status == CheckStatus::Match) {
          ++as_written;
          continue;
        }
        const std::string where = e.id + " [" + describe(r.params) + "] generator " + std::to_string(c.index);
        if (c.status != CheckStatus::KnownDiscrepancy || !c.correction || !verify_killing(r.form, *c.correction))
          o.fail("no verified correction: " + where);
        else
          o.note("corrected: " + where + " -> " + c.computed);
      }
    }
  }
  const bool ratio_ok = 10 * as_written >= 9 * total;
  if (!ratio_ok) o.fail("pass rate below 90%");
  o.note(std::to_string(as_written) + " / " + std::to_string(total) + " transcribed generators pass as written");
  return o;
}

// Rescales a complement of the derived line so that [X1, X2] = 3/2 X2.
std::optional<std::pair<Mat3, Mat3>> three_halves_basis(const std::vector<Mat3>& gens, const Mat3& y) {
  for (const auto& x : gens) {
    const Mat3 b = bracket(x, y);
    // b = lambda y for some lambda.
    std::optional<Scalar> lambda;
    bool proportional = true;
    for (std::size_t i = 0; i < 3 && proportional; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        if (y(i, j).is_zero()) {
          if (!b(i, j).is_zero()) proportional = false;
          continue;
        }
        const Scalar r = b(i, j) / y(i, j);
        if (lambda && *lambda != r) proportional = false;
        lambda = r;
      }
    if (!proportional || !lambda || lambda->is_zero()) continue;
    const Mat3 x1 = (Scalar(3, 2) / *lambda) * x;
    if (bracket(x1, y) == Scalar(3, 2) * y) return std::make_pair(x1, y);
  }
  return std::nullopt;
}

Outcome commutator_structure() {
  Outcome o;
  for (const std::string id : {"1.1", "2.2", "3.3", "3.5", "2.5"}) {
    const auto& e = find_entry(id);
    for (const auto& p : sign_branches(e)) {
      const auto a = solve(e.form(p));
      const std::string where = id + " [" + describe(p) + "]";
      if (a.radical_dim() > 0 || a.kernel_dim() != 2) {
        o.fail(where + ": kernel dim " + std::to_string(a.kernel_dim()) + ", radical dim " +
               std::to_string(a.radical_dim()) + ", expected a 2-dim abelian algebra");
        continue;
      }
      if (!is_abelian(a.generators)) o.fail(where + ": not abelian");
    }
  }
  for (const std::string id : {"3.9", "3.13", "4.9", "2.6"}) {
    const auto& e = find_entry(id);
    for (const auto& p : sign_branches(e)) {
      const auto a = solve(e.form(p));
      const std::string where = id + " [" + describe(p) + "]";
      if (a.radical_dim() > 0 || a.kernel_dim() != 2) {
        o.fail(where + ": kernel dim " + std::to_string(a.kernel_dim()) + ", expected 2 without radical");
        continue;
      }
      const auto d = derived_algebra(a.generators);
      if (d.size() != 1) {
        o.fail(where + ": derived algebra dim " + std::to_string(d.size()));
        continue;
      }
      if (!three_halves_basis(a.generators, d[0])) o.fail(where + ": no basis with [X1,X2] = 3/2 X2");
    }
  }
  // The basis printed for 3.9 realizes 3/2 directly.
  const Mat3 x1 = Mat3::diagonal(1, Scalar(-1, 2), -2);
  const Mat3 x2{{0, 0, 0}, {Scalar(-1, 2), 0, 0}, {0, 1, 0}};
  if (bracket(x1, x2) == Scalar(3, 2) * x2)
    o.note("3.9 printed basis: [X1,X2] = 3/2 X2");
  else
    o.note("3.9 printed basis: [X1,X2] = " + to_string(bracket(x1, x2)));
  return o;
}

Outcome invariant_tables() {
  Outcome o;
  int checked = 0;
  for (const auto& e : catalog()) {
    if (!e.invariant_table) continue;
    for (const auto& p : sign_branches(e)) {
      if (!e.invariant_table->applies(p)) continue;
      const EntryReport r = verify_entry(e, p);
      const Check* c = find_check(r, "closed_form");
      if (!c) continue;
      ++checked;
      if (c->status != CheckStatus::Match)
        o.fail(e.id + " [" + describe(p) + "]: claimed " + c->claimed + " computed " + c->computed);
    }
  }
  auto spot = [&](const std::string& id, const Params& p, auto&& pred, const std::string& what) {
    const auto& e = find_entry(id);
    const Params full = resolve_params(e, p);
    const Mat3 m = e.invariant_table->matrix(full);
    if (!verify_killing(e.form(full), m)) o.fail(id + ": table matrix is not Killing");
    if (!pred(invariants(m))) o.fail(id + ": " + what);
  };
  spot("2.4", {}, [](const InvariantSeries& s) {
    for (int n = 1; n <= 6; ++n) {
      Scalar pw(1);
      for (int k = 0; k < n; ++k) pw *= Scalar(-2);
      if (s.I(n) != Scalar(1) + pw) return false;
    }
    return true;
  }, "I_n != 1+(-2)^n");
  spot("2.1", {}, [](const InvariantSeries& s) {
    for (int n = 1; n <= 6; ++n)
      if (s.I(n) != Scalar(n % 2 ? 0 : 2)) return false;
    return true;
  }, "I_n != 1+(-1)^n");
  spot("3.8", {{"eps1", 1}, {"eps2", 1}}, [](const InvariantSeries& s) { return s.I(2) == Scalar(-2); }, "I_2 != -2");
  spot("3.8", {{"eps1", -1}, {"eps2", -1}}, [](const InvariantSeries& s) { return s.I(2) == Scalar(-2); },
       "I_2 != -2");
  o.note(std::to_string(checked) + " table branches checked");
  return o;
}

Outcome boundary_degenerations() {
  Outcome o;
  auto classify_at = [&](const std::string& id, const Params& p) {
    return classify(instantiate(find_entry(id), p));
  };
  for (const Params& p : {Params{{"eps1", 1}, {"eps2", 1}, {"F", 1}}, Params{{"eps1", 1}, {"eps2", 1}, {"F", -1}},
                          Params{{"eps1", -1}, {"eps2", -1}, {"F", 1}}}) {
    const auto r = classify_at("4.1", p);
    if (r.algebra.radical_dim() == 0 || !r.algebra.has_infinite_family)
      o.fail("4.1 [" + describe(p) + "]: no radical, class " + to_string(r.symmetry_class.label));
  }
  struct Point {
    std::string id;
    Params p;
  };
  const std::vector<Point> class_two = {
      // F^2 = pm has real points only on the + branch.
      {"4.3", {{"pm", 1}, {"F", 1}}},          {"4.3", {{"pm", 1}, {"F", -1}}},
      {"4.10", {{"B", 0}}},
      {"5.3", {{"C2", 1}, {"C3", 1}}},         {"5.3", {{"C2", 2}, {"C3", Scalar(1, 2)}}},
      {"5.3", {{"C2", -3}, {"C3", Scalar(-1, 3)}}}, {"5.4", {{"C2", 1}, {"C3", 1}}},
      {"5.4", {{"C2", 2}, {"C3", Scalar(1, 2)}}}, {"5.4", {{"C2", -3}, {"C3", Scalar(-1, 3)}}},
      {"6.1", {{"F", 2}, {"C2", 1}, {"C3", 4}}},  {"6.1", {{"F", 1}, {"C2", 2}, {"C3", Scalar(1, 2)}}},
      {"6.1", {{"F", -3}, {"C2", 3}, {"C3", 3}}},
  };
  for (const auto& pt : class_two) {
    const auto r = classify_at(pt.id, pt.p);
    const std::string where = pt.id + " [" + describe(pt.p) + "]";
    if (r.symmetry_class.label != ClassLabel::Two)
      o.fail(where + ": class " + to_string(r.symmetry_class.label) + " (kernel " +
             std::to_string(r.algebra.kernel_dim()) + ", radical " + std::to_string(r.algebra.radical_dim()) + ")");
  }
  return o;
}

// Looks for T with pullback(form, T) proportional to the Berwald-Moor form
// through the reduction form ~ x Q(y, z): the form splits into three real
// linear factors only when Q has a nonnegative discriminant.
Outcome bm_witness(const CubicForm& general_half) {
  Outcome o;
  const Mat3 m{{1, 1, 1}, {1, Scalar(-1, 2), Scalar(-1, 2)}, {0, Scalar(1, 2), Scalar(-1, 2)}};
  const CubicForm reduced = pullback(general_half, m.inverse());
  for (Component c : {Component::A1, Component::C1, Component::C2, Component::A2, Component::C3, Component::B3,
                      Component::A3})
    if (!reduced[c].is_zero()) {
      o.fail("reduction to x Q(y,z) failed");
      return o;
    }
  // x Q(y,z) with Q = 3 B1 y^2 + 6 F yz + 3 B2 z^2.
  const Scalar a = Scalar(3) * reduced[Component::B1], b = Scalar(6) * reduced[Component::F],
               c = Scalar(3) * reduced[Component::B2];
  const Scalar disc = b * b - Scalar(4) * a * c;
  o.note("reduced form x(" + a.to_string() + " y^2 + " + b.to_string() + " yz + " + c.to_string() +
         " z^2), discriminant " + disc.to_string());
  if (disc.sign() <= 0) {
    o.fail("F=-1/2: Q is definite, the form has one real linear factor; no real pullback to the BM form exists");
    const auto bound = tau0_upper_bound(general_half, 2);
    o.note("tau0 search up to radius 2 gives " + std::to_string(bound.bound) + " components (BM has 1)");
    return o;
  }
  o.note("discriminant positive; Q splits over the reals");
  return o;
}

Outcome projective_table_check() {
  Outcome o;
  const auto rows = projective_rows();
  bool saw_zero = false;
  for (const auto& r : rows) {
    if (r.sample.rfind("F=0 ", 0) == 0 || r.sample == "F=0") saw_zero = true;
    if (r.check.status != CheckStatus::Match)
      o.note(r.id + (r.sample.empty() ? "" : " " + r.sample) + ": published " + to_string(r.published) +
             ", computed " + to_string(r.computed));
  }
  if (!saw_zero) o.fail("F=0 sample missing");
  for (const auto& t : projective_table(rows)) {
    if (t.agrees()) continue;
    std::string pub, got;
    for (const auto& s : t.published) pub += s + " ";
    for (const auto& s : t.computed) got += s + " ";
    o.fail("class " + to_string(t.label) + " row: published {" + pub + "} computed {" + got + "}");
  }
  const CubicForm half = general_projective_form(Scalar(-1, 2));
  if (classify(half).symmetry_class.label != ClassLabel::One) o.fail("F=-1/2 is not class 1");
  const Outcome w = bm_witness(half);
  for (const auto& d : w.details) w.pass ? o.note(d) : o.fail(d);
  return o;
}

Outcome property_suites() {
  Outcome o;
  for (const auto& r : run_property_suites(20240611, 200)) {
    std::ostringstream os;
    os << r.name << ": " << r.instances << " instances, " << r.failures << " failures";
    if (r.instances < 200 || !r.passed())
      o.fail(os.str() + (r.first_failure.empty() ? "" : " (" + r.first_failure + ")"));
    else
      o.note(os.str());
  }
  return o;
}

Outcome colinearity_check() {
  Outcome o;
  std::vector<std::pair<std::string, InvariantSeries>> group;
  for (const auto& e : catalog()) {
    if (!e.invariant_table || e.invariant_table->divergence_free) continue;
    const Params p = resolve_params(e);
    const EntryReport r = verify_entry(e, p);
    const Check* c = find_check(r, "invariant_matrix");
    if (!c) continue;
    const Mat3 m = c->correction ? *c->correction : e.invariant_table->matrix(p);
    group.emplace_back(e.id, invariants(m));
  }
  for (std::size_t i = 0; i < group.size(); ++i)
    for (std::size_t j = i + 1; j < group.size(); ++j) {
      const auto v = colinearity(group[i].second, group[j].second);
      if (v.kind != Colinearity::Real)
        o.fail(group[i].first + " vs " + group[j].first + ": " + to_string(v.kind) + " (" + v.reason + ")");
    }
  std::string ids;
  for (const auto& g : group) ids += g.first + " ";
  o.note("div != 0 group: " + ids);

  const auto five = classify(instantiate(find_entry("2.1")));
  const auto six = classify(instantiate(find_entry("3.12")));
  if (five.symmetry_class.label != ClassLabel::Five || six.symmetry_class.label != ClassLabel::Six ||
      !five.invariant_series || !six.invariant_series) {
    o.fail("2.1 / 3.12 are not class 5 / 6 representatives");
    return o;
  }
  const auto v = colinearity(*five.invariant_series, *six.invariant_series);
  if (v.kind != Colinearity::ComplexOnly) o.fail("2.1 vs 3.12: " + to_string(v.kind));
  else o.note("2.1 vs 3.12: complex only, C^" + std::to_string(v.power) + " = " + v.c_power->to_string());
  return o;
}

}  // namespace

int main() {
  report(1, "catalog dimensions", catalog_dimensions());
  report(2, "generator verification", generator_verification());
  report(3, "commutator structure", commutator_structure());
  report(4, "invariant tables", invariant_tables());
  report(5, "boundary degenerations", boundary_degenerations());
  report(6, "projective table", projective_table_check());
  report(7, "property suites", property_suites());
  report(8, "colinearity", colinearity_check());
  return failures == 0 ? 0 : 1;
}
