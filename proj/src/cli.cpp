#include "cubisym/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cubisym/audit.hpp"
#include "cubisym/catalog.hpp"
#include "cubisym/classifier.hpp"
#include "cubisym/form_io.hpp"
#include "cubisym/properties.hpp"

namespace cubisym::cli {

namespace {

using nlohmann::json;

struct FormSource {
  std::string form;
  std::string id;
  std::vector<std::string> params;
};

void add_form_options(CLI::App* sub, FormSource& src, const std::string& suffix = "") {
  sub->add_option("--form" + suffix, src.form, "form JSON file, or inline JSON");
  sub->add_option("--id" + suffix, src.id, "catalog id (e.g. 3.9) or projective class (e.g. III, general)");
  sub->add_option("--param" + suffix, src.params, "parameter assignment name=value, repeatable");
}

Params parse_params(const std::vector<std::string>& items) {
  Params p;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("parameter '" + item + "' is not name=value");
    p[item.substr(0, eq)] = Scalar::parse(item.substr(eq + 1));
  }
  return p;
}

CubicForm load_form(const FormSource& src) {
  if (!src.form.empty() && !src.id.empty()) throw std::invalid_argument("give either --form or --id, not both");
  if (!src.form.empty()) return form_from_json(load_json_argument(src.form));
  if (src.id.empty()) throw std::invalid_argument("a form is required (--form or --id)");
  const Params params = parse_params(src.params);
  for (const auto& p : projective_classes()) {
    if (p.id != src.id) continue;
    Scalar f;
    for (const auto& [name, value] : params) {
      if (name != "F" || p.id != "general") throw ParameterError("projective class " + p.id + " has no parameter '" + name + "'");
      f = value;
    }
    return p.form(f);
  }
  return instantiate(find_entry(src.id), params);
}

json series_json(const InvariantSeries& s) {
  json traces = json::array(), charpoly = json::array();
  for (const auto& t : s.trace_powers) traces.push_back(t.to_string());
  for (const auto& c : s.charpoly) charpoly.push_back(c.to_string());
  return {{"I", traces}, {"Delta", s.delta.to_string()}, {"charpoly", charpoly}};
}

std::string series_text(const InvariantSeries& s) {
  std::string out = "I = [";
  for (int n = 1; n <= 6; ++n) out += (n > 1 ? ", " : "") + s.I(n).to_string();
  out += "]\nDelta = " + s.delta.to_string() + "\ncharpoly = t^3";
  const char* terms[] = {"", " t^2", " t", ""};
  for (int k = 1; k < 4; ++k) {
    const Scalar& c = s.charpoly[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    out += (c.sign() < 0 ? " - " : " + ") + c.abs().to_string() + terms[k];
  }
  return out;
}

json algebra_json(const SymmetryAlgebra& a) {
  json gens = json::array(), rad = json::array();
  for (const auto& g : a.generators) gens.push_back(matrix_to_json(g));
  for (const auto& v : a.radical_basis) rad.push_back(vector_to_json(v));
  return {{"kernel_dim", a.kernel_dim()},
          {"radical_dim", a.radical_dim()},
          {"finite_nontrivial_dim", a.finite_nontrivial_dim},
          {"infinite", a.has_infinite_family},
          {"generators", gens},
          {"radical", rad}};
}

std::string algebra_text(const SymmetryAlgebra& a) {
  std::ostringstream os;
  os << "kernel dimension: " << a.kernel_dim() << "\n"
     << "radical dimension: " << a.radical_dim() << "\n"
     << "finite nontrivial dimension: " << a.finite_nontrivial_dim << (a.has_infinite_family ? " (plus infinite family)" : "")
     << "\n";
  for (std::size_t k = 0; k < a.generators.size(); ++k) os << "X" << k << " = " << to_string(a.generators[k]) << "\n";
  for (const auto& v : a.radical_basis) os << "radical vector " << to_string(v) << "\n";
  return os.str();
}

json classification_json(const ClassificationReport& r) {
  json j = {{"class", to_string(r.symmetry_class.label)},
            {"dimension", r.algebra.finite_nontrivial_dim},
            {"infinite", r.algebra.has_infinite_family},
            {"algebra", algebra_json(r.algebra)},
            {"notes", r.notes}};
  if (r.symmetry_class.complex_equivalent_to)
    j["complex_equivalent_to"] = to_string(*r.symmetry_class.complex_equivalent_to);
  if (r.structure) j["abelian"] = r.structure->all_zero();
  if (r.derived_dim) j["derived_dim"] = *r.derived_dim;
  if (r.invariant_series) j["invariants"] = series_json(*r.invariant_series);
  return j;
}

std::string classification_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "symmetry class: " << to_string(r.symmetry_class.label);
  if (r.symmetry_class.complex_equivalent_to)
    os << " (equivalent to " << to_string(*r.symmetry_class.complex_equivalent_to) << " over C)";
  os << "\n" << algebra_text(r.algebra);
  if (r.structure) os << (r.structure->all_zero() ? "abelian\n" : "nonabelian\n");
  if (r.derived_dim) os << "derived algebra dimension: " << *r.derived_dim << "\n";
  if (r.invariant_series) os << series_text(*r.invariant_series) << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

json entry_json(const CatalogEntry& e) {
  json params = json::array();
  for (const auto& p : e.params)
    params.push_back({{"name", p.name},
                      {"kind", p.kind == ParamSpec::Kind::Sign ? "sign" : "rational"},
                      {"default", p.default_value.to_string()}});
  return {{"id", e.id},
          {"tau", e.tau},
          {"params", params},
          {"stated_dimension", e.stated.to_string()},
          {"expected_class", to_string(e.expected_class(resolve_params(e)))},
          {"form", form_to_json(instantiate(e))}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetries of homogeneous cubic metrics in three dimensions", "cubisym"};
  app.require_subcommand(1, 1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  FormSource src, src2;
  int generator = -1;
  std::string matrix_arg;
  bool verify_all_flag = false;
  std::string verify_id;
  std::uint64_t seed = 20240611;
  int instances = 200;

  auto* solve_cmd = app.add_subcommand("solve", "linear Killing fields of a form");
  auto* classify_cmd = app.add_subcommand("classify", "symmetry class of a form");
  auto* invariants_cmd = app.add_subcommand("invariants", "trace invariants of a generator or matrix");
  auto* radical_cmd = app.add_subcommand("radical", "radical of a form");
  auto* transform_cmd = app.add_subcommand("transform", "pull a form back along a matrix");
  auto* compare_cmd = app.add_subcommand("compare", "necessary conditions for affine equivalence");
  auto* list_cmd = app.add_subcommand("catalog-list", "list canonical metrics");
  auto* verify_cmd = app.add_subcommand("catalog-verify", "audit catalog claims against the solver");
  auto* projective_cmd = app.add_subcommand("projective-table", "symmetry classes of the projective classes");
  auto* export_cmd = app.add_subcommand("catalog-export", "full catalog and projective classes as JSON");
  auto* selftest_cmd = app.add_subcommand("selftest", "property suites and full catalog audit");

  for (auto* sub : {solve_cmd, classify_cmd, invariants_cmd, radical_cmd, transform_cmd}) {
    add_form_options(sub, src);
    sub->add_flag("--json", as_json, "machine-readable output");
  }
  invariants_cmd->add_option("--generator", generator, "zero-based index into the canonical kernel basis");
  invariants_cmd->add_option("--matrix", matrix_arg, "3x3 matrix JSON (file or inline)");
  transform_cmd->add_option("--matrix", matrix_arg, "3x3 matrix JSON (file or inline)")->required();
  add_form_options(compare_cmd, src, "1");
  add_form_options(compare_cmd, src2, "2");
  verify_cmd->add_flag("--all", verify_all_flag, "every entry, sample and projective class");
  verify_cmd->add_option("--id", verify_id, "one catalog id");
  selftest_cmd->add_option("--seed", seed, "random seed");
  selftest_cmd->add_option("--instances", instances, "instances per property suite");
  for (auto* sub : {compare_cmd, list_cmd, verify_cmd, projective_cmd, selftest_cmd})
    sub->add_flag("--json", as_json, "machine-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (solve_cmd->parsed()) {
      const SymmetryAlgebra a = solve(load_form(src));
      out << (as_json ? algebra_json(a).dump(2) + "\n" : algebra_text(a));
    } else if (classify_cmd->parsed()) {
      const ClassificationReport r = classify(load_form(src));
      out << (as_json ? classification_json(r).dump(2) + "\n" : classification_text(r));
    } else if (invariants_cmd->parsed()) {
      Mat3 m;
      if (!matrix_arg.empty()) {
        if (generator >= 0) throw std::invalid_argument("give either --generator or --matrix, not both");
        m = matrix_from_json(load_json_argument(matrix_arg));
      } else {
        const SymmetryAlgebra a = solve(load_form(src));
        const int k = generator < 0 ? 0 : generator;
        if (k >= a.kernel_dim())
          throw std::invalid_argument("generator " + std::to_string(k) + " out of range; kernel dimension is " +
                                      std::to_string(a.kernel_dim()));
        m = a.generators[static_cast<std::size_t>(k)];
      }
      const InvariantSeries s = invariants(m);
      if (as_json) {
        json j = series_json(s);
        j["matrix"] = matrix_to_json(m);
        out << j.dump(2) << "\n";
      } else {
        out << "A = " << to_string(m) << "\n" << series_text(s) << "\n";
      }
    } else if (radical_cmd->parsed()) {
      const auto rad = radical(load_form(src));
      if (as_json) {
        json j = json::array();
        for (const auto& v : rad) j.push_back(vector_to_json(v));
        out << json{{"radical_dim", rad.size()}, {"radical", j}}.dump(2) << "\n";
      } else {
        out << "radical dimension: " << rad.size() << "\n";
        for (const auto& v : rad) out << to_string(v) << "\n";
      }
    } else if (transform_cmd->parsed()) {
      const Mat3 t = matrix_from_json(load_json_argument(matrix_arg));
      out << form_to_json(pullback(load_form(src), t)).dump(as_json ? 2 : -1) << "\n";
    } else if (compare_cmd->parsed()) {
      const ComparisonVerdict v = compare(load_form(src), load_form(src2));
      if (as_json) {
        out << json{{"verdict", to_string(v.verdict)}, {"witness", v.witness}, {"notes", v.notes}}.dump(2) << "\n";
      } else {
        out << to_string(v.verdict) << "\n" << v.witness << "\n";
        for (const auto& n : v.notes) out << "note: " << n << "\n";
      }
    } else if (list_cmd->parsed()) {
      if (as_json) {
        json j = json::array();
        for (const auto& e : catalog()) j.push_back(entry_json(e));
        out << j.dump(2) << "\n";
      } else {
        for (const auto& e : catalog()) {
          std::string params;
          for (const auto& p : e.params) params += (params.empty() ? "" : " ") + p.name;
          out << e.id << "\ttau=" << e.tau << "\tdim " << e.stated.to_string() << "\tclass "
              << to_string(e.expected_class(resolve_params(e))) << (params.empty() ? "" : "\tparams: " + params)
              << "\n";
        }
      }
    } else if (export_cmd->parsed()) {
      out << catalog_to_json().dump(2) << "\n";
    } else if (verify_cmd->parsed()) {
      AuditReport report;
      if (!verify_id.empty() && !verify_all_flag) {
        report.entries = verify_entry_samples(find_entry(verify_id));
      } else if (verify_all_flag && verify_id.empty()) {
        report = verify_all();
      } else {
        throw std::invalid_argument("catalog-verify needs exactly one of --all or --id");
      }
      out << (as_json ? to_json(report).dump(2) + "\n" : audit_text(report));
      return report.unknown_count() > 0 ? 2 : 0;
    } else if (projective_cmd->parsed()) {
      const auto rows = projective_rows();
      const auto table = projective_table(rows);
      if (as_json) {
        json j = json::array();
        for (const auto& r : rows)
          j.push_back({{"id", r.id}, {"sample", r.sample}, {"computed", to_string(r.computed)},
                       {"published", to_string(r.published)}, {"status", to_string(r.check.status)}});
        out << json{{"rows", j}, {"table", projective_table_json(table)}}.dump(2) << "\n";
      } else {
        out << projective_table_text(table);
      }
    } else if (selftest_cmd->parsed()) {
      if (instances < 1) throw std::invalid_argument("--instances must be positive");
      const auto props = run_property_suites(seed, instances);
      const AuditReport report = verify_all();
      const bool props_ok = std::all_of(props.begin(), props.end(), [](const PropertyResult& p) { return p.passed(); });
      if (as_json) {
        json j = json::array();
        for (const auto& p : props)
          j.push_back({{"name", p.name}, {"instances", p.instances}, {"failures", p.failures},
                       {"first_failure", p.first_failure}});
        out << json{{"properties", j},
                    {"audit", {{"match", report.match_count()}, {"known_discrepancy", report.known_count()},
                               {"unknown_discrepancy", report.unknown_count()}}}}
                   .dump(2)
            << "\n";
      } else {
        for (const auto& p : props)
          out << (p.passed() ? "PASS " : "FAIL ") << p.name << " (" << p.instances << " instances"
              << (p.passed() ? "" : ", " + std::to_string(p.failures) + " failures: " + p.first_failure) << ")\n";
        out << "catalog audit: N_match=" << report.match_count() << " N_known_discrepancy=" << report.known_count()
            << " N_unknown_discrepancy=" << report.unknown_count() << "\n";
      }
      return props_ok && report.unknown_count() == 0 ? 0 : 2;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace cubisym::cli
