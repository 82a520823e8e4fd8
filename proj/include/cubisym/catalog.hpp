#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubisym/classifier.hpp"
#include "cubisym/cubic_form.hpp"
#include "cubisym/linalg.hpp"

namespace cubisym {

/// Named parameter values. Sign parameters ("pm", "eps1", "eps2") take +-1.
using Params = std::map<std::string, Scalar>;

class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class UnknownEntryError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct ParamSpec {
  enum class Kind { Sign, Rational };
  std::string name;
  Kind kind = Kind::Rational;
  Scalar default_value;
  bool nonzero = false;  // required nonzero (appears in a denominator)
};

/// Algebra dimension as stated for the canonical metric: finite nontrivial
/// part plus the radical dimension (0 = finite algebra, 1 = "oo", 2 = "oo^2").
struct StatedDimension {
  int finite = 0;
  int radical = 0;

  std::string to_string() const;
  friend bool operator==(const StatedDimension&, const StatedDimension&) = default;
};

/// Closed form for the trace-power series of a one-dimensional generator.
struct ClosedForm {
  enum class Kind {
    OnePlusPower,  // I_n = 1 + base^n
    EvenPower      // I_n = base^(n/2) (1 + (-1)^n)
  };
  Kind kind = Kind::OnePlusPower;
  std::string tag;
  std::function<Scalar(const Params&)> base;

  std::array<Scalar, 6> traces(const Params& p) const;
};

/// A generator matrix and closed-form invariants listed for one entry in the
/// invariant tables.
struct InvariantTable {
  std::function<Mat3(const Params&)> matrix;
  ClosedForm closed_form;
  /// Only sign branches for which the listed matrix was written.
  std::function<bool(const Params&)> applies = [](const Params&) { return true; };
  /// Label under which the table lists the matrix, when it differs from the id.
  std::string listed_as;
  bool divergence_free = true;
};

struct Sample {
  std::string label;
  Params overrides;  // sign parameters given here are not enumerated
  enum class Kind { Default, Boundary, Interval } kind = Kind::Default;
};

struct CatalogEntry {
  std::string id;
  int tau = 0;
  std::vector<ParamSpec> params;
  std::function<CubicForm(const Params&)> form;
  StatedDimension stated;
  std::function<std::vector<Mat3>(const Params&)> generators;
  std::optional<InvariantTable> invariant_table;
  std::function<ClassLabel(const Params&)> expected_class;
  std::vector<Sample> extra_samples;
  std::string note;
};

/// All 41 canonical metrics with nontrivial symmetries, ordered by id.
const std::vector<CatalogEntry>& catalog();

/// Throws UnknownEntryError.
const CatalogEntry& find_entry(const std::string& id);

/// Default values for every parameter, overridden by `given`. Throws
/// ParameterError for unknown names, signs other than +-1, or a zero value
/// where the entry divides by the parameter.
Params resolve_params(const CatalogEntry& entry, const Params& given = {});

CubicForm instantiate(const CatalogEntry& entry, const Params& given = {});

/// Every assignment of the sign parameters not fixed by `fixed`, merged with defaults.
std::vector<Params> sign_branches(const CatalogEntry& entry, const Params& fixed = {});

/// One canonical projective class of real cubic forms.
struct ProjectiveClassEntry {
  std::string id;          // "general", "I" .. "XIII"
  std::string components;  // e.g. "A1=A2=F=1"
  std::function<CubicForm(const Scalar& f)> form;  // f is only used by the general class
  ClassLabel expected_class = ClassLabel::Eight;
};

const std::vector<ProjectiveClassEntry>& projective_classes();

/// General class x^3 + y^3 + z^3 with G_123 = F.
CubicForm general_projective_form(const Scalar& f);

/// Index 0..9 of the subclass interval containing F, using exact sign tests
/// on 2F+1 against sqrt 3. F = -1/2 is not in any subclass and returns -1.
int general_subclass(const Scalar& f);

/// Rational sample points, one per subclass that contains rationals.
struct GeneralSample {
  int subclass;
  Scalar f;
};
std::vector<GeneralSample> general_rational_samples();

/// Expected table: symmetry class -> projective ids.
const std::map<ClassLabel, std::vector<std::string>>& published_projective_table();

nlohmann::json catalog_to_json();

}  // namespace cubisym
