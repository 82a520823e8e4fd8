#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubisym/cubic_form.hpp"
#include "cubisym/killing.hpp"
#include "cubisym/lie_algebra.hpp"

namespace cubisym {

/// The eight affine symmetry classes, with the three subclasses of the
/// infinite-dimensional class.
enum class ClassLabel { One, Two, ThreeInfSquared, ThreeInf, ThreeInfPlusOne, Four, Five, Six, Seven, Eight };

std::string to_string(ClassLabel label);
/// Inverse of to_string ("1", "2", "3(1)", "3(2)", "3(3)", "4" .. "8").
ClassLabel class_label_from_string(const std::string& text);

struct SymmetryClass {
  ClassLabel label = ClassLabel::Eight;
  /// Classes 5 and 6 coincide over the complex numbers.
  std::optional<ClassLabel> complex_equivalent_to;

  friend bool operator==(const SymmetryClass&, const SymmetryClass&) = default;
};

SymmetryClass make_class(ClassLabel label);

struct ClassificationReport {
  SymmetryClass symmetry_class;
  SymmetryAlgebra algebra;
  /// Present for one-dimensional algebras without radical.
  std::optional<InvariantSeries> invariant_series;
  /// Present for two-dimensional algebras without radical.
  std::optional<StructureConstants> structure;
  std::optional<int> derived_dim;
  std::vector<std::string> notes;
};

/// Decision tree:
///   radical != 0            -> 3(1) / 3(2) / 3(3) by (radical dim, finite dim)
///   dim 0                   -> 8
///   dim 1                   -> 4 if I1 != 0, else 5 / 6 by the sign of I2, else 7
///   dim 2                   -> 1 if abelian, else 2
///   dim >= 3                -> 7
ClassificationReport classify(const CubicForm& form);

enum class Equivalence { NotEquivalent, PossiblyEquivalent };

std::string to_string(Equivalence e);

struct ComparisonVerdict {
  Equivalence verdict = Equivalence::PossiblyEquivalent;
  std::string witness;
  std::vector<std::string> notes;
};

/// Necessary conditions for affine equivalence only; never asserts equivalence.
ComparisonVerdict compare(const CubicForm& form1, const CubicForm& form2);

}  // namespace cubisym
