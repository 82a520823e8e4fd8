#include "cubisym/classifier.hpp"

#include <array>
#include <stdexcept>

namespace cubisym {

namespace {

constexpr std::array<const char*, 10> kLabelNames = {"1", "2", "3(1)", "3(2)", "3(3)", "4", "5", "6", "7", "8"};

}  // namespace

std::string to_string(ClassLabel label) { return kLabelNames[static_cast<std::size_t>(label)]; }

ClassLabel class_label_from_string(const std::string& text) {
  for (std::size_t i = 0; i < kLabelNames.size(); ++i)
    if (text == kLabelNames[i]) return static_cast<ClassLabel>(i);
  throw std::invalid_argument("unknown symmetry class '" + text + "'");
}

SymmetryClass make_class(ClassLabel label) {
  SymmetryClass c{label, std::nullopt};
  if (label == ClassLabel::Five) c.complex_equivalent_to = ClassLabel::Six;
  if (label == ClassLabel::Six) c.complex_equivalent_to = ClassLabel::Five;
  return c;
}

ClassificationReport classify(const CubicForm& form) {
  ClassificationReport rep;
  rep.algebra = solve(form);
  const auto& alg = rep.algebra;

  if (alg.has_infinite_family) {
    const int r = alg.radical_dim();
    const int e = alg.finite_nontrivial_dim;
    if (r == 3) {
      rep.symmetry_class = make_class(ClassLabel::ThreeInfSquared);
      rep.notes.push_back("degenerate input: zero form, every linear field is a symmetry");
    } else if (r == 2) {
      rep.symmetry_class = make_class(ClassLabel::ThreeInfSquared);
    } else if (e >= 1) {
      rep.symmetry_class = make_class(ClassLabel::ThreeInfPlusOne);
    } else {
      rep.symmetry_class = make_class(ClassLabel::ThreeInf);
    }
    return rep;
  }

  switch (alg.kernel_dim()) {
    case 0:
      rep.symmetry_class = make_class(ClassLabel::Eight);
      return rep;
    case 1: {
      const InvariantSeries s = invariants(alg.generators.front());
      rep.invariant_series = s;
      if (!s.I(1).is_zero()) {
        rep.symmetry_class = make_class(ClassLabel::Four);
      } else if (s.I(2).sign() > 0) {
        rep.symmetry_class = make_class(ClassLabel::Five);
      } else if (s.I(2).sign() < 0) {
        rep.symmetry_class = make_class(ClassLabel::Six);
      } else {
        rep.symmetry_class = make_class(ClassLabel::Seven);
        rep.notes.push_back(s.all_zero() ? "unlisted nontrivial symmetries: nilpotent generator"
                                         : "unlisted nontrivial symmetries: I1 = I2 = 0");
      }
      return rep;
    }
    case 2: {
      rep.structure = structure_constants(alg.generators);
      rep.derived_dim = static_cast<int>(derived_algebra(alg.generators).size());
      rep.symmetry_class = make_class(rep.structure->all_zero() ? ClassLabel::One : ClassLabel::Two);
      return rep;
    }
    default:
      rep.symmetry_class = make_class(ClassLabel::Seven);
      rep.notes.push_back("unlisted nontrivial symmetries: " + std::to_string(alg.kernel_dim()) +
                          "-dimensional algebra without radical");
      return rep;
  }
}

std::string to_string(Equivalence e) {
  return e == Equivalence::NotEquivalent ? "NOT_EQUIVALENT" : "POSSIBLY_EQUIVALENT";
}

ComparisonVerdict compare(const CubicForm& form1, const CubicForm& form2) {
  const ClassificationReport r1 = classify(form1);
  const ClassificationReport r2 = classify(form2);
  ComparisonVerdict v;
  auto differ = [&](std::string witness) {
    v.verdict = Equivalence::NotEquivalent;
    v.witness = std::move(witness);
    return v;
  };

  if (r1.algebra.radical_dim() != r2.algebra.radical_dim())
    return differ("radical dimension " + std::to_string(r1.algebra.radical_dim()) + " vs " +
                  std::to_string(r2.algebra.radical_dim()));
  if (r1.algebra.kernel_dim() != r2.algebra.kernel_dim())
    return differ("symmetry algebra dimension " + std::to_string(r1.algebra.kernel_dim()) + " vs " +
                  std::to_string(r2.algebra.kernel_dim()));

  const ClassLabel l1 = r1.symmetry_class.label, l2 = r2.symmetry_class.label;
  if (l1 != l2) {
    if (r1.symmetry_class.complex_equivalent_to == l2)
      v.notes.push_back("classes " + to_string(l1) + " and " + to_string(l2) +
                        " are equivalent over the complex numbers (imaginary colinearity constant)");
    return differ("symmetry class " + to_string(l1) + " vs " + to_string(l2));
  }

  if (r1.derived_dim && r2.derived_dim && *r1.derived_dim != *r2.derived_dim)
    return differ("derived algebra dimension " + std::to_string(*r1.derived_dim) + " vs " +
                  std::to_string(*r2.derived_dim));

  if (r1.invariant_series && r2.invariant_series) {
    const ColinearityVerdict c = colinearity(*r1.invariant_series, *r2.invariant_series);
    if (c.kind != Colinearity::Real) {
      if (c.kind == Colinearity::ComplexOnly) v.notes.push_back("colinearity holds only with complex C: " + c.reason);
      return differ("colinearity fails: " + c.reason);
    }
    v.notes.push_back("colinearity: " + c.reason);
  }

  v.witness = "all necessary conditions agree (class " + to_string(l1) + ")";
  return v;
}

}  // namespace cubisym
