#include "cubisym/catalog.hpp"

#include <algorithm>

#include "cubisym/form_io.hpp"

namespace cubisym {

namespace {

using C = Component;
using Rows = std::vector<Mat3>;

Scalar q(long n, long d = 1) { return Scalar(n, d); }

CubicForm make(std::initializer_list<std::pair<Component, Scalar>> parts) {
  CubicForm g;
  for (const auto& [c, v] : parts) g[c] = v;
  return g;
}

const Scalar& P(const Params& p, const char* name) { return p.at(name); }

ParamSpec sign(const char* name) { return {name, ParamSpec::Kind::Sign, Scalar(1), false}; }
ParamSpec rat(const char* name, Scalar def, bool nonzero = false) {
  return {name, ParamSpec::Kind::Rational, std::move(def), nonzero};
}

ClassLabel fixed(ClassLabel l) { return l; }

// Classes 5 / 6 / boundary split by the sign of a discriminant (I_2 / 2).
ClassLabel by_sign(const Scalar& disc, ClassLabel at_zero) {
  if (disc.sign() > 0) return ClassLabel::Five;
  if (disc.sign() < 0) return ClassLabel::Six;
  return at_zero;
}

ClosedForm one_plus(std::string tag, std::function<Scalar(const Params&)> base) {
  return {ClosedForm::Kind::OnePlusPower, std::move(tag), std::move(base)};
}

ClosedForm even(std::string tag, std::function<Scalar(const Params&)> base) {
  return {ClosedForm::Kind::EvenPower, std::move(tag), std::move(base)};
}

auto constant(Scalar s) {
  return [s](const Params&) { return s; };
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  auto add = [&](CatalogEntry e) { cat.push_back(std::move(e)); };
  const auto no_gens = [](const Params&) { return Rows{}; };

  // ---- one nonzero component ----
  add({"1.1", 1, {}, [](const Params&) { return make({{C::F, 1}}); }, {2, 0},
       [](const Params&) { return Rows{Mat3::diagonal(1, -1, 0), Mat3::diagonal(1, 0, -1)}; }, std::nullopt,
       [](const Params&) { return fixed(ClassLabel::One); }, {}, "Berwald-Moor metric"});

  add({"1.2", 1, {}, [](const Params&) { return make({{C::B1, 1}}); }, {1, 1},
       [](const Params&) { return Rows{Mat3::diagonal(-2, 1, 0)}; },
       InvariantTable{[](const Params&) { return Mat3::diagonal(-2, 1, 0); }, one_plus("1+(-2)^n", constant(-2)),
                      [](const Params&) { return true; }, "", false},
       [](const Params&) { return fixed(ClassLabel::ThreeInfPlusOne); }, {},
       "finite part only; the family f(x) d_3 comes from the radical"});

  add({"1.3", 1, {}, [](const Params&) { return make({{C::A1, 1}}); }, {0, 2}, no_gens, std::nullopt,
       [](const Params&) { return fixed(ClassLabel::ThreeInfSquared); }, {}, "family f2 d_2 + f3 d_3"});

  // ---- two nonzero components ----
  add({"2.1", 2, {}, [](const Params&) { return make({{C::A1, 1}, {C::F, 1}}); }, {1, 0},
       [](const Params&) { return Rows{Mat3::diagonal(0, 1, -1)}; },
       InvariantTable{[](const Params&) { return Mat3::diagonal(0, 1, -1); }, one_plus("1+(-1)^n", constant(-1))},
       [](const Params&) { return fixed(ClassLabel::Five); }, {}, ""});

  add({"2.2", 2, {}, [](const Params&) { return make({{C::F, 1}, {C::B1, 1}}); }, {2, 0},
       [](const Params&) {
         return Rows{Mat3{{1, 0, 0}, {0, 0, 0}, {0, q(-1, 2), -1}}, Mat3{{0, 0, 0}, {0, 1, 0}, {0, -1, -1}}};
       },
       std::nullopt, [](const Params&) { return fixed(ClassLabel::One); }, {}, ""});

  add({"2.3", 2, {}, [](const Params&) { return make({{C::A1, 1}, {C::B3, 1}}); }, {1, 0},
       [](const Params&) { return Rows{Mat3::diagonal(0, 1, q(-1, 2))}; },
       InvariantTable{[](const Params&) { return Mat3::diagonal(0, 1, q(-1, 2)); },
                      one_plus("(1+(-2)^n)/(-2)^n", constant(q(-1, 2))), [](const Params&) { return true; }, "",
                      false},
       [](const Params&) { return fixed(ClassLabel::Four); }, {}, ""});

  add({"2.4", 2, {}, [](const Params&) { return make({{C::A1, 1}, {C::C1, 1}}); }, {1, 0},
       [](const Params&) { return Rows{Mat3{{1, 0, 0}, {-1, -2, 0}, {0, 0, 0}}}; },
       InvariantTable{[](const Params&) { return Mat3{{1, 0, 0}, {-1, -2, 0}, {0, 0, 0}}; },
                      one_plus("1+(-2)^n", constant(-2)), [](const Params&) { return true; }, "", false},
       [](const Params&) { return fixed(ClassLabel::Four); }, {},
       "nonzero pair A1, C1 as in the heading and the field; the displayed tensor writes the 113 slot"});

  add({"2.5", 2, {sign("pm")}, [](const Params& p) { return make({{C::B1, 1}, {C::B2, P(p, "pm")}}); }, {1, 0},
       [](const Params&) { return Rows{Mat3::diagonal(1, q(-1, 2), q(-1, 2))}; }, std::nullopt,
       [](const Params&) { return fixed(ClassLabel::One); }, {}, ""});

  add({"2.6", 2, {}, [](const Params&) { return make({{C::B1, 1}, {C::B3, 1}}); }, {1, 0},
       [](const Params&) {
         return Rows{Mat3::diagonal(-2, 1, q(-1, 2)), Mat3{{0, 0, 1}, {0, 0, 0}, {0, q(-1, 2), 0}}};
       },
       std::nullopt, [](const Params&) { return fixed(ClassLabel::Two); }, {}, ""});

  add({"2.7", 2, {}, [](const Params&) { return make({{C::B1, 1}, {C::C3, 1}}); }, {1, 1},
       [](const Params&) { return Rows{Mat3{{0, 0, 0}, {0, 1, 0}, {-2, 0, -2}}}; }, std::nullopt,
       [](const Params&) { return fixed(ClassLabel::ThreeInfPlusOne); }, {}, "family f(x) (d_1 - d_3)"});

  add({"2.8", 2, {}, [](const Params&) { return make({{C::A1, 1}, {C::A2, 1}}); }, {0, 1}, no_gens, std::nullopt,
       [](const Params&) { return fixed(ClassLabel::ThreeInf); }, {}, "family f(x) d_3"});

  add({"2.9", 2, {sign("pm")}, [](const Params& p) { return make({{C::A1, 1}, {C::B1, P(p, "pm")}}); }, {0, 1},
       no_gens, std::nullopt, [](const Params&) { return fixed(ClassLabel::ThreeInf); }, {}, "family f(x) d_3"});

  // ---- three nonzero components ----
  add({"3.1", 3, {sign("pm")}, [](const Params& p) { return make({{C::A1, 1}, {C::B1, P(p, "pm")}, {C::F, 1}}); },
       {1, 0}, [](const Params& p) { return Rows{Mat3{{0, 0, 0}, {0, 1, 0}, {0, -P(p, "pm"), -1}}}; },
       InvariantTable{[](const Params&) { return Mat3{{0, 0, 0}, {0, 1, 0}, {0, -1, -1}}; },
                      one_plus("1+(-1)^n", constant(-1)), [](const Params& p) { return P(p, "pm") == 1; }},
       [](const Params&) { return fixed(ClassLabel::Five); }, {}, "the invariant table shows the + branch"});

  add({"3.2", 3, {}, [](const Params&) { return make({{C::A1, 1}, {C::C1, 1}, {C::F, 1}}); }, {1, 0},
       [](const Params&) { return Rows{Mat3{{0, 0, 0}, {0, 1, 0}, {q(-1, 2), 0, -1}}}; },
       InvariantTable{[](const Params&) { return Mat3{{0, 0, 0}, {0, 1, 0}, {q(-1, 2), 0, -1}}; },
                      one_plus("1+(-1)^n", constant(-1))},
       [](const Params&) { return fixed(ClassLabel::Five); }, {}, ""});

  add({"3.3", 3, {sign("pm")}, [](const Params& p) { return make({{C::F, 1}, {C::B1, 1}, {C::B2, P(p, "pm")}}); },
       {2, 0},
       [](const Params& p) {
         const Scalar& s = P(p, "pm");
         return Rows{Mat3{{1, 0, 0}, {0, 0, s / 2}, {0, q(-1, 2), -1}}, Mat3{{0, 0, 0}, {0, 1, s}, {0, -1, -1}}};
       },
       std::nullopt, [](const Params&) { return fixed(ClassLabel::One); }, {}, ""});

  add({"3.4", 3, {}, [](const Params&) { return make({{C::F, 1}, {C::B1, 1}, {C::B3, 1}}); }, {1, 0},
       [](const Params&) { return Rows{Mat3{{1, 0, 1}, {0, 0, 0}, {0, q(-1, 2), -1}}}; },
       InvariantTable{[](const Params&) { return Mat3{{1, 0, 1}, {0, 0, 0}, {0, q(-1, 2), -1}}; },
                      one_plus("1+(-1)^n", constant(-1))},
       [](const Params&) { return fixed(ClassLabel::Five); }, {}, ""});

  add({"3.5", 3, {}, [](const Params&) { return make({{C::F, 1}, {C::B1, 1}, {C::C1, 1}}); }, {2, 0},
       [](const Params&) {
         return Rows{Mat3{{0, 0, 0}, {0, 1, 0}, {0, -1, -1}}, Mat3{{1, 0, 0}, {0, 0, 0}, {-1, q(-1, 2), -1}}};
       },
       std::nullopt, [](const Params&) { return fixed(ClassLabel::One); }, {}, ""});

  add({"3.6", 3, {}, [](const Params&) { return make({{C::F, 1}, {C::B1, 1}, {C::C3, 1}}); }, {1, 0},
       [](const Params&) { return Rows{Mat3{{-1, q(-1, 2), 0}, {0, 0, 0}, {0, q(1, 2), 1}}}; },
       InvariantTable{[](const Params&) { return Mat3{{-1, q(-1, 2), 0}, {0, 0, 0}, {0, q(1, 2), 1}}; },
                      one_plus("1+(-1)^n", constant(-1))},
       [](const Params&) { return fixed(ClassLabel::Five); }, {}, ""});

  add({"3.7", 3, {}, [](const Params&) { return make({{C::A1, 1}, {C::A2, 1}, {C::C2, 1}}); }, {1, 0},
       [](const Params&) { return Rows{Mat3{{1, 0, 0}, {0, 0, 0}, {-1, 0, -2}}}; },
       InvariantTable{[](const Params&) { return Mat3{{1, 0, 0}, {0, 0, 0}, {-1, 0, -2}}; },
                      one_plus("1+(-2)^n", constant(-2)), [](const Params&) { return true; }, "", false},
       [](const Params&) { return fixed(ClassLabel::Four); }, {}, ""});

  add({"3.8", 3, {sign("eps1"), sign("eps2")},
       [](const Params& p) { return make({{C::A1, 1}, {C::B1, P(p, "eps1")}, {C::B2, P(p, "eps2")}}); }, {1, 0},
       [](const Params& p) { return Rows{Mat3{{0, 0, 0}, {0, 0, 1}, {0, -P(p, "eps1") * P(p, "eps2"), 0}}}; },
       InvariantTable{[](const Params& p) { return Mat3{{0, 0, 0}, {0, 0, 1}, {0, -P(p, "eps1") * P(p, "eps2"), 0}}; },
                      even("(-eps1*eps2)^(n/2)(1+(-1)^n)", [](const Params& p) { return -P(p, "eps1") * P(p, "eps2"); })},
       [](const Params& p) { return by_sign(-P(p, "eps1") * P(p, "eps2"), ClassLabel::Seven); }, {}, ""});

  add({"3.9", 3, {sign("pm")}, [](const Params& p) { return make({{C::A1, 1}, {C::B1, P(p, "pm")}, {C::C2, 1}}); },
       {2, 0},
       [](const Params& p) {
         return Rows{Mat3::diagonal(1, q(-1, 2), -2), Mat3{{0, 0, 0}, {-P(p, "pm") / 2, 0, 0}, {0, 1, 0}}};
       },
       std::nullopt, [](const Params&) { return fixed(ClassLabel::Two); }, {}, ""});

  add({"3.10", 3, {sign("pm")}, [](const Params& p) { return make({{C::A1, 1}, {C::B1, P(p, "pm")}, {C::C3, 1}}); },
       {1, 0}, [](const Params& p) { return Rows{Mat3{{0, 0, 0}, {0, 1, 0}, {Scalar(-2) * P(p, "pm"), 0, -2}}}; },
       InvariantTable{[](const Params& p) { return Mat3{{0, 0, 0}, {0, 1, 0}, {Scalar(-2) * P(p, "pm"), 0, -2}}; },
                      one_plus("1+(-2)^n", constant(-2)), [](const Params&) { return true; }, "", false},
       [](const Params&) { return fixed(ClassLabel::Four); }, {}, ""});

  add({"3.11", 3, {sign("pm")}, [](const Params& p) { return make({{C::B1, 1}, {C::B2, P(p, "pm")}, {C::C1, 1}}); },
       {1, 0},
       [](const Params& p) {
         const Scalar& s = P(p, "pm");
         return Rows{Mat3{{0, 0, 0}, {0, 0, 1}, {-s, Scalar(-2) * s, 0}}};
       },
       InvariantTable{[](const Params& p) {
                        const Scalar& s = P(p, "pm");
                        return Mat3{{0, 0, 0}, {0, 0, 1}, {-s / 2, -s, 0}};
                      },
                      even("(-+1)^(n/2)(1+(-1)^n)", [](const Params& p) { return -P(p, "pm"); })},
       [](const Params& p) { return by_sign(-P(p, "pm"), ClassLabel::Seven); }, {}, ""});

  add({"3.12", 3, {}, [](const Params&) { return make({{C::B1, 1}, {C::B3, 1}, {C::C1, 1}}); }, {1, 0},
       [](const Params&) { return Rows{Mat3{{0, 0, 1}, {0, 0, 0}, {-1, q(-1, 2), 0}}}; },
       InvariantTable{[](const Params&) { return Mat3{{0, 0, 1}, {0, 0, 0}, {-1, q(-1, 2), 0}}; },
                      even("(-1)^(n/2)(1+(-1)^n)", constant(-1))},
       [](const Params&) { return fixed(ClassLabel::Six); }, {}, ""});

  add({"3.13", 3, {sign("pm")}, [](const Params& p) { return make({{C::B1, 1}, {C::B3, P(p, "pm")}, {C::C3, 1}}); },
       {2, 0},
       [](const Params& p) {
         return Rows{Mat3{{-2, 0, q(-3, 2)}, {0, 1, 0}, {0, 0, q(-1, 2)}},
                     Mat3{{0, -1, Scalar(-2) * P(p, "pm")}, {0, 0, 0}, {0, 1, 0}}};
       },
       std::nullopt, [](const Params&) { return fixed(ClassLabel::Two); }, {}, ""});

  // ---- four nonzero components ----
  add({"4.1", 4, {sign("eps1"), sign("eps2"), rat("F", 2)},
       [](const Params& p) {
         return make({{C::F, P(p, "F")}, {C::B1, P(p, "eps1")}, {C::B2, P(p, "eps2")}, {C::A1, 1}});
       },
       {1, 0},
       [](const Params& p) {
         const Scalar &e1 = P(p, "eps1"), &e2 = P(p, "eps2"), &f = P(p, "F");
         return Rows{Mat3{{0, 0, 0}, {0, e2 * f, 1}, {0, -e2 * e1, -e2 * f}}};
       },
       InvariantTable{[](const Params& p) {
                        const Scalar &e1 = P(p, "eps1"), &e2 = P(p, "eps2"), &f = P(p, "F");
                        return Mat3{{0, 0, 0}, {0, e2 * f, 1}, {0, -e1 * e2, -e2 * f}};
                      },
                      even("(F^2-eps1*eps2)^(n/2)(1+(-1)^n)",
                           [](const Params& p) { return P(p, "F") * P(p, "F") - P(p, "eps1") * P(p, "eps2"); })},
       [](const Params& p) {
         return by_sign(P(p, "F") * P(p, "F") - P(p, "eps1") * P(p, "eps2"), ClassLabel::ThreeInf);
       },
       {{"F^2 < eps1*eps2", {{"eps1", 1}, {"eps2", 1}, {"F", q(1, 2)}}, Sample::Kind::Interval},
        {"F^2 = eps1*eps2 (F=1, ++)", {{"eps1", 1}, {"eps2", 1}, {"F", 1}}, Sample::Kind::Boundary},
        {"F^2 = eps1*eps2 (F=-1, --)", {{"eps1", -1}, {"eps2", -1}, {"F", -1}}, Sample::Kind::Boundary}},
       ""});

  add({"4.2", 4, {sign("pm"), rat("F", 2, true)},
       [](const Params& p) { return make({{C::F, P(p, "F")}, {C::B1, P(p, "pm")}, {C::C2, 1}, {C::A1, 1}}); },
       {1, 0},
       [](const Params& p) {
         const Scalar& f = P(p, "F");
         return Rows{Mat3{{0, 0, 0}, {Scalar(-1) / (Scalar(2) * f), -1, 0}, {0, P(p, "pm") / f, 1}}};
       },
       InvariantTable{[](const Params& p) {
                        const Scalar& f = P(p, "F");
                        return Mat3{{0, 0, 0}, {Scalar(-1) / (Scalar(2) * f), -1, 0}, {0, P(p, "pm") / f, 1}};
                      },
                      one_plus("1+(-1)^n", constant(-1))},
       [](const Params&) { return fixed(ClassLabel::Five); }, {}, ""});

  add({"4.3", 4, {sign("pm"), rat("F", 2)},
       [](const Params& p) { return make({{C::F, P(p, "F")}, {C::B1, P(p, "pm")}, {C::B2, 1}, {C::C2, 1}}); },
       {1, 0},
       [](const Params& p) {
         const Scalar &s = P(p, "pm"), &f = P(p, "F");
         return Rows{Mat3{{0, 0, 0}, {-s / 2, -s * f, -s}, {0, 1, s * f}}};
       },
       InvariantTable{[](const Params& p) {
                        const Scalar &s = P(p, "pm"), &f = P(p, "F");
                        return Mat3{{0, 0, 0}, {-s / 2, -s * f, -s}, {0, 1, s * f}};
                      },
                      even("(F^2-+1)^(n/2)(1+(-1)^n)", [](const Params& p) { return P(p, "F") * P(p, "F") - P(p, "pm"); })},
       [](const Params& p) { return by_sign(P(p, "F") * P(p, "F") - P(p, "pm"), ClassLabel::Two); },
       {{"F^2 < 1 (+)", {{"pm", 1}, {"F", q(1, 2)}}, Sample::Kind::Interval},
        {"F^2 = 1 (+, F=1)", {{"pm", 1}, {"F", 1}}, Sample::Kind::Boundary},
        {"F^2 = 1 (+, F=-1)", {{"pm", 1}, {"F", -1}}, Sample::Kind::Boundary}},
       ""});

  add({"4.4", 4, {rat("F", 2, true)},
       [](const Params& p) { return make({{C::F, P(p, "F")}, {C::B2, 1}, {C::B3, 1}, {C::C2, 1}}); }, {1, 0},
       [](const Params& p) {
         const Scalar& f = P(p, "F");
         const Scalar h = Scalar(1) / (Scalar(2) * f);
         return Rows{Mat3{{1, 0, h}, {Scalar(-1) / f, -1, -h}, {0, 0, 0}}};
       },
       InvariantTable{[](const Params& p) {
                        const Scalar& f = P(p, "F");
                        const Scalar h = Scalar(1) / (Scalar(2) * f);
                        return Mat3{{1, 0, h}, {Scalar(-1) / f, -1, -h}, {0, 0, 0}};
                      },
                      one_plus("1+(-1)^n", constant(-1))},
       [](const Params&) { return fixed(ClassLabel::Five); }, {}, ""});

  add({"4.5", 4, {rat("B", 3)},
       [](const Params& p) { return make({{C::A1, 1}, {C::A2, 1}, {C::B1, P(p, "B")}, {C::C2, 1}}); }, {1, 0},
       [](const Params& p) {
         const Scalar& b = P(p, "B");
         return Rows{Mat3{{1, 0, 0}, {-b, 0, 0}, {-1, Scalar(2) * b * b, -2}}};
       },
       InvariantTable{[](const Params& p) {
                        const Scalar& b = P(p, "B");
                        return Mat3{{1, 0, 0}, {-b, 0, 0}, {0, Scalar(2) * b * b, -2}};
                      },
                      one_plus("1+(-2)^n", constant(-2)), [](const Params&) { return true; }, "", false},
       [](const Params&) { return fixed(ClassLabel::Four); }, {}, ""});

  add({"4.6", 4, {rat("B", 3)},
       [](const Params& p) { return make({{C::A1, 1}, {C::A2, 1}, {C::B1, P(p, "B")}, {C::C3, 1}}); }, {1, 0},
       [](const Params& p) { return Rows{Mat3{{0, 0, 0}, {0, 1, 0}, {Scalar(-2) * P(p, "B"), -1, -2}}}; },
       InvariantTable{[](const Params& p) { return Mat3{{0, 0, 0}, {0, 1, 0}, {Scalar(2) * P(p, "B"), 1, -2}}; },
                      one_plus("1+(-2)^n", constant(-2)), [](const Params&) { return true; }, "", false},
       [](const Params&) { return fixed(ClassLabel::Four); }, {}, ""});

  add({"4.7", 4, {sign("eps1"), sign("eps2"), rat("C", 2)},
       [](const Params& p) {
         return make({{C::A1, 1}, {C::B1, P(p, "eps1")}, {C::B2, P(p, "eps2")}, {C::C1, P(p, "C")}});
       },
       {1, 0},
       [](const Params& p) {
         const Scalar &e1 = P(p, "eps1"), &e2 = P(p, "eps2"), &c = P(p, "C");
         return Rows{Mat3{{0, 0, 0}, {0, 0, 1}, {-e2 * c / 2, -e1 * e2, 0}}};
       },
       InvariantTable{[](const Params& p) {
                        const Scalar &e1 = P(p, "eps1"), &e2 = P(p, "eps2"), &c = P(p, "C");
                        return Mat3{{0, 0, 0}, {0, 0, 1}, {-e2 * c / 2, -e1 * e2, 0}};
                      },
                      even("(-eps1*eps2)^(n/2)(1+(-1)^n)", [](const Params& p) { return -P(p, "eps1") * P(p, "eps2"); })},
       [](const Params& p) { return by_sign(-P(p, "eps1") * P(p, "eps2"), ClassLabel::Seven); }, {},
       "C sits in the 112 slot as in the heading and the field; the displayed tensor writes 113"});

  add({"4.8", 4, {sign("pm"), rat("C", 2)},
       [](const Params& p) { return make({{C::A1, 1}, {C::B2, P(p, "pm")}, {C::B3, 1}, {C::C2, P(p, "C")}}); },
       {1, 0},
       [](const Params& p) {
         const Scalar &s = P(p, "pm"), &c = P(p, "C");
         return Rows{Mat3{{0, 0, -c}, {Scalar(2) * (c * c - s), -2, s * c}, {0, 0, 1}}};
       },
       InvariantTable{[](const Params& p) {
                        const Scalar &s = P(p, "pm"), &c = P(p, "C");
                        return Mat3{{0, 0, -c}, {Scalar(2) * (c * c - s), -2, s * c}, {0, 0, 1}};
                      },
                      one_plus("1+(-2)^n", constant(-2)), [](const Params&) { return true; }, "2.3", false},
       [](const Params&) { return fixed(ClassLabel::Four); }, {}, ""});

  add({"4.9", 4, {rat("B", 3)},
       [](const Params& p) { return make({{C::A1, 1}, {C::B1, P(p, "B")}, {C::C1, 1}, {C::C2, 1}}); }, {2, 0},
       [](const Params& p) {
         return Rows{Mat3{{1, 0, 0}, {0, q(-1, 2), 0}, {-1, q(-3, 2), -2}},
                     Mat3{{0, 0, 0}, {1, 0, 0}, {-1, Scalar(-2) * P(p, "B"), 0}}};
       },
       std::nullopt, [](const Params&) { return fixed(ClassLabel::Two); }, {}, ""});

  add({"4.10", 4, {rat("B", 3)},
       [](const Params& p) { return make({{C::B1, P(p, "B")}, {C::B2, 1}, {C::C1, 1}, {C::C2, 1}}); }, {1, 0},
       [](const Params& p) { return Rows{Mat3{{0, 0, 0}, {q(1, 2), 0, 1}, {q(-1, 2), -P(p, "B"), 0}}}; },
       InvariantTable{[](const Params& p) { return Mat3{{0, 0, 0}, {q(1, 2), 0, 1}, {q(-1, 2), -P(p, "B"), 0}}; },
                      even("(-B)^(n/2)(1+(-1)^n)", [](const Params& p) { return -P(p, "B"); })},
       [](const Params& p) { return by_sign(-P(p, "B"), ClassLabel::Two); },
       {{"B < 0", {{"B", -3}}, Sample::Kind::Interval}, {"B = 0", {{"B", 0}}, Sample::Kind::Boundary}},
       "both class lists print B<0; B>0 is read as the class-6 side"});

  // ---- five nonzero components ----
  add({"5.1", 5, {rat("C2", 1), rat("C3", 2)},
       [](const Params& p) {
         return make({{C::A3, 1}, {C::B2, 1}, {C::B3, 1}, {C::C2, P(p, "C2")}, {C::C3, P(p, "C3")}});
       },
       {1, 0},
       [](const Params& p) {
         return Rows{Mat3{{0, Scalar(2) * P(p, "C3"), 1}, {Scalar(-2) * P(p, "C2"), 0, -1}, {0, 0, 0}}};
       },
       InvariantTable{[](const Params& p) {
                        return Mat3{{0, Scalar(2) * P(p, "C3"), 1}, {Scalar(-2) * P(p, "C2"), 0, -1}, {0, 0, 0}};
                      },
                      even("(-4C2C3)^(n/2)(1+(-1)^n)",
                           [](const Params& p) { return Scalar(-4) * P(p, "C2") * P(p, "C3"); })},
       [](const Params& p) { return by_sign(-P(p, "C2") * P(p, "C3"), ClassLabel::Seven); },
       {{"C2*C3 < 0", {{"C3", -2}}, Sample::Kind::Interval}}, ""});

  add({"5.2", 5, {rat("B3", 3), rat("C3", 2)},
       [](const Params& p) {
         return make({{C::A2, 1}, {C::A3, 1}, {C::B2, 1}, {C::B3, P(p, "B3")}, {C::C3, P(p, "C3")}});
       },
       {1, 0},
       [](const Params& p) {
         const Scalar &b3 = P(p, "B3"), &c3 = P(p, "C3");
         return Rows{Mat3{{-2, Scalar(2) * (c3 * c3 - b3), b3 * c3 - 1}, {0, 0, -c3}, {0, 0, 1}}};
       },
       InvariantTable{[](const Params& p) {
                        const Scalar &b3 = P(p, "B3"), &c3 = P(p, "C3");
                        return Mat3{{-2, Scalar(2) * (c3 * c3 - b3), b3 * c3 - 1}, {0, 0, -c3}, {0, 0, 1}};
                      },
                      one_plus("1+(-2)^n", constant(-2)), [](const Params&) { return true; }, "", false},
       [](const Params&) { return fixed(ClassLabel::Four); }, {}, "coefficient token read as B3*C3 - 1"});

  add({"5.3", 5, {rat("C2", 1), rat("C3", 2)},
       [](const Params& p) {
         return make({{C::F, 1}, {C::C2, P(p, "C2")}, {C::C3, P(p, "C3")}, {C::B2, 1}, {C::B3, 1}});
       },
       {1, 0},
       [](const Params& p) {
         return Rows{Mat3{{2, Scalar(2) * P(p, "C3"), 1}, {Scalar(-2) * P(p, "C2"), -2, -1}, {0, 0, 0}}};
       },
       InvariantTable{[](const Params& p) {
                        return Mat3{{2, Scalar(2) * P(p, "C3"), 1}, {Scalar(-2) * P(p, "C2"), -2, -1}, {0, 0, 0}};
                      },
                      even("(4(1-C2C3))^(n/2)(1+(-1)^n)",
                           [](const Params& p) { return Scalar(4) * (Scalar(1) - P(p, "C2") * P(p, "C3")); })},
       [](const Params& p) { return by_sign(Scalar(1) - P(p, "C2") * P(p, "C3"), ClassLabel::Two); },
       {{"C2*C3 < 1", {{"C3", q(1, 2)}}, Sample::Kind::Interval},
        {"C2*C3 = 1", {{"C2", 1}, {"C3", 1}}, Sample::Kind::Boundary},
        {"C2*C3 = 1 (C2=2)", {{"C2", 2}, {"C3", q(1, 2)}}, Sample::Kind::Boundary}},
       ""});

  add({"5.4", 5, {rat("C2", 1, true), rat("C3", 2)},
       [](const Params& p) {
         return make({{C::F, 1}, {C::C2, P(p, "C2")}, {C::C3, P(p, "C3")}, {C::B3, 1}, {C::A3, 1}});
       },
       {1, 0},
       [](const Params& p) {
         const Scalar &c2 = P(p, "C2"), &c3 = P(p, "C3");
         return Rows{Mat3{{Scalar(-1) / c2, -c3 / c2, Scalar(-1) / (Scalar(2) * c2)}, {1, Scalar(1) / c2, 0}, {0, 0, 0}}};
       },
       InvariantTable{[](const Params& p) {
                        const Scalar &c2 = P(p, "C2"), &c3 = P(p, "C3");
                        return Mat3{{Scalar(-1) / c2, -c3 / c2, Scalar(-1) / (Scalar(2) * c2)},
                                    {1, Scalar(1) / c2, 0},
                                    {0, 0, 0}};
                      },
                      even("(1-C2C3)^(n/2)(1+(-1)^n)",
                           [](const Params& p) { return Scalar(1) - P(p, "C2") * P(p, "C3"); })},
       [](const Params& p) { return by_sign(Scalar(1) - P(p, "C2") * P(p, "C3"), ClassLabel::Two); },
       {{"C2*C3 < 1", {{"C3", q(1, 2)}}, Sample::Kind::Interval},
        {"C2*C3 = 1", {{"C2", 1}, {"C3", 1}}, Sample::Kind::Boundary}},
       "both class lists print C2C3<1; C2C3>1 is read as the class-6 side"});

  add({"5.5", 5, {rat("B3", 3), rat("C3", 2)},
       [](const Params& p) {
         return make({{C::F, 1}, {C::A3, 1}, {C::B2, 1}, {C::C3, P(p, "C3")}, {C::B3, P(p, "B3")}});
       },
       {1, 0},
       [](const Params& p) {
         return Rows{Mat3{{-2, Scalar(-2) * P(p, "C3"), -P(p, "B3")}, {0, 2, 1}, {0, 0, 0}}};
       },
       InvariantTable{[](const Params& p) {
                        return Mat3{{-2, Scalar(-2) * P(p, "C3"), -P(p, "B3")}, {0, 2, 1}, {0, 0, 0}};
                      },
                      even("4^(n/2)(1+(-1)^n)", constant(4))},
       [](const Params&) { return fixed(ClassLabel::Five); }, {}, ""});

  // ---- six nonzero components ----
  add({"6.1", 6, {rat("F", 2), rat("C2", 1), rat("C3", 2)},
       [](const Params& p) {
         return make({{C::F, P(p, "F")}, {C::B2, 1}, {C::B3, 1}, {C::A3, 1}, {C::C2, P(p, "C2")}, {C::C3, P(p, "C3")}});
       },
       {1, 0},
       [](const Params& p) {
         const Scalar &f = P(p, "F"), &c2 = P(p, "C2"), &c3 = P(p, "C3");
         return Rows{Mat3{{Scalar(2) * f, Scalar(2) * c3, 1}, {Scalar(-2) * c2, Scalar(-2) * f, -1}, {0, 0, 0}}};
       },
       InvariantTable{[](const Params& p) {
                        const Scalar &f = P(p, "F"), &c2 = P(p, "C2"), &c3 = P(p, "C3");
                        // The table writes -B3 in the (1,3) slot; B3 = 1 here.
                        return Mat3{{Scalar(2) * f, Scalar(2) * c3, -1}, {Scalar(-2) * c2, Scalar(-2) * f, -1}, {0, 0, 0}};
                      },
                      even("2^n(F^2-C2C3)^(n/2)(1+(-1)^n)", [](const Params& p) {
                        return Scalar(4) * (P(p, "F") * P(p, "F") - P(p, "C2") * P(p, "C3"));
                      })},
       [](const Params& p) { return by_sign(P(p, "F") * P(p, "F") - P(p, "C2") * P(p, "C3"), ClassLabel::Two); },
       {{"F^2 < C2*C3", {{"F", 1}}, Sample::Kind::Interval},
        {"F^2 = C2*C3", {{"F", 2}, {"C2", 1}, {"C3", 4}}, Sample::Kind::Boundary}},
       ""});

  return cat;
}

}  // namespace

std::string StatedDimension::to_string() const {
  if (radical == 0) return std::to_string(finite);
  std::string s = radical == 1 ? "oo" : "oo^" + std::to_string(radical);
  if (finite > 0) s += "+" + std::to_string(finite);
  return s;
}

std::array<Scalar, 6> ClosedForm::traces(const Params& p) const {
  const Scalar b = base(p);
  std::array<Scalar, 6> out;
  for (int n = 1; n <= 6; ++n) {
    if (kind == Kind::OnePlusPower)
      out[n - 1] = Scalar(1) + b.pow(n);
    else
      out[n - 1] = n % 2 == 0 ? Scalar(2) * b.pow(n / 2) : Scalar(0);
  }
  return out;
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

const CatalogEntry& find_entry(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw UnknownEntryError("unknown catalog id '" + id + "'");
}

Params resolve_params(const CatalogEntry& entry, const Params& given) {
  Params out;
  for (const auto& spec : entry.params) out[spec.name] = spec.default_value;
  for (const auto& [name, value] : given) {
    auto it = std::find_if(entry.params.begin(), entry.params.end(), [&](const ParamSpec& s) { return s.name == name; });
    if (it == entry.params.end()) throw ParameterError("entry " + entry.id + " has no parameter '" + name + "'");
    if (it->kind == ParamSpec::Kind::Sign && value != Scalar(1) && value != Scalar(-1))
      throw ParameterError("sign parameter '" + name + "' must be +1 or -1, got " + value.to_string());
    if (it->nonzero && value.is_zero()) throw ParameterError("parameter '" + name + "' must be nonzero");
    out[name] = value;
  }
  return out;
}

CubicForm instantiate(const CatalogEntry& entry, const Params& given) { return entry.form(resolve_params(entry, given)); }

std::vector<Params> sign_branches(const CatalogEntry& entry, const Params& fixed_values) {
  std::vector<Params> out{resolve_params(entry, fixed_values)};
  for (const auto& spec : entry.params) {
    if (spec.kind != ParamSpec::Kind::Sign || fixed_values.contains(spec.name)) continue;
    std::vector<Params> next;
    for (const auto& p : out)
      for (int s : {1, -1}) {
        Params branch = p;
        branch[spec.name] = s;
        next.push_back(std::move(branch));
      }
    out = std::move(next);
  }
  return out;
}

CubicForm general_projective_form(const Scalar& f) {
  return make({{C::A1, 1}, {C::A2, 1}, {C::A3, 1}, {C::F, f}});
}

int general_subclass(const Scalar& f) {
  // Thresholds: -(sqrt3+1)/2 and (sqrt3-1)/2 are the roots of (2F+1)^2 = 3.
  const Scalar s = Scalar(2) * f + Scalar(1);
  const int vs3 = (s * s <=> Scalar(3)) < 0 ? -1 : ((s * s == Scalar(3)) ? 0 : 1);  // |2F+1| vs sqrt 3
  if (s.sign() < 0 && vs3 > 0) return 0;
  if (s.sign() < 0 && vs3 == 0) return 1;
  if (s.sign() < 0) return 2;
  if (s.is_zero()) return -1;  // F = -1/2
  if (f.sign() < 0) return 3;
  if (f.is_zero()) return 4;
  if (vs3 < 0) return 5;
  if (vs3 == 0) return 6;
  if (f < Scalar(1)) return 7;
  if (f == Scalar(1)) return 8;
  return 9;
}

std::vector<GeneralSample> general_rational_samples() {
  return {{0, Scalar(-2)}, {2, Scalar(-1)}, {3, Scalar(-1, 4)}, {4, Scalar(0)},
          {5, Scalar(1, 4)}, {7, Scalar(1, 2)}, {8, Scalar(1)}, {9, Scalar(2)}};
}

const std::vector<ProjectiveClassEntry>& projective_classes() {
  static const std::vector<ProjectiveClassEntry> entries = [] {
    auto fixed_form = [](CubicForm g) { return [g](const Scalar&) { return g; }; };
    return std::vector<ProjectiveClassEntry>{
        {"general", "A1=A2=A3=1, F", general_projective_form, ClassLabel::Eight},
        {"I", "A1=A2=F=1", fixed_form(make({{C::A1, 1}, {C::A2, 1}, {C::F, 1}})), ClassLabel::Eight},
        {"II", "A1=F=1", fixed_form(make({{C::A1, 1}, {C::F, 1}})), ClassLabel::Five},
        {"III", "F=1", fixed_form(make({{C::F, 1}})), ClassLabel::One},
        {"IV", "A1=C3=1", fixed_form(make({{C::A1, 1}, {C::C3, 1}})), ClassLabel::Four},
        {"V", "C1=C3=1", fixed_form(make({{C::C1, 1}, {C::C3, 1}})), ClassLabel::Two},
        {"VI", "A1=A2=1", fixed_form(make({{C::A1, 1}, {C::A2, 1}})), ClassLabel::ThreeInf},
        {"VII", "C1=1", fixed_form(make({{C::C1, 1}})), ClassLabel::ThreeInfPlusOne},
        {"VIII", "A1=1", fixed_form(make({{C::A1, 1}})), ClassLabel::ThreeInfSquared},
        {"IX", "A3=C1=B3=1", fixed_form(make({{C::A3, 1}, {C::C1, 1}, {C::B3, 1}})), ClassLabel::Eight},
        {"X", "-A2=C1=B3=1", fixed_form(make({{C::A2, -1}, {C::C1, 1}, {C::B3, 1}})), ClassLabel::Five},
        {"XI", "A2=C1=B3=1", fixed_form(make({{C::A2, 1}, {C::C1, 1}, {C::B3, 1}})), ClassLabel::Five},
        {"XII", "C1=B3=1", fixed_form(make({{C::C1, 1}, {C::B3, 1}})), ClassLabel::One},
        {"XIII", "-A2=C1=1", fixed_form(make({{C::A2, -1}, {C::C1, 1}})), ClassLabel::ThreeInf},
    };
  }();
  return entries;
}

const std::map<ClassLabel, std::vector<std::string>>& published_projective_table() {
  static const std::map<ClassLabel, std::vector<std::string>> table = {
      {ClassLabel::One, {"III", "XII"}},
      {ClassLabel::Two, {"V"}},
      {ClassLabel::ThreeInfSquared, {"VIII"}},
      {ClassLabel::ThreeInf, {"VI", "XIII"}},
      {ClassLabel::ThreeInfPlusOne, {"VII"}},
      {ClassLabel::Four, {"IV"}},
      {ClassLabel::Five, {"II", "X", "XI"}},
      {ClassLabel::Six, {}},
      {ClassLabel::Seven, {}},
      {ClassLabel::Eight, {"general", "I", "IX"}},
  };
  return table;
}

nlohmann::json catalog_to_json() {
  using nlohmann::json;
  json entries = json::array();
  for (const auto& e : catalog()) {
    json params = json::array();
    for (const auto& s : e.params)
      params.push_back({{"name", s.name},
                        {"kind", s.kind == ParamSpec::Kind::Sign ? "sign" : "rational"},
                        {"default", scalar_to_json(s.default_value)},
                        {"nonzero", s.nonzero}});
    json branches = json::array();
    for (const auto& p : sign_branches(e)) {
      json signs = json::object();
      for (const auto& s : e.params)
        if (s.kind == ParamSpec::Kind::Sign) signs[s.name] = scalar_to_json(p.at(s.name));
      json gens = json::array();
      for (const auto& g : e.generators(p)) gens.push_back(matrix_to_json(g));
      json b = {{"signs", signs},
                {"form", form_to_json(e.form(p))},
                {"generators", gens},
                {"expected_class", to_string(e.expected_class(p))}};
      if (e.invariant_table && e.invariant_table->applies(p)) {
        b["invariant_matrix"] = matrix_to_json(e.invariant_table->matrix(p));
        json traces = json::array();
        for (const auto& t : e.invariant_table->closed_form.traces(p)) traces.push_back(t.to_string());
        b["closed_form_traces"] = traces;
      }
      branches.push_back(b);
    }
    json j = {{"id", e.id},
              {"tau", e.tau},
              {"params", params},
              {"stated_dimension", e.stated.to_string()},
              {"branches", branches}};
    if (e.invariant_table) {
      j["closed_form"] = e.invariant_table->closed_form.tag;
      j["divergence_free"] = e.invariant_table->divergence_free;
      if (!e.invariant_table->listed_as.empty()) j["listed_as"] = e.invariant_table->listed_as;
    }
    if (!e.note.empty()) j["note"] = e.note;
    entries.push_back(j);
  }
  json projective = json::array();
  for (const auto& p : projective_classes())
    projective.push_back({{"id", p.id}, {"components", p.components}, {"expected_class", to_string(p.expected_class)}});
  return {{"affine", entries}, {"projective", projective}};
}

}  // namespace cubisym
