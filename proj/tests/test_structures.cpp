#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "lietensor/error.hpp"
#include "lietensor/structures.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace lietensor;

namespace {

const std::vector<std::string> kAB = {"a", "b"};

ScalarExpr P(const std::string& text) { return parse_scalar(text, kAB); }

ConstraintSet frozen(std::initializer_list<const char*> polys) {
  std::vector<ScalarExpr> xs;
  for (const char* p : polys) xs.push_back(P(p));
  return canonicalize(xs);
}

std::vector<std::string> texts(const ConstraintSet& cs) {
  std::vector<std::string> out;
  for (const auto& p : cs.polys) out.push_back(p.str());
  return out;
}

struct Pipeline {
  LieAlgebra L;
  MetricTensor g = MetricTensor::identity(4);
  Endomorphism q = circulant_shift(4);
  Endomorphism p = q.power(2);
  Connection conn;
  Curvature04 R;
  RicciScalar rs;
  FTheta ft;

  explicit Pipeline(LieAlgebra algebra)
      : L(std::move(algebra)),
        conn(levi_civita(L, g)),
        R(curvature(L, g, conn)),
        rs(ricci_and_scalar(R, g)),
        ft(f_and_theta(conn, p, g)) {}
};

// Nonzero F(i,j,k) and θ, frozen from an independent sympy derivation.
const std::map<std::array<int, 3>, std::string> kF45 = {
    {{1, 1, 2}, "1"},  {{1, 2, 1}, "1"},    {{1, 3, 4}, "-1"}, {{1, 4, 3}, "-1"}, {{2, 2, 2}, "2*a"},
    {{2, 4, 4}, "-2*a"}, {{3, 1, 4}, "-b"}, {{3, 2, 3}, "b"},  {{3, 3, 2}, "b"},  {{3, 4, 1}, "-b"},
};
const std::map<std::array<int, 3>, std::string> kF46 = {
    {{1, 1, 2}, "a"},  {{1, 2, 1}, "a"},  {{1, 3, 4}, "-a"}, {{1, 4, 3}, "-a"}, {{2, 2, 2}, "2*b"},
    {{2, 4, 4}, "-2*b"}, {{3, 1, 4}, "-b"}, {{3, 2, 3}, "b"}, {{3, 3, 2}, "b"},  {{3, 4, 1}, "-b"},
    {{4, 1, 2}, "-1"}, {{4, 2, 1}, "-1"}, {{4, 3, 4}, "1"},  {{4, 4, 3}, "1"},
};

void check_f(const Tensor03& F, const std::map<std::array<int, 3>, std::string>& golden) {
  F.f.for_each_index([&](const auto& idx) {
    const auto it = golden.find(idx);
    CHECK(F.f.at(idx) == (it == golden.end() ? ScalarExpr(0) : P(it->second)));
  });
}

bool satisfied(const ConstraintSet& cs, const ParameterAssignment& at) { return evaluate(cs, at).satisfied; }

}  // namespace

TEST_CASE("circulant shift") {
  const Endomorphism q = circulant_shift(4);
  CHECK(q.apply(basis_vector(4, 1)) == basis_vector(4, 4));
  for (int j = 2; j <= 4; ++j) CHECK(q.apply(basis_vector(4, j)) == basis_vector(4, j - 1));
  CHECK(q.power(4) == Endomorphism::identity(4));
  CHECK_FALSE(q.power(2) == Endomorphism::identity(4));
  CHECK(q.power(2).compose(q.power(2)) == Endomorphism::identity(4));

  const Endomorphism swap = circulant_shift(2);
  CHECK(swap.apply(basis_vector(2, 1)) == basis_vector(2, 2));
  CHECK(swap.power(2) == Endomorphism::identity(2));
  CHECK_THROWS_AS(circulant_shift(1), DimensionError);
}

TEST_CASE("structure report for the circulant shift and the identity metric") {
  const StructureReport r = check_q_structure(circulant_shift(4), MetricTensor::identity(4));
  CHECK(r.q4_identity);
  CHECK(r.q2_not_pm_identity);
  CHECK(r.isometry);
  CHECK(r.p2_identity);
  CHECK(r.p_not_pm_identity);
  CHECK(r.trace_p.is_zero());
  CHECK(r.all_pass());
  CHECK(r.p == circulant_shift(4).power(2));
}

TEST_CASE("structure report failures") {
  const StructureReport id = check_q_structure(Endomorphism::identity(4), MetricTensor::identity(4));
  CHECK(id.q4_identity);
  CHECK_FALSE(id.q2_not_pm_identity);
  CHECK_FALSE(id.all_pass());
  CHECK(id.trace_p == ScalarExpr(4));

  Matrix m = identity_matrix(4);
  m(2, 2) = 2;
  const StructureReport stretched = check_q_structure(circulant_shift(4), MetricTensor::from_matrix(m));
  CHECK(stretched.q4_identity);
  CHECK_FALSE(stretched.isometry);
  CHECK_FALSE(stretched.all_pass());

  const StructureReport swap = check_q_structure(circulant_shift(2), MetricTensor::identity(2));
  CHECK_FALSE(swap.q2_not_pm_identity);
}

TEST_CASE("F and Lee form: g4,5") {
  const Pipeline s(builtin_family(Family::G4_5));
  check_f(s.ft.f, kF45);
  CHECK(s.ft.theta.theta(1).is_zero());
  CHECK(s.ft.theta.theta(2) == P("2*a + b + 1"));
  CHECK(s.ft.theta.theta(3).is_zero());
  CHECK(s.ft.theta.theta(4).is_zero());
}

TEST_CASE("F and Lee form: g4,6 carries the e4 components") {
  const Pipeline s(builtin_family(Family::G4_6));
  check_f(s.ft.f, kF46);
  CHECK(s.ft.theta.theta(1).is_zero());
  CHECK(s.ft.theta.theta(2) == P("a + 3*b"));
  CHECK(s.ft.theta.theta(3) == ScalarExpr(1));
  CHECK(s.ft.theta.theta(4).is_zero());
}

TEST_CASE("f_and_theta requires P squared to be the identity") {
  const Pipeline s(builtin_family(Family::G4_5));
  CHECK_THROWS_AS(f_and_theta(s.conn, circulant_shift(4), s.g), Error);
}

TEST_CASE("F has the symmetries forced by P") {
  for (Family f : {Family::G4_5, Family::G4_6}) {
    const Pipeline s(builtin_family(f));
    CHECK(fprop_residuals(s.ft.f, s.p).empty());
  }
  Tensor03 bad{ExprArray<3>(4)};
  bad.f(1, 1, 2) = 1;
  CHECK_FALSE(fprop_residuals(bad, circulant_shift(4).power(2)).empty());
}

TEST_CASE("class constraints: frozen sets") {
  const Pipeline g45(builtin_family(Family::G4_5));
  CHECK(w0_constraints(g45.ft.f) == frozen({"1", "a", "b"}));
  CHECK(texts(w1_constraints(g45.ft.f, g45.ft.theta, g45.g, g45.p)) ==
        std::vector<std::string>{"2*a - 3*b + 1", "2*a - b - 1", "2*a + b - 3"});

  const Pipeline g46(builtin_family(Family::G4_6));
  CHECK(w0_constraints(g46.ft.f) == frozen({"1", "a", "b"}));
  // The e4 components make the constant 1 part of the W1 system, so g4,6 is never in W1.
  CHECK(texts(w1_constraints(g46.ft.f, g46.ft.theta, g46.g, g46.p)) == std::vector<std::string>{"1", "a - b"});

  const ClassConstraints both = class_constraints(g45.ft.f, g45.ft.theta, g45.g, g45.p);
  CHECK(both.w0 == w0_constraints(g45.ft.f));
  CHECK(both.w1 == w1_constraints(g45.ft.f, g45.ft.theta, g45.g, g45.p));
}

TEST_CASE("W1 outside dimension 4") {
  const Tensor03 F{ExprArray<3>(2)};
  const Covector theta{Vector(2)};
  CHECK_THROWS_AS(w1_constraints(F, theta, MetricTensor::identity(2), Endomorphism::identity(2)), DimensionError);
}

TEST_CASE("property: W0 implies W1") {
  const Endomorphism p = circulant_shift(4).power(2);
  const MetricTensor g = MetricTensor::identity(4);
  CHECK(w1_constraints(Tensor03{ExprArray<3>(4)}, Covector{Vector(4)}, g, p).empty());

  // A tensor built from the W1 formula satisfies the W1 constraints for its generating form.
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    Covector th{Vector(4)};
    for (int i = 1; i <= 4; ++i) th.theta(i) = ScalarExpr(testing::random_rational(rng));
    Tensor03 F{ExprArray<3>(4)};
    F.f.for_each_index([&](const std::array<int, 3>& k) {
      const auto [x, y, z] = k;
      ScalarExpr thPz, thPy;
      for (int m = 1; m <= 4; ++m) {
        thPz += th.theta(m) * p.m(m, z);
        thPy += th.theta(m) * p.m(m, y);
      }
      F.f.at(k) = (g(x, y) * th.theta(z) + g(x, z) * th.theta(y) - p.m(x, y) * thPz - p.m(x, z) * thPy) /
                  ScalarExpr(4);
    });
    CHECK(w1_constraints(F, th, g, p).empty());
    CHECK_FALSE(w0_constraints(F).empty());
  }

  for (Family f : {Family::G4_5, Family::G4_6}) {
    const Pipeline s(builtin_family(f));
    const ClassConstraints cc = class_constraints(s.ft.f, s.ft.theta, s.g, s.p);
    for (int i = 0; i < 200; ++i) {
      const ParameterAssignment at = testing::random_point(rng, kAB);
      if (satisfied(cc.w0, at)) CHECK(satisfied(cc.w1, at));
    }
  }
}

TEST_CASE("R-invariance: frozen sets") {
  const Pipeline g45(builtin_family(Family::G4_5));
  CHECK(texts(r_invariance_constraints(g45.R, g45.q)) ==
        std::vector<std::string>{"a - 1", "b^2 - 1", "a*b - a", "a*b - b^2", "a^2 - b"});
  const Pipeline g46(builtin_family(Family::G4_6));
  CHECK(texts(r_invariance_constraints(g46.R, g46.q)) ==
        std::vector<std::string>{"a*b - b^2", "a^2 - b^2", "a^2 - a*b"});
  const ExprArray<4> t = q_transform(g46.R, g46.q);
  CHECK(t(1, 2, 1, 2) == P("a^2"));  // R(e4,e1,e4,e1)
  CHECK(t(2, 3, 2, 3) == P("a*b"));  // R(e1,e2,e1,e2)
}

TEST_CASE("reduced R-invariance list") {
  const Pipeline g45(builtin_family(Family::G4_5));
  CHECK(texts(rloc_reduced_constraints(g45.R)) ==
        std::vector<std::string>{"b^2 - a", "a*b - 1", "a*b - b^2", "a^2 - b"});
  const Pipeline g46(builtin_family(Family::G4_6));
  CHECK(texts(rloc_reduced_constraints(g46.R)) == std::vector<std::string>{"a*b - b^2", "a^2 - b^2"});
  const Curvature04 small{ExprArray<4>(3)};
  CHECK_THROWS_AS(rloc_reduced_constraints(small), DimensionError);
}

TEST_CASE("reduced list and full invariance agree pointwise") {
  std::mt19937 rng(5);
  for (Family f : {Family::G4_5, Family::G4_6}) {
    const Pipeline s(builtin_family(f));
    const ConstraintSet full = r_invariance_constraints(s.R, s.q), reduced = rloc_reduced_constraints(s.R);
    for (int i = -8; i <= 8; ++i)
      for (int j = -8; j <= 8; ++j) {
        const ParameterAssignment at{{{"a", Rational(Integer(i), Integer(4))}, {"b", Rational(Integer(j), Integer(4))}}};
        CHECK(satisfied(full, at) == satisfied(reduced, at));
      }
  }
}

TEST_CASE("Einstein and constant curvature: frozen sets") {
  const Pipeline g45(builtin_family(Family::G4_5));
  CHECK(texts(einstein_constraints(g45.rs, g45.g)) ==
        std::vector<std::string>{"a^2 - a*b - b^2 + a - b + 1", "a^2 - a*b + b^2 - a - b + 1",
                                 "a^2 + a*b - b^2 + a - b - 1", "a^2 + a*b + b^2 - a - b - 1"});
  CHECK(texts(constant_curvature_constraints(g45.R, g45.g)) ==
        std::vector<std::string>{"a - 1", "a - b", "b^2 - a", "a*b - a", "a^2 - a"});

  const Pipeline g46(builtin_family(Family::G4_6));
  const CurvatureClassConstraints cc = einstein_and_constant_curvature_constraints(g46.R, g46.rs, g46.g);
  CHECK(texts(cc.einstein) == std::vector<std::string>{"a^2 - b^2", "a^2 - 2*a*b + b^2", "a^2 + 2*a*b - 3*b^2"});
  CHECK(texts(cc.const_curv) == std::vector<std::string>{"a*b - b^2", "a^2 - a*b"});
  CHECK(satisfied(cc.const_curv, ParameterAssignment{{{"a", 3}, {"b", 3}}}));
  CHECK(satisfied(cc.einstein, ParameterAssignment{{{"a", 3}, {"b", 3}}}));
  CHECK_FALSE(satisfied(cc.einstein, ParameterAssignment{{{"a", 3}, {"b", 1}}}));
}

TEST_CASE("constant curvature needs a nondegenerate first plane") {
  // invertible, yet g(e1,e1)g(e2,e2) - g(e1,e2)^2 = 0
  Matrix m(3);
  m(1, 1) = 1;
  m(1, 2) = m(2, 1) = 1;
  m(2, 2) = 1;
  m(2, 3) = m(3, 2) = 1;
  const MetricTensor g = MetricTensor::from_matrix(m);
  const Curvature04 R{ExprArray<4>(3)};
  CHECK_THROWS_AS(constant_curvature_constraints(R, g), DegeneratePlane);
  CHECK(constant_curvature_constraints(R, MetricTensor::identity(3)).empty());
}

TEST_CASE("property: symbolic verdicts agree with the matrix oracle") {
  std::mt19937 rng(2024);
  std::vector<ParameterAssignment> points;
  for (int i = -4; i <= 4; ++i)
    for (int j = -4; j <= 4; ++j)
      points.push_back({{{"a", Rational(Integer(i), Integer(2))}, {"b", Rational(Integer(j), Integer(2))}}});
  for (int t = 0; t < 100; ++t) points.push_back(testing::random_point(rng, kAB));

  for (Family f : {Family::G4_5, Family::G4_6}) {
    const Pipeline s(builtin_family(f));
    const ConstraintSet rinv = r_invariance_constraints(s.R, s.q);
    const ClassConstraints cc = class_constraints(s.ft.f, s.ft.theta, s.g, s.p);
    const ConstraintSet ein = einstein_constraints(s.rs, s.g);
    for (const auto& at : points) {
      const oracle::Q a = at.values.at("a").raw(), b = at.values.at("b").raw();
      const oracle::Geometry G = oracle::solve(f == Family::G4_5 ? oracle::g45(a, b) : oracle::g46(a, b), oracle::eye(4));
      const auto F = oracle::f_tensor(G, oracle::p_matrix());
      const auto th = oracle::lee_form(G, F);
      CHECK(satisfied(rinv, at) == oracle::r_invariant(G));
      CHECK(satisfied(cc.w1, at) == oracle::in_w1(G, F, th));
      CHECK(satisfied(cc.w0, at) == oracle::in_w0(F));
      CHECK(satisfied(ein, at) == oracle::einstein(G));
      for (int k = 1; k <= 4; ++k) CHECK(s.ft.theta.theta(k).evaluate(at).raw() == th[k - 1]);
    }
  }
}
