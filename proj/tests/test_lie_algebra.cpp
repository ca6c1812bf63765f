#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lietensor/error.hpp"
#include "lietensor/lie_algebra.hpp"
#include "support.hpp"

using namespace lietensor;

namespace {

const std::vector<std::string> kAB = {"a", "b"};

ScalarExpr P(const std::string& text) { return parse_scalar(text, kAB); }

LieAlgebraError::Kind error_kind(auto&& f) {
  try {
    f();
  } catch (const LieAlgebraError& e) {
    return e.kind();
  }
  FAIL("no LieAlgebraError raised");
  return LieAlgebraError::Kind::UnknownFamily;
}

Vector vec(std::initializer_list<ScalarExpr> xs) {
  Vector v(static_cast<int>(xs.size()));
  int i = 1;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

}  // namespace

TEST_CASE("abelian algebra has zero brackets and no Jacobi residual") {
  const LieAlgebra L = make_lie_algebra(3, {}, {});
  CHECK(jacobi_residual(L).empty());
  CHECK(bracket(L, basis_vector(3, 1), basis_vector(3, 2)) == Vector(3));
}

TEST_CASE("antisymmetric completion") {
  const StructureConstants c(3, {{1, 2, 3, ScalarExpr(5)}});
  CHECK(c(1, 2, 3) == ScalarExpr(5));
  CHECK(c(2, 1, 3) == ScalarExpr(-5));
  CHECK(c(1, 1, 3).is_zero());
  CHECK(is_antisymmetric(c));
}

TEST_CASE("both families are Lie algebras for symbolic a and b") {
  for (Family f : {Family::G4_5, Family::G4_6}) {
    const LieAlgebra L = builtin_family(f);
    CHECK(L.dim() == 4);
    CHECK(L.params() == kAB);
    CHECK(jacobi_residual(L).empty());
    CHECK(jacobi_violations(L.structure_constants()).empty());
    CHECK(is_antisymmetric(L.structure_constants()));
    CHECK_FALSE(L.domain_notes().empty());
  }
}

TEST_CASE("g4,5 and g4,6 bracket tables") {
  const LieAlgebra g45 = builtin_family(Family::G4_5);
  CHECK(g45.c(1, 4, 1) == ScalarExpr(1));
  CHECK(g45.c(2, 4, 2) == P("a"));
  CHECK(g45.c(3, 4, 3) == P("b"));
  CHECK(g45.c(4, 3, 3) == P("-b"));
  CHECK(g45.c(1, 2, 3).is_zero());

  const LieAlgebra g46 = builtin_family(Family::G4_6);
  CHECK(g46.c(1, 4, 1) == P("a"));
  CHECK(g46.c(2, 4, 2) == P("b"));
  CHECK(g46.c(2, 4, 3) == ScalarExpr(-1));
  CHECK(g46.c(3, 4, 2) == ScalarExpr(1));
  CHECK(g46.c(3, 4, 3) == P("b"));

  // [e2 + e3, e4] = (b+1) e2 + (b-1) e3
  const Vector v = bracket(g46, vec({0, 1, 1, 0}), basis_vector(4, 4));
  CHECK(v == vec({0, P("b + 1"), P("b - 1"), 0}));
}

TEST_CASE("concrete parameters give numeric algebras") {
  const LieAlgebra L = builtin_family("g4.5", ScalarExpr(1), ScalarExpr(Rational(Integer(-1), Integer(2))));
  CHECK(L.params().empty());
  CHECK(L.c(3, 4, 3) == ScalarExpr(Rational(Integer(-1), Integer(2))));
}

TEST_CASE("Jacobi: a valid three-dimensional table") {
  // [e1,e2] = e3, [e1,e3] = e3 satisfies Jacobi: the only triple gives [[e2,e3],e1] = 0
  // and [[e1,e2],e3] + [[e3,e1],e2] = [e3,e3] - [e3,e2] = 0.
  const StructureConstants c(3, {{1, 2, 3, 1}, {1, 3, 3, 1}});
  CHECK(jacobi_residual(c).empty());
  CHECK_NOTHROW(make_lie_algebra(3, {}, {{1, 2, 3, 1}, {1, 3, 3, 1}}));
}

TEST_CASE("Jacobi: a violating table is rejected") {
  const std::vector<BracketEntry> bad = {{1, 2, 3, 1}, {1, 3, 3, 1}, {2, 3, 1, 1}};
  const StructureConstants c(3, bad);
  CHECK_FALSE(jacobi_residual(c).empty());
  const auto violations = jacobi_violations(c);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0] == std::array<int, 3>{1, 2, 3});
  CHECK(error_kind([&] { make_lie_algebra(3, {}, bad); }) == LieAlgebraError::Kind::JacobiViolation);

  const StructureConstants d(3, {{1, 2, 3, 1}, {1, 3, 3, 1}, {1, 3, 1, 1}});
  CHECK_FALSE(jacobi_residual(d).empty());
}

TEST_CASE("Jacobi residual of a parametric table is the parameter condition") {
  // [e1,e2] = a e3 and [e1,e3] = e1 leave a Jacobiator proportional to a.
  const StructureConstants c(3, {{1, 2, 3, P("a")}, {1, 3, 1, 1}});
  const ConstraintSet r = jacobi_residual(c);
  REQUIRE(r.polys.size() == 1);
  CHECK(r.polys[0].str() == "a");
}

TEST_CASE("index, duplicate and parameter errors") {
  using K = LieAlgebraError::Kind;
  CHECK(error_kind([] { StructureConstants(3, {{2, 1, 3, 1}}); }) == K::IndexOutOfRange);
  CHECK(error_kind([] { StructureConstants(3, {{1, 1, 3, 1}}); }) == K::IndexOutOfRange);
  CHECK(error_kind([] { StructureConstants(3, {{1, 4, 3, 1}}); }) == K::IndexOutOfRange);
  CHECK(error_kind([] { StructureConstants(3, {{1, 2, 0, 1}}); }) == K::IndexOutOfRange);
  CHECK(error_kind([] { StructureConstants(3, {{1, 2, 3, 1}, {1, 2, 3, 2}}); }) == K::DuplicateEntry);
  CHECK(error_kind([&] { make_lie_algebra(3, {"a"}, {{1, 2, 3, P("b")}}); }) == K::UnknownParameter);
  CHECK(error_kind([] { parse_family("g4_7"); }) == K::UnknownFamily);
}

TEST_CASE("family identifiers") {
  CHECK(parse_family("g4_5") == Family::G4_5);
  CHECK(parse_family("g4.5") == Family::G4_5);
  CHECK(parse_family("g4_6") == Family::G4_6);
  CHECK(parse_family("g4.6") == Family::G4_6);
  CHECK(family_name(Family::G4_6) == "g4.6");
}

TEST_CASE("property: the bracket is bilinear and antisymmetric") {
  std::mt19937 rng(77);
  const LieAlgebra L = builtin_family(Family::G4_6);
  auto random_vec = [&] {
    Vector v(4);
    for (int i = 1; i <= 4; ++i) v(i) = ScalarExpr(testing::random_polynomial(rng, kAB, 2, 1));
    return v;
  };
  auto add = [](Vector x, const Vector& y) {
    for (int i = 1; i <= x.dim(); ++i) x(i) += y(i);
    return x;
  };
  auto scale = [](Vector x, const ScalarExpr& s) {
    for (int i = 1; i <= x.dim(); ++i) x(i) *= s;
    return x;
  };
  for (int t = 0; t < 25; ++t) {
    const Vector x = random_vec(), y = random_vec(), z = random_vec();
    const ScalarExpr s(testing::random_rational(rng));
    CHECK(bracket(L, add(x, scale(y, s)), z) == add(bracket(L, x, z), scale(bracket(L, y, z), s)));
    CHECK(bracket(L, x, y) == scale(bracket(L, y, x), ScalarExpr(-1)));
    CHECK(bracket(L, x, x) == Vector(4));
  }
}
