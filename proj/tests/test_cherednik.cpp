#include <doctest.h>

#include "cmc/cherednik.hpp"

using namespace cmc;

namespace {

Scalar q(long a, long b = 1, int m = 1) { return Scalar(Rational(a, b), m); }

std::vector<HModule> n2_family() {
  return {fixture_n2(q(0), q(1), q(0), q(0)), fixture_n2(q(0), q(2), q(0), q(0)),
          fixture_n2(q(1), q(3), q(2), q(-1)), fixture_n2(q(-1, 2), q(5), q(1), q(1)),
          fixture_n2(q(2), q(-3), q(0), q(7))};
}

}  // namespace

TEST_CASE("fixtures satisfy the relations") {
  HModule V = fixture_n2(q(0), q(1), q(0), q(0));
  CHECK(V.y[0] == Matrix::from_ints({{0, 1}, {-1, 0}}));
  CHECK(verify_module(V).ok());
  for (const auto& W : n2_family()) CHECK(verify_module(W).ok());
  CHECK(verify_module(fixture_n2(q(1), q(4), q(2), q(3), q(5, 2))).ok());
  CHECK(verify_module(fixture_n1(q(3), q(5))).ok());
  HModule w = fixture_wreath21(q(1, 1, 2), q(1, 1, 2), q(2, 1, 2), q(3, 1, 2));
  CHECK(verify_module(w).ok());
  CHECK(verify_module(solve_fixture(2, 1, {q(1), q(2), q(0), q(0)}, q(1))).ok());
}

TEST_CASE("verify_module negative control") {
  HModule V = fixture_n2(q(0), q(1), q(0), q(0));
  for (auto& y : V.y) y = Matrix::diagonal({y(0, 0), y(1, 1)}, 1) * q(2) - y;  // flip the off-diagonal part
  Residuals r = verify_module(V);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.at("[y1,x1]").is_zero());
  HModule W = fixture_n2(q(0), q(1), q(0), q(0));
  W.generators["s1"] = Matrix::from_ints({{1, 0}, {0, -1}});
  W.generators["s1"](1, 1) = q(2);  // not an involution
  CHECK_FALSE(verify_module(W).ok());
  W.x.pop_back();
  CHECK_THROWS_AS(verify_module(W), ShapeMismatch);
}

TEST_CASE("eg_map on the basic fixture") {
  HModule V = fixture_n2(q(0), q(1), q(0), q(0));
  CMPoint P = eg_map(V);
  CHECK(validate(P).ok());
  CHECK(is_simple(P));
  CHECK(rank(commutator(P.X, P.Y) + Matrix::identity(2, 1)) == 1);
  CMPoint expected{2, Matrix::diagonal({q(0), q(1)}, 1), Matrix::from_ints({{0, 1}, {-1, 0}}),
                   Matrix::from_ints({{1}, {-1}}), Matrix::from_ints({{-1, 1}})};
  CHECK(validate(expected).ok());
  CHECK(are_isomorphic(P, expected));
  CMPoint one = eg_map(fixture_n1(q(3), q(5)));
  CHECK(one.X == Matrix::from_ints({{3}}));
  CHECK(one.Y == Matrix::from_ints({{5}}));
  CHECK(one.v == Matrix::from_ints({{1}}));
  CHECK(one.w == Matrix::from_ints({{-1}}));
}

TEST_CASE("weights, operator identity and the spherical map on the n = 2 family") {
  HModule V = fixture_n2(q(0), q(1), q(0), q(0));
  CHECK(weight_via_module(V, {}, WeightVariant::ep) == q(-2));
  CHECK(weight_via_module(V, {"x"}, WeightVariant::ep) == q(-1));
  CHECK(spherical_theta(V, NCElement::constant(q(1))) == Matrix::from_rows({{q(-1), q(-1)}, {q(-1), q(-1)}}, 1));
  for (const auto& W : n2_family()) {
    CMPoint P = eg_map(W);
    CHECK(validate(P).ok());
    for (const auto& w : enumerate_words({"x", "y"}, 4)) {
      Scalar a = weight_via_module(W, w, WeightVariant::ep);
      CHECK(a == weight_via_module(W, w, WeightVariant::ep1));
      CHECK(a == epsilon(P, w));
    }
    // ebar ([x1,y1] - 1) = -n e, with ebar = 1 at n = 2.
    WreathGroup G(2, 1);
    auto g = group_matrices(W, G);
    Matrix e = group_operator(g, G.sigma_n(), 2, 1), eb = group_operator(g, G.sigma_n_minus_1(), 2, 1);
    CHECK(eb * (commutator(W.x[0], W.y[0]) - Matrix::identity(2, 1)) == e * q(-2));
    // Spherical subalgebra is commutative.
    auto words = enumerate_words({"x", "y"}, 3);
    std::vector<Matrix> ops;
    for (const auto& w : words) ops.push_back(spherical_theta(W, NCElement::word(w, 1)));
    for (std::size_t i = 0; i < ops.size(); ++i)
      for (std::size_t j = i + 1; j < ops.size(); ++j) CHECK(commutator(ops[i], ops[j]).is_zero());
    // Multiplicativity of the spherical map: (v a w)(v b w) = v a (wv) b w, wv = XY - YX - lambda_0 with lambda_0 = 1.
    for (const auto& a : enumerate_words({"x", "y"}, 1))
      for (const auto& b : enumerate_words({"x", "y"}, 1)) {
        NCElement A = NCElement::word(a, 1), B = NCElement::word(b, 1);
        NCElement mid = NCElement::word({"x", "y"}, 1) - NCElement::word({"y", "x"}, 1) - NCElement::constant(q(1));
        CHECK(spherical_theta(W, A) * spherical_theta(W, B) == spherical_theta(W, A * mid * B));
      }
  }
}

TEST_CASE("eg_map errors") {
  HModule V = fixture_n2(q(0), q(1), q(0), q(0));
  HModule D = V;  // V + V is not simple
  D.dim = 4;
  auto dbl = [](const Matrix& a) {
    Matrix r(4, 4, 1);
    r.set_block(0, 0, a);
    r.set_block(2, 2, a);
    return r;
  };
  for (auto& a : D.x) a = dbl(a);
  for (auto& a : D.y) a = dbl(a);
  D.generators["s1"] = dbl(D.generators["s1"]);
  CHECK(verify_module(D).ok());
  CHECK_THROWS_WITH_AS(eg_map(D), "not simple", ModuleError);
}

TEST_CASE("xi pipeline separates and is basis independent") {
  IdealModel a = xi_pipeline(fixture_n1(q(0), q(0)));
  IdealModel b = xi_pipeline(fixture_n1(q(1), q(0)));
  CHECK(distinct(a, b));
  IdealModel c = xi_pipeline(fixture_n2(q(0), q(1), q(0), q(0)));
  IdealModel d = xi_pipeline(fixture_n2(q(0), q(2), q(0), q(0)));
  CHECK(distinct(c, d));
  Matrix T = Matrix::from_ints({{2, 1}, {1, 1}});
  IdealModel e = xi_pipeline(conjugate(fixture_n2(q(0), q(1), q(0), q(0)), T));
  CHECK_FALSE(distinct(c, e));
  // Non-unit c: rescaled internally.
  CHECK_NOTHROW(xi_pipeline(fixture_n2(q(1), q(4), q(2), q(3), q(5, 2))));
}

TEST_CASE("wreath weight pullback at (m, n) = (2, 1)") {
  const int m = 2;
  // lambda = (lambda_inf, lambda_0, lambda_1) with lambda_inf = -(lambda_0 + lambda_1), c1 = -lambda_1.
  for (auto [l0, l1] : std::vector<std::pair<long, long>>{{1, 1}, {2, -3}, {0, 5}}) {
    std::vector<Scalar> lambda{q(-(l0 + l1), 1, m), q(l0, 1, m), q(l1, 1, m)};
    HModule V = fixture_wreath21(q(1, 1, m), q(2, 1, m), q(3, 1, m), q(-l1, 1, m));
    REQUIRE(verify_module(V).ok());
    CHECK(wreath_weight_pullback(V, {}, lambda) == lambda[0]);
    FramedRep R = nakajima_from_module(V, lambda);
    CHECK(validate(R).ok());
    for (const auto& p : closed_paths_at_zero(m, 2)) CHECK(wreath_weight_pullback(V, p, lambda) == epsilon(R, p));
    // linearity in the path
    Scalar s = wreath_weight_pullback(V, {"X0", "Y0"}, lambda) + wreath_weight_pullback(V, {"Y1", "X1"}, lambda);
    CHECK(s == wreath_weight_pullback(V, {"X0", "Y0"}, lambda) + wreath_weight_pullback(V, {"Y1", "X1"}, lambda));
  }
  HModule V = fixture_wreath21(q(1, 1, m), q(2, 1, m), q(3, 1, m), q(4, 1, m));
  CHECK_THROWS_AS(wreath_weight_pullback(V, {}, {q(0, 1, m), q(0, 1, m), q(0, 1, m)}), ModuleError);
}
