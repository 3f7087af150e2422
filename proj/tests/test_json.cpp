#include <doctest.h>

#include "cmc/json_io.hpp"

using namespace cmc;

namespace {

template <class T, class F>
void round_trip(const T& value, F parse) {
  json j = to_json(value);
  std::string text = dump(j);
  T back = parse(json::parse(text));
  CHECK(dump(to_json(back)) == text);
}

}  // namespace

TEST_CASE("scalar encoding") {
  Scalar s = Scalar::from_coeffs(3, {Rational(1, 2), Rational(-7, 3)});
  json j = to_json(s);
  CHECK(j["m"] == 3);
  CHECK(j["coeffs"][0] == json({"1", "2"}));
  CHECK(j["coeffs"][1] == json({"-7", "3"}));
  CHECK(scalar_from_json(j) == s);
  Rational big("123456789012345678901234567890/7");
  CHECK(scalar_from_json(to_json(Scalar(big, 1))) == Scalar(big, 1));
  CHECK_THROWS_AS(scalar_from_json(json{{"m", 1}, {"coeffs", {{"1", "0"}}}}), JsonError);
  CHECK_THROWS_AS(scalar_from_json(json{{"m", 1}, {"coeffs", {{"x", "1"}}}}), JsonError);
  CHECK_THROWS_AS(scalar_from_json(json{{"coeffs", json::array()}}), JsonError);
}

TEST_CASE("round trips") {
  round_trip(generate_cm(3, 1), cmpoint_from_json);
  round_trip(generate_nakajima(2, {1, 1}, {Rational(1), Rational(1)}), framed_from_json);
  round_trip(generate_nakajima(3, {1, 1, 1}, {Rational(1), Rational(2), Rational(3)}), framed_from_json);
  round_trip(Matrix::from_ints({{1, 2, 3}, {4, 5, 6}}), matrix_from_json);
  round_trip(Matrix(0, 3, 2), matrix_from_json);
  round_trip(framed_double_cyclic(3), quiver_from_json);
  round_trip(omega(generate_cm(2)), ideal_model_from_json);
  round_trip(fixture_n2(Scalar(0, 1), Scalar(1, 1), Scalar(0, 1), Scalar(0, 1)), hmodule_from_json);
  round_trip(fixture_wreath21(Scalar(1, 2), Scalar(1, 2), Scalar(1, 2), Scalar(3, 2)), hmodule_from_json);
  round_trip(WreathElement{{1, 0}, {1, 0}}, wreath_from_json);
  NCElement e = NCElement::word({"x", "y"}, 1) - NCElement::word({"y", "x"}, 1) * Scalar(Rational(1, 3), 1);
  CHECK(ncelement_from_json(to_json(e), 1) == e);
}

TEST_CASE("algebra elements") {
  CrossedAlgebra A(3, {Scalar(1, 3), Scalar(2, 3), Scalar(-3, 3)});
  PBWElement e = A.mul(A.y(), A.mul(A.x(), A.g(1)));
  CHECK(crossed_from_json(A, json::parse(dump(crossed_to_json(A, e)))) == e);
  SRAAlgebra H({2, 2, Scalar(1, 2), {Scalar(2, 2)}});
  PBWElement f = H.normal_form({{Letter::Y, 0}, {Letter::X, 1}, {Letter::G, 3}, {Letter::X, 0}});
  CHECK(sra_from_json(H, json::parse(dump(sra_to_json(H, f)))) == f);
}

TEST_CASE("validation on input") {
  json p = to_json(generate_cm(2));
  p["n"] = 3;
  CHECK_THROWS_AS(cmpoint_from_json(p), JsonError);
  json r = to_json(generate_nakajima(2, {1, 1}, {Rational(1), Rational(1)}));
  r["arrows"].erase("v");
  CHECK_THROWS_AS(framed_from_json(r), JsonError);
  json m = to_json(Matrix::from_ints({{1, 2}}));
  m["cols"] = 3;
  CHECK_THROWS_AS(matrix_from_json(m), JsonError);
  ThetaReport rep = verify_theta(2, 1, {Rational(1), Rational(1)}, 3);
  json tj = to_json(rep);
  CHECK(tj["pairs_checked"] == rep.pairs_checked);
  CHECK(tj["failures"].empty());
}
