#include "doctest.h"

#include "cmc/scalar.hpp"

using namespace cmc;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("roots of unity") {
  Scalar z2 = Scalar::root_of_unity(3, 2);
  CHECK(z2.coeffs() == std::vector<Rational>{-1, -1});
  Scalar z = Scalar::root_of_unity(3, 1);
  CHECK(z * z == z2);
  CHECK(Scalar::root_of_unity(2, 1) == Scalar(-1, 2));
  for (int m = 1; m <= 12; ++m) {
    Scalar sum(m);
    for (int k = 0; k < m; ++k) sum += Scalar::root_of_unity(m, k);
    CHECK((m == 1 ? sum.is_one() : sum.is_zero()));
    CHECK(Scalar::root_of_unity(m, 1).inv() == Scalar::root_of_unity(m, m - 1));
    CHECK(Scalar::root_of_unity(m, m).is_one());
  }
}

TEST_CASE("field inverse") {
  Scalar a = Scalar::from_coeffs(5, {Rational(3, 2), 1, 0, Rational(-7)});
  CHECK((a * a.inv()).is_one());
  CHECK_THROWS_AS(Scalar(5).inv(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(1, 2) + Scalar(1, 3), ConductorMismatch);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK(Scalar::from_coeffs(4, {1, -2}).to_string() == "1 - 2*z");
  CHECK(Scalar(Rational(1, 3), 1).to_string() == "1/3");
}
