#include "doctest.h"

#include <map>
#include <cmath>
#include <set>

#include "cmc/acceptance.hpp"
#include "cmc/quiver.hpp"

using namespace cmc;

TEST_CASE("quiver construction") {
  Quiver c1 = build_cyclic(1);
  CHECK(c1.vertices.size() == 1);
  REQUIRE(c1.arrows.size() == 1);
  CHECK(c1.arrows[0].name == "X");
  CHECK(c1.loops_at(0) == 1);

  Quiver qinf = frame(c1);
  CHECK(qinf.vertices == std::vector<std::string>{"inf", "0"});
  CHECK(qinf.has_arrow("v"));
  CHECK(qinf.arrow("v").src == 1);
  CHECK(qinf.arrow("v").tgt == 0);

  Quiver d2 = double_quiver(frame(build_cyclic(2)));
  CHECK(d2.arrows.size() == 6);
  for (int m = 1; m <= 5; ++m) CHECK(framed_double_cyclic(m).arrows.size() == 2u * (m + 1));
  CHECK(d2.arrow("Y0").src == 1);  // vertex indices: inf=0, "0"=1, "1"=2
  CHECK(d2.arrow("Y0").tgt == 2);
  CHECK(d2.arrow("w").src == 0);
}

TEST_CASE("tits form") {
  Quiver qinf = frame(build_cyclic(1));
  for (long n = 0; n <= 5; ++n) CHECK(tits_form(qinf, {1, n}) == 1 - n);
  for (int m = 2; m <= 6; ++m) CHECK(tits_form(build_cyclic(m), DimVector(m, 1)) == 0);
  Quiver q3 = frame(build_cyclic(3));
  CHECK(tits_form(q3, {0, 0, 1, 0}) == 1);
}

TEST_CASE("positive roots, small examples") {
  Quiver qinf = frame(build_cyclic(1));
  CHECK(is_positive_root(qinf, {1, 0}));
  for (long n = 1; n <= 4; ++n) CHECK(is_positive_root(qinf, {1, n}));
  CHECK_FALSE(is_positive_root(build_cyclic(2), {2, 0}));
  CHECK_THROWS(is_positive_root(qinf, {-1, 0}));
}


TEST_CASE("positive roots agree with brute-force enumeration") {
  for (int m = 1; m <= 3; ++m) {
    Quiver q = frame(build_cyclic(m));
    auto roots = brute_force_roots(q, 4);
    const std::size_t n = q.vertices.size();
    DimVector a(n, 0);
    long checked = 0;
    for (;;) {
      std::size_t i = 0;
      while (i < n && a[i] == 4) a[i++] = 0;
      if (i == n) break;
      ++a[i];
      CHECK_MESSAGE(is_positive_root(q, a) == (roots.count(a) > 0), "m=", m);
      ++checked;
    }
    CHECK(checked == static_cast<long>(std::pow(5, n)) - 1);
  }
}

TEST_CASE("regularity") {
  CHECK_FALSE(is_regular({1, -1}));
  CHECK(is_regular({1, 1}));
  CHECK(is_regular({2, 1}));
  CHECK(is_regular({3}));
  CHECK_FALSE(is_regular({0}));
  CHECK_FALSE(is_regular({1, 0}));  // tau.alpha_1 = 0
  CHECK(is_regular({1, 1, 1}));
  for (const auto& t : std::vector<std::vector<Rational>>{{1, 1}, {2, 1}, {1, 2, 5}, {1, -1}, {3, 0, 1}}) {
    std::vector<Rational> s;
    for (const auto& x : t) s.push_back(x * Rational(-7, 3));
    CHECK(is_regular(t) == is_regular(s));
  }
}

TEST_CASE("pairing") {
  for (long n = 0; n < 4; ++n) CHECK(pairing({Scalar(-n, 1), Scalar(1, 1)}, {1, n}).is_zero());
  CHECK(pairing({Scalar(-2, 1), Scalar(1, 1), Scalar(1, 1)}, {1, 1, 1}).is_zero());
  CHECK(pairing({Scalar(0, 1), Scalar(0, 1)}, {1, 7}).is_zero());
  CHECK_THROWS(pairing({Scalar(0, 1)}, {1, 2}));
}
