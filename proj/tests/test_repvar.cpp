#include "doctest.h"

#include "cmc/repvar.hpp"

using namespace cmc;

namespace {
Scalar q(long a, long b = 1) { return Scalar(Rational(a, b), 1); }
}  // namespace

TEST_CASE("validate CM points") {
  CMPoint p1{1, Matrix::from_ints({{0}}), Matrix::from_ints({{0}}), Matrix::from_ints({{1}}),
             Matrix::from_ints({{-1}})};
  CHECK(validate(p1).ok());
  CMPoint bad{2, Matrix::from_ints({{0, 0}, {0, 1}}), Matrix::from_ints({{0, 1}, {-1, 0}}),
              Matrix::from_ints({{1}, {-1}}), Matrix::from_ints({{-1, -1}})};
  CHECK_FALSE(validate(bad).ok());
  CMPoint good{2, Matrix::from_ints({{0, 0}, {0, 1}}), Matrix::from_ints({{0, -1}, {1, 0}}),
               Matrix::from_ints({{1}, {1}}), Matrix::from_ints({{-1, -1}})};
  CHECK(validate(good).ok());
  CHECK(rank(commutator(good.X, good.Y) + Matrix::identity(2, 1)) == 1);
}

TEST_CASE("generate_cm") {
  CMPoint p = generate_cm({q(0)}, {q(0)});
  CHECK(p.X == Matrix::from_ints({{0}}));
  CHECK(p.v == Matrix::from_ints({{1}}));
  CHECK(p.w == Matrix::from_ints({{-1}}));
  CMPoint p2 = generate_cm(2);
  CHECK(p2.Y == Matrix::from_ints({{0, -1}, {1, 0}}));
  CHECK(validate(p2).ok());
  CHECK(validate(generate_cm(3)).ok());
  CHECK_THROWS(generate_cm({q(1), q(1)}, {q(0), q(0)}));
  CMPoint p0 = generate_cm(0);
  CHECK(validate(p0).ok());
  CHECK(fingerprint(p0, 2) == std::vector<Scalar>(7, q(0)));
  CHECK(validate(generate_cm({q(1, 2), q(-3), q(7, 5)}, {q(2), q(0), q(-1, 3)})).ok());
}

TEST_CASE("generate_nakajima") {
  NakajimaParams params;
  params.x = {q(0), q(1)};
  params.p0 = q(0);
  params.y = {q(3), q(0)};
  FramedRep r = generate_nakajima(2, {1, 1}, {1, 1}, params);
  CHECK(r.arrows.at("Y0") == Matrix::from_ints({{3}}));
  CHECK(r.arrows.at("Y1") == Matrix::from_ints({{1}}));
  CHECK(r.arrows.at("w") == Matrix::from_ints({{-2}}));
  CHECK(validate(r).ok());
  CHECK(is_simple(r));
  CHECK(fingerprint(r, 0) == std::vector<Scalar>{q(-2)});

  FramedRep r1 = generate_nakajima(1, {2}, {1});
  CHECK(validate(r1).ok());
  CHECK(r1.arrows.at("X") == generate_cm(2).X);

  CHECK_THROWS_WITH(generate_nakajima(2, {1, 1}, {1, -1}), "irregular tau");
  CHECK_THROWS_WITH(generate_nakajima(2, {2, 0}, {1, 1}), "not a root");
  for (auto dims : std::vector<std::vector<long>>{{1, 1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    std::vector<Rational> tau(dims.size(), 1);
    FramedRep g = generate_nakajima(static_cast<int>(dims.size()), dims, tau);
    CHECK(validate(g).ok());
    CHECK(is_simple(g));
  }
}

TEST_CASE("m = 1 framed validation coincides with CM validation") {
  for (int n = 0; n <= 3; ++n) {
    CMPoint p = generate_cm(n, 2);
    Residuals a = validate(p), b = validate(to_framed(p));
    CHECK(a.at("moment") == b.at("0"));
    CHECK(a.at("trace") == b.at("inf"));
  }
}

TEST_CASE("group action, simplicity, isomorphism") {
  CMPoint p = generate_cm(2);
  Matrix swap = Matrix::from_ints({{0, 1}, {1, 0}});
  CMPoint s = gl_act(p, swap);
  CHECK(validate(s).ok());
  CHECK(s.X == Matrix::from_ints({{1, 0}, {0, 0}}));
  CHECK(gl_act(s, inverse(swap)).X == p.X);
  CHECK(gl_act(p, Matrix::identity(2, 1)).Y == p.Y);
  CHECK(is_simple(p));
  CHECK(are_isomorphic(p, s));
  CHECK(are_isomorphic(p, p));
  CHECK_FALSE(are_isomorphic(generate_cm(2), generate_cm({q(0), q(2)}, {q(0), q(0)})));
  CHECK(fingerprint(p, 4) == fingerprint(s, 4));

  CMPoint pz{1, Matrix::from_ints({{0}}), Matrix::from_ints({{0}}), Matrix::from_ints({{0}}),
             Matrix::from_ints({{0}})};
  FramedRep z = to_framed(pz);
  z.lambda = {q(0), q(0)};
  CHECK(validate(z).ok());
  CHECK_FALSE(is_simple(z));

  Matrix g = Matrix::from_ints({{2, 1}, {1, 1}});
  FramedRep fr = to_framed(p);
  FramedRep fg = gl_act(fr, {Matrix::identity(1, 1), g});
  CHECK(validate(fg).ok());
  CHECK(are_isomorphic(fr, fg));

  for (int n = 1; n <= 3; ++n) {
    CMPoint c = generate_cm(n, 1);
    FramedRep f = to_framed(c);
    auto mats = global_matrices(f);
    CHECK(intertwiner_space(mats, mats).size() >= 1);
  }
}

TEST_CASE("fingerprint and rank one factor") {
  CMPoint p1 = generate_cm(1);
  CHECK(fingerprint(p1, 1) == std::vector<Scalar>{q(-1), q(0), q(0)});
  for (int n = 0; n <= 3; ++n) CHECK(fingerprint(generate_cm(n, 3), 2)[0] == q(-n));
  Matrix M = Matrix::from_ints({{0, 0}, {2, 4}});
  auto [v, w] = rank_one_factor(M);
  CHECK(v == Matrix::from_ints({{0}, {1}}));
  CHECK(w == Matrix::from_ints({{2, 4}}));
  CHECK_THROWS(rank_one_factor(Matrix::identity(2, 1)));
}
