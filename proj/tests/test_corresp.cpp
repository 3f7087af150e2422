#include "doctest.h"

#include "cmc/corresp.hpp"

using namespace cmc;

namespace {
Scalar q(long a, long b = 1) { return Scalar(Rational(a, b), 1); }
NCElement el(const std::string& s, long c = 1) { return NCElement::word(parse_word(s), 1, q(c)); }
bool proportional(const NCElement& a, const NCElement& b) {
  if (a.terms().size() != b.terms().size() || a.is_zero()) return false;
  Scalar r = b.terms().begin()->second / a.terms().begin()->second;
  return a * r == b;
}
CMPoint point1() { return generate_cm(1); }
}  // namespace

TEST_CASE("word index") {
  auto words = enumerate_words({"x", "y"}, 5);
  for (std::size_t i = 0; i < words.size(); ++i) CHECK(word_index(words[i]) == i);
}

TEST_CASE("epsilon") {
  for (int n = 0; n <= 3; ++n) CHECK(epsilon(generate_cm(n), Word{}) == q(-n));
  CMPoint odd{2, Matrix::from_ints({{0, 0}, {0, 1}}), Matrix::from_ints({{0, 1}, {-1, 0}}),
              Matrix::from_ints({{1}, {-1}}), Matrix::from_ints({{-1, 1}})};
  CHECK(epsilon(odd, Word{"x"}) == q(-1));
  CHECK(epsilon(point1(), Word{"x"}) == q(0));
}

TEST_CASE("J, K and the ideal model at small degree") {
  auto J = j_basis(point1(), 2);
  REQUIRE(J.size() == 1);
  CHECK(proportional(J[0], el("xy") - el("yx")));
  auto J0 = j_basis(generate_cm(0), 2);
  REQUIRE(J0.size() == 1);
  CHECK(proportional(J0[0], el("xy") - el("yx") - el("")));

  auto K1 = eval_map_kernel(point1(), 1);
  REQUIRE(K1.size() == 2);
  CHECK(K1[0] == el("x"));
  CHECK(K1[1] == el("y"));
  CHECK(eval_map_kernel(point1(), 2).size() == 6);
  CHECK(eval_map_kernel(generate_cm(0), 3).size() == 15);

  IdealModel M = omega(point1(), 2);
  CHECK(M.codim_profile == std::vector<long>{1, 1, 1});
  CHECK(M.K_basis.size() - M.J_basis.size() == 5);
  auto J3 = j_basis(point1(), 3);
  auto K3 = eval_map_kernel(point1(), 3);
  for (const auto& j : J3) CHECK(in_span(K3, j));

  IdealModel M0 = omega(generate_cm(0));
  for (long c : M0.codim_profile) CHECK(c == 0);

  IdealModel M2 = omega(generate_cm(2), 4);
  CHECK(M2.codim_profile == std::vector<long>{1, 2, 2, 2, 2});
}

TEST_CASE("well-definedness and module property") {
  for (int n = 0; n <= 3; ++n) {
    CMPoint p = generate_cm(n, -1);
    const NCElement rel = weyl_relator();
    for (const auto& a : enumerate_words({"x", "y"}, 4)) {
      Matrix lhs = evaluate_on_vector(NCElement::word(a, 1) * rel, p.letters(), p.v);
      CHECK(lhs == p.v * epsilon(p, a));
    }
    const int d = 5;
    auto J = j_basis(p, d);
    auto K = eval_map_kernel(p, d);
    for (const auto& j : J) CHECK(in_span(K, j));
    for (const auto& k : eval_map_kernel(p, d - 2)) CHECK(in_span(J, k * rel));
    CHECK(rho(p, rel) * rho(p, rel + NCElement::constant(q(n))) == Matrix(n, n, 1));
  }
}

TEST_CASE("distinct") {
  CMPoint a = generate_cm(2);
  CMPoint b = generate_cm({q(0), q(2)}, {q(0), q(0)});
  Matrix g = Matrix::from_ints({{1, 1}, {0, 1}});
  IdealModel ma = omega(a), mb = omega(b), mg = omega(gl_act(a, g));
  CHECK_FALSE(distinct(ma, mg));
  CHECK(distinct(ma, mb));
  CHECK_FALSE(distinct(ma, ma));
  CHECK(ma.fingerprint == mg.fingerprint);
}

TEST_CASE("omega_tau") {
  for (int n = 0; n <= 2; ++n) {
    CMPoint p = generate_cm(n, 1);
    IdealModel M = omega(p, 4);
    TauModel T = omega_tau(to_framed(p), 4);
    CHECK(T.codim_profile == M.codim_profile);
    CHECK(T.epsilon == fingerprint(p, 4));
    REQUIRE(T.K_basis.size() == M.K_basis.size());
    for (std::size_t i = 0; i < T.K_basis.size(); ++i) {
      NCElement lower(1);
      for (const auto& [w, c] : T.K_basis[i].terms()) {
        Word lw;
        for (const auto& l : w) lw.push_back(l == "X" ? "x" : "y");
        lower.add_term(lw, c);
      }
      CHECK(lower == M.K_basis[i]);
    }
  }
  NakajimaParams params;
  params.x = {q(0), q(1)};
  params.y = {q(3), q(0)};
  params.p0 = q(0);
  FramedRep r = generate_nakajima(2, {1, 1}, {1, 1}, params);
  TauModel T = omega_tau(r, 2);
  CHECK(T.epsilon[0] == q(-2));
  FramedRep r2 = generate_nakajima(2, {1, 1}, {1, 1});
  CHECK_FALSE(are_isomorphic(r, r2));
  CHECK(omega_tau(r2, 2).epsilon != T.epsilon);
  FramedRep bad = r;
  bad.lambda = {q(0), q(1), q(-1)};
  CHECK_THROWS(omega_tau(bad, 2));
}
