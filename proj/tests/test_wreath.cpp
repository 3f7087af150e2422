#include "doctest.h"

#include "cmc/wreath.hpp"

using namespace cmc;

namespace {

// g x_i = coeff * x_target g, as (target, exponent of z).
std::pair<int, int> act(const WreathElement& g, int i, int m) { return {g.sigma[i], g.gamma[i] % m}; }

bool action_is_homomorphism(const WreathGroup& G) {
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b) {
      const auto &ga = G.element(a), &gb = G.element(b);
      const auto& gab = G.element(G.table().mul(a, b));
      for (int i = 0; i < G.n(); ++i) {
        auto [t1, e1] = act(gb, i, G.m());
        auto [t2, e2] = act(ga, t1, G.m());
        auto [t, e] = act(gab, i, G.m());
        if (t != t2 || (e1 + e2) % G.m() != e) return false;
      }
    }
  return true;
}

}  // namespace

TEST_CASE("wreath group law") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {3, 2}}) {
    for (auto conv : {WreathConvention::A, WreathConvention::B}) {
      WreathGroup G(n, m, conv);
      long fact = 1, pw = 1;
      for (int i = 1; i <= n; ++i) fact *= i, pw *= m;
      CHECK(G.order() == fact * pw);
      const auto& T = G.table();
      for (int a = 0; a < G.order(); ++a) {
        CHECK(T.mul(T.identity, a) == a);
        CHECK(T.mul(a, T.inv[a]) == T.identity);
        if (n * m <= 6)
          for (int b = 0; b < G.order(); ++b)
            for (int c = 0; c < G.order(); ++c) CHECK(T.mul(T.mul(a, b), c) == T.mul(a, T.mul(b, c)));
      }
    }
    CHECK(action_is_homomorphism(WreathGroup(n, m, WreathConvention::A)));
  }
  CHECK_FALSE(action_is_homomorphism(WreathGroup(2, 2, WreathConvention::B)));

  WreathGroup A(2, 2), B(2, 2, WreathConvention::B);
  WreathElement s{{1, 0}, {0, 0}}, a{{0, 1}, {1, 0}};
  CHECK(A.wreath_mult(s, a) == WreathElement{{1, 0}, {1, 0}});
  CHECK(B.wreath_mult(s, a) == WreathElement{{1, 0}, {0, 1}});
}

TEST_CASE("idempotents") {
  WreathGroup G21(1, 2);
  const Scalar half(Rational(1, 2), 2);
  CHECK(galg_equal(G21.frak_e(0), GroupAlg{{0, half}, {G21.alpha(0, 1), half}}));
  CHECK(galg_equal(G21.frak_e(1), GroupAlg{{0, half}, {G21.alpha(0, 1), -half}}));

  WreathGroup S2(2, 1);
  const Scalar h1(Rational(1, 2), 1);
  CHECK(galg_equal(S2.idempotent("e"), GroupAlg{{0, h1}, {S2.transposition(0, 1), h1}}));
  CHECK(galg_equal(S2.idempotent("e_bar"), S2.one()));

  for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {3, 1}}) {
    WreathGroup G(n, m);
    GroupAlg sum;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        GroupAlg p = G.galg_mult(G.frak_e(i), G.frak_e(j));
        CHECK(galg_equal(p, i == j ? G.frak_e(i) : GroupAlg{}));
      }
      GroupAlg nu = G.nu(i);
      CHECK(galg_equal(G.galg_mult(nu, nu), nu));
      for (const auto& [g, c] : G.frak_e(i)) {
        auto [it, ins] = sum.emplace(g, c);
        if (!ins) it->second += c;
      }
    }
    CHECK(galg_equal(sum, G.one()));
    GroupAlg tensor = G.frak_e(0, 0);
    for (int f = 1; f < n; ++f) tensor = G.galg_mult(tensor, G.frak_e(0, f));
    CHECK(galg_equal(G.bold_e(), G.galg_mult(G.sigma_n(), tensor)));
    for (const auto& kind : {"sigma_n", "sigma_n_minus_1", "bold_e"}) {
      GroupAlg e = G.idempotent(kind);
      CHECK(galg_equal(G.galg_mult(e, e), e));
    }
    CHECK(galg_equal(G.galg_mult(G.one(), G.nu(0)), G.nu(0)));
  }
  CHECK_THROWS(WreathGroup(2, 2).idempotent("nu_i", 5));
}
