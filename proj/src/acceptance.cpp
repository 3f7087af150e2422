#include "cmc/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "cmc/cherednik.hpp"
#include "cmc/corresp.hpp"
#include "cmc/crossed.hpp"
#include "cmc/sra.hpp"

namespace cmc {

namespace {

struct Tally {
  long checks = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok && first_failure.empty()) first_failure = what;
  }
  bool ok() const { return first_failure.empty(); }
};

Scalar q(long a, int m = 1) { return Scalar(a, m); }

std::vector<CMPoint> generated_points(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CMPoint> out;
  for (int i = 0; i < count; ++i) out.push_back(random_cm(n, rng));
  return out;
}

std::string tag(int n, std::size_t i) { return "n=" + std::to_string(n) + " point " + std::to_string(i); }

void criterion1(Tally& t) {
  for (int n = 0; n <= 3; ++n) {
    auto pts = generated_points(n, 25, 100 + n);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      t.check(validate(pts[i]).ok(), "residual nonzero at " + tag(n, i));
      t.check((pts[i].w * pts[i].v)(0, 0) == q(-n), "w v != -n at " + tag(n, i));
    }
  }
  struct Case {
    int m;
    std::vector<long> dims;
    std::vector<Rational> tau;
  };
  for (const auto& c : std::vector<Case>{{2, {1, 1}, {1, 1}}, {2, {1, 1}, {2, 1}}, {3, {1, 1, 1}, {1, 1, 1}},
                                         {3, {1, 1, 1}, {1, 2, 3}}}) {
    FramedRep r = generate_nakajima(c.m, c.dims, c.tau);
    std::string name = "Nakajima m=" + std::to_string(c.m);
    t.check(validate(r).ok(), name + " residual nonzero");
    t.check((r.arrows.at("w") * r.arrows.at("v"))(0, 0) == r.lambda[0], name + " w v != lambda_inf");
  }
}

void criterion2(Tally& t) {
  const NCElement rel = weyl_relator();
  const auto words = enumerate_words({"x", "y"}, 4);
  for (int n = 0; n <= 3; ++n) {
    auto pts = generated_points(n, 25, 100 + n);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (const auto& a : words) {
        Matrix lhs = evaluate_on_vector(NCElement::word(a, 1) * rel, pts[i].letters(), pts[i].v);
        t.check(lhs == pts[i].v * epsilon(pts[i], a), "a([x,y]-1) v != eps(a) v at " + tag(n, i) + ", a=" + word_to_string(a));
      }
  }
}

void criterion3(Tally& t) {
  const NCElement rel = weyl_relator();
  const int d = 6;
  for (int n = 0; n <= 3; ++n) {
    auto pts = generated_points(n, 3, 300 + n);
    pts.push_back(generate_cm(n));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      IdealModel M;
      try {
        M = omega(pts[i], d);
      } catch (const InvariantViolation& e) {
        t.check(false, std::string("omega: ") + e.what() + " at " + tag(n, i));
        continue;
      }
      auto K = echelon_basis(M.K_basis, 1);
      auto J = echelon_basis(M.J_basis, 1);
      for (const auto& j : M.J_basis) t.check(in_span(K, j), "J not inside K at " + tag(n, i));
      for (const auto& k : eval_map_kernel(pts[i], d - 2))
        t.check(in_span(J, k * rel), "k([x,y]-1) not in J at " + tag(n, i));
      t.check(M.codim_profile.size() == static_cast<std::size_t>(d + 1), "profile length");
      for (int j = 0; j <= d; ++j) {
        t.check(M.codim_profile[j] <= n, "profile exceeds n at " + tag(n, i));
        if (j >= n - 1) t.check(M.codim_profile[j] == n, "profile below n at degree " + std::to_string(j) + ", " + tag(n, i));
      }
    }
  }
  CMPoint p{1, Matrix::from_ints({{0}}), Matrix::from_ints({{0}}), Matrix::from_ints({{1}}), Matrix::from_ints({{-1}})};
  IdealModel M = omega(p, 2);
  t.check(M.K_basis.size() == 6, "n=1, d=2: dim K != 6");
  t.check(M.J_basis.size() == 1, "n=1, d=2: dim J != 1");
  t.check(M.codim_profile == std::vector<long>{1, 1, 1}, "n=1, d=2: profile != (1,1,1)");
}

void criterion4(Tally& t) {
  std::vector<CMPoint> pts;
  const std::vector<std::pair<long, long>> spectra{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {-1, 1}, {-2, 0}, {2, 5}, {-3, 4}, {1, 4}};
  for (std::size_t i = 0; i < spectra.size(); ++i)
    pts.push_back(generate_cm({q(spectra[i].first), q(spectra[i].second)}, {q(static_cast<long>(i) % 3), q(0)}));
  std::vector<IdealModel> models;
  for (const auto& p : pts) models.push_back(omega(p));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      std::string ij = std::to_string(i) + "," + std::to_string(j);
      t.check(!are_isomorphic(pts[i], pts[j]), "points " + ij + " are isomorphic");
      t.check(distinct(models[i], models[j]), "models " + ij + " not distinct");
    }
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<long> dist(-4, 4);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Matrix g(2, 2, 1);
    do {
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) g(r, c) = q(dist(rng));
    } while (rank(g) < 2);
    t.check(!distinct(models[i], omega(gl_act(pts[i], g))), "conjugate of point " + std::to_string(i) + " gives a distinct model");
  }
}

void criterion5(Tally& t) {
  const NCElement rel = weyl_relator();
  for (int n = 0; n <= 3; ++n) {
    auto pts = generated_points(n, 25, 500 + n);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Matrix prod = rho(pts[i], rel) * rho(pts[i], rel + NCElement::constant(q(n)));
      t.check(prod.is_zero(), "identity fails at " + tag(n, i));
    }
  }
}

std::vector<HModule> n2_family() {
  return {fixture_n2(q(0), q(1), q(0), q(0)),   fixture_n2(q(0), q(2), q(0), q(0)),
          fixture_n2(q(1), q(3), q(2), q(-1)),  fixture_n2(Scalar(Rational(-1, 2), 1), q(5), q(1), q(1)),
          fixture_n2(q(2), q(-3), q(0), q(7)),  fixture_n2(q(4), q(-1), q(-2), q(3))};
}

void criterion6(Tally& t) {
  const auto words = enumerate_words({"x", "y"}, 4);
  auto fam = n2_family();
  for (std::size_t f = 0; f < fam.size(); ++f) {
    const HModule& V = fam[f];
    std::string name = "fixture " + std::to_string(f);
    t.check(verify_module(V).ok(), name + " is not a module");
    CMPoint P = eg_map(V);
    t.check(validate(P).ok(), name + ": eg_map output does not validate");
    t.check(rank(commutator(P.X, P.Y) + Matrix::identity(2, 1)) == 1, name + ": rank != 1");
    for (const auto& w : words) {
      Scalar ep = weight_via_module(V, w, WeightVariant::ep);
      t.check(ep == weight_via_module(V, w, WeightVariant::ep1), name + ": ep != ep1 at " + word_to_string(w));
      t.check(ep == epsilon(P, w), name + ": ep != eps(eg_map) at " + word_to_string(w));
    }
    WreathGroup G(2, 1);
    auto g = group_matrices(V, G);
    Matrix e = group_operator(g, G.sigma_n(), 2, 1), eb = group_operator(g, G.sigma_n_minus_1(), 2, 1);
    t.check(eb * (commutator(V.x[0], V.y[0]) - Matrix::identity(2, 1)) == e * q(-2), name + ": operator identity fails");
  }
}

void criterion7(Tally& t) {
  std::vector<HModule> mods{fixture_n1(q(0), q(0)), fixture_n1(q(1), q(0)), fixture_n1(q(2), q(3)),
                            fixture_n2(q(0), q(1), q(0), q(0)), fixture_n2(q(0), q(2), q(0), q(0))};
  std::vector<IdealModel> models;
  for (const auto& V : mods) {
    t.check(verify_module(V).ok() && is_simple(V), "fixture is not a simple module");
    models.push_back(xi_pipeline(V));
  }
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = i + 1; j < mods.size(); ++j)
      t.check(distinct(models[i], models[j]), "modules " + std::to_string(i) + "," + std::to_string(j) + " not separated");
}

void criterion8(Tally& t) {
  const std::vector<std::pair<int, int>> cases{{1, 2}, {2, 1}, {2, 2}, {3, 1}};
  // Crossed product S_tau.
  for (int m = 1; m <= 3; ++m) {
    std::vector<Scalar> tau;
    for (int i = 0; i < m; ++i) tau.push_back(q(i + 1, m));
    CrossedAlgebra S(m, tau);
    std::string name = "S_tau m=" + std::to_string(m);
    for (int d = 0; d <= 5; ++d) {
      std::set<Monomial> support;
      for (const auto& w : enumerate_words({"x", "y"}, d))
        for (int g = 0; g < m; ++g) {
          Word wg = w;
          wg.push_back("g" + std::to_string(g));
          PBWElement nf = S.normal_form(wg);
          for (const auto& [mo, c] : nf.terms()) support.insert(mo);
        }
      t.check(support.size() == static_cast<std::size_t>(m * (d + 1) * (d + 2) / 2), name + ": count at d=" + std::to_string(d));
    }
    for (const auto& w : enumerate_words({"x", "y", "g"}, 5)) {
      PBWElement whole = S.normal_form(w);
      t.check(whole == S.rewrite_normal_form(w), name + ": rewriting routes disagree");
      for (std::size_t cut = 1; cut < w.size(); ++cut) {
        Word u(w.begin(), w.begin() + cut), v(w.begin() + cut, w.end());
        t.check(S.mul(S.normal_form(u), S.normal_form(v)) == whole, name + ": NF(NF(u) v) != NF(u v)");
      }
    }
  }
  // SRA.
  for (auto [m, n] : cases) {
    std::vector<Scalar> lam{q(0, m)};
    Scalar s(m);
    for (int i = 0; i < m; ++i) {
      lam.push_back(q(2 * i + 1, m));
      s += lam.back();
    }
    lam[0] = -s * q(n, m);
    WeightParams wp = params_from_weight(lam, m, n);
    SRAAlgebra H({n, m, wp.k, wp.c_alpha});
    std::string name = "SRA (m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
    const int order = H.group().order();
    std::vector<Letter> xy;
    for (int i = 0; i < n; ++i) xy.push_back({Letter::X, i});
    for (int i = 0; i < n; ++i) xy.push_back({Letter::Y, i});
    std::vector<std::vector<Letter>> words{{}}, frontier{{}};
    std::set<Monomial> support;
    for (int d = 0; d <= 5; ++d) {
      if (d > 0) {
        std::vector<std::vector<Letter>> next;
        for (const auto& w : frontier)
          for (const auto& l : xy) {
            auto v = w;
            v.push_back(l);
            next.push_back(v);
          }
        frontier = std::move(next);
        words.insert(words.end(), frontier.begin(), frontier.end());
      }
      for (const auto& w : frontier)
        for (int g = 0; g < order; ++g) {
          auto wg = w;
          wg.push_back({Letter::G, g});
          PBWElement nf = H.normal_form(wg);
          for (const auto& [mo, c] : nf.terms()) support.insert(mo);
        }
      long binom = 1;
      for (int i = 1; i <= 2 * n; ++i) binom = binom * (d + i) / i;
      t.check(static_cast<long>(support.size()) == binom * order, name + ": count at d=" + std::to_string(d));
    }
    auto gens = H.generator_letters();
    std::vector<std::vector<Letter>> gwords{{}};
    frontier = {{}};
    for (int len = 1; len <= 5; ++len) {
      std::vector<std::vector<Letter>> next;
      for (const auto& w : frontier)
        for (const auto& l : gens) {
          auto v = w;
          v.push_back(l);
          next.push_back(v);
        }
      frontier = std::move(next);
      gwords.insert(gwords.end(), frontier.begin(), frontier.end());
    }
    for (const auto& w : gwords) {
      PBWElement whole = H.normal_form(w);
      t.check(whole == H.engine().rewrite_normal_form(w), name + ": rewriting routes disagree");
      for (std::size_t cut = 1; cut < w.size(); ++cut) {
        std::vector<Letter> u(w.begin(), w.begin() + cut), v(w.begin() + cut, w.end());
        t.check(H.mul(H.normal_form(u), H.normal_form(v)) == whole, name + ": NF(NF(u) v) != NF(u v)");
      }
    }
  }
  // pi_tau_iso kills the defining relations (and the ideal they generate).
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> dist(-9, 9);
  for (int m = 1; m <= 4; ++m) {
    std::vector<Scalar> tau;
    for (int i = 0; i < m; ++i) tau.emplace_back(Rational(dist(rng), 1 + (dist(rng) + 9) % 5), m);
    CrossedAlgebra S(m, tau);
    Quiver pq = S.path_quiver();
    for (int k = 0; k < m; ++k) {
      const int p = (k + m - 1) % m;
      NCElement rel = NCElement::word({x_name(m, k), y_name(m, k)}, m) - NCElement::word({y_name(m, p), x_name(m, p)}, m) -
                      NCElement::word({"e" + std::to_string(k)}, m, tau[k]);
      t.check(S.pi_tau_iso(rel).is_zero(), "pi_tau_iso relation at vertex " + std::to_string(k) + ", m=" + std::to_string(m));
      for (const auto& a : enumerate_paths(pq, 0, 2))
        for (const auto& b : enumerate_paths(pq, k, 2)) {
          if (a.empty() || b.empty()) continue;
          NCElement sandwiched = NCElement::word(a, m) * rel * NCElement::word(b, m);
          t.check(S.pi_tau_iso(sandwiched).is_zero(), "pi_tau_iso on a relation multiple, m=" + std::to_string(m));
        }
    }
  }
}

void criterion9(Tally& t) {
  const std::vector<std::pair<int, int>> cases{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}};
  for (auto [m, n] : cases) {
    std::vector<Rational> tau;
    for (int i = 0; i < m; ++i) tau.emplace_back(i + 1);
    ThetaReport r = verify_theta(m, n, tau, 3);
    std::string name = "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
    t.check(r.passed(), name + ": " + (r.failures.empty() ? std::string() : r.failures.front()));
    t.check(r.pairs_checked > 0 && r.relations_checked > 0, name + ": nothing checked");
  }
  ThetaReport control = verify_theta(2, 2, {Rational(1), Rational(2)}, 3, WreathConvention::B);
  t.check(!control.passed(), "flipped convention passed");
}

void criterion10(Tally& t) {
  for (int m = 1; m <= 3; ++m) {
    Quiver q = frame(build_cyclic(m));
    auto roots = brute_force_roots(q, 4);
    const std::size_t n = q.vertices.size();
    DimVector a(n, 0);
    for (;;) {
      std::size_t i = 0;
      while (i < n && a[i] == 4) a[i++] = 0;
      if (i == n) break;
      ++a[i];
      std::ostringstream os;
      for (long x : a) os << x << ' ';
      t.check(is_positive_root(q, a) == (roots.count(a) > 0), "m=" + std::to_string(m) + " alpha=" + os.str());
    }
  }
  t.check(!is_regular({Rational(1), Rational(-1)}), "(1,-1) regular");
  t.check(is_regular({Rational(1), Rational(1)}), "(1,1) not regular");
  t.check(is_regular({Rational(2), Rational(1)}), "(2,1) not regular");
  Quiver q1 = frame(build_cyclic(1));
  for (long n = 0; n <= 8; ++n) t.check(tits_form(q1, {1, n}) == 1 - n, "q((1," + std::to_string(n) + ")) != 1-n");
}

void criterion11(Tally& t) {
  for (int n = 0; n <= 3; ++n) {
    auto pts = generated_points(n, 3, 1100 + n);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const CMPoint& p = pts[i];
      IdealModel M = omega(p, 4);
      TauModel T = omega_tau(to_framed(p), 4);
      t.check(T.codim_profile == M.codim_profile, "omega_tau profile at " + tag(n, i));
      t.check(T.epsilon == fingerprint(p, 4), "omega_tau weights at " + tag(n, i));
      bool same = T.K_basis.size() == M.K_basis.size();
      for (std::size_t k = 0; same && k < T.K_basis.size(); ++k) {
        NCElement lower(1);
        for (const auto& [w, c] : T.K_basis[k].terms()) {
          Word lw;
          for (const auto& l : w) lw.push_back(l == "X" ? "x" : "y");
          lower.add_term(lw, c);
        }
        same = lower == M.K_basis[k];
      }
      t.check(same, "omega_tau kernel basis at " + tag(n, i));
      // Residuals agree on valid and on perturbed data.
      CMPoint bad = p;
      if (n > 0) bad.X(0, n - 1) += q(1);
      if (n > 0) bad.w(0, 0) += q(2);
      for (const CMPoint* c : {&p, static_cast<const CMPoint*>(&bad)}) {
        Residuals a = validate(*c), b = validate(to_framed(*c));
        t.check(a.at("moment") == b.at("0") && a.at("trace") == b.at("inf"), "framed vs CM residuals at " + tag(n, i));
      }
    }
  }
  for (int n = 2; n <= 3; ++n) {
    Scalar c(Rational(3, 2), 1);
    SRAAlgebra H({n, 1, c, {}});
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        PBWElement comm = H.mul(H.x(i), H.y(j)) - H.mul(H.y(j), H.x(i));
        PBWElement expect(1);
        if (i != j) {
          expect = H.g(H.group().transposition(i, j)) * c;
        } else {
          for (int k = 0; k < n; ++k)
            if (k != i) expect -= H.g(H.group().transposition(i, k)) * c;
        }
        t.check(comm == expect, "SRA m=1 commutator [x" + std::to_string(i + 1) + ",y" + std::to_string(j + 1) + "]");
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) {
          int s = H.group().transposition(i, j);
          t.check(H.mul(H.g(s), H.x(i)) == H.mul(H.x(j), H.g(s)), "SRA m=1 s_ij x_i = x_j s_ij");
          t.check(H.mul(H.g(s), H.y(i)) == H.mul(H.y(j), H.g(s)), "SRA m=1 s_ij y_i = y_j s_ij");
        }
  }
}

struct Criterion {
  const char* title;
  double limit;
  void (*run)(Tally&);
};

const Criterion kCriteria[] = {
    {"CM/moment-map exactness", 5, criterion1},
    {"well-definedness a([x,y]-1) v = eps(a) v", 0, criterion2},
    {"ideal-model structure", 30, criterion3},
    {"injectivity on C_2", 0, criterion4},
    {"rho([x,y]-1) rho([x,y]+n-1) = 0", 0, criterion5},
    {"module-to-point map and weights (n=2 family)", 10, criterion6},
    {"module pipeline separates fixtures", 0, criterion7},
    {"crossed/SRA normal forms and pi_tau_iso", 0, criterion8},
    {"theta map verification", 60, criterion9},
    {"roots and regularity", 0, criterion10},
    {"m=1 coherence", 0, criterion11},
};

}  // namespace

CMPoint random_cm(int n, std::mt19937_64& rng) {
  std::vector<long> pool(19);
  std::iota(pool.begin(), pool.end(), -9);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::uniform_int_distribution<long> dist(-5, 5);
  std::vector<Scalar> spectrum, ydiag;
  for (int i = 0; i < n; ++i) {
    spectrum.push_back(q(pool[i]));
    ydiag.push_back(q(dist(rng)));
  }
  return generate_cm(spectrum, ydiag);
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > 11) throw std::invalid_argument("criterion id must be 1..11");
  const Criterion& s = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = s.title;
  r.limit = s.limit;
  Tally t;
  auto t0 = std::chrono::steady_clock::now();
  try {
    s.run(t);
  } catch (const std::exception& e) {
    t.check(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.checks = t.checks;
  r.passed = t.ok() && (r.limit == 0 || r.seconds < r.limit);
  if (!t.ok()) r.detail = t.first_failure;
  else if (!r.passed) r.detail = "over time limit";
  return r;
}

std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 11; ++id) {
    out.push_back(run_criterion(id));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
  std::string line = std::string(r.passed ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) + ": " + r.title +
                     " (" + std::to_string(r.checks) + " checks, " + buf;
  if (r.limit > 0) {
    std::snprintf(buf, sizeof buf, " < %.0fs", r.limit);
    line += buf;
  }
  line += ")";
  if (!r.detail.empty()) line += " -- " + r.detail;
  return line;
}


std::set<DimVector> brute_force_roots(const Quiver& q, long B) {
  const std::size_t n = q.vertices.size();
  std::vector<DimVector> box{DimVector(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<DimVector> next;
    for (const auto& v : box)
      for (long k = 0; k <= B; ++k) {
        DimVector w = v;
        w[i] = k;
        next.push_back(w);
      }
    box = next;
  }
  auto pair_e = [&](const DimVector& a, std::size_t i) {
    DimVector e(n, 0);
    e[i] = 1;
    return symmetric_pairing(q, a, e);
  };
  auto connected = [&](const DimVector& a) {
    std::set<int> seen;
    std::vector<int> st;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i]) {
        st.push_back(static_cast<int>(i));
        seen.insert(static_cast<int>(i));
        break;
      }
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (const auto& ar : q.arrows) {
        for (auto [x, y] : {std::pair{ar.src, ar.tgt}, std::pair{ar.tgt, ar.src}})
          if (x == v && a[y] && !seen.count(y)) {
            seen.insert(y);
            st.push_back(y);
          }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] && !seen.count(static_cast<int>(i))) return false;
    return !seen.empty();
  };
  std::set<DimVector> roots;
  std::vector<DimVector> frontier;
  for (const auto& a : box) {
    bool nonzero = false;
    for (long x : a) nonzero = nonzero || x;
    if (!nonzero) continue;
    bool fund = connected(a);
    for (std::size_t i = 0; i < n && fund; ++i) fund = pair_e(a, i) <= 0;
    if (fund) frontier.push_back(a);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (q.loops_at(static_cast<int>(i)) == 0) {
      DimVector e(n, 0);
      e[i] = 1;
      frontier.push_back(e);
    }
  while (!frontier.empty()) {
    DimVector a = frontier.back();
    frontier.pop_back();
    if (!roots.insert(a).second) continue;
    for (std::size_t i = 0; i < n; ++i) {
      if (q.loops_at(static_cast<int>(i))) continue;
      long p = pair_e(a, i);
      if (p >= 0) continue;
      DimVector b = a;
      b[i] -= p;
      if (b[i] <= B) frontier.push_back(b);
    }
  }
  return roots;
}


}  // namespace cmc
