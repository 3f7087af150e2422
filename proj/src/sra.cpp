#include "cmc/sra.hpp"

#include <sstream>

#include "cmc/repvar.hpp"

namespace cmc {

SRAAlgebra::SRAAlgebra(const SRAParams& p, WreathConvention conv) : p_(p) {
  const int n = p.n, m = p.m;
  if (n < 1 || m < 1) throw std::invalid_argument("SRA needs n, m >= 1");
  if (static_cast<int>(p.c.size()) != m - 1) throw std::invalid_argument("c must have m - 1 entries");
  if (p_.k.conductor() != m) throw ConductorMismatch("k must lie in Q(zeta_m)");
  G_ = std::make_unique<WreathGroup>(n, m, conv);
  const auto& T = G_->table();
  std::vector<std::vector<PBWAlgebra::Action>> xa(T.order), ya(T.order);
  for (int g = 0; g < T.order; ++g) {
    const auto& e = G_->element(g);
    for (int i = 0; i < n; ++i) {
      xa[g].push_back({e.sigma[i], Scalar::root_of_unity(m, e.gamma[i])});
      ya[g].push_back({e.sigma[i], Scalar::root_of_unity(m, -e.gamma[i])});
    }
  }
  auto add = [](GroupAlg& a, int g, const Scalar& c) {
    auto [it, ins] = a.emplace(g, c);
    if (!ins) it->second += c;
  };
  // s_ij a_i^l a_j^{-l}
  auto refl = [&](int i, int j, int l) { return T.mul(T.mul(G_->transposition(i, j), G_->alpha(i, l)), G_->alpha(j, -l)); };
  std::vector<std::vector<GroupAlg>> C(n, std::vector<GroupAlg>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      GroupAlg& c = C[i][j];
      if (i == j) {
        for (int jj = 0; jj < n; ++jj)
          if (jj != i)
            for (int l = 0; l < m; ++l) add(c, refl(i, jj, l), p_.k);
        for (int l = 1; l < m; ++l) add(c, G_->alpha(i, l), p_.c[l - 1]);
      } else {
        for (int l = 0; l < m; ++l) add(c, refl(i, j, l), -p_.k * Scalar::root_of_unity(m, l));
      }
      std::erase_if(c, [](const auto& kv) { return kv.second.is_zero(); });
    }
  }
  engine_ = std::make_unique<PBWAlgebra>(n, m, T, xa, ya, C);
}

std::vector<Letter> SRAAlgebra::generator_letters() const {
  std::vector<Letter> out;
  for (int i = 0; i < p_.n; ++i) out.push_back({Letter::X, i});
  for (int i = 0; i < p_.n; ++i) out.push_back({Letter::Y, i});
  for (int i = 0; i + 1 < p_.n; ++i) out.push_back({Letter::G, G_->transposition(i, i + 1)});
  if (p_.m > 1) out.push_back({Letter::G, G_->alpha(0, 1)});
  return out;
}

WeightParams params_from_weight(const std::vector<Scalar>& lambda, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("params_from_weight needs m, n >= 1");
  if (static_cast<int>(lambda.size()) != m + 1) throw std::invalid_argument("lambda must have m + 1 entries");
  WeightParams w;
  const Scalar inf = lambda[0];
  const Scalar nn(n, m), mm(m, m);
  w.k = inf / (mm * nn);
  w.c_frak.push_back(lambda[1] + inf / nn);
  for (int i = 1; i < m; ++i) w.c_frak.push_back(lambda[i + 1]);
  for (int l = 1; l < m; ++l) {
    Scalar s(m);
    for (int i = 0; i < m; ++i) s += w.c_frak[i] * Scalar::root_of_unity(m, static_cast<long>(i) * l);
    w.c_alpha.push_back(s / mm);
  }
  return w;
}

ThetaMap::ThetaMap(const SRAAlgebra& H, const std::vector<Scalar>& lambda)
    : H_(H), lambda_(lambda), q_(framed_double_cyclic(H.params().m)) {
  const int m = H.params().m, n = H.params().n;
  const WreathGroup& G = H.group();
  bold_e_ = H.galg(G.bold_e());
  for (int i = 0; i < m; ++i) {
    PBWElement nu = H.galg(G.nu(i));
    images_[x_name(m, i)] = H.mul(nu, H.x(0));
    images_[y_name(m, i)] = H.mul(H.y(0), nu) * Scalar(-1, m);
    images_["e" + std::to_string(i)] = nu;
  }
  GroupAlg v;
  for (int j = 0; j < n; ++j) v[j == 0 ? G.table().identity : G.transposition(0, j)] = lambda[0] / Scalar(n, m);
  images_["v"] = H.galg(v);
  images_["w"] = H.galg(G.nu(0));
  images_["einf"] = bold_e_;
}

PBWElement ThetaMap::raw(const Word& w) const {
  PBWElement t = H_.engine().one();
  for (const auto& l : w) {
    auto it = images_.find(l);
    if (it == images_.end()) throw std::invalid_argument("theta: unknown letter '" + l + "'");
    t = H_.mul(t, it->second);
  }
  return t;
}

PBWElement ThetaMap::operator()(const Word& b) const {
  if (b.empty()) throw std::invalid_argument("theta: use einf for the trivial path at inf");
  NCElement red = path_reduce(q_, NCElement::word(b, H_.params().m));
  if (red.is_zero()) return PBWElement(H_.params().m);
  const Word& w = red.terms().begin()->first;
  const int inf = 0;
  bool ok;
  if (w.size() == 1 && !q_.has_arrow(w.front())) {
    ok = w.front() == "einf";
  } else {
    auto end = path_end(q_, inf, w);
    ok = q_.arrow(w.front()).from() == inf && end && *end == inf;
  }
  if (!ok) throw std::invalid_argument("theta: not an element of e_inf P e_inf");
  return H_.mul(raw(b), bold_e_) * red.terms().begin()->second;
}

PBWElement ThetaMap::operator()(const NCElement& b) const {
  PBWElement out(H_.params().m);
  for (const auto& [w, c] : b.terms()) out += (*this)(w) * c;
  return out;
}

namespace {

NCElement word_el(const Word& w, int m) { return NCElement::word(w, m); }

std::string describe(const PBWElement& e) {
  std::ostringstream os;
  os << e.terms().size() << " nonzero terms";
  if (!e.is_zero()) {
    const auto& [mono, c] = *e.terms().begin();
    os << ", e.g. coefficient " << c << " at group element " << mono.g;
  }
  return os.str();
}

}  // namespace

ThetaReport verify_theta(int m, int n, const std::vector<Rational>& tau, int ell, WreathConvention conv) {
  ThetaReport rep;
  rep.m = m;
  rep.n = n;
  rep.ell = ell;
  std::vector<long> dims(m, n);
  std::vector<Scalar> lambda;
  for (const auto& l : lambda_from_tau(tau, dims)) lambda.emplace_back(l.rational(), m);
  WeightParams wp = params_from_weight(lambda, m, n);
  SRAAlgebra H({n, m, wp.k, wp.c_alpha}, conv);
  ThetaMap theta(H, lambda);
  const PBWElement& E = theta.bold_e();
  auto fail = [&](const std::string& what, const PBWElement& diff) { rep.failures.push_back(what + ": " + describe(diff)); };

  auto sandwich = [&](const NCElement& mid) {
    return word_el({"v"}, m) * mid * word_el({"w"}, m);
  };
  const int m0 = m;
  // wv = X0 Y0 - Y_{m-1} X_{m-1} - lambda_0 e_0
  NCElement wv = word_el({x_name(m, 0), y_name(m, 0)}, m) - word_el({y_name(m, m - 1), x_name(m, m - 1)}, m) -
                 NCElement::word({"e0"}, m, lambda[1]);

  auto paths = closed_paths_at_zero(m, ell);
  for (const auto& p : paths) {
    for (const auto& q : paths) {
      if (static_cast<int>(p.size() + q.size()) > ell) continue;
      ++rep.pairs_checked;
      NCElement pe = p.empty() ? NCElement::word({"e0"}, m) : word_el(p, m);
      NCElement qe = q.empty() ? NCElement::word({"e0"}, m) : word_el(q, m);
      PBWElement lhs = H.mul(theta(sandwich(pe)), theta(sandwich(qe)));
      PBWElement rhs = theta(sandwich(pe * wv * qe));
      if (!(lhs == rhs))
        fail("multiplicativity at v" + word_to_string(p) + "w * v" + word_to_string(q) + "w", lhs - rhs);
    }
  }
  // Relations sandwiched between paths 0 -> k and k -> 0.
  Quiver cyc = framed_double_cyclic(m);
  std::erase_if(cyc.arrows, [](const Arrow& a) { return a.name == "v" || a.name == "w"; });
  for (int k = 0; k < m0; ++k) {
    const int pk = (k + m - 1) % m;
    NCElement r = word_el({x_name(m, k), y_name(m, k)}, m) - word_el({y_name(m, pk), x_name(m, pk)}, m) -
                  NCElement::word({"e" + std::to_string(k)}, m, lambda[k + 1]);
    if (k == 0) r -= word_el({"w", "v"}, m);
    const int vk = k + 1;  // vertex index in the framed quiver
    for (const auto& a : enumerate_paths(cyc, 1, ell, vk)) {
      for (const auto& b : enumerate_paths(cyc, vk, ell - static_cast<int>(a.size()), 1)) {
        ++rep.relations_checked;
        NCElement ae = a.empty() ? NCElement::word({"e0"}, m) : word_el(a, m);
        NCElement be = b.empty() ? NCElement::word({"e0"}, m) : word_el(b, m);
        PBWElement img = theta(sandwich(ae * r * be));
        if (!img.is_zero()) fail("relation at vertex " + std::to_string(k) + " between " + word_to_string(a) + " and " + word_to_string(b), img);
      }
    }
  }
  // vw = lambda_inf e_inf.
  {
    PBWElement d = theta(word_el({"v", "w"}, m)) - E * lambda[0];
    ++rep.relations_checked;
    if (!d.is_zero()) fail("vw = lambda_inf e_inf", d);
  }
  // Images are fixed by bold e on both sides; theta(e_inf) is idempotent.
  for (const auto& p : paths) {
    PBWElement t = theta(sandwich(p.empty() ? NCElement::word({"e0"}, m) : word_el(p, m)));
    if (!(H.mul(E, t) == t) || !(H.mul(t, E) == t)) fail("bold-e fixedness at v" + word_to_string(p) + "w", t);
  }
  if (!(H.mul(E, E) == E)) fail("bold e idempotent", H.mul(E, E) - E);
  // nu-compatibility.
  for (int i = 0; i < m; ++i) {
    PBWElement nu_i = H.galg(H.group().nu(i)), nu_next = H.galg(H.group().nu((i + 1) % m));
    PBWElement d1 = H.mul(H.x(0), nu_next) - H.mul(nu_i, H.x(0));
    PBWElement d2 = H.mul(H.y(0), nu_i) - H.mul(nu_next, H.y(0));
    if (!d1.is_zero()) fail("x1 nu_" + std::to_string((i + 1) % m) + " = nu_" + std::to_string(i) + " x1", d1);
    if (!d2.is_zero()) fail("y1 nu_" + std::to_string(i) + " = nu_" + std::to_string((i + 1) % m) + " y1", d2);
  }
  // Not unital on the whole path algebra: theta(e_inf e_0) = 0, theta(e_inf) theta(e_0) != 0.
  {
    PBWElement prod = theta(NCElement::word({"einf", "e0"}, m));
    PBWElement raw_prod = H.mul(theta.raw({"einf"}), theta.raw({"e0"}));
    if (!prod.is_zero()) fail("theta(e_inf e_0) = 0", prod);
    if (raw_prod.is_zero()) fail("theta(e_inf) theta(e_0) != 0", raw_prod);
  }
  if (m == 1) {
    rep.spherical_compared = true;
    rep.spherical_agrees = true;
    for (const auto& a : enumerate_words({"X", "Y"}, ell)) {
      PBWElement direct = theta(sandwich(a.empty() ? NCElement::word({"e0"}, m) : word_el(a, m)));
      PBWElement spherical(m);
      for (int i = 0; i < n; ++i) {
        std::vector<Letter> letters;
        for (const auto& l : a) letters.push_back({l == "X" ? Letter::X : Letter::Y, i});
        spherical -= H.mul(H.mul(E, H.normal_form(letters)), E);
      }
      if (!(direct == spherical)) rep.spherical_agrees = false;
    }
  }
  return rep;
}

}  // namespace cmc
