#include "cmc/crossed.hpp"

#include <stdexcept>

namespace cmc {

FiniteGroup cyclic_group(int m) {
  FiniteGroup G;
  G.order = m;
  G.identity = 0;
  G.table.resize(m * m);
  G.inv.resize(m);
  for (int a = 0; a < m; ++a) {
    G.inv[a] = (m - a) % m;
    for (int b = 0; b < m; ++b) G.table[a * m + b] = (a + b) % m;
  }
  return G;
}

CrossedAlgebra::CrossedAlgebra(int m, const std::vector<Scalar>& tau) : m_(m), tau_(tau) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (static_cast<int>(tau.size()) != m) throw std::invalid_argument("tau must have length m");
  for (const auto& t : tau)
    if (t.conductor() != m) throw ConductorMismatch("tau entries must lie in Q(zeta_m)");
  quiver_ = double_quiver(build_cyclic(m));
  std::vector<std::vector<PBWAlgebra::Action>> xa(m), ya(m);
  for (int j = 0; j < m; ++j) {
    xa[j].push_back({0, Scalar::root_of_unity(m, j)});
    ya[j].push_back({0, Scalar::root_of_unity(m, -j)});
  }
  // y x = x y - tau.
  GroupAlg c;
  for (int i = 0; i < m; ++i)
    for (const auto& [g, v] : frak_e_alg(i)) {
      Scalar t = -tau_[i] * v;
      auto [it, ins] = c.emplace(g, t);
      if (!ins) it->second += t;
    }
  std::erase_if(c, [](const auto& kv) { return kv.second.is_zero(); });
  engine_ = std::make_unique<PBWAlgebra>(1, m, cyclic_group(m), xa, ya, std::vector<std::vector<GroupAlg>>{{c}});
}

PBWElement CrossedAlgebra::g(int j) const { return engine_->group_element(((j % m_) + m_) % m_); }

GroupAlg CrossedAlgebra::frak_e_alg(int i) const {
  GroupAlg e;
  const Scalar inv_m(Rational(1, m_), m_);
  for (int j = 0; j < m_; ++j) e[j] = Scalar::root_of_unity(m_, static_cast<long>(i) * j) * inv_m;
  return e;
}

PBWElement CrossedAlgebra::tau_element() const {
  PBWElement t(m_);
  for (int i = 0; i < m_; ++i) t += frak_e(i) * tau_[i];
  return t;
}

std::vector<Letter> CrossedAlgebra::letters(const Word& w) const {
  std::vector<Letter> out;
  for (const auto& l : w) {
    if (l == "x") out.push_back({Letter::X, 0});
    else if (l == "y") out.push_back({Letter::Y, 0});
    else if (!l.empty() && l[0] == 'g') {
      int j = l.size() == 1 ? 1 : std::stoi(l.substr(1));
      out.push_back({Letter::G, ((j % m_) + m_) % m_});
    } else {
      throw std::invalid_argument("bad crossed-product letter '" + l + "'");
    }
  }
  return out;
}

PBWElement CrossedAlgebra::normal_form(const Word& w) const { return engine_->normal_form(letters(w)); }

PBWElement CrossedAlgebra::normal_form(const NCElement& e) const {
  PBWElement out(m_);
  for (const auto& [w, c] : e.terms()) out += normal_form(w) * c;
  return out;
}

PBWElement CrossedAlgebra::rewrite_normal_form(const Word& w) const {
  return engine_->rewrite_normal_form(letters(w));
}

PBWElement CrossedAlgebra::o_tau_element(int a, int b) const {
  Word w(a, "x");
  w.insert(w.end(), b, "y");
  return mul(mul(frak_e(0), normal_form(w)), frak_e(0));
}

PBWElement CrossedAlgebra::pi_tau_iso(const NCElement& path) const {
  PBWElement out(m_);
  for (const auto& [w, c] : path.terms()) {
    PBWElement t = engine_->one();
    for (const auto& l : w) {
      PBWElement f(m_);
      if (l.size() >= 2 && l[0] == 'e' && l != "einf") {
        f = frak_e(std::stoi(l.substr(1)));
      } else if (!l.empty() && (l[0] == 'X' || l[0] == 'Y')) {
        int i = l.size() == 1 ? 0 : std::stoi(l.substr(1));
        if (i < 0 || i >= m_) throw std::invalid_argument("arrow index out of range: " + l);
        f = l[0] == 'X' ? mul(frak_e(i), x()) : mul(frak_e((i + 1) % m_), y());
      } else {
        throw std::invalid_argument("pi_tau_iso: path through the framing vertex ('" + l + "')");
      }
      t = mul(t, f);
    }
    out += t * c;
  }
  return out;
}

NCElement CrossedAlgebra::crossed_to_path(const PBWElement& e) const {
  const int m = m_;
  auto sum_letters = [&](char c) {
    NCElement s(m);
    for (int i = 0; i < m; ++i) s.add_term({c == 'X' ? x_name(m, i) : y_name(m, i)}, Scalar::one(m));
    return s;
  };
  const NCElement X = sum_letters('X'), Y = sum_letters('Y');
  NCElement out(m);
  for (const auto& [mono, c] : e.terms()) {
    NCElement t(m);
    for (int i = 0; i < m; ++i) t.add_term({idempotent_name(quiver_, i)}, Scalar::one(m));
    for (int k = 0; k < mono.a[0]; ++k) t = path_reduce(quiver_, t * X);
    for (int k = 0; k < mono.b[0]; ++k) t = path_reduce(quiver_, t * Y);
    NCElement gpath(m);
    for (int i = 0; i < m; ++i)
      gpath.add_term({idempotent_name(quiver_, i)}, Scalar::root_of_unity(m, -static_cast<long>(i) * mono.g));
    out += path_reduce(quiver_, t * gpath) * c;
  }
  return out;
}

NCElement project_le1(const NCElement& p) {
  NCElement out(p.conductor());
  for (const auto& [w, c] : p.terms()) {
    bool through_inf = false;
    for (const auto& l : w) through_inf = through_inf || l == "v" || l == "w" || l == "einf";
    if (!through_inf) out.add_term(w, c);
  }
  return out;
}

}  // namespace cmc
