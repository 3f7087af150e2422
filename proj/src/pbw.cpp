#include "cmc/pbw.hpp"

#include <stdexcept>

namespace cmc {

int Monomial::degree() const {
  int d = 0;
  for (int e : a) d += e;
  for (int e : b) d += e;
  return d;
}

void PBWElement::add_term(const Monomial& mono, const Scalar& c) {
  if (c.conductor() != field_) throw ConductorMismatch("PBW element conductor mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PBWElement& PBWElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

PBWAlgebra::PBWAlgebra(int n, int field, FiniteGroup group, std::vector<std::vector<Action>> x_action,
                       std::vector<std::vector<Action>> y_action,
                       std::vector<std::vector<GroupAlg>> commutators)
    : n_(n),
      field_(field),
      group_(std::move(group)),
      xa_(std::move(x_action)),
      ya_(std::move(y_action)),
      comm_(std::move(commutators)) {
  if (static_cast<int>(xa_.size()) != group_.order || static_cast<int>(ya_.size()) != group_.order)
    throw std::invalid_argument("group action tables have the wrong size");
  if (static_cast<int>(comm_.size()) != n_) throw std::invalid_argument("commutator table has the wrong size");
}

PBWElement PBWAlgebra::monomial(const Monomial& m) const {
  PBWElement e(field_);
  e.add_term(m, Scalar::one(field_));
  return e;
}

PBWElement PBWAlgebra::one() const { return monomial({std::vector<int>(n_, 0), std::vector<int>(n_, 0), group_.identity}); }

PBWElement PBWAlgebra::scalar(const Scalar& s) const { return one() * s; }

PBWElement PBWAlgebra::x(int i) const {
  Monomial m{std::vector<int>(n_, 0), std::vector<int>(n_, 0), group_.identity};
  m.a[i] = 1;
  return monomial(m);
}

PBWElement PBWAlgebra::y(int i) const {
  Monomial m{std::vector<int>(n_, 0), std::vector<int>(n_, 0), group_.identity};
  m.b[i] = 1;
  return monomial(m);
}

PBWElement PBWAlgebra::group_element(int g) const {
  return monomial({std::vector<int>(n_, 0), std::vector<int>(n_, 0), g});
}

PBWElement PBWAlgebra::group_algebra(const GroupAlg& a) const {
  PBWElement e(field_);
  for (const auto& [g, c] : a) e.add_term({std::vector<int>(n_, 0), std::vector<int>(n_, 0), g}, c);
  return e;
}

const PBWElement& PBWAlgebra::straighten(const std::vector<int>& b, int j) const {
  auto key = std::make_pair(b, j);
  {
    std::lock_guard lock(memo_mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return *it->second;
  }
  // y^b = y^{b'} y_i with i the last variable present.
  int i = -1;
  for (int t = n_ - 1; t >= 0 && i < 0; --t)
    if (b[t] > 0) i = t;
  PBWElement result(field_);
  if (i < 0) {
    result = x(j);
  } else {
    std::vector<int> bp = b;
    --bp[i];
    // y^{b'} (x_j y_i + C(i,j))
    result = mul_letter(straighten(bp, j), {Letter::Y, i});
    for (const auto& [g, c] : comm_[i][j]) result.add_term({std::vector<int>(n_, 0), bp, g}, c);
  }
  std::lock_guard lock(memo_mu_);
  auto [it, inserted] = memo_.emplace(key, std::make_unique<PBWElement>(std::move(result)));
  return *it->second;
}

PBWElement PBWAlgebra::mul_letter(const PBWElement& e, const Letter& l) const {
  PBWElement out(field_);
  for (const auto& [m, c] : e.terms()) {
    switch (l.kind) {
      case Letter::G: {
        Monomial r = m;
        r.g = group_.mul(m.g, l.index);
        out.add_term(r, c);
        break;
      }
      case Letter::Y: {
        const Action& act = ya_[m.g][l.index];
        Monomial r = m;
        ++r.b[act.target];
        out.add_term(r, c * act.coeff);
        break;
      }
      case Letter::X: {
        const Action& act = xa_[m.g][l.index];
        Scalar cc = c * act.coeff;
        bool trivial_b = true;
        for (int e2 : m.b) trivial_b = trivial_b && e2 == 0;
        if (trivial_b) {
          Monomial r = m;
          ++r.a[act.target];
          out.add_term(r, cc);
          break;
        }
        // x^a (y^b x_k) g
        for (const auto& [s, sc] : straighten(m.b, act.target).terms()) {
          Monomial r = s;
          for (int t = 0; t < n_; ++t) r.a[t] += m.a[t];
          r.g = group_.mul(s.g, m.g);
          out.add_term(r, cc * sc);
        }
        break;
      }
    }
  }
  return out;
}

std::vector<Letter> PBWAlgebra::spell(const Monomial& m) const {
  std::vector<Letter> w;
  for (int t = 0; t < n_; ++t)
    for (int k = 0; k < m.a[t]; ++k) w.push_back({Letter::X, t});
  for (int t = 0; t < n_; ++t)
    for (int k = 0; k < m.b[t]; ++k) w.push_back({Letter::Y, t});
  if (m.g != group_.identity) w.push_back({Letter::G, m.g});
  return w;
}

PBWElement PBWAlgebra::mul(const PBWElement& a, const PBWElement& b) const {
  PBWElement out(field_);
  for (const auto& [m, c] : b.terms()) {
    PBWElement t = a;
    for (const auto& l : spell(m)) t = mul_letter(t, l);
    out += t * c;
  }
  return out;
}

PBWElement PBWAlgebra::normal_form(const std::vector<Letter>& word) const {
  PBWElement e = one();
  for (const auto& l : word) e = mul_letter(e, l);
  return e;
}

PBWElement PBWAlgebra::rewrite_normal_form(const std::vector<Letter>& word) const {
  using Words = std::map<std::vector<Letter>, Scalar>;
  Words pending;
  auto push = [&](Words& w, std::vector<Letter> word2, const Scalar& c) {
    std::erase_if(word2, [&](const Letter& l) { return l.kind == Letter::G && l.index == group_.identity; });
    if (c.is_zero()) return;
    auto [it, inserted] = w.emplace(std::move(word2), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) w.erase(it);
    }
  };
  push(pending, word, Scalar::one(field_));
  PBWElement out(field_);
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    std::vector<Letter> w = std::move(node.key());
    Scalar c = node.mapped();
    std::size_t p = 0;
    for (; p + 1 < w.size(); ++p) {
      const Letter &l = w[p], &r = w[p + 1];
      bool redex = (l.kind == Letter::G) || (l.kind == Letter::Y && r.kind == Letter::X) ||
                   (l.kind == r.kind && l.kind != Letter::G && l.index > r.index);
      if (redex) break;
    }
    if (p + 1 >= w.size()) {
      Monomial m{std::vector<int>(n_, 0), std::vector<int>(n_, 0), group_.identity};
      for (const auto& l : w) {
        if (l.kind == Letter::X) ++m.a[l.index];
        else if (l.kind == Letter::Y) ++m.b[l.index];
        else m.g = l.index;
      }
      out.add_term(m, c);
      continue;
    }
    const Letter l = w[p], r = w[p + 1];
    auto splice = [&](std::vector<Letter> mid) {
      std::vector<Letter> nw(w.begin(), w.begin() + p);
      nw.insert(nw.end(), mid.begin(), mid.end());
      nw.insert(nw.end(), w.begin() + p + 2, w.end());
      return nw;
    };
    if (l.kind == Letter::G) {
      if (r.kind == Letter::G) {
        push(pending, splice({{Letter::G, group_.mul(l.index, r.index)}}), c);
      } else {
        const Action& act = (r.kind == Letter::X ? xa_ : ya_)[l.index][r.index];
        push(pending, splice({{r.kind, act.target}, l}), c * act.coeff);
      }
    } else if (l.kind == Letter::Y && r.kind == Letter::X) {
      push(pending, splice({r, l}), c);
      for (const auto& [g, cg] : comm_[l.index][r.index]) push(pending, splice({{Letter::G, g}}), c * cg);
    } else {
      push(pending, splice({r, l}), c);
    }
  }
  return out;
}

std::vector<Monomial> normal_monomials(int n, int group_order, int d) {
  std::vector<Monomial> out;
  std::vector<int> e(2 * n, 0);
  // Enumerate exponent vectors of length 2n with sum <= d.
  std::vector<std::vector<int>> exps{{}};
  for (int v = 0; v < 2 * n; ++v) {
    std::vector<std::vector<int>> next;
    for (const auto& p : exps) {
      int used = 0;
      for (int t : p) used += t;
      for (int k = 0; used + k <= d; ++k) {
        auto q = p;
        q.push_back(k);
        next.push_back(std::move(q));
      }
    }
    exps = std::move(next);
  }
  for (const auto& p : exps)
    for (int g = 0; g < group_order; ++g)
      out.push_back({std::vector<int>(p.begin(), p.begin() + n), std::vector<int>(p.begin() + n, p.end()), g});
  return out;
}

}  // namespace cmc
