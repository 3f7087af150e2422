#include "cmc/corresp.hpp"

#include <algorithm>

namespace cmc {

std::size_t word_index(const Word& w) {
  std::size_t idx = (std::size_t{1} << w.size()) - 1;
  std::size_t bits = 0;
  for (const auto& l : w) {
    if (l != "x" && l != "y") throw std::invalid_argument("word is not over {x, y}");
    bits = 2 * bits + (l == "y");
  }
  return idx + bits;
}

NCElement weyl_relator(int m) {
  return NCElement::word({"x", "y"}, m) - NCElement::word({"y", "x"}, m) -
         NCElement::constant(Scalar::one(m));
}

Matrix rho(const CMPoint& p, const NCElement& r) { return element_operator(r, p.letters(), p.n); }

std::vector<NCElement> echelon_basis(const std::vector<NCElement>& elems, int m) {
  // Columns: every word that occurs, largest first.
  std::vector<Word> words;
  for (const auto& e : elems)
    for (const auto& [w, c] : e.terms()) words.push_back(w);
  std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) { return LengthLex{}(b, a); });
  words.erase(std::unique(words.begin(), words.end()), words.end());
  std::map<Word, std::size_t, LengthLex> col;
  for (std::size_t i = 0; i < words.size(); ++i) col[words[i]] = i;
  Matrix A(elems.size(), words.size(), m);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& [w, c] : elems[i].terms()) A(i, col[w]) = c;
  auto red = rref(A);
  std::vector<NCElement> out;
  for (std::size_t r = red.pivots.size(); r-- > 0;) {
    NCElement e(m);
    for (std::size_t j = 0; j < words.size(); ++j)
      if (!red.reduced(r, j).is_zero()) e.add_term(words[j], red.reduced(r, j));
    out.push_back(std::move(e));
  }
  return out;
}

bool in_span(const std::vector<NCElement>& echelon, const NCElement& e) {
  NCElement r = e;
  for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
    const auto& [lead, c] = *it->terms().rbegin();
    auto f = r.terms().find(lead);
    if (f != r.terms().end()) r -= *it * (f->second / c);
  }
  return r.is_zero();
}

namespace {

// n x #words matrix whose columns are the evaluations of the words on v.
Matrix evaluation_matrix(const CMPoint& p, const std::vector<Word>& words) {
  const int k = p.conductor();
  Matrix E(p.n, words.size(), k);
  const auto L = p.letters();
  for (std::size_t j = 0; j < words.size(); ++j) E.set_block(0, j, evaluate_on_vector(words[j], L, p.v));
  return E;
}

std::vector<NCElement> kernel_elements(const Matrix& E, const std::vector<Word>& words, int k) {
  std::vector<NCElement> out;
  for (const auto& v : kernel_basis(E)) {
    NCElement e(k);
    for (std::size_t j = 0; j < words.size(); ++j) e.add_term(words[j], v(j, 0));
    out.push_back(std::move(e));
  }
  return echelon_basis(out, k);
}

}  // namespace

std::vector<NCElement> j_basis(const CMPoint& p, int d) {
  const int k = p.conductor();
  if (d < 2) return {};
  const NCElement rel = weyl_relator(k);
  std::vector<NCElement> span;
  for (const auto& a : enumerate_words({"x", "y"}, d - 2)) {
    NCElement ea = NCElement::word(a, k) * rel - NCElement::constant(epsilon(p, a));
    for (const auto& c : enumerate_words({"x", "y"}, d - 2 - static_cast<int>(a.size())))
      span.push_back(ea * NCElement::word(c, k));
  }
  return echelon_basis(span, k);
}

std::vector<NCElement> eval_map_kernel(const CMPoint& p, int d) {
  auto words = enumerate_words({"x", "y"}, d);
  return kernel_elements(evaluation_matrix(p, words), words, p.conductor());
}

std::vector<long> codim_profile(const CMPoint& p, int d) {
  auto words = enumerate_words({"x", "y"}, d);
  Matrix E = evaluation_matrix(p, words);
  std::vector<long> prof;
  for (int j = 0; j <= d; ++j) prof.push_back(static_cast<long>(rank(E.block(0, 0, p.n, (std::size_t{2} << j) - 1))));
  return prof;
}

int default_degree(int n) { return std::max(4, n + 2); }

IdealModel omega(const CMPoint& p, int d) {
  if (!validate(p).ok()) throw std::invalid_argument("point does not satisfy the CM equation");
  IdealModel M;
  M.n = p.n;
  M.d = d;
  M.point = p;
  M.codim_profile = codim_profile(p, d);
  M.fingerprint = fingerprint(p, 2 * p.n);
  M.J_basis = j_basis(p, d);
  M.K_basis = eval_map_kernel(p, d);
  const auto L = p.letters();
  for (const auto& j : M.J_basis) {
    if (p.n > 0 && !evaluate_on_vector(j, L, p.v).is_zero())
      throw InvariantViolation("J is not contained in K");
  }
  for (int j = 0; j <= d; ++j) {
    long c = M.codim_profile[j];
    if (c > p.n || (j > 0 && c < M.codim_profile[j - 1]) || (j >= p.n - 1 && c != p.n))
      throw InvariantViolation("codimension profile violates its bounds at degree " + std::to_string(j));
  }
  return M;
}

IdealModel omega(const CMPoint& p) { return omega(p, default_degree(p.n)); }

bool distinct(const IdealModel& a, const IdealModel& b) {
  if (a.n != b.n) return true;
  if (a.fingerprint != b.fingerprint) return true;
  return !are_isomorphic(a.point, b.point);
}

TauModel omega_tau(const FramedRep& r, int ell) {
  std::vector<Rational> tau;
  for (std::size_t i = 1; i < r.lambda.size(); ++i) tau.push_back(r.lambda[i].rational());
  if (!is_regular(tau)) throw std::invalid_argument("irregular tau");
  const int k = r.conductor();
  TauModel M;
  M.m = r.m;
  M.dims = r.dims;
  M.ell = ell;
  M.closed_paths = closed_paths_at_zero(r.m, ell);
  for (const auto& p : M.closed_paths) M.epsilon.push_back(epsilon(r, p));

  Quiver q = framed_double_cyclic(r.m);
  std::erase_if(q.arrows, [](const Arrow& a) { return a.name == "v" || a.name == "w"; });
  auto paths = enumerate_paths(q, 1, ell);
  std::vector<long> off{0};
  for (long d : r.dims) off.push_back(off.back() + d);
  const Matrix& v = r.arrows.at("v");
  Matrix E(off.back(), paths.size(), k);
  std::vector<std::size_t> count_le(ell + 1, 0);
  for (std::size_t j = 0; j < paths.size(); ++j) {
    int end = *path_end(q, 1, paths[j]) - 1;
    E.set_block(off[end], j, evaluate_on_vector(paths[j], r.arrows, v));
    for (int len = static_cast<int>(paths[j].size()); len <= ell; ++len) ++count_le[len];
  }
  for (int j = 0; j <= ell; ++j)
    M.codim_profile.push_back(static_cast<long>(rank(E.block(0, 0, E.rows(), count_le[j]))));
  M.K_basis = kernel_elements(E, paths, k);
  return M;
}

}  // namespace cmc
