#include "cmc/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cmc {

WreathGroup::WreathGroup(int n, int m, WreathConvention conv) : n_(n), m_(m), conv_(conv) {
  if (n < 1 || m < 1) throw std::invalid_argument("wreath group needs n, m >= 1");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long mn = 1;
  for (int i = 0; i < n; ++i) mn *= m;
  do {
    for (long code = 0; code < mn; ++code) {
      WreathElement e{perm, std::vector<int>(n)};
      long c = code;
      for (int i = 0; i < n; ++i, c /= m) e.gamma[i] = static_cast<int>(c % m);
      index_[e] = static_cast<int>(elems_.size());
      elems_.push_back(std::move(e));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  const int N = order();
  table_.order = N;
  table_.identity = 0;  // identity permutation, zero gamma comes first
  table_.table.resize(static_cast<std::size_t>(N) * N);
  table_.inv.resize(N);
  for (int a = 0; a < N; ++a) {
    table_.inv[a] = index(inverse(elems_[a]));
    for (int b = 0; b < N; ++b) table_.table[a * N + b] = index(wreath_mult(elems_[a], elems_[b]));
  }
}

int WreathGroup::index(const WreathElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw std::invalid_argument("not an element of the wreath group");
  return it->second;
}

WreathElement WreathGroup::wreath_mult(const WreathElement& a, const WreathElement& b) const {
  WreathElement r{std::vector<int>(n_), std::vector<int>(n_)};
  for (int i = 0; i < n_; ++i) r.sigma[i] = a.sigma[b.sigma[i]];
  if (conv_ == WreathConvention::A) {
    for (int i = 0; i < n_; ++i) r.gamma[i] = (a.gamma[b.sigma[i]] + b.gamma[i]) % m_;
  } else {
    std::vector<int> ainv(n_);
    for (int i = 0; i < n_; ++i) ainv[a.sigma[i]] = i;
    for (int i = 0; i < n_; ++i) r.gamma[i] = (a.gamma[i] + b.gamma[ainv[i]]) % m_;
  }
  return r;
}

WreathElement WreathGroup::inverse(const WreathElement& a) const {
  // Search is fine at desk scale and convention-agnostic.
  WreathElement id{std::vector<int>(n_), std::vector<int>(n_, 0)};
  std::iota(id.sigma.begin(), id.sigma.end(), 0);
  std::vector<int> sinv(n_);
  for (int i = 0; i < n_; ++i) sinv[a.sigma[i]] = i;
  long mn = 1;
  for (int i = 0; i < n_; ++i) mn *= m_;
  for (long code = 0; code < mn; ++code) {
    WreathElement c{sinv, std::vector<int>(n_)};
    long k = code;
    for (int i = 0; i < n_; ++i, k /= m_) c.gamma[i] = static_cast<int>(k % m_);
    if (wreath_mult(a, c) == id) return c;
  }
  throw std::logic_error("wreath element has no inverse");
}

int WreathGroup::permutation(const std::vector<int>& sigma) const {
  return index({sigma, std::vector<int>(n_, 0)});
}

int WreathGroup::transposition(int i, int j) const {
  std::vector<int> s(n_);
  std::iota(s.begin(), s.end(), 0);
  std::swap(s[i], s[j]);
  return permutation(s);
}

int WreathGroup::alpha(int i, int l) const {
  WreathElement e{std::vector<int>(n_), std::vector<int>(n_, 0)};
  std::iota(e.sigma.begin(), e.sigma.end(), 0);
  e.gamma[i] = ((l % m_) + m_) % m_;
  return index(e);
}

GroupAlg WreathGroup::galg_mult(const GroupAlg& a, const GroupAlg& b) const {
  GroupAlg r;
  for (const auto& [g, cg] : a)
    for (const auto& [h, ch] : b) {
      int gh = table_.mul(g, h);
      auto [it, ins] = r.emplace(gh, cg * ch);
      if (!ins) it->second += cg * ch;
    }
  std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

bool galg_equal(const GroupAlg& a, const GroupAlg& b) {
  auto clean = [](GroupAlg x) {
    std::erase_if(x, [](const auto& kv) { return kv.second.is_zero(); });
    return x;
  };
  return clean(a) == clean(b);
}

GroupAlg WreathGroup::frak_e(int i, int factor) const {
  GroupAlg e;
  const Scalar inv_m(Rational(1, m_), m_);
  for (int j = 0; j < m_; ++j) e[alpha(factor, j)] = Scalar::root_of_unity(m_, static_cast<long>(i) * j) * inv_m;
  return e;
}

namespace {

GroupAlg average(const std::vector<int>& idx, int m) {
  GroupAlg r;
  const Scalar w(Rational(1, static_cast<long>(idx.size())), m);
  for (int g : idx) r[g] = w;
  return r;
}

}  // namespace

GroupAlg WreathGroup::sigma_n() const {
  std::vector<int> idx;
  std::vector<int> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  do idx.push_back(permutation(perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return average(idx, m_);
}

GroupAlg WreathGroup::sigma_n_minus_1() const {
  std::vector<int> idx;
  std::vector<int> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  do idx.push_back(permutation(perm));
  while (std::next_permutation(perm.begin() + 1, perm.end()));
  return average(idx, m_);
}

GroupAlg WreathGroup::bold_e() const {
  std::vector<int> idx(order());
  std::iota(idx.begin(), idx.end(), 0);
  return average(idx, m_);
}

GroupAlg WreathGroup::nu(int i) const {
  GroupAlg t = frak_e(i, 0);
  for (int f = 1; f < n_; ++f) t = galg_mult(t, frak_e(0, f));
  return galg_mult(sigma_n_minus_1(), t);
}

GroupAlg WreathGroup::idempotent(const std::string& kind, int i) const {
  if (i < 0 || i >= m_) throw std::invalid_argument("idempotent index out of range");
  if (kind == "eps_i") return frak_e(i, 0);
  if (kind == "e" || kind == "sigma_n") return sigma_n();
  if (kind == "e_bar" || kind == "sigma_n_minus_1") return sigma_n_minus_1();
  if (kind == "bold_e") return bold_e();
  if (kind == "nu_i") return nu(i);
  throw std::invalid_argument("unknown idempotent kind '" + kind + "'");
}

}  // namespace cmc
