#include "cmc/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace cmc {

int euler_phi(int m) {
  if (m < 1) throw std::invalid_argument("conductor must be positive");
  int result = m;
  int k = m;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      while (k % p == 0) k /= p;
      result -= result / p;
    }
  }
  if (k > 1) result -= result / k;
  return result;
}

namespace {

// Exact division of integer polynomials (constant term first), divisor monic.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long q = num[i];
    quot[i - dn] = q;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= q * den[j];
  }
  return quot;
}

std::vector<long> compute_cyclotomic(int m) {
  std::vector<long> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("conductor must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<long>>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  auto poly = std::make_unique<std::vector<long>>(compute_cyclotomic(m));
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(m, std::move(poly));
  return *it->second;
}

namespace {

// Reduce a polynomial with rational coefficients modulo Phi_m in place.
void reduce_mod_cyclotomic(std::vector<Rational>& poly, int m) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    Rational lead = poly[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) poly[i - deg + j] -= lead * phi[j];
    }
    poly[i] = 0;
  }
  poly.resize(deg);
}

}  // namespace

Scalar::Scalar(int m) : m_(m), c_(static_cast<std::size_t>(euler_phi(m))) {}

Scalar::Scalar(const Rational& q, int m) : Scalar(m) {
  c_[0] = q;
  c_[0].canonicalize();
}

Scalar Scalar::root_of_unity(int m, long k) {
  if (m < 1) throw std::invalid_argument("conductor must be positive");
  long e = ((k % m) + m) % m;
  std::vector<Rational> poly(static_cast<std::size_t>(e) + 1);
  poly[e] = 1;
  Scalar s(m);
  if (poly.size() > s.c_.size()) {
    reduce_mod_cyclotomic(poly, m);
  } else {
    poly.resize(s.c_.size());
  }
  s.c_ = std::move(poly);
  return s;
}

Scalar Scalar::from_coeffs(int m, std::vector<Rational> coeffs) {
  Scalar s(m);
  if (coeffs.size() > s.c_.size()) {
    reduce_mod_cyclotomic(coeffs, m);
  } else {
    coeffs.resize(s.c_.size());
  }
  for (auto& q : coeffs) q.canonicalize();
  s.c_ = std::move(coeffs);
  return s;
}

bool Scalar::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

const Rational& Scalar::rational() const {
  if (!is_rational()) throw std::invalid_argument("scalar is not rational: " + to_string());
  return c_[0];
}

void Scalar::check_same(const Scalar& o) const {
  if (m_ != o.m_) {
    throw ConductorMismatch("conductor mismatch: " + std::to_string(m_) + " vs " +
                            std::to_string(o.m_));
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  const std::size_t d = c_.size();
  if (d == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (o.c_[j] != 0) prod[i + j] += c_[i] * o.c_[j];
    }
  }
  reduce_mod_cyclotomic(prod, m_);
  c_ = std::move(prod);
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  const std::size_t d = c_.size();
  Scalar r(m_);
  if (d == 1) {
    r.c_[0] = 1 / c_[0];
    return r;
  }
  // Solve (multiplication-by-this matrix) * u = e_0 over Q.
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1));
  for (std::size_t j = 0; j < d; ++j) {
    Scalar col = *this * Scalar::root_of_unity(m_, static_cast<long>(j));
    for (std::size_t i = 0; i < d; ++i) a[i][j] = col.c_[i];
  }
  a[0][d] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (a[piv][col] == 0) ++piv;  // field element nonzero => matrix invertible
    std::swap(a[piv], a[col]);
    Rational p = a[col][col];
    for (std::size_t k = col; k <= d; ++k) a[col][k] /= p;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t k = col; k <= d; ++k) a[i][k] -= f * a[col][k];
    }
  }
  for (std::size_t i = 0; i < d; ++i) r.c_[i] = a[i][d];
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

std::string Scalar::to_string() const {
  if (c_.size() == 1) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& q = c_[i];
    if (q == 0) continue;
    if (!first) os << (q > 0 ? " + " : " - ");
    else if (q < 0) os << "-";
    Rational aq = abs(q);
    if (i == 0) {
      os << aq.get_str();
    } else {
      if (aq != 1) os << aq.get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

}  // namespace cmc
