#include "cmc/quiver.hpp"

#include <stdexcept>

namespace cmc {

int Quiver::vertex(const std::string& label) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("unknown vertex '" + label + "'");
}

const Arrow& Quiver::arrow(const std::string& name) const {
  for (const auto& a : arrows)
    if (a.name == name) return a;
  throw std::invalid_argument("unknown arrow '" + name + "'");
}

bool Quiver::has_arrow(const std::string& name) const {
  for (const auto& a : arrows)
    if (a.name == name) return true;
  return false;
}

int Quiver::loops_at(int v) const {
  int c = 0;
  for (const auto& a : arrows)
    if (a.src == v && a.tgt == v) ++c;
  return c;
}

std::string x_name(int m, int i) { return m == 1 ? "X" : "X" + std::to_string(i); }
std::string y_name(int m, int i) { return m == 1 ? "Y" : "Y" + std::to_string(i); }

Quiver build_cyclic(int m) {
  if (m < 1) throw std::invalid_argument("cycle length must be positive");
  Quiver q;
  for (int i = 0; i < m; ++i) q.vertices.push_back(std::to_string(i));
  for (int i = 0; i < m; ++i) q.arrows.push_back({x_name(m, i), (i + 1) % m, i});
  return q;
}

namespace {

std::string reverse_name(const std::string& name) {
  if (name == "v") return "w";
  if (!name.empty() && name[0] == 'X') return "Y" + name.substr(1);
  return name + "*";
}

}  // namespace

Quiver double_quiver(const Quiver& q) {
  Quiver d = q;
  for (const auto& a : q.arrows) {
    std::string r = reverse_name(a.name);
    if (q.has_arrow(r)) throw std::invalid_argument("reverse arrow name clash: " + r);
    d.arrows.push_back({r, a.tgt, a.src});
  }
  return d;
}

Quiver frame(const Quiver& q) {
  Quiver f;
  f.vertices.push_back(kInfinity);
  for (const auto& v : q.vertices) f.vertices.push_back(v);
  for (const auto& a : q.arrows) f.arrows.push_back({a.name, a.src + 1, a.tgt + 1});
  f.arrows.push_back({"v", 1, 0});
  return f;
}

Quiver framed_double_cyclic(int m) {
  Quiver f = frame(build_cyclic(m));
  // Order arrows X.., Y.., v, w for readability.
  Quiver d;
  d.vertices = f.vertices;
  for (int i = 0; i < m; ++i) d.arrows.push_back(f.arrow(x_name(m, i)));
  for (int i = 0; i < m; ++i) {
    const Arrow& x = f.arrow(x_name(m, i));
    d.arrows.push_back({y_name(m, i), x.tgt, x.src});
  }
  d.arrows.push_back({"v", 1, 0});
  d.arrows.push_back({"w", 0, 1});
  return d;
}

long symmetric_pairing(const Quiver& q, const DimVector& a, const DimVector& b) {
  if (a.size() != q.vertices.size() || b.size() != q.vertices.size())
    throw std::invalid_argument("dimension vector length mismatch");
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += 2 * a[i] * b[i];
  for (const auto& ar : q.arrows) s -= a[ar.src] * b[ar.tgt] + a[ar.tgt] * b[ar.src];
  return s;
}

long tits_form(const Quiver& q, const DimVector& a) { return symmetric_pairing(q, a, a) / 2; }

namespace {

bool support_connected(const Quiver& q, const DimVector& a) {
  std::vector<int> seen(a.size(), 0);
  int start = -1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) {
      start = static_cast<int>(i);
      break;
    }
  if (start < 0) return false;
  std::vector<int> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& ar : q.arrows) {
      int other = -1;
      if (ar.src == v) other = ar.tgt;
      else if (ar.tgt == v) other = ar.src;
      if (other >= 0 && a[other] != 0 && !seen[other]) {
        seen[other] = 1;
        stack.push_back(other);
      }
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && !seen[i]) return false;
  return true;
}

}  // namespace

bool is_positive_root(const Quiver& q, const DimVector& alpha) {
  const std::size_t n = q.vertices.size();
  if (alpha.size() != n) throw std::invalid_argument("dimension vector length mismatch");
  for (long x : alpha)
    if (x < 0) throw std::invalid_argument("dimension vector has a negative entry");
  DimVector a = alpha;
  bool nonzero = false;
  for (long x : a) nonzero = nonzero || x != 0;
  if (!nonzero) return false;
  DimVector e(n, 0);
  for (;;) {
    long total = 0;
    int only = -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] < 0) return false;
      total += a[i];
      if (a[i] != 0) only = static_cast<int>(i);
    }
    if (total == 0) return false;
    if (total == 1 && q.loops_at(only) == 0) return true;  // simple real root
    int reflect = -1;
    long coeff = 0;
    for (std::size_t i = 0; i < n && reflect < 0; ++i) {
      if (q.loops_at(static_cast<int>(i)) != 0) continue;
      e.assign(n, 0);
      e[i] = 1;
      long p = symmetric_pairing(q, a, e);
      if (p > 0) {
        reflect = static_cast<int>(i);
        coeff = p;
      }
    }
    if (reflect < 0) return support_connected(q, a);  // fundamental region
    a[reflect] -= coeff;
  }
}

bool is_regular(const std::vector<Rational>& tau) {
  const std::size_t m = tau.size();
  if (m == 0) throw std::invalid_argument("empty weight");
  if (m == 1) return tau[0] != 0;
  Rational td = 0;
  for (const auto& t : tau) td += t;
  if (td == 0) return false;
  for (std::size_t i = 1; i < m; ++i) {
    Rational partial = 0;
    for (std::size_t j = i; j < m; ++j) {
      partial += tau[j];
      Rational ratio = partial / td;
      if (ratio.get_den() == 1) return false;
    }
  }
  return true;
}

Scalar pairing(const std::vector<Scalar>& lambda, const DimVector& a) {
  if (lambda.size() != a.size()) throw std::invalid_argument("weight/dimension length mismatch");
  if (lambda.empty()) return Scalar();
  Scalar s = Scalar::zero(lambda[0].conductor());
  for (std::size_t i = 0; i < a.size(); ++i) s += lambda[i] * Scalar(a[i], lambda[i].conductor());
  return s;
}

}  // namespace cmc
