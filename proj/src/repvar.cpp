#include "cmc/repvar.hpp"

#include <random>

namespace cmc {

LetterMatrices CMPoint::letters() const { return {{"x", X}, {"y", Y}}; }

int FramedRep::conductor() const {
  if (arrows.empty()) return 1;
  return arrows.begin()->second.conductor();
}

DimVector FramedRep::dimension_vector() const {
  DimVector d{1};
  d.insert(d.end(), dims.begin(), dims.end());
  return d;
}

long FramedRep::total_dim() const {
  long t = 1;
  for (long d : dims) t += d;
  return t;
}

bool Residuals::ok() const {
  for (const auto& [name, r] : items)
    if (!r.is_zero()) return false;
  return true;
}

const Matrix& Residuals::at(const std::string& name) const {
  for (const auto& [k, r] : items)
    if (k == name) return r;
  throw std::out_of_range("no residual named " + name);
}

namespace {

void check_shape(const Matrix& a, std::size_t r, std::size_t c, const std::string& what) {
  if (a.rows() != r || a.cols() != c) {
    throw ShapeMismatch(what + " has shape " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + ", expected " + std::to_string(r) + "x" +
                        std::to_string(c));
  }
}

void check_shapes(const FramedRep& r) {
  const int m = r.m;
  if (static_cast<int>(r.dims.size()) != m) throw ShapeMismatch("dims length differs from m");
  if (static_cast<int>(r.lambda.size()) != m + 1) throw ShapeMismatch("lambda length differs from m+1");
  auto get = [&](const std::string& n) -> const Matrix& {
    auto it = r.arrows.find(n);
    if (it == r.arrows.end()) throw ShapeMismatch("missing arrow " + n);
    return it->second;
  };
  for (int i = 0; i < m; ++i) {
    std::size_t ni = r.dims[i], nj = r.dims[(i + 1) % m];
    check_shape(get(x_name(m, i)), nj, ni, x_name(m, i));
    check_shape(get(y_name(m, i)), ni, nj, y_name(m, i));
  }
  check_shape(get("v"), r.dims[0], 1, "v");
  check_shape(get("w"), 1, r.dims[0], "w");
}

}  // namespace

Residuals validate(const CMPoint& p) {
  const std::size_t n = p.n;
  const int m = p.conductor();
  check_shape(p.X, n, n, "X");
  check_shape(p.Y, n, n, "Y");
  check_shape(p.v, n, 1, "v");
  check_shape(p.w, 1, n, "w");
  Residuals r;
  r.items.emplace_back("moment", commutator(p.X, p.Y) + Matrix::identity(n, m) + p.v * p.w);
  r.items.emplace_back("trace", p.w * p.v + Matrix::identity(1, m) * Scalar(p.n, m));
  return r;
}

Residuals validate(const FramedRep& rep) {
  check_shapes(rep);
  const int m = rep.m;
  const int k = rep.conductor();
  const auto& A = rep.arrows;
  Residuals r;
  r.items.emplace_back(kInfinity, A.at("w") * A.at("v") - Matrix::identity(1, k) * rep.lambda[0]);
  for (int i = 0; i < m; ++i) {
    const int prev = (i + m - 1) % m;
    const std::size_t ni = rep.dims[i];
    Matrix res = A.at(x_name(m, prev)) * A.at(y_name(m, prev)) - A.at(y_name(m, i)) * A.at(x_name(m, i));
    if (i == 0) res += A.at("v") * A.at("w");
    res += Matrix::identity(ni, k) * rep.lambda[i + 1];
    r.items.emplace_back(std::to_string(i), std::move(res));
  }
  return r;
}

FramedRep to_framed(const CMPoint& p) {
  const int k = p.conductor();
  FramedRep r;
  r.m = 1;
  r.dims = {p.n};
  r.lambda = {Scalar(-p.n, k), Scalar(1, k)};
  r.arrows = {{"X", p.X}, {"Y", p.Y}, {"v", p.v}, {"w", p.w}};
  return r;
}

CMPoint generate_cm(const std::vector<Scalar>& spectrum, const std::vector<Scalar>& y_diag) {
  const std::size_t n = spectrum.size();
  if (y_diag.size() != n) throw std::invalid_argument("y_diag length differs from spectrum");
  const int k = n ? spectrum[0].conductor() : 1;
  CMPoint p;
  p.n = static_cast<int>(n);
  p.X = Matrix::diagonal(spectrum, k);
  p.Y = Matrix(n, n, k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        p.Y(i, i) = y_diag[i];
        continue;
      }
      Scalar d = spectrum[i] - spectrum[j];
      if (d.is_zero()) throw std::invalid_argument("spectrum entries must be pairwise distinct");
      p.Y(i, j) = d.inv();
    }
  }
  p.v = Matrix(n, 1, k);
  p.w = Matrix(1, n, k);
  for (std::size_t i = 0; i < n; ++i) {
    p.v(i, 0) = Scalar::one(k);
    p.w(0, i) = Scalar(-1, k);
  }
  return p;
}

CMPoint generate_cm(int n, long shift) {
  std::vector<Scalar> s, y;
  for (int i = 0; i < n; ++i) {
    s.emplace_back(shift + i, 1);
    y.emplace_back(0, 1);
  }
  return generate_cm(s, y);
}

std::vector<Scalar> lambda_from_tau(const std::vector<Rational>& tau, const std::vector<long>& dims) {
  if (tau.size() != dims.size()) throw std::invalid_argument("tau length differs from dims");
  Rational inf = 0;
  for (std::size_t i = 0; i < tau.size(); ++i) inf -= tau[i] * dims[i];
  std::vector<Scalar> l{Scalar(inf, 1)};
  for (const auto& t : tau) l.emplace_back(t, 1);
  return l;
}

namespace {

FramedRep nakajima_all_ones(int m, const std::vector<Rational>& tau, const NakajimaParams& params) {
  FramedRep r;
  r.m = m;
  r.dims.assign(m, 1);
  r.lambda = lambda_from_tau(tau, r.dims);
  std::vector<Scalar> p(m);
  p[0] = params.p0.conductor() == 1 ? params.p0 : Scalar(0, 1);
  for (int k = 1; k < m; ++k) p[k] = p[k - 1] + Scalar(tau[k], 1);
  for (int k = 0; k < m; ++k) {
    Scalar x = k < static_cast<int>(params.x.size()) ? params.x[k] : Scalar(k + 1, 1);
    Scalar y;
    if (x.is_zero()) {
      if (!p[k].is_zero()) throw GenerationError("no solution found at given params");
      y = k < static_cast<int>(params.y.size()) ? params.y[k] : Scalar(1, 1);
    } else {
      y = p[k] / x;
    }
    r.arrows[x_name(m, k)] = Matrix::diagonal({x}, 1);
    r.arrows[y_name(m, k)] = Matrix::diagonal({y}, 1);
  }
  r.arrows["v"] = Matrix::diagonal({Scalar(1, 1)}, 1);
  r.arrows["w"] = Matrix::diagonal({r.lambda[0]}, 1);
  return r;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-3, 3);
  Matrix a(rows, cols, 1);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = Scalar(dist(rng), 1);
  return a;
}

// Random X, v, w (with w v = lambda_inf), then Y from the linear relations.
std::optional<FramedRep> nakajima_attempt(int m, const std::vector<long>& dims,
                                          const std::vector<Scalar>& lambda, std::mt19937_64& rng) {
  FramedRep r;
  r.m = m;
  r.dims = dims;
  r.lambda = lambda;
  for (int i = 0; i < m; ++i) r.arrows[x_name(m, i)] = random_matrix(dims[(i + 1) % m], dims[i], rng);
  Matrix v = random_matrix(dims[0], 1, rng);
  Matrix w = random_matrix(1, dims[0], rng);
  Scalar wv = (w * v)(0, 0);
  if (lambda[0].is_zero()) {
    if (!wv.is_zero()) return std::nullopt;
  } else {
    if (wv.is_zero()) return std::nullopt;
    w *= lambda[0] / wv;
  }
  r.arrows["v"] = v;
  r.arrows["w"] = w;
  // Unknowns: entries of Y_i (n_i x n_{i+1}), laid out consecutively.
  std::vector<std::size_t> off(m + 1, 0);
  for (int i = 0; i < m; ++i) off[i + 1] = off[i] + dims[i] * dims[(i + 1) % m];
  std::size_t neq = 0;
  for (int k = 0; k < m; ++k) neq += dims[k] * dims[k];
  Matrix sys(neq, off[m], 1), rhs(neq, 1, 1);
  std::size_t row = 0;
  for (int k = 0; k < m; ++k) {
    const int prev = (k + m - 1) % m;
    const std::size_t nk = dims[k], nn = dims[(k + 1) % m];
    const Matrix& Xp = r.arrows[x_name(m, prev)];  // nk x n_prev
    const Matrix& Xk = r.arrows[x_name(m, k)];     // nn x nk
    Matrix target = Matrix::identity(nk, 1) * (-lambda[k + 1]);
    if (k == 0) target -= v * w;
    for (std::size_t a = 0; a < nk; ++a) {
      for (std::size_t b = 0; b < nk; ++b, ++row) {
        rhs(row, 0) = target(a, b);
        // (X_prev Y_prev)(a,b) = sum_c X_prev(a,c) Y_prev(c,b); Y_prev is n_prev x nk.
        for (std::size_t c = 0; c < static_cast<std::size_t>(dims[prev]); ++c)
          sys(row, off[prev] + c * nk + b) += Xp(a, c);
        // (Y_k X_k)(a,b) = sum_c Y_k(a,c) X_k(c,b); Y_k is nk x nn.
        for (std::size_t c = 0; c < nn; ++c) sys(row, off[k] + a * nn + c) -= Xk(c, b);
      }
    }
  }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  for (int i = 0; i < m; ++i) {
    const std::size_t ni = dims[i], nj = dims[(i + 1) % m];
    Matrix Y(ni, nj, 1);
    for (std::size_t a = 0; a < ni; ++a)
      for (std::size_t b = 0; b < nj; ++b) Y(a, b) = (*sol)(off[i] + a * nj + b, 0);
    r.arrows[y_name(m, i)] = Y;
  }
  if (!validate(r).ok()) return std::nullopt;
  return r;
}

}  // namespace

FramedRep generate_nakajima(int m, const std::vector<long>& dims, const std::vector<Rational>& tau,
                            const NakajimaParams& params) {
  if (m < 1 || static_cast<int>(dims.size()) != m || static_cast<int>(tau.size()) != m)
    throw std::invalid_argument("dims and tau must have length m");
  DimVector alpha{1};
  alpha.insert(alpha.end(), dims.begin(), dims.end());
  if (!is_positive_root(frame(build_cyclic(m)), alpha)) throw GenerationError("not a root");
  if (!is_regular(tau)) throw GenerationError("irregular tau");
  if (m == 1) {
    std::vector<Scalar> spectrum = params.x, yd = params.y;
    for (long i = static_cast<long>(spectrum.size()); i < dims[0]; ++i) spectrum.emplace_back(i, 1);
    for (long i = static_cast<long>(yd.size()); i < dims[0]; ++i) yd.emplace_back(0, 1);
    spectrum.resize(dims[0]);
    yd.resize(dims[0]);
    CMPoint p = generate_cm(spectrum, yd);
    Scalar t(tau[0], 1);
    p.Y *= t;
    p.w *= t;
    FramedRep r = to_framed(p);
    r.lambda = lambda_from_tau(tau, dims);
    return r;
  }
  bool ones = true;
  for (long d : dims) ones = ones && d == 1;
  FramedRep r;
  if (ones) {
    r = nakajima_all_ones(m, tau, params);
  } else {
    std::mt19937_64 rng(params.seed);
    const auto lambda = lambda_from_tau(tau, dims);
    std::optional<FramedRep> got;
    for (int attempt = 0; attempt < 32 && !got; ++attempt) got = nakajima_attempt(m, dims, lambda, rng);
    if (!got) throw GenerationError("no solution found at given params");
    r = std::move(*got);
  }
  if (!validate(r).ok()) throw GenerationError("no solution found at given params");
  return r;
}

FramedRep gl_act(const FramedRep& r, const std::vector<Matrix>& g) {
  const Quiver q = r.quiver();
  if (g.size() != q.vertices.size()) throw ShapeMismatch("one block per vertex required");
  std::vector<Matrix> ginv;
  for (const auto& b : g) ginv.push_back(inverse(b));
  FramedRep out = r;
  for (const auto& a : q.arrows) out.arrows[a.name] = g[a.to()] * r.arrows.at(a.name) * ginv[a.from()];
  return out;
}

CMPoint gl_act(const CMPoint& p, const Matrix& g) {
  Matrix gi = inverse(g);
  CMPoint out = p;
  out.X = g * p.X * gi;
  out.Y = g * p.Y * gi;
  out.v = g * p.v;
  out.w = p.w * gi;
  return out;
}

std::vector<long> vertex_offsets(const FramedRep& r) {
  std::vector<long> off{0, 1};
  for (long d : r.dims) off.push_back(off.back() + d);
  return off;
}

std::vector<Matrix> global_matrices(const FramedRep& r) {
  const Quiver q = r.quiver();
  const auto off = vertex_offsets(r);
  const std::size_t N = r.total_dim();
  std::vector<Matrix> out;
  for (const auto& a : q.arrows) {
    Matrix G(N, N, r.conductor());
    G.set_block(off[a.to()], off[a.from()], r.arrows.at(a.name));
    out.push_back(std::move(G));
  }
  return out;
}

bool is_simple(const FramedRep& r) {
  const auto mats = global_matrices(r);
  const std::size_t N = r.total_dim();
  const int k = r.conductor();
  // (a) the submodule generated by the frame vector is everything.
  Matrix span(N, 1, k);
  span(0, 0) = Scalar::one(k);
  span = image_basis(span);
  for (;;) {
    std::vector<Matrix> parts{span};
    for (const auto& A : mats) parts.push_back(A * span);
    Matrix next = image_basis(hstack(parts, N, k));
    if (next.cols() == span.cols()) break;
    span = std::move(next);
  }
  if (span.cols() != N) return false;
  // (b) no nonzero submodule inside the finite part (zero inf-component).
  Matrix B = Matrix::identity(N, k).block(0, 1, N, N - 1);
  while (B.cols() > 0) {
    // Annihilator of span(B): rows n with n B = 0.
    auto ann = kernel_basis(B.transpose());
    std::vector<Matrix> rows;
    for (const auto& a : ann) rows.push_back(a.transpose());
    Matrix Nm = vstack(rows, N, k);
    std::vector<Matrix> stacked;
    for (const auto& A : mats) stacked.push_back(Nm * A * B);
    auto ker = kernel_basis(vstack(stacked, B.cols(), k));
    if (ker.size() == B.cols()) return false;  // B is invariant and nonzero
    Matrix K = hstack(ker, B.cols(), k);
    B = image_basis(B * K);
  }
  return true;
}

bool is_simple(const CMPoint& p) { return is_simple(to_framed(p)); }

bool are_isomorphic(const FramedRep& a, const FramedRep& b, bool* approximate) {
  if (a.m != b.m || a.dims != b.dims) return false;
  if (approximate) *approximate = false;
  if (!is_simple(a) || !is_simple(b)) {
    if (approximate) *approximate = true;
    long n = 0;
    for (long d : a.dims) n += d;
    return fingerprint(a, static_cast<int>(2 * n)) == fingerprint(b, static_cast<int>(2 * n));
  }
  const auto off = vertex_offsets(a);
  const std::size_t N = a.total_dim();
  std::vector<bool> mask(N * N, false);
  for (std::size_t v = 0; v + 1 < off.size(); ++v)
    for (long i = off[v]; i < off[v + 1]; ++i)
      for (long j = off[v]; j < off[v + 1]; ++j) mask[i * N + j] = true;
  return !intertwiner_space(global_matrices(a), global_matrices(b), &mask).empty();
}

bool are_isomorphic(const CMPoint& a, const CMPoint& b, bool* approximate) {
  return are_isomorphic(to_framed(a), to_framed(b), approximate);
}

Scalar epsilon(const CMPoint& p, const Word& a) {
  return (p.w * evaluate_on_vector(a, p.letters(), p.v))(0, 0);
}

Scalar epsilon(const CMPoint& p, const NCElement& a) {
  Scalar s = Scalar::zero(p.conductor());
  for (const auto& [w, c] : a.terms()) s += c * epsilon(p, w);
  return s;
}

Scalar epsilon(const FramedRep& r, const Word& path) {
  const Matrix& v = r.arrows.at("v");
  return (r.arrows.at("w") * evaluate_on_vector(path, r.arrows, v))(0, 0);
}

std::vector<Word> closed_paths_at_zero(int m, int len) {
  Quiver q = framed_double_cyclic(m);
  std::erase_if(q.arrows, [](const Arrow& a) { return a.name == "v" || a.name == "w"; });
  return enumerate_paths(q, 1, len, 1);
}

std::vector<Scalar> fingerprint(const CMPoint& p, int L) {
  std::vector<Scalar> out;
  for (const auto& w : enumerate_words({"x", "y"}, L)) out.push_back(epsilon(p, w));
  return out;
}

std::vector<Scalar> fingerprint(const FramedRep& r, int L) {
  std::vector<Scalar> out;
  for (const auto& w : closed_paths_at_zero(r.m, L)) out.push_back(epsilon(r, w));
  return out;
}

std::pair<Matrix, Matrix> rank_one_factor(const Matrix& M) {
  for (std::size_t j = 0; j < M.cols(); ++j) {
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (M(i, j).is_zero()) continue;
      Matrix v = M.col(j) * M(i, j).inv();
      Matrix w = M.block(i, 0, 1, M.cols());
      if (v * w != M) throw std::invalid_argument("matrix does not have rank one");
      return {v, w};
    }
  }
  throw std::invalid_argument("zero matrix has no rank-one factorization");
}

}  // namespace cmc
