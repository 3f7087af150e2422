#include "cmc/cherednik.hpp"

#include <deque>

namespace cmc {

namespace {

Matrix power(const Matrix& a, int e) {
  Matrix r = Matrix::identity(a.rows(), a.conductor());
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

void check_shapes(const HModule& V) {
  if (static_cast<int>(V.x.size()) != V.n || static_cast<int>(V.y.size()) != V.n)
    throw ShapeMismatch("module needs n x- and n y-matrices");
  auto sq = [&](const Matrix& a) {
    if (a.rows() != static_cast<std::size_t>(V.dim) || a.cols() != static_cast<std::size_t>(V.dim))
      throw ShapeMismatch("module matrix is not dim x dim");
    if (a.conductor() != V.m) throw ConductorMismatch("module matrix over the wrong field");
  };
  for (const auto& a : V.x) sq(a);
  for (const auto& a : V.y) sq(a);
  for (const auto& [name, a] : V.generators) sq(a);
  for (int i = 1; i < V.n; ++i)
    if (!V.generators.count("s" + std::to_string(i))) throw ShapeMismatch("missing generator s" + std::to_string(i));
  if (V.m > 1 && !V.generators.count("a")) throw ShapeMismatch("missing generator a");
}

/// A_{a(x_i, y_i)} with A_{ab} = A_a A_b.
Matrix word_product(const HModule& V, const Word& a, int i) {
  Matrix r = Matrix::identity(V.dim, V.m);
  for (const auto& l : a) {
    if (l == "x") r = r * V.x[i];
    else if (l == "y") r = r * V.y[i];
    else throw std::invalid_argument("word letter must be x or y, got '" + l + "'");
  }
  return r;
}

/// Matrix R with B R = M B, for M preserving the column span of B.
Matrix restrict_to(const Matrix& M, const Matrix& B_from, const Matrix& B_to) {
  auto r = solve(B_to, M * B_from);
  if (!r) throw ModuleError("operator does not preserve the subspace");
  return *r;
}

}  // namespace

int generator_index(const WreathGroup& G, const std::string& name) {
  if (name == "a") {
    if (G.m() < 2) throw std::invalid_argument("generator a needs m > 1");
    return G.alpha(0, 1);
  }
  if (name.size() >= 2 && name[0] == 's') {
    int i = std::stoi(name.substr(1));
    if (i < 1 || i >= G.n()) throw std::invalid_argument("generator " + name + " out of range");
    return G.transposition(i - 1, i);
  }
  throw std::invalid_argument("unknown group generator '" + name + "'");
}

std::vector<Matrix> group_matrices(const HModule& V, const WreathGroup& G,
                                   std::vector<std::pair<std::string, Matrix>>* residuals) {
  const auto& T = G.table();
  std::vector<Matrix> mats(T.order);
  std::vector<bool> seen(T.order, false);
  std::vector<std::pair<int, const Matrix*>> gens;
  for (const auto& [name, a] : V.generators) gens.emplace_back(generator_index(G, name), &a);
  mats[T.identity] = Matrix::identity(V.dim, V.m);
  seen[T.identity] = true;
  std::deque<int> queue{T.identity};
  while (!queue.empty()) {
    int g = queue.front();
    queue.pop_front();
    for (const auto& [t, a] : gens) {
      int h = T.mul(g, t);
      Matrix M = mats[g] * *a;
      if (!seen[h]) {
        seen[h] = true;
        mats[h] = std::move(M);
        queue.push_back(h);
      } else if (residuals && M != mats[h]) {
        residuals->emplace_back("group " + std::to_string(g) + "*" + std::to_string(t), M - mats[h]);
      }
    }
  }
  for (int g = 0; g < T.order; ++g)
    if (!seen[g]) throw ShapeMismatch("generators do not generate the group");
  return mats;
}

Matrix group_operator(const std::vector<Matrix>& group, const GroupAlg& a, std::size_t dim, int m) {
  Matrix r(dim, dim, m);
  for (const auto& [g, c] : a) r += group[g] * c;
  return r;
}

Matrix element_operator(const HModule& V, const SRAAlgebra& H, const std::vector<Matrix>& group,
                        const PBWElement& e) {
  (void)H;
  Matrix r(V.dim, V.dim, V.m);
  for (const auto& [mono, c] : e.terms()) {
    Matrix t = Matrix::identity(V.dim, V.m);
    for (int i = 0; i < V.n; ++i) t = t * power(V.x[i], mono.a[i]);
    for (int i = 0; i < V.n; ++i) t = t * power(V.y[i], mono.b[i]);
    r += t * group[mono.g] * c;
  }
  return r;
}

Residuals verify_module(const HModule& V) {
  check_shapes(V);
  SRAAlgebra H(V.params());
  const WreathGroup& G = H.group();
  Residuals res;
  auto group = group_matrices(V, G, &res.items);
  const int n = V.n;
  for (const auto& [name, a] : V.generators) {
    const WreathElement& e = G.element(generator_index(G, name));
    for (int i = 0; i < n; ++i) {
      res.items.emplace_back(name + " x" + std::to_string(i + 1),
                             a * V.x[i] - V.x[e.sigma[i]] * a * Scalar::root_of_unity(V.m, e.gamma[i]));
      res.items.emplace_back(name + " y" + std::to_string(i + 1),
                             a * V.y[i] - V.y[e.sigma[i]] * a * Scalar::root_of_unity(V.m, -e.gamma[i]));
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::string ij = std::to_string(i + 1) + "," + std::to_string(j + 1);
      res.items.emplace_back("[x" + ij + "]", commutator(V.x[i], V.x[j]));
      res.items.emplace_back("[y" + ij + "]", commutator(V.y[i], V.y[j]));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      res.items.emplace_back("[y" + std::to_string(i + 1) + ",x" + std::to_string(j + 1) + "]",
                             commutator(V.y[i], V.x[j]) -
                                 group_operator(group, H.engine().commutator(i, j), V.dim, V.m));
  return res;
}

bool is_simple(const HModule& V) {
  std::vector<Matrix> act;
  for (const auto& a : V.x) act.push_back(a);
  for (const auto& a : V.y) act.push_back(a);
  for (const auto& [name, a] : V.generators) act.push_back(a);
  return intertwiner_space(act, act).size() == 1;
}

HModule conjugate(const HModule& V, const Matrix& T) {
  Matrix Ti = inverse(T);
  HModule W = V;
  for (auto& a : W.x) a = T * a * Ti;
  for (auto& a : W.y) a = T * a * Ti;
  for (auto& [name, a] : W.generators) a = T * a * Ti;
  return W;
}

HModule fixture_n1(const Scalar& x, const Scalar& y) {
  HModule V;
  V.n = 1;
  V.m = 1;
  V.k = Scalar::one(1);
  V.dim = 1;
  V.x = {Matrix::from_rows({{x}}, 1)};
  V.y = {Matrix::from_rows({{y}}, 1)};
  return V;
}

HModule fixture_n2(const Scalar& p, const Scalar& q, const Scalar& r, const Scalar& t, const Scalar& c) {
  if (p == q) throw std::invalid_argument("fixture needs p != q");
  Scalar u = c / (p - q);
  HModule V;
  V.n = 2;
  V.m = 1;
  V.k = c;
  V.dim = 2;
  Matrix s = Matrix::from_ints({{0, 1}, {1, 0}});
  Matrix x1 = Matrix::diagonal({p, q}, 1);
  Matrix y1 = Matrix::from_rows({{r, -u}, {u, t}}, 1);
  V.x = {x1, s * x1 * s};
  V.y = {y1, s * y1 * s};
  V.generators["s1"] = s;
  return V;
}

HModule fixture_wreath21(const Scalar& a, const Scalar& b, const Scalar& p, const Scalar& c1) {
  const int m = 2;
  if (a.is_zero()) throw std::invalid_argument("fixture needs a != 0");
  Scalar q = (p * b - c1) / a;
  Scalar z(m);
  HModule V;
  V.n = 1;
  V.m = m;
  V.k = Scalar(0, m);
  V.c = {c1};
  V.dim = 2;
  V.x = {Matrix::from_rows({{z, a}, {b, z}}, m)};
  V.y = {Matrix::from_rows({{z, p}, {q, z}}, m)};
  V.generators["a"] = Matrix::diagonal({Scalar(1, m), Scalar(-1, m)}, m);
  return V;
}

HModule solve_fixture(int n, int m, const std::vector<Scalar>& params, const Scalar& c) {
  auto need = [&](std::size_t k) {
    if (params.size() != k) throw std::invalid_argument("fixture expects " + std::to_string(k) + " parameters");
  };
  if (m == 1 && n == 1) {
    need(2);
    return fixture_n1(params[0], params[1]);
  }
  if (m == 1 && n == 2) {
    need(4);
    return fixture_n2(params[0], params[1], params[2], params[3], c);
  }
  if (m == 2 && n == 1) {
    need(3);
    return fixture_wreath21(params[0], params[1], params[2], c);
  }
  throw std::invalid_argument("no fixture solver for this (n, m)");
}

CMPoint eg_map(const HModule& V) {
  if (V.m != 1) throw ModuleError("eg_map needs m = 1");
  check_shapes(V);
  if (V.k.is_zero()) throw ModuleError("eg_map needs c != 0");
  if (!is_simple(V)) throw ModuleError("not simple");
  WreathGroup G(V.n, 1);
  auto group = group_matrices(V, G);
  Matrix ebar = group_operator(group, G.sigma_n_minus_1(), V.dim, 1);
  // The module is a right module in the transposed picture.
  Matrix B = image_basis(ebar.transpose());
  if (B.cols() != static_cast<std::size_t>(V.n)) throw ModuleError("dim Vbar != n");
  CMPoint P;
  P.n = V.n;
  P.X = restrict_to(V.x[0].transpose(), B, B);
  P.Y = restrict_to((V.y[0] * V.k.inv()).transpose(), B, B);
  Matrix K = -(commutator(P.X, P.Y) + Matrix::identity(V.n, 1));
  if (rank(K) != 1) throw ModuleError("rank != 1");
  std::tie(P.v, P.w) = rank_one_factor(K);
  return P;
}

namespace {

Matrix spherical(const HModule& V) {
  WreathGroup G(V.n, V.m);
  auto group = group_matrices(V, G);
  return group_operator(group, G.sigma_n(), V.dim, V.m);
}

}  // namespace

Scalar weight_via_module(const HModule& V, const Word& a, WeightVariant variant) {
  check_shapes(V);
  Matrix E = spherical(V);
  if (variant == WeightVariant::ep) return -(E * word_product(V, a, 0)).trace() * Scalar(V.n, V.m);
  if (rank(E) != 1) throw ModuleError("Ve is not 1-dimensional");
  Scalar s(V.m);
  for (int i = 0; i < V.n; ++i) s -= (E * word_product(V, a, i) * E).trace();
  return s;
}

Matrix spherical_theta(const HModule& V, const NCElement& a) {
  check_shapes(V);
  Matrix E = spherical(V);
  Matrix r(V.dim, V.dim, V.m);
  for (const auto& [w, c] : a.terms())
    for (int i = 0; i < V.n; ++i) r -= E * word_product(V, w, i) * E * c;
  return r;
}

IdealModel xi_pipeline(const HModule& V, int d) {
  CMPoint P = eg_map(V);
  for (const auto& w : enumerate_words({"x", "y"}, 2 * V.n)) {
    Scalar a = weight_via_module(V, w, WeightVariant::ep);
    // eg_map rescales y by 1/c, so the word picks up c^{-#y}.
    Scalar b = epsilon(P, w);
    for (const auto& l : w)
      if (l == "y") b *= V.k;
    if (a != b) throw InvariantViolation("module weight differs from epsilon at '" + word_to_string(w) + "'");
  }
  return omega(P, d);
}

IdealModel xi_pipeline(const HModule& V) { return xi_pipeline(V, default_degree(V.n)); }

namespace {

void check_params(const HModule& V, const std::vector<Scalar>& lambda) {
  WeightParams wp = params_from_weight(lambda, V.m, V.n);
  if (wp.c_alpha != V.c || (V.n > 1 && wp.k != V.k))
    throw ModuleError("module parameters do not match lambda");
}

}  // namespace

Scalar wreath_weight_pullback(const HModule& V, const Word& path, const std::vector<Scalar>& lambda) {
  check_shapes(V);
  check_params(V, lambda);
  SRAAlgebra H(V.params());
  ThetaMap theta(H, lambda);
  auto group = group_matrices(V, H.group());
  Matrix E = group_operator(group, H.group().bold_e(), V.dim, V.m);
  if (rank(E) != 1) throw ModuleError("dim V bold-e != 1");
  Word w{"v"};
  w.insert(w.end(), path.begin(), path.end());
  w.push_back("w");
  Matrix op = element_operator(V, H, group, theta(w));
  return (E * op * E).trace();
}

FramedRep nakajima_from_module(const HModule& V, const std::vector<Scalar>& lambda) {
  check_shapes(V);
  if (V.n != 1) throw ModuleError("nakajima_from_module needs n = 1");
  check_params(V, lambda);
  const int m = V.m;
  WreathGroup G(1, m);
  auto group = group_matrices(V, G);
  std::vector<Matrix> B;
  FramedRep r;
  r.m = m;
  r.lambda = lambda;
  for (int i = 0; i < m; ++i) {
    B.push_back(image_basis(group_operator(group, G.frak_e(i), V.dim, m).transpose()));
    r.dims.push_back(static_cast<long>(B.back().cols()));
  }
  Matrix Binf = image_basis(group_operator(group, G.bold_e(), V.dim, m).transpose());
  if (Binf.cols() != 1) throw ModuleError("dim V bold-e != 1");
  Matrix Tx = V.x[0].transpose(), Ty = V.y[0].transpose();
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    r.arrows[x_name(m, i)] = restrict_to(Tx, B[i], B[j]);
    r.arrows[y_name(m, i)] = -restrict_to(Ty, B[j], B[i]);
  }
  r.arrows["v"] = restrict_to(Matrix::identity(V.dim, m) * lambda[0], Binf, B[0]);
  r.arrows["w"] = restrict_to(Matrix::identity(V.dim, m), B[0], Binf);
  return r;
}

}  // namespace cmc
