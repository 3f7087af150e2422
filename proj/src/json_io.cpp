#include "cmc/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cmc {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw JsonError(std::string("missing field '") + key + "'");
  return j.at(key);
}

long get_int(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw JsonError(std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

const json& get_array(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw JsonError(std::string("field '") + key + "' must be an array");
  return v;
}

std::vector<long> longs(const json& a) {
  std::vector<long> out;
  for (const auto& v : a) {
    if (!v.is_number_integer()) throw JsonError("expected an integer");
    out.push_back(v.get<long>());
  }
  return out;
}

template <class T, class F>
json array_of(const std::vector<T>& v, F f) {
  json a = json::array();
  for (const auto& x : v) a.push_back(f(x));
  return a;
}

json scalars(const std::vector<Scalar>& v) {
  return array_of(v, [](const Scalar& s) { return to_json(s); });
}

std::vector<Scalar> scalars_from(const json& a) {
  if (!a.is_array()) throw JsonError("expected an array of scalars");
  std::vector<Scalar> out;
  for (const auto& s : a) out.push_back(scalar_from_json(s));
  return out;
}

json word_json(const Word& w) { return json(w); }

Word word_from(const json& j) {
  if (!j.is_array()) throw JsonError("word must be an array of letters");
  Word w;
  for (const auto& l : j) {
    if (!l.is_string()) throw JsonError("word letters must be strings");
    w.push_back(l.get<std::string>());
  }
  return w;
}

json multi_index(const std::vector<int>& a) { return json(a); }

}  // namespace

json to_json(const Scalar& s) {
  json c = json::array();
  for (const auto& q : s.coeffs()) c.push_back({q.get_num().get_str(), q.get_den().get_str()});
  return {{"m", s.conductor()}, {"coeffs", c}};
}

Scalar scalar_from_json(const json& j) {
  long m = get_int(j, "m");
  if (m < 1) throw JsonError("conductor must be positive");
  std::vector<Rational> c;
  for (const auto& pr : get_array(j, "coeffs")) {
    if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
      throw JsonError("coefficient must be [\"num\", \"den\"]");
    try {
      Rational q(mpz_class(pr[0].get<std::string>()), mpz_class(pr[1].get<std::string>()));
      if (q.get_den() == 0) throw JsonError("zero denominator");
      q.canonicalize();
      c.push_back(q);
    } catch (const std::invalid_argument&) {
      throw JsonError("bad integer in coefficient");
    }
  }
  try {
    return Scalar::from_coeffs(static_cast<int>(m), c);
  } catch (const std::exception& e) {
    throw JsonError(std::string("bad scalar: ") + e.what());
  }
}

json to_json(const Matrix& a) {
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", scalars(a.entries())}};
}

Matrix matrix_from_json(const json& j) {
  long r = get_int(j, "rows"), c = get_int(j, "cols");
  if (r < 0 || c < 0) throw JsonError("negative matrix shape");
  auto e = scalars_from(get_array(j, "entries"));
  if (static_cast<long>(e.size()) != r * c) throw JsonError("matrix entry count does not match shape");
  int m = e.empty() ? 1 : e.front().conductor();
  if (j.contains("m")) m = static_cast<int>(get_int(j, "m"));
  Matrix a(r, c, m);
  for (long i = 0; i < r; ++i)
    for (long k = 0; k < c; ++k) {
      if (e[i * c + k].conductor() != m) throw JsonError("mixed conductors in matrix");
      a(i, k) = e[i * c + k];
    }
  return a;
}

json to_json(const Quiver& q) {
  json arrows = json::array();
  for (const auto& a : q.arrows) arrows.push_back({{"name", a.name}, {"src", q.vertices[a.src]}, {"tgt", q.vertices[a.tgt]}});
  return {{"vertices", q.vertices}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j) {
  Quiver q;
  for (const auto& v : get_array(j, "vertices")) {
    if (!v.is_string()) throw JsonError("vertex labels must be strings");
    q.vertices.push_back(v.get<std::string>());
  }
  for (const auto& a : get_array(j, "arrows")) {
    auto name = field(a, "name"), src = field(a, "src"), tgt = field(a, "tgt");
    if (!name.is_string() || !src.is_string() || !tgt.is_string()) throw JsonError("arrow fields must be strings");
    try {
      q.arrows.push_back({name.get<std::string>(), q.vertex(src.get<std::string>()), q.vertex(tgt.get<std::string>())});
    } catch (const std::invalid_argument& e) {
      throw JsonError(e.what());
    }
  }
  return q;
}

json to_json(const NCElement& e) {
  json t = json::array();
  for (const auto& [w, c] : e.terms()) t.push_back({{"word", word_json(w)}, {"coeff", to_json(c)}});
  return {{"terms", t}};
}

NCElement ncelement_from_json(const json& j, int m) {
  NCElement e(m);
  for (const auto& t : get_array(j, "terms")) {
    Scalar c = scalar_from_json(field(t, "coeff"));
    if (c.conductor() != m) throw JsonError("coefficient over the wrong field");
    e.add_term(word_from(field(t, "word")), c);
  }
  return e;
}

json to_json(const CMPoint& p) {
  return {{"n", p.n}, {"X", to_json(p.X)}, {"Y", to_json(p.Y)}, {"v", to_json(p.v)}, {"w", to_json(p.w)}};
}

CMPoint cmpoint_from_json(const json& j) {
  CMPoint p;
  long n = get_int(j, "n");
  if (n < 0) throw JsonError("n must be >= 0");
  p.n = static_cast<int>(n);
  p.X = matrix_from_json(field(j, "X"));
  p.Y = matrix_from_json(field(j, "Y"));
  p.v = matrix_from_json(field(j, "v"));
  p.w = matrix_from_json(field(j, "w"));
  const std::size_t un = p.n;
  if (p.X.rows() != un || p.X.cols() != un || p.Y.rows() != un || p.Y.cols() != un || p.v.rows() != un ||
      p.v.cols() != 1 || p.w.rows() != 1 || p.w.cols() != un)
    throw JsonError("CM point matrices have the wrong shapes");
  return p;
}

json to_json(const FramedRep& r) {
  json arrows = json::object();
  for (const auto& [name, a] : r.arrows) arrows[name] = to_json(a);
  return {{"m", r.m}, {"dims", r.dims}, {"lambda", scalars(r.lambda)}, {"arrows", arrows}};
}

FramedRep framed_from_json(const json& j) {
  FramedRep r;
  long m = get_int(j, "m");
  if (m < 1) throw JsonError("m must be >= 1");
  r.m = static_cast<int>(m);
  r.dims = longs(get_array(j, "dims"));
  r.lambda = scalars_from(get_array(j, "lambda"));
  if (static_cast<long>(r.dims.size()) != m || static_cast<long>(r.lambda.size()) != m + 1)
    throw JsonError("dims needs m entries and lambda m + 1");
  const json& arrows = field(j, "arrows");
  if (!arrows.is_object()) throw JsonError("arrows must be an object");
  for (const auto& [name, a] : arrows.items()) r.arrows[name] = matrix_from_json(a);
  Quiver q = r.quiver();
  DimVector dv = r.dimension_vector();
  for (const auto& a : q.arrows) {
    auto it = r.arrows.find(a.name);
    if (it == r.arrows.end()) throw JsonError("missing arrow " + a.name);
    if (it->second.rows() != static_cast<std::size_t>(dv[a.to()]) ||
        it->second.cols() != static_cast<std::size_t>(dv[a.from()]))
      throw JsonError("arrow " + a.name + " has the wrong shape");
  }
  if (r.arrows.size() != q.arrows.size()) throw JsonError("unexpected arrows");
  return r;
}

json to_json(const WreathElement& g) { return {{"sigma", g.sigma}, {"gamma", g.gamma}}; }

WreathElement wreath_from_json(const json& j) {
  WreathElement g;
  for (long v : longs(get_array(j, "sigma"))) g.sigma.push_back(static_cast<int>(v));
  for (long v : longs(get_array(j, "gamma"))) g.gamma.push_back(static_cast<int>(v));
  if (g.sigma.size() != g.gamma.size()) throw JsonError("sigma and gamma differ in length");
  return g;
}

json to_json(const IdealModel& model) {
  auto els = [](const std::vector<NCElement>& v) { return array_of(v, [](const NCElement& e) { return to_json(e); }); };
  return {{"n", model.n},
          {"d", model.d},
          {"codim_profile", model.codim_profile},
          {"fingerprint", scalars(model.fingerprint)},
          {"J_basis", els(model.J_basis)},
          {"K_basis", els(model.K_basis)}};
}

IdealModel ideal_model_from_json(const json& j) {
  IdealModel model;
  model.n = static_cast<int>(get_int(j, "n"));
  model.d = static_cast<int>(get_int(j, "d"));
  model.codim_profile = longs(get_array(j, "codim_profile"));
  model.fingerprint = scalars_from(get_array(j, "fingerprint"));
  int m = model.fingerprint.empty() ? 1 : model.fingerprint.front().conductor();
  for (const auto& e : get_array(j, "J_basis")) model.J_basis.push_back(ncelement_from_json(e, m));
  for (const auto& e : get_array(j, "K_basis")) model.K_basis.push_back(ncelement_from_json(e, m));
  return model;
}

json to_json(const TauModel& model) {
  json paths = array_of(model.closed_paths, [](const Word& w) { return word_json(w); });
  return {{"m", model.m},
          {"dims", model.dims},
          {"ell", model.ell},
          {"closed_paths", paths},
          {"epsilon", scalars(model.epsilon)},
          {"codim_profile", model.codim_profile},
          {"K_basis", array_of(model.K_basis, [](const NCElement& e) { return to_json(e); })}};
}

json to_json(const HModule& V) {
  json gens = json::object();
  for (const auto& [name, a] : V.generators) gens[name] = to_json(a);
  json c = V.m == 1 ? to_json(V.k) : json{{"k", to_json(V.k)}, {"c", scalars(V.c)}};
  auto mats = [](const std::vector<Matrix>& v) { return array_of(v, [](const Matrix& a) { return to_json(a); }); };
  return {{"n", V.n}, {"m", V.m},           {"c", c},
          {"dim", V.dim}, {"x", mats(V.x)}, {"y", mats(V.y)},
          {"group", {{"generators", gens}}}};
}

HModule hmodule_from_json(const json& j) {
  HModule V;
  V.n = static_cast<int>(get_int(j, "n"));
  V.m = static_cast<int>(get_int(j, "m"));
  V.dim = static_cast<int>(get_int(j, "dim"));
  if (V.n < 1 || V.m < 1 || V.dim < 0) throw JsonError("module needs n, m >= 1 and dim >= 0");
  const json& c = field(j, "c");
  if (V.m == 1 && !c.contains("k")) {
    V.k = scalar_from_json(c);
  } else {
    V.k = scalar_from_json(field(c, "k"));
    V.c = scalars_from(get_array(c, "c"));
  }
  if (static_cast<int>(V.c.size()) != V.m - 1) throw JsonError("c needs m - 1 entries");
  for (const auto& a : get_array(j, "x")) V.x.push_back(matrix_from_json(a));
  for (const auto& a : get_array(j, "y")) V.y.push_back(matrix_from_json(a));
  const json& gens = field(field(j, "group"), "generators");
  if (!gens.is_object()) throw JsonError("generators must be an object");
  for (const auto& [name, a] : gens.items()) V.generators[name] = matrix_from_json(a);
  return V;
}

json to_json(const ThetaReport& r) {
  json j{{"m", r.m},
         {"n", r.n},
         {"ell", r.ell},
         {"pairs_checked", r.pairs_checked},
         {"relations_checked", r.relations_checked},
         {"failures", r.failures},
         {"passed", r.passed()}};
  if (r.spherical_compared) j["spherical_agrees"] = r.spherical_agrees;
  return j;
}

json crossed_to_json(const CrossedAlgebra& A, const PBWElement& e) {
  json t = json::array();
  for (const auto& [mono, c] : e.terms())
    t.push_back({{"a", mono.a[0]}, {"b", mono.b[0]}, {"g", mono.g}, {"coeff", to_json(c)}});
  return {{"m", A.m()}, {"tau", scalars(A.tau())}, {"terms", t}};
}

PBWElement crossed_from_json(const CrossedAlgebra& A, const json& j) {
  if (get_int(j, "m") != A.m()) throw JsonError("crossed element over a different m");
  if (scalars_from(get_array(j, "tau")) != A.tau()) throw JsonError("crossed element with a different tau");
  PBWElement e(A.m());
  for (const auto& t : get_array(j, "terms")) {
    long a = get_int(t, "a"), b = get_int(t, "b"), g = get_int(t, "g");
    if (a < 0 || b < 0 || g < 0 || g >= A.m()) throw JsonError("bad crossed monomial");
    e.add_term({{static_cast<int>(a)}, {static_cast<int>(b)}, static_cast<int>(g)}, scalar_from_json(field(t, "coeff")));
  }
  return e;
}

json sra_to_json(const SRAAlgebra& H, const PBWElement& e) {
  json t = json::array();
  for (const auto& [mono, c] : e.terms())
    t.push_back({{"a", multi_index(mono.a)},
                 {"b", multi_index(mono.b)},
                 {"g", to_json(H.group().element(mono.g))},
                 {"coeff", to_json(c)}});
  const auto& p = H.params();
  return {{"n", p.n}, {"m", p.m}, {"k", to_json(p.k)}, {"c", scalars(p.c)}, {"terms", t}};
}

PBWElement sra_from_json(const SRAAlgebra& H, const json& j) {
  const auto& p = H.params();
  if (get_int(j, "n") != p.n || get_int(j, "m") != p.m) throw JsonError("element of a different algebra");
  PBWElement e(p.m);
  for (const auto& t : get_array(j, "terms")) {
    auto a = longs(get_array(t, "a")), b = longs(get_array(t, "b"));
    if (static_cast<int>(a.size()) != p.n || static_cast<int>(b.size()) != p.n) throw JsonError("bad multi-index");
    Monomial mono;
    for (long v : a) mono.a.push_back(static_cast<int>(v));
    for (long v : b) mono.b.push_back(static_cast<int>(v));
    try {
      mono.g = H.group().index(wreath_from_json(field(t, "g")));
    } catch (const std::invalid_argument& ex) {
      throw JsonError(ex.what());
    }
    e.add_term(mono, scalar_from_json(field(t, "coeff")));
  }
  return e;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw JsonError(path + ": " + e.what());
  }
}

void save_file(const std::string& path, const json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << dump(j);
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot move " + tmp + " to " + path);
}

}  // namespace cmc
