// Command-line front end. Exit codes: 0 pass, 2 bad input, 3 assertion failure.
#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "cmc/acceptance.hpp"
#include "cmc/json_io.hpp"

using namespace cmc;

namespace {

constexpr int kBadInput = 2;
constexpr int kFailure = 3;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<Rational> rationals(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& t : split(s)) out.push_back(parse_rational(t));
  return out;
}

std::vector<long> integers(const std::string& s) {
  std::vector<long> out;
  for (const auto& t : split(s)) {
    std::size_t pos = 0;
    long v = std::stol(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("not an integer: " + t);
    out.push_back(v);
  }
  return out;
}

std::string join(const std::vector<Scalar>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return "[" + s + "]";
}

struct Options {
  int n = 1;
  int m = 1;
  std::string tau, dims, spectrum, alpha, out, format = "text", convention = "A";
  int degree = -1;
  int len = 3;
  std::uint64_t seed = 1;
  bool distinct = false;
  std::vector<std::string> files;
};

void emit(const Options& o, const json& j, const std::string& text) {
  if (!o.out.empty()) save_file(o.out, j);
  if (o.format == "json") {
    if (o.out.empty()) std::cout << dump(j);
  } else {
    std::cout << text;
  }
}

bool is_framed(const json& j) { return j.is_object() && j.contains("arrows") && j.contains("m"); }

int cmd_gen(const Options& o) {
  json j;
  std::ostringstream text;
  if (o.m == 1 && o.dims.empty() && o.tau.empty()) {
    CMPoint p;
    if (!o.spectrum.empty()) {
      std::vector<Scalar> spectrum, y;
      for (const auto& r : rationals(o.spectrum)) {
        spectrum.emplace_back(r, 1);
        y.emplace_back(0, 1);
      }
      p = generate_cm(spectrum, y);
    } else if (o.seed != 1) {
      std::mt19937_64 rng(o.seed);
      p = random_cm(o.n, rng);
    } else {
      p = generate_cm(o.n);
    }
    if (!validate(p).ok()) throw Failure("generated point does not validate");
    j = to_json(p);
    text << "CM point, n = " << p.n << ", residuals zero\n";
  } else {
    std::vector<long> dims = o.dims.empty() ? std::vector<long>(o.m, o.n) : integers(o.dims);
    std::vector<Rational> tau = o.tau.empty() ? std::vector<Rational>(dims.size(), Rational(1)) : rationals(o.tau);
    if (static_cast<int>(dims.size()) != o.m || static_cast<int>(tau.size()) != o.m)
      throw std::invalid_argument("--dims and --tau need m entries");
    NakajimaParams params;
    params.seed = o.seed;
    FramedRep r = generate_nakajima(o.m, dims, tau, params);
    if (!validate(r).ok()) throw Failure("generated representation does not validate");
    j = to_json(r);
    text << "Nakajima point, m = " << o.m << ", lambda = " << join(r.lambda) << ", residuals zero\n";
  }
  if (o.out.empty() && o.format == "text") text << dump(j);
  emit(o, j, text.str());
  return 0;
}

int cmd_omega(const Options& o) {
  if (o.files.empty()) throw std::invalid_argument("omega needs at least one point file");
  std::vector<IdealModel> models;
  json all = json::array();
  std::ostringstream text;
  for (const auto& f : o.files) {
    json in = load_file(f);
    if (is_framed(in)) {
      FramedRep r = framed_from_json(in);
      if (!validate(r).ok()) throw Failure(f + ": representation does not validate");
      TauModel t = omega_tau(r, o.degree < 0 ? o.len : o.degree);
      all.push_back(to_json(t));
      text << f << ": m = " << t.m << ", ell = " << t.ell << "\n  degree  codim\n";
      for (std::size_t d = 0; d < t.codim_profile.size(); ++d) text << "  " << d << "       " << t.codim_profile[d] << "\n";
      text << "  closed-path weights: " << join(t.epsilon) << "\n";
      continue;
    }
    CMPoint p = cmpoint_from_json(in);
    if (!validate(p).ok()) throw Failure(f + ": point does not validate");
    IdealModel M = o.degree < 0 ? omega(p) : omega(p, o.degree);
    models.push_back(M);
    all.push_back(to_json(M));
    text << f << ": n = " << M.n << ", d = " << M.d << ", dim K = " << M.K_basis.size() << ", dim J = " << M.J_basis.size()
         << "\n  degree  codim\n";
    for (std::size_t d = 0; d < M.codim_profile.size(); ++d) text << "  " << d << "       " << M.codim_profile[d] << "\n";
    text << "  fingerprint: " << join(M.fingerprint) << "\n";
  }
  json j = all.size() == 1 ? all[0] : all;
  if (o.distinct) {
    json matrix = json::array();
    text << "distinct:\n";
    for (const auto& a : models) {
      json row = json::array();
      text << " ";
      for (const auto& b : models) {
        row.push_back(distinct(a, b));
        text << ' ' << (distinct(a, b) ? 1 : 0);
      }
      text << "\n";
      matrix.push_back(row);
    }
    j = json{{"models", all}, {"distinct", matrix}};
  }
  emit(o, j, text.str());
  return 0;
}

int cmd_xi(const Options& o) {
  if (o.files.size() != 1) throw std::invalid_argument("xi needs one module file");
  HModule V = hmodule_from_json(load_file(o.files[0]));
  Residuals res = verify_module(V);
  for (const auto& [name, r] : res.items)
    if (!r.is_zero()) throw Failure("module relation " + name + " fails");
  CMPoint P = eg_map(V);
  IdealModel M = o.degree < 0 ? xi_pipeline(V) : xi_pipeline(V, o.degree);
  std::ostringstream text;
  text << "module relations hold; eg_map point validates: " << (validate(P).ok() ? "yes" : "no") << "\n";
  text << "n = " << M.n << ", d = " << M.d << ", codim profile:";
  for (long c : M.codim_profile) text << ' ' << c;
  text << "\nfingerprint: " << join(M.fingerprint) << "\n";
  emit(o, json{{"point", to_json(P)}, {"model", to_json(M)}}, text.str());
  return 0;
}

int cmd_theta(const Options& o) {
  if (o.convention != "A" && o.convention != "B") throw std::invalid_argument("--convention must be A or B");
  std::vector<Rational> tau = o.tau.empty() ? std::vector<Rational>(o.m, Rational(1)) : rationals(o.tau);
  if (static_cast<int>(tau.size()) != o.m) throw std::invalid_argument("--tau needs m entries");
  if (o.len < 2) throw std::invalid_argument("--len must be >= 2");
  ThetaReport r = verify_theta(o.m, o.n, tau, o.len, o.convention == "A" ? WreathConvention::A : WreathConvention::B);
  std::ostringstream text;
  text << (r.passed() ? "PASS" : "FAIL") << ": " << r.pairs_checked << " pairs, " << r.relations_checked << " relations\n";
  for (const auto& f : r.failures) text << "  " << f << "\n";
  if (r.spherical_compared) text << "m = 1 comparison with the spherical map: " << (r.spherical_agrees ? "agrees" : "differs") << "\n";
  emit(o, to_json(r), text.str());
  return r.passed() ? 0 : kFailure;
}

int cmd_roots(const Options& o) {
  std::ostringstream text;
  json j = json::object();
  Quiver q = frame(build_cyclic(o.m));
  if (!o.alpha.empty()) {
    DimVector a = integers(o.alpha);
    if (a.size() != q.vertices.size()) throw std::invalid_argument("--alpha needs m + 1 entries (inf first)");
    bool root = is_positive_root(q, a);
    long qa = tits_form(q, a);
    text << "positive root: " << (root ? "yes" : "no") << ", q = " << qa << "\n";
    j["positive_root"] = root;
    j["q"] = qa;
  }
  if (!o.tau.empty()) {
    auto tau = rationals(o.tau);
    if (static_cast<int>(tau.size()) != o.m) throw std::invalid_argument("--tau needs m entries");
    bool reg = is_regular(tau);
    text << "regular: " << (reg ? "yes" : "no") << "\n";
    j["regular"] = reg;
  }
  if (o.alpha.empty() && o.tau.empty()) throw std::invalid_argument("roots needs --alpha or --tau");
  emit(o, j, text.str());
  return 0;
}

int cmd_iso(const Options& o) {
  if (o.files.size() != 2) throw std::invalid_argument("iso needs two files");
  json a = load_file(o.files[0]), b = load_file(o.files[1]);
  bool approx = false, iso;
  if (is_framed(a) && is_framed(b)) iso = are_isomorphic(framed_from_json(a), framed_from_json(b), &approx);
  else if (!is_framed(a) && !is_framed(b)) iso = are_isomorphic(cmpoint_from_json(a), cmpoint_from_json(b), &approx);
  else throw std::invalid_argument("iso: files hold different kinds of points");
  std::ostringstream text;
  text << "isomorphic: " << (iso ? "yes" : "no") << (approx ? " (by fingerprint)" : "") << "\n";
  emit(o, json{{"isomorphic", iso}, {"exact", !approx}}, text.str());
  return 0;
}

int cmd_verify_all(const Options& o) {
  json results = json::array();
  bool all = true;
  auto on = [&](const CriterionResult& r) {
    if (o.format != "json") std::cout << format_line(r) << std::endl;
    all = all && r.passed;
    results.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"seconds", r.seconds}, {"checks", r.checks},
                       {"detail", r.detail}});
  };
  run_all(on);
  json j{{"criteria", results}, {"passed", all}};
  if (!o.out.empty()) save_file(o.out, j);
  if (o.format == "json" && o.out.empty()) std::cout << dump(j);
  return all ? 0 : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calogero-Moser spaces, quiver varieties and ideal classes of the Weyl algebra"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    c->add_option("--out", o.out, "Write JSON output to this file");
  };
  auto* gen = app.add_subcommand("gen", "Generate a CM point or a quiver-variety point");
  gen->add_option("--n", o.n, "Size / dimension per vertex")->check(CLI::NonNegativeNumber);
  gen->add_option("--m", o.m, "Length of the cycle")->check(CLI::PositiveNumber);
  gen->add_option("--spectrum", o.spectrum, "Distinct eigenvalues of X (m = 1)");
  gen->add_option("--dims", o.dims, "Dimension vector n_0,...,n_{m-1}");
  gen->add_option("--tau", o.tau, "Parameters tau_0,...,tau_{m-1}");
  gen->add_option("--seed", o.seed, "Seed for random choices");
  common(gen);
  auto* om = app.add_subcommand("omega", "Ideal model of one or more points");
  om->add_option("files", o.files, "Point files")->required();
  om->add_option("--degree", o.degree, "Degree bound")->check(CLI::NonNegativeNumber);
  om->add_option("--len", o.len, "Path length bound for framed points")->check(CLI::NonNegativeNumber);
  om->add_flag("--distinct", o.distinct, "Print the pairwise distinctness matrix");
  common(om);
  auto* xi = app.add_subcommand("xi", "Module -> CM point -> ideal model");
  xi->add_option("file", o.files, "Module file")->required();
  xi->add_option("--degree", o.degree, "Degree bound")->check(CLI::NonNegativeNumber);
  common(xi);
  auto* th = app.add_subcommand("theta-verify", "Check the theta homomorphism on short paths");
  th->add_option("--n", o.n, "Rank")->check(CLI::PositiveNumber);
  th->add_option("--m", o.m, "Order of the cyclic group")->check(CLI::PositiveNumber);
  th->add_option("--tau", o.tau, "Parameters tau_0,...,tau_{m-1}");
  th->add_option("--len", o.len, "Total path length bound");
  th->add_option("--convention", o.convention, "Wreath product convention (A, or B as a control)");
  common(th);
  auto* ro = app.add_subcommand("roots", "Root and regularity queries on the framed cycle");
  ro->add_option("--m", o.m, "Length of the cycle")->check(CLI::PositiveNumber);
  ro->add_option("--alpha", o.alpha, "Dimension vector, inf first");
  ro->add_option("--tau", o.tau, "Parameters to test for regularity");
  common(ro);
  auto* iso = app.add_subcommand("iso", "Decide whether two points are isomorphic");
  iso->add_option("files", o.files, "Two point files")->required();
  common(iso);
  auto* va = app.add_subcommand("verify-all", "Run the acceptance battery");
  common(va);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }
  try {
    if (*gen) return cmd_gen(o);
    if (*om) return cmd_omega(o);
    if (*xi) return cmd_xi(o);
    if (*th) return cmd_theta(o);
    if (*ro) return cmd_roots(o);
    if (*iso) return cmd_iso(o);
    if (*va) return cmd_verify_all(o);
  } catch (const Failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const InvariantViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const ModuleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
