#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmc/corresp.hpp"
#include "cmc/matrix.hpp"
#include "cmc/repvar.hpp"
#include "cmc/sra.hpp"

namespace cmc {

/// Finite-dimensional module over H_{0,k,c}(Gamma_n), as column-vector
/// matrices with A_{ab} = A_a A_b. For m = 1, k plays the role of the
/// Cherednik parameter c. Group generators are named "s1".."s{n-1}"
/// (adjacent transpositions) and "a" (alpha in the first factor, m > 1).
struct HModule {
  int n = 1;
  int m = 1;
  Scalar k;
  std::vector<Scalar> c;  // c_1..c_{m-1}
  int dim = 0;
  std::vector<Matrix> x, y;
  std::map<std::string, Matrix> generators;

  SRAParams params() const { return {n, m, k, c}; }
};

class ModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Group-element index of a named generator.
int generator_index(const WreathGroup& G, const std::string& name);

/// Matrices of every group element, by breadth-first search over the
/// generators. Inconsistencies (the generators do not define a group
/// homomorphism) are appended to `residuals` when given.
std::vector<Matrix> group_matrices(const HModule& V, const WreathGroup& G,
                                   std::vector<std::pair<std::string, Matrix>>* residuals = nullptr);

Residuals verify_module(const HModule& V);

/// Operator of an algebra element: sum c A_{x^a} A_{y^b} A_g.
Matrix element_operator(const HModule& V, const SRAAlgebra& H, const std::vector<Matrix>& group,
                        const PBWElement& e);
Matrix group_operator(const std::vector<Matrix>& group, const GroupAlg& a, std::size_t dim, int m);

bool is_simple(const HModule& V);
HModule conjugate(const HModule& V, const Matrix& T);

/// n = 1, m = 1: the 1-dimensional module (x, y).
HModule fixture_n1(const Scalar& x, const Scalar& y);
/// n = 2, m = 1: V = span{1, s}, x1 = diag(p, q), y1 = [[r, -u], [u, t]],
/// u = c/(p - q).
HModule fixture_n2(const Scalar& p, const Scalar& q, const Scalar& r, const Scalar& t, const Scalar& c = Scalar::one(1));
/// (m, n) = (2, 1): g = diag(1, -1), x = [[0, a], [b, 0]], y = [[0, p], [q, 0]]
/// with q solved from p b - a q = c1.
HModule fixture_wreath21(const Scalar& a, const Scalar& b, const Scalar& p, const Scalar& c1);
/// Dispatch on (n, m): params are (x, y), (p, q, r, t) or (a, b, p).
HModule solve_fixture(int n, int m, const std::vector<Scalar>& params, const Scalar& c);

/// Etingof-Ginzburg map to a CM point (m = 1). Throws ModuleError with
/// "not simple", "dim Vbar != n" or "rank != 1".
CMPoint eg_map(const HModule& V);

enum class WeightVariant { ep, ep1 };
/// ep: -n Tr(A_e A_{a(x1,y1)}); ep1: -sum_i Tr(A_e A_{a(xi,yi)} A_e).
Scalar weight_via_module(const HModule& V, const Word& a, WeightVariant variant);
/// -sum_i A_e A_{a(xi,yi)} A_e for a over {x, y}.
Matrix spherical_theta(const HModule& V, const NCElement& a);

/// omega(eg_map(V), d), after checking the ep weight against epsilon of the
/// CM point on all words of length <= 2n.
IdealModel xi_pipeline(const HModule& V, int d);
IdealModel xi_pipeline(const HModule& V);

/// Scalar by which theta(v path w) acts on V bold-e (n = 1 here, or any
/// case with dim V bold-e = 1).
Scalar wreath_weight_pullback(const HModule& V, const Word& path, const std::vector<Scalar>& lambda);
/// The framed representation V bold-e, V e_0, ..., V e_{m-1} with arrows
/// acting through theta (n = 1).
FramedRep nakajima_from_module(const HModule& V, const std::vector<Scalar>& lambda);

}  // namespace cmc
