#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cmc/ncalg.hpp"
#include "cmc/pbw.hpp"
#include "cmc/wreath.hpp"

namespace cmc {

struct SRAParams {
  int n = 1;
  int m = 1;
  Scalar k;
  /// c_1 .. c_{m-1}: c = sum_l c_l alpha^l (empty for m = 1).
  std::vector<Scalar> c;
};

/// H_{0,k,c}(Gamma_n) over Q(zeta_m):
///   y_i x_i = x_i y_i + k sum_{j!=i} sum_l s_ij a_i^l a_j^-l + sum_{l>=1} c_l a_i^l
///   y_i x_j = x_j y_i - k sum_l z^l s_ij a_i^l a_j^-l          (i != j)
/// with the group acting through WreathGroup.
class SRAAlgebra {
 public:
  explicit SRAAlgebra(const SRAParams& p, WreathConvention conv = WreathConvention::A);

  const SRAParams& params() const { return p_; }
  const WreathGroup& group() const { return *G_; }
  const PBWAlgebra& engine() const { return *engine_; }

  PBWElement x(int i) const { return engine_->x(i); }
  PBWElement y(int i) const { return engine_->y(i); }
  PBWElement g(int idx) const { return engine_->group_element(idx); }
  PBWElement galg(const GroupAlg& a) const { return engine_->group_algebra(a); }
  PBWElement mul(const PBWElement& a, const PBWElement& b) const { return engine_->mul(a, b); }
  PBWElement normal_form(const std::vector<Letter>& w) const { return engine_->normal_form(w); }

  /// Generators of the algebra as letters: x_i, y_i, adjacent transpositions,
  /// alpha in the first factor (m > 1).
  std::vector<Letter> generator_letters() const;

 private:
  SRAParams p_;
  std::unique_ptr<WreathGroup> G_;
  std::unique_ptr<PBWAlgebra> engine_;
};

struct WeightParams {
  Scalar k;
  std::vector<Scalar> c_frak;   // c in the e_i basis, length m
  std::vector<Scalar> c_alpha;  // c_1..c_{m-1}
};

/// k = lambda_inf / (mn), c = (lambda_0 + lambda_inf/n) e_0 + sum_{i>0} lambda_i e_i.
WeightParams params_from_weight(const std::vector<Scalar>& lambda, int m, int n);

/// The letterwise assignment of the theta map and its restriction to sandwiches.
class ThetaMap {
 public:
  ThetaMap(const SRAAlgebra& H, const std::vector<Scalar>& lambda);

  /// Letterwise image (X_i -> nu_i x_1, Y_i -> -y_1 nu_i, e_i -> nu_i,
  /// v -> (lambda_inf/n) sum_j s_1j, w -> nu_0, einf -> bold e).
  PBWElement raw(const Word& w) const;
  /// theta on e_inf (path algebra) e_inf, i.e. raw(b) bold-e. Non-composable
  /// words map to 0; words not starting and ending at inf are rejected.
  PBWElement operator()(const NCElement& b) const;
  PBWElement operator()(const Word& b) const;

  const PBWElement& bold_e() const { return bold_e_; }

 private:
  const SRAAlgebra& H_;
  std::vector<Scalar> lambda_;
  Quiver q_;
  std::map<std::string, PBWElement> images_;
  PBWElement bold_e_;
};

struct ThetaReport {
  int m = 1, n = 1, ell = 0;
  long pairs_checked = 0;
  long relations_checked = 0;
  std::vector<std::string> failures;
  /// m = 1 only: whether -sum_i e a(x_i,y_i) e equals theta(v a w) on the
  /// checked words (recorded, not asserted).
  bool spherical_compared = false;
  bool spherical_agrees = false;
  bool passed() const { return failures.empty(); }
};

/// lambda = (-tau . (n..n), tau).
ThetaReport verify_theta(int m, int n, const std::vector<Rational>& tau, int ell,
                         WreathConvention conv = WreathConvention::A);

}  // namespace cmc
