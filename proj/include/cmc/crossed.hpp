#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cmc/ncalg.hpp"
#include "cmc/pbw.hpp"
#include "cmc/quiver.hpp"

namespace cmc {

/// Cyclic group Z/m with generator alpha; element j is alpha^j.
FiniteGroup cyclic_group(int m);

/// S_tau(Gamma) = C<x,y> # Z/m / (xy - yx - tau), alpha x = z x alpha,
/// alpha y = z^{-1} y alpha, with tau = sum_i tau_i e_i in the group algebra.
/// Scalars live in Q(zeta_m).
class CrossedAlgebra {
 public:
  CrossedAlgebra(int m, const std::vector<Scalar>& tau);

  int m() const { return m_; }
  const std::vector<Scalar>& tau() const { return tau_; }
  const PBWAlgebra& engine() const { return *engine_; }

  PBWElement x() const { return engine_->x(0); }
  PBWElement y() const { return engine_->y(0); }
  PBWElement g(int j) const;
  /// e_i = (1/m) sum_j z^{ij} alpha^j.
  GroupAlg frak_e_alg(int i) const;
  PBWElement frak_e(int i) const { return engine_->group_algebra(frak_e_alg(i)); }
  PBWElement tau_element() const;

  PBWElement mul(const PBWElement& a, const PBWElement& b) const { return engine_->mul(a, b); }
  /// Word over "x", "y", "g<j>" ("g" = alpha).
  PBWElement normal_form(const Word& w) const;
  PBWElement normal_form(const NCElement& e) const;
  /// Leftmost-redex rewriting route, for confluence checks.
  PBWElement rewrite_normal_form(const Word& w) const;

  /// NF of e_0 x^a y^b e_0.
  PBWElement o_tau_element(int a, int b) const;

  /// X_i -> e_i x, Y_i -> e_{i+1} y, e_i -> e_i. Rejects v, w, einf.
  PBWElement pi_tau_iso(const NCElement& path) const;
  /// x -> sum X_i, y -> sum Y_i, alpha^j -> sum_i z^{-ij} e_i.
  NCElement crossed_to_path(const PBWElement& e) const;

  /// The unframed doubled cycle the path side lives on.
  const Quiver& path_quiver() const { return quiver_; }

 private:
  std::vector<Letter> letters(const Word& w) const;

  int m_;
  std::vector<Scalar> tau_;
  Quiver quiver_;
  std::unique_ptr<PBWAlgebra> engine_;
};

/// Kills e_inf, v, w and every path through inf; other paths are kept.
NCElement project_le1(const NCElement& p);

}  // namespace cmc
