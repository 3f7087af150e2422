#pragma once

#include <string>
#include <vector>

#include "cmc/pbw.hpp"

namespace cmc {

/// (sigma, gamma) acts on L^n by x_i -> z^{gamma_i} x_{sigma(i)},
/// y_i -> z^{-gamma_i} y_{sigma(i)}. Convention A is the product compatible
/// with that action: (s,g)(s',g') = (ss', g o s' + g'). Convention B,
/// (ss', g + g' o s^{-1}), is kept as a negative control.
enum class WreathConvention { A, B };

struct WreathElement {
  std::vector<int> sigma;  // zero-based images
  std::vector<int> gamma;  // entries mod m
  auto operator<=>(const WreathElement&) const = default;
};

class WreathGroup {
 public:
  WreathGroup(int n, int m, WreathConvention conv = WreathConvention::A);

  int n() const { return n_; }
  int m() const { return m_; }
  int order() const { return static_cast<int>(elems_.size()); }
  WreathConvention convention() const { return conv_; }
  const FiniteGroup& table() const { return table_; }

  const WreathElement& element(int idx) const { return elems_[idx]; }
  int index(const WreathElement& g) const;
  WreathElement wreath_mult(const WreathElement& a, const WreathElement& b) const;
  WreathElement inverse(const WreathElement& a) const;

  /// Transposition of i and j (zero-based).
  int transposition(int i, int j) const;
  /// alpha^l in factor i.
  int alpha(int i, int l) const;
  /// A permutation with trivial gamma.
  int permutation(const std::vector<int>& sigma) const;

  GroupAlg galg_mult(const GroupAlg& a, const GroupAlg& b) const;
  GroupAlg one() const { return {{table_.identity, Scalar::one(m_)}}; }

  /// e_i in factor `factor`: (1/m) sum_j z^{ij} alpha^j.
  GroupAlg frak_e(int i, int factor = 0) const;
  GroupAlg sigma_n() const;
  /// Average over the permutations fixing the first point.
  GroupAlg sigma_n_minus_1() const;
  /// Average over the whole group.
  GroupAlg bold_e() const;
  /// sigma_{n-1} (e_i x e_0 x ... x e_0).
  GroupAlg nu(int i) const;
  /// m = 1 names: e = sigma_n, e_bar = sigma_{n-1}.
  GroupAlg idempotent(const std::string& kind, int i = 0) const;

 private:
  int n_, m_;
  WreathConvention conv_;
  std::vector<WreathElement> elems_;
  std::map<WreathElement, int> index_;
  FiniteGroup table_;
};

bool galg_equal(const GroupAlg& a, const GroupAlg& b);

}  // namespace cmc
