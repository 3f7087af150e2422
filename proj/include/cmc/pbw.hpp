#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "cmc/scalar.hpp"

namespace cmc {

/// Finite group given by a dense multiplication table on indices 0..order-1.
struct FiniteGroup {
  int order = 1;
  int identity = 0;
  std::vector<int> table;  // table[g * order + h] = g h
  std::vector<int> inv;

  int mul(int g, int h) const { return table[g * order + h]; }
};

/// Element of the group algebra, sparse.
using GroupAlg = std::map<int, Scalar>;

/// Monomial x^a y^b g (a, b multi-indices over variables 1..n).
struct Monomial {
  std::vector<int> a;
  std::vector<int> b;
  int g = 0;

  int degree() const;
  auto operator<=>(const Monomial&) const = default;
};

class PBWElement {
 public:
  using Terms = std::map<Monomial, Scalar>;

  explicit PBWElement(int field = 1) : field_(field) {}
  int field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& mono, const Scalar& c);
  PBWElement& operator+=(const PBWElement& o);
  PBWElement& operator-=(const PBWElement& o);
  PBWElement& operator*=(const Scalar& s);
  friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
  friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
  friend PBWElement operator*(PBWElement a, const Scalar& s) { return a *= s; }
  friend PBWElement operator*(const Scalar& s, PBWElement a) { return a *= s; }
  friend bool operator==(const PBWElement& a, const PBWElement& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

 private:
  int field_;
  Terms terms_;
};

/// A generator: x_i, y_i (i zero-based) or a group element.
struct Letter {
  enum Kind { X, Y, G } kind;
  int index;
  auto operator<=>(const Letter&) const = default;
};

/// Algebra generated by commuting x_1..x_n, commuting y_1..y_n and a finite
/// group G, with
///   g x_i = cx(g,i) x_{px(g,i)} g,   g y_i = cy(g,i) y_{py(g,i)} g,
///   y_i x_j = x_j y_i + C(i,j)   (C(i,j) in the group algebra).
/// Elements are kept in the normal form sum x^a y^b g.
class PBWAlgebra {
 public:
  struct Action {
    int target;
    Scalar coeff;
  };

  PBWAlgebra(int n, int field, FiniteGroup group, std::vector<std::vector<Action>> x_action,
             std::vector<std::vector<Action>> y_action, std::vector<std::vector<GroupAlg>> commutators);

  int n() const { return n_; }
  int field() const { return field_; }
  const FiniteGroup& group() const { return group_; }
  const GroupAlg& commutator(int i, int j) const { return comm_[i][j]; }

  PBWElement one() const;
  PBWElement scalar(const Scalar& s) const;
  PBWElement x(int i) const;
  PBWElement y(int i) const;
  PBWElement group_element(int g) const;
  PBWElement group_algebra(const GroupAlg& a) const;
  PBWElement monomial(const Monomial& m) const;

  PBWElement mul_letter(const PBWElement& e, const Letter& l) const;
  PBWElement mul(const PBWElement& a, const PBWElement& b) const;
  /// Normal form of a product of letters, by successive right multiplication.
  PBWElement normal_form(const std::vector<Letter>& word) const;
  /// Independent route: leftmost-redex rewriting of the word itself.
  PBWElement rewrite_normal_form(const std::vector<Letter>& word) const;

  /// Letters spelling a monomial (x's, y's, then the group element if not 1).
  std::vector<Letter> spell(const Monomial& m) const;

 private:
  // NF of y^b x_j (no x prefix, trivial group part).
  const PBWElement& straighten(const std::vector<int>& b, int j) const;

  int n_;
  int field_;
  FiniteGroup group_;
  std::vector<std::vector<Action>> xa_, ya_;
  std::vector<std::vector<GroupAlg>> comm_;
  mutable std::mutex memo_mu_;
  mutable std::map<std::pair<std::vector<int>, int>, std::unique_ptr<PBWElement>> memo_;
};

/// All monomials with a + b of total degree <= d, every group element.
std::vector<Monomial> normal_monomials(int n, int group_order, int d);

}  // namespace cmc
