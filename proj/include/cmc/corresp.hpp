#pragma once

#include <string>
#include <vector>

#include "cmc/ncalg.hpp"
#include "cmc/repvar.hpp"

namespace cmc {

/// Position of a word over {x, y} in length-lex order: (2^len - 1) + binary
/// value with x = 0, y = 1.
std::size_t word_index(const Word& w);

/// [x,y] - 1 = xy - yx - 1 in the free algebra.
NCElement weyl_relator(int m = 1);

/// rho(r) = r^tau(X, Y): the operator by which r acts on C^n.
Matrix rho(const CMPoint& p, const NCElement& r);

/// Echelon basis of span(elems): leading term = largest word, leading
/// coefficient 1, rows sorted by leading word. Length-lex throughout.
std::vector<NCElement> echelon_basis(const std::vector<NCElement>& elems, int m);

/// True iff e lies in the span of an echelon basis.
bool in_span(const std::vector<NCElement>& echelon, const NCElement& e);

/// Basis of J_{<=d}: spanned by (a([x,y]-1) - eps(a)) c with |a|+2+|c| <= d.
std::vector<NCElement> j_basis(const CMPoint& p, int d);
/// Basis of K_{<=d} = {r : r^tau(X,Y) v = 0}.
std::vector<NCElement> eval_map_kernel(const CMPoint& p, int d);
/// Rank of the evaluation map on R_{<=j}, j = 0..d.
std::vector<long> codim_profile(const CMPoint& p, int d);

struct IdealModel {
  int n = 0;
  int d = 0;
  std::vector<long> codim_profile;
  std::vector<Scalar> fingerprint;
  std::vector<NCElement> J_basis;
  std::vector<NCElement> K_basis;
  CMPoint point;
};

class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

int default_degree(int n);

/// Throws InvariantViolation if J is not inside K or the profile is off.
IdealModel omega(const CMPoint& p, int d);
IdealModel omega(const CMPoint& p);

bool distinct(const IdealModel& a, const IdealModel& b);

/// Path version for the framed doubled cycle (no J reduction).
struct TauModel {
  int m = 1;
  std::vector<long> dims;
  int ell = 0;
  std::vector<Word> closed_paths;
  std::vector<Scalar> epsilon;
  std::vector<long> codim_profile;
  std::vector<NCElement> K_basis;
};

TauModel omega_tau(const FramedRep& r, int ell);

}  // namespace cmc
