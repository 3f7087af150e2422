#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cmc/matrix.hpp"
#include "cmc/ncalg.hpp"
#include "cmc/quiver.hpp"

namespace cmc {

/// (X, Y, v, w) with [X,Y] + Id + v w = 0; v is n x 1, w is 1 x n.
struct CMPoint {
  int n = 0;
  Matrix X, Y, v, w;

  int conductor() const { return X.conductor(); }
  /// {"x": X, "y": Y} for evaluating words of the free algebra.
  LetterMatrices letters() const;
};

/// Representation of the doubled framed cycle of length m with dimension
/// (1, dims). Matrices are stored per arrow in action orientation
/// (V_tgt -> V_src): X_i is n_{i+1} x n_i, Y_i is n_i x n_{i+1}, v is n_0 x 1,
/// w is 1 x n_0. lambda = (lambda_inf, lambda_0, ..., lambda_{m-1}).
struct FramedRep {
  int m = 1;
  std::vector<long> dims;
  std::vector<Scalar> lambda;
  LetterMatrices arrows;

  int conductor() const;
  Quiver quiver() const { return framed_double_cyclic(m); }
  /// Full dimension vector (1, n_0, ..., n_{m-1}).
  DimVector dimension_vector() const;
  long total_dim() const;
};

struct Residuals {
  std::vector<std::pair<std::string, Matrix>> items;
  bool ok() const;
  const Matrix& at(const std::string& name) const;
};

Residuals validate(const CMPoint& p);
Residuals validate(const FramedRep& r);

/// The framed representation of a CM point, lambda = (-n, 1).
FramedRep to_framed(const CMPoint& p);

CMPoint generate_cm(const std::vector<Scalar>& spectrum, const std::vector<Scalar>& y_diag);
/// Integer spectrum 0..n-1 shifted by `shift`, zero diagonal.
CMPoint generate_cm(int n, long shift = 0);

struct NakajimaParams {
  /// dims all 1: the X_k scalars (default k+1); m = 1: the CM spectrum.
  std::vector<Scalar> x;
  /// x_0 y_0 (dims all 1).
  Scalar p0;
  /// y_k used where x_k = 0 (dims all 1), or the CM diagonal (m = 1).
  std::vector<Scalar> y;
  /// Seed for the random ansatz of general dimension vectors.
  std::uint64_t seed = 1;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// lambda := (-tau . dims, tau). Throws GenerationError with "not a root",
/// "irregular tau" or "no solution found at given params".
FramedRep generate_nakajima(int m, const std::vector<long>& dims, const std::vector<Rational>& tau,
                            const NakajimaParams& params = {});

std::vector<Scalar> lambda_from_tau(const std::vector<Rational>& tau, const std::vector<long>& dims);

/// g holds one invertible block per vertex (inf first; its block is 1x1).
FramedRep gl_act(const FramedRep& r, const std::vector<Matrix>& g);
CMPoint gl_act(const CMPoint& p, const Matrix& g);

/// Block offsets of the vertices in the total space (inf first).
std::vector<long> vertex_offsets(const FramedRep& r);
/// Arrow actions as total-space matrices, in quiver arrow order.
std::vector<Matrix> global_matrices(const FramedRep& r);

bool is_simple(const FramedRep& r);
bool is_simple(const CMPoint& p);

/// Exact when both are simple; otherwise compares fingerprints and sets
/// *approximate (if given).
bool are_isomorphic(const FramedRep& a, const FramedRep& b, bool* approximate = nullptr);
bool are_isomorphic(const CMPoint& a, const CMPoint& b, bool* approximate = nullptr);

/// eps(a) = w a^tau(X, Y) v: the word acts on v letter by letter.
Scalar epsilon(const CMPoint& p, const Word& a);
Scalar epsilon(const CMPoint& p, const NCElement& a);
/// eps on a closed path at vertex 0 (arrow letters).
Scalar epsilon(const FramedRep& r, const Word& path);

/// Closed paths at 0 in the unframed doubled cycle, length <= len.
std::vector<Word> closed_paths_at_zero(int m, int len);

std::vector<Scalar> fingerprint(const CMPoint& p, int L);
std::vector<Scalar> fingerprint(const FramedRep& r, int L);

/// Rank-one factorization M = v w: v is the first nonzero column of M scaled
/// so its first nonzero entry is 1, w the matching row divided by that pivot.
std::pair<Matrix, Matrix> rank_one_factor(const Matrix& M);

}  // namespace cmc
