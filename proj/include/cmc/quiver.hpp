#pragma once

#include <string>
#include <vector>

#include "cmc/scalar.hpp"

namespace cmc {

/// Arrow a : src -> tgt. Representations store the matrix of a as a map
/// V_tgt -> V_src (right action), so in a word the letter a consumes a
/// vector at tgt and produces one at src.
struct Arrow {
  std::string name;
  int src;
  int tgt;

  int from() const { return tgt; }
  int to() const { return src; }
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex(const std::string& label) const;
  const Arrow& arrow(const std::string& name) const;
  bool has_arrow(const std::string& name) const;
  int loops_at(int v) const;
};

inline constexpr const char* kInfinity = "inf";

/// Cycle on vertices 0..m-1 with X_i : i+1 -> i (a single loop X when m = 1).
Quiver build_cyclic(int m);
/// Adds the reverse of every arrow: X -> Y, X_i -> Y_i, v -> w.
Quiver double_quiver(const Quiver& q);
/// Prepends the vertex "inf" and adds v : 0 -> inf.
Quiver frame(const Quiver& q);
/// double_quiver(frame(build_cyclic(m))); vertex order inf, 0, ..., m-1.
Quiver framed_double_cyclic(int m);

std::string x_name(int m, int i);
std::string y_name(int m, int i);

using DimVector = std::vector<long>;

long symmetric_pairing(const Quiver& q, const DimVector& a, const DimVector& b);
long tits_form(const Quiver& q, const DimVector& a);
bool is_positive_root(const Quiver& q, const DimVector& a);

/// tau has length m; rational entries.
bool is_regular(const std::vector<Rational>& tau);

Scalar pairing(const std::vector<Scalar>& lambda, const DimVector& a);

}  // namespace cmc
