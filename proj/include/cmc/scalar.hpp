#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace cmc {

using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ConductorMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int euler_phi(int m);

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int m);

/// An element of the cyclotomic field Q(zeta_m), stored as its coordinates in
/// the power basis 1, z, ..., z^{phi(m)-1} of Q[z]/Phi_m(z).
///
/// Every scalar carries its conductor; arithmetic between different
/// conductors throws ConductorMismatch instead of embedding silently.
class Scalar {
 public:
  Scalar() : Scalar(0, 1) {}
  explicit Scalar(int m);                    // zero of Q(zeta_m)
  Scalar(const Rational& q, int m);          // embedded rational
  Scalar(long q, int m) : Scalar(Rational(q), m) {}

  static Scalar zero(int m) { return Scalar(m); }
  static Scalar one(int m) { return Scalar(1, m); }
  static Scalar root_of_unity(int m, long k);
  static Scalar from_coeffs(int m, std::vector<Rational> coeffs);

  int conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Value of a rational scalar; throws if the scalar is not rational.
  const Rational& rational() const;

  Scalar inv() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Total order on coordinates; only used for canonical sorting.
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void check_same(const Scalar& o) const;

  int m_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses "p/q" or "p" (decimal integers).
Rational parse_rational(const std::string& text);

}  // namespace cmc
