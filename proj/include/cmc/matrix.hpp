#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmc/scalar.hpp"

namespace cmc {

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense row-major matrix over Q(zeta_m). Zero-sized shapes are legal.
/// Column vectors are rows x 1 matrices.
class Matrix {
 public:
  Matrix() : Matrix(0, 0, 1) {}
  Matrix(std::size_t rows, std::size_t cols, int m);

  static Matrix identity(std::size_t n, int m);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, int m);
  /// Convenience for tests and fixtures: integer entries.
  static Matrix from_ints(const std::vector<std::vector<long>>& rows, int m = 1);
  static Matrix column(const std::vector<Scalar>& entries, int m);
  static Matrix diagonal(const std::vector<Scalar>& entries, int m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int conductor() const { return m_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Scalar>& entries() const { return data_; }

  bool is_zero() const;
  Matrix transpose() const;
  Scalar trace() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix col(std::size_t j) const { return block(0, j, rows_, 1); }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  int m_;
  std::vector<Scalar> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form, zero rows trimmed
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Reduced row echelon form with leading-nonzero pivoting.
RowEchelon rref(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Basis of the right null space {u : a u = 0}, as cols x 1 column vectors.
std::vector<Matrix> kernel_basis(const Matrix& a);

/// Basis of the column space in column-echelon form (columns of the result).
Matrix image_basis(const Matrix& a);

/// Some solution of a x = b, or nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

Matrix inverse(const Matrix& a);

/// Basis of {g : g actA[k] = actB[k] g for all k}; g has shape b x a.
/// When `mask` is given (b x a booleans, row-major) only the marked entries
/// of g may be nonzero.
std::vector<Matrix> intertwiner_space(const std::vector<Matrix>& act_a,
                                      const std::vector<Matrix>& act_b,
                                      const std::vector<bool>* mask = nullptr);

/// Stack matrices vertically (all must have the same column count).
Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols, int m);
/// Columns side by side (all must have the same row count).
Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows, int m);

}  // namespace cmc
