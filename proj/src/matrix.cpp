#include "cmc/matrix.hpp"

#include <sstream>

namespace cmc {

Matrix::Matrix(std::size_t rows, std::size_t cols, int m)
    : rows_(rows), cols_(cols), m_(m), data_(rows * cols, Scalar::zero(m)) {}

Matrix Matrix::identity(std::size_t n, int m) {
  Matrix r(n, n, m);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = Scalar::one(m);
  return r;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, int m) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows[0].size() : 0;
  Matrix r(nr, nc, m);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw ShapeMismatch("ragged rows");
    for (std::size_t j = 0; j < nc; ++j) {
      if (rows[i][j].conductor() != m) throw ConductorMismatch("entry conductor differs");
      r(i, j) = rows[i][j];
    }
  }
  return r;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows, int m) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows[0].size() : 0;
  Matrix r(nr, nc, m);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw ShapeMismatch("ragged rows");
    for (std::size_t j = 0; j < nc; ++j) r(i, j) = Scalar(rows[i][j], m);
  }
  return r;
}

Matrix Matrix::column(const std::vector<Scalar>& entries, int m) {
  Matrix r(entries.size(), 1, m);
  for (std::size_t i = 0; i < entries.size(); ++i) r(i, 0) = entries[i];
  return r;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& entries, int m) {
  Matrix r(entries.size(), entries.size(), m);
  for (std::size_t i = 0; i < entries.size(); ++i) r(i, i) = entries[i];
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, m_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw ShapeMismatch("trace of non-square matrix");
  Scalar t = Scalar::zero(m_);
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("block out of range");
  Matrix r(nr, nc, m_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
  return r;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeMismatch("block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shape mismatch");
  if (m_ != o.m_) throw ConductorMismatch("matrix conductor mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix difference shape mismatch");
  if (m_ != o.m_) throw ConductorMismatch("matrix conductor mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& e : data_) e *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) {
    throw ShapeMismatch("product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                        " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  }
  if (a.m_ != b.m_) throw ConductorMismatch("matrix conductor mismatch");
  Matrix r(a.rows_, b.cols_, a.m_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& e : r.data_) e = -e;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.m_ == b.m_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j);
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RowEchelon rref(const Matrix& a) {
  Matrix r = a;
  const std::size_t nr = r.rows(), nc = r.cols();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < nc && row < nr; ++col) {
    std::size_t piv = row;
    while (piv < nr && r(piv, col).is_zero()) ++piv;
    if (piv == nr) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < nc; ++j) std::swap(r(piv, j), r(row, j));
    }
    Scalar inv = r(row, col).inv();
    for (std::size_t j = col; j < nc; ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      Scalar f = r(i, col);
      for (std::size_t j = col; j < nc; ++j) {
        if (!r(row, j).is_zero()) r(i, j) -= f * r(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {r.block(0, 0, row, nc), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

std::vector<Matrix> kernel_basis(const Matrix& a) {
  const int m = a.conductor();
  auto [red, pivots] = rref(a);
  const std::size_t nc = a.cols();
  std::vector<bool> is_pivot(nc, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    Matrix v(nc, 1, m);
    v(free, 0) = Scalar::one(m);
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r], 0) = -red(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix image_basis(const Matrix& a) { return rref(a.transpose()).reduced.transpose(); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeMismatch("solve: row count mismatch");
  const int m = a.conductor();
  const std::size_t nc = a.cols(), nb = b.cols();
  Matrix aug = hstack({a, b}, a.rows(), m);
  auto [red, pivots] = rref(aug);
  Matrix x(nc, nb, m);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= nc) return std::nullopt;
    for (std::size_t j = 0; j < nb; ++j) x(pivots[r], j) = red(r, nc + j);
  }
  return x;
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw ShapeMismatch("inverse of non-square matrix");
  const std::size_t n = a.rows();
  auto x = solve(a, Matrix::identity(n, a.conductor()));
  if (!x || rank(a) != n) throw SingularMatrix("matrix is singular");
  return *x;
}

std::vector<Matrix> intertwiner_space(const std::vector<Matrix>& act_a,
                                      const std::vector<Matrix>& act_b,
                                      const std::vector<bool>* mask) {
  if (act_a.size() != act_b.size()) throw ShapeMismatch("intertwiner: action lists differ in length");
  if (act_a.empty()) throw std::invalid_argument("intertwiner: empty action list");
  const std::size_t da = act_a[0].rows(), db = act_b[0].rows();
  const int m = act_a[0].conductor();
  for (std::size_t k = 0; k < act_a.size(); ++k) {
    if (!act_a[k].is_square() || act_a[k].rows() != da || !act_b[k].is_square() ||
        act_b[k].rows() != db) {
      throw ShapeMismatch("intertwiner: actions must be square of consistent size");
    }
  }
  // Unknowns: entries g(i,j) allowed by the mask.
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::vector<long> index(db * da, -1);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < da; ++j)
      if (!mask || (*mask)[i * da + j]) {
        index[i * da + j] = static_cast<long>(unknowns.size());
        unknowns.emplace_back(i, j);
      }
  // Equation (g A - B g)(i,j) = sum_k g(i,k) A(k,j) - sum_k B(i,k) g(k,j).
  Matrix sys(act_a.size() * db * da, unknowns.size(), m);
  std::size_t row = 0;
  for (std::size_t t = 0; t < act_a.size(); ++t) {
    const Matrix& A = act_a[t];
    const Matrix& B = act_b[t];
    for (std::size_t i = 0; i < db; ++i) {
      for (std::size_t j = 0; j < da; ++j, ++row) {
        for (std::size_t k = 0; k < da; ++k) {
          long u = index[i * da + k];
          if (u >= 0 && !A(k, j).is_zero()) sys(row, u) += A(k, j);
        }
        for (std::size_t k = 0; k < db; ++k) {
          long u = index[k * da + j];
          if (u >= 0 && !B(i, k).is_zero()) sys(row, u) -= B(i, k);
        }
      }
    }
  }
  std::vector<Matrix> result;
  for (const auto& v : kernel_basis(sys)) {
    Matrix g(db, da, m);
    for (std::size_t u = 0; u < unknowns.size(); ++u) g(unknowns[u].first, unknowns[u].second) = v(u, 0);
    result.push_back(std::move(g));
  }
  return result;
}

Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols, int m) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw ShapeMismatch("vstack: column count mismatch");
    total += p.rows();
  }
  Matrix r(total, cols, m);
  std::size_t at = 0;
  for (const auto& p : parts) {
    r.set_block(at, 0, p);
    at += p.rows();
  }
  return r;
}

Matrix hstack(const std::vector<Matrix>& parts, std::size_t rows, int m) {
  std::size_t total = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw ShapeMismatch("hstack: row count mismatch");
    total += p.cols();
  }
  Matrix r(rows, total, m);
  std::size_t at = 0;
  for (const auto& p : parts) {
    r.set_block(0, at, p);
    at += p.cols();
  }
  return r;
}

}  // namespace cmc
