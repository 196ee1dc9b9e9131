#include "rounding_forge/linear_algebra.hpp"

#include <sstream>
#include <utility>

#include "rounding_forge/error.hpp"

namespace rounding_forge {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative matrix dimension");
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(
    int rows, std::span<const RationalVector> columns) {
  RationalMatrix m(rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(columns[c].size()) != rows) {
      throw Error(ErrorCode::kDimensionMismatch, "column length mismatch");
    }
    for (int r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalVector RationalMatrix::row(int r) const {
  return RationalVector(data_.begin() + index(r, 0),
                        data_.begin() + index(r, 0) + cols_);
}

RationalVector RationalMatrix::column(int c) const {
  RationalVector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r) {
    for (int c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

RationalVector RationalMatrix::operator*(std::span<const Rational> v) const {
  if (static_cast<int>(v.size()) != cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix-vector size mismatch");
  }
  RationalVector out(rows_);
  for (int r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (int c = 0; c < cols_; ++c) {
      if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) acc += (*this)(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product size mismatch");
  }
  RationalMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix sum size mismatch");
  }
  RationalMatrix out(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < rows_; ++r) {
    if (r > 0) os << ", ";
    os << '[';
    for (int c = 0; c < cols_; ++c) {
      if (c > 0) os << ", ";
      os << (*this)(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

int rank(const RationalMatrix& a) {
  const int rows = a.rows();
  const int cols = a.cols();
  // Scale each row by the lcm of its denominators; row scaling keeps rank.
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (int r = 0; r < rows; ++r) {
    Integer l = 1;
    for (int c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    for (int c = 0; c < cols; ++c) {
      m[r][c] = a(r, c).get_num() * (l / a(r, c).get_den());
    }
  }

  int rank_found = 0;
  Integer previous_pivot = 1;
  for (int c = 0; c < cols && rank_found < rows; ++c) {
    int pivot = -1;
    for (int r = rank_found; r < rows; ++r) {
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank_found]);
    const Integer& p = m[rank_found][c];
    for (int r = rank_found + 1; r < rows; ++r) {
      for (int j = c + 1; j < cols; ++j) {
        // Bareiss step: the division is exact by Sylvester's identity.
        Integer t = p * m[r][j] - m[r][c] * m[rank_found][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous_pivot.get_mpz_t());
        m[r][j] = std::move(t);
      }
      m[r][c] = 0;
    }
    previous_pivot = p;
    ++rank_found;
  }
  return rank_found;
}

RowEchelon reduced_row_echelon(const RationalMatrix& a) {
  RowEchelon out{a, {}};
  RationalMatrix& m = out.reduced;
  int next_row = 0;
  for (int c = 0; c < m.cols() && next_row < m.rows(); ++c) {
    int pivot = -1;
    for (int r = next_row; r < m.rows(); ++r) {
      if (sgn(m(r, c)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != next_row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(next_row, j));
    }
    const Rational inv = 1 / m(next_row, c);
    for (int j = c; j < m.cols(); ++j) m(next_row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == next_row || sgn(m(r, c)) == 0) continue;
      const Rational factor = m(r, c);
      for (int j = c; j < m.cols(); ++j) m(r, j) -= factor * m(next_row, j);
    }
    out.pivot_columns.push_back(c);
    ++next_row;
  }
  return out;
}

std::vector<RationalVector> nullspace(const RationalMatrix& a) {
  const RowEchelon e = reduced_row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : e.pivot_columns) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
      v[e.pivot_columns[i]] = -e.reduced(static_cast<int>(i), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& a,
                                    std::span<const Rational> b) {
  if (static_cast<int>(b.size()) != a.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "right-hand side size mismatch");
  }
  RationalMatrix augmented(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
    augmented(r, a.cols()) = b[r];
  }
  const RowEchelon e = reduced_row_echelon(augmented);
  if (!e.pivot_columns.empty() && e.pivot_columns.back() == a.cols()) {
    return std::nullopt;
  }
  RationalVector x(a.cols());
  for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
    x[e.pivot_columns[i]] = e.reduced(static_cast<int>(i), a.cols());
  }
  return x;
}

}  // namespace rounding_forge
