#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rounding_forge/rational.hpp"

namespace rounding_forge {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);
  /// Builds a matrix whose columns are the given vectors (all equal length).
  static RationalMatrix from_columns(int rows,
                                     std::span<const RationalVector> columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return data_[index(r, c)]; }
  const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

  RationalVector row(int r) const;
  RationalVector column(int c) const;

  RationalMatrix transpose() const;
  bool is_symmetric() const;
  bool is_zero() const;

  RationalVector operator*(std::span<const Rational> v) const;
  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a,
                         const RationalMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over Q. Rows are cleared of denominators, then eliminated with
/// fraction-free (Bareiss) steps in Z.
int rank(const RationalMatrix& a);

struct RowEchelon {
  RationalMatrix reduced;
  /// Pivot column of each nonzero row, in increasing order.
  std::vector<int> pivot_columns;
};

/// Reduced row echelon form, pivots searched left to right.
RowEchelon reduced_row_echelon(const RationalMatrix& a);

/// Basis of {x : a x = 0}. One vector per free column (in increasing column
/// order), with a 1 in that free position, read off the RREF.
std::vector<RationalVector> nullspace(const RationalMatrix& a);

/// Some solution of a x = b, or nullopt when inconsistent. Free variables
/// are set to zero.
std::optional<RationalVector> solve(const RationalMatrix& a,
                                    std::span<const Rational> b);

}  // namespace rounding_forge
