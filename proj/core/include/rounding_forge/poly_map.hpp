#pragma once

#include <span>
#include <string>
#include <vector>

#include "rounding_forge/linear_algebra.hpp"
#include "rounding_forge/poly.hpp"

namespace rounding_forge {

/// Polynomial map R^m -> R^n whose coordinates have degree <= 2.
class PolyMap {
 public:
  static constexpr int kMaxDegree = 2;

  PolyMap() : PolyMap(0, 0) {}
  /// The zero map.
  PolyMap(int source_dim, int target_dim);
  /// Coordinates must all live in `source_dim` variables with degree <= 2.
  PolyMap(int source_dim, std::vector<Poly> coords);

  /// x -> a x for an n x m matrix.
  static PolyMap from_linear(const RationalMatrix& a);
  /// Coordinate i is x^T s_i x; every s_i symmetric m x m.
  static PolyMap from_quadratic(int source_dim,
                                std::span<const RationalMatrix> forms);

  int source_dim() const { return source_dim_; }
  int target_dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<Poly>& coords() const { return coords_; }
  const Poly& operator[](int i) const { return coords_[i]; }

  int degree() const;
  PolyMap homogeneous_part(int d) const;
  bool is_homogeneous(int d) const;
  bool is_zero() const;

  /// n x m coefficient matrix of the degree-1 part.
  RationalMatrix linear_matrix() const;
  /// Symmetric m x m matrix per coordinate for the degree-2 part, with
  /// coefficient of x_a x_b (a != b) split evenly across (a,b) and (b,a).
  std::vector<RationalMatrix> quadratic_matrices() const;

  /// Each coordinate multiplied by the scalar polynomial s.
  PolyMap times(const Poly& s) const;
  /// y -> this(sigma y) for an m x k matrix sigma; result has k variables.
  PolyMap compose_linear(const RationalMatrix& sigma) const;
  /// Rows appended with zero coordinates up to `target_dim`.
  PolyMap padded(int target_dim) const;

  std::vector<Rational> evaluate(std::span<const Rational> point) const;
  std::vector<double> evaluate(std::span<const double> point) const;

  std::string to_string() const;

  PolyMap& operator+=(const PolyMap& other);
  PolyMap& operator-=(const PolyMap& other);
  PolyMap& operator*=(const Rational& c);

  friend bool operator==(const PolyMap& a, const PolyMap& b) = default;

 private:
  void check() const;

  int source_dim_;
  std::vector<Poly> coords_;
};

PolyMap operator+(PolyMap a, const PolyMap& b);
PolyMap operator-(PolyMap a, const PolyMap& b);
PolyMap operator*(const Rational& c, PolyMap a);

/// sum_i u_i * v_i, the Euclidean inner-product polynomial.
Poly inner_poly(const PolyMap& u, const PolyMap& v);

/// Rank over Q of a homogeneous linear map. Throws Error(kNotLinear).
int rank_linear(const PolyMap& a);

}  // namespace rounding_forge
