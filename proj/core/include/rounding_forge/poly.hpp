#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rounding_forge/rational.hpp"

namespace rounding_forge {

/// A monomial of total degree at most kMaxDegree, stored as the multiset of
/// its variable indices sorted in decreasing order: x3^2*x1 is {2, 2, 0}.
///
/// The defaulted ordering is graded lexicographic with x1 < x2 < ... < xm:
/// degree first, then the sorted index lists compared lexicographically,
/// which matches comparing exponent vectors from the highest variable down.
class Monomial {
 public:
  static constexpr int kMaxDegree = 4;

  Monomial() = default;
  static Monomial variable(int index);
  static Monomial from_exponents(std::span<const int> exponents);

  int degree() const { return degree_; }
  std::span<const std::uint16_t> variables() const {
    return {vars_.data(), static_cast<std::size_t>(degree_)};
  }
  int exponent(int index) const;
  /// Largest variable index + 1, or 0 for the constant monomial.
  int min_num_vars() const { return degree_ == 0 ? 0 : vars_[0] + 1; }

  /// Throws Error(kDegreeOverflow) past kMaxDegree.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial cofactor_in(const Monomial& other) const;

  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::uint8_t degree_ = 0;
  std::array<std::uint16_t, kMaxDegree> vars_{};
};

/// Multivariate polynomial over Q in a fixed number of variables with total
/// degree at most Monomial::kMaxDegree. Zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Poly(int num_vars = 0);
  static Poly constant(int num_vars, const Rational& c);
  static Poly variable(int num_vars, int index);
  /// c_0 + sum_i c_{i+1} x_i for coeffs of length num_vars + 1; or the
  /// homogeneous sum c_i x_i when coeffs has length num_vars.
  static Poly linear(int num_vars, std::span<const Rational> coeffs);
  static Poly monomial(int num_vars, const Monomial& m, const Rational& c);

  int num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const { return coefficient(Monomial()); }

  Poly homogeneous_part(int d) const;
  /// True for the zero polynomial as well.
  bool is_homogeneous(int d) const;

  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  /// Replaces x_i by images[i]; every image must share one num_vars, which
  /// becomes the result's num_vars.
  Poly substitute(std::span<const Poly> images) const;

  /// Same polynomial viewed in a ring with more variables.
  Poly extended(int num_vars) const;

  /// Homogenizes to degree `degree` using variable `t_index` (which must be
  /// a fresh variable, i.e. >= num_vars()); result has t_index+1 variables.
  Poly homogenized(int degree, int t_index) const;

  /// "x1^2 - 1/2*x1*x2 + 3"; zero is "0".
  std::string to_string() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

 private:
  int num_vars_;
  Terms terms_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Poly a, const Rational& c);
Poly operator*(const Rational& c, Poly a);

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

/// Multivariate division of f by a single divisor g under graded lex order.
/// A single polynomial is a Groebner basis of the ideal it generates, so the
/// remainder is zero exactly when g divides f. Throws Error(kDivisionByZero).
PolyDivision divide(const Poly& f, const Poly& g);

/// h with f = g*h, or nullopt when g does not divide f.
std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

/// Dense coefficients of a polynomial in one variable, index = power.
std::vector<Rational> univariate_coefficients(const Poly& p);

}  // namespace rounding_forge
