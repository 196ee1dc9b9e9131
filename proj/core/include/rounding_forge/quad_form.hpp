#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rounding_forge/linear_algebra.hpp"
#include "rounding_forge/poly.hpp"

namespace rounding_forge {

/// Quadratic form x^T S x with S symmetric.
class QuadForm {
 public:
  QuadForm() = default;
  explicit QuadForm(RationalMatrix symmetric);
  static QuadForm zero(int dim);
  /// p must be homogeneous of degree 2 (or zero). Throws Error(kNotQuadratic).
  static QuadForm from_poly(const Poly& p);

  int dim() const { return matrix_.rows(); }
  const RationalMatrix& matrix() const { return matrix_; }

  Poly to_poly() const;
  Rational evaluate(std::span<const Rational> x) const;
  double evaluate(std::span<const double> x) const;

  /// B^T S B for a basis given as the columns of `basis`.
  QuadForm restricted(const RationalMatrix& basis) const;

  friend QuadForm operator+(const QuadForm& a, const QuadForm& b);
  friend QuadForm operator-(const QuadForm& a, const QuadForm& b);
  friend bool operator==(const QuadForm& a, const QuadForm& b) = default;

 private:
  RationalMatrix matrix_;
};

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int dim() const { return positive + negative + zero; }
  bool positive_definite() const { return negative == 0 && zero == 0; }
  /// Has a nonzero real isotropic vector.
  bool isotropic() const { return positive < dim() && negative < dim(); }
  std::string to_string() const;

  auto operator<=>(const Signature&) const = default;
};

/// P^T S P = diag(diagonal) with P invertible; the columns of `basis` are P.
struct Diagonalization {
  std::vector<Rational> diagonal;
  RationalMatrix basis;
};

/// Lagrange's congruent diagonalization over Q. A zero pivot with a nonzero
/// off-diagonal entry s_ij is first repaired by replacing e_i with e_i + e_j,
/// which turns the pivot into 2 s_ij (the x+y / x-y substitution).
Diagonalization lagrange_diagonalize(const QuadForm& form);

Signature form_signature(const QuadForm& form);

/// S = L D L^T with L unit lower triangular, no pivoting.
struct LdlFactors {
  RationalMatrix lower;
  std::vector<Rational> diagonal;
};

/// nullopt when a zero pivot appears (never the case for definite forms).
std::optional<LdlFactors> ldl_decompose(const QuadForm& form);

}  // namespace rounding_forge
