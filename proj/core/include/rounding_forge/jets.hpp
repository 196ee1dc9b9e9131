#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rounding_forge/error.hpp"
#include "rounding_forge/linear_algebra.hpp"
#include "rounding_forge/poly.hpp"
#include "rounding_forge/poly_map.hpp"
#include "rounding_forge/quad_form.hpp"

namespace rounding_forge {

/// Linear part A and homogeneous quadratic part B of a germ R^m -> R^n at 0.
class Jet2 {
 public:
  /// Throws Error(kNotLinear / kNotQuadratic / kDimensionMismatch).
  Jet2(PolyMap linear, PolyMap quadratic);

  int source_dim() const { return linear_.source_dim(); }
  int target_dim() const { return linear_.target_dim(); }
  const PolyMap& linear() const { return linear_; }
  const PolyMap& quadratic() const { return quadratic_; }

  friend bool operator==(const Jet2& a, const Jet2& b) = default;

 private:
  PolyMap linear_;
  PolyMap quadratic_;
};

/// A 2-jet that passed the divisibility test, with its witnesses
/// <A,B> = p <A,A> and <B,B> = q <A,A>.
struct RoundingJet {
  Jet2 jet;
  Poly p;  // linear
  Poly q;  // homogeneous quadratic
  int rank_a = 0;
};

/// F/Q with deg F, deg Q <= 2 and <F,F> divisible by Q.
class FracQuadMap {
 public:
  /// Throws Error(kNotDivisible) when Q does not divide <F,F>,
  /// Error(kDivisionByZero) for Q = 0.
  FracQuadMap(PolyMap numerator, Poly denominator);

  int source_dim() const { return numerator_.source_dim(); }
  int target_dim() const { return numerator_.target_dim(); }
  const PolyMap& numerator() const { return numerator_; }
  const Poly& denominator() const { return denominator_; }
  /// <F,F> / Q.
  const Poly& norm_quotient() const { return norm_quotient_; }

  /// nullopt where Q vanishes.
  std::optional<std::vector<Rational>> evaluate(
      std::span<const Rational> x) const;
  std::optional<std::vector<double>> evaluate(std::span<const double> x) const;

  friend bool operator==(const FracQuadMap& a, const FracQuadMap& b) {
    return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_;
  }

 private:
  PolyMap numerator_;
  Poly denominator_;
  Poly norm_quotient_;
};

enum class DivisibilityCondition { kInnerAB, kInnerBB };

/// Raised by validate_jet when <A,B> or <B,B> is not a multiple of <A,A>.
class NotDivisibleError : public Error {
 public:
  NotDivisibleError(DivisibilityCondition which, Poly remainder);
  DivisibilityCondition which() const { return which_; }
  const Poly& remainder() const { return remainder_; }

 private:
  DivisibilityCondition which_;
  Poly remainder_;
};

/// Throws Error(kRankTooLow) for rank A < 2 and NotDivisibleError.
RoundingJet validate_jet(const Jet2& jet);

/// F = A + B - 2pA, Q = 1 - 2p + q. Checks <F,F> = Q <A,A> exactly.
FracQuadMap canonical_rounding(const RoundingJet& rj);

/// Linear and quadratic Taylor parts at 0 of F/Q. Requires F(0) = 0 and
/// Q(0) != 0.
Jet2 two_jet(const FracQuadMap& map);

/// x0 + sqrt(radicand) * x1. radicand = 0 means the witness is rational.
struct QuadraticVector {
  RationalVector rational_part;
  Rational radicand;
  RationalVector irrational_part;

  bool is_rational() const { return sgn(radicand) == 0; }
  std::vector<double> approximate() const;
};

struct DegeneracyVerdict {
  bool degenerate = false;
  /// Rational basis of ker A, read off the RREF of A.
  std::vector<RationalVector> kernel;
  /// Signature of (q - p^2) restricted to ker A.
  Signature restricted_signature;
  std::optional<QuadraticVector> witness;
};

/// Degenerate iff ker A != 0 and q - p^2 has a nonzero real zero on ker A,
/// i.e. is not definite there.
DegeneracyVerdict is_degenerate(const RoundingJet& rj);

/// The equivalent jet (A, B - pA), for which p' = 0 and q' = q - p^2.
RoundingJet normalize_p(const RoundingJet& rj);

struct DegenerateFactorization {
  /// k x m projection whose kernel is ker A ∩ ker B' (B' = B - pA).
  RationalMatrix projection;
  /// m x k right inverse of the projection used to read off the reduced jet.
  RationalMatrix section;
  RoundingJet reduced;
};

/// Throws Error(kNotDegenerate) or Error(kIrrationalKernelWitness).
DegenerateFactorization factor_degenerate(const RoundingJet& rj);

/// Linear l with c = l * a exactly, or nullopt. Throws Error(kRankTooLow)
/// for rank a < 2.
std::optional<Poly> parallel_factor(const PolyMap& a, const PolyMap& c);

struct EquivalenceWitness {
  Rational lambda;
  Poly l;
};

/// (lambda, l) with A2 = lambda A1 and B2 = lambda^2 B1 + l A1.
std::optional<EquivalenceWitness> jets_equivalent(const Jet2& j1,
                                                  const Jet2& j2);

/// (lambda A, lambda^2 B + l A).
Jet2 transform_jet(const Jet2& jet, const Rational& lambda, const Poly& l);

struct ComponentCheck {
  enum class Pairing { kLinearWithMap, kMapWithMap };
  Pairing pairing;
  int degree = 0;
  bool divisible = false;
  Poly remainder;
};

/// Treats phi as a series truncated at degree `truncation` and checks every
/// homogeneous component of <A,phi> and <phi,phi> of degree <= truncation+1
/// for divisibility by <A,A>. Throws Error(kRankTooLow).
std::vector<ComponentCheck> check_series_divisibility(const PolyMap& phi,
                                                      int truncation);

}  // namespace rounding_forge
