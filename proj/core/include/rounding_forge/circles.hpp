#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rounding_forge/jets.hpp"
#include "rounding_forge/linear_algebra.hpp"

namespace rounding_forge {

/// base + t * dir.
struct Line {
  RationalVector base;
  RationalVector dir;

  /// Throws Error(kInvalidArgument) for dir = 0 or mismatched lengths.
  Line(RationalVector base, RationalVector dir);
};

/// Dense coefficients in t (index = power).
using UnivariateCoeffs = std::vector<Rational>;

/// t -> F(L(t)) / Q(L(t)) together with <F,F>(L(t)).
struct RationalCurve {
  std::vector<UnivariateCoeffs> numerators;
  UnivariateCoeffs denominator;
  UnivariateCoeffs norm_squared;
};

/// Throws Error(kDenominatorVanishesIdentically).
RationalCurve restrict_to_line(const FracQuadMap& map, const Line& line);

struct CircleRank {
  int rank = 0;
  bool in_circle = false;
};

/// Rank of the coefficient matrix of t -> (Q F, <F,F>, Q^2) in R^{n+2}.
/// A point set lies on a circle (or line, or point) exactly when its lifts
/// (y, <y,y>, 1) span at most three dimensions.
CircleRank circle_rank_exact(const RationalCurve& curve);

enum class FitKind { kPoint, kLine, kCircle };

struct CircleFit {
  std::vector<double> center;
  double radius = 0.0;
  /// Two orthonormal vectors spanning the fitted plane (line: first one is
  /// the direction).
  std::vector<double> plane_u;
  std::vector<double> plane_v;
  FitKind kind = FitKind::kPoint;
  /// Max distance of a sample to the fitted object.
  double residual = 0.0;
};

/// Principal 2-plane through the centroid, then a Kasa algebraic circle in
/// that plane. Throws Error(kTooFewPoints) for fewer than 5 points.
CircleFit circle_fit(std::span<const std::vector<double>> points);

/// R^m -> R^n evaluated in floating point; nullopt near a pole.
struct NumericMap {
  int source_dim = 0;
  int target_dim = 0;
  std::function<std::optional<std::vector<double>>(std::span<const double>)>
      evaluate;
  /// Value of the denominator, used by the sampling guard.
  std::function<double(std::span<const double>)> denominator;
};

NumericMap numeric_map(const FracQuadMap& map);

struct OracleOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  double tolerance = 1e-7;
  int points_per_line = 16;
};

struct TrialResult {
  int trial = 0;
  bool through_origin = false;
  FitKind kind = FitKind::kPoint;
  int points = 0;
  /// Fit residual divided by max(1, sample extent).
  double residual = 0.0;
};

struct OracleReport {
  OracleOptions options;
  double max_residual = 0.0;
  std::vector<TrialResult> trials;
  std::vector<int> violations;
  int skipped_lines = 0;
};

/// Samples random lines (even trials through 0, odd trials affine), maps at
/// least `points_per_line` samples each, and circle-fits the images. Trials
/// are seeded independently from (seed, trial index), so the report depends
/// only on the options.
OracleReport verify_rounding_numeric(const NumericMap& map,
                                     const OracleOptions& options);
OracleReport verify_rounding_numeric(const FracQuadMap& map,
                                     const OracleOptions& options);

}  // namespace rounding_forge
