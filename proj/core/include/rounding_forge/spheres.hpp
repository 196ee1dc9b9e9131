#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rounding_forge/jets.hpp"
#include "rounding_forge/quad_form.hpp"

namespace rounding_forge {

/// F and Q homogenized with an extra last coordinate t.
struct HomogenizedMap {
  PolyMap numerator;  // homogeneous quadratic on R^{m+1}
  QuadForm denominator;
};

/// Requires Q(0) = 1. Variables are x1..xm followed by t.
HomogenizedMap homogenize(const FracQuadMap& map);

struct NormSplit {
  QuadForm q1;  // the homogenized denominator
  QuadForm q2;  // <F~,F~> / Q~
};

/// <F~,F~> = Q1 Q2 with both forms nonnegative where the signs allow.
/// Throws Error(kNotDivisible) or Error(kQ2NotQuadratic).
NormSplit split_norm(const HomogenizedMap& h);

/// Homogeneous quadratic f: R^{m+1} -> R^{n+1} with <f,f> = G^2, G positive
/// definite, and G = L D L^T. In coordinates u = sqrt(D) L^T x the map sends
/// the unit sphere to the unit sphere.
struct QuadSphereMap {
  PolyMap map;
  QuadForm metric;
  LdlFactors normalizer;

  int source_dim() const { return map.source_dim(); }
  int target_dim() const { return map.target_dim(); }
};

/// sphere_lift failure: G = Q1 + Q2 is not positive definite. The witness is
/// a nonzero vector on which G vanishes.
class DegenerateLiftError : public Error {
 public:
  DegenerateLiftError(Signature signature, RationalVector witness);
  const Signature& signature() const { return signature_; }
  const RationalVector& witness() const { return witness_; }

 private:
  Signature signature_;
  RationalVector witness_;
};

/// f = (2F~, Q1 - Q2), G = Q1 + Q2. Throws DegenerateLiftError.
QuadSphereMap sphere_lift(const RoundingJet& rj);

/// Builds the sphere map from f and G, checking <f,f> = G^2 and G > 0.
QuadSphereMap make_sphere_map(PolyMap f, QuadForm metric);

/// Embeds x at t = 1, normalizes to the G-unit sphere, applies f and
/// projects stereographically from -e_{n+1} onto {y_{n+1} = 0}. The point
/// above the origin maps to e_{n+1} and then to 0. Throws
/// Error(kPoleProximity) when a denominator drops below 1e-9.
std::vector<double> evaluate_factored(const QuadSphereMap& sm,
                                      std::span<const double> x);

/// f(x) / G(x) for x != 0, a point of the unit sphere S^n.
std::vector<double> evaluate_on_sphere(const QuadSphereMap& sm,
                                       std::span<const double> x);

}  // namespace rounding_forge
