#include "rounding_forge/spheres.hpp"

#include <algorithm>
#include <cmath>

namespace rounding_forge {

HomogenizedMap homogenize(const FracQuadMap& map) {
  if (map.denominator().constant_term() != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "homogenize expects a denominator normalized to Q(0) = 1");
  }
  const int m = map.source_dim();
  std::vector<Poly> coords;
  coords.reserve(map.target_dim());
  for (const auto& f : map.numerator().coords()) {
    coords.push_back(f.homogenized(2, m));
  }
  return HomogenizedMap{PolyMap(m + 1, std::move(coords)),
                        QuadForm::from_poly(map.denominator().homogenized(2, m))};
}

NormSplit split_norm(const HomogenizedMap& h) {
  const Poly norm = inner_poly(h.numerator, h.numerator);
  auto quotient = divide_exact(norm, h.denominator.to_poly());
  if (!quotient) {
    throw Error(ErrorCode::kNotDivisible,
                "<F~,F~> is not divisible by the homogenized denominator");
  }
  if (quotient->is_zero() || !quotient->is_homogeneous(2)) {
    throw Error(ErrorCode::kQ2NotQuadratic,
                "norm quotient is not a quadratic form: " + quotient->to_string());
  }
  NormSplit out{h.denominator, QuadForm::from_poly(*quotient)};
  const Signature s1 = form_signature(out.q1);
  if (s1.positive == 0 && s1.negative > 0) {
    out.q1 = QuadForm::zero(out.q1.dim()) - out.q1;
    out.q2 = QuadForm::zero(out.q2.dim()) - out.q2;
  }
  return out;
}

DegenerateLiftError::DegenerateLiftError(Signature signature,
                                         RationalVector witness)
    : Error(ErrorCode::kDegenerate,
            "Q1 + Q2 has signature " + signature.to_string() +
                ", not positive definite"),
      signature_(signature),
      witness_(std::move(witness)) {}

QuadSphereMap make_sphere_map(PolyMap f, QuadForm metric) {
  if (!f.is_homogeneous(2) || f.source_dim() != metric.dim()) {
    throw Error(ErrorCode::kInvalidArgument,
                "sphere map must be homogeneous quadratic on the metric's space");
  }
  const Poly g = metric.to_poly();
  if (inner_poly(f, f) != g * g) {
    throw Error(ErrorCode::kInvalidArgument, "sphere map identity <f,f> = G^2 fails");
  }
  auto ldl = ldl_decompose(metric);
  if (!ldl || !std::all_of(ldl->diagonal.begin(), ldl->diagonal.end(),
                           [](const Rational& d) { return sgn(d) > 0; })) {
    throw Error(ErrorCode::kDegenerate, "metric is not positive definite");
  }
  return QuadSphereMap{std::move(f), std::move(metric), std::move(*ldl)};
}

QuadSphereMap sphere_lift(const RoundingJet& rj) {
  const FracQuadMap canonical = canonical_rounding(rj);
  const HomogenizedMap h = homogenize(canonical);
  const NormSplit split = split_norm(h);
  QuadForm g = split.q1 + split.q2;
  const Signature sig = form_signature(g);
  if (!sig.positive_definite()) {
    auto kernel = nullspace(g.matrix());
    RationalVector witness;
    if (!kernel.empty()) {
      witness = std::move(kernel.front());
    } else {
      // Indefinite and nonsingular: a nonpositive diagonal direction.
      const Diagonalization d = lagrange_diagonalize(g);
      for (int i = 0; i < g.dim(); ++i) {
        if (sgn(d.diagonal[i]) <= 0) {
          witness = d.basis.column(i);
          break;
        }
      }
    }
    throw DegenerateLiftError(sig, std::move(witness));
  }

  std::vector<Poly> coords;
  coords.reserve(h.numerator.target_dim() + 1);
  for (const auto& f : h.numerator.coords()) coords.push_back(f * Rational(2));
  coords.push_back((split.q1 - split.q2).to_poly());
  return make_sphere_map(PolyMap(g.dim(), std::move(coords)), std::move(g));
}

namespace {

constexpr double kChartGuard = 1e-9;

}  // namespace

std::vector<double> evaluate_on_sphere(const QuadSphereMap& sm,
                                       std::span<const double> x) {
  const double g = sm.metric.evaluate(x);
  if (!(g > kChartGuard)) {
    throw Error(ErrorCode::kPoleProximity, "point too close to the origin");
  }
  std::vector<double> y = sm.map.evaluate(x);
  for (auto& v : y) v /= g;
  return y;
}

std::vector<double> evaluate_factored(const QuadSphereMap& sm,
                                      std::span<const double> x) {
  const int dim = sm.source_dim();
  if (static_cast<int>(x.size()) != dim - 1) {
    throw Error(ErrorCode::kDimensionMismatch, "chart point has wrong size");
  }
  std::vector<double> lifted(x.begin(), x.end());
  lifted.push_back(1.0);

  // u = sqrt(D) L^T X, so |u|^2 = G(X).
  double norm2 = 0.0;
  for (int i = 0; i < dim; ++i) {
    double ui = 0.0;
    for (int j = i; j < dim; ++j) ui += sm.normalizer.lower(j, i).get_d() * lifted[j];
    ui *= std::sqrt(sm.normalizer.diagonal[i].get_d());
    norm2 += ui * ui;
  }
  if (!(norm2 > kChartGuard)) {
    throw Error(ErrorCode::kPoleProximity, "chart point maps near the origin");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& v : lifted) v *= scale;

  const std::vector<double> y = sm.map.evaluate(lifted);
  const double denom = 1.0 + y.back();
  if (!(denom > kChartGuard)) {
    throw Error(ErrorCode::kPoleProximity, "image near the projection pole");
  }
  std::vector<double> z(y.begin(), y.end() - 1);
  for (auto& v : z) v /= denom;
  return z;
}

}  // namespace rounding_forge
