#include "rounding_forge/circles.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "rounding_forge/error.hpp"

namespace rounding_forge {

Line::Line(RationalVector base_in, RationalVector dir_in)
    : base(std::move(base_in)), dir(std::move(dir_in)) {
  if (base.size() != dir.size()) {
    throw Error(ErrorCode::kInvalidArgument, "line base and direction sizes differ");
  }
  if (std::all_of(dir.begin(), dir.end(),
                  [](const Rational& x) { return sgn(x) == 0; })) {
    throw Error(ErrorCode::kInvalidArgument, "line direction is zero");
  }
}

RationalCurve restrict_to_line(const FracQuadMap& map, const Line& line) {
  const int m = map.source_dim();
  if (static_cast<int>(line.base.size()) != m) {
    throw Error(ErrorCode::kDimensionMismatch, "line lives in the wrong space");
  }
  std::vector<Poly> images;
  images.reserve(m);
  for (int i = 0; i < m; ++i) {
    const Rational coeffs[] = {line.base[i], line.dir[i]};
    images.push_back(Poly::linear(1, coeffs));
  }
  const Poly q = map.denominator().substitute(images);
  if (q.is_zero()) {
    throw Error(ErrorCode::kDenominatorVanishesIdentically,
                "denominator vanishes identically on the line");
  }
  RationalCurve curve;
  Poly norm(1);
  for (const auto& f : map.numerator().coords()) {
    const Poly restricted = f.substitute(images);
    norm += restricted * restricted;
    curve.numerators.push_back(univariate_coefficients(restricted));
  }
  curve.denominator = univariate_coefficients(q);
  curve.norm_squared = univariate_coefficients(norm);
  return curve;
}

namespace {

UnivariateCoeffs convolve(const UnivariateCoeffs& a, const UnivariateCoeffs& b) {
  if (a.empty() || b.empty()) return {};
  UnivariateCoeffs out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

CircleRank circle_rank_exact(const RationalCurve& curve) {
  std::vector<UnivariateCoeffs> columns;
  for (const auto& f : curve.numerators) {
    columns.push_back(convolve(curve.denominator, f));
  }
  columns.push_back(curve.norm_squared);
  columns.push_back(convolve(curve.denominator, curve.denominator));

  std::size_t rows = 0;
  for (const auto& c : columns) rows = std::max(rows, c.size());
  RationalMatrix m(static_cast<int>(rows), static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < columns[c].size(); ++r) {
      m(static_cast<int>(r), c) = columns[c][r];
    }
  }
  CircleRank out;
  out.rank = rank(m);
  out.in_circle = out.rank <= 3;
  return out;
}

namespace {

double point_line_distance(const Eigen::VectorXd& w, const Eigen::VectorXd& u) {
  return (w - w.dot(u) * u).norm();
}

}  // namespace

CircleFit circle_fit(std::span<const std::vector<double>> points) {
  if (points.size() < 5) {
    throw Error(ErrorCode::kTooFewPoints,
                "circle_fit needs at least 5 points, got " +
                    std::to_string(points.size()));
  }
  const int n = static_cast<int>(points[0].size());
  const int count = static_cast<int>(points.size());
  Eigen::MatrixXd x(count, n);
  for (int i = 0; i < count; ++i) {
    if (static_cast<int>(points[i].size()) != n) {
      throw Error(ErrorCode::kDimensionMismatch, "points of different dimension");
    }
    for (int j = 0; j < n; ++j) x(i, j) = points[i][j];
  }
  const Eigen::VectorXd centroid = x.colwise().mean();
  x.rowwise() -= centroid.transpose();
  const double extent = x.rowwise().norm().maxCoeff();

  CircleFit fit;
  fit.center.assign(centroid.data(), centroid.data() + n);
  fit.plane_u.assign(n, 0.0);
  fit.plane_v.assign(n, 0.0);
  if (extent <= 1e-12 * (1.0 + centroid.norm())) {
    fit.kind = FitKind::kPoint;
    fit.residual = extent;
    return fit;
  }

  const Eigen::MatrixXd scaled = x / extent;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled, Eigen::ComputeThinV);
  const Eigen::VectorXd sigma = svd.singularValues();
  const Eigen::VectorXd u = svd.matrixV().col(0);
  fit.plane_u.assign(u.data(), u.data() + n);

  auto fit_line = [&] {
    fit.kind = FitKind::kLine;
    fit.radius = 0.0;
    fit.residual = 0.0;
    for (int i = 0; i < count; ++i) {
      fit.residual = std::max(
          fit.residual, point_line_distance(x.row(i).transpose(), u));
    }
    return fit;
  };

  if (n < 2 || sigma(1) <= 1e-9 * sigma(0)) return fit_line();

  const Eigen::VectorXd v = svd.matrixV().col(1);
  fit.plane_v.assign(v.data(), v.data() + n);

  // Kasa: minimize sum (a^2 + b^2 + D a + E b + F)^2 over the in-plane
  // coordinates, via its 3x3 normal equations.
  Eigen::MatrixXd design(count, 3);
  Eigen::VectorXd rhs(count);
  for (int i = 0; i < count; ++i) {
    const double a = scaled.row(i).dot(u);
    const double b = scaled.row(i).dot(v);
    design(i, 0) = a;
    design(i, 1) = b;
    design(i, 2) = 1.0;
    rhs(i) = -(a * a + b * b);
  }
  const Eigen::Matrix3d normal = design.transpose() * design;
  const Eigen::Vector3d solution =
      normal.ldlt().solve(design.transpose() * rhs);
  const double ca = -solution(0) / 2.0;
  const double cb = -solution(1) / 2.0;
  const double r2 = ca * ca + cb * cb - solution(2);
  if (!std::isfinite(r2) || r2 <= 0.0 || std::sqrt(r2) > 1e6) {
    return fit_line();
  }

  const double radius = std::sqrt(r2) * extent;
  const Eigen::VectorXd center_offset = (ca * u + cb * v) * extent;
  const Eigen::VectorXd center = centroid + center_offset;
  fit.kind = FitKind::kCircle;
  fit.radius = radius;
  fit.center.assign(center.data(), center.data() + n);
  fit.residual = 0.0;
  for (int i = 0; i < count; ++i) {
    const Eigen::VectorXd w = x.row(i).transpose() - center_offset;
    const double a = w.dot(u);
    const double b = w.dot(v);
    const double out_of_plane = (w - a * u - b * v).norm();
    const double in_plane = std::hypot(a, b) - radius;
    fit.residual = std::max(fit.residual, std::hypot(out_of_plane, in_plane));
  }
  return fit;
}

NumericMap numeric_map(const FracQuadMap& map) {
  NumericMap out;
  out.source_dim = map.source_dim();
  out.target_dim = map.target_dim();
  out.evaluate = [map](std::span<const double> x) { return map.evaluate(x); };
  out.denominator = [q = map.denominator()](std::span<const double> x) {
    return q.evaluate(x);
  };
  return out;
}

namespace {

constexpr double kPoleGuard = 1e-6;

}  // namespace

OracleReport verify_rounding_numeric(const NumericMap& map,
                                     const OracleOptions& options) {
  if (options.trials < 1) {
    throw Error(ErrorCode::kInvalidArgument, "oracle needs at least one trial");
  }
  const int m = map.source_dim;
  const int wanted = std::max(options.points_per_line, 5);
  OracleReport report;
  report.options = options;

  for (int trial = 0; trial < options.trials; ++trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                      static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::uniform_real_distribution<double> param(-1.0, 1.0);

    const bool through_origin = trial % 2 == 0;
    std::vector<double> base(m, 0.0), dir(m);
    double dir_norm = 0.0;
    for (auto& d : dir) {
      d = normal(rng);
      dir_norm += d * d;
    }
    dir_norm = std::sqrt(dir_norm);
    for (auto& d : dir) d /= dir_norm;
    if (!through_origin) {
      for (auto& b : base) b = 0.5 * normal(rng);
    }

    std::vector<std::vector<double>> images;
    std::vector<double> x(m);
    for (int attempt = 0;
         attempt < 8 * wanted && static_cast<int>(images.size()) < wanted;
         ++attempt) {
      const double t = param(rng);
      for (int i = 0; i < m; ++i) x[i] = base[i] + t * dir[i];
      if (std::abs(map.denominator(x)) < kPoleGuard * (1.0 + t * t)) continue;
      auto y = map.evaluate(x);
      if (!y || !std::all_of(y->begin(), y->end(),
                             [](double v) { return std::isfinite(v); })) {
        continue;
      }
      images.push_back(std::move(*y));
    }
    if (static_cast<int>(images.size()) < 5) {
      ++report.skipped_lines;
      continue;
    }

    const CircleFit fit = circle_fit(images);
    std::vector<double> mean(map.target_dim, 0.0);
    for (const auto& p : images) {
      for (int j = 0; j < map.target_dim; ++j) mean[j] += p[j];
    }
    for (auto& v : mean) v /= static_cast<double>(images.size());
    double extent = 0.0;
    for (const auto& p : images) {
      double d2 = 0.0;
      for (int j = 0; j < map.target_dim; ++j) {
        d2 += (p[j] - mean[j]) * (p[j] - mean[j]);
      }
      extent = std::max(extent, std::sqrt(d2));
    }
    TrialResult result{trial, through_origin, fit.kind,
                       static_cast<int>(images.size()),
                       fit.residual / std::max(1.0, extent)};
    report.max_residual = std::max(report.max_residual, result.residual);
    if (result.residual > options.tolerance) report.violations.push_back(trial);
    report.trials.push_back(result);
  }
  return report;
}

OracleReport verify_rounding_numeric(const FracQuadMap& map,
                                     const OracleOptions& options) {
  return verify_rounding_numeric(numeric_map(map), options);
}

}  // namespace rounding_forge
