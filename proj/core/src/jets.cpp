#include "rounding_forge/jets.hpp"

#include <cmath>
#include <stdexcept>

namespace rounding_forge {

Jet2::Jet2(PolyMap linear, PolyMap quadratic)
    : linear_(std::move(linear)), quadratic_(std::move(quadratic)) {
  if (linear_.source_dim() != quadratic_.source_dim() ||
      linear_.target_dim() != quadratic_.target_dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "jet parts have different shapes");
  }
  if (!linear_.is_homogeneous(1)) {
    throw Error(ErrorCode::kNotLinear, "jet linear part is not linear");
  }
  if (!quadratic_.is_homogeneous(2)) {
    throw Error(ErrorCode::kNotQuadratic,
                "jet quadratic part is not homogeneous quadratic");
  }
}

FracQuadMap::FracQuadMap(PolyMap numerator, Poly denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_.num_vars() != numerator_.source_dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "denominator and numerator live on different spaces");
  }
  if (denominator_.degree() > 2) {
    throw Error(ErrorCode::kDegreeOverflow, "denominator degree above 2");
  }
  auto quotient =
      divide_exact(inner_poly(numerator_, numerator_), denominator_);
  if (!quotient) {
    throw Error(ErrorCode::kNotDivisible,
                "<F,F> is not divisible by the denominator " +
                    denominator_.to_string());
  }
  norm_quotient_ = std::move(*quotient);
}

std::optional<std::vector<Rational>> FracQuadMap::evaluate(
    std::span<const Rational> x) const {
  const Rational q = denominator_.evaluate(x);
  if (sgn(q) == 0) return std::nullopt;
  std::vector<Rational> y = numerator_.evaluate(x);
  for (auto& v : y) v /= q;
  return y;
}

std::optional<std::vector<double>> FracQuadMap::evaluate(
    std::span<const double> x) const {
  const double q = denominator_.evaluate(x);
  if (q == 0.0) return std::nullopt;
  std::vector<double> y = numerator_.evaluate(x);
  for (auto& v : y) v /= q;
  return y;
}

NotDivisibleError::NotDivisibleError(DivisibilityCondition which,
                                     Poly remainder)
    : Error(ErrorCode::kNotDivisible,
            std::string(which == DivisibilityCondition::kInnerAB ? "<A,B>"
                                                                 : "<B,B>") +
                " is not divisible by <A,A>; remainder " +
                remainder.to_string()),
      which_(which),
      remainder_(std::move(remainder)) {}

RoundingJet validate_jet(const Jet2& jet) {
  const PolyMap& a = jet.linear();
  const PolyMap& b = jet.quadratic();
  const int r = rank_linear(a);
  if (r < 2) {
    throw Error(ErrorCode::kRankTooLow,
                "rank of the linear part is " + std::to_string(r) +
                    ", at least 2 is required");
  }
  const Poly aa = inner_poly(a, a);
  PolyDivision ab = divide(inner_poly(a, b), aa);
  if (!ab.remainder.is_zero()) {
    throw NotDivisibleError(DivisibilityCondition::kInnerAB,
                            std::move(ab.remainder));
  }
  PolyDivision bb = divide(inner_poly(b, b), aa);
  if (!bb.remainder.is_zero()) {
    throw NotDivisibleError(DivisibilityCondition::kInnerBB,
                            std::move(bb.remainder));
  }
  return RoundingJet{jet, std::move(ab.quotient), std::move(bb.quotient), r};
}

FracQuadMap canonical_rounding(const RoundingJet& rj) {
  const PolyMap& a = rj.jet.linear();
  const int m = rj.jet.source_dim();
  PolyMap f = a + rj.jet.quadratic() - a.times(Rational(2) * rj.p);
  Poly q = Poly::constant(m, 1) - Rational(2) * rj.p + rj.q;
  if (inner_poly(f, f) != q * inner_poly(a, a)) {
    throw std::logic_error("canonical rounding identity <F,F> = Q<A,A> failed");
  }
  return FracQuadMap(std::move(f), std::move(q));
}

Jet2 two_jet(const FracQuadMap& map) {
  const Rational q0 = map.denominator().constant_term();
  if (sgn(q0) == 0) {
    throw Error(ErrorCode::kInvalidArgument, "denominator vanishes at 0");
  }
  if (!map.numerator().homogeneous_part(0).is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "map does not fix the origin");
  }
  const Rational inv = 1 / q0;
  PolyMap f1 = inv * map.numerator().homogeneous_part(1);
  PolyMap f2 = inv * map.numerator().homogeneous_part(2);
  Poly q1 = map.denominator().homogeneous_part(1) * inv;
  return Jet2(f1, f2 - f1.times(q1));
}

std::vector<double> QuadraticVector::approximate() const {
  std::vector<double> out(rational_part.size());
  const double root = std::sqrt(radicand.get_d());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = rational_part[i].get_d();
    if (!irrational_part.empty()) out[i] += root * irrational_part[i].get_d();
  }
  return out;
}

DegeneracyVerdict is_degenerate(const RoundingJet& rj) {
  DegeneracyVerdict verdict;
  const int m = rj.jet.source_dim();
  verdict.kernel = nullspace(rj.jet.linear().linear_matrix());
  if (verdict.kernel.empty()) return verdict;

  const RationalMatrix basis = RationalMatrix::from_columns(m, verdict.kernel);
  const QuadForm excess = QuadForm::from_poly(rj.q - rj.p * rj.p);
  const Diagonalization diag =
      lagrange_diagonalize(excess.restricted(basis));

  int zero_at = -1, positive_at = -1, negative_at = -1;
  for (int i = 0; i < static_cast<int>(diag.diagonal.size()); ++i) {
    const int s = sgn(diag.diagonal[i]);
    if (s == 0) {
      ++verdict.restricted_signature.zero;
      if (zero_at < 0) zero_at = i;
    } else if (s > 0) {
      ++verdict.restricted_signature.positive;
      if (positive_at < 0) positive_at = i;
    } else {
      ++verdict.restricted_signature.negative;
      if (negative_at < 0) negative_at = i;
    }
  }
  verdict.degenerate = verdict.restricted_signature.isotropic();
  if (!verdict.degenerate) return verdict;

  QuadraticVector w;
  if (zero_at >= 0) {
    w.rational_part = basis * diag.basis.column(zero_at);
  } else {
    // d_i + c d_j = 0 for c = -d_i/d_j > 0, so e_i + sqrt(c) e_j is isotropic.
    const Rational c = -diag.diagonal[positive_at] / diag.diagonal[negative_at];
    const RationalVector vi = basis * diag.basis.column(positive_at);
    const RationalVector vj = basis * diag.basis.column(negative_at);
    Rational root;
    if (rational_sqrt(c, &root)) {
      w.rational_part = vi;
      for (int k = 0; k < m; ++k) w.rational_part[k] += root * vj[k];
    } else {
      w.rational_part = vi;
      w.radicand = c;
      w.irrational_part = vj;
    }
  }
  verdict.witness = std::move(w);
  return verdict;
}

RoundingJet normalize_p(const RoundingJet& rj) {
  const PolyMap& a = rj.jet.linear();
  Jet2 shifted(a, rj.jet.quadratic() - a.times(rj.p));
  return RoundingJet{std::move(shifted), Poly(rj.jet.source_dim()),
                     rj.q - rj.p * rj.p, rj.rank_a};
}

DegenerateFactorization factor_degenerate(const RoundingJet& rj) {
  if (!is_degenerate(rj).degenerate) {
    throw Error(ErrorCode::kNotDegenerate, "jet is not degenerate");
  }
  const RoundingJet normal = normalize_p(rj);
  const PolyMap& a = normal.jet.linear();
  const PolyMap& b = normal.jet.quadratic();
  const int m = normal.jet.source_dim();

  // ker A ∩ ker B' is the nullspace of A stacked with the polar matrices
  // of the coordinates of B'.
  const auto forms = b.quadratic_matrices();
  RationalMatrix stacked(a.target_dim() * (1 + m), m);
  const RationalMatrix a_matrix = a.linear_matrix();
  int row = 0;
  for (int r = 0; r < a_matrix.rows(); ++r, ++row) {
    for (int c = 0; c < m; ++c) stacked(row, c) = a_matrix(r, c);
  }
  for (const auto& s : forms) {
    for (int r = 0; r < m; ++r, ++row) {
      for (int c = 0; c < m; ++c) stacked(row, c) = s(r, c);
    }
  }

  const RowEchelon echelon = reduced_row_echelon(stacked);
  const int k = static_cast<int>(echelon.pivot_columns.size());
  if (k == m) {
    throw Error(ErrorCode::kIrrationalKernelWitness,
                "no rational common kernel vector of A and B - pA");
  }

  DegenerateFactorization out{RationalMatrix(k, m), RationalMatrix(m, k),
                              RoundingJet{normal.jet, Poly(m), Poly(m), 0}};
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < m; ++c) out.projection(i, c) = echelon.reduced(i, c);
    out.section(echelon.pivot_columns[i], i) = 1;
  }

  PolyMap reduced_a = a.compose_linear(out.section);
  PolyMap reduced_b = b.compose_linear(out.section);
  if (reduced_a.compose_linear(out.projection) != a ||
      reduced_b.compose_linear(out.projection) != b) {
    throw std::logic_error("projection does not factor the normalized jet");
  }
  out.reduced = validate_jet(Jet2(std::move(reduced_a), std::move(reduced_b)));
  return out;
}

std::optional<Poly> parallel_factor(const PolyMap& a, const PolyMap& c) {
  if (a.source_dim() != c.source_dim() || a.target_dim() != c.target_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "parallel_factor shapes differ");
  }
  const int r = rank_linear(a);
  if (r < 2) {
    throw Error(ErrorCode::kRankTooLow,
                "parallel_factor needs rank >= 2, got " + std::to_string(r));
  }
  if (!c.is_homogeneous(2)) {
    throw Error(ErrorCode::kNotQuadratic,
                "parallel_factor expects a homogeneous quadratic map");
  }
  const int m = a.source_dim();
  const RationalMatrix am = a.linear_matrix();

  // Unknowns: coefficients of l. One equation per (coordinate, monomial).
  const int pairs = m * (m + 1) / 2;
  RationalMatrix system(a.target_dim() * pairs, m);
  RationalVector rhs(system.rows());
  int row = 0;
  for (int i = 0; i < a.target_dim(); ++i) {
    for (int x = 0; x < m; ++x) {
      for (int y = x; y < m; ++y, ++row) {
        if (x == y) {
          system(row, x) = am(i, x);
        } else {
          system(row, x) = am(i, y);
          system(row, y) = am(i, x);
        }
        rhs[row] = c[i].coefficient(Monomial::variable(x) * Monomial::variable(y));
      }
    }
  }
  auto solution = solve(system, rhs);
  if (!solution) return std::nullopt;
  Poly l = Poly::linear(m, *solution);
  if (a.times(l) != c) return std::nullopt;
  return l;
}

std::optional<EquivalenceWitness> jets_equivalent(const Jet2& j1,
                                                  const Jet2& j2) {
  if (j1.source_dim() != j2.source_dim() ||
      j1.target_dim() != j2.target_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "jets have different shapes");
  }
  const RationalMatrix a1 = j1.linear().linear_matrix();
  const RationalMatrix a2 = j2.linear().linear_matrix();
  std::optional<Rational> lambda;
  for (int r = 0; r < a1.rows() && !lambda; ++r) {
    for (int c = 0; c < a1.cols(); ++c) {
      if (sgn(a1(r, c)) != 0) {
        lambda = a2(r, c) / a1(r, c);
        break;
      }
    }
  }
  if (!lambda || sgn(*lambda) == 0) return std::nullopt;
  if (*lambda * j1.linear() != j2.linear()) return std::nullopt;

  const PolyMap residual =
      j2.quadratic() - (*lambda * *lambda) * j1.quadratic();
  auto l = parallel_factor(j1.linear(), residual);
  if (!l) return std::nullopt;
  return EquivalenceWitness{*lambda, std::move(*l)};
}

Jet2 transform_jet(const Jet2& jet, const Rational& lambda, const Poly& l) {
  return Jet2(lambda * jet.linear(),
              (lambda * lambda) * jet.quadratic() + jet.linear().times(l));
}

std::vector<ComponentCheck> check_series_divisibility(const PolyMap& phi,
                                                      int truncation) {
  if (!phi.homogeneous_part(0).is_zero()) {
    throw Error(ErrorCode::kInvalidArgument, "series must vanish at 0");
  }
  if (truncation < std::max(phi.degree(), 1) ||
      truncation > Monomial::kMaxDegree) {
    throw Error(ErrorCode::kOutOfRange,
                "truncation degree " + std::to_string(truncation) +
                    " outside [deg phi, " +
                    std::to_string(Monomial::kMaxDegree) + "]");
  }
  const PolyMap a = phi.homogeneous_part(1);
  const int r = rank_linear(a);
  if (r < 2) {
    throw Error(ErrorCode::kRankTooLow,
                "series has linear part of rank " + std::to_string(r));
  }
  const Poly aa = inner_poly(a, a);
  const Poly a_phi = inner_poly(a, phi);
  const Poly phi_phi = inner_poly(phi, phi);

  std::vector<ComponentCheck> out;
  for (int d = 2; d <= truncation + 1; ++d) {
    for (auto pairing : {ComponentCheck::Pairing::kLinearWithMap,
                         ComponentCheck::Pairing::kMapWithMap}) {
      const Poly& whole =
          pairing == ComponentCheck::Pairing::kLinearWithMap ? a_phi : phi_phi;
      PolyDivision division = divide(whole.homogeneous_part(d), aa);
      out.push_back(ComponentCheck{pairing, d, division.remainder.is_zero(),
                                   std::move(division.remainder)});
    }
  }
  return out;
}

}  // namespace rounding_forge
