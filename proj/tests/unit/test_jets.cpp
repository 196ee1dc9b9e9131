#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_jets.hpp"
#include "rounding_forge/jets.hpp"

using namespace rounding_forge;
using namespace rounding_forge::testing;

namespace {

Poly norm_squared(int m, int from, int count) {
  Poly out(m);
  for (int i = from; i < from + count; ++i) out += var(m, i) * var(m, i);
  return out;
}

// lambda A, lambda^2 B + l A, written without the library helper.
Jet2 transformed(const Jet2& j, const Rational& lambda, const Poly& l) {
  const Rational lambda2 = lambda * lambda;
  return Jet2(lambda * j.linear(), lambda2 * j.quadratic() + j.linear().times(l));
}

}  // namespace

TEST_CASE("validate_jet on the complex square") {
  const RoundingJet rj = validate_jet(complex_square_jet());
  const Poly x1 = var(2, 0), x2 = var(2, 1);
  CHECK(rj.p == x1);
  CHECK(rj.q == x1 * x1 + x2 * x2);
  CHECK(rj.rank_a == 2);
}

TEST_CASE("validate_jet with zero quadratic part") {
  for (int m = 2; m <= 5; ++m) {
    const RoundingJet rj = validate_jet(identity_jet(m));
    CHECK(rj.p.is_zero());
    CHECK(rj.q.is_zero());
  }
}

TEST_CASE("validate_jet reports the failing condition") {
  const Poly x1 = var(3, 0), x2 = var(3, 1), x3 = var(3, 2);
  const Jet2 jet(PolyMap(3, {x1, x2}), PolyMap(3, {x3 * x3, Poly(3)}));
  try {
    validate_jet(jet);
    FAIL("expected NotDivisibleError");
  } catch (const NotDivisibleError& e) {
    CHECK(e.code() == ErrorCode::kNotDivisible);
    CHECK(e.which() == DivisibilityCondition::kInnerAB);
    CHECK_FALSE(e.remainder().is_zero());
  }
  CHECK_THROWS_AS(validate_jet(projection_jet(2, 1)), Error);
  try {
    validate_jet(projection_jet(3, 1));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kRankTooLow);
  }
}

TEST_CASE("Jet2 rejects wrong degrees and shapes") {
  const Poly x1 = var(2, 0), x2 = var(2, 1);
  CHECK_THROWS_AS(Jet2(PolyMap(2, {x1 * x1, x2}), PolyMap(2, 2)), Error);
  CHECK_THROWS_AS(Jet2(PolyMap(2, {x1, x2}), PolyMap(2, {x1, x2})), Error);
  CHECK_THROWS_AS(Jet2(PolyMap(2, {x1, x2}), PolyMap(2, 3)), Error);
}

TEST_CASE("canonical rounding of the complex square is z/(1-z)") {
  const FracQuadMap psi = canonical_rounding(validate_jet(complex_square_jet()));
  const RationalVector half{Rational(1, 2), 0};
  const auto value = psi.evaluate(half);
  REQUIRE(value);
  CHECK((*value)[0] == 1);
  CHECK((*value)[1] == 0);
  // (1 - z) F = z Q as polynomials, with z = x1 + i x2.
  const Poly x1 = var(2, 0), x2 = var(2, 1);
  const Poly& f1 = psi.numerator()[0];
  const Poly& f2 = psi.numerator()[1];
  const Poly one = Poly::constant(2, 1);
  const Poly re = (one - x1) * f1 + x2 * f2;
  const Poly im = (one - x1) * f2 - x2 * f1;
  CHECK(re == x1 * psi.denominator());
  CHECK(im == x2 * psi.denominator());
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const RationalVector z{random_rational(rng), random_rational(rng)};
    if (z[0] == 1 && z[1] == 0) continue;
    const auto got = psi.evaluate(z);
    REQUIRE(got);
    const auto expect = mobius(z[0], z[1]);
    CHECK((*got)[0] == expect[0]);
    CHECK((*got)[1] == expect[1]);
  }
}

TEST_CASE("canonical rounding with zero quadratic part is A") {
  const FracQuadMap psi = canonical_rounding(validate_jet(identity_jet(3)));
  CHECK(psi.numerator() == identity_jet(3).linear());
  CHECK(psi.denominator() == Poly::constant(3, 1));
}

TEST_CASE("canonical rounding of the quaternion jet") {
  const RoundingJet rj = validate_jet(quaternion_jet());
  CHECK(rj.p.is_zero());
  CHECK(rj.q == norm_squared(7, 0, 3));
  const FracQuadMap psi = canonical_rounding(rj);
  CHECK(psi.denominator() == Poly::constant(7, 1) + norm_squared(7, 0, 3));
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> pt(7);
    for (auto& v : pt) v = std::uniform_real_distribution<double>(-2, 2)(rng);
    const Quat one_plus_x{1, pt[0], pt[1], pt[2]};
    const Quat y{pt[3], pt[4], pt[5], pt[6]};
    const Quat expect = inverse(one_plus_x) * y;
    const auto got = psi.evaluate(pt);
    REQUIRE(got);
    CHECK((*got)[0] == doctest::Approx(expect.w).epsilon(1e-12));
    CHECK((*got)[1] == doctest::Approx(expect.x).epsilon(1e-12));
    CHECK((*got)[2] == doctest::Approx(expect.y).epsilon(1e-12));
    CHECK((*got)[3] == doctest::Approx(expect.z).epsilon(1e-12));
  }
}

TEST_CASE("FracQuadMap requires divisibility") {
  const Poly x1 = var(2, 0), x2 = var(2, 1);
  CHECK_THROWS_AS(FracQuadMap(PolyMap(2, {x1, x2}), x1 + Poly::constant(2, 1)), Error);
  CHECK_THROWS_AS(FracQuadMap(PolyMap(2, {x1, x2}), Poly(2)), Error);
  const FracQuadMap ok(PolyMap(2, {x1, x2}), Poly::constant(2, 2));
  const RationalVector zero{0, 0};
  CHECK(ok.evaluate(zero));
}

TEST_CASE("is_degenerate examples") {
  const DegeneracyVerdict d = is_degenerate(validate_jet(projection_jet(3, 2)));
  CHECK(d.degenerate);
  REQUIRE(d.kernel.size() == 1);
  CHECK(d.kernel[0] == RationalVector{0, 0, 1});
  REQUIRE(d.witness);
  CHECK(d.witness->is_rational());
  CHECK(d.witness->rational_part == RationalVector{0, 0, 1});

  const DegeneracyVerdict q = is_degenerate(validate_jet(quaternion_jet()));
  CHECK_FALSE(q.degenerate);
  CHECK(q.kernel.size() == 3);
  CHECK(q.restricted_signature == Signature{3, 0, 0});

  const DegeneracyVerdict c = is_degenerate(validate_jet(complex_square_jet()));
  CHECK_FALSE(c.degenerate);
  CHECK(c.kernel.empty());
}

TEST_CASE("degeneracy witnesses are zeros of A and q - p^2") {
  Rng rng(23);
  int degenerate = 0;
  for (int i = 0; i < 150; ++i) {
    const RoundingJet rj = validate_jet(random_valid_jet(rng).jet);
    const DegeneracyVerdict d = is_degenerate(rj);
    if (!d.degenerate) {
      CHECK_FALSE(d.witness);
      continue;
    }
    ++degenerate;
    REQUIRE(d.witness);
    const auto& w = *d.witness;
    bool nonzero = false;
    for (const auto& x : w.rational_part) nonzero |= sgn(x) != 0;
    for (const auto& x : w.irrational_part) nonzero |= sgn(x) != 0;
    CHECK(nonzero);
    if (w.is_rational()) {
      const auto [ax, bx] = jet_values(rj.jet, w.rational_part);
      CHECK(dot(ax, ax) == 0);
      const Rational p = rj.p.evaluate(w.rational_part);
      CHECK(rj.q.evaluate(w.rational_part) == p * p);
    }
  }
  CHECK(degenerate > 0);
}

TEST_CASE("B vanishes on ker A") {
  Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    const RoundingJet rj = validate_jet(random_valid_jet(rng).jet);
    for (const auto& v : nullspace(rj.jet.linear().linear_matrix())) {
      const auto [ax, bx] = jet_values(rj.jet, v);
      for (const auto& b : bx) CHECK(sgn(b) == 0);
    }
  }
}

TEST_CASE("normalize_p examples") {
  const RoundingJet n = normalize_p(validate_jet(complex_square_jet()));
  const Poly x1 = var(2, 0), x2 = var(2, 1);
  CHECK(n.jet.quadratic() == PolyMap(2, {-(x2 * x2), x1 * x2}));
  CHECK(n.p.is_zero());
  CHECK(n.q == x2 * x2);
  const RoundingJet again = validate_jet(n.jet);
  CHECK(again.p == n.p);
  CHECK(again.q == n.q);

  const RoundingJet quat = validate_jet(quaternion_jet());
  CHECK(normalize_p(quat).jet == quat.jet);
}

TEST_CASE("factor_degenerate examples") {
  const DegenerateFactorization f = factor_degenerate(validate_jet(projection_jet(3, 2)));
  CHECK(f.projection.rows() == 2);
  CHECK(f.reduced.jet == identity_jet(2));
  const DegenerateFactorization g = factor_degenerate(validate_jet(projection_jet(4, 2)));
  CHECK(g.projection.rows() == 2);
  CHECK(g.reduced.jet == identity_jet(2));
  try {
    factor_degenerate(validate_jet(complex_square_jet()));
    FAIL("expected NotDegenerate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotDegenerate);
  }
}

TEST_CASE("factor_degenerate reproduces the normalized jet") {
  Rng rng(25);
  int factored = 0;
  for (int i = 0; i < 150; ++i) {
    const RoundingJet rj = validate_jet(random_valid_jet(rng).jet);
    if (!is_degenerate(rj).degenerate) continue;
    const DegenerateFactorization f = factor_degenerate(rj);
    const RoundingJet normalized = normalize_p(rj);
    CHECK(f.reduced.jet.linear().compose_linear(f.projection) == normalized.jet.linear());
    CHECK(f.reduced.jet.quadratic().compose_linear(f.projection) ==
          normalized.jet.quadratic());
    CHECK(f.projection * f.section == RationalMatrix::identity(f.projection.rows()));
    CHECK(validate_jet(f.reduced.jet).rank_a == f.reduced.rank_a);
    ++factored;
  }
  CHECK(factored > 0);
}

TEST_CASE("parallel_factor examples") {
  const Jet2 j = complex_square_jet();
  const Poly x1 = var(2, 0), x2 = var(2, 1);
  auto l = parallel_factor(j.linear(), j.linear().times(x1));
  REQUIRE(l);
  CHECK(*l == x1);
  l = parallel_factor(j.linear(), PolyMap(2, 2));
  REQUIRE(l);
  CHECK(l->is_zero());
  CHECK_FALSE(parallel_factor(j.linear(), PolyMap(2, {x2 * x2, Poly(2)})));
  CHECK_THROWS_AS(parallel_factor(projection_jet(2, 1).linear(), PolyMap(2, 1)), Error);
}

TEST_CASE("jets_equivalent examples") {
  const Jet2 j = complex_square_jet();
  const Poly x1 = var(2, 0);
  auto w = jets_equivalent(j, Jet2(Rational(2) * j.linear(), Rational(4) * j.quadratic()));
  REQUIRE(w);
  CHECK(w->lambda == 2);
  CHECK(w->l.is_zero());
  w = jets_equivalent(j, Jet2(j.linear(), j.quadratic() + j.linear().times(x1)));
  REQUIRE(w);
  CHECK(w->lambda == 1);
  CHECK(w->l == x1);
  RationalMatrix rot(2, 2);
  rot(0, 1) = -1;
  rot(1, 0) = 1;
  CHECK_FALSE(jets_equivalent(identity_jet(2), Jet2(PolyMap::from_linear(rot), PolyMap(2, 2))));
}

TEST_CASE("equivalence is reflexive, symmetric and round-trips") {
  Rng rng(26);
  for (int i = 0; i < 100; ++i) {
    const Jet2 j1 = random_valid_jet(rng).jet;
    const auto [lambda, l] = random_transform(rng, j1.source_dim());
    const Jet2 j2 = transformed(j1, lambda, l);
    CHECK(transform_jet(j1, lambda, l) == j2);

    auto self = jets_equivalent(j1, j1);
    REQUIRE(self);
    CHECK(self->lambda == 1);
    CHECK(self->l.is_zero());

    auto forward = jets_equivalent(j1, j2);
    REQUIRE(forward);
    CHECK(forward->lambda == lambda);
    CHECK(forward->l == l);
    CHECK(transformed(j1, forward->lambda, forward->l) == j2);

    auto backward = jets_equivalent(j2, j1);
    REQUIRE(backward);
    const Rational inv = 1 / lambda;
    CHECK(backward->lambda == inv);
    CHECK(backward->l == l * (-inv * inv * inv));
    CHECK(transformed(j2, backward->lambda, backward->l) == j1);

    const RoundingJet r1 = validate_jet(j1), r2 = validate_jet(j2);
    CHECK(is_degenerate(r1).degenerate == is_degenerate(r2).degenerate);
  }
}

TEST_CASE("normalize_p is idempotent and equivalent") {
  Rng rng(27);
  for (int i = 0; i < 100; ++i) {
    const RoundingJet rj = validate_jet(random_valid_jet(rng).jet);
    const RoundingJet once = normalize_p(rj);
    const RoundingJet twice = normalize_p(once);
    CHECK(once.jet == twice.jet);
    CHECK(once.p.is_zero());
    CHECK(once.q == rj.q - rj.p * rj.p);
    auto w = jets_equivalent(rj.jet, once.jet);
    REQUIRE(w);
    CHECK(w->lambda == 1);
    CHECK(w->l == -rj.p);
  }
}

TEST_CASE("canonical identity and 2-jet on random jets") {
  Rng rng(28);
  for (int i = 0; i < 100; ++i) {
    const RoundingJet rj = validate_jet(random_valid_jet(rng).jet);
    const FracQuadMap psi = canonical_rounding(rj);
    const Poly aa = inner_poly(rj.jet.linear(), rj.jet.linear());
    CHECK(inner_poly(psi.numerator(), psi.numerator()) == psi.denominator() * aa);
    CHECK(psi.denominator().constant_term() == 1);
    CHECK(two_jet(psi) == rj.jet);
    // Pointwise check of the witnesses with matrix arithmetic.
    const RationalVector x = random_vector(rng, rj.jet.source_dim());
    const auto [ax, bx] = jet_values(rj.jet, x);
    CHECK(dot(ax, bx) == rj.p.evaluate(x) * dot(ax, ax));
    CHECK(dot(bx, bx) == rj.q.evaluate(x) * dot(ax, ax));
  }
}

TEST_CASE("series divisibility examples") {
  const FracQuadMap psi = canonical_rounding(validate_jet(complex_square_jet()));
  for (const auto& c : check_series_divisibility(psi.numerator(), 2)) CHECK(c.divisible);
  for (const auto& c : check_series_divisibility(identity_jet(3).linear(), 1)) {
    CHECK(c.divisible);
  }
  const Poly x1 = var(3, 0), x2 = var(3, 1), x3 = var(3, 2);
  const auto checks = check_series_divisibility(PolyMap(3, {x1, x2 + x3 * x3}), 2);
  bool failed_at_three = false;
  for (const auto& c : checks) {
    if (c.pairing == ComponentCheck::Pairing::kLinearWithMap && c.degree == 3) {
      failed_at_three = !c.divisible && !c.remainder.is_zero();
    }
  }
  CHECK(failed_at_three);
  CHECK_THROWS_AS(check_series_divisibility(projection_jet(2, 1).linear(), 1), Error);
}
