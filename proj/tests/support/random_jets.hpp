#pragma once

// Hand-rolled generators for property tests. Every generated jet is valid
// by construction, independently of the library's validator:
//
//   A(y, x) = y,  B(y, x) = L(y, x) * y
//
// with y in K = R^k (scalar L), C or H (Cayley-Dickson products) and L a
// random K-valued linear form in all variables. Then <A,B> = Re(L) <A,A>
// and <B,B> = |L|^2 <A,A>. The jet is then pushed through a random
// invertible source change, random rational Householder reflections in the
// target, zero padding, and optionally a random (lambda, l) transform.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rounding_forge/jets.hpp"
#include "rounding_forge/linear_algebra.hpp"
#include "rounding_forge/poly_map.hpp"

namespace rounding_forge::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// num / den with |num| <= num_bound, 1 <= den <= den_bound.
inline Rational random_rational(Rng& rng, int num_bound = 5, int den_bound = 4) {
  Rational r(uniform_int(rng, -num_bound, num_bound), uniform_int(rng, 1, den_bound));
  r.canonicalize();
  return r;
}

inline Rational random_nonzero_rational(Rng& rng, int num_bound = 5, int den_bound = 4) {
  for (;;) {
    Rational r = random_rational(rng, num_bound, den_bound);
    if (sgn(r) != 0) return r;
  }
}

inline RationalVector random_vector(Rng& rng, int size, int num_bound = 5,
                                    int den_bound = 4) {
  RationalVector v(size);
  for (auto& x : v) x = random_rational(rng, num_bound, den_bound);
  return v;
}

inline RationalMatrix random_matrix(Rng& rng, int rows, int cols, int num_bound = 3,
                                    int den_bound = 2) {
  RationalMatrix a(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) a(r, c) = random_rational(rng, num_bound, den_bound);
  }
  return a;
}

/// Unit lower triangular times unit upper triangular, permuted: always
/// invertible with small entries.
inline RationalMatrix random_invertible(Rng& rng, int n) {
  RationalMatrix lower = RationalMatrix::identity(n);
  RationalMatrix upper = RationalMatrix::identity(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < r; ++c) {
      if (uniform_int(rng, 0, 2) == 0) lower(r, c) = random_rational(rng, 2, 2);
      if (uniform_int(rng, 0, 2) == 0) upper(c, r) = random_rational(rng, 2, 2);
    }
    upper(r, r) = random_nonzero_rational(rng, 3, 2);
  }
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  RationalMatrix p(n, n);
  for (int i = 0; i < n; ++i) p(i, perm[i]) = 1;
  return p * lower * upper;
}

/// I - 2 v v^T / <v,v>, rational and orthogonal.
inline RationalMatrix householder(const RationalVector& v) {
  const int n = static_cast<int>(v.size());
  Rational norm;
  for (const auto& x : v) norm += x * x;
  RationalMatrix h = RationalMatrix::identity(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) h(r, c) -= 2 * v[r] * v[c] / norm;
  }
  return h;
}

inline RationalMatrix random_orthogonal(Rng& rng, int n) {
  RationalMatrix q = RationalMatrix::identity(n);
  const int reflections = uniform_int(rng, 0, 2);
  for (int i = 0; i < reflections; ++i) {
    RationalVector v;
    do {
      v = random_vector(rng, n, 2, 1);
    } while (std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; }));
    q = householder(v) * q;
  }
  return q;
}

/// Coordinates of h * f.
inline PolyMap apply_matrix(const RationalMatrix& h, const PolyMap& f) {
  std::vector<Poly> coords(h.rows(), Poly(f.source_dim()));
  for (int r = 0; r < h.rows(); ++r) {
    for (int c = 0; c < h.cols(); ++c) {
      if (sgn(h(r, c)) != 0) coords[r] += f[c] * h(r, c);
    }
  }
  return PolyMap(f.source_dim(), std::move(coords));
}

using PolyVector = std::vector<Poly>;

inline PolyVector conjugate(const PolyVector& a) {
  PolyVector out = a;
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

/// Cayley-Dickson product (a, b)(c, d) = (ac - d* b, d a + b c*), sizes 1, 2, 4.
inline PolyVector cd_product(const PolyVector& x, const PolyVector& y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  const PolyVector a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  const PolyVector c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  const PolyVector ac = cd_product(a, c);
  const PolyVector db = cd_product(conjugate(d), b);
  const PolyVector da = cd_product(d, a);
  const PolyVector bc = cd_product(b, conjugate(c));
  PolyVector out;
  for (std::size_t i = 0; i < h; ++i) out.push_back(ac[i] - db[i]);
  for (std::size_t i = 0; i < h; ++i) out.push_back(da[i] + bc[i]);
  return out;
}

struct GeneratedJet {
  Jet2 jet;
  std::string family;  // "real", "complex", "quaternion"
  int algebra_dim = 0;
  int extra_vars = 0;
};

struct GeneratorLimits {
  int max_source = 6;
  int max_target = 6;
  bool transform = true;
};

/// Valid jet with rank A >= 2, m <= max_source, n <= max_target.
inline GeneratedJet random_valid_jet(Rng& rng, const GeneratorLimits& limits = {}) {
  const int family = uniform_int(rng, 0, 2);
  int d = 0;  // dimension of y
  std::string name;
  if (family == 0) {
    d = uniform_int(rng, 2, std::min(4, limits.max_target));
    name = "real";
  } else if (family == 1 || limits.max_target < 4 || limits.max_source < 4) {
    d = 2;
    name = "complex";
  } else {
    d = 4;
    name = "quaternion";
  }
  const int extra = uniform_int(rng, 0, std::min(2, limits.max_source - d));
  const int m = d + extra;
  const int n = uniform_int(rng, d, limits.max_target);

  PolyVector y;
  for (int i = 0; i < d; ++i) y.push_back(Poly::variable(m, i));
  // Some extra variables are left out of L, which makes the jet degenerate.
  std::vector<bool> used(m, true);
  for (int v = d; v < m; ++v) used[v] = uniform_int(rng, 0, 3) != 0;
  const int l_dim = family == 0 ? 1 : d;
  PolyVector l(l_dim, Poly(m));
  for (int c = 0; c < l_dim; ++c) {
    for (int v = 0; v < m; ++v) {
      if (used[v] && uniform_int(rng, 0, 2) != 0) {
        l[c].add_term(Monomial::variable(v), random_rational(rng, 3, 2));
      }
    }
  }
  PolyVector b;
  if (family == 0) {
    for (const auto& yi : y) b.push_back(l[0] * yi);
  } else {
    b = cd_product(l, y);
  }

  PolyMap a_map(m, y);
  PolyMap b_map(m, b);
  a_map = a_map.padded(n);
  b_map = b_map.padded(n);

  const RationalMatrix source = random_invertible(rng, m);
  a_map = a_map.compose_linear(source);
  b_map = b_map.compose_linear(source);
  const RationalMatrix target = random_orthogonal(rng, n);
  a_map = apply_matrix(target, a_map);
  b_map = apply_matrix(target, b_map);

  Jet2 jet(a_map, b_map);
  if (limits.transform && uniform_int(rng, 0, 1) == 0) {
    const Rational lambda = random_nonzero_rational(rng, 3, 2);
    const Poly shift = Poly::linear(m, random_vector(rng, m, 2, 2));
    jet = transform_jet(jet, lambda, shift);
  }
  return GeneratedJet{std::move(jet), name, d, extra};
}

/// (lambda, l) for equivalence tests.
inline std::pair<Rational, Poly> random_transform(Rng& rng, int m) {
  return {random_nonzero_rational(rng, 4, 3), Poly::linear(m, random_vector(rng, m, 3, 3))};
}

}  // namespace rounding_forge::testing
