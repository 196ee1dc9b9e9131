#pragma once

// Test-side reference implementations. They share no code paths with the
// library beyond the Rational and Poly value types.

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "rounding_forge/jets.hpp"
#include "rounding_forge/linear_algebra.hpp"

namespace rounding_forge::testing {

/// Determinant by Gaussian elimination over Q with row swaps.
inline Rational determinant(RationalMatrix a) {
  const int n = a.rows();
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (sgn(a(r, c)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int k = 0; k < n; ++k) std::swap(a(c, k), a(pivot, k));
      det = -det;
    }
    det *= a(c, c);
    for (int r = c + 1; r < n; ++r) {
      const Rational f = a(r, c) / a(c, c);
      for (int k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

/// Sylvester's criterion: every leading principal minor is positive.
inline bool sylvester_positive_definite(const RationalMatrix& s) {
  for (int k = 1; k <= s.rows(); ++k) {
    RationalMatrix minor(k, k);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) minor(r, c) = s(r, c);
    }
    if (sgn(determinant(minor)) <= 0) return false;
  }
  return true;
}

/// Rank by plain Gaussian elimination over Q.
inline int gauss_rank(RationalMatrix a) {
  int rank = 0;
  for (int c = 0; c < a.cols() && rank < a.rows(); ++c) {
    int pivot = -1;
    for (int r = rank; r < a.rows(); ++r) {
      if (sgn(a(r, c)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    for (int k = 0; k < a.cols(); ++k) std::swap(a(rank, k), a(pivot, k));
    for (int r = rank + 1; r < a.rows(); ++r) {
      const Rational f = a(r, c) / a(rank, c);
      for (int k = c; k < a.cols(); ++k) a(r, k) -= f * a(rank, k);
    }
    ++rank;
  }
  return rank;
}

/// x^T S x.
inline Rational form_value(const RationalMatrix& s, const RationalVector& x) {
  Rational out;
  for (int r = 0; r < s.rows(); ++r) {
    for (int c = 0; c < s.cols(); ++c) out += x[r] * s(r, c) * x[c];
  }
  return out;
}

/// A x and (x^T S_i x)_i from the jet's matrices.
inline std::pair<RationalVector, RationalVector> jet_values(const Jet2& jet,
                                                           const RationalVector& x) {
  const RationalMatrix a = jet.linear().linear_matrix();
  RationalVector ax(a.rows());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) ax[r] += a(r, c) * x[c];
  }
  RationalVector bx;
  for (const auto& s : jet.quadratic().quadratic_matrices()) bx.push_back(form_value(s, x));
  return {ax, bx};
}

inline Rational dot(const RationalVector& u, const RationalVector& v) {
  Rational out;
  for (std::size_t i = 0; i < u.size(); ++i) out += u[i] * v[i];
  return out;
}

/// Hamilton quaternions in floating point.
struct Quat {
  double w = 0, x = 0, y = 0, z = 0;
};

inline Quat operator*(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quat inverse(const Quat& a) {
  const double n = a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z;
  return {a.w / n, -a.x / n, -a.y / n, -a.z / n};
}

/// z / (1 - z) for z = x1 + i x2, exactly.
inline std::array<Rational, 2> mobius(const Rational& x1, const Rational& x2) {
  // z / w with w = 1 - z: z * conj(w) / |w|^2.
  const Rational wr = 1 - x1;
  const Rational wi = -x2;
  const Rational norm = wr * wr + wi * wi;
  return {(x1 * wr + x2 * wi) / norm, (x2 * wr - x1 * wi) / norm};
}

/// 8a + 2^b for n = 2^(4a+b) * odd, computed by repeated division.
inline int rho_bruteforce(long long n) {
  int s = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++s;
  }
  int a = 0;
  while (s >= 4) {
    s -= 4;
    ++a;
  }
  int power = 1;
  for (int i = 0; i < s; ++i) power *= 2;
  return 8 * a + power;
}

/// kappa(1..limit) filled bottom up from the defining recursion.
inline std::vector<int> kappa_table(int limit) {
  std::vector<int> table(limit + 1, 0);
  for (int m = 1; m <= limit; ++m) {
    int power = 1;
    while (power * 2 <= m) power *= 2;
    const int rest = m - power;
    table[m] = rest < rho_bruteforce(power) ? power : power + table[rest];
  }
  return table;
}

/// Row n of Pascal's triangle mod 2.
inline std::vector<int> pascal_parity_row(int n) {
  std::vector<int> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<int> next(i + 1, 1);
    for (int k = 1; k < i; ++k) next[k] = (row[k - 1] + row[k]) % 2;
    row = std::move(next);
  }
  return row;
}

}  // namespace rounding_forge::testing
