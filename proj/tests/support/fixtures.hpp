#pragma once

#include <vector>

#include "rounding_forge/jets.hpp"
#include "rounding_forge/poly_map.hpp"

namespace rounding_forge::testing {

inline Poly var(int m, int i) { return Poly::variable(m, i); }

/// A = id, B = (x1^2 - x2^2, 2 x1 x2): the 2-jet of z + z^2.
inline Jet2 complex_square_jet() {
  const Poly x1 = var(2, 0), x2 = var(2, 1);
  return Jet2(PolyMap(2, {x1, x2}), PolyMap(2, {x1 * x1 - x2 * x2, Rational(2) * (x1 * x2)}));
}

/// A = id_m, B = 0.
inline Jet2 identity_jet(int m) {
  return Jet2(PolyMap::from_linear(RationalMatrix::identity(m)), PolyMap(m, m));
}

/// A(x) = first `rank` coordinates of x in R^m, as a map to R^rank; B = 0.
inline Jet2 projection_jet(int m, int rank) {
  RationalMatrix a(rank, m);
  for (int i = 0; i < rank; ++i) a(i, i) = 1;
  return Jet2(PolyMap::from_linear(a), PolyMap(m, rank));
}

/// Variables x1, x2, x3 (imaginary quaternion x) then y0..y3 (quaternion y).
/// A = y, B = -x y with the Hamilton product written out.
inline Jet2 quaternion_jet() {
  constexpr int m = 7;
  const Poly zero(m);
  const Poly xw = zero, xi = var(m, 0), xj = var(m, 1), xk = var(m, 2);
  const Poly yw = var(m, 3), yi = var(m, 4), yj = var(m, 5), yk = var(m, 6);
  std::vector<Poly> product = {
      xw * yw - xi * yi - xj * yj - xk * yk,
      xw * yi + xi * yw + xj * yk - xk * yj,
      xw * yj - xi * yk + xj * yw + xk * yi,
      xw * yk + xi * yj - xj * yi + xk * yw,
  };
  for (auto& c : product) c = -c;
  return Jet2(PolyMap(m, {yw, yi, yj, yk}), PolyMap(m, std::move(product)));
}

}  // namespace rounding_forge::testing
