#pragma once

#include <cstdint>
#include <vector>

#include "rounding_forge/jets.hpp"
#include "rounding_forge/linear_algebra.hpp"
#include "rounding_forge/spheres.hpp"

namespace rounding_forge {

/// Hurwitz-Radon function: for n = 2^(4a+b) * odd, 0 <= b <= 3, returns
/// 8a + 2^b. Throws Error(kOutOfRange) for n < 1.
int rho(std::int64_t n);

/// Yiu's function, 1 <= m <= 2^20. Throws Error(kOutOfRange).
int kappa(std::int64_t m);

inline constexpr std::int64_t kKappaLimit = std::int64_t{1} << 20;

/// Orthogonal matrix with one entry +-1 per column: column j is
/// sign[j] * e_{image[j]}.
class SignedPermutation {
 public:
  static SignedPermutation identity(int dim);
  SignedPermutation(std::vector<int> image, std::vector<std::int8_t> sign);

  int dim() const { return static_cast<int>(image_.size()); }
  int image(int j) const { return image_[j]; }
  int sign(int j) const { return sign_[j]; }

  SignedPermutation operator-() const;
  /// (a * b) x = a (b x).
  friend SignedPermutation operator*(const SignedPermutation& a,
                                     const SignedPermutation& b);
  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;

  /// Kronecker product, index i * b.dim() + k.
  SignedPermutation tensor(const SignedPermutation& b) const;
  RationalMatrix to_matrix() const;

 private:
  std::vector<int> image_;
  std::vector<std::int8_t> sign_;
};

/// Orthogonal representation of Cliff(k): E_i^2 = -I, E_i E_j = -E_j E_i.
struct CliffordRep {
  int k = 0;
  int dim = 1;
  std::vector<SignedPermutation> generators;
};

/// Deterministic construction: left multiplications by the imaginary units
/// of C, H, O (Cayley-Dickson) for k <= 7 in dims 1, 2, 4, 4, 8, 8, 8, 8,
/// and Bott periodicity k -> k + 8 by tensoring with a fixed 16-dimensional
/// Cliff(8) representation. The relations are verified exactly before
/// returning; a failure throws std::logic_error. k <= 24.
CliffordRep clifford_generators(int k);

/// True when every defining relation holds.
bool check_clifford_relations(const CliffordRep& rep);

/// Bilinear f: R^r x R^s -> R^n with <f,f> = <x,x><y,y>.
class NormedPairing {
 public:
  /// tensor[(a * s + b) * n + c] is the coefficient of x_a y_b in f_c.
  /// Throws Error(kInvalidArgument) if the norm identity fails.
  NormedPairing(int r, int s, int n, std::vector<Rational> tensor);

  int r() const { return r_; }
  int s() const { return s_; }
  int n() const { return n_; }
  const Rational& coefficient(int a, int b, int c) const {
    return tensor_[(static_cast<std::size_t>(a) * s_ + b) * n_ + c];
  }
  const std::vector<Rational>& tensor() const { return tensor_; }

  /// f as a quadratic map on R^r (+) R^s, variables x_1..x_r, y_1..y_s.
  PolyMap as_map() const;

 private:
  int r_;
  int s_;
  int n_;
  std::vector<Rational> tensor_;
};

/// f(x, y) = phi(x_0 + x_1 e_1 + ... + x_{r-1} e_{r-1}) y with phi built from
/// block-diagonal copies of clifford_generators(r - 1). Throws
/// Error(kSizeInfeasible) when r > rho(n).
NormedPairing normed_pairing(int r, int n);

struct StiefelHopfVerdict {
  /// Necessary condition only: true means "no obstruction", never "exists".
  bool no_obstruction = true;
  /// k in (n - r, s) with C(n, k) odd.
  std::vector<int> odd_binomials;
};

StiefelHopfVerdict stiefel_hopf_feasible(int r, int s, int n);

/// (2 f(x,y), <x,x> - <y,y>) with G = <x,x> + <y,y>.
QuadSphereMap hopf_map(const NormedPairing& f);

struct LineRounder {
  FracQuadMap map;
  /// Q(0) = 0 for pairing quotients, so this is a global line-to-circle
  /// map rather than a germ at the origin.
  bool germ_at_origin = false;
};

/// f / <x,x>.
LineRounder pairing_to_rounding(const NormedPairing& f);

}  // namespace rounding_forge
