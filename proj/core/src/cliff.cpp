#include "rounding_forge/cliff.hpp"

#include <bit>
#include <stdexcept>

namespace rounding_forge {

int rho(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "rho needs n >= 1");
  const int s = std::countr_zero(static_cast<std::uint64_t>(n));
  return 8 * (s / 4) + (1 << (s % 4));
}

int kappa(std::int64_t m) {
  if (m < 1 || m > kKappaLimit) {
    throw Error(ErrorCode::kOutOfRange,
                "kappa needs 1 <= m <= 2^20, got " + std::to_string(m));
  }
  // kappa(2^t + rest) = 2^t             if rest < rho(2^t)
  //                   = 2^t + kappa(rest) otherwise.
  // The recursion halves m at least, so it is at most 21 levels deep.
  const std::int64_t power = std::int64_t{1} << (63 - std::countl_zero(
                                                          static_cast<std::uint64_t>(m)));
  const std::int64_t rest = m - power;
  if (rest < rho(power)) return static_cast<int>(power);
  return static_cast<int>(power) + kappa(rest);
}

SignedPermutation SignedPermutation::identity(int dim) {
  std::vector<int> image(dim);
  for (int i = 0; i < dim; ++i) image[i] = i;
  return SignedPermutation(std::move(image), std::vector<std::int8_t>(dim, 1));
}

SignedPermutation::SignedPermutation(std::vector<int> image,
                                     std::vector<std::int8_t> sign)
    : image_(std::move(image)), sign_(std::move(sign)) {
  if (image_.size() != sign_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "signed permutation sizes differ");
  }
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t j = 0; j < image_.size(); ++j) {
    const int i = image_[j];
    if (i < 0 || i >= dim() || seen[i] || (sign_[j] != 1 && sign_[j] != -1)) {
      throw Error(ErrorCode::kInvalidArgument, "not a signed permutation");
    }
    seen[i] = true;
  }
}

SignedPermutation SignedPermutation::operator-() const {
  SignedPermutation out = *this;
  for (auto& s : out.sign_) s = static_cast<std::int8_t>(-s);
  return out;
}

SignedPermutation operator*(const SignedPermutation& a,
                            const SignedPermutation& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "signed permutation product");
  }
  std::vector<int> image(a.dim());
  std::vector<std::int8_t> sign(a.dim());
  for (int j = 0; j < a.dim(); ++j) {
    image[j] = a.image_[b.image_[j]];
    sign[j] = static_cast<std::int8_t>(a.sign_[b.image_[j]] * b.sign_[j]);
  }
  return SignedPermutation(std::move(image), std::move(sign));
}

SignedPermutation SignedPermutation::tensor(const SignedPermutation& b) const {
  const int n = dim() * b.dim();
  std::vector<int> image(n);
  std::vector<std::int8_t> sign(n);
  for (int i = 0; i < dim(); ++i) {
    for (int k = 0; k < b.dim(); ++k) {
      image[i * b.dim() + k] = image_[i] * b.dim() + b.image_[k];
      sign[i * b.dim() + k] = static_cast<std::int8_t>(sign_[i] * b.sign_[k]);
    }
  }
  return SignedPermutation(std::move(image), std::move(sign));
}

RationalMatrix SignedPermutation::to_matrix() const {
  RationalMatrix m(dim(), dim());
  for (int j = 0; j < dim(); ++j) m(image_[j], j) = sign_[j];
  return m;
}

namespace {

using Element = std::vector<int>;

Element conjugate(const Element& a) {
  Element out(a.size());
  out[0] = a[0];
  for (std::size_t i = 1; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

// Cayley-Dickson: (a, b)(c, d) = (ac - d* b, d a + b c*).
Element cd_multiply(const Element& x, const Element& y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  const Element a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  const Element c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  const Element ac = cd_multiply(a, c);
  const Element db = cd_multiply(conjugate(d), b);
  const Element da = cd_multiply(d, a);
  const Element bc = cd_multiply(b, conjugate(c));
  Element out(n);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = ac[i] - db[i];
    out[h + i] = da[i] + bc[i];
  }
  return out;
}

// Left multiplication by the unit e_unit in the Cayley-Dickson algebra of
// dimension dim (2, 4 or 8).
SignedPermutation left_multiplication(int dim, int unit) {
  std::vector<int> image(dim);
  std::vector<std::int8_t> sign(dim);
  Element e(dim, 0);
  e[unit] = 1;
  for (int j = 0; j < dim; ++j) {
    Element f(dim, 0);
    f[j] = 1;
    const Element product = cd_multiply(e, f);
    for (int i = 0; i < dim; ++i) {
      if (product[i] != 0) {
        image[j] = i;
        sign[j] = static_cast<std::int8_t>(product[i]);
      }
    }
  }
  return SignedPermutation(std::move(image), std::move(sign));
}

CliffordRep base_representation(int k) {
  CliffordRep rep;
  rep.k = k;
  rep.dim = k == 0 ? 1 : k == 1 ? 2 : k <= 3 ? 4 : 8;
  for (int i = 1; i <= k; ++i) {
    rep.generators.push_back(left_multiplication(rep.dim, i));
  }
  return rep;
}

// Cliff(8) on R^16: diag(L_j, -L_j) for the octonion units, plus
// [[0, -I], [I, 0]].
std::vector<SignedPermutation> cliff8_generators() {
  std::vector<SignedPermutation> out;
  for (int j = 1; j <= 7; ++j) {
    const SignedPermutation l = left_multiplication(8, j);
    std::vector<int> image(16);
    std::vector<std::int8_t> sign(16);
    for (int c = 0; c < 8; ++c) {
      image[c] = l.image(c);
      sign[c] = static_cast<std::int8_t>(l.sign(c));
      image[c + 8] = l.image(c) + 8;
      sign[c + 8] = static_cast<std::int8_t>(-l.sign(c));
    }
    out.emplace_back(std::move(image), std::move(sign));
  }
  std::vector<int> image(16);
  std::vector<std::int8_t> sign(16);
  for (int c = 0; c < 8; ++c) {
    image[c] = c + 8;
    sign[c] = 1;
    image[c + 8] = c;
    sign[c + 8] = -1;
  }
  out.emplace_back(std::move(image), std::move(sign));
  return out;
}

}  // namespace

bool check_clifford_relations(const CliffordRep& rep) {
  const SignedPermutation minus_identity = -SignedPermutation::identity(rep.dim);
  if (static_cast<int>(rep.generators.size()) != rep.k) return false;
  for (int i = 0; i < rep.k; ++i) {
    const auto& e = rep.generators[i];
    if (e.dim() != rep.dim || e * e != minus_identity) return false;
    for (int j = i + 1; j < rep.k; ++j) {
      const auto& f = rep.generators[j];
      if (e * f != -(f * e)) return false;
    }
  }
  return true;
}

CliffordRep clifford_generators(int k) {
  if (k < 0 || k > 24) {
    throw Error(ErrorCode::kOutOfRange, "clifford_generators supports 0 <= k <= 24");
  }
  CliffordRep rep;
  if (k < 8) {
    rep = base_representation(k);
  } else {
    // Cliff(k) = Cliff(k - 8) (x) Cliff(8): E_i (x) Omega and I (x) F_j,
    // where Omega = F_1 ... F_8 squares to I and anticommutes with each F_j.
    const CliffordRep lower = clifford_generators(k - 8);
    const auto f = cliff8_generators();
    SignedPermutation omega = SignedPermutation::identity(16);
    for (const auto& g : f) omega = omega * g;
    rep.k = k;
    rep.dim = lower.dim * 16;
    for (const auto& e : lower.generators) {
      rep.generators.push_back(e.tensor(omega));
    }
    const SignedPermutation identity = SignedPermutation::identity(lower.dim);
    for (const auto& g : f) rep.generators.push_back(identity.tensor(g));
  }
  if (!check_clifford_relations(rep)) {
    throw std::logic_error("Clifford relations fail for k = " + std::to_string(k));
  }
  return rep;
}

NormedPairing::NormedPairing(int r, int s, int n, std::vector<Rational> tensor)
    : r_(r), s_(s), n_(n), tensor_(std::move(tensor)) {
  if (r < 1 || s < 1 || n < 1 ||
      tensor_.size() != static_cast<std::size_t>(r) * s * n) {
    throw Error(ErrorCode::kInvalidArgument, "pairing tensor has the wrong size");
  }
  const PolyMap f = as_map();
  Poly xx(r + s), yy(r + s);
  for (int a = 0; a < r; ++a) {
    xx.add_term(Monomial::variable(a) * Monomial::variable(a), 1);
  }
  for (int b = 0; b < s; ++b) {
    yy.add_term(Monomial::variable(r + b) * Monomial::variable(r + b), 1);
  }
  if (inner_poly(f, f) != xx * yy) {
    throw Error(ErrorCode::kInvalidArgument,
                "tensor does not satisfy <f,f> = <x,x><y,y>");
  }
}

PolyMap NormedPairing::as_map() const {
  std::vector<Poly> coords(n_, Poly(r_ + s_));
  for (int a = 0; a < r_; ++a) {
    for (int b = 0; b < s_; ++b) {
      const Monomial xy = Monomial::variable(a) * Monomial::variable(r_ + b);
      for (int c = 0; c < n_; ++c) coords[c].add_term(xy, coefficient(a, b, c));
    }
  }
  return PolyMap(r_ + s_, std::move(coords));
}

NormedPairing normed_pairing(int r, int n) {
  if (r < 1 || n < 1) {
    throw Error(ErrorCode::kOutOfRange, "pairing sizes must be positive");
  }
  if (r > rho(n)) {
    throw Error(ErrorCode::kSizeInfeasible,
                "no normed pairing of size [" + std::to_string(r) + "," +
                    std::to_string(n) + "," + std::to_string(n) +
                    "]: rho(" + std::to_string(n) + ") = " +
                    std::to_string(rho(n)));
  }
  const CliffordRep rep = clifford_generators(r - 1);
  if (n % rep.dim != 0) {
    throw Error(ErrorCode::kSizeInfeasible,
                "representation dimension " + std::to_string(rep.dim) +
                    " does not divide " + std::to_string(n));
  }
  std::vector<Rational> tensor(static_cast<std::size_t>(r) * n * n);
  auto at = [&](int a, int b, int c) -> Rational& {
    return tensor[(static_cast<std::size_t>(a) * n + b) * n + c];
  };
  for (int b = 0; b < n; ++b) at(0, b, b) = 1;
  for (int i = 1; i < r; ++i) {
    const auto& e = rep.generators[i - 1];
    for (int block = 0; block < n / rep.dim; ++block) {
      const int offset = block * rep.dim;
      for (int j = 0; j < rep.dim; ++j) {
        at(i, offset + j, offset + e.image(j)) = e.sign(j);
      }
    }
  }
  return NormedPairing(r, n, n, std::move(tensor));
}

StiefelHopfVerdict stiefel_hopf_feasible(int r, int s, int n) {
  if (r < 1 || s < 1 || n < 1) {
    throw Error(ErrorCode::kOutOfRange, "sizes must be positive");
  }
  StiefelHopfVerdict out;
  // Lucas: C(n, k) is odd iff the bits of k are a subset of the bits of n.
  for (int k = std::max(n - r + 1, 0); k < s && k <= n; ++k) {
    if ((k & n) == k) out.odd_binomials.push_back(k);
  }
  out.no_obstruction = out.odd_binomials.empty();
  return out;
}

QuadSphereMap hopf_map(const NormedPairing& f) {
  const int dim = f.r() + f.s();
  const PolyMap pairing = f.as_map();
  std::vector<Poly> coords;
  for (const auto& c : pairing.coords()) coords.push_back(c * Rational(2));
  Poly last(dim);
  for (int a = 0; a < dim; ++a) {
    last.add_term(Monomial::variable(a) * Monomial::variable(a),
                  a < f.r() ? 1 : -1);
  }
  coords.push_back(std::move(last));
  return make_sphere_map(PolyMap(dim, std::move(coords)),
                         QuadForm(RationalMatrix::identity(dim)));
}

LineRounder pairing_to_rounding(const NormedPairing& f) {
  Poly xx(f.r() + f.s());
  for (int a = 0; a < f.r(); ++a) {
    xx.add_term(Monomial::variable(a) * Monomial::variable(a), 1);
  }
  return LineRounder{FracQuadMap(f.as_map(), std::move(xx)), false};
}

}  // namespace rounding_forge
