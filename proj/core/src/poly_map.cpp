#include "rounding_forge/poly_map.hpp"

#include <algorithm>
#include <sstream>

#include "rounding_forge/error.hpp"

namespace rounding_forge {

PolyMap::PolyMap(int source_dim, int target_dim)
    : source_dim_(source_dim),
      coords_(static_cast<std::size_t>(target_dim), Poly(source_dim)) {}

PolyMap::PolyMap(int source_dim, std::vector<Poly> coords)
    : source_dim_(source_dim), coords_(std::move(coords)) {
  check();
}

void PolyMap::check() const {
  for (const auto& c : coords_) {
    if (c.num_vars() != source_dim_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "map coordinate has " + std::to_string(c.num_vars()) +
                      " variables, expected " + std::to_string(source_dim_));
    }
    if (c.degree() > kMaxDegree) {
      throw Error(ErrorCode::kDegreeOverflow,
                  "map coordinate of degree " + std::to_string(c.degree()));
    }
  }
}

PolyMap PolyMap::from_linear(const RationalMatrix& a) {
  std::vector<Poly> coords;
  coords.reserve(a.rows());
  for (int r = 0; r < a.rows(); ++r) {
    coords.push_back(Poly::linear(a.cols(), a.row(r)));
  }
  return PolyMap(a.cols(), std::move(coords));
}

PolyMap PolyMap::from_quadratic(int source_dim,
                                std::span<const RationalMatrix> forms) {
  std::vector<Poly> coords;
  coords.reserve(forms.size());
  for (const auto& s : forms) {
    if (s.rows() != source_dim || s.cols() != source_dim || !s.is_symmetric()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "quadratic coordinate needs a symmetric m x m matrix");
    }
    Poly p(source_dim);
    for (int a = 0; a < source_dim; ++a) {
      for (int b = a; b < source_dim; ++b) {
        const Rational c = a == b ? s(a, b) : Rational(2 * s(a, b));
        p.add_term(Monomial::variable(a) * Monomial::variable(b), c);
      }
    }
    coords.push_back(std::move(p));
  }
  return PolyMap(source_dim, std::move(coords));
}

int PolyMap::degree() const {
  int d = -1;
  for (const auto& c : coords_) d = std::max(d, c.degree());
  return d;
}

PolyMap PolyMap::homogeneous_part(int d) const {
  PolyMap out(source_dim_, target_dim());
  for (int i = 0; i < target_dim(); ++i) {
    out.coords_[i] = coords_[i].homogeneous_part(d);
  }
  return out;
}

bool PolyMap::is_homogeneous(int d) const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [d](const Poly& p) { return p.is_homogeneous(d); });
}

bool PolyMap::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Poly& p) { return p.is_zero(); });
}

RationalMatrix PolyMap::linear_matrix() const {
  RationalMatrix a(target_dim(), source_dim_);
  for (int r = 0; r < target_dim(); ++r) {
    for (const auto& [m, c] : coords_[r].terms()) {
      if (m.degree() == 1) a(r, m.variables()[0]) = c;
    }
  }
  return a;
}

std::vector<RationalMatrix> PolyMap::quadratic_matrices() const {
  std::vector<RationalMatrix> out;
  out.reserve(coords_.size());
  for (const auto& p : coords_) {
    RationalMatrix s(source_dim_, source_dim_);
    for (const auto& [m, c] : p.terms()) {
      if (m.degree() != 2) continue;
      const int a = m.variables()[0];
      const int b = m.variables()[1];
      if (a == b) {
        s(a, a) = c;
      } else {
        s(a, b) = c / 2;
        s(b, a) = c / 2;
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

PolyMap PolyMap::times(const Poly& s) const {
  std::vector<Poly> coords;
  coords.reserve(coords_.size());
  for (const auto& c : coords_) coords.push_back(c * s);
  return PolyMap(source_dim_, std::move(coords));
}

PolyMap PolyMap::compose_linear(const RationalMatrix& sigma) const {
  if (sigma.rows() != source_dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "composition size mismatch");
  }
  std::vector<Poly> images;
  images.reserve(source_dim_);
  for (int r = 0; r < source_dim_; ++r) {
    images.push_back(Poly::linear(sigma.cols(), sigma.row(r)));
  }
  std::vector<Poly> coords;
  coords.reserve(coords_.size());
  for (const auto& c : coords_) coords.push_back(c.substitute(images));
  return PolyMap(sigma.cols(), std::move(coords));
}

PolyMap PolyMap::padded(int target_dim) const {
  if (target_dim < this->target_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "cannot pad to a smaller target");
  }
  PolyMap out = *this;
  out.coords_.resize(static_cast<std::size_t>(target_dim), Poly(source_dim_));
  return out;
}

std::vector<Rational> PolyMap::evaluate(std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.evaluate(point));
  return out;
}

std::vector<double> PolyMap::evaluate(std::span<const double> point) const {
  std::vector<double> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(c.evaluate(point));
  return out;
}

std::string PolyMap::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < target_dim(); ++i) {
    if (i > 0) os << ", ";
    os << coords_[i].to_string();
  }
  os << ')';
  return os.str();
}

namespace {

void require_same_shape(const PolyMap& a, const PolyMap& b) {
  if (a.source_dim() != b.source_dim() || a.target_dim() != b.target_dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "maps " + std::to_string(a.source_dim()) + "->" +
                    std::to_string(a.target_dim()) + " and " +
                    std::to_string(b.source_dim()) + "->" +
                    std::to_string(b.target_dim()));
  }
}

}  // namespace

PolyMap& PolyMap::operator+=(const PolyMap& other) {
  require_same_shape(*this, other);
  for (int i = 0; i < target_dim(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

PolyMap& PolyMap::operator-=(const PolyMap& other) {
  require_same_shape(*this, other);
  for (int i = 0; i < target_dim(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

PolyMap& PolyMap::operator*=(const Rational& c) {
  for (auto& p : coords_) p *= c;
  return *this;
}

PolyMap operator+(PolyMap a, const PolyMap& b) { return a += b; }
PolyMap operator-(PolyMap a, const PolyMap& b) { return a -= b; }
PolyMap operator*(const Rational& c, PolyMap a) { return a *= c; }

Poly inner_poly(const PolyMap& u, const PolyMap& v) {
  require_same_shape(u, v);
  Poly out(u.source_dim());
  for (int i = 0; i < u.target_dim(); ++i) out += u[i] * v[i];
  return out;
}

int rank_linear(const PolyMap& a) {
  if (!a.is_homogeneous(1)) {
    throw Error(ErrorCode::kNotLinear, "rank_linear expects a linear map");
  }
  return rank(a.linear_matrix());
}

}  // namespace rounding_forge
