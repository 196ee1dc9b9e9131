#include "rounding_forge/poly.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "rounding_forge/error.hpp"

namespace rounding_forge {

Monomial Monomial::variable(int index) {
  if (index < 0 || index > 0xFFFF) {
    throw Error(ErrorCode::kOutOfRange, "variable index out of range");
  }
  Monomial m;
  m.degree_ = 1;
  m.vars_[0] = static_cast<std::uint16_t>(index);
  return m;
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Monomial m;
  for (int i = 0; i < static_cast<int>(exponents.size()); ++i) {
    for (int k = 0; k < exponents[i]; ++k) m = m * variable(i);
  }
  return m;
}

int Monomial::exponent(int index) const {
  return static_cast<int>(
      std::count(vars_.begin(), vars_.begin() + degree_, index));
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (degree_ + other.degree_ > kMaxDegree) {
    throw Error(ErrorCode::kDegreeOverflow,
                "monomial degree exceeds " + std::to_string(kMaxDegree));
  }
  Monomial out;
  out.degree_ = static_cast<std::uint8_t>(degree_ + other.degree_);
  std::merge(vars_.begin(), vars_.begin() + degree_, other.vars_.begin(),
             other.vars_.begin() + other.degree_, out.vars_.begin(),
             std::greater<>());
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  return std::includes(other.vars_.begin(), other.vars_.begin() + other.degree_,
                       vars_.begin(), vars_.begin() + degree_,
                       std::greater<>());
}

Monomial Monomial::cofactor_in(const Monomial& other) const {
  Monomial out;
  auto end = std::set_difference(
      other.vars_.begin(), other.vars_.begin() + other.degree_, vars_.begin(),
      vars_.begin() + degree_, out.vars_.begin(), std::greater<>());
  out.degree_ = static_cast<std::uint8_t>(end - out.vars_.begin());
  return out;
}

std::string Monomial::to_string() const {
  if (degree_ == 0) return "1";
  std::ostringstream os;
  // Ascending variable order for display.
  bool first = true;
  for (int i = degree_ - 1; i >= 0;) {
    const int v = vars_[i];
    int power = 0;
    while (i >= 0 && vars_[i] == v) {
      ++power;
      --i;
    }
    if (!first) os << '*';
    first = false;
    os << 'x' << (v + 1);
    if (power > 1) os << '^' << power;
  }
  return os.str();
}

Poly::Poly(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative variable count");
  }
}

Poly Poly::constant(int num_vars, const Rational& c) {
  Poly p(num_vars);
  p.add_term(Monomial(), c);
  return p;
}

Poly Poly::variable(int num_vars, int index) {
  if (index < 0 || index >= num_vars) {
    throw Error(ErrorCode::kOutOfRange, "variable index out of range");
  }
  Poly p(num_vars);
  p.add_term(Monomial::variable(index), 1);
  return p;
}

Poly Poly::linear(int num_vars, std::span<const Rational> coeffs) {
  Poly p(num_vars);
  int offset = 0;
  if (static_cast<int>(coeffs.size()) == num_vars + 1) {
    p.add_term(Monomial(), coeffs[0]);
    offset = 1;
  } else if (static_cast<int>(coeffs.size()) != num_vars) {
    throw Error(ErrorCode::kDimensionMismatch, "linear coefficient count");
  }
  for (int i = 0; i < num_vars; ++i) {
    p.add_term(Monomial::variable(i), coeffs[i + offset]);
  }
  return p;
}

Poly Poly::monomial(int num_vars, const Monomial& m, const Rational& c) {
  Poly p(num_vars);
  p.add_term(m, c);
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  // Graded order: the last key has maximal degree.
  return terms_.rbegin()->first.degree();
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly Poly::homogeneous_part(int d) const {
  Poly out(num_vars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) out.terms_.emplace_hint(out.terms_.end(), m, c);
  }
  return out;
}

bool Poly::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  if (m.min_num_vars() > num_vars_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "monomial uses a variable outside the ring");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

namespace {

void require_same_ring(const Poly& a, const Poly& b) {
  if (a.num_vars() != b.num_vars()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "polynomials live in rings with " +
                    std::to_string(a.num_vars()) + " and " +
                    std::to_string(b.num_vars()) + " variables");
  }
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  require_same_ring(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_ring(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != num_vars_) {
    throw Error(ErrorCode::kDimensionMismatch, "evaluation point size");
  }
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (auto v : m.variables()) term *= point[v];
    acc += term;
  }
  return acc;
}

double Poly::evaluate(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != num_vars_) {
    throw Error(ErrorCode::kDimensionMismatch, "evaluation point size");
  }
  double acc = 0.0;
  for (const auto& [m, c] : terms_) {
    double term = c.get_d();
    for (auto v : m.variables()) term *= point[v];
    acc += term;
  }
  return acc;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (static_cast<int>(images.size()) != num_vars_) {
    throw Error(ErrorCode::kDimensionMismatch, "substitution arity");
  }
  const int target_vars = images.empty() ? 0 : images[0].num_vars();
  Poly out(target_vars);
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(target_vars, c);
    for (auto v : m.variables()) term = term * images[v];
    out += term;
  }
  return out;
}

Poly Poly::extended(int num_vars) const {
  if (num_vars < num_vars_) {
    throw Error(ErrorCode::kDimensionMismatch, "cannot shrink a ring");
  }
  Poly out(num_vars);
  out.terms_ = terms_;
  return out;
}

Poly Poly::homogenized(int degree, int t_index) const {
  if (t_index < num_vars_) {
    throw Error(ErrorCode::kInvalidArgument, "homogenizing variable in use");
  }
  Poly out(t_index + 1);
  const Monomial t = Monomial::variable(t_index);
  for (const auto& [m, c] : terms_) {
    if (m.degree() > degree) {
      throw Error(ErrorCode::kDegreeOverflow, "term above homogenizing degree");
    }
    Monomial lifted = m;
    for (int k = m.degree(); k < degree; ++k) lifted = lifted * t;
    out.add_term(lifted, c);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (m.degree() == 0) {
      os << magnitude.get_str();
    } else {
      if (magnitude != 1) os << magnitude.get_str() << '*';
      os << m.to_string();
    }
  }
  return os.str();
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  Poly out(a.num_vars());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Poly operator*(Poly a, const Rational& c) { return a *= c; }
Poly operator*(const Rational& c, Poly a) { return a *= c; }

PolyDivision divide(const Poly& f, const Poly& g) {
  require_same_ring(f, g);
  if (g.is_zero()) {
    throw Error(ErrorCode::kDivisionByZero, "division by the zero polynomial");
  }
  const auto& [lead_m, lead_c] = *g.terms().rbegin();
  PolyDivision out{Poly(f.num_vars()), Poly(f.num_vars())};
  Poly rest = f;
  while (!rest.is_zero()) {
    const auto [m, c] = *rest.terms().rbegin();
    if (lead_m.divides(m)) {
      const Poly step =
          Poly::monomial(f.num_vars(), lead_m.cofactor_in(m), c / lead_c);
      out.quotient += step;
      rest -= step * g;
    } else {
      out.remainder.add_term(m, c);
      rest.add_term(m, -c);
    }
  }
  return out;
}

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
  PolyDivision d = divide(f, g);
  if (!d.remainder.is_zero()) return std::nullopt;
  return std::move(d.quotient);
}

std::vector<Rational> univariate_coefficients(const Poly& p) {
  if (p.num_vars() != 1) {
    throw Error(ErrorCode::kDimensionMismatch, "expected a univariate polynomial");
  }
  std::vector<Rational> out(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
  for (const auto& [m, c] : p.terms()) out[m.degree()] = c;
  return out;
}

}  // namespace rounding_forge
