#include "rounding_forge/quad_form.hpp"

#include <utility>

#include "rounding_forge/error.hpp"

namespace rounding_forge {

QuadForm::QuadForm(RationalMatrix symmetric) : matrix_(std::move(symmetric)) {
  if (!matrix_.is_symmetric()) {
    throw Error(ErrorCode::kInvalidArgument, "quadratic form matrix not symmetric");
  }
}

QuadForm QuadForm::zero(int dim) { return QuadForm(RationalMatrix(dim, dim)); }

QuadForm QuadForm::from_poly(const Poly& p) {
  if (!p.is_homogeneous(2)) {
    throw Error(ErrorCode::kNotQuadratic,
                "not a quadratic form: " + p.to_string());
  }
  const int n = p.num_vars();
  RationalMatrix s(n, n);
  for (const auto& [m, c] : p.terms()) {
    const int a = m.variables()[0];
    const int b = m.variables()[1];
    if (a == b) {
      s(a, a) = c;
    } else {
      s(a, b) = c / 2;
      s(b, a) = c / 2;
    }
  }
  return QuadForm(std::move(s));
}

Poly QuadForm::to_poly() const {
  Poly p(dim());
  for (int a = 0; a < dim(); ++a) {
    for (int b = a; b < dim(); ++b) {
      const Rational c = a == b ? matrix_(a, a) : Rational(2 * matrix_(a, b));
      p.add_term(Monomial::variable(a) * Monomial::variable(b), c);
    }
  }
  return p;
}

Rational QuadForm::evaluate(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "form evaluation size");
  }
  const RationalVector sx = matrix_ * x;
  Rational acc = 0;
  for (int i = 0; i < dim(); ++i) acc += x[i] * sx[i];
  return acc;
}

double QuadForm::evaluate(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "form evaluation size");
  }
  double acc = 0.0;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) acc += x[i] * matrix_(i, j).get_d() * x[j];
  }
  return acc;
}

QuadForm QuadForm::restricted(const RationalMatrix& basis) const {
  if (basis.rows() != dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "restriction basis size");
  }
  return QuadForm(basis.transpose() * matrix_ * basis);
}

QuadForm operator+(const QuadForm& a, const QuadForm& b) {
  return QuadForm(a.matrix_ + b.matrix_);
}

QuadForm operator-(const QuadForm& a, const QuadForm& b) {
  RationalMatrix neg = b.matrix_;
  for (int i = 0; i < neg.rows(); ++i) {
    for (int j = 0; j < neg.cols(); ++j) neg(i, j) = -neg(i, j);
  }
  return QuadForm(a.matrix_ + neg);
}

std::string Signature::to_string() const {
  return "(" + std::to_string(positive) + "," + std::to_string(negative) +
         "," + std::to_string(zero) + ")";
}

namespace {

// Congruence by the elementary operation e_dst += factor * e_src, applied
// to the working matrix and tracked in the basis.
void add_multiple(RationalMatrix& s, RationalMatrix& basis, int dst, int src,
                  const Rational& factor) {
  const int n = s.rows();
  for (int r = 0; r < n; ++r) s(r, dst) += factor * s(r, src);
  for (int c = 0; c < n; ++c) s(dst, c) += factor * s(src, c);
  for (int r = 0; r < n; ++r) basis(r, dst) += factor * basis(r, src);
}

void swap_index(RationalMatrix& s, RationalMatrix& basis, int i, int j) {
  if (i == j) return;
  const int n = s.rows();
  for (int c = 0; c < n; ++c) std::swap(s(i, c), s(j, c));
  for (int r = 0; r < n; ++r) std::swap(s(r, i), s(r, j));
  for (int r = 0; r < n; ++r) std::swap(basis(r, i), basis(r, j));
}

}  // namespace

Diagonalization lagrange_diagonalize(const QuadForm& form) {
  const int n = form.dim();
  RationalMatrix s = form.matrix();
  RationalMatrix basis = RationalMatrix::identity(n);

  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n && pivot < 0; ++i) {
      if (sgn(s(i, i)) != 0) pivot = i;
    }
    if (pivot < 0) {
      // All remaining diagonal entries vanish; look for an off-diagonal one.
      for (int i = k; i < n && pivot < 0; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (sgn(s(i, j)) != 0) {
            add_multiple(s, basis, i, j, 1);
            pivot = i;
            break;
          }
        }
      }
      if (pivot < 0) break;  // the remaining block is zero
    }
    swap_index(s, basis, k, pivot);
    for (int j = k + 1; j < n; ++j) {
      if (sgn(s(k, j)) == 0) continue;
      add_multiple(s, basis, j, k, -s(k, j) / s(k, k));
    }
  }

  Diagonalization out{std::vector<Rational>(n), std::move(basis)};
  for (int i = 0; i < n; ++i) out.diagonal[i] = s(i, i);
  return out;
}

Signature form_signature(const QuadForm& form) {
  Signature sig;
  for (const auto& d : lagrange_diagonalize(form).diagonal) {
    const int sign = sgn(d);
    if (sign > 0) {
      ++sig.positive;
    } else if (sign < 0) {
      ++sig.negative;
    } else {
      ++sig.zero;
    }
  }
  return sig;
}

std::optional<LdlFactors> ldl_decompose(const QuadForm& form) {
  const int n = form.dim();
  const RationalMatrix& s = form.matrix();
  LdlFactors out{RationalMatrix::identity(n), std::vector<Rational>(n)};
  for (int j = 0; j < n; ++j) {
    Rational d = s(j, j);
    for (int k = 0; k < j; ++k) {
      d -= out.lower(j, k) * out.lower(j, k) * out.diagonal[k];
    }
    if (sgn(d) == 0) return std::nullopt;
    out.diagonal[j] = d;
    for (int i = j + 1; i < n; ++i) {
      Rational v = s(i, j);
      for (int k = 0; k < j; ++k) {
        v -= out.lower(i, k) * out.lower(j, k) * out.diagonal[k];
      }
      out.lower(i, j) = v / d;
    }
  }
  return out;
}

}  // namespace rounding_forge
