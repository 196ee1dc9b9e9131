#include "rounding_forge/rational.hpp"

#include <cctype>

#include "rounding_forge/error.hpp"

namespace rounding_forge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kDegreeOverflow: return "DegreeOverflow";
    case ErrorCode::kNotLinear: return "NotLinear";
    case ErrorCode::kNotQuadratic: return "NotQuadratic";
    case ErrorCode::kRankTooLow: return "RankTooLow";
    case ErrorCode::kNotDivisible: return "NotDivisible";
    case ErrorCode::kNotDegenerate: return "NotDegenerate";
    case ErrorCode::kIrrationalKernelWitness: return "IrrationalKernelWitness";
    case ErrorCode::kDenominatorVanishesIdentically:
      return "DenominatorVanishesIdentically";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kDegenerate: return "Degenerate";
    case ErrorCode::kQ2NotQuadratic: return "Q2NotQuadratic";
    case ErrorCode::kPoleProximity: return "PoleProximity";
    case ErrorCode::kSizeInfeasible: return "SizeInfeasible";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::kParse,
                "malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorCode::kParse,
                "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_display_string(const Rational& value) { return value.get_str(); }

bool rational_sqrt(const Rational& value, Rational* root) {
  if (sgn(value) < 0) return false;
  if (!mpz_perfect_square_p(value.get_num_mpz_t()) ||
      !mpz_perfect_square_p(value.get_den_mpz_t())) {
    return false;
  }
  if (root != nullptr) {
    *root = Rational(sqrt(value.get_num()), sqrt(value.get_den()));
    root->canonicalize();
  }
  return true;
}

}  // namespace rounding_forge
