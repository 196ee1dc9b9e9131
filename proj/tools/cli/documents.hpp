#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>

#include "rounding_forge/cliff.hpp"
#include "rounding_forge/jets.hpp"
#include "rounding_forge/quad_form.hpp"
#include "rounding_forge/spheres.hpp"

namespace rounding_forge::cli {

using Json = nlohmann::json;

/// Malformed document: bad JSON, a missing field, a wrong shape. The message
/// names the file and the field path ("B[1][0][1]").
class DocumentError : public Error {
 public:
  explicit DocumentError(const std::string& what) : Error(ErrorCode::kParse, what) {}
};

/// The file could not be read.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputFile {
  std::string path;
  std::string bytes;
  std::string sha256;
  Json document;
  std::string kind;
};

InputFile read_input(const std::string& path);

std::string sha256_hex(std::string_view bytes);

Json encode_rational(const Rational& value);
Json encode_vector(const RationalVector& v);
Json encode_matrix(const RationalMatrix& a);
Json encode_signature(const Signature& s);
/// {constant, linear, quadratic, text} for deg p <= 2; the quadratic matrix
/// is symmetric with the x_a x_b coefficient split over (a,b) and (b,a).
Json encode_poly(const Poly& p);

Json encode_jet(const Jet2& jet);
Json encode_fracquad(const FracQuadMap& map);
Json encode_pairing(const NormedPairing& f);
Json encode_spheremap(const QuadSphereMap& sm);

/// Decoders validate shapes and raise DocumentError with the field path.
/// Mathematical failures (Q not dividing <F,F>, a tensor that is not a
/// normed pairing) surface as rounding_forge::Error with their own codes.
Jet2 decode_jet(const Json& doc);
FracQuadMap decode_fracquad(const Json& doc);
NormedPairing decode_pairing(const Json& doc);
QuadSphereMap decode_spheremap(const Json& doc);

}  // namespace rounding_forge::cli
