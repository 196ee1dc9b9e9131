#include "documents.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iterator>
#include <sstream>

namespace rounding_forge::cli {

namespace {

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) throw DocumentError(where + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw DocumentError(where + ": missing field \"" + key + "\"");
  }
  return *it;
}

std::string path_of(const std::string& where, const char* key) {
  return where.empty() ? std::string(key) : where + "." + key;
}

std::string indexed(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

int get_dim(const Json& obj, const char* key, const std::string& where) {
  const Json& v = field(obj, key, where);
  const std::string at = path_of(where, key);
  if (!v.is_number_integer()) throw DocumentError(at + ": expected an integer");
  const auto value = v.get<long long>();
  if (value < 1 || value > 4096) {
    throw DocumentError(at + ": dimension must be in [1, 4096]");
  }
  return static_cast<int>(value);
}

Rational get_rational(const Json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      throw DocumentError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(Integer(v.dump()));
  throw DocumentError(where + ": expected a rational string \"p/q\"");
}

const Json& get_array(const Json& v, std::size_t size, const std::string& where) {
  if (!v.is_array() || v.size() != size) {
    throw DocumentError(where + ": expected an array of length " +
                        std::to_string(size));
  }
  return v;
}

RationalMatrix get_matrix(const Json& v, int rows, int cols,
                          const std::string& where) {
  get_array(v, static_cast<std::size_t>(rows), where);
  RationalMatrix out(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const std::string row_at = indexed(where, static_cast<std::size_t>(r));
    get_array(v[r], static_cast<std::size_t>(cols), row_at);
    for (int c = 0; c < cols; ++c) {
      out(r, c) = get_rational(v[r][c], indexed(row_at, static_cast<std::size_t>(c)));
    }
  }
  return out;
}

RationalMatrix get_symmetric(const Json& v, int dim, const std::string& where) {
  RationalMatrix s = get_matrix(v, dim, dim, where);
  if (!s.is_symmetric()) throw DocumentError(where + ": matrix is not symmetric");
  return s;
}

Poly decode_poly(const Json& v, int m, const std::string& where) {
  if (!v.is_object()) throw DocumentError(where + ": expected a polynomial object");
  Poly p(m);
  if (auto it = v.find("constant"); it != v.end()) {
    p.add_term(Monomial(), get_rational(*it, path_of(where, "constant")));
  }
  if (auto it = v.find("linear"); it != v.end()) {
    const std::string at = path_of(where, "linear");
    get_array(*it, static_cast<std::size_t>(m), at);
    for (int i = 0; i < m; ++i) {
      p.add_term(Monomial::variable(i),
                 get_rational((*it)[i], indexed(at, static_cast<std::size_t>(i))));
    }
  }
  if (auto it = v.find("quadratic"); it != v.end()) {
    const RationalMatrix s = get_symmetric(*it, m, path_of(where, "quadratic"));
    for (int a = 0; a < m; ++a) {
      p.add_term(Monomial::variable(a) * Monomial::variable(a), s(a, a));
      for (int b = a + 1; b < m; ++b) {
        p.add_term(Monomial::variable(a) * Monomial::variable(b),
                   Rational(2) * s(a, b));
      }
    }
  }
  return p;
}

std::vector<Poly> decode_polys(const Json& v, int count, int m,
                               const std::string& where) {
  get_array(v, static_cast<std::size_t>(count), where);
  std::vector<Poly> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(decode_poly(v[i], m, indexed(where, static_cast<std::size_t>(i))));
  }
  return out;
}

void expect_kind(const Json& doc, const char* kind) {
  const Json& k = field(doc, "kind", "document");
  if (!k.is_string() || k.get<std::string>() != kind) {
    throw DocumentError(std::string("document: expected kind \"") + kind + "\"");
  }
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length,
                 EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

InputFile read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  InputFile file;
  file.path = path;
  file.bytes.assign(std::istreambuf_iterator<char>(in), {});
  if (in.bad()) throw IoError("cannot read " + path);
  file.sha256 = sha256_hex(file.bytes);
  try {
    file.document = Json::parse(file.bytes);
  } catch (const Json::parse_error& e) {
    throw DocumentError(path + ": " + e.what());
  }
  const Json& kind = field(file.document, "kind", path);
  if (!kind.is_string()) throw DocumentError(path + ": kind must be a string");
  file.kind = kind.get<std::string>();
  if (file.kind != "jet" && file.kind != "fracquad" && file.kind != "pairing" &&
      file.kind != "spheremap") {
    throw DocumentError(path + ": unknown kind \"" + file.kind + "\"");
  }
  return file;
}

Json encode_rational(const Rational& value) { return to_fraction_string(value); }

Json encode_vector(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode_rational(x));
  return out;
}

Json encode_matrix(const RationalMatrix& a) {
  Json out = Json::array();
  for (int r = 0; r < a.rows(); ++r) out.push_back(encode_vector(a.row(r)));
  return out;
}

Json encode_signature(const Signature& s) {
  return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

Json encode_poly(const Poly& p) {
  if (p.degree() > 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "only polynomials of degree <= 2 have a document form");
  }
  const int m = p.num_vars();
  RationalVector linear(m);
  RationalMatrix quadratic(m, m);
  for (int a = 0; a < m; ++a) {
    linear[a] = p.coefficient(Monomial::variable(a));
    quadratic(a, a) = p.coefficient(Monomial::variable(a) * Monomial::variable(a));
    for (int b = a + 1; b < m; ++b) {
      const Rational half =
          p.coefficient(Monomial::variable(a) * Monomial::variable(b)) / 2;
      quadratic(a, b) = half;
      quadratic(b, a) = half;
    }
  }
  return Json{{"constant", encode_rational(p.constant_term())},
              {"linear", encode_vector(linear)},
              {"quadratic", encode_matrix(quadratic)},
              {"text", p.to_string()}};
}

Json encode_jet(const Jet2& jet) {
  Json b = Json::array();
  for (const auto& s : jet.quadratic().quadratic_matrices()) b.push_back(encode_matrix(s));
  return Json{{"kind", "jet"},
              {"m", jet.source_dim()},
              {"n", jet.target_dim()},
              {"A", encode_matrix(jet.linear().linear_matrix())},
              {"B", std::move(b)}};
}

Json encode_fracquad(const FracQuadMap& map) {
  Json f = Json::array();
  for (const auto& c : map.numerator().coords()) f.push_back(encode_poly(c));
  return Json{{"kind", "fracquad"},
              {"m", map.source_dim()},
              {"n", map.target_dim()},
              {"F", std::move(f)},
              {"Q", encode_poly(map.denominator())}};
}

Json encode_pairing(const NormedPairing& f) {
  Json tensor = Json::array();
  for (int a = 0; a < f.r(); ++a) {
    Json slab = Json::array();
    for (int b = 0; b < f.s(); ++b) {
      Json fiber = Json::array();
      for (int c = 0; c < f.n(); ++c) fiber.push_back(encode_rational(f.coefficient(a, b, c)));
      slab.push_back(std::move(fiber));
    }
    tensor.push_back(std::move(slab));
  }
  return Json{{"kind", "pairing"},
              {"r", f.r()},
              {"s", f.s()},
              {"n", f.n()},
              {"tensor", std::move(tensor)}};
}

Json encode_spheremap(const QuadSphereMap& sm) {
  Json f = Json::array();
  for (const auto& c : sm.map.coords()) f.push_back(encode_poly(c));
  return Json{{"kind", "spheremap"},
              {"source_dim", sm.source_dim()},
              {"target_dim", sm.target_dim()},
              {"f", std::move(f)},
              {"G", encode_matrix(sm.metric.matrix())},
              {"L", encode_matrix(sm.normalizer.lower)},
              {"D", encode_vector(sm.normalizer.diagonal)}};
}

Jet2 decode_jet(const Json& doc) {
  expect_kind(doc, "jet");
  const int m = get_dim(doc, "m", "");
  const int n = get_dim(doc, "n", "");
  const RationalMatrix a = get_matrix(field(doc, "A", "document"), n, m, "A");
  const Json& bs = get_array(field(doc, "B", "document"), static_cast<std::size_t>(n), "B");
  std::vector<RationalMatrix> forms;
  for (int i = 0; i < n; ++i) {
    forms.push_back(get_symmetric(bs[i], m, indexed("B", static_cast<std::size_t>(i))));
  }
  return Jet2(PolyMap::from_linear(a), PolyMap::from_quadratic(m, forms));
}

FracQuadMap decode_fracquad(const Json& doc) {
  expect_kind(doc, "fracquad");
  const int m = get_dim(doc, "m", "");
  const int n = get_dim(doc, "n", "");
  std::vector<Poly> f = decode_polys(field(doc, "F", "document"), n, m, "F");
  Poly q = decode_poly(field(doc, "Q", "document"), m, "Q");
  return FracQuadMap(PolyMap(m, std::move(f)), std::move(q));
}

NormedPairing decode_pairing(const Json& doc) {
  expect_kind(doc, "pairing");
  const int r = get_dim(doc, "r", "");
  const int s = get_dim(doc, "s", "");
  const int n = get_dim(doc, "n", "");
  const Json& t = get_array(field(doc, "tensor", "document"), static_cast<std::size_t>(r), "tensor");
  std::vector<Rational> tensor;
  tensor.reserve(static_cast<std::size_t>(r) * s * n);
  for (int a = 0; a < r; ++a) {
    const std::string at = indexed("tensor", static_cast<std::size_t>(a));
    const RationalMatrix slab = get_matrix(t[a], s, n, at);
    for (int b = 0; b < s; ++b) {
      for (int c = 0; c < n; ++c) tensor.push_back(slab(b, c));
    }
  }
  return NormedPairing(r, s, n, std::move(tensor));
}

QuadSphereMap decode_spheremap(const Json& doc) {
  expect_kind(doc, "spheremap");
  const int m = get_dim(doc, "source_dim", "");
  const int n = get_dim(doc, "target_dim", "");
  std::vector<Poly> f = decode_polys(field(doc, "f", "document"), n, m, "f");
  RationalMatrix g = get_symmetric(field(doc, "G", "document"), m, "G");
  PolyMap map(m, std::move(f));
  if (!map.is_homogeneous(2)) {
    throw DocumentError("f: sphere map coordinates must be quadratic forms");
  }
  return make_sphere_map(std::move(map), QuadForm(std::move(g)));
}

}  // namespace rounding_forge::cli
