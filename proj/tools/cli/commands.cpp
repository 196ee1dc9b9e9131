#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "documents.hpp"
#include "rounding_forge/circles.hpp"

namespace rounding_forge::cli {

namespace {

constexpr const char* kSeedVariable = "ROUNDING_FORGE_SEED";

struct OracleFlags {
  int trials = 100;
  std::uint64_t seed = 0;
  double tolerance = 1e-7;
  int points = 16;
  CLI::Option* seed_option = nullptr;
};

struct Options {
  std::string file;
  std::string second_file;
  std::string output;
  bool oracle = false;
  OracleFlags flags;
  int r = 0;
  int n = 0;
  bool rounding = false;
  long long rho_limit = 0;
  long long kappa_value = 0;
  std::vector<int> stiefel;
  bool json = false;
};

// Collects the report of one command and prints it once.
class Session {
 public:
  Session(std::string command, std::ostream& out, std::ostream& err)
      : out_(out), err_(err) {
    report_["command"] = std::move(command);
    report_["inputs"] = Json::array();
  }

  Json& report() { return report_; }
  std::ostream& out() { return out_; }

  InputFile read(const std::string& path) {
    InputFile file = read_input(path);
    report_["inputs"].push_back(Json{{"kind", file.kind}, {"sha256", file.sha256}});
    return file;
  }

  int finish(int status) {
    report_["exit_status"] = status;
    out_ << report_.dump(2) << '\n';
    return status;
  }

  int fail(int status, const std::string& message) {
    err_ << "rounding_forge: " << message << '\n';
    return status;
  }

 private:
  Json report_;
  std::ostream& out_;
  std::ostream& err_;
};

void write_document(const std::string& path, const Json& doc) {
  if (path.empty()) return;
  std::ofstream file(path, std::ios::binary);
  file << doc.dump(2) << '\n';
  if (!file) throw IoError("cannot write " + path);
}

Json invalid_verdict(const Error& e) {
  Json verdict{{"valid", false},
               {"reason", std::string(error_code_name(e.code()))},
               {"message", e.what()}};
  if (auto* nd = dynamic_cast<const NotDivisibleError*>(&e)) {
    verdict["condition"] =
        nd->which() == DivisibilityCondition::kInnerAB ? "<A,B>" : "<B,B>";
    verdict["remainder"] = nd->remainder().to_string();
  }
  if (auto* dl = dynamic_cast<const DegenerateLiftError*>(&e)) {
    verdict["signature"] = encode_signature(dl->signature());
    verdict["witness"] = encode_vector(dl->witness());
  }
  return verdict;
}

// Maps exceptions to exit codes: library errors about the mathematics of
// the input are a verdict (2); documents, files and ranges are operational (1).
int guarded(Session& session, const std::function<int()>& body) {
  try {
    return body();
  } catch (const IoError& e) {
    return session.fail(kExitOperational, e.what());
  } catch (const DocumentError& e) {
    return session.fail(kExitOperational, std::string("parse error: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kOutOfRange) {
      return session.fail(kExitOperational, e.what());
    }
    session.report()["verdict"] = invalid_verdict(e);
    return session.finish(kExitInvalid);
  } catch (const std::exception& e) {
    return session.fail(kExitOperational, std::string("internal error: ") + e.what());
  }
}

Json encode_quadratic_vector(const QuadraticVector& v) {
  Json out{{"rational_part", encode_vector(v.rational_part)},
           {"radicand", encode_rational(v.radicand)},
           {"irrational_part", encode_vector(v.irrational_part)}};
  out["approximate"] = v.approximate();
  return out;
}

Json encode_kernel(const std::vector<RationalVector>& kernel) {
  Json out = Json::array();
  for (const auto& v : kernel) out.push_back(encode_vector(v));
  return out;
}

Json jet_witnesses(const RoundingJet& rj, const DegeneracyVerdict& dv) {
  Json w{{"p", encode_poly(rj.p)},
         {"q", encode_poly(rj.q)},
         {"kernel", encode_kernel(dv.kernel)},
         {"restricted_signature", encode_signature(dv.restricted_signature)}};
  if (dv.witness) w["degeneracy_witness"] = encode_quadratic_vector(*dv.witness);
  return w;
}

Jet2 jet_from(const InputFile& file) {
  if (file.kind == "jet") return decode_jet(file.document);
  if (file.kind == "fracquad") return two_jet(decode_fracquad(file.document));
  throw DocumentError(file.path + ": expected a jet or fracquad document");
}

OracleOptions oracle_options(const OracleFlags& flags) {
  OracleOptions o;
  o.trials = flags.trials;
  o.seed = flags.seed;
  o.tolerance = flags.tolerance;
  o.points_per_line = flags.points;
  return o;
}

// Seeds from the environment unless --seed was given.
void apply_seed_default(OracleFlags& flags) {
  if (flags.seed_option != nullptr && flags.seed_option->count() > 0) return;
  const char* env = std::getenv(kSeedVariable);
  if (env == nullptr || *env == '\0') return;
  const std::string_view text(env);
  std::uint64_t seed = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw IoError(std::string(kSeedVariable) + " is not an unsigned integer: " + env);
  }
  flags.seed = seed;
}

Json oracle_summary(const OracleReport& r) {
  Json trials = Json::array();
  for (int t : r.violations) trials.push_back(t);
  return Json{{"trials", r.options.trials},
              {"seed", r.options.seed},
              {"tolerance", r.options.tolerance},
              {"points_per_line", r.options.points_per_line},
              {"max_residual", r.max_residual},
              {"violations", r.violations.size()},
              {"violating_trials", std::move(trials)},
              {"skipped_lines", r.skipped_lines}};
}

int cmd_check(Session& s, const Options& o) {
  const InputFile file = s.read(o.file);
  const RoundingJet rj = validate_jet(jet_from(file));
  const DegeneracyVerdict dv = is_degenerate(rj);
  s.report()["verdict"] = Json{{"valid", true},
                               {"degenerate", dv.degenerate},
                               {"rank_a", rj.rank_a}};
  s.report()["witnesses"] = jet_witnesses(rj, dv);
  return s.finish(kExitOk);
}

int cmd_canon(Session& s, Options& o) {
  const InputFile file = s.read(o.file);
  const RoundingJet rj = validate_jet(jet_from(file));
  const FracQuadMap canonical = canonical_rounding(rj);
  const Json doc = encode_fracquad(canonical);
  write_document(o.output, doc);
  s.report()["document"] = doc;
  s.report()["verdict"] = Json{{"valid", true}};
  s.report()["witnesses"] = Json{{"p", encode_poly(rj.p)}, {"q", encode_poly(rj.q)}};
  int status = kExitOk;
  if (o.oracle) {
    apply_seed_default(o.flags);
    const OracleReport r = verify_rounding_numeric(canonical, oracle_options(o.flags));
    s.report()["oracle"] = oracle_summary(r);
    if (!r.violations.empty()) status = kExitInvalid;
  }
  return s.finish(status);
}

int cmd_degen(Session& s, const Options& o) {
  const InputFile file = s.read(o.file);
  const RoundingJet rj = validate_jet(jet_from(file));
  const DegeneracyVerdict dv = is_degenerate(rj);
  s.report()["verdict"] = Json{{"valid", true}, {"degenerate", dv.degenerate}};
  s.report()["witnesses"] = jet_witnesses(rj, dv);
  return s.finish(kExitOk);
}

int cmd_factor(Session& s, const Options& o) {
  const InputFile file = s.read(o.file);
  const RoundingJet rj = validate_jet(jet_from(file));
  const DegenerateFactorization f = factor_degenerate(rj);
  const Json doc = encode_jet(f.reduced.jet);
  write_document(o.output, doc);
  s.report()["document"] = doc;
  s.report()["verdict"] = Json{{"valid", true}, {"degenerate", true}};
  s.report()["witnesses"] = Json{{"projection", encode_matrix(f.projection)},
                                 {"section", encode_matrix(f.section)},
                                 {"reduced_p", encode_poly(f.reduced.p)},
                                 {"reduced_q", encode_poly(f.reduced.q)}};
  return s.finish(kExitOk);
}

int cmd_equiv(Session& s, const Options& o) {
  const Jet2 j1 = jet_from(s.read(o.file));
  const Jet2 j2 = jet_from(s.read(o.second_file));
  const auto w = jets_equivalent(j1, j2);
  if (!w) {
    s.report()["verdict"] = Json{{"equivalent", false}};
    return s.finish(kExitInvalid);
  }
  s.report()["verdict"] = Json{{"equivalent", true}};
  s.report()["witnesses"] =
      Json{{"lambda", encode_rational(w->lambda)}, {"l", encode_poly(w->l)}};
  return s.finish(kExitOk);
}

int cmd_sphere(Session& s, const Options& o) {
  const InputFile file = s.read(o.file);
  const RoundingJet rj = validate_jet(jet_from(file));
  const QuadSphereMap sm = sphere_lift(rj);
  const Json doc = encode_spheremap(sm);
  write_document(o.output, doc);
  s.report()["document"] = doc;
  s.report()["verdict"] = Json{{"valid", true}, {"degenerate", false}};
  s.report()["witnesses"] =
      Json{{"signature", encode_signature(form_signature(sm.metric))}};
  return s.finish(kExitOk);
}

int cmd_pairing(Session& s, const Options& o) {
  const NormedPairing f = normed_pairing(o.r, o.n);
  const StiefelHopfVerdict sh = stiefel_hopf_feasible(o.r, o.n, o.n);
  const Json doc = encode_pairing(f);
  write_document(o.output, doc);
  s.report()["document"] = doc;
  s.report()["verdict"] = Json{{"valid", true},
                               {"rho", rho(o.n)},
                               {"stiefel_hopf_no_obstruction", sh.no_obstruction}};
  if (o.rounding) {
    const LineRounder lr = pairing_to_rounding(f);
    s.report()["rounding"] = encode_fracquad(lr.map);
    s.report()["rounding_germ_at_origin"] = lr.germ_at_origin;
  }
  return s.finish(kExitOk);
}

int cmd_hopf(Session& s, const Options& o) {
  const InputFile file = s.read(o.file);
  if (file.kind != "pairing") {
    throw DocumentError(file.path + ": expected a pairing document");
  }
  const QuadSphereMap sm = hopf_map(decode_pairing(file.document));
  const Json doc = encode_spheremap(sm);
  write_document(o.output, doc);
  s.report()["document"] = doc;
  s.report()["verdict"] = Json{{"valid", true}};
  return s.finish(kExitOk);
}

int cmd_verify(Session& s, Options& o) {
  const InputFile file = s.read(o.file);
  FracQuadMap map = [&] {
    if (file.kind == "jet") return canonical_rounding(validate_jet(decode_jet(file.document)));
    if (file.kind == "fracquad") return decode_fracquad(file.document);
    if (file.kind == "pairing") return pairing_to_rounding(decode_pairing(file.document)).map;
    throw DocumentError(file.path + ": spheremap documents cannot be line-sampled");
  }();
  apply_seed_default(o.flags);
  const OracleReport r = verify_rounding_numeric(map, oracle_options(o.flags));
  s.report()["oracle"] = oracle_summary(r);
  s.report()["verdict"] = Json{{"circles", r.violations.empty()}};
  return s.finish(r.violations.empty() ? kExitOk : kExitInvalid);
}

std::string stiefel_text(int r, int s, int n, const StiefelHopfVerdict& v) {
  const std::string size =
      "[" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(n) + "]";
  if (v.no_obstruction) return "no obstruction for " + size;
  std::string ks, binomials;
  for (std::size_t i = 0; i < v.odd_binomials.size(); ++i) {
    const std::string k = std::to_string(v.odd_binomials[i]);
    ks += (i ? "," : "") + k;
    binomials += (i ? ", " : "") + std::string("C(") + std::to_string(n) + "," + k + ")";
  }
  return "obstruction at k=" + ks + " (" + binomials + " odd)";
}

void print_rho_table(std::ostream& out, long long limit) {
  const int width = std::max<int>(3, static_cast<int>(std::to_string(limit).size()) + 1);
  constexpr long long kPerRow = 16;
  for (long long start = 1; start <= limit; start += kPerRow) {
    const long long stop = std::min(limit, start + kPerRow - 1);
    std::ostringstream head, body;
    head << std::left << std::setw(6) << "n";
    body << std::left << std::setw(6) << "rho(n)";
    for (long long n = start; n <= stop; ++n) {
      head << std::right << std::setw(width) << n;
      body << std::right << std::setw(width) << rho(n);
    }
    if (start > 1) out << '\n';
    out << head.str() << '\n' << body.str() << '\n';
  }
}

int cmd_tables(Session& s, const Options& o) {
  const int chosen = (o.rho_limit > 0 ? 1 : 0) + (o.kappa_value != 0 ? 1 : 0) +
                     (o.stiefel.empty() ? 0 : 1);
  if (chosen != 1) {
    return s.fail(kExitOperational, "tables needs exactly one of --rho, --kappa, --stiefel");
  }
  std::ostringstream text;
  Json& report = s.report();
  if (o.rho_limit > 0) {
    if (o.rho_limit > kKappaLimit) {
      throw Error(ErrorCode::kOutOfRange, "--rho accepts at most 2^20");
    }
    Json values = Json::array();
    for (long long n = 1; n <= o.rho_limit; ++n) values.push_back(rho(n));
    report["rho"] = std::move(values);
    print_rho_table(text, o.rho_limit);
  } else if (o.kappa_value != 0) {
    const int k = kappa(o.kappa_value);
    report["kappa"] = Json{{"m", o.kappa_value}, {"value", k}};
    text << "kappa(" << o.kappa_value << ") = " << k << '\n';
  } else {
    const int r = o.stiefel[0], ss = o.stiefel[1], n = o.stiefel[2];
    const StiefelHopfVerdict v = stiefel_hopf_feasible(r, ss, n);
    report["stiefel_hopf"] = Json{{"size", {r, ss, n}},
                                  {"no_obstruction", v.no_obstruction},
                                  {"odd_binomials", v.odd_binomials}};
    text << stiefel_text(r, ss, n, v) << '\n';
  }
  if (o.json) return s.finish(kExitOk);
  s.out() << text.str();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact toolkit for fractional-quadratic roundings", "rounding_forge"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub, const char* help) {
    sub->add_option("file", o.file, help)->required();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Also write the produced document here");
  };
  auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--trials", o.flags.trials, "Number of random lines")
        ->check(CLI::PositiveNumber);
    o.flags.seed_option = sub->add_option(
        "--seed", o.flags.seed, "Oracle seed (default: $ROUNDING_FORGE_SEED or 0)");
    sub->add_option("--tol", o.flags.tolerance, "Relative circle-fit tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--points", o.flags.points, "Samples per line (at least 5)")
        ->check(CLI::Range(5, 10000));
  };

  auto* check = app.add_subcommand("check", "Validate a jet and report p, q and degeneracy");
  add_file(check, "jet or fracquad document");
  auto* canon = app.add_subcommand("canon", "Emit the canonical rounding F/Q of a jet");
  add_file(canon, "jet document");
  add_output(canon);
  canon->add_flag("--oracle", o.oracle, "Run the numeric line-to-circle oracle");
  add_oracle(canon);
  auto* degen = app.add_subcommand("degen", "Decide degeneracy of a valid jet");
  add_file(degen, "jet document");
  auto* factor = app.add_subcommand("factor", "Factor a degenerate jet through a projection");
  add_file(factor, "jet document");
  add_output(factor);
  auto* equiv = app.add_subcommand("equiv", "Find (lambda, l) relating two jets");
  add_file(equiv, "first jet document");
  equiv->add_option("second", o.second_file, "second jet document")->required();
  auto* sphere = app.add_subcommand("sphere", "Lift a nondegenerate jet to a quadratic sphere map");
  add_file(sphere, "jet document");
  add_output(sphere);
  auto* pairing = app.add_subcommand("pairing", "Construct a normed pairing of size [r,n,n]");
  pairing->add_option("r", o.r, "number of x variables")->required()->check(CLI::PositiveNumber);
  pairing->add_option("n", o.n, "dimension of y and of the target")->required()->check(CLI::PositiveNumber);
  pairing->add_flag("--rounding", o.rounding, "Also emit f/<x,x> as a fracquad document");
  add_output(pairing);
  auto* hopf = app.add_subcommand("hopf", "Hopf construction of a pairing document");
  add_file(hopf, "pairing document");
  add_output(hopf);
  auto* tables = app.add_subcommand("tables", "Hurwitz-Radon and Yiu tables");
  auto* rho_opt = tables->add_option("--rho", o.rho_limit, "Print rho(1..N)")->check(CLI::PositiveNumber);
  auto* kappa_opt = tables->add_option("--kappa", o.kappa_value, "Print kappa(M)");
  auto* stiefel_opt = tables->add_option("--stiefel", o.stiefel, "Stiefel-Hopf test for r s n")
                          ->expected(3);
  rho_opt->excludes(kappa_opt)->excludes(stiefel_opt);
  kappa_opt->excludes(stiefel_opt);
  tables->add_flag("--json", o.json, "Print a JSON report instead of text");
  auto* verify = app.add_subcommand("verify", "Numeric line-to-circle oracle");
  add_file(verify, "jet, fracquad or pairing document");
  add_oracle(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitOperational;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  Session session(name, out, err);

  return guarded(session, [&]() -> int {
    if (name == "check") return cmd_check(session, o);
    if (name == "canon") return cmd_canon(session, o);
    if (name == "degen") return cmd_degen(session, o);
    if (name == "factor") return cmd_factor(session, o);
    if (name == "equiv") return cmd_equiv(session, o);
    if (name == "sphere") return cmd_sphere(session, o);
    if (name == "pairing") return cmd_pairing(session, o);
    if (name == "hopf") return cmd_hopf(session, o);
    if (name == "verify") return cmd_verify(session, o);
    return cmd_tables(session, o);
  });
}

}  // namespace rounding_forge::cli
