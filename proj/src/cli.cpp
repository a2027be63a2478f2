#include "jcone/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <variant>

#include "jcone/matrix_file.hpp"
#include "jcone/means.hpp"
#include "jcone/propcheck.hpp"
#include "jcone/random.hpp"

namespace jcone {

using nlohmann::json;

namespace {

struct GlobalFlags {
  std::string signature;
  double tol = 1e-9;
  std::uint64_t seed = 0;
  std::string out;
};

// Payload destination: --out FILE when given, otherwise the command's stdout.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw Error(ErrorKind::kInvalidArgument, "cannot write '" + path + "'");
    stream_ = &file_;
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void write_line(std::ostream& os, const json& j) { os << canonical_dump(j) << '\n'; }

Signature require_signature_flag(const GlobalFlags& g) {
  if (g.signature.empty()) throw Error(ErrorKind::kInvalidArgument, "--signature p,q is required");
  return parse_signature(g.signature);
}

// Reads a file and prefixes any failure with the flag that named it.
AnyMatrix read_input(const std::string& flag, const std::string& path) {
  try {
    return read_matrix_file(path);
  } catch (const Error& e) {
    throw Error(e.kind(), flag + " " + e.detail());
  }
}

template <Scalar T>
JPositive<T> certify(const std::string& flag, const Matrix<T>& m, const Signature& sig,
                     double tol) {
  try {
    detail::require_signature(m, sig);
    return make_j_positive(m, sig, tol);
  } catch (const Error& e) {
    throw Error(e.kind(), flag + ": " + e.detail());
  }
}

template <Scalar T>
void require_j_hermitian(const std::string& flag, const Matrix<T>& m, const Signature& sig) {
  try {
    detail::require_signature(m, sig);
  } catch (const Error& e) {
    throw Error(e.kind(), flag + ": " + e.detail());
  }
  if (!is_j_hermitian(m, sig)) {
    throw Error(ErrorKind::kNotJHermitian, flag + ": X^sharp != X");
  }
}

// Promotes both inputs to their common field and calls f(Matrix<T>, Matrix<T>).
template <typename F>
int visit_pair(AnyMatrix a, AnyMatrix b, F&& f) {
  const Field common = promote(field_of(a), field_of(b));
  a = promote_to(a, common);
  b = promote_to(b, common);
  return std::visit(
      [&](const auto& ma) {
        using M = std::decay_t<decltype(ma)>;
        return f(ma, std::get<M>(b));
      },
      a);
}

struct MeanFlags {
  std::string a, b;
  double t = 0.5;
  bool emit_diff = false;
};

int cmd_mean(const GlobalFlags& g, const MeanFlags& f, std::ostream& out) {
  const Signature sig = require_signature_flag(g);
  return visit_pair(read_input("--a", f.a), read_input("--b", f.b),
                    [&](const auto& ma, const auto& mb) {
    const auto a = certify("--a", ma, sig, g.tol);
    const auto b = certify("--b", mb, sig, g.tol);
    const auto result = weighted_mean(a, b, f.t);
    Output dest(g.out, out);
    write_line(*dest, encode_matrix(result.mean.matrix()));
    json report{{"t", f.t}};
    report["riccati_residual"] =
        result.riccati_residual ? json(*result.riccati_residual) : json(nullptr);
    if (f.emit_diff) {
      // Deviation from the naive product of J-powers A^{1-t}_J B^t_J.
      const auto naive = pow_j(a, 1.0 - f.t).matrix() * pow_j(b, f.t).matrix();
      report["diff"] = encode_matrix(result.mean.matrix() - naive);
    }
    write_line(out, report);
    return kExitOk;
  });
}

struct GeodesicFlags {
  std::string a, b;
  long samples = 0;
};

int cmd_geodesic(const GlobalFlags& g, const GeodesicFlags& f, std::ostream& out) {
  const Signature sig = require_signature_flag(g);
  if (f.samples < 2) throw Error(ErrorKind::kInvalidArgument, "--samples must be >= 2");
  return visit_pair(read_input("--a", f.a), read_input("--b", f.b),
                    [&](const auto& ma, const auto& mb) {
    const auto a = certify("--a", ma, sig, g.tol);
    const auto b = certify("--b", mb, sig, g.tol);
    using T = typename std::decay_t<decltype(ma)>::value_type;
    const GeodesicPath<T> path(a, b);
    json samples = json::array();
    const long k = f.samples;
    for (long i = 0; i < k; ++i) {
      // Exact endpoints rather than 1 - (k-1)/(k-1) round-off.
      const double t = i == k - 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(k - 1);
      samples.push_back(encode_matrix(path.sample(t).matrix()));
    }
    Output dest(g.out, out);
    write_line(*dest, samples);
    return kExitOk;
  });
}

struct PowFlags {
  std::string x;
  double t = 0.0;
};

int cmd_pow(const GlobalFlags& g, const PowFlags& f, std::ostream& out) {
  const Signature sig = require_signature_flag(g);
  return std::visit(
      [&](const auto& mx) {
        const auto x = certify("--x", mx, sig, g.tol);
        Output dest(g.out, out);
        write_line(*dest, encode_matrix(pow_j(x, f.t).matrix()));
        return static_cast<int>(kExitOk);
      },
      read_input("--x", f.x));
}

struct PairFlags {
  std::string first, second;
};

int cmd_order(const GlobalFlags& g, const PairFlags& f, std::ostream& out) {
  const Signature sig = require_signature_flag(g);
  return visit_pair(read_input("--x", f.first), read_input("--y", f.second),
                    [&](const auto& x, const auto& y) {
    require_j_hermitian("--x", x, sig);
    require_j_hermitian("--y", y, sig);
    const OrderVerdict v = j_leq(x, y, sig, g.tol);
    Output dest(g.out, out);
    write_line(*dest, json{{"holds", v.holds}, {"margin", v.margin}});
    return v.holds ? kExitOk : kExitViolation;
  });
}

int cmd_riccati(const GlobalFlags& g, const PairFlags& f, std::ostream& out) {
  const Signature sig = require_signature_flag(g);
  return visit_pair(read_input("--a", f.first), read_input("--b", f.second),
                    [&](const auto& ma, const auto& mb) {
    const auto a = certify("--a", ma, sig, g.tol);
    const auto b = certify("--b", mb, sig, g.tol);
    const auto x = riccati_solve(a, b);
    const double residual = riccati_residual(x.matrix(), a, b);
    Output dest(g.out, out);
    write_line(*dest, json{{"residual", residual}, {"solution", encode_matrix(x.matrix())}});
    return residual <= g.tol * tol_scale(b.matrix()) ? kExitOk : kExitViolation;
  });
}

struct RandFlags {
  long dim = 0;
  std::string field = "R";
};

int cmd_rand(const GlobalFlags& g, const RandFlags& f, std::ostream& out) {
  const Signature sig = require_signature_flag(g);
  if (f.dim != static_cast<long>(sig.n())) {
    throw Error(ErrorKind::kDimensionMismatch, "--dim " + std::to_string(f.dim) +
                                                   " but signature " + to_string(sig) +
                                                   " needs " + std::to_string(sig.n()));
  }
  AnyMatrix m;
  switch (parse_field(f.field)) {
    case Field::kReal: m = random_pj<double>(sig, g.seed, kSuiteMaxCondition).matrix(); break;
    case Field::kComplex: m = random_pj<Complex>(sig, g.seed, kSuiteMaxCondition).matrix(); break;
    case Field::kQuaternion:
      m = random_pj<Quaternion>(sig, g.seed, kSuiteMaxCondition).matrix();
      break;
  }
  Output dest(g.out, out);
  *dest << serialize_matrix(m) << '\n';
  return kExitOk;
}

struct CheckFlags {
  std::string suite = "all";
  long dim = 0;
  std::string field = "R";
  long trials = 200;
};

int cmd_check(const GlobalFlags& g, const CheckFlags& f, std::ostream& out) {
  SuiteConfig config;
  config.suite_id = f.suite;
  config.signature = g.signature.empty() ? Signature{1, 1} : parse_signature(g.signature);
  config.dim = f.dim > 0 ? static_cast<Index>(f.dim) : config.signature.n();
  config.field = parse_field(f.field);
  if (f.trials < 0) throw Error(ErrorKind::kInvalidArgument, "--trials must be >= 0");
  config.trials = static_cast<std::uint64_t>(f.trials);
  config.seed = g.seed;
  config.tol = g.tol;
  Output dest(g.out, out);
  const auto reports = run_suite(config, [&dest](const PropertyReport& r) {
    *dest << to_json_line(r) << '\n' << std::flush;
  });
  return all_passed(reports) ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric means and order inequalities on the J-positive cone"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--signature", g.signature, "Signature p,q of J = diag(Id_p, -Id_q)");
  app.add_option("--tol", g.tol, "Tolerance for membership and order tests")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for all randomness");
  app.add_option("--out", g.out, "Output file (default: standard output)");

  MeanFlags mean;
  auto* mean_cmd = app.add_subcommand("mean", "Weighted J-geometric mean A #_t B");
  mean_cmd->add_option("--a", mean.a)->required();
  mean_cmd->add_option("--b", mean.b)->required();
  mean_cmd->add_option("-t", mean.t, "Weight in [0, 1]");
  mean_cmd->add_flag("--emit-diff", mean.emit_diff,
                     "Also report mean - A^{1-t}_J B^t_J");

  GeodesicFlags geo;
  auto* geo_cmd = app.add_subcommand("geodesic", "Equally spaced samples of the geodesic A -> B");
  geo_cmd->add_option("--a", geo.a)->required();
  geo_cmd->add_option("--b", geo.b)->required();
  geo_cmd->add_option("--samples", geo.samples)->required();

  PowFlags pw;
  auto* pow_cmd = app.add_subcommand("pow", "J-power X^t_J = J (JX)^t");
  pow_cmd->add_option("--x", pw.x)->required();
  pow_cmd->add_option("-t", pw.t)->required();

  PairFlags ord;
  auto* order_cmd = app.add_subcommand("order", "Decide X <=_J Y");
  order_cmd->add_option("--x", ord.first)->required();
  order_cmd->add_option("--y", ord.second)->required();

  PairFlags ric;
  auto* riccati_cmd = app.add_subcommand("riccati", "Solve X A^-1 X = B on the cone");
  riccati_cmd->add_option("--a", ric.first)->required();
  riccati_cmd->add_option("--b", ric.second)->required();

  RandFlags rnd;
  auto* rand_cmd = app.add_subcommand("rand", "Random J-positive matrix");
  rand_cmd->add_option("--dim", rnd.dim)->required();
  rand_cmd->add_option("--field", rnd.field)->check(CLI::IsMember({"R", "C", "H"}));

  CheckFlags chk;
  auto* check_cmd = app.add_subcommand("check", "Run property suites");
  check_cmd->add_option("--suite", chk.suite);
  check_cmd->add_option("--dim", chk.dim);
  check_cmd->add_option("--field", chk.field)->check(CLI::IsMember({"R", "C", "H"}));
  check_cmd->add_option("--trials", chk.trials);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (mean_cmd->parsed()) return cmd_mean(g, mean, out);
    if (geo_cmd->parsed()) return cmd_geodesic(g, geo, out);
    if (pow_cmd->parsed()) return cmd_pow(g, pw, out);
    if (order_cmd->parsed()) return cmd_order(g, ord, out);
    if (riccati_cmd->parsed()) return cmd_riccati(g, ric, out);
    if (rand_cmd->parsed()) return cmd_rand(g, rnd, out);
    if (check_cmd->parsed()) return cmd_check(g, chk, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace jcone
