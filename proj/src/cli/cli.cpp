// Copyright 2026 The abeljacobi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "abeljacobi/cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abeljacobi/analytic/inversion.hpp"
#include "abeljacobi/errors.hpp"
#include "abeljacobi/modforms/meta.hpp"
#include "abeljacobi/modforms/squares.hpp"
#include "abeljacobi/modforms/tau.hpp"
#include "abeljacobi/torsion/torsion.hpp"

namespace abeljacobi::cli {

namespace {

using json = nlohmann::ordered_json;
using analytic::PeriodLattice;
using curve::CurvePoint;
using curve::WeierstrassCurve;
using numerics::Complex;
using numerics::Integer;
using numerics::PrecisionContext;
using numerics::Rational;
using numerics::Real;

struct Options {
  std::optional<int> bits;
  std::string curve;
  std::string point;
  std::string alpha;
  std::string method;
  std::string eps;
  int steps = analytic::kContinuationStages;
  std::string seed0;
  std::string seed1;
  int iterations = 60;
  long ell = 0;
  int threads = 0;
  std::string n;
  std::string factorization;
  unsigned long p = 0;
  std::string residues;
  unsigned d = 0;
};

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Integer parse_integer(const std::string& text) {
  Integer z;
  if (text.empty() || z.set_str(text, 10) != 0) throw ParseError("not an integer: '" + text + "'");
  return z;
}

int resolve_bits(const Options& opts) {
  int bits = kDefaultBits;
  if (opts.bits) {
    bits = *opts.bits;
  } else if (const char* env = std::getenv("ABELJACOBI_BITS"); env != nullptr && *env != '\0') {
    const Integer z = parse_integer(env);
    if (!z.fits_sint_p()) throw InvalidArgument("ABELJACOBI_BITS out of range");
    bits = static_cast<int>(z.get_si());
  }
  if (bits < PrecisionContext::kMinBits) {
    throw InvalidArgument("precision must be at least " + std::to_string(PrecisionContext::kMinBits) + " bits");
  }
  return bits;
}

json complex_json(const Complex& z, int digits) {
  return json{{"re", z.real().to_string(digits)}, {"im", z.imag().to_string(digits)}};
}

json point_json(const CurvePoint& P, int digits) {
  if (P.is_infinity()) return "infinity";
  if (P.is_exact()) {
    return json{{"x", numerics::to_string(P.exact().x)}, {"y", numerics::to_string(P.exact().y)}};
  }
  return json{{"x", complex_json(P.complex().x, digits)}, {"y", complex_json(P.complex().y, digits)}};
}

json coefficients_json(const numerics::RationalPolynomial& poly) {
  json list = json::array();
  for (const auto& c : poly.coeffs()) list.push_back(numerics::to_string(c));
  return list;
}

// "x,y" with rational or complex coordinates.
CurvePoint parse_point(const WeierstrassCurve& E, const std::string& text, PrecisionContext ctx) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ParseError("a point is written x,y");
  CurvePoint P;
  try {
    P = CurvePoint(numerics::parse_rational(parts[0]), numerics::parse_rational(parts[1]));
  } catch (const ParseError&) {
    P = CurvePoint(Complex::parse(parts[0], ctx), Complex::parse(parts[1], ctx));
  }
  if (!curve::is_on_curve(E, P)) throw InvalidArgument("point is not on the curve");
  return P;
}

CurvePoint closest_ordinate(const WeierstrassCurve& E, const Complex& x, const Complex& y_hint) {
  std::vector<Complex> ys = curve::ordinates_from_x(E, x);
  const bool second = abs(ys[1] - y_hint) < abs(ys[0] - y_hint);
  return CurvePoint(x, std::move(ys[second ? 1 : 0]));
}

// "x" (ordinate of least modulus) or "x,y" (ordinate nearest y).
CurvePoint parse_seed(const WeierstrassCurve& E, const std::string& text, PrecisionContext ctx) {
  const auto parts = split(text, ',');
  if (parts.empty() || parts.size() > 2) throw ParseError("a seed is written x or x,y");
  const Complex x = Complex::parse(parts[0], ctx);
  return closest_ordinate(E, x, parts.size() == 2 ? Complex::parse(parts[1], ctx) : Complex(ctx));
}

Complex parse_alpha(const std::string& text, PrecisionContext ctx) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ParseError("alpha is written re,im");
  return Complex(Real::parse(parts[0], ctx), Real::parse(parts[1], ctx));
}

std::vector<numerics::Residue> parse_residues(const std::string& text) {
  std::vector<numerics::Residue> out;
  for (const auto& item : split(text, ',')) {
    const auto rm = split(item, ':');
    if (rm.size() != 2) throw ParseError("a residue is written r:m");
    out.push_back({parse_integer(rm[0]), parse_integer(rm[1])});
  }
  return out;
}

modforms::Factorization parse_factorization(const std::string& text) {
  modforms::Factorization out;
  for (const auto& item : split(text, ',')) {
    const auto pe = split(item, '^');
    if (pe.size() > 2) throw ParseError("a prime power is written p^e");
    const Integer e = pe.size() == 2 ? parse_integer(pe[1]) : Integer(1);
    if (!e.fits_ulong_p()) throw BadFactorization("exponent out of range: " + item);
    out.push_back({parse_integer(pe[0]), e.get_ui()});
  }
  return out;
}

class Runner {
 public:
  Runner(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  const std::string& stage() const { return stage_; }

  void periods() {
    const PrecisionContext ctx(resolve_bits(opts_));
    const WeierstrassCurve E = load_curve();
    stage_ = "periods";
    const PeriodLattice L = analytic::periods(E, ctx);
    const int digits = numerics::decimal_digits_for_bits(ctx.bits());
    emit(json{{"bits", ctx.bits()},
              {"omega1", complex_json(L.omega1(), digits)},
              {"omega2", complex_json(L.omega2(), digits)}});
  }

  void log() {
    const PrecisionContext ctx(resolve_bits(opts_));
    const WeierstrassCurve E = load_curve();
    const CurvePoint P = parse_point(E, opts_.point, ctx);
    stage_ = "periods";
    const PeriodLattice L = analytic::periods(E, ctx);
    stage_ = "elliptic_log";
    const analytic::LatticeResidue r = analytic::elliptic_log(E, L, P);
    const int digits = numerics::decimal_digits_for_bits(ctx.bits());
    emit(json{{"bits", ctx.bits()},
              {"residue", complex_json(r.value, digits)},
              {"coordinates", {{"u", r.u.to_string(digits)}, {"v", r.v.to_string(digits)}}}});
  }

  void invert() {
    const PrecisionContext ctx(resolve_bits(opts_));
    const WeierstrassCurve E = load_curve();
    const Complex alpha = parse_alpha(opts_.alpha, ctx);
    std::optional<Real> eps;
    if (!opts_.eps.empty()) eps = Real::parse(opts_.eps, ctx);
    stage_ = "periods";
    const PeriodLattice L = analytic::periods(E, ctx);
    const int digits = numerics::decimal_digits_for_bits(ctx.bits());
    stage_ = "inversion";
    json result{{"bits", ctx.bits()}, {"method", opts_.method}};
    CurvePoint P;
    if (opts_.method == "secant") {
      P = secant(E, L, alpha, ctx);
    } else if (opts_.method == "continuation") {
      P = analytic::invert_continuation(E, L, alpha, opts_.steps);
    } else {
      const analytic::LinearAlgebraInversion la = analytic::invert_linear_algebra(E, L, alpha, eps);
      P = la.point;
      result["coordinates"] = json::array({la.c1.to_string(digits), la.c2.to_string(digits)});
      result["truncated"] = json::array({numerics::to_string(la.n1), numerics::to_string(la.n2)});
    }
    result["point"] = point_json(P, digits);
    result["accuracy"] = analytic::direct_accuracy(E, L, P, alpha).to_string(6);
    emit(result);
  }

  void torsionpoly() {
    const WeierstrassCurve E = load_curve();
    json result{{"ell", opts_.ell}, {"method", opts_.method}};
    std::optional<numerics::RationalPolynomial> analytic_poly;
    std::optional<numerics::RationalPolynomial> algebraic_poly;
    if (opts_.method != "algebraic") {
      const PrecisionContext ctx(resolve_bits(opts_));
      stage_ = "torsion";
      torsion::TorsionOptions options;
      options.threads = opts_.threads;
      options.parallel = opts_.threads != 1;
      torsion::AnalyticTorsionResult r = torsion::torsion_poly_analytic(E, opts_.ell, ctx, options);
      Complex sum(PrecisionContext(r.bits));
      for (const auto& x : r.x_values) sum += x;
      result["bits"] = r.bits;
      result["x_sum"] = complex_json(sum, numerics::decimal_digits_for_bits(r.bits));
      analytic_poly = std::move(r.poly);
    }
    if (opts_.method != "analytic") {
      stage_ = "division_polynomial";
      algebraic_poly = curve::torsion_annihilator_exact(E, opts_.ell);
    }
    const auto& poly = analytic_poly ? *analytic_poly : *algebraic_poly;
    result["degree"] = poly.degree();
    if (opts_.method == "both") {
      result["analytic"] = coefficients_json(*analytic_poly);
      result["algebraic"] = coefficients_json(*algebraic_poly);
      result["equal"] = *analytic_poly == *algebraic_poly;
    } else {
      result["coefficients"] = coefficients_json(poly);
    }
    emit(result);
  }

  void tau() {
    stage_ = "input";
    const Integer n = parse_integer(opts_.n);
    modforms::Factorization f;
    if (!opts_.factorization.empty()) {
      f = parse_factorization(opts_.factorization);
    } else {
      if (n < 1 || !n.fits_ulong_p()) throw InvalidArgument("n must be a positive machine integer");
      f = modforms::factorize(n.get_ui());
    }
    stage_ = "tau";
    emit(json{{"n", numerics::to_string(n)}, {"tau", numerics::to_string(modforms::tau_at(n, f))}});
  }

  void tau_crt() {
    stage_ = "input";
    const auto residues = parse_residues(opts_.residues);
    stage_ = "crt";
    const Integer t = modforms::tau_crt_recover(opts_.p, residues);
    emit(json{{"p", std::to_string(opts_.p)}, {"tau", numerics::to_string(t)}});
  }

  void rsquares() {
    stage_ = "input";
    const Integer n = parse_integer(opts_.n);
    if (n < 0 || !n.fits_ulong_p()) throw InvalidArgument("n must be a non-negative machine integer");
    const unsigned long nn = n.get_ui();
    stage_ = "rsquares";
    json result{{"d", opts_.d}, {"n", numerics::to_string(n)}};
    std::vector<Integer> values;
    const bool all = opts_.method == "all";
    if (all || opts_.method == "formula") {
      values.push_back(modforms::rd_formula(opts_.d, n));
      result["formula"] = numerics::to_string(values.back());
    }
    if (all || opts_.method == "series") {
      values.push_back(modforms::theta_power(opts_.d, nn)[nn]);
      result["series"] = numerics::to_string(values.back());
    }
    if (all || opts_.method == "bruteforce") {
      values.push_back(modforms::rd_brute_force(opts_.d, nn));
      result["bruteforce"] = numerics::to_string(values.back());
    }
    if (all) {
      result["agree"] = std::all_of(values.begin(), values.end(), [&](const Integer& v) { return v == values[0]; });
    }
    emit(result);
  }

  void meta() {
    stage_ = "meta";
    const modforms::ModularCurveMeta m = modforms::modular_curve_meta(opts_.ell);
    emit(json{{"index", m.index}, {"cusps", m.cusps}, {"genus", m.genus}});
  }

 private:
  WeierstrassCurve load_curve() {
    stage_ = "curve";
    return WeierstrassCurve::parse(opts_.curve);
  }

  // Explicit seeds when given; otherwise a coarse linear-algebra point and a
  // perturbation of it, as for torsion points.
  CurvePoint secant(const WeierstrassCurve& E, const PeriodLattice& L, const Complex& alpha, PrecisionContext ctx) {
    if (!opts_.seed0.empty() || !opts_.seed1.empty()) {
      if (opts_.seed0.empty() || opts_.seed1.empty()) throw InvalidArgument("give both --seed0 and --seed1");
      return analytic::invert_secant(E, L, alpha, parse_seed(E, opts_.seed0, ctx), parse_seed(E, opts_.seed1, ctx),
                                     opts_.iterations);
    }
    const Real eps = Real::pow2(-ctx.bits() / 4, ctx);
    CurvePoint seed = analytic::invert_linear_algebra(E, L, alpha, eps).point;
    if (seed.is_infinity()) seed = analytic::base_point(E, ctx).to_complex(ctx);
    const Complex& x = seed.complex().x;
    const CurvePoint near = closest_ordinate(E, x + Complex(eps, Real(ctx)), seed.complex().y);
    return analytic::invert_secant(E, L, alpha, near, seed, opts_.iterations);
  }

  void emit(const json& j) { out_ << j.dump() << '\n'; }

  const Options& opts_;
  std::ostream& out_;
  std::string stage_ = "input";
};

json error_json(const std::string& kind, const std::string& stage, const std::string& message) {
  return json{{"error", kind}, {"stage", stage}, {"message", message}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Period lattices, Abel-Jacobi inversion, torsion polynomials and modular-form coefficients.",
               "abeljacobi"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand and exit");
  app.fallthrough();
  app.add_option("--bits", opts.bits,
                 "Working precision in bits (default: $ABELJACOBI_BITS, else " + std::to_string(kDefaultBits) + ")");

  const std::string curve_help = "Curve coefficients a1,a2,a3,a4,a6";
  auto* periods = app.add_subcommand("periods", "Period lattice basis (omega1, omega2)");
  periods->add_option("--curve", opts.curve, curve_help)->required();

  auto* log = app.add_subcommand("log", "Elliptic logarithm of a point, reduced mod the lattice");
  log->add_option("--curve", opts.curve, curve_help)->required();
  log->add_option("--point", opts.point, "Point x,y (rational or complex coordinates)")->required();

  auto* invert = app.add_subcommand("invert", "Point whose elliptic logarithm is alpha");
  invert->add_option("--curve", opts.curve, curve_help)->required();
  invert->add_option("--alpha", opts.alpha, "Target re,im")->required();
  invert->add_option("--method", opts.method, "secant, continuation or linalg")
      ->required()
      ->check(CLI::IsMember({"secant", "continuation", "linalg"}));
  invert->add_option("--eps", opts.eps, "Perturbation for linalg (default 2^(-bits/2))");
  invert->add_option("--steps", opts.steps, "Continuation stages")->capture_default_str()->check(CLI::PositiveNumber);
  invert->add_option("--seed0", opts.seed0, "First secant seed x or x,y");
  invert->add_option("--seed1", opts.seed1, "Second secant seed x or x,y");
  invert->add_option("--iterations", opts.iterations, "Secant update budget")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  auto* torsionpoly = app.add_subcommand("torsionpoly", "Exact polynomial of ell-torsion x-coordinates");
  torsionpoly->add_option("--curve", opts.curve, curve_help)->required();
  torsionpoly->add_option("--ell", opts.ell, "Odd prime ell")->required();
  torsionpoly->add_option("--method", opts.method, "analytic, algebraic or both")
      ->required()
      ->check(CLI::IsMember({"analytic", "algebraic", "both"}));
  torsionpoly->add_option("--threads", opts.threads, "Inversion threads (0: runtime default, 1: serial)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);

  auto* tau = app.add_subcommand("tau", "Ramanujan tau(n)");
  tau->add_option("--n", opts.n, "Positive integer n")->required();
  tau->add_option("--factorization", opts.factorization, "Prime factorization p1^e1,p2^e2,...");

  auto* tau_crt = app.add_subcommand("tau-crt", "tau(p) from residues modulo small primes");
  tau_crt->add_option("--p", opts.p, "Prime p")->required();
  tau_crt->add_option("--residues", opts.residues, "Residues r1:m1,r2:m2,...")->required();

  auto* rsquares = app.add_subcommand("rsquares", "Representations of n as a sum of d squares");
  rsquares->add_option("--d", opts.d, "Number of squares")->required();
  rsquares->add_option("--n", opts.n, "Non-negative integer n")->required();
  rsquares->add_option("--method", opts.method, "formula, series, bruteforce or all")
      ->required()
      ->check(CLI::IsMember({"formula", "series", "bruteforce", "all"}));

  auto* meta = app.add_subcommand("meta", "Index, cusp count and genus of the level-ell modular curve");
  meta->add_option("--ell", opts.ell, "Level ell >= 5")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << "Run with --help for usage.\n";
    return kExitUsage;
  }

  Runner runner(opts, out);
  try {
    if (periods->parsed()) runner.periods();
    if (log->parsed()) runner.log();
    if (invert->parsed()) runner.invert();
    if (torsionpoly->parsed()) runner.torsionpoly();
    if (tau->parsed()) runner.tau();
    if (tau_crt->parsed()) runner.tau_crt();
    if (rsquares->parsed()) runner.rsquares();
    if (meta->parsed()) runner.meta();
  } catch (const NumericalFailure& e) {
    out << error_json(e.kind(), runner.stage(), e.what()).dump() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    out << error_json(e.kind(), runner.stage(), e.what()).dump() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace abeljacobi::cli
