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

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "abeljacobi/analytic/inversion.hpp"
#include "abeljacobi/errors.hpp"
#include "abeljacobi/modforms/meta.hpp"
#include "abeljacobi/modforms/squares.hpp"
#include "abeljacobi/modforms/tau.hpp"
#include "abeljacobi/numerics/continued_fraction.hpp"
#include "abeljacobi/numerics/crt.hpp"
#include "abeljacobi/numerics/fast_exp.hpp"
#include "abeljacobi/torsion/torsion.hpp"

using namespace abeljacobi;
using analytic::PeriodLattice;
using curve::CurvePoint;
using curve::WeierstrassCurve;
using numerics::Complex;
using numerics::Integer;
using numerics::PrecisionContext;
using numerics::Rational;
using numerics::Real;

namespace {

constexpr const char* kPeriodTolerance = "1e-25";
constexpr const char* kLogTolerance = "1e-25";
constexpr const char* kInversionTolerance = "1e-24";
constexpr const char* kLinalgEps = "1e-4";
constexpr const char* kLinalgAccuracy = "1e-3";
constexpr const char* kTorsionSumTolerance = "1e-25";
constexpr const char* kDirichletGap = "1e-6";
constexpr long kHomomorphismAllowance = 1000;
constexpr int kTorsionBits = 768;

constexpr double kBudgetPeriods = 1.0;
constexpr double kBudgetLog = 10.0;
constexpr double kBudgetInversion = 30.0;
constexpr double kBudgetTorsion = 600.0;
constexpr double kBudgetFixtures = 10.0;
constexpr double kBudgetProperties = 60.0;
constexpr double kBudgetModforms = 120.0;
constexpr double kBudgetMeta = 10.0;

const WeierstrassCurve& x11() {
  static const WeierstrassCurve E = WeierstrassCurve::parse("0,-1,-1,0,0");
  return E;
}

Real num(const char* text, PrecisionContext ctx) { return Real::parse(text, ctx); }

Complex cnum(const char* text, PrecisionContext ctx) { return Complex::parse(text, ctx); }

// Collects failed sub-checks of one criterion.
class Report {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void check_close(const Complex& got, const Complex& want, const Real& tol, const std::string& what) {
    const Real err = abs(got - want);
    if (!(err <= tol)) failures_.push_back(what + " error " + err.to_string(3));
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool ok() const { return failures_.empty(); }
  std::string detail() const {
    std::ostringstream s;
    const auto& items = failures_.empty() ? notes_ : failures_;
    for (std::size_t k = 0; k < items.size(); ++k) s << (k ? "; " : "") << items[k];
    return s.str();
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

CurvePoint with_ordinate_near(const Complex& x, const Complex& y_hint) {
  auto ys = curve::ordinates_from_x(x11(), x);
  return CurvePoint(x, abs(ys[0] - y_hint) <= abs(ys[1] - y_hint) ? ys[0] : ys[1]);
}

Real frac_distance(const Real& u) { return abs(u - Real(u.round_to_integer(), u.context())); }

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Integer pow_ui(unsigned long base, unsigned long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

void periods_fixture(Report& r) {
  const PrecisionContext ctx(128);
  const PeriodLattice L = analytic::periods(x11(), ctx);
  const Real tol = num(kPeriodTolerance, ctx);
  r.check_close(L.omega1(), cnum("6.346046521397767108443973084", ctx), tol, "omega1");
  r.check_close(L.omega2(), cnum("-3.173023260698883554221986542+1.458816616938495229330889613i", ctx), tol,
                "omega2");
}

void log_fixture(Report& r) {
  const PrecisionContext ctx(128);
  const PeriodLattice L = analytic::periods(x11(), ctx);
  const Real tol = num(kLogTolerance, ctx);
  const Complex z = analytic::elliptic_log(x11(), L, CurvePoint(Rational(0), Rational(0))).value;
  r.check(L.distance(z - cnum("2.538418608559106843377589234", ctx)) <= tol, "log(0,0)");
  r.check(L.distance(z - L.omega1() * 2L / 5L) <= tol, "residue from 2 omega1 / 5");
}

void inversion_fixture(Report& r) {
  const PrecisionContext ctx(128);
  const PeriodLattice L = analytic::periods(x11(), ctx);
  const Complex alpha = (L.omega1() + L.omega2()) / 11L;
  const Real tol = num(kInversionTolerance, ctx);
  const Complex x_ref = cnum("6.796539142094915911068237206-7.525908029899464321854796862i", ctx);
  const Complex y_ref = cnum("-8.056577776742775028742861296+30.05694612451787404370259256i", ctx);

  auto timed = [&](const char* name, const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.check(secs < 10.0, std::string(name) + " over 10 s");
  };

  timed("secant", [&] {
    const CurvePoint P0 = with_ordinate_near(cnum("50-50i", ctx), cnum("-223.147+547.739i", ctx));
    const CurvePoint P1 = with_ordinate_near(cnum("20-20i", ctx), cnum("-54.587+137.965i", ctx));
    const CurvePoint P = analytic::invert_secant(x11(), L, alpha, P0, P1, 18, num("1e-26", ctx));
    r.check_close(P.complex().x, x_ref, tol, "secant x");
  });
  timed("continuation", [&] {
    const CurvePoint P = analytic::invert_continuation(x11(), L, alpha, 10);
    r.check_close(P.complex().x, x_ref, tol, "continuation x");
    r.check_close(P.complex().y, y_ref, tol, "continuation y");
  });
  timed("linalg", [&] {
    const auto la = analytic::invert_linear_algebra(x11(), L, alpha, num(kLinalgEps, ctx));
    r.check(la.n1 == -2884 && la.n2 == -1326, "linalg truncations " + la.n1.get_str() + ", " + la.n2.get_str());
    const Real accuracy = analytic::direct_accuracy(x11(), L, la.point, alpha);
    r.check(accuracy <= num(kLinalgAccuracy, ctx), "linalg accuracy " + accuracy.to_string(3));
    r.note("linalg accuracy " + accuracy.to_string(3));
  });
}

void torsion_fixture(Report& r) {
  const PrecisionContext ctx(kTorsionBits);
  torsion::TorsionOptions options;
  const auto result = torsion::torsion_poly_analytic(x11(), 11, ctx, options);
  r.check(torsion::verify_against_algebraic(x11(), 11, result.poly), "analytic != algebraic");
  const auto& c = result.poly.coeffs();
  r.check(c.size() == 61, "degree");
  if (c.size() != 61) return;
  r.check(c[59] == -20 && c[58] == 112 && c[57] == 1855, "T^59..T^57");
  r.check(c[4] == 1321 && c[3] == -181 && c[2] == 22 && c[1] == -2 && c[0] == Rational(1, 11), "tail");
  Complex sum(ctx);
  for (const auto& x : result.x_values) sum += x;
  const Real err = abs(sum - 20L);
  r.check(err <= num(kTorsionSumTolerance, ctx), "x-sum error " + err.to_string(3));
  r.note("x-sum error " + err.to_string(3) + " at " + std::to_string(result.bits) + " bits");
}

void chord_tangent_fixture(Report& r) {
  const CurvePoint P(Rational(0), Rational(0));
  r.check(curve::mul_scalar(x11(), P, 2) == CurvePoint(Rational(1), Rational(1)), "2P");
  r.check(curve::mul_scalar(x11(), P, 3) == CurvePoint(Rational(1), Rational(0)), "3P");
  r.check(curve::mul_scalar(x11(), P, 5).is_infinity(), "5P");
}

void property_suite(Report& r) {
  std::mt19937_64 rng(2024);
  {
    const PrecisionContext ctx(128);
    const PeriodLattice L = analytic::periods(x11(), ctx);
    const Real allowance = Real::tolerance(ctx) * kHomomorphismAllowance;
    std::uniform_real_distribution<double> coord(-2.5, 2.5);
    auto random_point = [&] {
      const Complex x(Real::from_double(coord(rng), ctx), Real::from_double(coord(rng), ctx));
      return CurvePoint(x, curve::ordinates_from_x(x11(), x)[rng() % 2]);
    };
    Real worst(ctx);
    for (int k = 0; k < 100; ++k) {
      const CurvePoint P = random_point();
      const CurvePoint Q = random_point();
      const CurvePoint S = curve::add(x11(), P, Q);
      const Complex lhs = S.is_infinity() ? Complex(ctx) : analytic::elliptic_log_value(x11(), L, S);
      const auto c = L.coordinates(lhs - analytic::elliptic_log_value(x11(), L, P) -
                                   analytic::elliptic_log_value(x11(), L, Q));
      worst = max(worst, max(frac_distance(c.u), frac_distance(c.v)));
    }
    r.check(worst <= allowance, "homomorphism defect " + worst.to_string(3));
  }
  {
    std::uniform_int_distribution<long> numer(-1000000, 1000000);
    std::uniform_int_distribution<long> denom(1, 1000000);
    int bad = 0;
    for (int k = 0; k < 1000; ++k) {
      Rational x(numer(rng), denom(rng));
      x.canonicalize();
      const Integer num_abs = abs(x.get_num());
      const Integer h = num_abs > x.get_den() ? num_abs : Integer(x.get_den());
      const Rational y = x + Rational(Integer(1), 4 * h * h);
      if (numerics::rational_reconstruct(y, h) != x) ++bad;
    }
    r.check(bad == 0, std::to_string(bad) + " rational_reconstruct misses");
  }
  {
    const std::vector<Integer> moduli{1009, 1013, 1019, 1021};
    Integer prod = 1;
    for (const auto& m : moduli) prod *= m;
    const Integer B = (prod - 1) / 2;
    std::uniform_int_distribution<long> dist(-B.get_si(), B.get_si());
    int bad = 0;
    for (int k = 0; k < 1000; ++k) {
      const Integer x = dist(rng);
      std::vector<numerics::Residue> residues;
      for (const auto& m : moduli) {
        Integer res;
        mpz_fdiv_r(res.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        residues.push_back({res, m});
      }
      if (numerics::crt_reconstruct_signed(residues, B) != x) ++bad;
    }
    r.check(bad == 0, std::to_string(bad) + " crt_reconstruct_signed misses");
  }
  {
    const Integer m("1000000007");
    auto mul = [&](const Integer& a, const Integer& b) { return Integer((a * b) % m); };
    int bad = 0;
    for (unsigned long g = 2; g < 12; ++g) {
      Integer iterated = 1;
      for (unsigned long e = 0; e <= 64; ++e) {
        if (numerics::fast_exp(Integer(g), e, mul, Integer(1)) != iterated) ++bad;
        iterated = mul(iterated, Integer(g));
      }
    }
    r.check(bad == 0, std::to_string(bad) + " fast_exp mismatches");
  }
}

void modforms_suite(Report& r) {
  using namespace modforms;
  int mismatches = 0;
  for (unsigned d = 2; d <= 12; d += 2) {
    const IntegerSeries theta = theta_power(d, 200);
    for (unsigned long n = 1; n <= 200; ++n) {
      const Integer f = rd_formula(d, Integer(n));
      if (f != theta[n] || f != rd_brute_force(d, n)) ++mismatches;
    }
  }
  r.check(mismatches == 0, std::to_string(mismatches) + " r_d mismatches");

  const IntegerSeries t = eta_product_tau(1000);
  int tau_bad = 0;
  for (unsigned long m = 2; m <= 1000; ++m) {
    for (unsigned long n = 2; m * n <= 1000; ++n) {
      if (std::gcd(m, n) == 1 && t[m * n] != t[m] * t[n]) ++tau_bad;
    }
  }
  for (unsigned long p = 2; p * p <= 1000; ++p) {
    if (!is_prime(p)) continue;
    const Integer p11 = pow_ui(p, 11);
    for (unsigned long q = p * p, prev = p, prev2 = 1; q <= 1000; prev2 = prev, prev = q, q *= p) {
      if (t[q] != t[p] * t[prev] - p11 * t[prev2]) ++tau_bad;
    }
  }
  r.check(tau_bad == 0, std::to_string(tau_bad) + " tau relation failures");

  int deligne_bad = 0;
  for (unsigned long p = 2; p <= 1000; ++p) {
    if (is_prime(p) && !deligne_check(p, t[p])) ++deligne_bad;
  }
  r.check(deligne_bad == 0, std::to_string(deligne_bad) + " Deligne failures");

  const PrecisionContext ctx(128);
  const auto [lhs, rhs] = dirichlet_euler_check(Real(8, ctx), 200);
  const Real gap = abs(lhs - rhs);
  r.check(gap < num(kDirichletGap, ctx), "dirichlet(8, 200) gap " + gap.to_string(4) + " >= " + kDirichletGap);
  r.note("dirichlet(8, 200) gap " + gap.to_string(4));

  int crt_bad = 0;
  for (unsigned long p = 2; p <= 97; ++p) {
    if (!is_prime(p)) continue;
    const Integer bound = 16 * pow_ui(p, 11);
    std::vector<numerics::Residue> residues;
    Integer product = 1;
    for (unsigned long m = 2; product * product <= bound; ++m) {
      if (!is_prime(m) || m == p) continue;
      Integer res;
      mpz_fdiv_r_ui(res.get_mpz_t(), t[p].get_mpz_t(), m);
      residues.push_back({res, Integer(m)});
      product *= m;
    }
    if (tau_crt_recover(p, residues) != t[p]) ++crt_bad;
  }
  r.check(crt_bad == 0, std::to_string(crt_bad) + " tau CRT failures");
}

void meta_fixture(Report& r) {
  const auto a = modforms::modular_curve_meta(11);
  const auto b = modforms::modular_curve_meta(13);
  r.check(a.index == 120 && a.cusps == 10 && a.genus == 1, "ell = 11");
  r.check(b.index == 168 && b.cusps == 12 && b.genus == 2, "ell = 13");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  void (*body)(Report&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "periods of X11", kBudgetPeriods, periods_fixture},
      {2, "elliptic log of (0,0)", kBudgetLog, log_fixture},
      {3, "inversion fixtures", kBudgetInversion, inversion_fixture},
      {4, "11-torsion polynomial", kBudgetTorsion, torsion_fixture},
      {5, "chord-tangent fixtures", kBudgetFixtures, chord_tangent_fixture},
      {6, "property suite", kBudgetProperties, property_suite},
      {7, "modular forms", kBudgetModforms, modforms_suite},
      {8, "modular curve metadata", kBudgetMeta, meta_fixture},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Report report;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(report);
    } catch (const std::exception& e) {
      report.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report.check(secs < c.budget_seconds, "over time budget");
    const bool ok = report.ok();
    if (!ok) ++failed;
    std::printf("criterion %d: %s  %s (%.2f s) %s\n", c.id, ok ? "PASS" : "FAIL", c.name, secs,
                report.detail().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
