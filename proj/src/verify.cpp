#include "okubo/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include "okubo/error.hpp"
#include "okubo/json_io.hpp"
#include "okubo/series.hpp"

namespace okubo {

Rational Sampler::next() {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  long p = 0;
  while (p == 0) p = num(rng_);
  return Rational(p, den(rng_));
}

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

std::array<Rational, 4> Sampler::admissible() {
  return draw(
      [&] {
        std::array<Rational, 4> x{next(), next(), next(), next()};
        require_admissible(x[0], x[1], x[2], x[3]);
        return x;
      },
      "admissible exponents");
}

HGParams Sampler::generic_params() {
  return draw(
      [&] {
        HGParams p{next(), next(), next(), next(), next(), next()};
        for (const Rational* g : {&p.gamma1, &p.gamma2})
          if (g->is_integer() && *g <= 0) throw Error(errc::kDegenerateParameters, "gamma is a nonpositive integer");
        return p;
      },
      "generic product parameters");
}

HGParams Sampler::constrained_params() {
  return draw(
      [&] {
        const HGParams p = HGParams::okubo(next(), next(), next(), next());
        build_okubo_zero(p);
        build_R(p);
        return p;
      },
      "constrained parameters");
}

AccessoryChart Sampler::generic_chart() {
  return draw(
      [&] {
        const auto [a, b, c, d] = admissible();
        return chart_solving_r1(a, b, c, d, next(), next(), next());
      },
      "generic chart");
}

AccessoryChart Sampler::special_chart() {
  return draw(
      [&] {
        const auto [a, b, c, d] = admissible();
        return solve_accessory(a, b, c, d).chart;
      },
      "special chart");
}

AccessoryChart Sampler::perturbed_chart() {
  return draw(
      [&] {
        const AccessoryChart s = special_chart();
        return chart_solving_r1(s.a, s.b, s.c, s.d, s.r[1] + next(), s.r[2], s.r[3]);
      },
      "perturbed chart");
}

DFParams Sampler::df_params() {
  return draw(
      [&] {
        const DFParams p{next(), next(), next(), next()};
        build_Q(p);
        euler_reduce(p.setting());
        return p;
      },
      "Dotsenko-Fateev parameters");
}

namespace {

// Accumulates per-case outcomes; the first failure is kept verbatim.
class Tally {
 public:
  explicit Tally(CriterionResult& r) : r_(r) {}

  void exact(bool ok, const std::string& what) {
    ++r_.cases;
    if (ok) return;
    r_.max_error = 1;
    fail(what);
  }

  void numeric(double err, const std::string& what) {
    ++r_.cases;
    r_.max_error = std::max(r_.max_error, err);
    if (!(err <= r_.tolerance)) fail(what + " (" + std::to_string(err) + ")");
  }

 private:
  void fail(const std::string& what) {
    if (r_.failures++ == 0) r_.first_failure = what;
  }
  CriterionResult& r_;
};

std::string describe(const HGParams& p) {
  return "(" + p.alpha1.str() + ", " + p.beta1.str() + ", " + p.alpha2.str() + ", " + p.beta2.str() + ", " +
         p.gamma1.str() + ", " + p.gamma2.str() + ")";
}

std::string describe(const AccessoryChart& ch) {
  return "chart (" + ch.a.str() + ", " + ch.b.str() + ", " + ch.c.str() + ", " + ch.d.str() + " | " +
         ch.r[0].str() + ", " + ch.r[1].str() + ", " + ch.r[2].str() + ", " + ch.r[3].str() + ")";
}

std::string describe(const DFParams& p) {
  return "(" + p.a.str() + ", " + p.b.str() + ", " + p.c.str() + ", " + p.g.str() + ")";
}

Poly even_quadratic(const Rational& e) { return Poly{-e * e, 0, 1}; }

HGParams numeric_sample() { return HGParams::okubo(Rational(1, 3), Rational(1, 5), Rational(1, 7), Rational(1, 11)); }

Complex random_point(Sampler& s, double rmin, double rmax) { return std::polar(s.uniform(rmin, rmax), s.uniform(-M_PI, M_PI)); }

void phi_factorization(Sampler& s, Tally& t) {
  for (int i = 0; i < 50; ++i) {
    const HGParams p = s.generic_params();
    const FuchsianSystem sys = build_product_system(p);
    const Poly phi = characteristic_polynomial(-(sys.residue_at_0 + sys.residue_at_1));
    const Poly expected =
        poly_from_roots({p.alpha1 + p.alpha2, p.beta1 + p.beta2, p.alpha1 + p.beta2, p.beta1 + p.alpha2});
    t.exact(phi == expected && phi_polynomial(p) == expected, "phi " + describe(p));
  }
}

void normal_form_matrices(Sampler& s, Tally& t) {
  auto check = [&](const HGParams& p) {
    const OkuboZero oz = build_okubo_zero(p);
    const RationalMatrix R = build_R(p);
    const std::string w = describe(p);
    t.exact(determinant(oz.P) == det_P_formula(p), "det P " + w);
    t.exact(determinant(R) == det_R_formula(p), "det R " + w);
    t.exact(oz.P * oz.P_inverse == RationalMatrix::identity(4), "P P^-1 " + w);
    t.exact(oz.P_inverse == closed_form_P_inverse(p), "P^-1 closed form " + w);
    t.exact(oz.system.A == closed_form_A0(p), "A0 closed form " + w);
    t.exact(R * oz.system.A * inverse(R) == diagonal_form(p), "R A0 R^-1 " + w);
    t.exact(R * oz.P_inverse == closed_form_RP_inverse(p), "R P^-1 " + w);
  };
  check(numeric_sample());
  for (int i = 0; i < 20; ++i) check(s.constrained_params());
}

void cubic_block_formulas(Sampler& s, Tally& t) {
  for (int i = 0; i < 100; ++i) {
    const AccessoryChart ch = s.generic_chart();
    const std::string w = describe(ch);
    const RationalMatrix A1 = parametrize_A1(ch).A;
    const PolyMatrix adj = resolvent_adjugate(A1);
    const PolyMatrix A11 = adj.block(0, 0, 2, 2);
    const CubicBlockDecomposition blocks = cubic_blocks(ch);
    const EpsilonDelta e = epsilon_delta(ch);
    t.exact(determinant_laplace(A11) == even_quadratic(ch.b) * even_quadratic(ch.c) * even_quadratic(ch.d),
            "det A11 " + w);
    t.exact(blocks.A11() == A11, "Q11, R11, S11 " + w);
    t.exact(blocks.A11_adjugate() == adjugate(A11), "tilded blocks " + w);
    t.exact(block_product_closed_form(ch) == accessory_block_12(ch) * accessory_block_21(ch), "A12 A21 " + w);
    t.exact(blocks.S11.trace() == -2 * ch.a * ch.b * ch.c * e.delta_prime, "tr S11 " + w);
  }
}

// Both routes of the verdict are compared inside substantially_same; a
// disagreement surfaces as an internal_inconsistency error.
void verdict_case(Tally& t, const AccessoryChart& ch, PointPair pair, bool expected) {
  try {
    const SameVerdict v = substantially_same(ch, pair);
    const bool obstruction_free = v.epsilon_delta.epsilon.is_zero() && v.epsilon_delta.delta.is_zero();
    t.exact(v.same == expected && v.by_cross_products == obstruction_free && v.by_epsilon_delta == obstruction_free,
            "verdict " + describe(ch));
  } catch (const Error& e) {
    t.exact(false, std::string(e.what()) + " at " + describe(ch));
  }
}

void cross_product_biconditional(Sampler& s, Tally& t) {
  for (int i = 0; i < 50; ++i) verdict_case(t, s.special_chart(), PointPair::one_and_infinity, true);
  for (int i = 0; i < 50; ++i) verdict_case(t, s.perturbed_chart(), PointPair::one_and_infinity, false);
}

void special_solution(Sampler& s, Tally& t) {
  for (int i = 0; i < 50; ++i) {
    const auto draw = s.draw(
        [&] {
          const auto [a, b, c, d] = s.admissible();
          return std::pair{solve_accessory(a, b, c, d, Branch::via_r4), solve_accessory(a, b, c, d, Branch::via_r3)};
        },
        "exponents admitting both branches");
    for (const AccessorySolution* sol : {&draw.first, &draw.second}) {
      const AccessoryChart& ch = sol->chart;
      const std::string w = to_string(sol->branch_used) + " " + describe(ch);
      const EpsilonDelta e = epsilon_delta(ch);
      t.exact(sol->A1 == special_accessory_matrix(ch.a, ch.b, ch.c, ch.d), "special matrix " + w);
      t.exact(parametrize_A1(ch).A == sol->A1, "chart substitution " + w);
      t.exact(e.epsilon.is_zero() && e.delta.is_zero(), "epsilon = delta = 0 " + w);
      t.exact(ch.satisfies_d_condition(), "d-condition " + w);
    }
  }
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      const SymbolicIdentity id = conditional_vanishing_identity(s1, s2);
      t.exact(id.holds, id.name + ": " + id.residual);
    }
}

void realization(Sampler& s, Tally& t) {
  for (int i = 0; i < 30; ++i) {
    const Realization r = s.draw([&] { return realize(HGParams::okubo(s.next(), s.next(), s.next(), s.next())); },
                                 "realizable parameters");
    const std::string w = "exponents (" + r.a.str() + ", " + r.b.str() + ", " + r.c.str() + ", " + r.d.str() + ")";
    t.exact(inverse(r.D1) * r.A1 * r.D1 == r.A0, "D1^-1 A1 D1 " + w);
    t.exact(r.cond_a_lambda_identity && r.cond_b_lambda_identity, "lambda product identity " + w);
    t.exact(r.A1_lambda_form_matches && r.verdict, "realization verdict " + w);
  }
}

void dual_verdict(Sampler& s, Tally& t) {
  for (int i = 0; i < 50; ++i) {
    const bool special = i % 2 == 0;
    const AccessoryChart ch = special ? s.special_chart() : s.perturbed_chart();
    try {
      const SameVerdict forward = substantially_same(ch, PointPair::one_and_infinity);
      const SameVerdict dual = substantially_same(ch, PointPair::zero_and_infinity);
      t.exact(forward.same == dual.same && dual.same == special, "dual verdict " + describe(ch));
    } catch (const Error& e) {
      t.exact(false, std::string(e.what()) + " at " + describe(ch));
    }
  }
}

void df_transformation(Sampler& s, Tally& t) {
  for (int i = 0; i < 30; ++i) {
    const DFParams p = s.df_params();
    const std::string w = describe(p);
    const DFTransformVerdict v = df_transform_check(p);
    t.exact(v.verdict, "Q K Q^-1 " + w + " " + v.offending);
    t.exact(v.q_tilde_matches && v.exponent_identities && v.gamma_mu_identities, "lambda identities " + w);
    t.exact(v.reduction.first_column_zero, "first column " + w);
    for (const SpectrumCheck& c : df_spectrum_checks(p)) t.exact(c.holds, c.name + " " + w);
    for (const SpectrumCheck& c : reduction_spectrum_checks(p.setting(), v.reduction)) t.exact(c.holds, c.name + " " + w);
  }
}

void product_residual(Sampler& s, Tally& t) {
  HGParams p = numeric_sample();
  p.gamma1 = Rational(2, 9);
  p.gamma2 = Rational(5, 13);
  for (int i = 0; i < 20; ++i) {
    const Complex x = random_point(s, 0.02, 0.4);
    t.numeric(product_system_residual(p, x, 60), "w residual at x = " + format_double(x.real()) + "+" +
                                                     format_double(x.imag()) + "i");
  }
}

void v_two_ways(Sampler& s, Tally& t) {
  const HGParams p = numeric_sample();
  for (int i = 0; i < 20; ++i) {
    const Complex x = random_point(s, 0.05, 0.6);
    t.numeric(v_vector(p, x, 0).max_relative_gap,
              "v gap at x = " + format_double(x.real()) + "+" + format_double(x.imag()) + "i");
  }
}

std::vector<Complex> disc_samples(Sampler& s, BasePoint base, int count) {
  std::vector<Complex> out;
  for (int k = 0; k < count; ++k) {
    // every third point on the boundary of the evaluation region
    const bool edge = k % 3 == 0;
    switch (base) {
      case BasePoint::zero: out.push_back(random_point(s, 0.02, edge ? 0.6 : 0.59)); break;
      case BasePoint::one: out.push_back(1.0 + random_point(s, 0.02, edge ? 0.6 : 0.59)); break;
      case BasePoint::infinity: out.push_back(1.0 + random_point(s, edge ? 1.7 : 1.71, 6.0)); break;
    }
    if (edge) {
      const Complex c = base == BasePoint::zero ? Complex(0) : Complex(1);
      const double r = base == BasePoint::infinity ? 1.7 : 0.6;
      out.back() = c + std::polar(r, std::arg(out.back() - c));
    }
  }
  return out;
}

void local_series_residuals(Sampler& s, Tally& t) {
  const HGParams p = numeric_sample();
  const Realization real = realize(p);
  OkuboSystem special;
  special.A = real.A1;
  special.a = real.a;
  special.b = real.b;
  special.c = real.c;
  special.d = real.d;
  const AccessoryChart generic = s.draw(
      [&] { return chart_solving_r1(real.a, real.b, real.c, real.d, s.next(), s.next(), s.next()); },
      "chart at the sample exponents");
  const std::vector<std::pair<std::string, OkuboSystem>> systems = {
      {"normal form at zero", build_okubo_zero(p).system},
      {"special accessory system", special},
      {describe(generic), parametrize_A1(generic)},
  };
  for (const auto& [name, sys] : systems)
    for (BasePoint base : {BasePoint::zero, BasePoint::one, BasePoint::infinity})
      for (int idx = 0; idx < 4; ++idx) {
        const FloatSeries f = local_series<double>(sys, base, idx, 80);
        const EvalReport rep = residual_report(sys, f, disc_samples(s, base, 9));
        t.numeric(rep.max_residual, name + " at " + to_string(base) + ", exponent " + local_exponent(sys, base, idx).str());
      }
}

void integral_solution(Sampler&, Tally& t) {
  const DFParams p{Rational(1, 3), Rational(1, 5), Rational(1, 7), Rational(1, 2)};
  for (double x : {0.3, 0.4, 0.5})
    t.numeric(df_integral_solution(p, x).residual, "integral solution at x = " + format_double(x));
}

struct Criterion {
  std::string id, title;
  double tolerance, time_limit;
  std::function<void(Sampler&, Tally&)> body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"1a", "phi factorization for 50 generic parameter sets", 0, 0, phi_factorization},
      {"1b", "determinants, inverses and diagonalization of the normal form", 0, 5, normal_form_matrices},
      {"1c", "block formulas for the cubic adjugate on 100 charts", 0, 30, cubic_block_formulas},
      {"1d", "cross products vanish iff epsilon = delta = 0 on 100 charts", 0, 0, cross_product_biconditional},
      {"1e", "special accessory values by both branches and the sign-pair identity", 0, 0, special_solution},
      {"1f", "realization by Gauss products for 30 parameter sets", 0, 0, realization},
      {"1g", "dual-pair verdict agrees on 50 charts", 0, 0, dual_verdict},
      {"1h", "Dotsenko-Fateev conjugations and spectra for 30 parameter sets", 0, 0, df_transformation},
      {"2a", "product of Gauss functions solves its system at 20 points", 1e-10, 10, product_residual},
      {"2b", "v by transformation and by contiguous products at 20 points", 1e-9, 0, v_two_ways},
      {"2c", "local series residuals at bases 0, 1, inf with 80 terms", 1e-9, 0, local_series_residuals},
      {"2d", "integral solution residual at x = 0.3, 0.4, 0.5", 1e-6, 60, integral_solution},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& criterion_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const Criterion& c : criteria()) out.push_back(c.id);
    return out;
  }();
  return ids;
}

CriterionResult run_criterion(const std::string& id, std::uint64_t seed) {
  const auto& all = criteria();
  std::size_t index = 0;
  while (index < all.size() && all[index].id != id) ++index;
  if (index == all.size()) throw Error(errc::kInvalidInput, "unknown criterion", id);
  const Criterion& c = all[index];

  CriterionResult r;
  r.id = c.id;
  r.title = c.title;
  r.tolerance = c.tolerance;
  r.time_limit = c.time_limit;
  // independent stream per criterion, so results do not depend on run order
  Sampler sampler(seed * 0x9E3779B97F4A7C15ULL + index + 1);
  Tally tally(r);
  const auto start = std::chrono::steady_clock::now();
  try {
    c.body(sampler, tally);
  } catch (const Error& e) {
    ++r.failures;
    if (r.first_failure.empty()) r.first_failure = e.code() + ": " + e.what() + " " + e.context();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = c.time_limit == 0 || r.seconds < c.time_limit;
  if (!in_time && r.first_failure.empty()) r.first_failure = "time limit exceeded";
  r.passed = r.failures == 0 && r.cases > 0 && in_time;
  return r;
}

std::vector<CriterionResult> run_all_criteria(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (const std::string& id : criterion_ids()) out.push_back(run_criterion(id, seed));
  return out;
}

}  // namespace okubo
