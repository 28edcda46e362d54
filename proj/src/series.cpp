#include "okubo/series.hpp"

#include <algorithm>
#include <cmath>

#include "okubo/error.hpp"

namespace okubo {

namespace {

constexpr double kDiscFinite = 0.6;
constexpr double kDiscInfinity = 1.7;
constexpr double kDiscSlack = 1e-12;  // points placed on the boundary by polar()

template <class S>
S from_rational(const Rational& r);
template <>
Rational from_rational<Rational>(const Rational& r) { return r; }
template <>
double from_rational<double>(const Rational& r) { return r.to_double(); }

double magnitude(const Rational& r) { return std::fabs(r.to_double()); }
double magnitude(double r) { return std::fabs(r); }
double as_double(const Rational& r) { return r.to_double(); }
double as_double(double r) { return r; }

bool is_nonpositive_integer(double g) { return g <= 0 && g == std::floor(g); }

void require_unit_disc(Complex x) {
  if (std::abs(x) >= 1) throw Error(errc::kOutsideDisc, "Gauss series needs |x| < 1", std::to_string(std::abs(x)));
}

double max_abs(const CVector4& v) {
  double m = 0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  return m;
}

CVector4 mat_vec(const Matrix<double>& m, const CVector4& v) {
  CVector4 out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Gauss series

Hyp2F1Jet hyp2f1_jet(double alpha, double beta, double gamma, Complex x, int terms) {
  if (is_nonpositive_integer(gamma))
    throw Error(errc::kInvalidInput, "gamma is a non-positive integer", std::to_string(gamma));
  if (terms < 1) throw Error(errc::kInvalidInput, "at least one term is required");
  require_unit_disc(x);
  Hyp2F1Jet out;
  double c = 1;
  Complex xk = 1, xk1 = 0, xk2 = 0;  // x^k, x^{k-1}, x^{k-2}
  for (int k = 0; k < terms; ++k) {
    out.value += c * xk;
    out.d1 += double(k) * c * xk1;
    out.d2 += double(k) * double(k - 1) * c * xk2;
    out.last_term = std::abs(c * xk);
    c *= (alpha + k) * (beta + k) / ((gamma + k) * (k + 1));
    xk2 = xk1;
    xk1 = xk;
    xk *= x;
  }
  out.terms = terms;
  return out;
}

Hyp2F1Jet hyp2f1_jet(const Rational& alpha, const Rational& beta, const Rational& gamma, Complex x, int terms) {
  if (gamma.is_integer() && gamma.sign() <= 0)
    throw Error(errc::kInvalidInput, "gamma is a non-positive integer", gamma.str());
  return hyp2f1_jet(alpha.to_double(), beta.to_double(), gamma.to_double(), x, terms);
}

Complex hyp2f1(double alpha, double beta, double gamma, Complex x, int terms) {
  return hyp2f1_jet(alpha, beta, gamma, x, terms).value;
}

Hyp2F1Jet hyp2f1_adaptive(double alpha, double beta, double gamma, Complex x, double tol, int max_terms) {
  if (is_nonpositive_integer(gamma))
    throw Error(errc::kInvalidInput, "gamma is a non-positive integer", std::to_string(gamma));
  require_unit_disc(x);
  Hyp2F1Jet out;
  double c = 1;
  Complex xk = 1, xk1 = 0, xk2 = 0;
  int quiet = 0;
  for (int k = 0; k < max_terms; ++k) {
    const Complex t = c * xk;
    out.value += t;
    out.d1 += double(k) * c * xk1;
    out.d2 += double(k) * double(k - 1) * c * xk2;
    out.last_term = std::abs(t);
    out.terms = k + 1;
    const double weight = double(k + 1) * double(k + 2);
    const double scale = std::max({1.0, std::abs(out.value), std::abs(out.d1), std::abs(out.d2)});
    quiet = (std::abs(t) * weight <= tol * scale) ? quiet + 1 : 0;
    if (quiet >= 3) return out;
    c *= (alpha + k) * (beta + k) / ((gamma + k) * (k + 1));
    xk2 = xk1;
    xk1 = xk;
    xk *= x;
  }
  throw Error(errc::kOutsideDisc, "Gauss series did not converge within the term budget");
}

// ---------------------------------------------------------------------------
// Product vectors

namespace {

Hyp2F1Jet gauss(const Rational& a, const Rational& b, const Rational& g, Complex x, int terms) {
  if (terms > 0) return hyp2f1_jet(a, b, g, x, terms);
  if (g.is_integer() && g.sign() <= 0) throw Error(errc::kInvalidInput, "gamma is a non-positive integer", g.str());
  return hyp2f1_adaptive(a.to_double(), b.to_double(), g.to_double(), x);
}

}  // namespace

VectorJet product_vector_w(const HGParams& p, Complex x, int terms) {
  const Hyp2F1Jet f1 = gauss(p.alpha1, p.beta1, p.gamma1, x, terms);
  const Hyp2F1Jet f2 = gauss(p.alpha2, p.beta2, p.gamma2, x, terms);
  VectorJet w;
  w.value = {f1.value * f2.value, x * f1.d1 * f2.value, x * f1.value * f2.d1, x * x * f1.d1 * f2.d1};
  w.derivative = {
      f1.d1 * f2.value + f1.value * f2.d1,
      f1.d1 * f2.value + x * f1.d2 * f2.value + x * f1.d1 * f2.d1,
      f1.value * f2.d1 + x * f1.d1 * f2.d1 + x * f1.value * f2.d2,
      2.0 * x * f1.d1 * f2.d1 + x * x * f1.d2 * f2.d1 + x * x * f1.d1 * f2.d2,
  };
  return w;
}

double product_system_residual(const HGParams& p, Complex x, int terms) {
  const FuchsianSystem sys = build_product_system(p);
  const Matrix<double> H0 = to_double(sys.residue_at_0), H1 = to_double(sys.residue_at_1);
  const VectorJet w = product_vector_w(p, x, terms);
  const CVector4 h0 = mat_vec(H0, w.value), h1 = mat_vec(H1, w.value);
  CVector4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = w.derivative[i] - h0[i] / x - h1[i] / (x - 1.0);
  return max_abs(r);
}

VectorJet okubo_vector_u(const HGParams& p, Complex x, int terms) {
  const OkuboZero oz = build_okubo_zero(p);
  const Matrix<double> Pinv = to_double(oz.P_inverse);
  const double lam = lambda("----", p).to_double();
  const VectorJet w = product_vector_w(p, x, terms);
  const Complex scale = std::pow(x, -lam);
  const CVector4 pw = mat_vec(Pinv, w.value), pdw = mat_vec(Pinv, w.derivative);
  VectorJet u;
  for (std::size_t i = 0; i < 4; ++i) {
    u.value[i] = scale * pw[i];
    u.derivative[i] = scale * (pdw[i] - lam / x * pw[i]);
  }
  return u;
}

double okubo_chain_residual(const HGParams& p, Complex x, int terms) {
  const VectorJet u = okubo_vector_u(p, x, terms);
  return okubo_residual(to_double(build_okubo_zero(p).system.A), x, SeriesValue{u.value, u.derivative});
}

VVector v_vector(const HGParams& p, Complex x, int terms) {
  if (!p.okubo_constrained())
    throw Error(errc::kInvalidInput, "gamma1 = gamma2 = (alpha1 + alpha2 + beta1 + beta2)/2 + 1 is required");
  if (x.imag() == 0 && x.real() <= 0) throw Error(errc::kOutsideDisc, "x lies on the branch cut (-inf, 0]");
  const RationalMatrix RPinv = build_R(p) * build_okubo_zero(p).P_inverse;
  const Matrix<double> M = to_double(RPinv);
  const double g1 = (p.gamma1 - 1).to_double();
  const Complex xp = std::pow(x, g1);
  const VectorJet w = product_vector_w(p, x, terms);
  const CVector4 mw = mat_vec(M, w.value), mdw = mat_vec(M, w.derivative);

  VVector v;
  for (std::size_t i = 0; i < 4; ++i) {
    v.via_transform[i] = xp * mw[i];
    v.derivative[i] = xp * (mdw[i] + g1 / x * mw[i]);
  }
  auto F = [&](const Rational& a, const Rational& b, const Rational& g) { return gauss(a, b, g, x, terms).value; };
  const Complex fa1 = F(p.alpha1 + 1, p.beta1, p.gamma1), fb1 = F(p.alpha1, p.beta1 + 1, p.gamma1);
  const Complex fa2 = F(p.alpha2 + 1, p.beta2, p.gamma2), fb2 = F(p.alpha2, p.beta2 + 1, p.gamma2);
  v.via_products = {xp * fa1 * fa2, xp * fb1 * fb2, xp * fa1 * fb2, xp * fb1 * fa2};
  for (std::size_t i = 0; i < 4; ++i) {
    const double den = std::max(std::abs(v.via_products[i]), 1e-300);
    v.max_relative_gap = std::max(v.max_relative_gap, std::abs(v.via_transform[i] - v.via_products[i]) / den);
  }
  return v;
}

double v_system_residual(const HGParams& p, Complex x, int terms) {
  const RationalMatrix R = build_R(p);
  const Matrix<double> Rd = to_double(R), Rinv = to_double(inverse(R)), Dg = to_double(diagonal_form(p));
  const VVector v = v_vector(p, x, terms);
  CVector4 t = mat_vec(Rinv, mat_vec(Dg, v.via_transform));
  t[0] /= x;
  t[1] /= x;
  t[2] /= (x - 1.0);
  t[3] /= (x - 1.0);
  const CVector4 rhs = mat_vec(Rd, t);
  CVector4 r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = v.derivative[i] - rhs[i];
  return max_abs(r);
}

// ---------------------------------------------------------------------------
// Local series

std::string to_string(BasePoint base) {
  switch (base) {
    case BasePoint::zero: return "0";
    case BasePoint::one: return "1";
    case BasePoint::infinity: return "inf";
  }
  return "?";
}

BasePoint parse_base_point(const std::string& text) {
  if (text == "0") return BasePoint::zero;
  if (text == "1") return BasePoint::one;
  if (text == "inf" || text == "infinity") return BasePoint::infinity;
  throw Error(errc::kInvalidInput, "base point must be 0, 1 or inf", text);
}

Rational local_exponent(const OkuboSystem& sys, BasePoint base, int exponent_index) {
  if (exponent_index < 0 || exponent_index > 3)
    throw Error(errc::kOutOfRange, "exponent index must lie in 0..3", std::to_string(exponent_index));
  if (base == BasePoint::infinity) {
    const Rational& e = exponent_index < 2 ? sys.c : sys.d;
    return exponent_index % 2 == 0 ? e : -e;
  }
  const Rational& e = base == BasePoint::zero ? sys.a : sys.b;
  if (exponent_index < 2) return Rational(0);
  return exponent_index == 2 ? e : -e;
}

template <class S>
std::string SeriesSolution<S>::variable() const {
  switch (base) {
    case BasePoint::zero: return "x";
    case BasePoint::one: return "x-1";
    case BasePoint::infinity: return "1/(x-1)";
  }
  return "?";
}

template struct SeriesSolution<Rational>;
template struct SeriesSolution<double>;

namespace {

template <class S>
using Vec4 = std::array<S, 4>;

template <class S>
Vec4<S> convert(const RationalVector& v) {
  return {from_rational<S>(v[0]), from_rational<S>(v[1]), from_rational<S>(v[2]), from_rational<S>(v[3])};
}

template <class S>
S checked_divide(const S& num, const S& den, const char* what) {
  if (den == S(0)) throw Error(errc::kSingularMatrix, std::string("recurrence divides by zero in ") + what);
  return num / den;
}

// ((z)I - A) g
template <class S>
Vec4<S> shifted_apply(const Matrix<S>& A, const S& z, const Vec4<S>& g) {
  Vec4<S> out;
  for (std::size_t i = 0; i < 4; ++i) {
    S acc = z * g[i];
    for (std::size_t j = 0; j < 4; ++j) acc -= A(i, j) * g[j];
    out[i] = acc;
  }
  return out;
}

// Solves m x = rhs for a 4x4 system with partial pivoting.
template <class S>
Vec4<S> solve4(Matrix<S> m, Vec4<S> rhs) {
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < 4; ++r)
      if (magnitude(m(r, col)) > magnitude(m(piv, col))) piv = r;
    if (m(piv, col) == S(0)) throw Error(errc::kSingularMatrix, "recurrence step matrix is singular");
    if (piv != col) {
      for (std::size_t c = 0; c < 4; ++c) std::swap(m(piv, c), m(col, c));
      std::swap(rhs[piv], rhs[col]);
    }
    for (std::size_t r = col + 1; r < 4; ++r) {
      const S f = m(r, col) / m(col, col);
      if (f == S(0)) continue;
      for (std::size_t c = col; c < 4; ++c) m(r, c) -= f * m(col, c);
      rhs[r] -= f * rhs[col];
    }
  }
  Vec4<S> x;
  for (std::size_t i = 4; i-- > 0;) {
    S acc = rhs[i];
    for (std::size_t c = i + 1; c < 4; ++c) acc -= m(i, c) * x[c];
    x[i] = acc / m(i, i);
  }
  return x;
}

// Initial vector at a finite base point. `lo`/`hi` pick the 2x2 diagonal block
// carrying the exponent (rows 1-2 at 0, rows 3-4 at 1).
RationalVector finite_initial(const OkuboSystem& sys, BasePoint base, int idx) {
  const bool at_zero = base == BasePoint::zero;
  const std::size_t own = at_zero ? 0 : 2;    // block whose exponent is +-e
  const std::size_t other = at_zero ? 2 : 0;  // block that is free at rho = 0
  const Rational e = at_zero ? sys.a : sys.b;
  RationalVector g(4, Rational(0));
  if (idx >= 2) {
    g[own + (idx == 2 ? 0 : 1)] = 1;
    return g;
  }
  // rho = 0: free block = unit vector, own block = -(1/e) J A_{own,other} free
  g[other + idx] = 1;
  const RationalMatrix coupling = sys.A.block(own, other, 2, 2);
  if (e.is_zero()) throw Error(errc::kAdmissibilityViolated, "exponent vanishes", at_zero ? "a" : "b");
  g[own] = -coupling(0, idx) / e;
  g[own + 1] = coupling(1, idx) / e;
  return g;
}

RationalVector infinity_initial(const OkuboSystem& sys, const Rational& sigma) {
  const auto basis = null_space(sys.A + RationalMatrix::identity(4) * sigma);
  if (basis.size() != 1)
    throw Error(errc::kEigenvectorDegeneracy, "(sigma I + A) must have a one-dimensional kernel", sigma.str());
  return basis.front();
}

}  // namespace

template <class S>
SeriesSolution<S> local_series(const OkuboSystem& sys, BasePoint base, int exponent_index, int terms) {
  if (terms < 1) throw Error(errc::kInvalidInput, "at least one term is required");
  require_admissible(sys.a, sys.b, sys.c, sys.d);
  if (!sys.has_block_form()) throw Error(errc::kBlockForm, "coefficient matrix is not of the form [[aJ, *], [*, bJ]]");

  SeriesSolution<S> sol;
  sol.base = base;
  sol.exponent_index = exponent_index;
  sol.exponent = local_exponent(sys, base, exponent_index);
  const Matrix<S> A = sys.A.map([](const Rational& r) { return from_rational<S>(r); });
  const S rho = from_rational<S>(sol.exponent);
  sol.coeffs.reserve(terms);

  if (base == BasePoint::infinity) {
    sol.coeffs.push_back(convert<S>(infinity_initial(sys, sol.exponent)));
    for (int s = 0; s + 1 < terms; ++s) {
      const Vec4<S>& h = sol.coeffs.back();
      const S z = S(s) + rho;
      // ((s + sigma + 1) I + A) h(s+1) = (s + sigma)(T - I) h(s)
      Matrix<S> m = A;
      for (std::size_t i = 0; i < 4; ++i) m(i, i) += z + S(1);
      sol.coeffs.push_back(solve4<S>(m, {-z * h[0], -z * h[1], S(0), S(0)}));
    }
    return sol;
  }

  const bool at_zero = base == BasePoint::zero;
  const std::size_t stepped = at_zero ? 2 : 0;      // block advanced by the recurrence
  const std::size_t constrained = at_zero ? 0 : 2;  // block fixed by the constraint
  const S e = from_rational<S>(at_zero ? sys.a : sys.b);
  sol.coeffs.push_back(convert<S>(finite_initial(sys, base, exponent_index)));
  for (int r = 0; r + 1 < terms; ++r) {
    const Vec4<S>& g = sol.coeffs.back();
    const S z = S(r) + rho;
    const Vec4<S> rhs = shifted_apply(A, z, g);
    Vec4<S> next;
    // base 1: (z+1)(T - I) g(r+1) = (zI - A) g(r); base 0: (z+1) T g(r+1) = (zI - A) g(r)
    const S sign = at_zero ? S(1) : S(-1);
    for (std::size_t k = 0; k < 2; ++k)
      next[stepped + k] = checked_divide<S>(rhs[stepped + k], sign * (z + S(1)), "the stepped block");
    // ((z+1) I - eJ) g_constrained(r+1) = A_{constrained,stepped} g_stepped(r+1)
    for (std::size_t k = 0; k < 2; ++k) {
      S acc = A(constrained + k, stepped) * next[stepped] + A(constrained + k, stepped + 1) * next[stepped + 1];
      const S diag = z + S(1) - (k == 0 ? e : -e);
      next[constrained + k] = checked_divide<S>(acc, diag, "the constraint");
    }
    sol.coeffs.push_back(next);
  }
  return sol;
}

template <class S>
double recurrence_defect(const OkuboSystem& sys, const SeriesSolution<S>& sol) {
  const Matrix<S> A = sys.A.map([](const Rational& r) { return from_rational<S>(r); });
  const S rho = from_rational<S>(sol.exponent);
  double scale = 1, defect = 0;
  for (const auto& g : sol.coeffs)
    for (const auto& v : g) scale = std::max(scale, magnitude(v));
  auto record = [&](const S& v) { defect = std::max(defect, magnitude(v)); };
  const std::size_t n = sol.coeffs.size();
  if (n == 0) return 0;

  if (sol.base == BasePoint::infinity) {
    // (sigma I + A) h(0) = 0
    for (const auto& v : shifted_apply(A, -rho, sol.coeffs[0])) record(v);
    for (std::size_t s = 0; s + 1 < n; ++s) {
      const S z = S(static_cast<long>(s)) + rho;
      const Vec4<S> lhs = shifted_apply(A, -(z + S(1)), sol.coeffs[s + 1]);  // -((z+1)I + A) h(s+1)
      const Vec4<S>& h = sol.coeffs[s];
      const Vec4<S> rhs{-z * h[0], -z * h[1], S(0), S(0)};
      for (std::size_t i = 0; i < 4; ++i) record(-lhs[i] - rhs[i]);
    }
    return defect / scale;
  }

  const bool at_zero = sol.base == BasePoint::zero;
  // diagonal of the step operator: T at 0, T - I at 1
  const std::array<S, 4> step = at_zero ? std::array<S, 4>{S(0), S(0), S(1), S(1)}
                                        : std::array<S, 4>{S(-1), S(-1), S(0), S(0)};
  // r = -1: rho * step * g(0) = 0
  for (std::size_t i = 0; i < 4; ++i) record(rho * step[i] * sol.coeffs[0][i]);
  for (std::size_t r = 0; r < n; ++r) {
    const S z = S(static_cast<long>(r)) + rho;
    const Vec4<S> rhs = shifted_apply(A, z, sol.coeffs[r]);
    for (std::size_t i = 0; i < 4; ++i) {
      if (r + 1 < n) record((z + S(1)) * step[i] * sol.coeffs[r + 1][i] - rhs[i]);
      else if (step[i] == S(0)) record(rhs[i]);  // rows not involving g(n)
    }
  }
  return defect / scale;
}

bool inside_evaluation_disc(BasePoint base, Complex x) {
  switch (base) {
    case BasePoint::zero: return std::abs(x) <= kDiscFinite + kDiscSlack;
    case BasePoint::one: return std::abs(x - 1.0) <= kDiscFinite + kDiscSlack;
    case BasePoint::infinity: return std::abs(x - 1.0) >= kDiscInfinity - kDiscSlack;
  }
  return false;
}

template <class S>
SeriesValue evaluate_series(const SeriesSolution<S>& sol, Complex x) {
  if (!inside_evaluation_disc(sol.base, x))
    throw Error(errc::kOutsideDisc, "sample point lies outside the evaluation disc for base " + to_string(sol.base),
                std::to_string(x.real()) + "+" + std::to_string(x.imag()) + "i");
  const Complex t = sol.base == BasePoint::zero ? x : x - 1.0;
  if (t == 0.0) throw Error(errc::kOutsideDisc, "sample point is the singular point itself");
  const double rho = sol.exponent.to_double();
  SeriesValue out{};
  if (sol.base == BasePoint::infinity) {
    // y = t^{-sigma} sum h(k) u^k, u = 1/t; y' = -t^{-sigma-1} sum (k + sigma) h(k) u^k
    const Complex u = 1.0 / t;
    Complex uk = 1;
    CVector4 sy{}, sd{};
    for (std::size_t k = 0; k < sol.coeffs.size(); ++k) {
      for (std::size_t i = 0; i < 4; ++i) {
        const double h = as_double(sol.coeffs[k][i]);
        sy[i] += h * uk;
        sd[i] += (double(k) + rho) * h * uk;
      }
      uk *= u;
    }
    const Complex p = std::pow(t, -rho);
    for (std::size_t i = 0; i < 4; ++i) {
      out.y[i] = p * sy[i];
      out.dy[i] = -p / t * sd[i];
    }
    return out;
  }
  // y = t^rho sum g(r) t^r; y' = t^{rho-1} sum (r + rho) g(r) t^r
  Complex tk = 1;
  CVector4 sy{}, sd{};
  for (std::size_t r = 0; r < sol.coeffs.size(); ++r) {
    for (std::size_t i = 0; i < 4; ++i) {
      const double g = as_double(sol.coeffs[r][i]);
      sy[i] += g * tk;
      sd[i] += (double(r) + rho) * g * tk;
    }
    tk *= t;
  }
  const Complex p = std::pow(t, rho);
  for (std::size_t i = 0; i < 4; ++i) {
    out.y[i] = p * sy[i];
    out.dy[i] = p / t * sd[i];
  }
  return out;
}

double okubo_residual(const Matrix<double>& A, Complex x, const SeriesValue& v) {
  const CVector4 ay = mat_vec(A, v.y);
  CVector4 r;
  for (std::size_t i = 0; i < 4; ++i) {
    const Complex diag = i < 2 ? x : x - 1.0;
    r[i] = diag * v.dy[i] - ay[i];
  }
  return max_abs(r);
}

template <class S>
EvalReport residual_report(const OkuboSystem& sys, const SeriesSolution<S>& sol,
                           const std::vector<Complex>& samples) {
  EvalReport rep;
  rep.sample_points = samples;
  rep.terms_used = sol.terms();
  const Matrix<double> A = to_double(sys.A);
  for (const Complex& x : samples) {
    const SeriesValue v = evaluate_series(sol, x);
    rep.max_residual = std::max(rep.max_residual, okubo_residual(A, x, v));
    if (!sol.coeffs.empty()) {
      const Complex t = sol.base == BasePoint::zero ? x : x - 1.0;
      const double ratio = sol.base == BasePoint::infinity ? 1.0 / std::abs(t) : std::abs(t);
      double last = 0;
      for (const auto& v4 : sol.coeffs.back()) last = std::max(last, magnitude(v4));
      rep.truncation_estimate =
          std::max(rep.truncation_estimate, last * std::pow(ratio, double(sol.terms() - 1)));
    }
  }
  return rep;
}

std::vector<Complex> circle_samples(BasePoint base, int count, double radius) {
  const Complex center = base == BasePoint::zero ? Complex(0) : Complex(1);
  std::vector<Complex> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    const double theta = -M_PI + (k + 0.5) * 2 * M_PI / count;
    out.push_back(center + std::polar(radius, theta));
  }
  return out;
}

#define OKUBO_INSTANTIATE_SERIES(S)                                                                         \
  template SeriesSolution<S> local_series<S>(const OkuboSystem&, BasePoint, int, int);                     \
  template double recurrence_defect<S>(const OkuboSystem&, const SeriesSolution<S>&);                       \
  template SeriesValue evaluate_series<S>(const SeriesSolution<S>&, Complex);                               \
  template EvalReport residual_report<S>(const OkuboSystem&, const SeriesSolution<S>&, const std::vector<Complex>&);

OKUBO_INSTANTIATE_SERIES(Rational)
OKUBO_INSTANTIATE_SERIES(double)

#undef OKUBO_INSTANTIATE_SERIES

}  // namespace okubo
