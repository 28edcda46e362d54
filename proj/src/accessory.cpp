#include "okubo/accessory.hpp"

#include "okubo/error.hpp"
#include "okubo/sympoly.hpp"

namespace okubo {

namespace {

RationalMatrix mat2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return RationalMatrix{{a, b}, {c, d}};
}

Rational sq(const Rational& x) { return x * x; }

Rational require_nonzero(const Rational& v, const char* code, const std::string& what) {
  if (v.is_zero()) throw Error(code, what + " vanishes", what);
  return v;
}

// (z^2 - s^2)
Poly even_quadratic(const Rational& s) { return Poly{-sq(s), Rational(0), Rational(1)}; }

}  // namespace

// ---------------------------------------------------------------------------
// Chart

std::optional<std::string> AccessoryChart::r_condition_violation() const {
  static const char* names[4] = {"r1", "r2", "r3", "r4"};
  for (int k = 0; k < 4; ++k)
    if (r[k].is_zero()) return std::string(names[k]) + " = 0";
  if (r[0] == r[1]) return std::string("r1 = r2");
  if (r[2] == r[3]) return std::string("r3 = r4");
  return std::nullopt;
}

Rational AccessoryChart::d_condition_value() const {
  const auto& [r1, r2, r3, r4] = r;
  const Rational den = (r1 - r2) * (r3 - r4);
  if (den.is_zero()) throw Error(errc::kDegenerateChart, "(r1 - r2)(r3 - r4) vanishes", "r1 = r2 or r3 = r4");
  const Rational num = sq(a + b + c) * r1 * r3 - sq(a - b + c) * r1 * r4 - sq(a - b - c) * r2 * r3 +
                       sq(a + b - c) * r2 * r4 - 4 * a * b * r1 * r2 - 4 * a * b * r3 * r4;
  return num / den;
}

bool AccessoryChart::satisfies_d_condition() const { return d_condition_value() == sq(d); }

void AccessoryChart::validate() const {
  if (auto v = r_condition_violation()) throw Error(errc::kDegenerateChart, "chart violates the r-condition: " + *v, *v);
  if (!satisfies_d_condition())
    throw Error(errc::kDConditionFails, "d-condition fails: ratio is " + d_condition_value().str() +
                                            " but d^2 = " + sq(d).str());
}

std::optional<std::pair<Rational, Rational>> AccessoryChart::accessory_coordinates() const {
  if (r[3].is_zero()) return std::nullopt;
  return std::make_pair(r[0] / r[3], r[1] / r[3]);
}

AccessoryChart AccessoryChart::normalized(std::size_t index) const {
  if (index >= 4) throw Error(errc::kOutOfRange, "chart coordinate index out of range");
  if (r[index].is_zero()) throw Error(errc::kDegenerateChart, "cannot normalize by a vanishing coordinate");
  AccessoryChart out = *this;
  const Rational s = r[index];
  for (auto& x : out.r) x /= s;
  return out;
}

AccessoryChart chart_solving_r1(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                const Rational& r2, const Rational& r3, const Rational& r4) {
  const Rational lin = sq(a + b + c) * r3 - sq(a - b + c) * r4 - 4 * a * b * r2;
  const Rational rest = -sq(a - b - c) * r2 * r3 + sq(a + b - c) * r2 * r4 - 4 * a * b * r3 * r4;
  const Rational d2 = sq(d) * (r3 - r4);
  const Rational coeff = lin - d2;
  if (coeff.is_zero()) throw Error(errc::kDegenerateChart, "d-condition does not determine r1");
  AccessoryChart chart{a, b, c, d, {(-rest - d2 * r2) / coeff, r2, r3, r4}};
  if (auto v = chart.r_condition_violation())
    throw Error(errc::kDegenerateChart, "solved chart violates the r-condition: " + *v, *v);
  return chart;
}

RationalMatrix accessory_block_12(const AccessoryChart& ch) {
  const auto& [r1, r2, r3, r4] = ch.r;
  const Rational &b = ch.b, &c = ch.c;
  return mat2(((b - c) * r2 - (b + c) * r3) / (r1 - r2), ((b + c) * r2 - (b - c) * r4) / (r2 - r1),
              ((b - c) * r1 - (b + c) * r3) / (r2 - r1), ((b + c) * r1 - (b - c) * r4) / (r1 - r2));
}

RationalMatrix accessory_block_21(const AccessoryChart& ch) {
  const auto& [r1, r2, r3, r4] = ch.r;
  const Rational &a = ch.a, &c = ch.c;
  return mat2(((a + c) * r1 - (a - c) * r4) / (r4 - r3), ((a - c) * r2 - (a + c) * r4) / (r3 - r4),
              ((a + c) * r1 - (a - c) * r3) / (r3 - r4), ((a - c) * r2 - (a + c) * r3) / (r4 - r3));
}

OkuboSystem parametrize_A1(const AccessoryChart& chart) {
  chart.validate();
  OkuboSystem s;
  s.a = chart.a;
  s.b = chart.b;
  s.c = chart.c;
  s.d = chart.d;
  const RationalMatrix J = matrix_J();
  s.A = block2x2(chart.a * J, accessory_block_12(chart), accessory_block_21(chart), chart.b * J);
  return s;
}

// ---------------------------------------------------------------------------
// Recovery

ChartRecovery recover_chart(const RationalMatrix& A, const Rational& a, const Rational& b, const Rational& c,
                            const Rational& d) {
  if (A.rows() != 4 || A.cols() != 4) throw Error(errc::kDimensionMismatch, "coefficient matrix must be 4x4");
  const RationalMatrix J = matrix_J();
  if (!(A.block(0, 0, 2, 2) == a * J)) throw Error(errc::kBlockForm, "upper-left block is not aJ", "A11");
  if (!(A.block(2, 2, 2, 2) == b * J)) throw Error(errc::kBlockForm, "lower-right block is not bJ", "A22");
  if (!(characteristic_polynomial(A) == even_quadratic(c) * even_quadratic(d)))
    throw Error(errc::kInvalidInput, "characteristic polynomial is not (t^2 - c^2)(t^2 - d^2)");

  auto unique_eigenvector = [&](const Rational& xi, const std::string& name) {
    auto basis = left_eigenvectors(A, xi);
    if (basis.size() != 1)
      throw Error(errc::kEigenvectorDegeneracy, "left eigenspace for " + name + " is not one-dimensional", name);
    return basis.front();
  };
  const RationalVector vc = unique_eigenvector(c, "c");
  const RationalVector vm = unique_eigenvector(-c, "-c");

  for (int k = 0; k < 4; ++k) {
    const std::string idx = std::to_string(k + 1);
    if (vc[k].is_zero())
      throw Error(errc::kEigenvectorDegeneracy, "entry " + idx + " of the c-eigenvector vanishes", "v_c^" + idx);
    if (vm[k].is_zero())
      throw Error(errc::kEigenvectorDegeneracy, "entry " + idx + " of the (-c)-eigenvector vanishes",
                  "v_-c^" + idx);
  }
  for (int l : {0, 2}) {
    if ((vm[l] * vc[l + 1] - vm[l + 1] * vc[l]).is_zero()) {
      const std::string pair = std::to_string(l + 1) + "," + std::to_string(l + 2);
      throw Error(errc::kEigenvectorDegeneracy, "eigenvector minor on entries " + pair + " vanishes",
                  "det(" + pair + ")");
    }
  }

  ChartRecovery out;
  out.D = RationalMatrix::diagonal(vc);
  out.chart = AccessoryChart{a, b, c, d, {vm[0] / vc[0], vm[1] / vc[1], vm[2] / vc[2], vm[3] / vc[3]}};
  for (int k = 0; k < 4; ++k) {
    out.v_c[k] = vc[k];
    out.v_minus_c[k] = vm[k];
  }
  const RationalMatrix conj = out.D * A * inverse(out.D);
  if (!(conj == parametrize_A1(out.chart).A))
    throw Error(errc::kInternal, "diagonal conjugation does not reproduce the parametrized matrix");
  return out;
}

// ---------------------------------------------------------------------------
// Cubic blocks and difference systems

EpsilonDelta epsilon_delta(const AccessoryChart& ch) {
  const auto& [r1, r2, r3, r4] = ch.r;
  const Rational &a = ch.a, &b = ch.b, &c = ch.c;
  EpsilonDelta e;
  e.epsilon = b * (a + c) * r1 + b * (a - c) * r2 - a * (b + c) * r3 - a * (b - c) * r4;
  e.delta = r1 * r2 - r3 * r4;
  const Rational den = require_nonzero((r1 - r2) * (r3 - r4), errc::kDegenerateChart, "(r1 - r2)(r3 - r4)");
  e.epsilon_prime = 2 * e.epsilon / den;
  e.delta_prime = 2 * e.delta / den;
  return e;
}

namespace {

// epsilon' [[0, r2], [r1, 0]] - b delta' [[c, a+c], [a-c, -c]]
RationalMatrix accessory_correction(const AccessoryChart& ch, const EpsilonDelta& e) {
  const Rational &a = ch.a, &b = ch.b, &c = ch.c;
  return e.epsilon_prime * mat2(0, ch.r[1], ch.r[0], 0) - b * e.delta_prime * mat2(c, a + c, a - c, -c);
}

PolyMatrix monic_cubic(const RationalMatrix& q, const RationalMatrix& r, const RationalMatrix& s) {
  PolyMatrix out(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      out(i, j) = Poly{s(i, j), r(i, j), q(i, j), Rational(i == j ? 1 : 0)};
  return out;
}

}  // namespace

RationalMatrix block_product_closed_form(const AccessoryChart& ch) {
  const auto e = epsilon_delta(ch);
  const Rational half = (sq(ch.c) + sq(ch.d) - sq(ch.a) - sq(ch.b)) / 2;
  return half * RationalMatrix::identity(2) + accessory_correction(ch, e);
}

CubicBlockDecomposition cubic_blocks(const AccessoryChart& ch) {
  const auto e = epsilon_delta(ch);
  const Rational &a = ch.a, &b = ch.b, &c = ch.c, &d = ch.d;
  const RationalMatrix J = matrix_J();
  const RationalMatrix I = RationalMatrix::identity(2);
  const RationalMatrix corr = accessory_correction(ch, e);
  const RationalMatrix twisted = accessory_block_12(ch) * J * accessory_block_21(ch);
  const Rational half = (sq(a) - sq(b) - sq(c) - sq(d)) / 2;

  CubicBlockDecomposition out;
  out.Q11 = a * J;
  out.R11 = half * I + corr;
  out.S11 = b * twisted - a * sq(b) * J - 2 * a * b * c * e.delta_prime * I;
  out.Qt11 = -a * J;
  out.Rt11 = half * I - corr;
  out.St11 = a * sq(b) * J - b * twisted;
  return out;
}

PolyMatrix CubicBlockDecomposition::A11() const { return monic_cubic(Q11, R11, S11); }
PolyMatrix CubicBlockDecomposition::A11_adjugate() const { return monic_cubic(Qt11, Rt11, St11); }

PolyMatrix resolvent_adjugate(const RationalMatrix& A) { return adjugate(resolvent_matrix(A)); }

std::string to_string(SystemLabel label) {
  switch (label) {
    case SystemLabel::g_at_1: return "g_at_1";
    case SystemLabel::h_at_inf: return "h_at_inf";
    case SystemLabel::g_at_0: return "g_at_0";
    case SystemLabel::h_at_inf_dual: return "h_at_inf_dual";
  }
  return "unknown";
}

std::string to_string(Direction direction) {
  return direction == Direction::forward ? "forward" : "backward";
}

RationalMatrix DifferenceSystem2::step(const Rational& z0) const {
  const Rational den = scalar_denominator(z0);
  if (den.is_zero())
    throw Error(errc::kSingularMatrix, "difference system is singular at z = " + z0.str(), z0.str());
  return evaluate(numerator, z0) * (scalar_numerator(z0) / den);
}

std::pair<DifferenceSystem2, DifferenceSystem2> difference_systems(const AccessoryChart& chart, PointPair pair) {
  const OkuboSystem sys = parametrize_A1(chart);
  const PolyMatrix adj = resolvent_adjugate(sys.A);
  const Poly z = Poly::z();
  const Poly cd = even_quadratic(chart.c) * even_quadratic(chart.d);

  // The diagonal block B(z) of adj(zI - A1) satisfies det B = (z^2 - e^2)(z^2 - c^2)(z^2 - d^2),
  // e = b for the upper block and e = a for the lower one; the g-system inverts B.
  const bool upper = pair == PointPair::one_and_infinity;
  const PolyMatrix block = upper ? adj.block(0, 0, 2, 2) : adj.block(2, 2, 2, 2);
  const Rational e = upper ? chart.b : chart.a;
  if (!(determinant_laplace(block) == even_quadratic(e) * cd))
    throw Error(errc::kInternal, "resolvent block has an unexpected determinant");

  DifferenceSystem2 g;
  g.numerator = adjugate(block);
  g.scalar_numerator = upper ? Poly(-1) : Poly(1);
  g.scalar_denominator = (z + Poly(1)) * even_quadratic(e);
  g.source_direction = Direction::backward;
  g.label = upper ? SystemLabel::g_at_1 : SystemLabel::g_at_0;

  DifferenceSystem2 h;
  h.numerator = -reflect(block);
  h.scalar_numerator = upper ? Poly(1) - z : z - Poly(1);
  h.scalar_denominator = cd;
  h.source_direction = Direction::forward;
  h.label = upper ? SystemLabel::h_at_inf : SystemLabel::h_at_inf_dual;
  return {g, h};
}

std::vector<CrossProduct> SameVerdict::nonzero_cross_products() const {
  std::vector<CrossProduct> out;
  for (const auto& cp : cross_products)
    if (!cp.value.is_zero()) out.push_back(cp);
  return out;
}

SameVerdict substantially_same(const AccessoryChart& chart, PointPair pair) {
  const auto [g, h] = difference_systems(chart, pair);
  SameVerdict v;
  v.pair = pair;
  v.epsilon_delta = epsilon_delta(chart);
  v.by_epsilon_delta = v.epsilon_delta.epsilon.is_zero() && v.epsilon_delta.delta.is_zero();

  const PolyMatrix& bm = g.numerator;
  const PolyMatrix& cm = h.numerator;
  v.by_cross_products = true;
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) {
      const std::size_t j = p / 2, k = p % 2, l = q / 2, m = q % 2;
      CrossProduct cp{int(j) + 1, int(k) + 1, int(l) + 1, int(m) + 1, cm(j, k) * bm(l, m) - bm(j, k) * cm(l, m)};
      if (!cp.value.is_zero()) v.by_cross_products = false;
      v.cross_products.push_back(std::move(cp));
    }
  if (v.by_epsilon_delta != v.by_cross_products)
    throw Error(errc::kInternal, "epsilon/delta criterion and cross-product criterion disagree");
  v.same = v.by_epsilon_delta;
  return v;
}

// ---------------------------------------------------------------------------
// Solving for the special accessory parameters

std::string to_string(Branch branch) {
  switch (branch) {
    case Branch::via_r4: return "via-r4";
    case Branch::via_r3: return "via-r3";
    case Branch::automatic: return "auto";
  }
  return "unknown";
}

Rational branch_factor(const Rational& a, const Rational& b, const Rational& c, const Rational& d, int s1, int s2) {
  return sq(a + s1 * b + s2 * c) - sq(d);
}

RationalMatrix special_accessory_matrix(const Rational& a, const Rational& b, const Rational& c,
                                        const Rational& d) {
  require_nonzero(a, errc::kDegenerateParameters, "a");
  require_nonzero(b, errc::kDegenerateParameters, "b");
  auto P = [&](int s1, int s2) { return branch_factor(a, b, c, d, s1, s2); };
  const Rational fa = 4 * a, fb = 4 * b;
  const RationalMatrix J = matrix_J();
  const RationalMatrix A12 = mat2(P(-1, 1) / fa, P(1, 1) / fa, -P(1, -1) / fa, -P(-1, -1) / fa);
  const RationalMatrix A21 = mat2(P(-1, -1) / fb, P(1, 1) / fb, -P(1, -1) / fb, -P(-1, 1) / fb);
  return block2x2(a * J, A12, A21, b * J);
}

namespace {

std::optional<AccessoryChart> branch_chart(const Rational& a, const Rational& b, const Rational& c,
                                           const Rational& d, Branch branch, const Rational& scale) {
  auto P = [&](int s1, int s2) { return branch_factor(a, b, c, d, s1, s2); };
  const Rational pp = P(1, 1), mm = P(-1, -1), pm = P(1, -1), mp = P(-1, 1);
  AccessoryChart ch{a, b, c, d, {}};
  if (branch == Branch::via_r4) {
    if (pp.is_zero() || mm.is_zero()) return std::nullopt;
    ch.r = {pm / pp * scale, mp / mm * scale, pm * mp / (pp * mm) * scale, scale};
  } else {
    if (mp.is_zero() || pm.is_zero()) return std::nullopt;
    ch.r = {mm / mp * scale, pp / pm * scale, scale, pp * mm / (pm * mp) * scale};
  }
  return ch;
}

}  // namespace

AccessorySolution solve_accessory(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                                  Branch branch, const Rational& scale) {
  require_admissible(a, b, c, d);
  if (scale.is_zero()) throw Error(errc::kInvalidInput, "scale must be nonzero", "scale");

  std::optional<AccessoryChart> chart;
  Branch used = branch;
  if (branch == Branch::automatic) {
    used = Branch::via_r4;
    chart = branch_chart(a, b, c, d, used, scale);
    if (!chart) {
      used = Branch::via_r3;
      chart = branch_chart(a, b, c, d, used, scale);
    }
  } else {
    chart = branch_chart(a, b, c, d, branch, scale);
  }
  if (!chart) throw Error(errc::kDegenerateChart, "branch " + to_string(used) + " has a vanishing denominator");
  if (auto v = chart->r_condition_violation())
    throw Error(errc::kDegenerateChart, "special chart violates the r-condition: " + *v, *v);

  const auto e = epsilon_delta(*chart);
  if (!e.epsilon.is_zero() || !e.delta.is_zero())
    throw Error(errc::kInternal, "special chart does not satisfy epsilon = delta = 0");

  AccessorySolution out;
  out.chart = *chart;
  out.branch_used = used;
  out.A1 = parametrize_A1(*chart).A;  // validates the d-condition
  if (!(out.A1 == special_accessory_matrix(a, b, c, d)))
    throw Error(errc::kInternal, "special chart does not reproduce the closed-form matrix");
  return out;
}

// ---------------------------------------------------------------------------
// Realization by a product of Gauss functions

std::array<Rational, 4> realized_exponents(const HGParams& p) {
  return {lambda("++++", p), lambda("-+-+", p), lambda("++--", p), lambda("+--+", p)};
}

RationalMatrix realization_D1(const HGParams& p) {
  const Rational l1 = require_nonzero(lambda("+000", p), errc::kDegenerateParameters, "lambda(+000)");
  const Rational l2 = require_nonzero(lambda("0+00", p), errc::kDegenerateParameters, "lambda(0+00)");
  const Rational lmp = lambda("-+++", p), lpm = lambda("+-++", p);
  return RationalMatrix::diagonal({Rational(1), lmp * lpm / (4 * l1 * l2), lpm / (2 * l1), lmp / (2 * l2)});
}

RationalMatrix realized_A1_lambda_form(const HGParams& p) {
  auto L = [&](const char* s) { return lambda(s, p); };
  const Rational a = L("++++"), b = L("-+-+");
  const Rational m4 = require_nonzero(L("----"), errc::kDegenerateParameters, "lambda(----)");
  const Rational pm = require_nonzero(L("+-+-"), errc::kDegenerateParameters, "lambda(+-+-)");
  require_nonzero(a, errc::kDegenerateParameters, "lambda(++++)");
  require_nonzero(b, errc::kDegenerateParameters, "lambda(-+-+)");
  const Rational x1 = 2 * L("+000") * L("+++-"), x2 = 2 * L("0+00") * L("++-+");
  const Rational x3 = 2 * L("000+") * L("-+++"), x4 = 2 * L("00+0") * L("+-++");
  const RationalMatrix J = matrix_J();
  return block2x2(a * J, mat2(x1 / a, x2 / a, x3 / m4, x4 / m4), mat2(x4 / b, x2 / b, x3 / pm, x1 / pm), b * J);
}

Realization realize(const HGParams& p) {
  if (!p.okubo_constrained())
    throw Error(errc::kInvalidInput, "gamma1 = gamma2 = (alpha1 + alpha2 + beta1 + beta2)/2 + 1 is required");
  Realization out;
  const auto ex = realized_exponents(p);
  out.a = ex[0];
  out.b = ex[1];
  out.c = ex[2];
  out.d = ex[3];
  require_admissible(out.a, out.b, out.c, out.d);

  auto L = [&](const char* s) { return lambda(s, p); };
  out.cond_a_product = branch_factor(out.a, out.b, out.c, out.d, 1, 1) *
                       branch_factor(out.a, out.b, out.c, out.d, -1, -1);
  out.cond_b_product = branch_factor(out.a, out.b, out.c, out.d, 1, -1) *
                       branch_factor(out.a, out.b, out.c, out.d, -1, 1);
  out.cond_a_lambda_identity = out.cond_a_product == 64 * L("0+00") * L("00+0") * L("+-++") * L("++-+");
  out.cond_b_lambda_identity = out.cond_b_product == 64 * L("+000") * L("000+") * L("-+++") * L("+++-");
  if (out.cond_a_product.is_zero() && out.cond_b_product.is_zero())
    throw Error(errc::kDegenerateParameters, "both branch conditions fail");

  out.A1 = special_accessory_matrix(out.a, out.b, out.c, out.d);
  out.A1_lambda_form_matches = out.A1 == realized_A1_lambda_form(p);
  out.A0 = build_okubo_zero(p).system.A;
  out.D1 = realization_D1(p);
  out.verdict = inverse(out.D1) * out.A1 * out.D1 == out.A0;
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic identities

namespace {

struct Ring {
  std::size_t n;
  SymPoly var(std::size_t i) const { return SymPoly::variable(n, i); }
  SymPoly cst(const Rational& v) const { return SymPoly(n, v); }
};

SymbolicIdentity make_identity(std::string name, const SymPoly& lhs, const SymPoly& rhs,
                               const std::vector<std::string>& names) {
  const SymPoly diff = lhs - rhs;
  return {std::move(name), diff.is_zero(), diff.str(names)};
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

}  // namespace

SymbolicIdentity conditional_vanishing_identity(int s1, int s2) {
  if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1)) throw Error(errc::kInvalidInput, "signs must be +1 or -1");
  const Ring R{4};
  const SymPoly a = R.var(0), b = R.var(1), c = R.var(2), d = R.var(3);
  const SymPoly d2 = d * d;
  const SymPoly lhs = ((a + Rational(s1) * b - Rational(s2) * c).pow(2) - d2) *
                      ((a - Rational(s1) * b + Rational(s2) * c).pow(2) - d2);
  const SymPoly reduced = lhs.substitute_square(3, (a + Rational(s1) * b + Rational(s2) * c).pow(2));
  const SymPoly rhs = Rational(16 * s1 * s2) * b * c * (a + Rational(s1) * b) * (a + Rational(s2) * c);
  return make_identity("conditional vanishing (" + sign_char(s1) + "," + sign_char(s2) + ")", reduced, rhs,
                       {"a", "b", "c", "d"});
}

SymbolicIdentity delta_factorization_identity() {
  const Ring R{6};
  const SymPoly a = R.var(0), b = R.var(1), c = R.var(2), d = R.var(3), r3 = R.var(4), r4 = R.var(5);
  auto P = [&](int s1, int s2) { return (a + Rational(s1) * b + Rational(s2) * c).pow(2) - d * d; };
  // 4b(a+c) r1 and 4b(a-c) r2 after eliminating through epsilon = 0 and the d-condition.
  const SymPoly n1 = -(P(-1, -1) * r3 - P(1, -1) * r4);
  const SymPoly n2 = P(1, 1) * r3 - P(-1, 1) * r4;
  const SymPoly lhs = n1 * n2 - Rational(16) * b * b * (a * a - c * c) * r3 * r4;
  const SymPoly rhs = -((P(1, 1) * P(-1, -1)) * r3 - (P(1, -1) * P(-1, 1)) * r4) * (r3 - r4);
  return make_identity("delta factorization", lhs, rhs, {"a", "b", "c", "d", "r3", "r4"});
}

std::vector<SymbolicIdentity> d_condition_rewrites() {
  const Ring R{7};
  const SymPoly a = R.var(0), b = R.var(1), c = R.var(2), r1 = R.var(3), r2 = R.var(4), r3 = R.var(5),
                r4 = R.var(6);
  const std::vector<std::string> names{"a", "b", "c", "r1", "r2", "r3", "r4"};
  const Rational four(4);
  const SymPoly ab4 = four * a * b;
  const SymPoly numerator = (a + b + c).pow(2) * r1 * r3 - (a - b + c).pow(2) * r1 * r4 -
                            (a - b - c).pow(2) * r2 * r3 + (a + b - c).pow(2) * r2 * r4 - ab4 * r1 * r2 -
                            ab4 * r3 * r4;
  const SymPoly eps = b * (a + c) * r1 + b * (a - c) * r2 - a * (b + c) * r3 - a * (b - c) * r4;
  const SymPoly del = r1 * r2 - r3 * r4;
  const SymPoly first =
      (four * b * (a + c) * r1 + (a - b - c).pow(2) * r3 - (a + b - c).pow(2) * r4) * (r1 - r2) -
      four * r1 * eps + ab4 * del;
  const SymPoly second =
      (-four * b * (a - c) * r2 + (a + b + c).pow(2) * r3 - (a - b + c).pow(2) * r4) * (r1 - r2) -
      four * r2 * eps + ab4 * del;
  return {make_identity("d-condition through r1", numerator, first, names),
          make_identity("d-condition through r2", numerator, second, names)};
}

}  // namespace okubo
