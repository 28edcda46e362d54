#include "okubo/hg_builder.hpp"

#include "okubo/error.hpp"

namespace okubo {

namespace {

Rational checked_div(const Rational& num, const Rational& den, const std::string& what) {
  if (den.is_zero()) throw Error(errc::kDegenerateParameters, "degenerate parameters", what + " = 0");
  return num / den;
}

void require_okubo(const HGParams& p) {
  if (!p.okubo_constrained()) {
    throw Error(errc::kInvalidInput, "parameters must satisfy gamma1 = gamma2 = (a1+a2+b1+b2)/2 + 1");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Parameters and lambda notation

Rational HGParams::okubo_gamma(const Rational& alpha1, const Rational& beta1, const Rational& alpha2,
                               const Rational& beta2) {
  return (alpha1 + alpha2 + beta1 + beta2) / Rational(2) + Rational(1);
}

HGParams HGParams::okubo(const Rational& alpha1, const Rational& beta1, const Rational& alpha2,
                         const Rational& beta2) {
  Rational g = okubo_gamma(alpha1, beta1, alpha2, beta2);
  return HGParams{alpha1, beta1, alpha2, beta2, g, g};
}

bool HGParams::okubo_constrained() const {
  Rational g = okubo_gamma(alpha1, beta1, alpha2, beta2);
  return gamma1 == g && gamma2 == g;
}

LambdaIndex LambdaIndex::parse(std::string_view pattern) {
  if (pattern.size() != 4) throw Error(errc::kInvalidInput, "lambda index needs four signs", std::string(pattern));
  std::array<Sign, 4> s{};
  for (std::size_t k = 0; k < 4; ++k) {
    switch (pattern[k]) {
      case '+': s[k] = Sign::plus; break;
      case '-': s[k] = Sign::minus; break;
      case '0': s[k] = Sign::zero; break;
      default: throw Error(errc::kInvalidInput, "lambda index signs must be +, - or 0", std::string(pattern));
    }
  }
  return LambdaIndex(s[0], s[1], s[2], s[3]);
}

LambdaIndex LambdaIndex::flipped() const {
  auto flip = [](Sign s) { return static_cast<Sign>(-static_cast<int>(s)); };
  return LambdaIndex(flip(s_[0]), flip(s_[1]), flip(s_[2]), flip(s_[3]));
}

std::string LambdaIndex::str() const {
  std::string out;
  for (Sign s : s_) out += s == Sign::plus ? '+' : (s == Sign::minus ? '-' : '0');
  return out;
}

Rational lambda(const LambdaIndex& idx, const HGParams& p) {
  const std::array<const Rational*, 4> vals = {&p.alpha1, &p.alpha2, &p.beta1, &p.beta2};
  Rational acc(0);
  for (std::size_t k = 0; k < 4; ++k) {
    switch (idx.signs()[k]) {
      case Sign::plus: acc += *vals[k]; break;
      case Sign::minus: acc -= *vals[k]; break;
      case Sign::zero: break;
    }
  }
  return acc / Rational(2);
}

Rational lambda(std::string_view pattern, const HGParams& p) { return lambda(LambdaIndex::parse(pattern), p); }

// ---------------------------------------------------------------------------
// Product system

FuchsianSystem build_product_system(const HGParams& p) {
  const Rational one(1), zero(0);
  const Rational& g1 = p.gamma1;
  const Rational& g2 = p.gamma2;
  RationalMatrix h0{{zero, one, one, zero},
                    {zero, one - g1, zero, one},
                    {zero, zero, one - g2, one},
                    {zero, zero, zero, Rational(2) - g1 - g2}};
  const Rational ab1 = p.alpha1 * p.beta1;
  const Rational ab2 = p.alpha2 * p.beta2;
  RationalMatrix h1{{zero, zero, zero, zero},
                    {-ab1, g1 - one - p.alpha1 - p.beta1, zero, zero},
                    {-ab2, zero, g2 - one - p.alpha2 - p.beta2, zero},
                    {zero, -ab2, -ab1, g1 + g2 - Rational(2) - p.alpha1 - p.alpha2 - p.beta1 - p.beta2}};
  return FuchsianSystem{std::move(h0), std::move(h1), "hypergeometric-product"};
}

Poly phi_polynomial(const HGParams& p) {
  return poly_from_roots({p.alpha1 + p.alpha2, p.beta1 + p.beta2, p.alpha1 + p.beta2, p.beta1 + p.alpha2});
}

RiemannScheme riemann_scheme(const HGParams& p) {
  const Rational one(1);
  RiemannScheme s;
  s.at_zero = {Rational(0), one - p.gamma1, one - p.gamma2, Rational(2) - p.gamma1 - p.gamma2};
  s.at_one = {Rational(0), p.gamma1 - one - p.alpha1 - p.beta1, p.gamma2 - one - p.alpha2 - p.beta2,
              p.gamma1 + p.gamma2 - Rational(2) - p.alpha1 - p.alpha2 - p.beta1 - p.beta2};
  s.at_infinity = {p.alpha1 + p.alpha2, p.beta1 + p.beta2, p.alpha1 + p.beta2, p.beta1 + p.alpha2};
  return s;
}

FuchsianSystem build_okubo_substituted(const HGParams& p) {
  HGParams q = HGParams::okubo(p.alpha1, p.beta1, p.alpha2, p.beta2);
  FuchsianSystem s = build_product_system(q);
  s.tag = "okubo-substituted";
  return s;
}

FuchsianSystem okubo_residues_lambda_form(const HGParams& p) {
  auto L = [&](std::string_view s) { return lambda(s, p); };
  const Rational zero(0), one(1), four(4);
  const Rational lmmmm = L("----");
  RationalMatrix h0 = RationalMatrix::identity(4) * lmmmm +
                      RationalMatrix{{L("++++"), one, one, zero},
                                     {zero, zero, zero, one},
                                     {zero, zero, zero, one},
                                     {zero, zero, zero, lmmmm}};
  const Rational k13 = -four * L("+000") * L("00+0");
  const Rational k24 = -four * L("0+00") * L("000+");
  RationalMatrix h1{{zero, zero, zero, zero},
                    {k13, L("-+-+"), zero, zero},
                    {k24, zero, L("+-+-"), zero},
                    {zero, k24, k13, zero}};
  return FuchsianSystem{std::move(h0), std::move(h1), "okubo-lambda-form"};
}

// ---------------------------------------------------------------------------
// Transformation to the Okubo normal form

RationalMatrix build_P(const HGParams& p) {
  auto L = [&](std::string_view s) { return lambda(s, p); };
  const Rational zero(0), one(1), four(4);
  const Rational lm = L("----");
  return RationalMatrix{{one, one, zero, zero},
                        {zero, lm, L("+-+-"), zero},
                        {zero, lm, zero, L("-+-+")},
                        {zero, lm * lm, four * L("0+00") * L("000+"), four * L("+000") * L("00+0")}};
}

Rational det_P_formula(const HGParams& p) {
  return lambda("----", p) * lambda("++--", p) * lambda("+-+-", p) * lambda("+--+", p);
}

RationalMatrix closed_form_P_inverse(const HGParams& p) {
  auto L = [&](std::string_view s) { return lambda(s, p); };
  auto div = [](const Rational& n, const Rational& d, const char* what) { return checked_div(n, d, what); };
  const Rational zero(0), one(1), four(4);
  const Rational k24 = four * L("0+00") * L("000+");
  const Rational k13 = four * L("+000") * L("00+0");
  const Rational pref = L("++--") * L("+--+");
  RationalMatrix inv{
      {pref, div(k24, L("++++"), "lambda(++++)"), div(k13, L("----"), "lambda(----)"),
       div(L("+-+-"), L("----"), "lambda(----)")},
      {zero, div(k24, L("----"), "lambda(----)"), div(k13, L("++++"), "lambda(++++)"),
       div(L("-+-+"), L("----"), "lambda(----)")},
      {zero, div(L("-+++") * L("++-+"), L("-+-+"), "lambda(-+-+)"), div(k13, L("+-+-"), "lambda(+-+-)"), one},
      {zero, div(k24, L("+-+-"), "lambda(+-+-)"), div(L("+-++") * L("+++-"), L("-+-+"), "lambda(-+-+)"), -one}};
  return inv * checked_div(one, pref, "lambda(++--) lambda(+--+)");
}

RationalMatrix closed_form_A0(const HGParams& p) {
  auto L = [&](std::string_view s) { return lambda(s, p); };
  auto div = [](const Rational& n, const Rational& d, const char* what) { return checked_div(n, d, what); };
  const Rational four(4);
  const Rational k24 = four * L("0+00") * L("000+");
  const Rational k13 = four * L("+000") * L("00+0");
  const Rational u = L("+-++") * L("+++-");
  const Rational v = L("-+++") * L("++-+");
  const RationalMatrix J = matrix_J();
  RationalMatrix a12{{div(u, L("++++"), "lambda(++++)"), div(v, L("++++"), "lambda(++++)")},
                     {div(k24, L("----"), "lambda(----)"), div(k13, L("----"), "lambda(----)")}};
  RationalMatrix a21{{div(k13, L("-+-+"), "lambda(-+-+)"), div(v, L("-+-+"), "lambda(-+-+)")},
                     {div(k24, L("+-+-"), "lambda(+-+-)"), div(u, L("+-+-"), "lambda(+-+-)")}};
  return block2x2(J * L("++++"), a12, a21, J * L("-+-+"));
}

OkuboZero build_okubo_zero(const HGParams& p) {
  require_okubo(p);
  const Rational detp = det_P_formula(p);
  if (detp.is_zero()) {
    throw Error(errc::kDegenerateParameters, "degenerate parameters",
                "det P = lambda(----) lambda(++--) lambda(+-+-) lambda(+--+) = 0");
  }
  FuchsianSystem tilde = build_okubo_substituted(p);
  OkuboZero out;
  out.P = build_P(p);
  out.P_inverse = inverse(out.P);
  const RationalMatrix shifted = tilde.residue_at_0 - RationalMatrix::identity(4) * lambda("----", p);
  out.conjugated_zero_residue = out.P_inverse * shifted * out.P;
  out.conjugated_one_residue = out.P_inverse * tilde.residue_at_1 * out.P;
  out.system.A = out.conjugated_zero_residue + out.conjugated_one_residue;
  out.system.a = lambda("++++", p);
  out.system.b = lambda("-+-+", p);
  out.system.c = lambda("++--", p);
  out.system.d = lambda("+--+", p);
  return out;
}

// ---------------------------------------------------------------------------
// Diagonalizing matrix R

RationalMatrix build_R(const HGParams& p) {
  auto L = [&](std::string_view s) { return lambda(s, p); };
  const Rational l1 = L("+000"), l2 = L("0+00"), l3 = L("00+0"), l4 = L("000+");
  if ((l1 * l2 * l3 * l4).is_zero()) {
    throw Error(errc::kDegenerateParameters, "degenerate parameters",
                "lambda(+000) lambda(0+00) lambda(00+0) lambda(000+) = 0");
  }
  if (det_R_formula(p).is_zero()) throw Error(errc::kDegenerateParameters, "degenerate parameters", "det R = 0");
  const Rational one(1), two(2), four(4);
  const Rational mppp = L("-+++"), pmpp = L("+-++"), ppmp = L("++-+"), pppm = L("+++-");
  return RationalMatrix{
      {one, mppp * pmpp / (four * l1 * l2), pmpp / (two * l1), mppp / (two * l2)},
      {one, ppmp * pppm / (four * l3 * l4), pppm / (two * l3), ppmp / (two * l4)},
      {one, mppp * pppm / (four * l1 * l4), pppm / (two * l1), mppp / (two * l4)},
      {one, pmpp * ppmp / (four * l2 * l3), pmpp / (two * l3), ppmp / (two * l2)}};
}

Rational det_R_formula(const HGParams& p) {
  auto L = [&](std::string_view s) { return lambda(s, p); };
  const Rational den = Rational(16) * square(L("+000")) * square(L("0+00")) * square(L("00+0")) * square(L("000+"));
  const Rational num =
      L("++++") * L("++--") * L("+-+-") * L("+--+") * square(L("+0-0")) * square(L("0+0-"));
  return checked_div(num, den, "lambda(+000) lambda(0+00) lambda(00+0) lambda(000+)");
}

RationalMatrix closed_form_RP_inverse(const HGParams& p) {
  auto inv = [](const Rational& x, const char* what) { return checked_div(Rational(1), x, what); };
  const Rational one(1);
  const Rational ia1 = inv(p.alpha1, "alpha1"), ia2 = inv(p.alpha2, "alpha2");
  const Rational ib1 = inv(p.beta1, "beta1"), ib2 = inv(p.beta2, "beta2");
  return RationalMatrix{{one, ia1, ia2, ia1 * ia2},
                        {one, ib1, ib2, ib1 * ib2},
                        {one, ia1, ib2, ia1 * ib2},
                        {one, ib1, ia2, ib1 * ia2}};
}

RationalMatrix diagonal_form(const HGParams& p) {
  const Rational c = lambda("++--", p);
  const Rational d = lambda("+--+", p);
  return RationalMatrix::diagonal({c, -c, d, -d});
}

}  // namespace okubo
