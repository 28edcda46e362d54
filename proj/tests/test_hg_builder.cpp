#include <doctest.h>

#include "okubo/error.hpp"
#include "okubo/hg_builder.hpp"
#include "support.hpp"

using namespace okubo;
using okubo::testing::faddeev_leverrier;
using okubo::testing::q;
using okubo::testing::qm;
using okubo::testing::RationalSampler;

namespace {

// (alpha1, alpha2, beta1, beta2) = (1/3, 1/7, 1/5, 1/11)
HGParams sample() { return HGParams::okubo(q("1/3"), q("1/5"), q("1/7"), q("1/11")); }

Poly roots_poly(const std::array<Rational, 4>& r) { return poly_from_roots({r[0], r[1], r[2], r[3]}); }

std::optional<HGParams> random_constrained(RationalSampler& s) {
  const HGParams p = HGParams::okubo(s.next(), s.next(), s.next(), s.next());
  for (const char* idx : {"----", "++--", "+-+-", "+--+", "+000", "0+00", "00+0", "000+"})
    if (lambda(idx, p).is_zero()) return std::nullopt;
  if (lambda("+0-0", p).is_zero() || lambda("0+0-", p).is_zero() || lambda("++++", p).is_zero())
    return std::nullopt;
  return p;
}

}  // namespace

TEST_CASE("lambda values") {
  const HGParams p = sample();
  CHECK(lambda("++++", p) == (q("1/3") + q("1/7") + q("1/5") + q("1/11")) / 2);
  CHECK(lambda("----", p) == -lambda("++++", p));
  CHECK(lambda("+000", p) == q("1/6"));
  CHECK(lambda("0+00", p) == q("1/14"));  // second slot is alpha2
  CHECK(lambda("++--", p) == q("107/1155"));
  CHECK(lambda("+--+", p) == q("47/1155"));
  CHECK_THROWS_AS(LambdaIndex::parse("++x+"), Error);
  CHECK_THROWS_AS(LambdaIndex::parse("+++"), Error);

  // all 81 sign patterns are antisymmetric under flipping
  const char signs[3] = {'+', '-', '0'};
  int count = 0;
  for (char s1 : signs)
    for (char s2 : signs)
      for (char s3 : signs)
        for (char s4 : signs) {
          const std::string pat{s1, s2, s3, s4};
          const LambdaIndex idx = LambdaIndex::parse(pat);
          CHECK(idx.str() == pat);
          CHECK(lambda(idx.flipped(), p) == -lambda(idx, p));
          ++count;
        }
  CHECK(count == 81);
}

TEST_CASE("product system residues and spectral data") {
  HGParams p = sample();
  p.gamma1 = q("2/9");
  p.gamma2 = q("5/13");
  const FuchsianSystem sys = build_product_system(p);
  CHECK(sys.residue_at_0(0, 1) == 1);

  const Rational sigma = p.alpha1 + p.alpha2 + p.beta1 + p.beta2;
  CHECK(sys.residue_at_1.trace() == (p.gamma1 + p.gamma2 - 2 - sigma) + (p.gamma1 - 1 - p.alpha1 - p.beta1) +
                                        (p.gamma2 - 1 - p.alpha2 - p.beta2));

  // det(tI + H0 + H1) = phi(t)
  const Poly phi = faddeev_leverrier(-(sys.residue_at_0 + sys.residue_at_1));
  const Poly expected = poly_from_roots({p.alpha1 + p.alpha2, p.beta1 + p.beta2, p.alpha1 + p.beta2,
                                         p.beta1 + p.alpha2});
  CHECK(phi == expected);
  CHECK(phi_polynomial(p) == expected);

  const RiemannScheme rs = riemann_scheme(p);
  CHECK(faddeev_leverrier(sys.residue_at_0) == roots_poly(rs.at_zero));
  CHECK(faddeev_leverrier(sys.residue_at_1) == roots_poly(rs.at_one));
  CHECK(faddeev_leverrier(sys.residue_at_infinity()) == roots_poly(rs.at_infinity));
  CHECK(roots_poly(rs.at_zero) == poly_from_roots({0, 1 - p.gamma1, 1 - p.gamma2, 2 - p.gamma1 - p.gamma2}));
  CHECK(roots_poly(rs.at_one) == poly_from_roots({0, p.gamma1 - 1 - p.alpha1 - p.beta1,
                                                  p.gamma2 - 1 - p.alpha2 - p.beta2,
                                                  p.gamma1 + p.gamma2 - 2 - sigma}));
}

TEST_CASE("substituted residues agree with the lambda form") {
  RationalSampler s(12);
  for (int i = 0; i < 20; ++i) {
    HGParams p{s.next(), s.next(), s.next(), s.next(), s.next(), s.next()};
    const FuchsianSystem sub = build_okubo_substituted(p);
    const FuchsianSystem lam = okubo_residues_lambda_form(p);
    CHECK(sub.residue_at_0 == lam.residue_at_0);
    CHECK(sub.residue_at_1 == lam.residue_at_1);
  }
}

TEST_CASE("Okubo normal form at the sample point") {
  const HGParams p = sample();
  const OkuboZero oz = build_okubo_zero(p);
  const RationalMatrix A0 = qm({{"443/1155", "0", "93964/511665", "12296/511665"},
                                {"0", "-443/1155", "-15/443", "-77/443"},
                                {"-77/173", "-12296/199815", "-173/1155", "0"},
                                {"15/173", "93964/199815", "0", "173/1155"}});
  CHECK(oz.system.A == A0);
  CHECK(oz.system.A == closed_form_A0(p));
  CHECK(oz.P * oz.P_inverse == RationalMatrix::identity(4));
  CHECK(oz.P_inverse == closed_form_P_inverse(p));
  CHECK(determinant(oz.P) == det_P_formula(p));
  for (std::size_t r = 2; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(oz.conjugated_zero_residue(r, c) == 0);
  CHECK(oz.system.has_block_form());
  CHECK(oz.system.has_expected_spectrum());
  CHECK(oz.system.a == lambda("++++", p));
  CHECK(oz.system.b == lambda("-+-+", p));
}

TEST_CASE("diagonalizing matrix R") {
  const HGParams p = sample();
  const RationalMatrix R = build_R(p);
  const RationalMatrix A0 = build_okubo_zero(p).system.A;
  CHECK(R * A0 * inverse(R) == diagonal_form(p));
  CHECK(determinant(R) == det_R_formula(p));
  const RationalMatrix RPinv = R * build_okubo_zero(p).P_inverse;
  CHECK(RPinv == qm({{"1", "3", "7", "21"}, {"1", "5", "11", "55"}, {"1", "3", "11", "33"}, {"1", "5", "7", "35"}}));
  CHECK(RPinv == closed_form_RP_inverse(p));
  CHECK(RPinv(0, 1) == 1 / p.alpha1);
  CHECK(RPinv(1, 3) == 1 / (p.beta1 * p.beta2));
}

TEST_CASE("random constrained parameters") {
  RationalSampler s(21);
  int done = 0;
  while (done < 50) {
    const auto p = random_constrained(s);
    if (!p) continue;
    const OkuboZero oz = build_okubo_zero(*p);
    const Rational c = lambda("++--", *p), d = lambda("+--+", *p);
    CHECK(faddeev_leverrier(oz.system.A) == Poly{-c * c, 0, 1} * Poly{-d * d, 0, 1});
    CHECK(oz.system.A == closed_form_A0(*p));
    CHECK(oz.P_inverse == closed_form_P_inverse(*p));
    CHECK(determinant(oz.P) == det_P_formula(*p));
    if (!det_R_formula(*p).is_zero()) {
      const RationalMatrix R = build_R(*p);
      CHECK(R * oz.system.A * inverse(R) == diagonal_form(*p));
      CHECK(determinant(R) == det_R_formula(*p));
      CHECK(R * oz.P_inverse == closed_form_RP_inverse(*p));
    }
    ++done;
  }
}

TEST_CASE("degenerate parameters are rejected") {
  // lambda(----) = 0 makes P singular
  const HGParams p = HGParams::okubo(q("1/3"), q("-1/3"), q("1/7"), q("-1/7"));
  try {
    build_okubo_zero(p);
    FAIL("expected degenerate_parameters");
  } catch (const Error& e) {
    CHECK(e.code() == errc::kDegenerateParameters);
  }
  HGParams loose = sample();
  loose.gamma1 += 1;
  CHECK_FALSE(loose.okubo_constrained());
  CHECK_THROWS_AS(build_okubo_zero(loose), Error);
}
