#include <doctest.h>

#include "okubo/error.hpp"
#include "okubo/verify.hpp"

using namespace okubo;

TEST_CASE("sampler draws are reproducible and bounded") {
  Sampler a(5), b(5);
  for (int i = 0; i < 200; ++i) {
    const Rational x = a.next();
    CHECK(x == b.next());
    CHECK(!x.is_zero());
    CHECK(abs(x.numerator()) <= 50);
    CHECK(x.denominator() <= 50);
  }
  const auto e = a.admissible();
  CHECK(is_admissible(e[0], e[1], e[2], e[3]));
  CHECK(a.special_chart().satisfies_d_condition());
}

TEST_CASE("rejection sampling gives up after the attempt budget") {
  Sampler s(1);
  int calls = 0;
  try {
    s.draw([&]() -> int { ++calls; throw Error(errc::kDegenerateParameters, "never"); }, "impossible");
    FAIL("expected internal_inconsistency");
  } catch (const Error& e) {
    CHECK(e.code() == errc::kInternal);
    CHECK(e.context() == "impossible");
  }
  CHECK(calls == Sampler::kMaxAttempts);
}

TEST_CASE("criteria are independent of run order") {
  const CriterionResult first = run_criterion("1g", 11);
  run_criterion("1a", 11);
  const CriterionResult again = run_criterion("1g", 11);
  CHECK(first.passed);
  CHECK(first.cases == again.cases);
  CHECK(first.first_failure == again.first_failure);
  CHECK_THROWS_AS(run_criterion("9z", 1), Error);
}
