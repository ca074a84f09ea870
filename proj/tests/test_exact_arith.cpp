#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hocard/power_product.hpp"
#include "hocard/rational.hpp"

using namespace hocard;

namespace {

PowerProduct pp(std::initializer_list<std::pair<long long, Rational>> factors) {
  PowerProduct out;
  for (const auto& [p, e] : factors) out = out * PowerProduct::factor(p, e);
  return out;
}

}  // namespace

TEST_CASE("rational normalization and arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(5, 2).to_string() == "5/2");
  CHECK(Rational(-4, 2).to_string() == "-2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("power product of a rational factorizes") {
  CHECK(PowerProduct::from_rational(Rational(12)) ==
        pp({{2, Rational(2)}, {3, Rational(1)}}));
  CHECK(PowerProduct::from_rational(Rational(1)) == PowerProduct::one());
  CHECK(PowerProduct::from_rational(Rational(5, 6)) ==
        pp({{5, Rational(1)}, {2, Rational(-1)}, {3, Rational(-1)}}));
  CHECK_THROWS_AS(PowerProduct::from_rational(Rational(0)), std::domain_error);
  CHECK_THROWS_AS(PowerProduct::from_rational(Rational(-3)), std::domain_error);
}

TEST_CASE("power product combine and normalize") {
  auto half_pow = PowerProduct::factor(2, Rational(1, 2));
  CHECK(half_pow * half_pow == pp({{2, Rational(1)}}));

  auto a = pp({{2, Rational(2, 3)}, {3, Rational(1, 2)}});
  CHECK(a / a == PowerProduct::one());
  CHECK(a * pp({{2, Rational(1, 3)}}) ==
        pp({{2, Rational(1)}, {3, Rational(1, 2)}}));
}

TEST_CASE("power product exponentiation") {
  auto twelve = pp({{2, Rational(2)}, {3, Rational(1)}});
  CHECK(twelve.pow(Rational(1, 2)) == pp({{2, Rational(1)}, {3, Rational(1, 2)}}));
  CHECK(twelve.pow(Rational(0)) == PowerProduct::one());
  CHECK(PowerProduct::from_rational(Rational(1, 2)).pow(Rational(1, 3)) ==
        pp({{2, Rational(-1, 3)}}));
}

TEST_CASE("log2 reinterprets exponents as coefficients") {
  CHECK(pp({{2, Rational(3, 2)}}).log2() == ExactLog::term(2, Rational(3, 2)));
  CHECK(PowerProduct::one().log2() == ExactLog::zero());

  auto l = pp({{2, Rational(2, 3)}, {3, Rational(1, 2)}}).log2();
  double expect = 2.0 / 3.0 + 0.5 * std::log2(3.0);
  CHECK(l.approx() == doctest::Approx(expect).epsilon(1e-12));
  CHECK(l.approx() == doctest::Approx(1.4591479).epsilon(1e-6));
}

TEST_CASE("numeric evaluation") {
  CHECK(pp({{2, Rational(1)}}).approx() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(PowerProduct::one().approx() == doctest::Approx(1.0).epsilon(1e-12));
  double expect = std::pow(2.0, 2.0 / 3.0) * std::sqrt(3.0);
  auto a = pp({{2, Rational(2, 3)}, {3, Rational(1, 2)}});
  CHECK(a.approx() == doctest::Approx(expect).epsilon(1e-12));
  CHECK(a.approx() == doctest::Approx(2.7494593).epsilon(1e-6));
}

TEST_CASE("from_rational is a monoid homomorphism") {
  std::mt19937_64 rng(12345);
  auto random_rational = [&]() {
    long long num = 1 + rng() % 60;
    long long den = 1 + rng() % 60;
    return Rational(num, den);
  };
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = random_rational();
    Rational b = random_rational();
    CHECK(PowerProduct::from_rational(a * b) ==
          PowerProduct::from_rational(a) * PowerProduct::from_rational(b));
  }
}

TEST_CASE("structural equality separates values numerically") {
  // Bounded instance family: exponents n/d with |n| <= 2, d <= 3 over {2,3,5}.
  std::vector<PowerProduct> family;
  std::vector<Rational> exps;
  for (int n = -2; n <= 2; ++n) {
    for (int d = 1; d <= 3; ++d) exps.push_back(Rational(n, d));
  }
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  for (const auto& e2 : exps) {
    for (const auto& e3 : exps) {
      for (const auto& e5 : exps) {
        family.push_back(pp({{2, e2}, {3, e3}, {5, e5}}));
      }
    }
  }
  std::mt19937_64 rng(999);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& a = family[rng() % family.size()];
    const auto& b = family[rng() % family.size()];
    double da = a.approx();
    double db = b.approx();
    if (a == b) {
      CHECK(std::abs(da - db) <= 1e-9 * std::max(1.0, std::abs(da)));
    } else {
      CHECK(std::abs(da - db) > 1e-6 * std::max(1.0, std::abs(da)));
    }
  }
}

TEST_CASE("log arithmetic is exact and term-wise") {
  std::mt19937_64 rng(777);
  auto random_pp = [&]() {
    PowerProduct out;
    const long long primes[] = {2, 3, 5, 7};
    for (long long p : primes) {
      long long num = static_cast<long long>(rng() % 7) - 3;
      long long den = 1 + rng() % 4;
      out = out * PowerProduct::factor(p, Rational(num, den));
    }
    return out;
  };
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_pp();
    auto b = random_pp();
    CHECK((a * b).log2() == a.log2() + b.log2());
  }
}

TEST_CASE("exact log is zero exactly when empty") {
  CHECK(ExactLog::zero().is_zero());
  auto l = ExactLog::term(2, Rational(2, 3)) + ExactLog::term(3, Rational(1, 2));
  CHECK_FALSE(l.is_zero());
  CHECK((l - l).is_zero());

  // log2(8/27) + 3 log2(3) - 3 log2(2) collapses to the empty combination.
  auto combo = PowerProduct::from_rational(Rational(8, 27)).log2() +
               ExactLog::term(3, Rational(3)) - ExactLog::term(2, Rational(3));
  CHECK(combo.is_zero());

  // Nonzero combinations stay nonempty.
  auto nz = PowerProduct::from_rational(Rational(8, 27)).log2() +
            ExactLog::term(3, Rational(3));
  CHECK_FALSE(nz.is_zero());
  CHECK(nz == ExactLog::term(2, Rational(3)));
}

TEST_CASE("exp2 inverts log2") {
  auto a = pp({{2, Rational(2, 3)}, {3, Rational(1, 2)}, {7, Rational(-1, 4)}});
  CHECK(a.log2().exp2() == a);
}

TEST_CASE("extended value arithmetic") {
  auto two = ExtendedValue::from_rational(Rational(2));
  auto zero = ExtendedValue::zero();
  auto inf = ExtendedValue::infinite();

  CHECK(ExtendedValue::from_rational(Rational(0)) == zero);
  CHECK((two * two).value() == pp({{2, Rational(2)}}));
  CHECK(two * zero == zero);
  CHECK(two * inf == inf);
  CHECK(inf / two == inf);
  CHECK(two / inf == zero);
  CHECK(zero / two == zero);
  CHECK(two / zero == inf);
  CHECK_THROWS_AS(zero * inf, std::domain_error);
  CHECK_THROWS_AS(inf * zero, std::domain_error);
  CHECK_THROWS_AS(zero / zero, std::domain_error);
  CHECK_THROWS_AS(inf / inf, std::domain_error);
  CHECK_THROWS_AS(ExtendedValue::from_rational(Rational(-1)), std::domain_error);
  CHECK_THROWS_AS(zero.value(), std::domain_error);
}

TEST_CASE("display forms") {
  CHECK(PowerProduct::one().to_string() == "1");
  CHECK(pp({{2, Rational(2, 3)}, {3, Rational(1, 2)}}).to_string() ==
        "2^(2/3) * 3^(1/2)");
  CHECK(ExactLog::zero().to_string() == "0");
  CHECK((ExactLog::term(2, Rational(2, 3)) + ExactLog::term(3, Rational(1, 2)))
            .to_string() == "2/3 + (1/2) log2(3)");
  CHECK(ExtendedValue::infinite().to_string() == "inf");
}
