#include <cmath>

#include "doctest.h"
#include "fdrel/error.hpp"
#include "fdrel/special.hpp"
#include "support.hpp"

using namespace fdrel;
using fdrel::test::rel;

TEST_SUITE("special") {

TEST_CASE("gamma at known points") {
  CHECK(gamma_real(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rel(gamma_real(0.5), kSqrtPi) < 1e-15);
  CHECK(rel(gamma_real(-2.5), -8.0 * kSqrtPi / 15.0) < 1e-14);
  CHECK(rel(gamma_real(5.0), 24.0) < 1e-15);
  CHECK_THROWS_AS(gamma_real(0.0), DomainError);
  CHECK_THROWS_AS(gamma_real(-3.0), DomainError);
}

TEST_CASE("gamma recurrence on a grid avoiding poles") {
  for (double x = -9.75; x <= 49.75; x += 0.5)
    CHECK(rel(gamma_real(x + 1.0), x * gamma_real(x)) < 1e-13);
}

TEST_CASE("rgamma vanishes at the poles") {
  for (int n = 0; n <= 6; ++n) CHECK(rgamma(-n) == 0.0);
  CHECK(rel(rgamma(0.5), 1.0 / kSqrtPi) < 1e-15);
}

TEST_CASE("digamma at integers and half-integers") {
  CHECK(rel(digamma_int_halfint(2), -kEulerGamma) < 1e-15);
  CHECK(rel(digamma_int_halfint(1), -kEulerGamma - 2.0 * kLn2) < 1e-15);
  CHECK(rel(digamma_int_halfint(4), 1.0 - kEulerGamma) < 1e-15);
  for (int two_x = 1; two_x <= 200; ++two_x) {
    const double x = two_x / 2.0;
    CHECK(std::abs(digamma_int_halfint(two_x + 2) - digamma_int_halfint(two_x) - 1.0 / x) <
          1e-14);
  }
}

TEST_CASE("tau values") {
  CHECK(tau(0) == 1.0);
  CHECK(rel(tau(2), kPi * kPi / 6.0) < 1e-15);
  CHECK(rel(tau(4), 7.0 * std::pow(kPi, 4) / 360.0) < 1e-15);
  CHECK(tau(3) == 0.0);
  CHECK(tau(1) == 0.0);
  CHECK(rel(tau(200), 2.0) < 1e-15);
}

TEST_CASE("tau matches the Bernoulli closed form") {
  // B_2 .. B_40
  const double B[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66,
                      -691.0 / 2730, 7.0 / 6, -3617.0 / 510, 43867.0 / 798,
                      -174611.0 / 330, 854513.0 / 138, -236364091.0 / 2730,
                      8553103.0 / 6, -23749461029.0 / 870, 8615841276005.0 / 14322,
                      -7709321041217.0 / 510, 2577687858367.0 / 6,
                      -26315271553053477373.0 / 1919190, 2929993913841559.0 / 6,
                      -261082718496449122051.0 / 13530};
  for (int n = 1; n <= 20; ++n) {
    const double sign = n % 2 ? 1.0 : -1.0;
    const double expect = sign * (1.0 - std::pow(2.0, 1 - 2 * n)) *
                          std::pow(2.0 * kPi, 2 * n) * B[n - 1] / std::tgamma(2 * n + 1.0);
    CHECK(rel(tau(2 * n), expect) < 1e-13);
  }
}

TEST_CASE("partial sums of the tau series at s = 1/2") {
  double s = 0.0;
  for (int n = 0; n < 40; ++n) s += tau(2 * n) * std::pow(0.5, 2 * n);
  CHECK(rel(s, kPi / 2.0) < 1e-12);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.5, 0) == 1.0);
  CHECK(pochhammer(2.0, 3) == 24.0);
  CHECK(pochhammer(-0.5, 2) == -0.25);
}

TEST_CASE("half-integer detection") {
  CHECK(is_half_integer(1.5));
  CHECK(is_half_integer(-0.5));
  CHECK_FALSE(is_half_integer(1.25));
  CHECK_FALSE(is_half_integer(2.0));
  CHECK(is_nonpositive_integer(-2.0));
  CHECK_FALSE(is_nonpositive_integer(1.0));
}

}
