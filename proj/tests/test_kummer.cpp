#include <cmath>

#include "doctest.h"
#include "fdrel/kummer.hpp"
#include "fdrel/quadrature.hpp"
#include "fdrel/special.hpp"
#include "support.hpp"

using namespace fdrel;
using fdrel::test::rel;

namespace {

// plain alternating summation of the defining series
double m_direct(double a, double b, double z) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 400; ++k) {
    term *= (a + k) / (b + k) * z / (k + 1);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// s^{q+1}/Gamma(q+1) int_0^inf x^q sqrt(1 + beta x/2) e^{-s x} dx
double uq_term_quadrature(double q, double beta, double s) {
  auto f = [=](double x) { return std::pow(x, q) * std::sqrt(1.0 + beta * x / 2.0) * std::exp(-s * x); };
  QuadOptions o;
  o.rel_tol = 1e-14;
  const double v = tanh_sinh(f, 0.0, 1.0, o).value + gauss_kronrod_tail(f, 1.0, o).value;
  return v * std::pow(s, q + 1.0) / std::tgamma(q + 1.0);
}

}  // namespace

TEST_SUITE("kummer") {

TEST_CASE("M at z = 0 and a closed form") {
  CHECK(kummer_m(0.3, 1.7, 0.0) == 1.0);
  CHECK(kummer_m(-2.5, -0.25, 0.0) == 1.0);
  CHECK(rel(kummer_m(1.0, 2.0, 1.0, 1e-15), std::exp(1.0) - 1.0) < 1e-15);
}

TEST_CASE("M at negative z against direct summation") {
  CHECK(rel(kummer_m(-0.5, -0.75, -2.0, 1e-15), m_direct(-0.5, -0.75, -2.0)) < 1e-12);
}

TEST_CASE("Kummer transformation") {
  const double as[] = {-0.5, 0.25, 1.75, 2.5};
  const double zs[] = {-8.0, -3.0, 0.5, 2.0, 6.0};
  for (double a : as)
    for (double z : zs) {
      const double b = a + 1.3;
      CHECK(rel(kummer_m(a, b, z), std::exp(z) * kummer_m(b - a, b, -z)) < 1e-12);
    }
}

TEST_CASE("asymptotic U, one term") {
  const double a = 1.25, b = 3.75, z = 60.0;
  const AsymptoticSum s = kummer_u_asymptotic(a, b, z, 1);
  CHECK(rel(s.value, std::pow(z, -a)) < 1e-15);
  CHECK(rel(s.err_est, std::pow(z, -a) * std::abs(a * (a - b + 1.0)) / z) < 1e-14);
}

TEST_CASE("asymptotic U against the integral representation") {
  const AsymptoticSum s = kummer_u_asymptotic(1.25, 3.75, 60.0, 30);
  CHECK(rel(s.value, kummer_u_integral(1.25, 3.75, 60.0)) < 1e-12);
}

TEST_CASE("asymptotic U as a negative-eta series factor") {
  // q = 1/4: U_q(s, beta) = z^{-1/2} U(-1/2, -3/4, z), z = 2 s / beta
  const double beta = 4.0 / 3.0, z = 100.0, s = z * beta / 2.0;
  const double u = kummer_u_asymptotic(-0.5, -0.75, z, 30).value / std::sqrt(z);
  CHECK(rel(u, uq_term_quadrature(0.25, beta, s)) < 1e-10);
}

TEST_CASE("log case against the asymptotic series at z = 50") {
  const AsymptoticSum s = kummer_u_asymptotic(1.5, 1.0, 50.0, 60);
  CHECK(std::abs(kummer_u_logcase(1.5, 1, 50.0) - s.value) <= s.err_est + 1e-15 * s.value);
}

TEST_CASE("log case against the integral representation") {
  CHECK(rel(kummer_u_logcase(0.5, 2, 1.0, 1e-14), kummer_u_integral(0.5, 2.0, 1.0)) < 1e-10);
  // the factor of the exponentially small half-integer series, m = 3, n = 1
  const double z = 2.0 / (4.0 / 3.0);
  CHECK(rel(kummer_u_logcase(1.5, 4, z), kummer_u_integral(1.5, 4.0, z)) < 1e-10);
}

TEST_CASE("U_q limits") {
  CHECK(u_q(UqSpec::make(0.75, 0.0), 3.0) == 1.0);
  const UqSpec sp = UqSpec::make(0.75, 4.0 / 3.0);
  double prev = 1e9;
  for (int n = 1; n <= 64; n *= 2) {
    const double d = std::abs(u_q(sp, n) - 1.0);
    CHECK(d * n < 2.0);
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("U_q half-integer routes agree") {
  const UqSpec sp = UqSpec::make(1.5, 10.5);
  CHECK(sp.qclass == QClass::HalfInteger);
  CHECK(sp.m == 3);
  const double series = u_q(sp, 2.0, URoute::Series);
  CHECK(rel(series, u_q(sp, 2.0, URoute::Integral)) < 1e-9);
  // the asymptotic route only makes sense past the switchover
  const double s_sw = KummerConfig{}.z_switch * 10.5 / 2.0;
  CHECK(rel(u_q(sp, s_sw, URoute::Series), u_q(sp, s_sw, URoute::Asymptotic)) < 1e-9);
}

TEST_CASE("U_q route consistency and positivity") {
  const KummerConfig kc;
  for (double q : {0.25, 0.75, 1.2, 1.5, 2.5})
    for (double beta : {4.0 / 3.0, 10.5, 50.0})
      for (double s : {1.0, 2.0, 5.0, 20.0}) {
        const UqSpec sp = UqSpec::make(q, beta);
        const double z = 2.0 * s / beta;
        const double ref = u_q(sp, s, URoute::Integral);
        CHECK(ref > 0.0);
        CHECK(u_q(sp, s) > 0.0);
        CHECK(rel(ref, uq_term_quadrature(q, beta, s)) < 1e-12);
        if (z <= kc.z_series) CHECK(rel(u_q(sp, s, URoute::Series), ref) < 1e-9);
        if (z >= kc.z_switch) CHECK(rel(u_q(sp, s, URoute::Asymptotic), ref) < 1e-9);
      }
}

TEST_CASE("asymptotic error estimate is honest past the switchover") {
  for (double q : {0.25, 1.2, 2.5})
    for (double z : {40.0, 60.0, 120.0}) {
      const AsymptoticSum s = kummer_u_asymptotic(-0.5, -q - 0.5, z, 200);
      const double ref = std::sqrt(z) * u_q(UqSpec::make(q, 1.0), z / 2.0, URoute::Integral);
      CHECK(std::abs(s.value - ref) <= 2.0 * s.err_est + 1e-14 * std::abs(ref));
    }
}

}
