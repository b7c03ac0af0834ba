#pragma once

#include "fdrel/types.hpp"

namespace fdrel {

// Thresholds for choosing how U is evaluated at z = 2s/beta.
struct KummerConfig {
  double z_switch = 40.0;  // asymptotic series at and above
  double z_series = 4.0;   // M-based or logarithmic series at and below
  int asymptotic_max_terms = 200;
  double tol = 1e-16;
};

// Kummer's regular function M(a, b, z) = 1F1(a; b; z) by Taylor summation.
// Negative z goes through M(a, b, z) = e^z M(b - a, b, -z).
double kummer_m(double a, double b, double z, double tol = 1e-16);

struct AsymptoticSum {
  double value = 0.0;
  double err_est = 0.0;
  int terms = 0;
};

// U(a, b, z) ~ z^-a sum_k (a)_k (a - b + 1)_k / k! (-z)^-k, cut at the
// smallest term or after max_terms terms.
AsymptoticSum kummer_u_asymptotic(double a, double b, double z, int max_terms);

// U(a, m + 1, z) for integer m >= 0 through the logarithmic series (the
// integral representation above z = 8, where the series cancels). a must be
// an integer or half-integer and not a nonpositive integer.
double kummer_u_logcase(double a, int m_plus_1, double z, double tol = 1e-16);

// U(a, b, z) = 1/Gamma(a) int_0^inf e^{-zt} t^{a-1} (1+t)^{b-a-1} dt, a > 0.
double kummer_u_integral(double a, double b, double z, double tol = 1e-15);

// Kummer U(a, b, z), z > 0, choosing among the series above by z. The
// small-z route needs integer b (log case) or non-integer b (M connection).
double kummer_u(double a, double b, double z, const KummerConfig& cfg = {});

struct UqSpec {
  double q = 0.0;
  double beta = 0.0;
  QClass qclass = QClass::Generic;
  int m = 0;  // q + 3/2 when qclass is HalfInteger

  static UqSpec make(double q, double beta);
};

enum class URoute {
  Auto,
  Series,      // two-M connection formula, or the log case for half-integers
  Asymptotic,  // large-z series for U(-1/2, -q-1/2, z)
  Integral,    // Laplace integral representation
};

// U_q(s, beta) = (2s/beta)^{q+1} U(q+1, q+5/2, 2s/beta), U_q(s, 0) = 1.
double u_q(const UqSpec& spec, double s, URoute route = URoute::Auto,
           const KummerConfig& cfg = {});

}  // namespace fdrel
