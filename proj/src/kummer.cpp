#include "fdrel/kummer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fdrel/error.hpp"
#include "fdrel/quadrature.hpp"
#include "fdrel/special.hpp"

namespace fdrel {

namespace {

constexpr int kMaxSeriesTerms = 10000;

// Taylor series of 1F1 for z >= 0, returned as (mantissa, log scale) so that
// large arguments do not overflow before the caller applies e^z.
struct ScaledSum {
  double sum = 0.0;
  double log_scale = 0.0;
};

ScaledSum m_series_nonneg(double a, double b, double z, double tol) {
  constexpr double kRescale = 1e200;
  ScaledSum out{1.0, 0.0};
  double term = 1.0;
  int small_run = 0;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    term *= (a + k) / (b + k) * z / (k + 1.0);
    if (term == 0.0) return out;
    out.sum += term;
    if (std::abs(out.sum) > kRescale) {
      out.sum /= kRescale;
      term /= kRescale;
      out.log_scale += std::log(kRescale);
    }
    if (std::abs(term) <= tol * std::abs(out.sum)) {
      if (++small_run == 3) return out;
    } else {
      small_run = 0;
    }
  }
  throw ConvergenceError("kummer_m: series did not converge", out.sum,
                         std::abs(term));
}

// psi at an integer or half-integer argument, including negative
// half-integers via psi(1 - x) = psi(x).
double psi_half(int two_x) {
  if (two_x >= 1) return digamma_int_halfint(two_x);
  if (two_x % 2 == 0) {
    throw DomainError("psi: pole at a nonpositive integer", 0.5 * two_x);
  }
  return digamma_int_halfint(2 - two_x);
}

int twice_if_half_integral(double a) {
  const double t = 2.0 * a;
  if (t != std::round(t)) {
    throw DomainError("kummer_u_logcase: a must be an integer or half-integer",
                      a);
  }
  return static_cast<int>(t);
}

double u_connection(double a, double b, double z) {
  // U(a,b,z) = G(1-b)/G(a-b+1) M(a,b,z) + G(b-1)/G(a) z^{1-b} M(a-b+1,2-b,z)
  const double first = gamma_real(1.0 - b) * rgamma(a - b + 1.0) *
                       kummer_m(a, b, z);
  const double second = gamma_real(b - 1.0) * rgamma(a) *
                        std::pow(z, 1.0 - b) * kummer_m(a - b + 1.0, 2.0 - b, z);
  return first + second;
}

}  // namespace

double kummer_m(double a, double b, double z, double tol) {
  if (is_nonpositive_integer(b)) {
    throw DomainError("kummer_m: b is a nonpositive integer", b);
  }
  if (!std::isfinite(z)) throw DomainError("kummer_m: z must be finite", z);
  if (z == 0.0) return 1.0;
  if (z > 0.0) {
    const ScaledSum s = m_series_nonneg(a, b, z, tol);
    return s.sum * std::exp(s.log_scale);
  }
  const ScaledSum s = m_series_nonneg(b - a, b, -z, tol);
  if (s.sum == 0.0) return 0.0;
  return s.sum * std::exp(z + s.log_scale);
}

AsymptoticSum kummer_u_asymptotic(double a, double b, double z, int max_terms) {
  if (!(z > 0.0)) throw DomainError("kummer_u_asymptotic: z must be positive", z);
  if (max_terms < 1) {
    throw UsageError("kummer_u_asymptotic: max_terms must be positive");
  }
  const double c = a - b + 1.0;
  double term = 1.0;
  double sum = 1.0;
  int used = 1;
  double omitted = 0.0;
  for (int k = 0;; ++k) {
    const double next = term * (a + k) * (c + k) / ((k + 1.0) * -z);
    if (used == max_terms || std::abs(next) >= std::abs(term)) {
      omitted = next;
      break;
    }
    if (next == 0.0) {
      omitted = 0.0;
      break;
    }
    sum += next;
    term = next;
    ++used;
  }
  const double scale = std::pow(z, -a);
  return {scale * sum, std::abs(omitted) * scale, used};
}

constexpr double kLogcaseMaxZ = 8.0;

double kummer_u_logcase(double a, int m_plus_1, double z, double tol) {
  if (m_plus_1 < 1) throw DomainError("kummer_u_logcase: b must be >= 1", m_plus_1);
  if (!(z > 0.0)) throw DomainError("kummer_u_logcase: z must be positive", z);
  if (is_nonpositive_integer(a)) {
    throw DomainError("kummer_u_logcase: a is a nonpositive integer", a);
  }
  const int two_a = twice_if_half_integral(a);
  const int m = m_plus_1 - 1;
  // The series cancels like e^z; past a few units of z it loses digits
  // fast, so hand over to the Laplace integral.
  if (z > kLogcaseMaxZ && a > 0.0) return kummer_u_integral(a, m_plus_1, z, std::max(tol, 1e-15));

  double series = 0.0;
  const double pre = rgamma(a - m);
  if (pre != 0.0) {
    const double lnz = std::log(z);
    double psi_a = psi_half(two_a);               // psi(a + k)
    double psi_1 = -kEulerGamma;                  // psi(1 + k)
    double psi_m = digamma_int_halfint(2 * (m + 1));  // psi(m + k + 1)
    double coef = 1.0;  // (a)_k / (k! (m+1)_k) z^k
    int small_run = 0;
    int k = 0;
    for (; k < kMaxSeriesTerms; ++k) {
      const double term = coef * (lnz + psi_a - psi_1 - psi_m);
      series += term;
      if (std::abs(term) <= tol * std::abs(series) || coef == 0.0) {
        if (++small_run == 3 || coef == 0.0) break;
      } else {
        small_run = 0;
      }
      const double ak = a + k;
      coef *= ak / ((k + 1.0) * (m + 1.0 + k)) * z;
      // a + k crosses zero only for negative half-integer a; psi stays finite.
      psi_a += 1.0 / ak;
      psi_1 += 1.0 / (k + 1.0);
      psi_m += 1.0 / (m + 1.0 + k);
    }
    if (k == kMaxSeriesTerms) {
      throw ConvergenceError("kummer_u_logcase: series did not converge",
                             series, std::abs(coef));
    }
    series *= ((m + 1) % 2 == 0 ? 1.0 : -1.0) * pre;
    for (int j = 2; j <= m; ++j) series /= j;
  }

  double finite = 0.0;
  for (int k = 1; k <= m; ++k) {
    double t = pochhammer(1.0 - a + k, m - k) * std::pow(z, -k);
    for (int j = 2; j <= k - 1; ++j) t *= j;   // (k-1)!
    for (int j = 2; j <= m - k; ++j) t /= j;   // 1/(m-k)!
    finite += t;
  }
  finite *= rgamma(a);
  return series + finite;
}

double kummer_u_integral(double a, double b, double z, double tol) {
  if (!(a > 0.0)) throw DomainError("kummer_u_integral: a must be positive", a);
  if (!(z > 0.0)) throw DomainError("kummer_u_integral: z must be positive", z);
  // Substitute y = z t: U = z^{-a}/Gamma(a) int e^{-y} y^{a-1} (1+y/z)^{b-a-1}.
  const double e = b - a - 1.0;
  auto f = [=](double y) {
    return std::exp(-y + (a - 1.0) * std::log(y) + e * std::log1p(y / z));
  };
  QuadOptions opts;
  opts.rel_tol = tol;
  const QuadResult r = exp_sinh(f, 0.0, opts);
  return r.value * rgamma(a) * std::pow(z, -a);
}

double kummer_u(double a, double b, double z, const KummerConfig& cfg) {
  if (!(z > 0.0)) throw DomainError("kummer_u: z must be positive", z);
  const bool b_integer = b == std::floor(b);
  if (z <= cfg.z_series) {
    if (b_integer && b >= 1.0 && 2.0 * a == std::round(2.0 * a)) {
      return kummer_u_logcase(a, static_cast<int>(b), z, cfg.tol);
    }
    if (!b_integer) return u_connection(a, b, z);
  }
  if (z >= cfg.z_switch) {
    const AsymptoticSum s = kummer_u_asymptotic(a, b, z, cfg.asymptotic_max_terms);
    if (s.err_est <= 1e-15 * std::abs(s.value) || !(a > 0.0)) return s.value;
  }
  return kummer_u_integral(a, b, z);
}

UqSpec UqSpec::make(double q, double beta) {
  if (beta < 0.0) throw DomainError("UqSpec: beta must be nonnegative", beta);
  UqSpec s;
  s.q = q;
  s.beta = beta;
  s.qclass = classify_q(q);
  if (s.qclass == QClass::HalfInteger) s.m = half_integer_m(q);
  return s;
}

double u_q(const UqSpec& spec, double s, URoute route, const KummerConfig& cfg) {
  if (!(s > 0.0)) throw DomainError("u_q: s must be positive", s);
  if (spec.beta == 0.0) return 1.0;
  const double q = spec.q;
  const double z = 2.0 * s / spec.beta;
  const bool half = spec.qclass == QClass::HalfInteger;

  auto series = [&] {
    if (half) {
      if (spec.m < 1) throw DomainError("u_q: half-integer q needs m >= 1", q);
      return std::pow(z, spec.m - 0.5) *
             kummer_u_logcase(spec.m - 0.5, spec.m + 1, z, cfg.tol);
    }
    return std::pow(z, q + 1.0) * gamma_real(-q - 1.5) / gamma_real(-0.5) *
               kummer_m(q + 1.0, q + 2.5, z) +
           std::pow(z, -0.5) * gamma_real(q + 1.5) / gamma_real(q + 1.0) *
               kummer_m(-0.5, -q - 0.5, z);
  };
  auto asymptotic = [&] {
    return kummer_u_asymptotic(-0.5, -q - 0.5, z, cfg.asymptotic_max_terms);
  };
  auto integral = [&] {
    // U_q = 1/Gamma(q+1) int_0^inf e^{-y} y^q sqrt(1 + y/z) dy
    auto f = [=](double y) {
      return std::exp(-y + q * std::log(y) + 0.5 * std::log1p(y / z));
    };
    QuadOptions opts;
    opts.rel_tol = 1e-15;
    return exp_sinh(f, 0.0, opts).value * rgamma(q + 1.0);
  };

  switch (route) {
    case URoute::Series: return series();
    case URoute::Asymptotic: return std::sqrt(1.0 / z) * asymptotic().value;
    case URoute::Integral: return integral();
    case URoute::Auto: break;
  }
  if (z <= cfg.z_series) return series();
  if (z >= cfg.z_switch) {
    const AsymptoticSum a = asymptotic();
    if (a.err_est <= 1e-15 * std::abs(a.value)) return a.value / std::sqrt(z);
  }
  return integral();
}

}  // namespace fdrel
