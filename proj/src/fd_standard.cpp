#include "fdrel/fd_standard.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fdrel/error.hpp"
#include "fdrel/oracle.hpp"
#include "fdrel/quadrature.hpp"
#include "fdrel/special.hpp"

namespace fdrel {

namespace {

constexpr int kMaxNegEtaTerms = 100000;
constexpr int kMaxSommerfeldTerms = 100;

double logistic_tail(double t) {
  if (t > 0.0) {
    const double e = std::exp(-t);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(t));
}

QuadOptions quad_opts(double tol) {
  QuadOptions o;
  o.rel_tol = tol;
  o.max_panels = 20000;
  return o;
}

// Gamma(q+1)^-1 int_0^1 x^q / (e^{x-eta} + 1) dx, q > -1. For q < 0 the
// endpoint singularity is removed with x = t^{1/(q+1)}.
double unit_integral_hat(double q, double eta, double tol) {
  if (q >= 0.0) {
    auto f = [=](double x) { return std::pow(x, q) * logistic_tail(x - eta); };
    return rgamma(q + 1.0) * tanh_sinh(f, 0.0, 1.0, quad_opts(tol)).value;
  }
  const double inv = 1.0 / (q + 1.0);
  auto f = [=](double t) { return logistic_tail(std::pow(t, inv) - eta); };
  return rgamma(q + 2.0) * tanh_sinh(f, 0.0, 1.0, quad_opts(tol)).value;
}

// int_1^inf x^q / (e^{x-eta} + 1) dx, any real q.
double tail_integral(double q, double eta, double tol) {
  auto f = [=](double x) { return std::pow(x, q) * logistic_tail(x - eta); };
  std::vector<double> bp = {1.0};
  if (eta > 1.0) bp.push_back(eta);
  const double t = std::max(2.0 * eta, 40.0);
  if (t > bp.back()) bp.push_back(t);
  double v = 0.0;
  if (bp.size() >= 2) v += gauss_kronrod(f, bp, quad_opts(tol)).value;
  v += gauss_kronrod_tail(f, bp.back(), quad_opts(tol)).value;
  return v;
}

bool is_nonneg_integer(double q) { return q >= 0.0 && q == std::floor(q); }

// Numerator and denominator of f and g, scaled by 1/E^2 when
// E = e^{-eta - cos(theta)} exceeds one.
struct ThetaParts {
  double num_cos = 0.0;
  double num_sin = 0.0;
  double den = 0.0;
};

ThetaParts theta_parts(double theta, double mu, double eta) {
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  const double expo = -eta - ct;
  const double c1 = std::cos(mu * theta + st);
  const double s1 = std::sin(mu * theta + st);
  const double c0 = std::cos(mu * theta);
  const double s0 = std::sin(mu * theta);
  const double cs = std::cos(st);
  if (expo <= 0.0) {
    const double e = std::exp(expo);
    return {e * c1 + c0, e * s1 + s0, 1.0 + 2.0 * e * cs + e * e};
  }
  const double ie = std::exp(-expo);  // 1/E
  return {ie * c1 + ie * ie * c0, ie * s1 + ie * ie * s0,
          ie * ie + 2.0 * ie * cs + 1.0};
}

double factorial(int k) {
  double f = 1.0;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

// Coefficients of Phi^(1)_k as a polynomial in x, where x = sigma (x' = x(1-x))
// or x = 1 - sigma (x' = -x(1-x)).
std::vector<double> logistic_derivative_poly(int k, bool complement) {
  std::vector<double> p = complement ? std::vector<double>{1.0, -1.0}
                                     : std::vector<double>{0.0, 1.0};
  const double sign = complement ? -1.0 : 1.0;
  for (int step = 0; step < k; ++step) {
    // derivative of p times sign * (x - x^2)
    std::vector<double> next(p.size() + 1, 0.0);
    for (std::size_t j = 1; j < p.size(); ++j) {
      const double d = sign * j * p[j];
      next[j] += d;
      next[j + 1] -= d;
    }
    p = std::move(next);
  }
  return p;
}

double horner(const std::vector<double>& p, double x) {
  double v = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

}  // namespace

double cos_pi(double q) {
  if (q == std::floor(q)) return std::fmod(std::abs(q), 2.0) == 0.0 ? 1.0 : -1.0;
  if (q + 0.5 == std::floor(q + 0.5)) return 0.0;
  return std::cos(kPi * q);
}

EvalResult fd_std_neg_eta(double q, double eta, double tol) {
  if (!(eta < 0.0)) throw DomainError("fd_std_neg_eta: eta must be negative", eta);
  if (!(q > -1.0)) throw DomainError("fd_std_neg_eta: q must exceed -1", q);
  double sum = 0.0;
  double last = 0.0;
  int n = 1;
  for (; n <= kMaxNegEtaTerms; ++n) {
    const double term = std::exp(n * eta - (q + 1.0) * std::log(n));
    last = term;
    sum += (n % 2 == 1) ? term : -term;
    if (term <= tol * std::abs(sum)) break;
  }
  if (n > kMaxNegEtaTerms) {
    throw ConvergenceError("fd_std_neg_eta: series did not converge",
                           gamma_real(q + 1.0) * sum, last);
  }
  const double g = gamma_real(q + 1.0);
  return {g * sum, g * last, std::min(n, kMaxNegEtaTerms), Method::NegEtaSeries};
}

EvalResult fd_std_sommerfeld(double q, double eta, int n_terms,
                             bool include_reflection) {
  if (!(eta > 0.0)) throw DomainError("fd_std_sommerfeld: eta must be positive", eta);
  if (n_terms < 1) throw UsageError("fd_std_sommerfeld: n_terms must be positive");
  const TauTable& tau = TauTable::instance();
  const bool terminates = is_nonneg_integer(q);
  const double inv_eta2 = 1.0 / (eta * eta);
  double sum = 0.0;
  double prev = INFINITY;
  double omitted = 0.0;
  double power = 1.0;
  int used = 0;
  for (int n = 0; n <= std::min(n_terms, kMaxSommerfeldTerms); ++n) {
    const double rg = rgamma(q + 2.0 - 2.0 * n);
    const double term = tau[2 * n] * rg * power;
    // Integer q: the series terminates and is exact, so never cut it early.
    const bool growing = !terminates && std::abs(term) > std::abs(prev);
    if (n == n_terms || (rg == 0.0 && n > 0) || growing) {
      omitted = rg == 0.0 ? 0.0 : term;
      break;
    }
    sum += term;
    prev = term;
    power *= inv_eta2;
    ++used;
  }
  const double g = gamma_real(q + 1.0);
  const double lead = g * std::pow(eta, q + 1.0);
  double value = lead * sum;
  const double c = cos_pi(q);
  if (c != 0.0 && include_reflection) value += c * fd_std_neg_eta(q, -eta, 1e-17).value;
  return {value, std::abs(lead * omitted), used, Method::LargeEtaGeneric};
}

EvalResult fd_standard_eval(double q, double eta, const Config& cfg) {
  if (!(q >= 0.0)) throw DomainError("fd_standard_eval: q must be nonnegative", q);
  if (eta <= cfg.eta_neg_max) return fd_std_neg_eta(q, eta, cfg.series_tol);
  // The correction F_q(-eta) converges slowly near eta = 0.
  if (eta >= -cfg.eta_neg_max && is_nonneg_integer(q)) {
    return fd_std_sommerfeld(q, eta, std::max(cfg.sommerfeld_terms,
                                              static_cast<int>(q) / 2 + 2));
  }
  if (eta >= cfg.eta_big) {
    EvalResult r = fd_std_sommerfeld(q, eta, kMaxSommerfeldTerms);
    if (r.err_est <= cfg.series_tol * std::abs(r.value)) return r;
  }
  const QuadResult r = quad_fd_std(q, eta, cfg.oracle_tol);
  return {r.value, r.abs_err_est, static_cast<int>(r.evaluations),
          Method::Quadrature};
}

double fhat_theta_f(double theta, double mu, double eta) {
  const ThetaParts t = theta_parts(theta, mu, eta);
  return t.num_cos / t.den;
}

double fhat_theta_g(double theta, double mu, double eta) {
  const ThetaParts t = theta_parts(theta, mu, eta);
  return -theta * t.num_sin / t.den;
}

double fhat_theta_integral(double mu, double eta, double lo, double hi,
                           double tol) {
  auto f = [=](double th) { return fhat_theta_f(th, mu, eta); };
  return gauss_legendre_doubling(f, lo, hi, tol).value;
}

FhatSplit fhat_split(double q, double eta, double tol, FhatRoute route) {
  if (!std::isfinite(q) || !std::isfinite(eta)) {
    throw DomainError("fhat: arguments must be finite");
  }
  if (route == FhatRoute::Auto) {
    route = q > -1.0 ? FhatRoute::Direct : FhatRoute::Theta;
  }
  FhatSplit s;
  s.q = q;
  s.eta = eta;
  const double rg = rgamma(q + 1.0);
  if (route == FhatRoute::Direct) {
    if (!(q > -1.0)) throw DomainError("fhat: direct route needs q > -1", q);
    s.part1 = unit_integral_hat(q, eta, tol);
  } else {
    if (is_nonneg_integer(q)) {
      throw DomainError("fhat: theta route is undefined at nonnegative integer q", q);
    }
    s.part1 = gamma_real(-q) / kPi * fhat_theta_integral(q + 1.0, eta, 0.0, kPi, tol);
  }
  // 1/Gamma(q+1) vanishes at q = -1, -2, ...; skip the integral there.
  s.part2 = rg == 0.0 ? 0.0 : rg * tail_integral(q, eta, tol);
  return s;
}

double fhat(double q, double eta, double tol, FhatRoute route) {
  return fhat_split(q, eta, tol, route).value();
}

double phi1(int k, double eta) {
  if (k < 0) throw DomainError("phi1: k must be nonnegative", k);
  if (eta <= 0.0) {
    const double sigma = 1.0 / (1.0 + std::exp(-eta));
    return horner(logistic_derivative_poly(k, false), sigma);
  }
  const double u = 1.0 / (1.0 + std::exp(eta));
  return horner(logistic_derivative_poly(k, true), u);
}

double phi2(int k, double eta, double q, double tol) {
  if (k < 0) throw DomainError("phi2: k must be nonnegative", k);
  return fhat(q + 0.5 - k, eta, tol);
}

double rgamma_slope_at_pole(int k) {
  return (k % 2 == 0 ? 1.0 : -1.0) * factorial(k);
}

double psi_aux(int k, double eta, double tol) {
  if (k < 0) throw DomainError("psi_aux: k must be nonnegative", k);
  const double mu = -static_cast<double>(k);
  auto f = [=](double th) { return fhat_theta_f(th, mu, eta); };
  auto g = [=](double th) { return fhat_theta_g(th, mu, eta); };
  const double int_f = gauss_legendre_doubling(f, 0.0, kPi, tol).value;
  const double int_g = gauss_legendre_doubling(g, 0.0, kPi, tol).value;
  const double kf = factorial(k);
  const double part1 = kf / kPi * (digamma_int_halfint(2 * (k + 1)) * int_f - int_g);
  // -d/dq [1/Gamma(q+1)] * int_1^inf x^q/(...) at q = -k-1.
  const double part2 = -rgamma_slope_at_pole(k) * tail_integral(-k - 1.0, eta, tol);
  return part1 + part2;
}

}  // namespace fdrel
