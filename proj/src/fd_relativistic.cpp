#include "fdrel/fd_relativistic.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "fdrel/coefficients.hpp"
#include "fdrel/error.hpp"
#include "fdrel/fd_standard.hpp"
#include "fdrel/kummer.hpp"
#include "fdrel/oracle.hpp"
#include "fdrel/special.hpp"

namespace fdrel {

namespace {

constexpr int kMaxNegEtaTerms = 500;
constexpr int kMaxConvergentTerms = 10000;
constexpr int kMaxNMax = kMaxCoefficientOrder - 4;

struct Truncated {
  double sum = 0.0;
  double omitted = 0.0;  // magnitude of the first term left out
  int used = 0;
};

// Optimal truncation of an asymptotic sum over indices 0..n_max; terms
// needs n_max + 5 entries. The stopping point j in [1, n_max + 1] minimizes
// the pair envelope e_i = max(|t_i|, |t_{i+1}|), because odd-index terms can
// nearly vanish. The omitted remainder is estimated as e_j / (1 - rho) with
// rho = e_{j+2} / e_j when the envelope is still shrinking (same-sign tails
// are common at large beta), else as e_j.
Truncated truncate_at_smallest(const std::vector<double>& terms, int n_max) {
  auto envelope = [&](int i) {
    return std::max(std::abs(terms[i]), std::abs(terms[i + 1]));
  };
  int j = n_max + 1;
  for (int i = 1; i <= n_max; ++i) {
    if (envelope(i) < envelope(j)) j = i;
  }
  Truncated t;
  for (int i = 0; i < j; ++i) t.sum += terms[i];
  const double e = envelope(j);
  const double rho = e > 0.0 ? envelope(j + 2) / e : 0.0;
  t.omitted = rho < 1.0 ? e / (1.0 - rho) : e;
  t.used = j;
  return t;
}

void require_positive_beta(const FdParams& p, const char* who) {
  if (!(p.beta > 0.0)) throw DomainError(std::string(who) + ": beta must be positive", p.beta);
}

void require_generic(double q, const char* who) {
  if (classify_q(q) == QClass::HalfInteger) {
    throw UsageError(std::string(who) + ": q is a half-integer, use the half-integer method");
  }
}

int require_halfint(double q, const char* who) {
  if (classify_q(q) != QClass::HalfInteger) {
    throw UsageError(std::string(who) + ": q must be a half-integer");
  }
  const int m = half_integer_m(q);
  if (m < 2) throw UsageError(std::string(who) + ": needs q >= 1/2");
  return m;
}

// Standard integral of nonnegative integer order; Sommerfeld is exact there
// once the cos(pi q) F_q(-eta) correction is added.
double fd_integer_order(int k, double eta, const Config& cfg) {
  return fd_standard_eval(static_cast<double>(k), eta, cfg).value;
}

double half_power_prefactor(int m, double beta) {
  return gamma_real(m - 0.5) * std::pow(2.0 / beta, m - 0.5);
}

}  // namespace

EvalResult fd_rel_neg_eta(const FdParams& p, double tol, const KummerConfig& kc) {
  validate(p);
  if (!(p.eta < 0.0)) throw DomainError("fd_rel_neg_eta: eta must be negative", p.eta);
  const UqSpec spec = UqSpec::make(p.q, p.beta);
  double sum = 0.0;
  double last = 0.0;
  for (int n = 1; n <= kMaxNegEtaTerms; ++n) {
    const double term =
        std::exp(n * p.eta - (p.q + 1.0) * std::log(n)) * u_q(spec, n, URoute::Auto, kc);
    last = std::abs(term);
    sum += (n % 2 == 1) ? term : -term;
    if (last <= tol * std::abs(sum)) {
      const double g = gamma_real(p.q + 1.0);
      return {g * sum, g * last, n, Method::NegEtaSeries};
    }
  }
  const double g = gamma_real(p.q + 1.0);
  throw ConvergenceError("fd_rel_neg_eta: 500 terms were not enough", g * sum, g * last);
}

EvalResult fd_rel_large_eta_generic(const FdParams& p, int n_max,
                                    bool include_exp_small, double tol) {
  validate(p);
  require_generic(p.q, "fd_rel_large_eta_generic");
  require_positive_beta(p, "fd_rel_large_eta_generic");
  if (!(p.eta > 0.0)) throw DomainError("fd_rel_large_eta_generic: eta must be positive", p.eta);
  if (n_max < 0 || n_max > kMaxNMax) {
    throw UsageError("fd_rel_large_eta_generic: n_max must be in [0, 60]");
  }
  const double q = p.q;
  const double eta = p.eta;
  const double beta = p.beta;

  // F1: |M(q+1; q+5/2; -x)| <= 1, so e^{-n eta} bounds each term.
  double f1 = 1.0;
  int n = 1;
  for (; n <= kMaxConvergentTerms; ++n) {
    const double e = std::exp(-n * eta);
    if (e <= tol * std::abs(f1)) break;
    const double term = e * kummer_m(q + 1.0, q + 2.5, -2.0 * n / beta);
    f1 += (n % 2 == 0) ? term : -term;
  }

  const std::vector<double> a = a_coeffs(q, beta, n_max + 4);
  std::vector<double> terms(n_max + 5);
  double power = 1.0;
  for (int k = 0; k <= n_max + 4; ++k) {
    terms[k] = a[k] * rgamma(q + 2.5 - k) * power;
    power /= eta;
  }
  const Truncated asym = truncate_at_smallest(terms, n_max);
  const double lead = std::pow(eta, q + 1.5);
  double f2 = lead * asym.sum;

  const double sin_pq = std::sin(kPi * q);
  double exp_small = 0.0;
  if (include_exp_small && sin_pq != 0.0) {
    for (int j = 1; j <= kMaxConvergentTerms; ++j) {
      const double term = std::exp(-j * eta - (q + 1.0) * std::log(j)) *
                          kummer_m(-0.5, -q - 0.5, -2.0 * j / beta);
      exp_small += (j % 2 == 0) ? term : -term;
      if (std::abs(term) <= tol * std::abs(f2)) break;
    }
    f2 += sin_pq * exp_small;
  }

  const double pref1 = std::pow(2.0 / beta, q + 1.0) * gamma_real(-q - 1.5) *
                       gamma_real(q + 1.0) / gamma_real(-0.5);
  const double pref2 = std::pow(2.0 / beta, -0.5) * gamma_real(q + 1.5);
  double err = std::abs(pref2 * lead) * asym.omitted;
  if (!include_exp_small) err += std::abs(pref2 * sin_pq) * std::exp(-eta);
  return {pref1 * f1 + pref2 * f2, err, std::max(asym.used, 1),
          Method::LargeEtaGeneric};
}

double fr_term(int m, double eta, double beta, const Config& cfg,
               bool polynomial_part) {
  const PqrFamily& f = pqr_family(m, beta, 0);
  double sum = 0.0;
  for (int k = 1; k <= m; ++k) {
    double fk;
    if (polynomial_part) {
      if (!(eta > 0.0)) throw DomainError("fr_term: polynomial part needs eta > 0", eta);
      // Enough terms for the terminating series of order k - 1.
      const int n = std::max(cfg.sommerfeld_terms, (k - 1) / 2 + 1);
      fk = fd_std_sommerfeld(k - 1.0, eta, n, false).value;
    } else {
      fk = fd_integer_order(k - 1, eta, cfg);
    }
    sum += f.R[k - 1] * rgamma(k) * fk;
  }
  return half_power_prefactor(m, beta) * sum;
}

double binomial_sum(double q, double eta, double beta, const Config& cfg) {
  if (!(beta > 0.0)) throw DomainError("binomial_sum: beta must be positive", beta);
  const double top = q + 0.5;
  // largest K with q + 1/2 - K > -1
  const int k_top = static_cast<int>(std::ceil(top + 1.0)) - 1;
  double coef = 1.0;  // (-1)^k (-1/2)_k / k! (2/beta)^k
  double sum = 0.0;
  for (int k = 0; k <= k_top; ++k) {
    sum += coef * fd_standard_eval(top - k, eta, cfg).value;
    coef *= -(-0.5 + k) / (k + 1.0) * (2.0 / beta);
  }
  return std::sqrt(beta / 2.0) * sum;
}

double fs_term(int m, double eta, double beta, const KummerConfig& kc) {
  if (!(beta > 0.0)) throw DomainError("fs_term: beta must be positive", beta);
  const double rate = eta + 2.0 / beta;
  if (!(rate > 0.0)) throw DomainError("fs_term: needs eta + 2/beta > 0", eta);
  double sum = 0.0;
  double term = 0.0;
  int n = 1;
  for (; n <= kMaxConvergentTerms; ++n) {
    term = std::exp(-n * rate) * kummer_u(1.5, m + 1.0, 2.0 * n / beta, kc);
    sum += (n % 2 == 0) ? term : -term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  const double pref = 0.5 * kSqrtPi * std::pow(2.0 / beta, m - 0.5) * (m % 2 == 0 ? 1.0 : -1.0);
  if (n > kMaxConvergentTerms) {
    throw ConvergenceError("fs_term: series did not converge", pref * sum, std::abs(pref * term));
  }
  return pref * sum;
}

HalfIntParts large_eta_halfint_parts(const FdParams& p, int n_max, const Config& cfg) {
  validate(p);
  const int m = require_halfint(p.q, "fd_rel_large_eta_halfint");
  require_positive_beta(p, "fd_rel_large_eta_halfint");
  if (!(p.eta > 0.0)) throw DomainError("fd_rel_large_eta_halfint: eta must be positive", p.eta);
  if (n_max < 0 || n_max > kMaxNMax) {
    throw UsageError("fd_rel_large_eta_halfint: n_max must be in [0, 60]");
  }
  const double eta = p.eta;
  const PqrFamily f = pqr_family(m, p.beta, n_max + 4);

  // terms[0] is the logarithmic term, terms[k] = (-1)^k p_k (k-1)! eta^-k
  std::vector<double> terms(n_max + 5);
  terms[0] = -(kEulerGamma + std::log(eta)) * f.p[0];
  double fact = 1.0;  // (k-1)!
  double power = 1.0;
  for (int k = 1; k <= n_max + 4; ++k) {
    if (k > 1) fact *= (k - 1);
    power /= eta;
    terms[k] = (k % 2 == 0 ? 1.0 : -1.0) * f.p[k] * fact * power;
  }
  const Truncated t = truncate_at_smallest(terms, n_max);

  HalfIntParts out;
  out.prefactor = half_power_prefactor(m, p.beta);
  out.fp = f.A_m * t.sum;
  out.fq = f.A_m * f.q[0];
  out.fr = fr_term(m, eta, p.beta, cfg, true);
  out.err_est = std::abs(out.prefactor * f.A_m) * t.omitted;
  out.terms = std::max(t.used, 1);
  return out;
}

EvalResult fd_rel_large_eta_halfint(const FdParams& p, int n_max, const Config& cfg,
                                    bool include_fs) {
  HalfIntParts parts = large_eta_halfint_parts(p, n_max, cfg);
  if (include_fs) parts.fs = fs_term(half_integer_m(p.q), p.eta, p.beta, cfg.kummer);
  return {parts.total(), parts.err_est, parts.terms, Method::LargeEtaHalfInt};
}

EvalResult fd_rel_small_beta(const FdParams& p, int n_max, const Config& cfg) {
  validate(p);
  if (n_max < 0 || n_max > kMaxNMax) {
    throw UsageError("fd_rel_small_beta: n_max must be in [0, 60]");
  }
  if (p.beta == 0.0) {
    EvalResult r = fd_standard_eval(p.q, p.eta, cfg);
    r.terms_used = 1;
    r.method = Method::SmallBeta;
    return r;
  }
  std::vector<double> terms(n_max + 5);
  double coef = 1.0;  // (-1)^n (-1/2)_n / n! (beta/2)^n
  for (int n = 0; n <= n_max + 4; ++n) {
    terms[n] = coef * fd_standard_eval(p.q + n, p.eta, cfg).value;
    coef *= -(-0.5 + n) / (n + 1.0) * (p.beta / 2.0);
  }
  const Truncated t = truncate_at_smallest(terms, n_max);
  return {t.sum, t.omitted, std::max(t.used, 1), Method::SmallBeta};
}

EvalResult fd_rel_large_beta_generic(const FdParams& p, int k_max, const Config& cfg) {
  validate(p);
  require_generic(p.q, "fd_rel_large_beta_generic");
  require_positive_beta(p, "fd_rel_large_beta_generic");
  if (k_max < 0 || k_max >= kMaxCoefficientOrder) {
    throw UsageError("fd_rel_large_beta_generic: k_max must be in [0, 63]");
  }
  const double q = p.q;
  const CdCoeffs cd = cd_coeffs(q, k_max + 1);
  double f1 = 0.0;
  double f2 = 0.0;
  double next1 = 0.0;
  double next2 = 0.0;
  double inv_beta_k = 1.0;
  for (int k = 0; k <= k_max + 1; ++k) {
    const double t1 = cd.c[k] * inv_beta_k * phi1(k, p.eta);
    const double t2 = cd.d[k] * inv_beta_k * phi2(k, p.eta, q, cfg.fhat_tol);
    if (k <= k_max) {
      f1 += t1;
      f2 += t2;
    } else {
      next1 = t1;
      next2 = t2;
    }
    inv_beta_k /= p.beta;
  }
  const double pref1 = std::pow(2.0 / p.beta, q + 1.0) * gamma_real(-q - 1.5) *
                       gamma_real(q + 1.0) / gamma_real(-0.5);
  const double pref2 = std::pow(2.0 / p.beta, -0.5) * gamma_real(q + 1.5);
  const double err = std::max(std::abs(pref1 * next1), std::abs(pref2 * next2));
  return {pref1 * f1 + pref2 * f2, err, k_max + 1, Method::LargeBetaGeneric};
}

LargeBetaHalfIntParts large_beta_halfint_parts(const FdParams& p, int k_max,
                                               const Config& cfg,
                                               bool with_fs_diagnostic) {
  validate(p);
  const int m = require_halfint(p.q, "fd_rel_large_beta_halfint");
  require_positive_beta(p, "fd_rel_large_beta_halfint");
  if (k_max < 0 || k_max >= kMaxCoefficientOrder) {
    throw UsageError("fd_rel_large_beta_halfint: k_max must be in [0, 63]");
  }
  const TildePq t = tilde_pq(m, p.beta, k_max + 1);
  const double a_m = a_m_constant(m);
  double fp = 0.0;
  double fq = 0.0;
  double next = 0.0;
  double inv_beta_k = 1.0;
  for (int k = 0; k <= k_max + 1; ++k) {
    const double tp = t.Ptilde[k] * inv_beta_k * psi_aux(k, p.eta, cfg.fhat_tol);
    const double tq = t.Qtilde[k] * inv_beta_k * phi1(k, p.eta);
    if (k <= k_max) {
      fp += tp;
      fq += tq;
    } else {
      next = tp + tq;
    }
    inv_beta_k /= p.beta;
  }
  LargeBetaHalfIntParts out;
  out.prefactor = half_power_prefactor(m, p.beta);
  out.fp = a_m * fp;
  out.fq = a_m * fq;
  out.fr = fr_term(m, p.eta, p.beta, cfg);
  out.err_est = std::abs(out.prefactor * a_m * next);
  if (with_fs_diagnostic && p.eta + 2.0 / p.beta > 0.0) {
    out.fs_diagnostic = fs_term(m, p.eta, p.beta, cfg.kummer);
  }
  return out;
}

EvalResult fd_rel_large_beta_halfint(const FdParams& p, int k_max, const Config& cfg) {
  const LargeBetaHalfIntParts parts = large_beta_halfint_parts(p, k_max, cfg);
  return {parts.total(), parts.err_est, k_max + 1, Method::LargeBetaHalfInt};
}

Method auto_method(const FdParams& p, const Config& cfg) {
  validate(p);
  const bool half = classify_q(p.q) == QClass::HalfInteger;
  if (p.eta <= cfg.eta_neg_max) return Method::NegEtaSeries;
  if (p.eta >= cfg.eta_big && p.beta * p.eta >= cfg.large_eta_min_beta_eta) {
    return half ? Method::LargeEtaHalfInt : Method::LargeEtaGeneric;
  }
  if (p.beta >= cfg.beta_big && p.eta < cfg.eta_big) {
    return half ? Method::LargeBetaHalfInt : Method::LargeBetaGeneric;
  }
  if (p.beta <= cfg.beta_small &&
      p.beta * std::max(p.eta, 1.0) <= cfg.small_beta_max_beta_eta) {
    return Method::SmallBeta;
  }
  return Method::Quadrature;
}

namespace {

EvalResult dispatch(const FdParams& p, Method method, const Config& cfg) {
  switch (method) {
    case Method::NegEtaSeries: return fd_rel_neg_eta(p, cfg.series_tol, cfg.kummer);
    case Method::LargeEtaGeneric:
      return fd_rel_large_eta_generic(p, cfg.large_eta_nmax, cfg.include_exp_small);
    case Method::LargeEtaHalfInt: return fd_rel_large_eta_halfint(p, cfg.large_eta_nmax, cfg);
    case Method::SmallBeta: return fd_rel_small_beta(p, cfg.small_beta_nmax, cfg);
    case Method::LargeBetaGeneric: return fd_rel_large_beta_generic(p, cfg.large_beta_kmax, cfg);
    case Method::LargeBetaHalfInt: return fd_rel_large_beta_halfint(p, cfg.large_beta_kmax, cfg);
    case Method::Quadrature: {
      const QuadResult r = quad_fd_rel(p, cfg.oracle_tol);
      return {r.value, r.abs_err_est, static_cast<int>(std::max<long>(r.evaluations, 1)),
              Method::Quadrature};
    }
    case Method::Auto: break;
  }
  throw UsageError("fd_rel_eval: no method selected");
}

}  // namespace

EvalResult fd_rel_eval(const FdParams& p, Method method, const Config& cfg) {
  if (method == Method::Auto) method = auto_method(p, cfg);
  const std::string tag = "[" + std::string(method_name(method)) + "] ";
  try {
    return dispatch(p, method, cfg);
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(tag + e.what(), e.best_estimate(), e.achieved_error());
  } catch (const DomainError& e) {
    throw DomainError(tag + e.what(), e.offending());
  } catch (const UsageError& e) {
    throw UsageError(tag + e.what());
  } catch (const IoError& e) {
    throw IoError(tag + e.what());
  }
}

}  // namespace fdrel
