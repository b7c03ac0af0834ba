#pragma once

#include "fdrel/config.hpp"
#include "fdrel/types.hpp"

namespace fdrel {

// Convergent series for eta < 0:
//   Gamma(q+1) sum_{n>=1} (-1)^{n-1} e^{n eta} / n^{q+1} U_q(n, beta).
EvalResult fd_rel_neg_eta(const FdParams& p, double tol,
                          const KummerConfig& kc = {});

// Large-eta expansion for q + 1/2 not an integer. The inverse-power series
// runs over n = 0..n_max, stopping earlier at its smallest terms.
EvalResult fd_rel_large_eta_generic(const FdParams& p, int n_max,
                                    bool include_exp_small, double tol = 1e-16);

// Pieces of F = G (F_P + F_Q) + F_R + F_S, G = Gamma(m-1/2) (2/beta)^{m-1/2}.
// fr is the polynomial form of fr_term.
struct HalfIntParts {
  double prefactor = 0.0;  // G
  double fp = 0.0;
  double fq = 0.0;
  double fr = 0.0;
  double fs = 0.0;  // zero when not computed
  double err_est = 0.0;
  int terms = 0;
  double total() const { return prefactor * (fp + fq) + fr + fs; }
};

HalfIntParts large_eta_halfint_parts(const FdParams& p, int n_max,
                                     const Config& cfg = {});

// Half-integer q = m - 3/2, m >= 2; the F_P series runs over k = 0..n_max.
// The F_S series is added when include_fs is set.
EvalResult fd_rel_large_eta_halfint(const FdParams& p, int n_max,
                                    const Config& cfg = {},
                                    bool include_fs = true);

// F_R for q = m - 3/2 written with the R_{m,k} coefficients:
//   G sum_{k=1..m} R_{m,k} / Gamma(k) F_{k-1}(eta).
// With polynomial_part set (eta > 0), each F_{k-1} is the terminating
// Sommerfeld polynomial without its exponentially small (-1)^k F_k(-eta)
// part; the large-eta expansion carries that part in F_S instead.
double fr_term(int m, double eta, double beta, const Config& cfg = {},
               bool polynomial_part = false);

// The finite sum obtained by expanding sqrt(1 + 2/(beta x)) in the integrand
// and keeping the orders q + 1/2 - k > -1:
//   (beta/2)^{1/2} sum_k (-1)^k (-1/2)_k / k! (2/beta)^k F_{q+1/2-k}(eta).
double binomial_sum(double q, double eta, double beta, const Config& cfg = {});

// Exponentially small convergent series of the half-integer large-eta
// expansion; needs eta + 2/beta > 0.
double fs_term(int m, double eta, double beta, const KummerConfig& kc = {});

// sum_{n=0..n_max} (-1)^n (-1/2)_n / n! (beta/2)^n F_{q+n}(eta), stopping
// earlier at the smallest terms.
EvalResult fd_rel_small_beta(const FdParams& p, int n_max,
                             const Config& cfg = {});

// Large-beta expansion, q + 1/2 not an integer; sums k = 0..k_max.
EvalResult fd_rel_large_beta_generic(const FdParams& p, int k_max,
                                     const Config& cfg = {});

struct LargeBetaHalfIntParts {
  double prefactor = 0.0;
  double fp = 0.0;
  double fq = 0.0;
  double fr = 0.0;
  double fs_diagnostic = 0.0;  // F_S evaluated separately, not in total()
  double err_est = 0.0;
  double total() const { return prefactor * (fp + fq) + fr; }
};

LargeBetaHalfIntParts large_beta_halfint_parts(const FdParams& p, int k_max,
                                               const Config& cfg = {},
                                               bool with_fs_diagnostic = false);

// Half-integer q = m - 3/2, m >= 2; sums k = 0..k_max. No F_S term.
EvalResult fd_rel_large_beta_halfint(const FdParams& p, int k_max,
                                     const Config& cfg = {});

// Evaluates with the given method, or picks one when method is Auto:
//   eta <= eta_neg_max                         -> NegEtaSeries
//   eta >= eta_big, beta eta >= large_eta_min_beta_eta -> large-eta family
//   beta >= beta_big                           -> large-beta family
//   beta <= beta_small, beta max(eta,1) <= small_beta_max_beta_eta -> SmallBeta
//   otherwise                                  -> Quadrature
// Errors from the chosen method are rethrown with its name prefixed.
EvalResult fd_rel_eval(const FdParams& p, Method method = Method::Auto,
                       const Config& cfg = {});

// The method Auto would pick.
Method auto_method(const FdParams& p, const Config& cfg = {});

}  // namespace fdrel
