#pragma once

#include "fdrel/config.hpp"
#include "fdrel/types.hpp"

namespace fdrel {

// F_q(eta) = Gamma(q+1) sum_{n>=1} (-1)^{n-1} e^{n eta} / n^{q+1}, eta < 0.
// Stops once |term| <= tol |sum|.
EvalResult fd_std_neg_eta(double q, double eta, double tol);

// Sommerfeld expansion for eta > 0:
//   Gamma(q+1) eta^{q+1} sum_n tau_{2n} / (Gamma(q+2-2n) eta^{2n})
//   + cos(pi q) F_q(-eta).
// At most n_terms terms; stops earlier at the smallest term or when the
// series terminates (integer q, where the result is exact). The
// exponentially small cos(pi q) term is left out when include_reflection is
// false.
EvalResult fd_std_sommerfeld(double q, double eta, int n_terms,
                             bool include_reflection = true);

// Regime dispatcher for the standard integral, q >= 0.
EvalResult fd_standard_eval(double q, double eta, const Config& cfg = {});

enum class FhatRoute { Auto, Direct, Theta };

// Fhat_q(eta) = F_q(eta) / Gamma(q+1), split at x = 1.
struct FhatSplit {
  double part1 = 0.0;  // unit interval (loop integral for q <= -1)
  double part2 = 0.0;  // [1, inf); zero for q = -1, -2, ...
  double q = 0.0;
  double eta = 0.0;
  double value() const { return part1 + part2; }
};

// Auto uses the direct integrals for q > -1 and the theta integral for
// q <= -1. The theta route is undefined at nonnegative integer q.
FhatSplit fhat_split(double q, double eta, double tol = 1e-14,
                     FhatRoute route = FhatRoute::Auto);

double fhat(double q, double eta, double tol = 1e-14,
            FhatRoute route = FhatRoute::Auto);

// Integrands of the loop integral on [0, pi] (mu = q + 1): f gives
// Fhat^(1) = Gamma(-q)/pi int f, g = df/dmu.
double fhat_theta_f(double theta, double mu, double eta);
double fhat_theta_g(double theta, double mu, double eta);

// Integral of f over [0, pi] (used to check the even-symmetry reduction).
double fhat_theta_integral(double mu, double eta, double lo, double hi,
                           double tol);

// Phi^(1)_k(eta): k-th eta-derivative of 1/(e^{-eta} + 1) = Fhat_{-k-1}(eta).
double phi1(int k, double eta);

// Phi^(2)_k(eta, q) = Fhat_{q + 1/2 - k}(eta).
double phi2(int k, double eta, double q, double tol = 1e-14);

// Psi_k(eta) = -d/dq Fhat_q(eta) at q = -k-1.
double psi_aux(int k, double eta, double tol = 1e-14);

// d/dq 1/Gamma(q+1) at q = -k-1, i.e. (-1)^k k!.
double rgamma_slope_at_pole(int k);

// cos(pi q), exact at integers and half-integers.
double cos_pi(double q);

}  // namespace fdrel
