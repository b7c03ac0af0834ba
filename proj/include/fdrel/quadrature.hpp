#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fdrel {

struct QuadResult {
  double value = 0.0;
  double abs_err_est = 0.0;
  long evaluations = 0;
};

struct QuadOptions {
  double rel_tol = 1e-13;
  double abs_tol = 0.0;
  int max_panels = 5000;
};

using Integrand = std::function<double(double)>;

// Globally adaptive Gauss-Kronrod (10/21) quadrature over consecutive
// breakpoints. Panels whose error estimate has reached the roundoff floor
// are frozen; the integral is accepted once every remaining panel is
// frozen, even if that floor exceeds the requested tolerance. Throws
// ConvergenceError when max_panels is exhausted first.
QuadResult gauss_kronrod(const Integrand& f, std::span<const double> breakpoints,
                         const QuadOptions& opts = {});

QuadResult gauss_kronrod(const Integrand& f, double a, double b,
                         const QuadOptions& opts = {});

// Integral over [a, inf) via x = a + t / (1 - t) on [0, 1).
QuadResult gauss_kronrod_tail(const Integrand& f, double a,
                              const QuadOptions& opts = {});

// Tanh-sinh rule on [a, b] with step halving. Abscissae next to either
// endpoint are formed from the endpoint distance, so integrable algebraic
// singularities at a or b are resolved to full precision.
QuadResult tanh_sinh(const Integrand& f, double a, double b,
                     const QuadOptions& opts = {});

// Exp-sinh rule on [a, inf) for integrands with exponential decay.
QuadResult exp_sinh(const Integrand& f, double a, const QuadOptions& opts = {});

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

// Cached n-point Gauss-Legendre rule.
const GaussLegendreRule& gauss_legendre_rule(int n);

// Gauss-Legendre on [a, b] with order doubling (16, 32, ...) until two
// successive estimates differ by less than rel_tol times the integral of |f|.
QuadResult gauss_legendre_doubling(const Integrand& f, double a, double b,
                                   double rel_tol, int max_order = 1024);

}  // namespace fdrel
