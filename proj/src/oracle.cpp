#include "fdrel/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "fdrel/error.hpp"

namespace fdrel {

namespace {

// 1 / (exp(t) + 1) without overflow.
double logistic_tail(double t) {
  if (t > 0.0) {
    const double e = std::exp(-t);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(t));
}

// log(1 + exp(t)).
double softplus(double t) {
  return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}

QuadResult integrate_fd(double q, double eta, double beta, double tol,
                        std::optional<double> upper_limit) {
  if (!(tol > 0.0)) throw DomainError("oracle tolerance must be positive", tol);
  const bool log_space = eta > 700.0;
  auto f = [=](double x) {
    if (x <= 0.0) return 0.0;
    if (log_space) {
      return std::exp(q * std::log(x) + 0.5 * std::log1p(0.5 * beta * x) -
                      softplus(x - eta));
    }
    double v = std::pow(x, q) * logistic_tail(x - eta);
    if (beta != 0.0) v *= std::sqrt(1.0 + 0.5 * beta * x);
    return v;
  };

  QuadOptions opts;
  opts.rel_tol = tol;
  opts.max_panels = 20000;

  const double end = upper_limit.value_or(INFINITY);
  const double first = std::min(1.0, end);
  QuadResult total = tanh_sinh(f, 0.0, first, opts);
  if (end <= first) return total;

  const double tail_start = std::max(2.0 * eta, 40.0);
  std::vector<double> bp = {first};
  if (eta > first && eta < end) bp.push_back(eta);
  if (tail_start > bp.back() && tail_start < end) bp.push_back(tail_start);
  if (std::isfinite(end)) bp.push_back(end);

  if (bp.size() >= 2) {
    const QuadResult body = gauss_kronrod(f, bp, opts);
    total.value += body.value;
    total.abs_err_est += body.abs_err_est;
    total.evaluations += body.evaluations;
  }
  if (!std::isfinite(end)) {
    const QuadResult tail = gauss_kronrod_tail(f, bp.back(), opts);
    total.value += tail.value;
    total.abs_err_est += tail.abs_err_est;
    total.evaluations += tail.evaluations;
  }
  return total;
}

}  // namespace

QuadResult quad_fd_rel(const FdParams& p, double tol,
                       std::optional<double> upper_limit) {
  validate(p);
  return integrate_fd(p.q, p.eta, p.beta, tol, upper_limit);
}

QuadResult quad_fd_std(double q, double eta, double tol) {
  if (!(q > -1.0)) {
    throw DomainError("quad_fd_std: integral diverges for q <= -1", q);
  }
  if (!std::isfinite(eta)) throw DomainError("quad_fd_std: eta must be finite");
  return integrate_fd(q, eta, 0.0, tol, std::nullopt);
}

std::vector<double> taylor_product_oracle(std::span<const double> a,
                                          std::span<const double> b,
                                          int order) {
  if (a.empty() || b.empty()) {
    throw UsageError("taylor_product_oracle: empty coefficient list");
  }
  if (order < 0) throw UsageError("taylor_product_oracle: negative order");
  std::vector<double> out(order + 1, 0.0);
  for (int n = 0; n <= order; ++n) {
    double s = 0.0;
    for (int j = 0; j <= n; ++j) {
      const std::size_t k = static_cast<std::size_t>(n - j);
      if (static_cast<std::size_t>(j) < a.size() && k < b.size()) {
        s += a[j] * b[k];
      }
    }
    out[n] = s;
  }
  return out;
}

}  // namespace fdrel
