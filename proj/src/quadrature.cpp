#include "fdrel/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <queue>

#include "fdrel/error.hpp"

namespace fdrel {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kHalfPi = 1.57079632679489661923132169163975144;

// Kronrod abscissae; odd indices are the 10-point Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208980684742, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double err = 0.0;
  bool frozen = false;
};

Panel gk21(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = 0.0;
  double resk = fc * kWgk[10];
  double resabs = std::abs(resk);
  std::array<double, 10> f1{};
  std::array<double, 10> f2{};
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[10] * std::abs(fc - reskh);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));
  }
  const double ahalf = std::abs(half);
  resk *= half;
  resg *= half;
  resabs *= ahalf;
  resasc *= ahalf;

  double err = std::abs(resk - resg);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  Panel p{a, b, resk, err, false};
  const double floor = 50.0 * kEps * resabs;
  if (err <= floor) {
    p.err = floor;
    p.frozen = true;
  }
  if (!std::isfinite(p.value) || !std::isfinite(p.err)) {
    throw ConvergenceError("gauss_kronrod: non-finite integrand value",
                           p.value, p.err);
  }
  // A panel narrower than the spacing of doubles cannot be refined.
  if (std::abs(b - a) <= 4.0 * kEps * std::max(std::abs(a), std::abs(b))) {
    p.frozen = true;
  }
  return p;
}

}  // namespace

QuadResult gauss_kronrod(const Integrand& f, std::span<const double> breakpoints,
                         const QuadOptions& opts) {
  if (breakpoints.size() < 2) {
    throw UsageError("gauss_kronrod: need at least two breakpoints");
  }
  auto worse = [](const Panel& x, const Panel& y) { return x.err < y.err; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> open(worse);
  double value = 0.0;
  double frozen_value = 0.0;
  double frozen_err = 0.0;
  double open_err = 0.0;
  long evals = 0;
  int panels = 0;

  auto add = [&](const Panel& p) {
    ++panels;
    evals += 21;
    value += p.value;
    if (p.frozen) {
      frozen_value += p.value;
      frozen_err += p.err;
    } else {
      open_err += p.err;
      open.push(p);
    }
  };

  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] != breakpoints[i]) {
      add(gk21(f, breakpoints[i], breakpoints[i + 1]));
    }
  }

  while (!open.empty()) {
    const double target = std::max(opts.abs_tol, opts.rel_tol * std::abs(value));
    if (frozen_err + open_err <= target) break;
    // Frozen panels carry a roundoff floor that can exceed a tight target on
    // its own; stop once the refinable part is at roundoff level too.
    if (open_err <= 50.0 * kEps * std::abs(value)) break;
    if (panels >= opts.max_panels) {
      throw ConvergenceError("gauss_kronrod: panel limit reached", value,
                             frozen_err + open_err);
    }
    const Panel worst = open.top();
    open.pop();
    value -= worst.value;
    open_err -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);
    add(gk21(f, worst.a, mid));
    add(gk21(f, mid, worst.b));
  }
  // Recompute the running sums to shed accumulated cancellation.
  double total = frozen_value;
  double err = frozen_err;
  while (!open.empty()) {
    total += open.top().value;
    err += open.top().err;
    open.pop();
  }
  return {total, err, evals};
}

QuadResult gauss_kronrod(const Integrand& f, double a, double b,
                         const QuadOptions& opts) {
  const std::array<double, 2> bp = {a, b};
  return gauss_kronrod(f, bp, opts);
}

QuadResult gauss_kronrod_tail(const Integrand& f, double a,
                              const QuadOptions& opts) {
  auto g = [&](double t) {
    const double s = 1.0 - t;
    const double x = a + t / s;
    if (!std::isfinite(x)) return 0.0;
    const double v = f(x);
    return v == 0.0 ? 0.0 : v / (s * s);
  };
  return gauss_kronrod(g, 0.0, 1.0, opts);
}

QuadResult tanh_sinh(const Integrand& f, double a, double b,
                     const QuadOptions& opts) {
  constexpr double kTmax = 6.0;
  constexpr int kMaxLevel = 10;
  const double width = b - a;
  const double half = 0.5 * width;
  const double mid = a + half;
  long evals = 0;

  // Contribution of abscissa t (and -t when mirror is set), step size 1.
  auto node = [&](double t) {
    const double u = kHalfPi * std::sinh(t);
    const double cu = std::cosh(u);
    const double w = half * kHalfPi * std::cosh(t) / (cu * cu);
    if (w == 0.0 || !std::isfinite(w)) return 0.0;
    // Distance of the node to the nearer endpoint: width / (exp(2|u|) + 1).
    const double dist = width / (std::exp(2.0 * std::abs(u)) + 1.0);
    double x;
    if (t == 0.0) {
      x = mid;
    } else if (t < 0.0) {
      if (dist == 0.0) return 0.0;
      x = a + dist;
    } else {
      if (dist == 0.0) return 0.0;
      x = b - dist;
    }
    ++evals;
    return w * f(x);
  };

  double h = 1.0;
  double sum = node(0.0);
  for (int k = 1; k * h <= kTmax; ++k) {
    sum += node(k * h) + node(-k * h);
  }
  double estimate = sum * h;
  double err = std::abs(estimate);
  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    double fresh = 0.0;
    for (int k = 1; k * h <= kTmax; k += 2) {
      fresh += node(k * h) + node(-k * h);
    }
    sum += fresh;
    const double next = sum * h;
    err = std::abs(next - estimate);
    estimate = next;
    const double target =
        std::max(opts.abs_tol, opts.rel_tol * std::abs(estimate));
    if (level >= 3 && err <= target) {
      return {estimate, std::max(err, kEps * std::abs(estimate)), evals};
    }
  }
  // Step halving converges quadratically; a stagnating difference at the
  // last level is roundoff.
  if (err <= 1e3 * kEps * std::abs(estimate) + opts.abs_tol) {
    return {estimate, err, evals};
  }
  throw ConvergenceError("tanh_sinh: tolerance not reached", estimate, err);
}

QuadResult exp_sinh(const Integrand& f, double a, const QuadOptions& opts) {
  constexpr double kTmin = -6.5;
  constexpr double kTmax = 4.5;
  constexpr int kMaxLevel = 10;
  long evals = 0;

  auto node = [&](double t) {
    const double e = std::exp(kHalfPi * std::sinh(t));
    const double w = kHalfPi * std::cosh(t) * e;
    if (e == 0.0 || !std::isfinite(w)) return 0.0;
    ++evals;
    const double v = f(a + e);
    return v == 0.0 ? 0.0 : w * v;
  };

  double h = 0.5;
  double sum = 0.0;
  for (int k = static_cast<int>(std::ceil(kTmin / h));
       k <= static_cast<int>(std::floor(kTmax / h)); ++k) {
    sum += node(k * h);
  }
  double estimate = sum * h;
  double err = std::abs(estimate);
  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    double fresh = 0.0;
    int k0 = static_cast<int>(std::ceil(kTmin / h));
    if (k0 % 2 == 0) ++k0;
    for (int k = k0; k * h <= kTmax; k += 2) fresh += node(k * h);
    sum += fresh;
    const double next = sum * h;
    err = std::abs(next - estimate);
    estimate = next;
    const double target =
        std::max(opts.abs_tol, opts.rel_tol * std::abs(estimate));
    if (level >= 3 && err <= target) {
      return {estimate, std::max(err, kEps * std::abs(estimate)), evals};
    }
  }
  if (err <= 1e3 * kEps * std::abs(estimate) + opts.abs_tol) {
    return {estimate, err, evals};
  }
  throw ConvergenceError("exp_sinh: tolerance not reached", estimate, err);
}

const GaussLegendreRule& gauss_legendre_rule(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
  if (n < 1) throw UsageError("gauss_legendre_rule: order must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto rule = std::make_unique<GaussLegendreRule>();
  rule->nodes.assign(n, 0.0);
  rule->weights.assign(n, 0.0);
  const double pi = 2.0 * kHalfPi;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule->nodes[i] = -x;
    rule->nodes[n - 1 - i] = x;
    rule->weights[i] = w;
    rule->weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule->nodes[n / 2] = 0.0;
  auto& ref = *rule;
  cache.emplace(n, std::move(rule));
  return ref;
}

QuadResult gauss_legendre_doubling(const Integrand& f, double a, double b,
                                   double rel_tol, int max_order) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  long evals = 0;
  auto apply = [&](int n, double& abs_sum) {
    const auto& rule = gauss_legendre_rule(n);
    double s = 0.0;
    abs_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double v = f(mid + half * rule.nodes[i]);
      s += rule.weights[i] * v;
      abs_sum += rule.weights[i] * std::abs(v);
    }
    evals += n;
    abs_sum *= std::abs(half);
    return s * half;
  };
  double scale = 0.0;
  double prev = apply(16, scale);
  for (int n = 32; n <= max_order; n *= 2) {
    const double cur = apply(n, scale);
    const double diff = std::abs(cur - prev);
    if (diff <= rel_tol * scale || diff <= 4.0 * kEps * scale) {
      return {cur, std::max(diff, kEps * scale), evals};
    }
    prev = cur;
  }
  throw ConvergenceError("gauss_legendre_doubling: tolerance not reached",
                         prev, std::abs(prev));
}

}  // namespace fdrel
