#include "fdrel/coefficients.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "fdrel/error.hpp"
#include "fdrel/special.hpp"

namespace fdrel {

namespace {

void check_order(int k, const char* who) {
  if (k < 0 || k > kMaxCoefficientOrder) {
    throw DomainError(std::string(who) + ": order out of range [0, 64]", k);
  }
}

void check_generic(double q, const char* who) {
  if (is_half_integer(q)) {
    throw DomainError(std::string(who) +
                          ": q is a half-integer, use the m-indexed family",
                      q);
  }
}

void check_m_beta(int m, double beta, const char* who) {
  if (m < 2) throw DomainError(std::string(who) + ": m must be >= 2", m);
  if (!(beta > 0.0)) throw DomainError(std::string(who) + ": beta must be > 0", beta);
}

std::vector<double> tau_convolve(const std::vector<double>& x) {
  const TauTable& tau = TauTable::instance();
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j <= k; j += 2) s += tau[static_cast<int>(j)] * x[k - j];
    out[k] = s;
  }
  return out;
}

// psi(m - 1/2 + k) - psi(1 + k) - psi(m + k + 1)
double psi_bracket(int m, int k) {
  return digamma_int_halfint(2 * m - 1 + 2 * k) - digamma_int_halfint(2 + 2 * k) -
         digamma_int_halfint(2 * (m + k + 1));
}

}  // namespace

std::vector<double> m_series_coeffs(double q, double beta, int n_max) {
  check_order(n_max, "m_series_coeffs");
  check_generic(q, "m_series_coeffs");
  if (!(beta > 0.0)) throw DomainError("m_series_coeffs: beta must be > 0", beta);
  std::vector<double> m(n_max + 1);
  m[0] = 1.0;
  const double r = 2.0 / beta;
  const double b = -q - 0.5;
  for (int k = 0; k < n_max; ++k) {
    m[k + 1] = m[k] * r * (-0.5 + k) / ((k + 1.0) * (b + k));
  }
  return m;
}

std::vector<double> a_coeffs(double q, double beta, int n_max) {
  return tau_convolve(m_series_coeffs(q, beta, n_max));
}

double a_m_constant(int m) {
  double fact = 1.0;
  for (int j = 2; j <= m; ++j) fact *= j;
  const double sign = (m + 1) % 2 == 0 ? 1.0 : -1.0;
  return sign / (fact * -2.0 * kSqrtPi);  // Gamma(-1/2) = -2 sqrt(pi)
}

PqrFamily pqr_family(int m, double beta, int k_max) {
  check_m_beta(m, beta, "pqr_family");
  check_order(k_max, "pqr_family");
  PqrFamily f;
  f.A_m = a_m_constant(m);
  const double r = 2.0 / beta;
  const double log_r = std::log(r);
  f.P.resize(k_max + 1);
  f.Q.resize(k_max + 1);
  f.P[0] = 1.0;
  for (int k = 0; k < k_max; ++k) {
    f.P[k + 1] = f.P[k] * r * (m - 0.5 + k) / ((k + 1.0) * (m + 1.0 + k));
  }
  for (int k = 0; k <= k_max; ++k) f.Q[k] = f.P[k] * (log_r + psi_bracket(m, k));

  const double g = gamma_real(m - 0.5);
  f.R.resize(m);
  for (int k = 1; k <= m; ++k) {
    double v = std::pow(r, -k) * pochhammer(1.5 - m + k, m - k) / g;
    for (int j = 2; j <= k - 1; ++j) v *= j;
    for (int j = 2; j <= m - k; ++j) v /= j;
    f.R[k - 1] = v;
  }
  f.p = tau_convolve(f.P);
  f.q = tau_convolve(f.Q);
  return f;
}

CdCoeffs cd_coeffs(double q, int k_max) {
  check_generic(q, "cd_coeffs");
  check_order(k_max, "cd_coeffs");
  CdCoeffs out;
  out.c.resize(k_max + 1);
  out.d.resize(k_max + 1);
  out.c[0] = 1.0;
  out.d[0] = 1.0;
  for (int k = 0; k < k_max; ++k) {
    out.c[k + 1] = out.c[k] * 2.0 * (q + 1.0 + k) / ((k + 1.0) * (q + 2.5 + k));
    out.d[k + 1] = out.d[k] * 2.0 * (-0.5 + k) / ((k + 1.0) * (-q - 0.5 + k));
  }
  return out;
}

TildePq tilde_pq(int m, double beta, int k_max) {
  check_m_beta(m, beta, "tilde_pq");
  check_order(k_max, "tilde_pq");
  TildePq t;
  t.Ptilde.resize(k_max + 1);
  t.Qtilde.resize(k_max + 1);
  const double log_r = std::log(2.0 / beta);
  t.Ptilde[0] = 1.0;
  for (int k = 0; k < k_max; ++k) {
    t.Ptilde[k + 1] =
        t.Ptilde[k] * 2.0 * (m - 0.5 + k) / ((k + 1.0) * (m + 1.0 + k));
  }
  for (int k = 0; k <= k_max; ++k) {
    t.Qtilde[k] = t.Ptilde[k] * (log_r + psi_bracket(m, k));
  }
  return t;
}

struct CoefficientCache::Impl {
  using Key = std::tuple<int, double, double, int>;
  mutable std::mutex mu;
  std::map<Key, std::shared_ptr<const Entry>> entries;

  template <typename Build>
  std::shared_ptr<const Entry> get(const Key& key, Build build) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = entries.find(key);
    if (it != entries.end()) return it->second;
    auto entry = std::make_shared<const Entry>(build());
    entries.emplace(key, entry);
    return entry;
  }
};

CoefficientCache::CoefficientCache() : impl_(std::make_shared<Impl>()) {}

CoefficientCache& CoefficientCache::global() {
  static CoefficientCache cache;
  return cache;
}

std::shared_ptr<const CoefficientCache::Entry> CoefficientCache::generic(
    double q, double beta, int k_max) {
  const Impl::Key key{static_cast<int>(QClass::Generic), q, beta, k_max};
  return impl_->get(key, [&] {
    Entry e;
    e.qclass = QClass::Generic;
    e.q = q;
    e.beta = beta;
    e.k_max = k_max;
    if (beta > 0.0) e.a = a_coeffs(q, beta, k_max);
    e.cd = cd_coeffs(q, k_max);
    return e;
  });
}

std::shared_ptr<const CoefficientCache::Entry> CoefficientCache::half_integer(
    int m, double beta, int k_max) {
  const Impl::Key key{static_cast<int>(QClass::HalfInteger), m, beta, k_max};
  return impl_->get(key, [&] {
    Entry e;
    e.qclass = QClass::HalfInteger;
    e.q = m - 1.5;
    e.beta = beta;
    e.k_max = k_max;
    e.pqr = pqr_family(m, beta, k_max);
    e.tilde = tilde_pq(m, beta, k_max);
    return e;
  });
}

std::size_t CoefficientCache::size() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->entries.size();
}

void CoefficientCache::clear() {
  std::lock_guard<std::mutex> lock(impl_->mu);
  impl_->entries.clear();
}

}  // namespace fdrel
