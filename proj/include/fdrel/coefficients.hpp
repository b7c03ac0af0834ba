#pragma once

#include <memory>
#include <vector>

#include "fdrel/types.hpp"

namespace fdrel {

// a_0..a_{n_max}: Taylor coefficients of pi s / sin(pi s) * M(-1/2; -q-1/2; 2s/beta).
// Throws DomainError for half-integer q.
std::vector<double> a_coeffs(double q, double beta, int n_max);

// Taylor coefficients of M(-1/2; -q-1/2; 2s/beta) in s.
std::vector<double> m_series_coeffs(double q, double beta, int n_max);

struct PqrFamily {
  double A_m = 0.0;
  std::vector<double> P;  // k = 0..k_max
  std::vector<double> Q;
  std::vector<double> R;  // R[k - 1] holds R_{m,k}, k = 1..m
  std::vector<double> p;  // Cauchy products with tau
  std::vector<double> q;
};

// Coefficients of the half-integer large-eta expansion, q = m - 3/2.
PqrFamily pqr_family(int m, double beta, int k_max);

struct CdCoeffs {
  std::vector<double> c;
  std::vector<double> d;
};

// Large-beta coefficients for generic q.
CdCoeffs cd_coeffs(double q, int k_max);

struct TildePq {
  std::vector<double> Ptilde;
  std::vector<double> Qtilde;
};

// Large-beta coefficients for half-integer q = m - 3/2.
TildePq tilde_pq(int m, double beta, int k_max);

// A_m = (-1)^{m+1} / (m! Gamma(-1/2)).
double a_m_constant(int m);

// Memoized coefficient tables keyed by (qclass, q or m, beta, k_max). Readers
// get shared immutable entries; a missing entry is built under the lock.
class CoefficientCache {
 public:
  struct Entry {
    QClass qclass = QClass::Generic;
    double q = 0.0;
    double beta = 0.0;
    int k_max = 0;
    std::vector<double> a;
    CdCoeffs cd;
    PqrFamily pqr;
    TildePq tilde;
  };

  static CoefficientCache& global();

  // Generic q: fills a and cd.
  std::shared_ptr<const Entry> generic(double q, double beta, int k_max);
  // Half-integer q = m - 3/2: fills pqr and tilde.
  std::shared_ptr<const Entry> half_integer(int m, double beta, int k_max);

  std::size_t size() const;
  void clear();

 private:
  struct Impl;
  CoefficientCache();
  std::shared_ptr<Impl> impl_;
};

inline constexpr int kMaxCoefficientOrder = 64;

}  // namespace fdrel
