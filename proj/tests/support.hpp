#pragma once

#include <cmath>

namespace fdrel::test {

inline double rel(double a, double b) {
  if (b == 0.0) return std::abs(a);
  return std::abs(a - b) / std::abs(b);
}

// F_q(eta, beta) from 40-digit mpmath quadrature of the defining integral,
// frozen here so the tests do not lean on our own oracle alone.
struct Frozen {
  double q, eta, beta, value;
};

inline constexpr Frozen kFrozen[] = {
    {0, 0, 0, 0.69314718055994530942},
    {1, 0, 0, 0.82246703342411321824},
    {0.75, -7, 10.5, 0.002533198063712721684},
    {0.75, -20, 4.0 / 3.0, 2.7381707868352581692e-9},
    {0.75, -30, 0, 8.6002406110411601476e-14},
    {0.25, 30, 4.0 / 3.0, 189.53478112541044378},
    {0.25, 10, 4.0 / 3.0, 30.721868544496734418},
    {1.5, 25, 4.0 / 3.0, 4506.9589084028999219},
    {4.5, 25, 10.5, 101205237.38574372737},
    {0.75, 2, 0.01, 2.9330574853736292808},
    {2.4, 4.5, 50, 912.16644728829930086},
    {2.4, 4.5, 100, 1287.2455185380104042},
    {1.2, 10.5, 1000, 5059.4051635599971509},
    {1.5, 4.5, 20, 144.78223706699564294},
    {1.5, 4.5, 50, 227.17944663564471073},
    {0.5, 3, 1, 5.9487167205053359549},
    {2, 1, 2, 8.8294791716929165267},
    {0.25, 1000, 10.5, 232883.59015685473413},
    {3.7, 40, 0.5, 22308696.855360800118},
};

inline const Frozen& frozen(double q, double eta, double beta) {
  for (const auto& f : kFrozen)
    if (f.q == q && f.eta == eta && f.beta == beta) return f;
  throw 0;
}

}  // namespace fdrel::test
