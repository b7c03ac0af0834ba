#pragma once

#include <span>
#include <vector>

namespace fdrel {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243104;
inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kLn2 = 0.69314718055994530941723212145817656808;

bool is_nonpositive_integer(double x);

// True when x + 1/2 is an integer (to within tol).
bool is_half_integer(double x, double tol = 1e-9);

// Real gamma function. Throws DomainError at 0, -1, -2, ...
double gamma_real(double x);

// 1/Gamma(x); exactly zero at the poles of Gamma.
double rgamma(double x);

// psi(two_x / 2) for two_x >= 1, via the closed forms at integer and
// half-integer arguments.
double digamma_int_halfint(int two_x);

// Rising factorial x (x+1) ... (x+k-1).
double pochhammer(double x, int k);

// Taylor coefficients of pi s / sin(pi s). Odd entries are zero.
class TauTable {
 public:
  static constexpr int kMaxIndex = 200;

  static const TauTable& instance();

  double operator[](int n) const;
  std::span<const double> values() const { return values_; }

 private:
  TauTable();
  std::vector<double> values_;
};

// tau_n; zero for odd n.
double tau(int n);

}  // namespace fdrel
