#pragma once

#include <string>
#include <string_view>

namespace fdrel {

// Evaluation point (q, eta, beta) of the relativistic integral
//   F_q(eta, beta) = int_0^inf x^q sqrt(1 + beta x / 2) / (exp(x - eta) + 1) dx.
struct FdParams {
  double q = 0.0;
  double eta = 0.0;
  double beta = 0.0;
};

// Validates q >= 0, beta >= 0 and finiteness; throws DomainError.
void validate(const FdParams& p);

enum class QClass {
  Generic,      // q + 1/2 is not an integer
  HalfInteger,  // q = m - 3/2 for an integer m
  Integer,      // nonnegative integer q (generic for the relativistic series)
};

QClass classify_q(double q);

// m = q + 3/2 for half-integer q.
int half_integer_m(double q);

enum class Method {
  Auto,
  NegEtaSeries,
  LargeEtaGeneric,
  LargeEtaHalfInt,
  SmallBeta,
  LargeBetaGeneric,
  LargeBetaHalfInt,
  Quadrature,
};

std::string_view method_name(Method m);

struct EvalResult {
  double value = 0.0;
  double err_est = 0.0;  // heuristic, see the method documentation
  int terms_used = 1;
  Method method = Method::Auto;
};

}  // namespace fdrel
