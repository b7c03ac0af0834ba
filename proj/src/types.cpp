#include "fdrel/types.hpp"

#include <cmath>

#include "fdrel/error.hpp"
#include "fdrel/special.hpp"

namespace fdrel {

void validate(const FdParams& p) {
  if (!std::isfinite(p.q) || !std::isfinite(p.eta) || !std::isfinite(p.beta)) {
    throw DomainError("parameters must be finite");
  }
  if (p.q < 0.0) throw DomainError("q must be nonnegative", p.q);
  if (p.beta < 0.0) throw DomainError("beta must be nonnegative", p.beta);
}

QClass classify_q(double q) {
  if (is_half_integer(q)) return QClass::HalfInteger;
  if (q >= 0.0 && q == std::floor(q)) return QClass::Integer;
  return QClass::Generic;
}

int half_integer_m(double q) {
  return static_cast<int>(std::lround(q + 1.5));
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::NegEtaSeries: return "neg-eta-series";
    case Method::LargeEtaGeneric: return "large-eta-generic";
    case Method::LargeEtaHalfInt: return "large-eta-halfint";
    case Method::SmallBeta: return "small-beta";
    case Method::LargeBetaGeneric: return "large-beta-generic";
    case Method::LargeBetaHalfInt: return "large-beta-halfint";
    case Method::Quadrature: return "quadrature";
  }
  return "unknown";
}

}  // namespace fdrel
