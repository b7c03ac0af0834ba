#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fdrel/quadrature.hpp"
#include "fdrel/types.hpp"

namespace fdrel {

inline constexpr double kDefaultOracleTol = 1e-13;

// Brute-force quadrature of the defining integral of F_q(eta, beta). The
// domain is split at 1 (tanh-sinh handles the x^q endpoint), at the
// logistic knee x = eta and at T = max(2 eta, 40); [T, inf) is mapped to a
// finite interval. upper_limit truncates the domain instead.
QuadResult quad_fd_rel(const FdParams& p, double tol = kDefaultOracleTol,
                       std::optional<double> upper_limit = std::nullopt);

// Same for the standard integral; q > -1 is allowed.
QuadResult quad_fd_std(double q, double eta, double tol = kDefaultOracleTol);

// Truncated product of two power series given by their coefficients; inputs
// are polynomials (zero beyond their length). Returns coefficients 0..order.
std::vector<double> taylor_product_oracle(std::span<const double> a,
                                          std::span<const double> b,
                                          int order);

}  // namespace fdrel
