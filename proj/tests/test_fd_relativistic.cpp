#include <cmath>
#include <string>

#include "doctest.h"
#include "fdrel/error.hpp"
#include "fdrel/fd_relativistic.hpp"
#include "fdrel/fd_standard.hpp"
#include "fdrel/oracle.hpp"
#include "fdrel/special.hpp"
#include "support.hpp"

using namespace fdrel;
using fdrel::test::frozen;
using fdrel::test::rel;

namespace {

double ref(double q, double eta, double beta) { return quad_fd_rel({q, eta, beta}).value; }

double err(const EvalResult& r, const FdParams& p) { return rel(r.value, ref(p.q, p.eta, p.beta)); }

}  // namespace

TEST_SUITE("fd_relativistic") {

TEST_CASE("negative eta") {
  for (double eta : {-0.5, -7.0, -20.0})
    CHECK(rel(fd_rel_neg_eta({0.75, eta, 0.0}, 1e-14).value,
              fd_std_neg_eta(0.75, eta, 1e-14).value) < 1e-14);
  const EvalResult a = fd_rel_neg_eta({0.75, -20, 4.0 / 3.0}, 1e-14);
  CHECK(a.terms_used <= 4);
  CHECK(rel(a.value, frozen(0.75, -20, 4.0 / 3.0).value) < 1e-13);
  const EvalResult b = fd_rel_neg_eta({0.75, -7, 10.5}, 1e-14);
  CHECK(b.terms_used <= 10);
  CHECK(rel(b.value, frozen(0.75, -7, 10.5).value) < 1e-13);
  CHECK_THROWS_AS(fd_rel_neg_eta({0.75, 1.0, 1.0}, 1e-14), DomainError);
}

TEST_CASE("large eta, generic q") {
  const FdParams p{0.25, 30, 4.0 / 3.0};
  CHECK(rel(fd_rel_large_eta_generic(p, 10, true).value, frozen(0.25, 30, 4.0 / 3.0).value) <
        1e-8);
  // only the leading term at extreme eta
  const FdParams far{0.25, 1000, 10.5};
  const double lead = std::pow(2.0 / 10.5, -0.5) * gamma_real(1.75) * std::pow(1000.0, 1.75) /
                      gamma_real(2.75);
  CHECK(rel(lead, frozen(0.25, 1000, 10.5).value) < 1e-3);
  CHECK(rel(fd_rel_large_eta_generic(far, 0, true).value, frozen(0.25, 1000, 10.5).value) < 1e-3);
  CHECK(fd_rel_large_eta_generic(far, 0, true).terms_used == 1);
  CHECK_THROWS_AS(fd_rel_large_eta_generic({1.5, 20, 1}, 10, true), UsageError);
  CHECK_THROWS_AS(fd_rel_large_eta_generic({0.25, -1, 1}, 10, true), DomainError);
}

TEST_CASE("exponentially small series helps for moderate eta") {
  for (double eta = 6; eta <= 16; eta += 2) {
    const FdParams p{0.25, eta, 4.0 / 3.0};
    const double r = ref(p.q, p.eta, p.beta);
    const double on = rel(fd_rel_large_eta_generic(p, 10, true).value, r);
    const double off = rel(fd_rel_large_eta_generic(p, 10, false).value, r);
    INFO("eta=" << eta);
    CHECK(on <= off);
  }
}

TEST_CASE("large eta, half-integer q") {
  const FdParams p{1.5, 25, 4.0 / 3.0};
  CHECK(rel(fd_rel_large_eta_halfint(p, 10).value, frozen(1.5, 25, 4.0 / 3.0).value) < 1e-8);
  CHECK(rel(fd_rel_large_eta_halfint({4.5, 25, 10.5}, 10).value, frozen(4.5, 25, 10.5).value) <
        1e-8);
  double prev = 1.0;
  for (double eta : {15.0, 20.0, 25.0, 30.0}) {
    const FdParams s{4.5, eta, 10.5};
    const double e = err(fd_rel_large_eta_halfint(s, 10), s);
    CHECK(e <= std::max(prev, 1e-15));  // flat once at round-off
    prev = e;
  }
  const HalfIntParts parts = large_eta_halfint_parts(p, 10);
  CHECK(rel(parts.total() + fs_term(3, 25, 4.0 / 3.0), fd_rel_large_eta_halfint(p, 10).value) <
        1e-15);
  CHECK_THROWS_AS(fd_rel_large_eta_halfint({0.25, 20, 1}, 10), UsageError);
  CHECK_THROWS_AS(fd_rel_large_eta_halfint({-0.5 + 1e-12, 20, 1}, 10), DomainError);
}

TEST_CASE("exponentially small half-integer series") {
  // it only carries e^{-eta}-sized corrections
  const double fs = fs_term(3, 25, 4.0 / 3.0);
  CHECK(std::abs(fs) < 1e-10);
  CHECK(std::abs(fs) > 0.0);
  CHECK(std::abs(fs) < 1e-9 * frozen(1.5, 25, 4.0 / 3.0).value);
  CHECK_THROWS_AS(fs_term(3, -2, 1.0), DomainError);
}

TEST_CASE("small beta") {
  for (double eta : {-3.0, 2.0, 20.0}) {
    const FdParams p{0.75, eta, 0.0};
    CHECK(fd_rel_small_beta(p, 4).value == fd_standard_eval(0.75, eta).value);
  }
  const FdParams p{0.75, 2, 0.01};
  CHECK(rel(fd_rel_small_beta(p, 4).value, frozen(0.75, 2, 0.01).value) < 1e-10);
  // truncation error of the n <= 3 sum scales like beta^4
  const double e1 = err(fd_rel_small_beta({0.75, 2, 0.02}, 3), {0.75, 2, 0.02});
  const double e2 = err(fd_rel_small_beta({0.75, 2, 0.01}, 3), {0.75, 2, 0.01});
  CHECK(e1 / e2 > 12.0);
  CHECK(e1 / e2 < 20.0);
}

TEST_CASE("large beta, generic q") {
  const double e2 = rel(fd_rel_large_beta_generic({2.4, 4.5, 50}, 2).value,
                        frozen(2.4, 4.5, 50).value);
  CHECK(e2 > 9.8e-9);
  CHECK(e2 < 9.8e-7);
  CHECK(rel(fd_rel_large_beta_generic({2.4, 4.5, 100}, 5).value, frozen(2.4, 4.5, 100).value) <
        2.2e-15);
  // needs Fhat of order 1.2 + 1/2 - 5 = -3.3
  const EvalResult r = fd_rel_large_beta_generic({1.2, 10.5, 1000}, 5);
  CHECK(std::isfinite(r.value));
  CHECK(rel(r.value, frozen(1.2, 10.5, 1000).value) < 1e-10);
  CHECK(r.terms_used == 6);
}

TEST_CASE("large beta, half-integer q") {
  const double e0 = rel(fd_rel_large_beta_halfint({1.5, 4.5, 20}, 0).value,
                        frozen(1.5, 4.5, 20).value);
  CHECK(e0 > 2.5e-9);
  CHECK(e0 < 2.5e-7);
  CHECK(rel(fd_rel_large_beta_halfint({1.5, 4.5, 50}, 3).value, frozen(1.5, 4.5, 50).value) <
        2.2e-15);
  // At large beta the F_S series is not small (e^{-2n/beta} is close to 1),
  // yet the P + Q + R assembly is already complete: adding it would spoil
  // the result, so it is reported and left out.
  const LargeBetaHalfIntParts parts = large_beta_halfint_parts({1.5, 4.5, 50}, 3, {}, true);
  CHECK(std::abs(parts.fs_diagnostic) > 1e-6 * parts.total());
  CHECK(rel(parts.total(), frozen(1.5, 4.5, 50).value) < 2.2e-15);
  CHECK(rel(parts.total() + parts.fs_diagnostic, frozen(1.5, 4.5, 50).value) > 1e-6);
}

TEST_CASE("binomial sum equals the F_R term") {
  for (double q : {1.5, 2.5})
    for (auto [eta, beta] : {std::pair{4.5, 20.0}, std::pair{10.0, 50.0}}) {
      const int m = half_integer_m(q);
      CHECK(rel(binomial_sum(q, eta, beta), fr_term(m, eta, beta)) < 1e-13);
    }
}

TEST_CASE("automatic method choice") {
  CHECK(fd_rel_eval({0.75, -7, 4.0 / 3.0}).method == Method::NegEtaSeries);
  CHECK(fd_rel_eval({1.5, 25, 10.5}).method == Method::LargeEtaHalfInt);
  CHECK(fd_rel_eval({0.25, 25, 10.5}).method == Method::LargeEtaGeneric);
  const EvalResult r = fd_rel_eval({2.4, 4.5, 50});
  CHECK(r.method == Method::LargeBetaGeneric);
  CHECK(std::abs(r.value - frozen(2.4, 4.5, 50).value) < 1e-7 * r.value);
  CHECK(fd_rel_eval({1.5, 4.5, 50}).method == Method::LargeBetaHalfInt);
  CHECK(fd_rel_eval({0.75, 2, 0.01}).method == Method::SmallBeta);
  CHECK(fd_rel_eval({0.75, 2, 3}).method == Method::Quadrature);
  CHECK(auto_method({0.75, 2, 3}) == Method::Quadrature);
}

TEST_CASE("errors carry the method name") {
  try {
    fd_rel_eval({1.5, 20, 2}, Method::LargeEtaGeneric);
    FAIL("expected a usage error");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).rfind("[large-eta-generic] ", 0) == 0);
  }
  CHECK_THROWS_AS(fd_rel_eval({-1.0, 0, 0}), DomainError);
  CHECK_THROWS_AS(fd_rel_eval({1.0, 0, -1.0}), DomainError);
  CHECK_THROWS_AS(fd_rel_eval({1.0, NAN, 0}), DomainError);
}

TEST_CASE("beta = 0 reduces to the standard integral") {
  for (double q : {0.25, 0.75, 1.5, 2.4})
    for (double eta : {-7.0, -1.0, 3.0, 25.0})
      CHECK(rel(fd_rel_eval({q, eta, 0}).value, fd_standard_eval(q, eta).value) < 1e-12);
}

TEST_CASE("cross-regime agreement") {
  const FdParams p{0.25, 16, 28};
  const EvalResult le = fd_rel_eval(p, Method::LargeEtaGeneric);
  const EvalResult qd = fd_rel_eval(p, Method::Quadrature);
  const EvalResult lb = fd_rel_eval(p, Method::LargeBetaGeneric);
  const double band = std::max({le.err_est, qd.err_est, lb.err_est});
  CHECK(std::abs(le.value - qd.value) <= band);
  CHECK(std::abs(lb.value - qd.value) <= band);
  CHECK(std::abs(le.value - lb.value) <= band);
}

TEST_CASE("positivity and monotonicity") {
  const double qs[] = {0.25, 1.5, 2.4};
  const double etas[] = {-5.0, 2.0, 20.0};
  const double betas[] = {0.0, 1.0, 40.0};
  for (double q : qs)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double v = fd_rel_eval({q, etas[i], betas[j]}).value;
        CHECK(v > 0.0);
        if (i > 0) CHECK(v > fd_rel_eval({q, etas[i - 1], betas[j]}).value);
        if (j > 0) CHECK(v > fd_rel_eval({q, etas[i], betas[j - 1]}).value);
      }
}

TEST_CASE("every automatic result is accurate on a coarse grid") {
  for (double q : {0.0, 0.25, 1.5, 2.4, 4.5})
    for (double eta : {-30.0, -2.0, 0.0, 5.0, 20.0, 80.0})
      for (double beta : {0.0, 0.01, 1.0, 20.0, 500.0}) {
        const FdParams p{q, eta, beta};
        const EvalResult r = fd_rel_eval(p);
        INFO("q=" << q << " eta=" << eta << " beta=" << beta);
        CHECK(err(r, p) < 1e-8);
      }
}

}
