#pragma once

#include "tailscope/distributions.hpp"
#include "tailscope/quadrature.hpp"

namespace tailscope {

// Exact finite-n probabilities for the ratio events of the ordered absolute
// sample X_(1) <= ... <= X_(n), |X_j| ~ the folded law of the model. All
// functions require a model with an evaluable continuous density and throw
// unsupported_error otherwise.

// Distribution and density of |X|.
double abs_cdf(const DistributionModel& m, double x);
double abs_pdf(const DistributionModel& m, double x);

// P{X_(2) >= rho * X_(1)} = n * Integral (1-F(rho x))^(n-1) p(x) dx.
double exact_min_ratio_prob(const DistributionModel& m, int n, double rho,
                            double abs_tol = 1e-9);

// The complementary event P{X_(2) <= rho * X_(1)} computed through the
// independent "between" integral n * Integral [(1-F(x))^(n-1) -
// (1-F(rho x))^(n-1)] p(x) dx; used as a second algebraic route in tests
// and as the Pareto-characterization quantity (Theorem-3 form 1 - rho^-alpha).
double exact_min_ratio_complement(const DistributionModel& m, int n, double rho,
                                  double abs_tol = 1e-9);

// P{X_(n-1) <= kappa * X_(n)} = n * Integral F^(n-1)(kappa y) p(y) dy.
double exact_max_ratio_prob(const DistributionModel& m, int n, double kappa,
                            double abs_tol = 1e-9);

// Limits as n -> infinity under the regular-variation hypotheses.
double limit_min_ratio(double alpha, double rho);    // 1 - rho^-alpha
double limit_max_ratio(double alpha, double kappa);  // kappa^alpha

// Two-sided Gaussian first-kind reference 2*(1 - Phi(k)).
double gaussian_first_kind_reference(double k);

enum class PairKind { MinPair, MaxPair };

// Joint density of the extreme pair of the folded sample at (x,y), x <= y:
//   min pair (X_(1),X_(2)):   n(n-1) (1-F(y))^(n-2) p(x) p(y)
//   max pair (X_(n-1),X_(n)): n(n-1) F^(n-2)(x) p(x) p(y)
double joint_extreme_pair_density(const DistributionModel& m, int n, double x, double y,
                                  PairKind which);

} // namespace tailscope
