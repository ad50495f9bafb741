#ifndef PROBDIST_SPECIAL_FUNCTIONS_HPP
#define PROBDIST_SPECIAL_FUNCTIONS_HPP

namespace probdist {

// Natural log of the gamma function for x > 0.
// Absolute error well below 1e-12 for x <= 100.
double log_gamma(double x);

// Euler beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b), a, b > 0.
// Evaluated in log space so large arguments do not overflow.
double beta_function(double a, double b);

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
// Monotone nondecreasing in x, P(a, 0) = 0, P(a, inf) = 1.
double regularized_gamma_p(double a, double x);

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

// Regularized incomplete beta I_x(a, b) for x in [0, 1], a, b > 0.
// Satisfies I_x(a, b) = 1 - I_{1-x}(b, a).
double regularized_beta_i(double x, double a, double b);

// Error function; odd, strictly increasing, erf(0) = 0.
double erf(double x);

// Inverse of erf on (-1, 1); erf(inverse_erf(p)) = p to ~1e-15.
double inverse_erf(double p);

// ln C(n, k) for 0 <= k <= n; -infinity when k < 0 or k > n so that
// densities built on binomial coefficients vanish outside the feasible
// range. Requires n >= 0.
double log_binomial_coefficient(long long n, long long k);

}  // namespace probdist

#endif
