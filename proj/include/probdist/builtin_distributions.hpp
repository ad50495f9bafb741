#ifndef PROBDIST_BUILTIN_DISTRIBUTIONS_HPP
#define PROBDIST_BUILTIN_DISTRIBUTIONS_HPP

#include "probdist/distribution.hpp"

namespace probdist {

// Named families with closed-form CDFs (and quantiles where simple).
// Each constructor validates its parameters and throws
// std::invalid_argument naming the violated constraint.

// Successes in n trials with success probability p; support {0, ..., n}.
DiscreteDistribution binomial_distribution(long long n, double p);

// Mean lambda > 0; support {0, 1, ...}.
DiscreteDistribution poisson_distribution(double lambda);

// Failures before the first success, 0 < p <= 1; support {0, 1, ...}.
DiscreteDistribution geometric_distribution(double p);

// Failures before the r-th success; real r > 0, 0 < p <= 1.
DiscreteDistribution negative_binomial_distribution(double r, double p);

// Marked draws when k items are drawn without replacement from m marked
// and n unmarked; support is declared as {0, ..., m}, with zero mass at
// infeasible points.
DiscreteDistribution hypergeometric_distribution(long long m, long long n, long long k);

ContinuousDistribution uniform_distribution(double a, double b);

// Rate parameterization: density lambda e^{-lambda x} on [0, inf).
ContinuousDistribution exponential_distribution(double lambda);

ContinuousDistribution normal_distribution(double mu, double sigma);

// Shape alpha, rate lambda.
ContinuousDistribution gamma_distribution(double alpha, double lambda);

ContinuousDistribution chi_squared_distribution(double nu);

ContinuousDistribution student_t_distribution(double nu);

ContinuousDistribution fisher_f_distribution(double nu1, double nu2);

ContinuousDistribution beta_distribution(double alpha, double beta);

}  // namespace probdist

#endif
