#include "probdist/builtin_distributions.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "probdist/special_functions.hpp"

namespace probdist {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.41421356237309504880;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string num(long long v) { return std::to_string(v); }

[[noreturn]] void bad_parameter(const std::string& message) {
    throw std::invalid_argument(message);
}

// While-loop quantile driven by the closed-form CDF, so that
// quantile(probability(x)) lands back on x exactly.
DiscreteQuantileFn cdf_walk_quantile(DiscreteCdf cdf, DiscreteSupport support) {
    return [cdf = std::move(cdf), support](double p) -> long long {
        long long k = support.lower;
        for (long long steps = 0;; ++k, ++steps) {
            if (support.upper && k >= *support.upper) return *support.upper;
            if (cdf(k) >= p) return k;
            if (steps >= 10'000'000) {
                throw std::runtime_error(
                    "quantile: CDF failed to reach p within the iteration budget");
            }
        }
    };
}

double log_beta(double a, double b) {
    return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

}  // namespace

DiscreteDistribution binomial_distribution(long long n, double p) {
    if (n < 0) bad_parameter("binomial: n must be a nonnegative integer, got " + num(n));
    if (!(p >= 0.0 && p <= 1.0)) bad_parameter("binomial: p must lie in [0, 1], got " + num(p));
    const DiscreteSupport support{0, n};
    DiscretePmf pmf = [n, p](long long x) -> double {
        if (p == 0.0) return x == 0 ? 1.0 : 0.0;
        if (p == 1.0) return x == n ? 1.0 : 0.0;
        return std::exp(log_binomial_coefficient(n, x) + static_cast<double>(x) * std::log(p) +
                        static_cast<double>(n - x) * std::log1p(-p));
    };
    DiscreteCdf cdf = [n, p](long long k) -> double {
        if (k < 0) return 0.0;
        if (k >= n) return 1.0;
        if (p == 0.0) return 1.0;
        if (p == 1.0) return 0.0;
        return regularized_beta_i(1.0 - p, static_cast<double>(n - k), static_cast<double>(k + 1));
    };
    DiscreteOptions options;
    options.support = support;
    options.cdf = cdf;
    options.quantile = cdf_walk_quantile(cdf, support);
    options.description = "binomial(" + num(n) + ", " + num(p) + ")";
    return make_discrete(std::move(pmf), std::move(options));
}

DiscreteDistribution poisson_distribution(double lambda) {
    if (!(lambda > 0.0)) bad_parameter("poisson: lambda must be positive, got " + num(lambda));
    const DiscreteSupport support{0, std::nullopt};
    DiscretePmf pmf = [lambda](long long x) {
        const double k = static_cast<double>(x);
        return std::exp(k * std::log(lambda) - lambda - log_gamma(k + 1.0));
    };
    DiscreteCdf cdf = [lambda](long long k) -> double {
        if (k < 0) return 0.0;
        return regularized_gamma_q(static_cast<double>(k) + 1.0, lambda);
    };
    DiscreteOptions options;
    options.support = support;
    options.cdf = cdf;
    options.quantile = cdf_walk_quantile(cdf, support);
    options.description = "Poisson(" + num(lambda) + ")";
    return make_discrete(std::move(pmf), std::move(options));
}

DiscreteDistribution geometric_distribution(double p) {
    if (!(p > 0.0 && p <= 1.0)) bad_parameter("geometric: p must lie in (0, 1], got " + num(p));
    const DiscreteSupport support{0, std::nullopt};
    DiscretePmf pmf = [p](long long x) {
        return p * std::pow(1.0 - p, static_cast<double>(x));
    };
    DiscreteCdf cdf = [p](long long k) -> double {
        if (k < 0) return 0.0;
        if (p == 1.0) return 1.0;
        return -std::expm1((static_cast<double>(k) + 1.0) * std::log1p(-p));
    };
    DiscreteOptions options;
    options.support = support;
    options.cdf = cdf;
    options.quantile = cdf_walk_quantile(cdf, support);
    options.description = "geometric(" + num(p) + ")";
    return make_discrete(std::move(pmf), std::move(options));
}

DiscreteDistribution negative_binomial_distribution(double r, double p) {
    if (!(r > 0.0)) bad_parameter("negative binomial: r must be positive, got " + num(r));
    if (!(p > 0.0 && p <= 1.0)) {
        bad_parameter("negative binomial: p must lie in (0, 1], got " + num(p));
    }
    const DiscreteSupport support{0, std::nullopt};
    DiscretePmf pmf = [r, p](long long x) -> double {
        if (p == 1.0) return x == 0 ? 1.0 : 0.0;
        const double k = static_cast<double>(x);
        return std::exp(log_gamma(k + r) - log_gamma(r) - log_gamma(k + 1.0) + r * std::log(p) +
                        k * std::log1p(-p));
    };
    DiscreteCdf cdf = [r, p](long long k) -> double {
        if (k < 0) return 0.0;
        if (p == 1.0) return 1.0;
        return regularized_beta_i(p, r, static_cast<double>(k) + 1.0);
    };
    DiscreteOptions options;
    options.support = support;
    options.cdf = cdf;
    options.quantile = cdf_walk_quantile(cdf, support);
    options.description = "negative binomial(" + num(r) + ", " + num(p) + ")";
    return make_discrete(std::move(pmf), std::move(options));
}

DiscreteDistribution hypergeometric_distribution(long long m, long long n, long long k) {
    if (m < 0) bad_parameter("hypergeometric: m must be a nonnegative integer, got " + num(m));
    if (n < 0) bad_parameter("hypergeometric: n must be a nonnegative integer, got " + num(n));
    if (k < 0) bad_parameter("hypergeometric: k must be a nonnegative integer, got " + num(k));
    if (k > m + n) {
        bad_parameter("hypergeometric: k must not exceed m + n, got k=" + num(k) + " with m+n=" +
                      num(m + n));
    }
    const DiscreteSupport support{0, m};
    // Infeasible x inside the declared support get exactly zero mass via
    // the -infinity sentinel of log_binomial_coefficient.
    DiscretePmf pmf = [m, n, k](long long x) {
        return std::exp(log_binomial_coefficient(m, x) + log_binomial_coefficient(n, k - x) -
                        log_binomial_coefficient(m + n, k));
    };
    DiscreteCdf cdf = [pmf, m](long long j) -> double {
        if (j < 0) return 0.0;
        double sum = 0.0;
        for (long long x = 0; x <= std::min(j, m); ++x) sum += pmf(x);
        return std::min(sum, 1.0);
    };
    DiscreteOptions options;
    options.support = support;
    options.cdf = cdf;
    options.quantile = cdf_walk_quantile(cdf, support);
    options.description =
        "hypergeometric(" + num(m) + ", " + num(n) + ", " + num(k) + ")";
    return make_discrete(std::move(pmf), std::move(options));
}

ContinuousDistribution uniform_distribution(double a, double b) {
    if (!(a < b)) bad_parameter("uniform: requires a < b, got a=" + num(a) + ", b=" + num(b));
    const ContinuousSupport support{a, b};
    const double width = b - a;
    ContinuousOptions options;
    options.support = support;
    options.cdf = [a, width](double x) { return (x - a) / width; };
    options.quantile = [a, width](double p) { return a + p * width; };
    options.description = "uniform(" + num(a) + ", " + num(b) + ")";
    return make_continuous([width](double) { return 1.0 / width; }, std::move(options));
}

ContinuousDistribution exponential_distribution(double lambda) {
    if (!(lambda > 0.0)) bad_parameter("exponential: lambda must be positive, got " + num(lambda));
    ContinuousOptions options;
    options.support = {0.0, kInf};
    options.cdf = [lambda](double x) { return -std::expm1(-lambda * x); };
    options.quantile = [lambda](double p) { return -std::log1p(-p) / lambda; };
    options.description = "exponential(" + num(lambda) + ")";
    return make_continuous([lambda](double x) { return lambda * std::exp(-lambda * x); },
                           std::move(options));
}

ContinuousDistribution normal_distribution(double mu, double sigma) {
    if (!(sigma > 0.0)) bad_parameter("normal: sigma must be positive, got " + num(sigma));
    const double norm = 1.0 / (sigma * std::sqrt(2.0 * kPi));
    ContinuousOptions options;
    options.support = {-kInf, kInf};
    options.cdf = [mu, sigma](double x) {
        return 0.5 * (1.0 + probdist::erf((x - mu) / (sigma * kSqrt2)));
    };
    options.quantile = [mu, sigma](double p) {
        return mu + sigma * kSqrt2 * inverse_erf(2.0 * p - 1.0);
    };
    options.description = "normal(" + num(mu) + ", " + num(sigma) + ")";
    return make_continuous(
        [mu, sigma, norm](double x) {
            const double z = (x - mu) / sigma;
            return norm * std::exp(-0.5 * z * z);
        },
        std::move(options));
}

ContinuousDistribution gamma_distribution(double alpha, double lambda) {
    if (!(alpha > 0.0)) bad_parameter("gamma: alpha must be positive, got " + num(alpha));
    if (!(lambda > 0.0)) bad_parameter("gamma: lambda must be positive, got " + num(lambda));
    ContinuousOptions options;
    options.support = {0.0, kInf};
    options.cdf = [alpha, lambda](double x) { return regularized_gamma_p(alpha, lambda * x); };
    options.description = "gamma(" + num(alpha) + ", " + num(lambda) + ")";
    return make_continuous(
        [alpha, lambda](double x) -> double {
            if (x == 0.0) {
                if (alpha < 1.0) return kInf;
                return alpha == 1.0 ? lambda : 0.0;
            }
            return std::exp(alpha * std::log(lambda) + (alpha - 1.0) * std::log(x) - lambda * x -
                            log_gamma(alpha));
        },
        std::move(options));
}

ContinuousDistribution chi_squared_distribution(double nu) {
    if (!(nu > 0.0)) bad_parameter("chi-squared: nu must be positive, got " + num(nu));
    const double half_nu = 0.5 * nu;
    ContinuousOptions options;
    options.support = {0.0, kInf};
    options.cdf = [half_nu](double x) { return regularized_gamma_p(half_nu, 0.5 * x); };
    options.description = "χ²(" + num(nu) + ")";
    return make_continuous(
        [nu, half_nu](double x) -> double {
            if (x == 0.0) {
                if (nu < 2.0) return kInf;
                return nu == 2.0 ? 0.5 : 0.0;
            }
            return std::exp((half_nu - 1.0) * std::log(x) - 0.5 * x - half_nu * std::log(2.0) -
                            log_gamma(half_nu));
        },
        std::move(options));
}

ContinuousDistribution student_t_distribution(double nu) {
    if (!(nu > 0.0)) bad_parameter("t: nu must be positive, got " + num(nu));
    const double log_norm =
        log_gamma(0.5 * (nu + 1.0)) - log_gamma(0.5 * nu) - 0.5 * std::log(nu * kPi);
    ContinuousOptions options;
    options.support = {-kInf, kInf};
    options.cdf = [nu](double x) {
        const double w = regularized_beta_i(nu / (nu + x * x), 0.5 * nu, 0.5);
        return x >= 0.0 ? 1.0 - 0.5 * w : 0.5 * w;
    };
    options.description = "t(" + num(nu) + ")";
    return make_continuous(
        [nu, log_norm](double x) {
            return std::exp(log_norm - 0.5 * (nu + 1.0) * std::log1p(x * x / nu));
        },
        std::move(options));
}

ContinuousDistribution fisher_f_distribution(double nu1, double nu2) {
    if (!(nu1 > 0.0)) bad_parameter("f: nu1 must be positive, got " + num(nu1));
    if (!(nu2 > 0.0)) bad_parameter("f: nu2 must be positive, got " + num(nu2));
    const double log_b = log_beta(0.5 * nu1, 0.5 * nu2);
    ContinuousOptions options;
    options.support = {0.0, kInf};
    options.cdf = [nu1, nu2](double x) {
        const double t = nu1 * x;
        return regularized_beta_i(t / (t + nu2), 0.5 * nu1, 0.5 * nu2);
    };
    options.description = "F(" + num(nu1) + ", " + num(nu2) + ")";
    return make_continuous(
        [nu1, nu2, log_b](double x) -> double {
            if (x == 0.0) {
                if (nu1 < 2.0) return kInf;
                return nu1 == 2.0 ? 1.0 : 0.0;
            }
            const double t = nu1 * x;
            return std::exp(0.5 * (nu1 * std::log(t) + nu2 * std::log(nu2) -
                                   (nu1 + nu2) * std::log(t + nu2)) -
                            std::log(x) - log_b);
        },
        std::move(options));
}

ContinuousDistribution beta_distribution(double alpha, double beta) {
    if (!(alpha > 0.0)) bad_parameter("beta: alpha must be positive, got " + num(alpha));
    if (!(beta > 0.0)) bad_parameter("beta: beta must be positive, got " + num(beta));
    const double log_b = log_beta(alpha, beta);
    ContinuousOptions options;
    options.support = {0.0, 1.0};
    options.cdf = [alpha, beta](double x) { return regularized_beta_i(x, alpha, beta); };
    options.description = "beta(" + num(alpha) + ", " + num(beta) + ")";
    return make_continuous(
        [alpha, beta, log_b](double x) -> double {
            if (x == 0.0) {
                if (alpha < 1.0) return kInf;
                return alpha > 1.0 ? 0.0 : std::exp(-log_b);
            }
            if (x == 1.0) {
                if (beta < 1.0) return kInf;
                return beta > 1.0 ? 0.0 : std::exp(-log_b);
            }
            return std::exp((alpha - 1.0) * std::log(x) + (beta - 1.0) * std::log1p(-x) - log_b);
        },
        std::move(options));
}

}  // namespace probdist
