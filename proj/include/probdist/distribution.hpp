#ifndef PROBDIST_DISTRIBUTION_HPP
#define PROBDIST_DISTRIBUTION_HPP

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "probdist/random.hpp"

namespace probdist {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Set of integers where a mass function may be nonzero: {lower, ...,
// upper}, or {lower, lower+1, ...} when upper is absent. Defaults to
// {0, 1, ...}.
struct DiscreteSupport {
    long long lower = 0;
    std::optional<long long> upper = std::nullopt;

    bool contains(long long x) const { return x >= lower && (!upper || x <= *upper); }
    bool bounded() const { return upper.has_value(); }
    void validate() const;  // throws std::invalid_argument if lower > finite upper
};

// Interval where a density may be nonzero; endpoints may be infinite.
// Defaults to [0, inf).
struct ContinuousSupport {
    double lower = 0.0;
    double upper = kInf;

    bool contains(double x) const { return x >= lower && x <= upper; }
    void validate() const;  // throws std::invalid_argument if lower >= upper
};

using DiscretePmf = std::function<double(long long)>;
using DiscreteCdf = std::function<double(long long)>;
using DiscreteQuantileFn = std::function<long long(double)>;
using DiscreteSampler = std::function<long long(RandomState&)>;

using ContinuousPdf = std::function<double(double)>;
using ContinuousCdf = std::function<double(double)>;
using ContinuousQuantileFn = std::function<double(double)>;
using ContinuousSampler = std::function<double(RandomState&)>;

// ---------------------------------------------------------------------
// Default algorithms. These are what the constructors install when the
// caller does not supply an override; they are also usable on their own.

// F(x) = sum of pmf(k) for k from support.lower to floor(x); 0 below the
// support. Terms are accumulated left to right so that loop_quantile
// walks the exact same partial sums.
double sum_cdf(const DiscretePmf& pmf, const DiscreteSupport& support, double x);

// F(x) as adaptive quadrature of the density over [lower, x] (an infinite
// lower endpoint is mapped onto [0, 1) first), clamped to [0, 1].
double integrate_cdf(const ContinuousPdf& pdf, const ContinuousSupport& support, double x);

// Smallest k in the support whose cumulative mass reaches p. p = 0 gives
// the support's lower bound, p = 1 the largest point with positive mass
// (finite support only). Throws std::runtime_error if the running sum
// fails to reach p within the iteration budget on an unbounded support,
// which signals a pmf summing below 1.
long long loop_quantile(const DiscretePmf& pmf, const DiscreteSupport& support, double p);

// Root of cdf(x) - p by bisection for p in (0, 1). Infinite endpoints are
// bracketed by geometric expansion first; throws std::runtime_error if the
// cdf never straddles p within the expansion budget.
double bisect_quantile(const ContinuousCdf& cdf, const ContinuousSupport& support, double p);

// ---------------------------------------------------------------------
// Distribution values. Immutable once constructed and safe to share
// between threads; sample() mutates only the caller's RandomState.

class DiscreteDistribution {
public:
    DiscreteDistribution(DiscretePmf pmf, DiscreteCdf cdf, DiscreteQuantileFn quantile,
                         DiscreteSampler sampler, DiscreteSupport support, std::string description)
        : pmf_(std::move(pmf)),
          cdf_(std::move(cdf)),
          quantile_(std::move(quantile)),
          sampler_(std::move(sampler)),
          support_(support),
          description_(std::move(description)) {}

    // Mass at x; exactly 0 outside the support and at non-integer x.
    double density(double x) const;

    // P(X <= x), or P(X > x) when lower_tail is false.
    double probability(double x, bool lower_tail = true) const;

    // Q(p) = inf{x : F(x) >= p}; upper-tail flag maps p to 1 - p.
    long long quantile(double p, bool lower_tail = true) const;

    long long sample(RandomState& state) const;

    const DiscreteSupport& support() const { return support_; }
    const std::string& description() const { return description_; }

private:
    DiscretePmf pmf_;
    DiscreteCdf cdf_;
    DiscreteQuantileFn quantile_;
    DiscreteSampler sampler_;
    DiscreteSupport support_;
    std::string description_;
};

class ContinuousDistribution {
public:
    ContinuousDistribution(ContinuousPdf pdf, ContinuousCdf cdf, ContinuousQuantileFn quantile,
                           ContinuousSampler sampler, ContinuousSupport support,
                           std::string description)
        : pdf_(std::move(pdf)),
          cdf_(std::move(cdf)),
          quantile_(std::move(quantile)),
          sampler_(std::move(sampler)),
          support_(support),
          description_(std::move(description)) {}

    double density(double x) const;
    double probability(double x, bool lower_tail = true) const;

    // Q(p); p = 0 and p = 1 map to the support endpoints, which may be
    // the infinity markers.
    double quantile(double p, bool lower_tail = true) const;

    double sample(RandomState& state) const;

    const ContinuousSupport& support() const { return support_; }
    const std::string& description() const { return description_; }

private:
    ContinuousPdf pdf_;
    ContinuousCdf cdf_;
    ContinuousQuantileFn quantile_;
    ContinuousSampler sampler_;
    ContinuousSupport support_;
    std::string description_;
};

// ---------------------------------------------------------------------
// Constructors. Only the density is required; everything else has a
// synthesized default: summed/integrated CDF, while-loop/bisection
// quantile, and inversion sampling through the quantile.

struct DiscreteOptions {
    DiscreteSupport support{};
    DiscreteCdf cdf;
    DiscreteQuantileFn quantile;
    DiscreteSampler sampler;
    std::string description = "discrete distribution";
};

struct ContinuousOptions {
    ContinuousSupport support{};
    ContinuousCdf cdf;
    ContinuousQuantileFn quantile;
    ContinuousSampler sampler;
    std::string description = "continuous distribution";
    // When set, integrates the density over the whole support at
    // construction and warns on stderr if the mass is off 1 by > 1e-4.
    bool check_total_mass = false;
};

DiscreteDistribution make_discrete(DiscretePmf pmf, DiscreteOptions options = {});
ContinuousDistribution make_continuous(ContinuousPdf pdf, ContinuousOptions options = {});

}  // namespace probdist

#endif
