#include "probdist/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>
#include <string>

#include "probdist/quadrature.hpp"

namespace probdist {

namespace {

constexpr long long kDiscreteIterationCap = 10'000'000;
constexpr double kQuadratureTol = 1e-9;
constexpr int kQuadratureBudget = 10'000;
constexpr double kBisectWidthTol = 1e-10;
constexpr double kBisectValueTol = 1e-12;
constexpr int kBisectIterationCap = 200;
constexpr int kBracketExpansionCap = 60;

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

void require_probability(double p, const char* where) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error(std::string(where) + ": probability must lie in [0, 1], got " +
                                std::to_string(p));
    }
}

// Largest point of a bounded support with positive mass; the support's
// lower bound if the pmf is identically zero.
long long last_mass_point(const DiscretePmf& pmf, const DiscreteSupport& support) {
    for (long long k = *support.upper; k > support.lower; --k) {
        if (pmf(k) > 0.0) return k;
    }
    return support.lower;
}

// Integral of f over (-inf, b] via t = b - u / (1 - u).
double integrate_left_tail(const ContinuousPdf& pdf, double b) {
    const auto transformed = [&pdf, b](double u) {
        const double den = 1.0 - u;
        if (den <= 0.0) return 0.0;
        const double t = b - u / den;
        if (!std::isfinite(t)) return 0.0;
        const double v = pdf(t);
        return v == 0.0 ? 0.0 : v / (den * den);
    };
    return integrate_adaptive(transformed, 0.0, 1.0, kQuadratureTol, kQuadratureBudget);
}

// Integral of f over [a, inf) via t = a + u / (1 - u).
double integrate_right_tail(const ContinuousPdf& pdf, double a) {
    const auto transformed = [&pdf, a](double u) {
        const double den = 1.0 - u;
        if (den <= 0.0) return 0.0;
        const double t = a + u / den;
        if (!std::isfinite(t)) return 0.0;
        const double v = pdf(t);
        return v == 0.0 ? 0.0 : v / (den * den);
    };
    return integrate_adaptive(transformed, 0.0, 1.0, kQuadratureTol, kQuadratureBudget);
}

double total_mass(const ContinuousPdf& pdf, const ContinuousSupport& support) {
    const bool lower_inf = std::isinf(support.lower);
    const bool upper_inf = std::isinf(support.upper);
    if (!lower_inf && !upper_inf) {
        return integrate_adaptive(pdf, support.lower, support.upper, 1e-6, kQuadratureBudget);
    }
    if (lower_inf && upper_inf) return integrate_left_tail(pdf, 0.0) + integrate_right_tail(pdf, 0.0);
    if (lower_inf) return integrate_left_tail(pdf, support.upper);
    return integrate_right_tail(pdf, support.lower);
}

}  // namespace

void DiscreteSupport::validate() const {
    if (upper && lower > *upper) {
        throw std::invalid_argument("discrete support: lower bound " + std::to_string(lower) +
                                    " exceeds upper bound " + std::to_string(*upper));
    }
}

void ContinuousSupport::validate() const {
    if (!(lower < upper)) {
        throw std::invalid_argument("continuous support: lower bound " + std::to_string(lower) +
                                    " must be below upper bound " + std::to_string(upper));
    }
}

// ---------------------------------------------------------------------
// Default algorithms

double sum_cdf(const DiscretePmf& pmf, const DiscreteSupport& support, double x) {
    if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
    if (x < static_cast<double>(support.lower)) return 0.0;
    long long top;
    if (x >= 9.0e18) {
        if (!support.upper) return 1.0;  // beyond any enumerable range
        top = *support.upper;
    } else {
        top = static_cast<long long>(std::floor(x));
        if (support.upper) top = std::min(top, *support.upper);
    }
    double sum = 0.0;
    for (long long k = support.lower; k <= top; ++k) {
        sum += pmf(k);
        if (sum >= 1.0) break;
        if (k - support.lower >= kDiscreteIterationCap) break;
    }
    return clamp01(sum);
}

long long loop_quantile(const DiscretePmf& pmf, const DiscreteSupport& support, double p) {
    require_probability(p, "loop_quantile");
    if (p == 0.0) return support.lower;
    if (p == 1.0) {
        if (!support.upper) {
            throw std::domain_error(
                "loop_quantile: p = 1 is not attained on a support unbounded above");
        }
        return last_mass_point(pmf, support);
    }
    double sum = 0.0;
    long long k = support.lower;
    for (long long steps = 0;; ++k, ++steps) {
        if (support.upper && k > *support.upper) {
            // float undershoot near p = 1; the inf rule picks the last mass point
            return last_mass_point(pmf, support);
        }
        sum += pmf(k);
        if (sum >= p) return k;
        if (steps >= kDiscreteIterationCap) {
            throw std::runtime_error(
                "loop_quantile: cumulative mass reached only " + std::to_string(sum) + " after " +
                std::to_string(steps) + " terms; the mass function appears to sum below 1");
        }
    }
}

double integrate_cdf(const ContinuousPdf& pdf, const ContinuousSupport& support, double x) {
    if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
    if (x <= support.lower) return 0.0;
    const double top = std::min(x, support.upper);
    double raw;
    if (std::isinf(support.lower)) {
        raw = integrate_left_tail(pdf, top);
    } else {
        raw = integrate_adaptive(pdf, support.lower, top, kQuadratureTol, kQuadratureBudget);
    }
    return clamp01(raw);
}

double bisect_quantile(const ContinuousCdf& cdf, const ContinuousSupport& support, double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("bisect_quantile: p must lie in (0, 1), got " + std::to_string(p));
    }
    const bool lower_inf = std::isinf(support.lower);
    const bool upper_inf = std::isinf(support.upper);
    double lo = lower_inf ? -1.0 : support.lower;
    double hi = upper_inf ? 1.0 : support.upper;
    if (hi <= lo) {
        if (upper_inf) hi = lo + 1.0;
        else lo = hi - 1.0;
    }
    if (!lower_inf && cdf(lo) >= p) return lo;
    if (!upper_inf && cdf(hi) < p) return hi;
    if (lower_inf) {
        double step = hi - lo;
        int tries = 0;
        while (cdf(lo) > p) {
            if (++tries > kBracketExpansionCap) {
                throw std::runtime_error(
                    "bisect_quantile: bracket expansion failed toward -infinity");
            }
            lo -= step;
            step *= 2.0;
        }
    }
    if (upper_inf) {
        double step = hi - lo;
        int tries = 0;
        while (cdf(hi) < p) {
            if (++tries > kBracketExpansionCap) {
                throw std::runtime_error(
                    "bisect_quantile: bracket expansion failed toward +infinity");
            }
            hi += step;
            step *= 2.0;
        }
    }
    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < kBisectIterationCap; ++i) {
        mid = 0.5 * (lo + hi);
        const double fm = cdf(mid);
        if (std::fabs(fm - p) < kBisectValueTol) return mid;
        if (fm < p) lo = mid;
        else hi = mid;
        if (hi - lo < kBisectWidthTol * std::max(1.0, std::fabs(mid))) break;
    }
    return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------
// Method wrappers: support clipping, tail flags, and the p = 0 / p = 1
// edge rules live here so overrides get the same semantics as defaults.

double DiscreteDistribution::density(double x) const {
    if (std::isnan(x) || std::floor(x) != x || std::fabs(x) >= 9.0e18) return 0.0;
    const long long k = static_cast<long long>(x);
    if (!support_.contains(k)) return 0.0;
    return pmf_(k);
}

double DiscreteDistribution::probability(double x, bool lower_tail) const {
    if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
    double f;
    if (x < static_cast<double>(support_.lower)) {
        f = 0.0;
    } else if (x >= 9.0e18 && !support_.upper) {
        f = 1.0;
    } else {
        long long k = static_cast<long long>(std::floor(std::min(x, 9.0e18)));
        if (support_.upper) k = std::min(k, *support_.upper);
        f = clamp01(cdf_(k));
    }
    return lower_tail ? f : 1.0 - f;
}

long long DiscreteDistribution::quantile(double p, bool lower_tail) const {
    require_probability(p, "quantile");
    if (!lower_tail) p = 1.0 - p;
    if (p == 0.0) return support_.lower;
    if (p == 1.0) {
        if (!support_.upper) {
            throw std::domain_error("quantile: p = 1 is not attained on a support unbounded above");
        }
        return last_mass_point(pmf_, support_);
    }
    return quantile_(p);
}

long long DiscreteDistribution::sample(RandomState& state) const { return sampler_(state); }

double ContinuousDistribution::density(double x) const {
    if (std::isnan(x) || !support_.contains(x)) return 0.0;
    return pdf_(x);
}

double ContinuousDistribution::probability(double x, bool lower_tail) const {
    if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
    double f;
    if (x <= support_.lower) f = 0.0;
    else if (x >= support_.upper) f = 1.0;
    else f = clamp01(cdf_(x));
    return lower_tail ? f : 1.0 - f;
}

double ContinuousDistribution::quantile(double p, bool lower_tail) const {
    require_probability(p, "quantile");
    if (!lower_tail) p = 1.0 - p;
    if (p == 0.0) return support_.lower;
    if (p == 1.0) return support_.upper;
    return quantile_(p);
}

double ContinuousDistribution::sample(RandomState& state) const { return sampler_(state); }

// ---------------------------------------------------------------------
// Constructors

DiscreteDistribution make_discrete(DiscretePmf pmf, DiscreteOptions options) {
    options.support.validate();
    const DiscreteSupport support = options.support;
    DiscreteCdf cdf = options.cdf
                          ? std::move(options.cdf)
                          : DiscreteCdf([pmf, support](long long x) {
                                return sum_cdf(pmf, support, static_cast<double>(x));
                            });
    DiscreteQuantileFn quantile =
        options.quantile ? std::move(options.quantile)
                         : DiscreteQuantileFn([pmf, support](double p) {
                               return loop_quantile(pmf, support, p);
                           });
    DiscreteSampler sampler =
        options.sampler ? std::move(options.sampler)
                        : DiscreteSampler([quantile](RandomState& state) {
                              return quantile(state.next_uniform());
                          });
    return DiscreteDistribution(std::move(pmf), std::move(cdf), std::move(quantile),
                                std::move(sampler), support, std::move(options.description));
}

ContinuousDistribution make_continuous(ContinuousPdf pdf, ContinuousOptions options) {
    options.support.validate();
    const ContinuousSupport support = options.support;
    if (options.check_total_mass) {
        const double mass = total_mass(pdf, support);
        if (std::fabs(mass - 1.0) > 1e-4) {
            std::cerr << "warning: density for '" << options.description
                      << "' integrates to " << mass << " over its support (expected 1)\n";
        }
    }
    ContinuousCdf cdf = options.cdf
                            ? std::move(options.cdf)
                            : ContinuousCdf([pdf, support](double x) {
                                  return integrate_cdf(pdf, support, x);
                              });
    ContinuousQuantileFn quantile =
        options.quantile ? std::move(options.quantile)
                         : ContinuousQuantileFn([cdf, support](double p) {
                               return bisect_quantile(cdf, support, p);
                           });
    ContinuousSampler sampler =
        options.sampler ? std::move(options.sampler)
                        : ContinuousSampler([quantile](RandomState& state) {
                              double u;
                              do {
                                  u = state.next_uniform();
                              } while (u == 0.0);
                              return quantile(u);
                          });
    return ContinuousDistribution(std::move(pdf), std::move(cdf), std::move(quantile),
                                  std::move(sampler), support, std::move(options.description));
}

}  // namespace probdist
