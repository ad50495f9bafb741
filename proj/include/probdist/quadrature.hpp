#ifndef PROBDIST_QUADRATURE_HPP
#define PROBDIST_QUADRATURE_HPP

#include <functional>

namespace probdist {

// Adaptive Simpson quadrature of f over the finite interval [a, b].
// Subdivides until the local Richardson error estimate meets the absolute
// tolerance; throws std::runtime_error naming the offending subinterval
// once the subdivision budget is spent.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-9, int max_subdivisions = 10000);

}  // namespace probdist

#endif
