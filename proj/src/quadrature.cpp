#include "probdist/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace probdist {

namespace {

struct Budget {
    int remaining;
};

double simpson(double a, double fa, double fm, double b, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const std::function<double(double)>& f, double a, double fa, double m, double fm,
              double b, double fb, double whole, double tol, int depth, Budget& budget) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, flm, m, fm);
    const double right = simpson(m, fm, frm, b, fb);
    const double delta = left + right - whole;
    // depth caps recursion once bisection hits the resolution of doubles
    if (std::fabs(delta) <= 15.0 * tol || depth >= 52) {
        return left + right + delta / 15.0;
    }
    if (--budget.remaining <= 0) {
        throw std::runtime_error("integrate_adaptive: subdivision budget exhausted on [" +
                                 std::to_string(a) + ", " + std::to_string(b) + "]");
    }
    return refine(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1, budget) +
           refine(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1, budget);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol, int max_subdivisions) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = simpson(a, fa, fm, b, fb);
    Budget budget{max_subdivisions};
    return refine(f, a, fa, m, fm, b, fb, whole, abs_tol, 0, budget);
}

}  // namespace probdist
