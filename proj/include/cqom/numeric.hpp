#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "cqom/errors.hpp"

namespace cqom::numeric {

inline constexpr double kRootRelTol = 1e-12;

// Refines a sign-changing bracket [a, b] of f to relative tolerance in x.
template <class F>
double refine_root(F&& f, double a, double b, double fa, double fb) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    std::ostringstream os;
    os << "no sign change on [" << a << ", " << b << "]";
    throw RootNotBracketed(os.str());
  }
  std::uintmax_t iters = 200;
  boost::math::tools::eps_tolerance<double> tol(50);
  auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
  if (iters >= 200) {
    std::ostringstream os;
    os << "root refinement did not converge on [" << a << ", " << b << "]";
    throw RootNotBracketed(os.str());
  }
  return 0.5 * (r.first + r.second);
}

template <class F>
double refine_root(F&& f, double a, double b) {
  return refine_root(f, a, b, f(a), f(b));
}

// Finds the single sign change of f on [a, b] using a uniform scan, then refines it.
template <class F>
double scan_and_refine(F&& f, double a, double b, int points = 64) {
  double x0 = a;
  double f0 = f(a);
  for (int i = 1; i <= points; ++i) {
    const double x1 = (i == points) ? b : a + (b - a) * static_cast<double>(i) / points;
    const double f1 = f(x1);
    if (f0 == 0.0) return x0;
    if ((f0 > 0.0) != (f1 > 0.0) || f1 == 0.0) return refine_root(f, x0, x1, f0, f1);
    x0 = x1;
    f0 = f1;
  }
  std::ostringstream os;
  os << "scan of " << points << " points found no sign change on [" << a << ", " << b << "]";
  throw RootNotBracketed(os.str());
}

// Adaptive Gauss-Kronrod over [a, b] split at the given interior breakpoints; abs_floor is an
// absolute error that is always accepted.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10, std::vector<double> breaks = {},
                 double abs_floor = 0.0) {
  breaks.erase(std::remove_if(breaks.begin(), breaks.end(),
                              [&](double x) { return !(x > a && x < b); }),
               breaks.end());
  std::sort(breaks.begin(), breaks.end());
  std::vector<double> edges{a};
  edges.insert(edges.end(), breaks.begin(), breaks.end());
  edges.push_back(b);
  double total = 0.0, total_l1 = 0.0, total_err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    double err = 0.0, l1 = 0.0;
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, edges[i], edges[i + 1], 20,
                                                                           rel_tol, &err, &l1);
    total_err += err;
    total_l1 += l1;
  }
  if (!std::isfinite(total) || total_err > 100.0 * rel_tol * total_l1 + abs_floor + 1e-300) {
    std::ostringstream os;
    os << "adaptive quadrature on [" << a << ", " << b << "] reached error " << total_err
       << " against L1 norm " << total_l1;
    throw QuadratureFailure(os.str());
  }
  return total;
}

}  // namespace cqom::numeric
