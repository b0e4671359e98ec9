#pragma once

#include <cmath>
#include <functional>
#include <vector>

// Reference root finders that share no code with the library.
namespace oracle {

inline double bisect(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int i = 0; i < 200 && b - a > 1e-15 * std::abs(b); ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// First `count` sign changes of f on (0, hi], found on a uniform grid and bisected.
inline std::vector<double> scan_roots(const std::function<double(double)>& f, double hi, int count,
                                      int steps) {
  std::vector<double> out;
  double x0 = hi / steps;
  double f0 = f(x0);
  for (int i = 2; i <= steps && static_cast<int>(out.size()) < count; ++i) {
    const double x1 = hi * i / steps;
    const double f1 = f(x1);
    if ((f0 > 0.0) != (f1 > 0.0)) out.push_back(bisect(f, x0, x1));
    x0 = x1;
    f0 = f1;
  }
  return out;
}

// Capacitively coupled pair in units l = c = 1: cos(a)cos(b) w_c / w - sin(a + b), a = w d_L, b = w d_R.
inline std::vector<double> pair_roots(double omega_c, double dl, double dr, int count) {
  auto f = [=](double w) {
    return omega_c / w * std::cos(w * dl) * std::cos(w * dr) - std::sin(w * (dl + dr));
  };
  return scan_roots(f, (count + 2) * M_PI / (dl + dr), count, 400000);
}

// Grounded line of length d, l = 1, terminated at x = 0 by an inductance L to ground.
inline std::vector<double> squid_roots(double v, double d, double ind_per_len, double lj, double cj,
                                       int count) {
  auto f = [=](double w) {
    const double k = w / v;
    const double phase = k * d + std::atan2(k * lj / ind_per_len, 1.0 - w * w * lj * cj);
    return std::sin(phase);
  };
  return scan_roots(f, (count + 1) * M_PI * v / d, count, 400000);
}

}  // namespace oracle
