#include "two_segment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cqom/errors.hpp"
#include "cqom/numeric.hpp"
#include "cqom/params.hpp"

namespace cqom::detail {

namespace {

constexpr double kPi = constants::pi;
constexpr double kCoincident = 1e-12;

struct Pole {
  double omega;
  bool coincident;
};

}  // namespace

TwoSegment::TwoSegment(double left_len, double right_len, double coupling_cap, double cap_per_len,
                       double ind_per_len, EndLoad left, EndLoad right)
    : dl_(left_len), dr_(right_len), cc_(coupling_cap), cap_(cap_per_len), ind_(ind_per_len),
      left_(left), right_(right) {
  if (!(dl_ > 0 && dr_ > 0 && cc_ > 0 && cap_ > 0 && ind_ > 0)) {
    throw DegenerateSpec("segment lengths, coupling capacitance and line constants must be positive");
  }
  v_ = 1.0 / std::sqrt(ind_ * cap_);
  omega_c_ = 1.0 / (std::sqrt(ind_ / cap_) * cc_);
}

double TwoSegment::total_capacitance() const {
  return cap_ * (dl_ + dr_) + cc_ + left_.capacitance + right_.capacitance;
}

double TwoSegment::end_phase(bool left, double omega) const {
  const EndLoad& load = left ? left_ : right_;
  if (load.inductance == 0.0) return 0.0;
  const double k = omega / v_;
  const double eta2 = omega * omega * load.inductance * load.capacitance;
  return std::atan2(k * load.inductance / ind_, 1.0 - eta2);
}

double TwoSegment::phase(bool left, double omega) const {
  return omega / v_ * (left ? dl_ : dr_) + end_phase(left, omega);
}

double TwoSegment::pole_free(double omega) const {
  const double a = phase(true, omega);
  const double b = phase(false, omega);
  return omega_c_ / omega * std::cos(a) * std::cos(b) - std::sin(a + b);
}

double TwoSegment::residual(double omega) const {
  const double x = omega_c_ / (2.0 * omega);
  return -pole_free(omega) / std::sqrt(1.0 + x * x);
}

std::vector<double> TwoSegment::poles(bool left, double omega_max) const {
  const double len = left ? dl_ : dr_;
  const bool loaded = (left ? left_ : right_).inductance != 0.0;
  std::vector<double> out;
  for (int j = 0;; ++j) {
    const double target = (j + 0.5) * kPi;
    double p = target * v_ / len;
    if (loaded) {
      const double lo = std::max(0.0, (target - kPi) * v_ / len);
      auto f = [&](double w) { return phase(left, w) - target; };
      p = numeric::refine_root(f, lo, p);
    }
    if (p > omega_max) break;
    out.push_back(p);
  }
  return out;
}

double TwoSegment::interval_root(double lo, double hi) const {
  auto g = [&](double w) {
    return std::tan(phase(true, w)) + std::tan(phase(false, w)) - omega_c_ / w;
  };
  const double nudge = 8.0 * std::numeric_limits<double>::epsilon() * hi;
  const double a = lo + nudge;
  const double b = hi - nudge;
  const double ga = g(a);
  const double gb = g(b);
  if (ga >= 0.0) return a;
  if (gb <= 0.0) return b;
  return numeric::scan_and_refine(g, a, b, 64);
}

std::vector<double> TwoSegment::roots(int count) const {
  double omega_max = (count + 3) * kPi * v_ / (dl_ + dr_);
  for (int attempt = 0; attempt < 40; ++attempt, omega_max *= 2.0) {
    std::vector<double> all = poles(true, omega_max);
    const std::vector<double> right = poles(false, omega_max);
    all.insert(all.end(), right.begin(), right.end());
    std::sort(all.begin(), all.end());
    std::vector<Pole> merged;
    for (double p : all) {
      if (!merged.empty() && std::abs(p - merged.back().omega) <= kCoincident * p) {
        merged.back().coincident = true;
      } else {
        merged.push_back({p, false});
      }
    }
    std::vector<double> out;
    double lo = 0.0;
    for (const Pole& p : merged) {
      out.push_back(interval_root(lo, p.omega));
      if (p.coincident) out.push_back(p.omega);
      lo = p.omega;
      if (static_cast<int>(out.size()) >= count) break;
    }
    if (static_cast<int>(out.size()) >= count) {
      out.resize(count);
      return out;
    }
  }
  throw RootNotBracketed("could not enumerate the requested number of modes");
}

ModeSolution TwoSegment::make_mode(int index, double omega) const {
  if (!(omega > 0.0)) throw NonPositiveFrequency("mode frequency must be positive");
  ModeSolution m;
  m.index = index;
  m.omega = omega;
  const double k = omega / v_;
  m.wavenumber = k;
  const double tl = end_phase(true, omega);
  const double tr = end_phase(false, omega);
  const double a = k * dl_ + tl;
  const double b = k * dr_ + tr;
  const double rho = omega / omega_c_;

  const double p1 = std::cos(a), q1 = -std::cos(b);
  const double p2 = rho * std::sin(a), q2 = rho * std::sin(b) - std::cos(b);
  double alpha, beta;
  if (std::hypot(p1, q1) >= std::hypot(p2, q2)) {
    alpha = std::cos(b);
    beta = std::cos(a);
  } else {
    alpha = q2;
    beta = -p2;
  }

  const double il = 0.5 * dl_ - (std::sin(2.0 * a) - std::sin(2.0 * tl)) / (4.0 * k);
  const double ir = 0.5 * dr_ - (std::sin(2.0 * b) - std::sin(2.0 * tr)) / (4.0 * k);
  const double jump = -(alpha * std::sin(a) + beta * std::sin(b));
  const double ul = alpha * std::sin(tl);
  const double ur = -beta * std::sin(tr);
  const double norm2 = cap_ * (alpha * alpha * il + beta * beta * ir) + cc_ * jump * jump +
                       left_.capacitance * ul * ul + right_.capacitance * ur * ur;
  double scale = std::sqrt(total_capacitance() / norm2);
  if (std::abs(std::cos(a)) > 1e-10) {
    if (alpha * std::cos(a) < 0.0) scale = -scale;
  } else if (std::abs(std::cos(b)) > 1e-10) {
    if (beta * std::cos(b) < 0.0) scale = -scale;
  } else if (alpha < 0.0) {
    scale = -scale;
  }
  m.left_amplitude = alpha * scale;
  m.right_amplitude = beta * scale;
  m.left_end_phase = tl;
  m.right_end_phase = tr;
  m.normalization = m.left_amplitude * std::cos(a);

  const double x = omega_c_ / (2.0 * omega);
  m.refl_abs = x / std::sqrt(1.0 + x * x);
  m.phase = kPi - std::acos(m.refl_abs);
  m.residual = std::abs(residual(omega));
  return m;
}

std::vector<ModeSolution> TwoSegment::solve(int count) const {
  const std::vector<double> w = roots(count);
  std::vector<ModeSolution> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out.push_back(make_mode(static_cast<int>(i), w[i]));
  return out;
}

double TwoSegment::value(const ModeSolution& m, double x, Side side) const {
  const double tol = 1e-12 * (dl_ + dr_);
  if (x < -dl_ - tol || x > dr_ + tol) {
    std::ostringstream os;
    os << "x = " << x << " outside [" << -dl_ << ", " << dr_ << "]";
    throw OutOfDomain(os.str());
  }
  const double k = m.wavenumber;
  const bool left = x < 0.0 || (x == 0.0 && side != Side::right);
  if (left) return m.left_amplitude * std::sin(k * (x + dl_) + m.left_end_phase);
  return m.right_amplitude * std::sin(k * (x - dr_) - m.right_end_phase);
}

double TwoSegment::derivative(const ModeSolution& m, double x, Side side) const {
  const double tol = 1e-12 * (dl_ + dr_);
  if (x < -dl_ - tol || x > dr_ + tol) {
    std::ostringstream os;
    os << "x = " << x << " outside [" << -dl_ << ", " << dr_ << "]";
    throw OutOfDomain(os.str());
  }
  const double k = m.wavenumber;
  const bool left = x < 0.0 || (x == 0.0 && side != Side::right);
  if (left) return m.left_amplitude * k * std::cos(k * (x + dl_) + m.left_end_phase);
  return m.right_amplitude * k * std::cos(k * (x - dr_) - m.right_end_phase);
}

}  // namespace cqom::detail
