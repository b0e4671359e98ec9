#pragma once

#include <vector>

#include "cqom/modes.hpp"

namespace cqom::detail {

// Linearized SQUID load at a line end; zero inductance means an ideal ground.
struct EndLoad {
  double inductance = 0.0;
  double capacitance = 0.0;
};

// Two uniform segments [-d_L, 0] and [0, d_R] joined by a series capacitor at x = 0.
// Each outer end is grounded, either directly or through an EndLoad.
class TwoSegment {
public:
  TwoSegment(double left_len, double right_len, double coupling_cap, double cap_per_len,
             double ind_per_len, EndLoad left = {}, EndLoad right = {});

  double wave_speed() const { return v_; }
  double omega_c() const { return omega_c_; }
  double total_capacitance() const;
  double left_len() const { return dl_; }
  double right_len() const { return dr_; }

  double end_phase(bool left, double omega) const;
  double phase(bool left, double omega) const;
  // w_c/w cos(a) cos(b) - sin(a + b), free of tangent poles
  double pole_free(double omega) const;
  // same equation scaled to the form cos(kd - delta) - |r| cos(2 k xi)
  double residual(double omega) const;

  std::vector<double> roots(int count) const;
  ModeSolution make_mode(int index, double omega) const;
  std::vector<ModeSolution> solve(int count) const;

  double value(const ModeSolution& m, double x, Side side = Side::automatic) const;
  double derivative(const ModeSolution& m, double x, Side side = Side::automatic) const;

private:
  std::vector<double> poles(bool left, double omega_max) const;
  double interval_root(double lo, double hi) const;

  double dl_, dr_, cc_, cap_, ind_;
  EndLoad left_, right_;
  double v_, omega_c_;
};

}  // namespace cqom::detail
