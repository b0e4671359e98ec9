#pragma once

namespace cqom {

struct ModeSolution {
  int index = 0;
  double omega = 0.0;         // rad/s
  double wavenumber = 0.0;    // 1/m
  double normalization = 0.0; // N_n of the tangent-normalized mode form
  double refl_abs = 0.0;      // |r(omega_n)|, zero for a single grounded/SQUID resonator
  double phase = 0.0;         // delta_n, cos(delta) = -|r|
  double residual = 0.0;      // pole-free residual of the mode equation at omega_n
  // u = A_L sin(k(x + d_L) + theta_L) on the left, A_R sin(k(x - d_R) - theta_R) on the right
  double left_amplitude = 0.0;
  double right_amplitude = 0.0;
  double left_end_phase = 0.0;
  double right_end_phase = 0.0;
  double eta = 0.0;           // omega_n / omega_J for SQUID-terminated lines
  bool effective_length_unreliable = false;
};

enum class Side { automatic, left, right };

}  // namespace cqom
