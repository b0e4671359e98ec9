#pragma once

#include "cqom/params.hpp"

namespace fixtures {

// Caption parameters of the bias-flux coupling figure, loop with A/(d_B s1) = 1e-3.
inline cqom::AnalogSystemSpec fig9(double bias = 0.4,
                                   cqom::LengthModel model = cqom::LengthModel::published) {
  using namespace cqom;
  const TransmissionLine a(0.02, 1.46e-10, 4.57e-7);
  const TransmissionLine b(0.4, 1.46e-10, 4.57e-7);
  return {ResonatorASpec(a, 1e-15, Squid(6.17e-22, 30e-15), Flux::from_ratio(bias), model),
          ResonatorBSpec(b), LoopGeometry(0.1, 10e-6, 10.5e-6, 8e-3)};
}

}  // namespace fixtures
