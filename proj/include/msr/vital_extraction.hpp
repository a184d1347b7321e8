// Slow-time phase extraction and conversion to respiration displacement.
#pragma once

#include <Eigen/Core>

#include "msr/range_processing.hpp"

namespace msr {

// Real-valued respiration displacement series for one (radar, range bin).
struct RespSignal {
  int radar_id = 0;
  int bin_index = 0;
  double range_m = 0.0;
  Eigen::VectorXd displacement_m;
  double slow_rate_hz = 0.0;
  double start_offset_s = 0.0;
};

/// Unwrapped per-frame phase of the given range bin; successive differences
/// lie in (-pi, pi].
Eigen::VectorXd extract_phase(const RangeTimeMap& map, int bin);

/// Invert phase = 4 pi f_c / c * displacement, then remove mean and linear trend.
Eigen::VectorXd phase_to_displacement(const Eigen::VectorXd& phase_rad, double f_c_hz);

/// Zero-phase band-pass implemented by masking the DFT with cosine-tapered
/// edges (transition 0.05 Hz).
Eigen::VectorXd bandpass_respiration(const Eigen::VectorXd& signal, double slow_rate_hz,
                                     double f_lo_hz = 0.1, double f_hi_hz = 0.7);

/// Full per-bin chain: phase -> displacement -> band-pass.
RespSignal make_resp_signal(const RangeTimeMap& map, int bin, double f_c_hz,
                            double f_lo_hz = 0.1, double f_hi_hz = 0.7);

}  // namespace msr
