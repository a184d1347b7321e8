#include "msr/types.hpp"

#include <cmath>
#include <string>

namespace msr {

void WaveformConfig::validate() const {
  if (!(bandwidth_hz > 0.0)) throw ConfigError("bandwidth_hz must be > 0");
  if (!(chirp_duration_s > 0.0)) throw ConfigError("chirp_duration_s must be > 0");
  if (!(f_start_hz > 0.0)) throw ConfigError("f_start_hz must be > 0");
  if (!(adc_sample_rate_hz > 0.0)) throw ConfigError("adc_sample_rate_hz must be > 0");
  if (chirps_per_frame < 1) throw ConfigError("chirps_per_frame must be >= 1");
  if (n_frames < 1) throw ConfigError("n_frames must be >= 1");
  if (fast_time_samples < 1) throw ConfigError("fast_time_samples must be >= 1");
  // One chirp must be long enough to hold all requested ADC samples.
  if (fast_time_samples > adc_sample_rate_hz * chirp_duration_s * (1.0 + 1e-12)) {
    throw ConfigError("fast_time_samples exceeds adc_sample_rate_hz * chirp_duration_s");
  }
}

void RadarUnit::validate() const {
  if (plane_offset_d_m < 0.0) throw ConfigError("radar plane_offset_d_m must be >= 0");
  if (start_offset_s < 0.0) throw ConfigError("radar start_offset_s must be >= 0");
}

void TargetModel::validate(double slow_rate_hz) const {
  if (!(y_m > 0.0)) throw ConfigError("target y_m must be > 0");
  if (!(breath_frequency_hz > 0.0) || breath_frequency_hz >= 0.5 * slow_rate_hz) {
    throw ConfigError("target breath_frequency_hz must lie in (0, slow_rate/2)");
  }
  if (breath_amplitude_m < 0.0) throw ConfigError("target breath_amplitude_m must be >= 0");
  if (reflectivity < 0.0) throw ConfigError("target reflectivity must be >= 0");
  if (std::abs(vibration_axis.norm() - 1.0) > 1e-9) {
    throw ConfigError("target vibration_axis must be a unit vector");
  }
}

const RadarUnit& SceneConfig::radar_by_id(int radar_id) const {
  for (const auto& r : radars) {
    if (r.id == radar_id) return r;
  }
  throw ConfigError("no radar with id " + std::to_string(radar_id));
}

void SceneConfig::validate() const {
  waveform.validate();
  if (radars.size() < 2) throw ConfigError("scene needs at least 2 radars for multilateration");
  for (std::size_t i = 0; i < radars.size(); ++i) {
    radars[i].validate();
    for (std::size_t j = i + 1; j < radars.size(); ++j) {
      if (radars[i].position_x_m == radars[j].position_x_m) {
        throw ConfigError("radar x positions must be distinct");
      }
      if (radars[i].id == radars[j].id) throw ConfigError("radar ids must be distinct");
    }
  }
  const double slow = waveform.slow_rate_hz();
  for (const auto& t : targets) t.validate(slow);
}

void DataCube::validate() const {
  waveform.validate();
  if (samples.size() != expected_sample_count()) {
    throw ConfigError("cube sample count does not match waveform dimensions");
  }
  for (const auto& s : samples) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
      throw ConfigError("cube contains non-finite samples");
    }
  }
}

}  // namespace msr
