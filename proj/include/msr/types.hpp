// Scene, waveform and raw-data types shared by the simulator and the pipeline.
#pragma once

#include <Eigen/Core>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "msr/errors.hpp"

namespace msr {

inline constexpr double kSpeedOfLight = 2.99792458e8;  // m/s

struct WaveformConfig {
  double f_start_hz = 60.0e9;
  double bandwidth_hz = 1.5e9;
  double chirp_duration_s = 2.0e-5;
  int chirps_per_frame = 1024;
  int n_frames = 2930;
  int fast_time_samples = 80;
  double adc_sample_rate_hz = 4.0e6;

  double slope_hz_per_s() const { return bandwidth_hz / chirp_duration_s; }
  double center_frequency_hz() const { return f_start_hz + 0.5 * bandwidth_hz; }
  double frame_duration_s() const { return chirp_duration_s * chirps_per_frame; }
  double slow_rate_hz() const { return 1.0 / frame_duration_s(); }
  double bin_spacing_m() const {
    return kSpeedOfLight * adc_sample_rate_hz /
           (2.0 * slope_hz_per_s() * fast_time_samples);
  }
  void validate() const;
};

struct RadarUnit {
  int id = 0;
  double position_x_m = 0.0;
  // Out-of-plane distance between the radar and the target plane.
  double plane_offset_d_m = 0.0;
  // Acquisition start time relative to the common scene clock.
  double start_offset_s = 0.0;
  void validate() const;
};

struct TargetModel {
  double x_m = 0.0;
  double y_m = 0.0;
  double breath_frequency_hz = 0.3;
  double breath_amplitude_m = 0.01;
  double breath_phase_rad = 0.0;
  double reflectivity = 1.0;
  Eigen::Vector2d vibration_axis{0.0, 1.0};

  Eigen::Vector2d position_at(double t) const {
    const double s = breath_amplitude_m *
                     std::sin(2.0 * EIGEN_PI * breath_frequency_hz * t + breath_phase_rad);
    return Eigen::Vector2d(x_m, y_m) + s * vibration_axis;
  }
  void validate(double slow_rate_hz) const;
};

struct SceneConfig {
  WaveformConfig waveform;
  std::vector<RadarUnit> radars;
  std::vector<TargetModel> targets;
  std::optional<double> noise_snr_db;
  std::uint64_t rng_seed = 0;

  const RadarUnit& radar_by_id(int radar_id) const;
  void validate() const;
};

// Raw IF samples for one radar, frame-major, then chirp, then fast-time sample.
// Samples are kept in the same 32-bit precision the on-disk format uses.
struct DataCube {
  int radar_id = 0;
  WaveformConfig waveform;
  double start_offset_s = 0.0;
  std::vector<std::complex<float>> samples;

  std::size_t expected_sample_count() const {
    return static_cast<std::size_t>(waveform.n_frames) * waveform.chirps_per_frame *
           waveform.fast_time_samples;
  }
  std::complex<float>& at(int frame, int chirp, int fast) {
    return samples[(static_cast<std::size_t>(frame) * waveform.chirps_per_frame + chirp) *
                       waveform.fast_time_samples +
                   fast];
  }
  const std::complex<float>& at(int frame, int chirp, int fast) const {
    return samples[(static_cast<std::size_t>(frame) * waveform.chirps_per_frame + chirp) *
                       waveform.fast_time_samples +
                   fast];
  }
  void validate() const;
};

}  // namespace msr
