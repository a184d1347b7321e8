#include "msr/scene_sim.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace msr {

double range_resolution(const WaveformConfig& waveform) {
  if (!(waveform.bandwidth_hz > 0.0)) throw ConfigError("bandwidth_hz must be > 0");
  return kSpeedOfLight / (2.0 * waveform.bandwidth_hz);
}

double instantaneous_range(const RadarUnit& radar, const TargetModel& target, double t) {
  const Eigen::Vector2d p = target.position_at(t);
  const double dx = p.x() - radar.position_x_m;
  return std::sqrt(dx * dx + p.y() * p.y() +
                   radar.plane_offset_d_m * radar.plane_offset_d_m);
}

namespace {

void add_noise(DataCube& cube, const SceneConfig& scene) {
  const double snr_db = *scene.noise_snr_db;
  double sigma_max = 1.0;  // reference amplitude when the scene has no targets
  if (!scene.targets.empty()) {
    sigma_max = 0.0;
    for (const auto& t : scene.targets) sigma_max = std::max(sigma_max, t.reflectivity);
  }
  // total complex noise power sigma_max^2 / snr, split evenly between I and Q
  const double sigma_component =
      sigma_max * std::pow(10.0, -snr_db / 20.0) / std::sqrt(2.0);
  std::mt19937_64 engine(scene.rng_seed ^ static_cast<std::uint64_t>(cube.radar_id));
  constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
  const double two_pi = 2.0 * EIGEN_PI;
  for (auto& s : cube.samples) {
    // Box-Muller; u1 in (0,1] so the log stays finite
    const double u1 = (static_cast<double>(engine() >> 11) + 1.0) * kInv53;
    const double u2 = static_cast<double>(engine() >> 11) * kInv53;
    const double mag = sigma_component * std::sqrt(-2.0 * std::log(u1));
    const double ang = two_pi * u2;
    s += std::complex<float>(static_cast<float>(mag * std::cos(ang)),
                             static_cast<float>(mag * std::sin(ang)));
  }
}

}  // namespace

DataCube synthesize_if_cube(const SceneConfig& scene, int radar_id) {
  scene.validate();
  const RadarUnit& radar = scene.radar_by_id(radar_id);
  const WaveformConfig& wf = scene.waveform;

  DataCube cube;
  cube.radar_id = radar_id;
  cube.waveform = wf;
  cube.start_offset_s = radar.start_offset_s;
  cube.samples.assign(cube.expected_sample_count(), {0.0f, 0.0f});

  const int n_fast = wf.fast_time_samples;
  const double four_pi = 4.0 * EIGEN_PI;
  const double phase_scale = four_pi * wf.center_frequency_hz() / kSpeedOfLight;
  const double beat_scale =
      four_pi * wf.slope_hz_per_s() / (kSpeedOfLight * wf.adc_sample_rate_hz);

  const long long n_chirps =
      static_cast<long long>(wf.n_frames) * wf.chirps_per_frame;
  std::vector<std::complex<double>> acc(n_fast);
  std::complex<float>* out = cube.samples.data();
  for (long long c = 0; c < n_chirps; ++c) {
    const double tau = radar.start_offset_s + static_cast<double>(c) * wf.chirp_duration_s;
    std::fill(acc.begin(), acc.end(), std::complex<double>(0.0, 0.0));
    for (const auto& target : scene.targets) {
      const double r = instantaneous_range(radar, target, tau);
      // rotator over fast time: z * w^n with |w| = 1
      std::complex<double> z = std::polar(target.reflectivity, phase_scale * r);
      const std::complex<double> w = std::polar(1.0, beat_scale * r);
      for (int n = 0; n < n_fast; ++n) {
        acc[n] += z;
        z *= w;
      }
    }
    for (int n = 0; n < n_fast; ++n) {
      out[n] = std::complex<float>(static_cast<float>(acc[n].real()),
                                   static_cast<float>(acc[n].imag()));
    }
    out += n_fast;
  }

  if (scene.noise_snr_db) add_noise(cube, scene);
  return cube;
}

DataCube apply_start_offset(const SceneConfig& scene, const DataCube& cube, double offset_s) {
  if (offset_s < 0.0) throw ConfigError("start offset must be >= 0");
  SceneConfig modified = scene;
  bool found = false;
  for (auto& r : modified.radars) {
    if (r.id == cube.radar_id) {
      r.start_offset_s = offset_s;
      found = true;
    }
  }
  if (!found) throw ConfigError("cube radar_id not present in scene");
  return synthesize_if_cube(modified, cube.radar_id);
}

}  // namespace msr
