#include "msr/range_processing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "msr/dsp.hpp"

namespace msr {

void CfarParams::validate(int profile_len) const {
  if (training_cells < 2) throw ConfigError("cfar training_cells must be >= 2");
  if (guard_cells < 0) throw ConfigError("cfar guard_cells must be >= 0");
  if (!(pfa > 0.0 && pfa < 1.0)) throw ConfigError("cfar pfa must lie in (0, 1)");
  if (!(plateau_tolerance >= 0.0 && plateau_tolerance < 1.0)) {
    throw ConfigError("cfar plateau_tolerance must lie in [0, 1)");
  }
  if (profile_len <= 2 * (guard_cells + training_cells) + 1) {
    throw ConfigError("profile too short for the configured CFAR window");
  }
}

RangeTimeMap range_fft(const DataCube& cube, Window window) {
  const WaveformConfig& wf = cube.waveform;
  wf.validate();
  if (cube.samples.size() != cube.expected_sample_count()) {
    throw ConfigError("cube sample count does not match waveform dimensions");
  }
  const int n_fast = wf.fast_time_samples;
  const int n_chirps = wf.chirps_per_frame;
  const int n_frames = wf.n_frames;

  Eigen::VectorXd w = window == Window::kHann ? dsp::hann_periodic<double>(n_fast)
                                              : Eigen::VectorXd::Ones(n_fast);
  const Eigen::MatrixXcd dft = dsp::dft_matrix<double>(n_fast) * w.asDiagonal();

  RangeTimeMap map;
  map.radar_id = cube.radar_id;
  map.bin_spacing_m = wf.bin_spacing_m();
  map.slow_rate_hz = wf.slow_rate_hz();
  map.start_offset_s = cube.start_offset_s;
  map.values.resize(n_frames, n_fast);

  Eigen::VectorXcd acc(n_fast);
  const std::complex<float>* p = cube.samples.data();
  for (int f = 0; f < n_frames; ++f) {
    acc.setZero();
    for (int c = 0; c < n_chirps; ++c) {
      for (int n = 0; n < n_fast; ++n) {
        acc[n] += std::complex<double>(p[n].real(), p[n].imag());
      }
      p += n_fast;
    }
    acc /= static_cast<double>(n_chirps);
    map.values.row(f) = (dft * acc).transpose();
  }
  return map;
}

Eigen::VectorXd mean_profile(const RangeTimeMap& map) {
  if (map.n_frames() < 1) throw ConfigError("range-time map has no frames");
  return map.values.cwiseAbs().colwise().mean().transpose();
}

std::vector<Detection> cfar_detect(const Eigen::VectorXd& profile, const CfarParams& params,
                                   double bin_spacing_m) {
  const int n = static_cast<int>(profile.size());
  params.validate(n);

  std::vector<Detection> out;
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    int count = 0;
    for (int j = i - params.guard_cells - params.training_cells; j < i - params.guard_cells;
         ++j) {
      if (j >= 0 && j < n) {
        sum += profile[j];
        ++count;
      }
    }
    for (int j = i + params.guard_cells + 1; j <= i + params.guard_cells + params.training_cells;
         ++j) {
      if (j >= 0 && j < n) {
        sum += profile[j];
        ++count;
      }
    }
    const double mean = sum / count;
    const double alpha = count * (std::pow(params.pfa, -1.0 / count) - 1.0);
    if (!(profile[i] > alpha * mean)) continue;

    const double keep = 1.0 - params.plateau_tolerance;
    const double left = i > 0 ? profile[i - 1] : -std::numeric_limits<double>::infinity();
    const double right = i < n - 1 ? profile[i + 1] : -std::numeric_limits<double>::infinity();
    if (profile[i] < keep * left || profile[i] < keep * right) continue;

    Detection d;
    d.bin_index = i;
    d.range_m = i * bin_spacing_m;
    d.snr_estimate_db = mean > 0.0 ? 10.0 * std::log10(profile[i] / mean)
                                   : std::numeric_limits<double>::infinity();
    out.push_back(d);
  }
  return out;
}

std::vector<int> candidate_bins(const std::vector<Detection>& detections, int expansion,
                                int n_bins) {
  if (expansion < 0) throw ConfigError("expansion must be >= 0");
  std::set<int> bins;
  for (const auto& d : detections) {
    for (int b = d.bin_index - expansion; b <= d.bin_index + expansion; ++b) {
      if (b >= 0 && b < n_bins) bins.insert(b);
    }
  }
  return {bins.begin(), bins.end()};
}

}  // namespace msr
