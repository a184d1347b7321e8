#include "msr/vital_extraction.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <vector>

#include "msr/dsp.hpp"

namespace msr {

Eigen::VectorXd extract_phase(const RangeTimeMap& map, int bin) {
  if (bin < 0 || bin >= map.n_bins()) throw IndexError("range bin out of map bounds");
  Eigen::VectorXd phase(map.n_frames());
  for (int f = 0; f < map.n_frames(); ++f) {
    phase[f] = std::arg(map.values(f, bin));
  }
  dsp::unwrap_inplace(phase);
  return phase;
}

Eigen::VectorXd phase_to_displacement(const Eigen::VectorXd& phase_rad, double f_c_hz) {
  if (!(f_c_hz > 0.0)) throw ConfigError("center frequency must be > 0");
  Eigen::VectorXd d = phase_rad * (kSpeedOfLight / (4.0 * EIGEN_PI * f_c_hz));
  dsp::remove_mean_and_trend(d);
  return d;
}

Eigen::VectorXd bandpass_respiration(const Eigen::VectorXd& signal, double slow_rate_hz,
                                     double f_lo_hz, double f_hi_hz) {
  if (!(f_lo_hz > 0.0 && f_hi_hz > f_lo_hz)) throw ConfigError("invalid respiration band");
  if (!(slow_rate_hz > 2.0 * f_hi_hz)) {
    throw ConfigError("slow rate must exceed twice the band upper edge");
  }
  const Eigen::Index n = signal.size();
  // need at least one period of the lower band edge to settle
  if (static_cast<double>(n) / slow_rate_hz < 1.0 / f_lo_hz) {
    throw ConfigError("series shorter than the band-pass transient");
  }

  std::vector<std::complex<double>> time(n), freq(n);
  for (Eigen::Index i = 0; i < n; ++i) time[i] = signal[i];
  Eigen::FFT<double> fft;
  fft.fwd(freq, time);

  const double df = slow_rate_hz / static_cast<double>(n);
  const double trans = 0.05;  // Hz
  for (Eigen::Index k = 0; k < n; ++k) {
    const double f_abs = std::min(k * df, (n - k) * df);  // two-sided spectrum
    double gain = 0.0;
    if (f_abs >= f_lo_hz && f_abs <= f_hi_hz) {
      gain = 1.0;
    } else if (f_abs > f_lo_hz - trans && f_abs < f_lo_hz) {
      gain = 0.5 * (1.0 - std::cos(EIGEN_PI * (f_abs - (f_lo_hz - trans)) / trans));
    } else if (f_abs > f_hi_hz && f_abs < f_hi_hz + trans) {
      gain = 0.5 * (1.0 + std::cos(EIGEN_PI * (f_abs - f_hi_hz) / trans));
    }
    freq[static_cast<std::size_t>(k)] *= gain;
  }
  fft.inv(time, freq);

  Eigen::VectorXd out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = time[static_cast<std::size_t>(i)].real();
  return out;
}

RespSignal make_resp_signal(const RangeTimeMap& map, int bin, double f_c_hz, double f_lo_hz,
                            double f_hi_hz) {
  RespSignal s;
  s.radar_id = map.radar_id;
  s.bin_index = bin;
  s.range_m = bin * map.bin_spacing_m;
  s.slow_rate_hz = map.slow_rate_hz;
  s.start_offset_s = map.start_offset_s;
  s.displacement_m = bandpass_respiration(
      phase_to_displacement(extract_phase(map, bin), f_c_hz), map.slow_rate_hz, f_lo_hz,
      f_hi_hz);
  return s;
}

}  // namespace msr
