#include "msr/spectral_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "msr/dsp.hpp"

namespace msr {

AveragedAutocorrelation averaged_autocorrelation(const AssociationSet& set,
                                                 const CorrelationStore& store) {
  if (set.pairs.empty()) throw ConfigError("association set has no pairs");

  struct Member {
    const CorrelationFunction* corr;
    int shift;          // peak lag in samples
    double normalizer;  // correlation value at the peak
  };
  std::vector<Member> members;
  double rate = 0.0;
  Eigen::Index len = 0;
  for (const auto& p : set.pairs) {
    const auto it = store.find({p.m, p.k});
    if (it == store.end()) throw ConfigError("missing stored correlation for pair");
    const CorrelationFunction& corr = it->second;
    if (members.empty()) {
      rate = corr.slow_rate_hz;
      len = corr.values.size();
    } else if (corr.values.size() != len) {
      throw ConfigError("stored correlations must share one lag grid");
    }
    const int shift = static_cast<int>(std::lround(p.peak_lag_s * corr.slow_rate_hz));
    const int half = static_cast<int>((corr.values.size() - 1) / 2);
    if (std::abs(shift) > half) throw ConfigError("peak lag outside stored correlation");
    const double normalizer = corr.values[shift + half];
    if (normalizer == 0.0) throw DegenerateSignalError("zero peak value in Eq. averaging");
    members.push_back({&corr, shift, normalizer});
  }

  const int half = static_cast<int>((len - 1) / 2);
  int lo = -half, hi = half;
  for (const auto& m : members) {
    lo = std::max(lo, -half - m.shift);
    hi = std::min(hi, half - m.shift);
  }
  if (lo > hi) throw ConfigError("shifted correlation supports do not intersect");

  AveragedAutocorrelation acorr;
  acorr.target_id = set.target_id;
  acorr.n_pairs = static_cast<int>(members.size());
  acorr.slow_rate_hz = rate;
  acorr.lags_s.resize(hi - lo + 1);
  acorr.values.resize(hi - lo + 1);
  for (int t = lo; t <= hi; ++t) {
    double acc = 0.0;
    for (const auto& m : members) {
      acc += m.corr->values[t + m.shift + half] / m.normalizer;
    }
    acorr.lags_s[t - lo] = static_cast<double>(t) / rate;
    acorr.values[t - lo] = acc / static_cast<double>(members.size());
  }
  return acorr;
}

RateSpectrum rate_spectrum(const AveragedAutocorrelation& acorr,
                           std::pair<double, double> band_hz, int zero_pad_factor) {
  const Eigen::Index n = acorr.values.size();
  if (n < 2) throw ConfigError("averaged correlation too short for a spectrum");
  if (zero_pad_factor < 1) throw ConfigError("zero_pad_factor must be >= 1");
  const double rate = acorr.slow_rate_hz;
  if (!(band_hz.first > 0.0 && band_hz.second > band_hz.first &&
        band_hz.second < 0.5 * rate)) {
    throw ConfigError("rate band must lie inside (0, slow_rate/2)");
  }

  const Eigen::VectorXd w = dsp::hann_symmetric<double>(n);
  const Eigen::VectorXd tapered = acorr.values.cwiseProduct(w);

  const Eigen::Index n_pad = n * zero_pad_factor;
  const double df = rate / static_cast<double>(n_pad);
  const Eigen::Index k_lo = static_cast<Eigen::Index>(std::ceil(band_hz.first / df));
  const Eigen::Index k_hi = static_cast<Eigen::Index>(std::floor(band_hz.second / df));
  if (k_lo > k_hi) throw ConfigError("rate band empty after discretization");

  RateSpectrum sp;
  sp.target_id = acorr.target_id;
  sp.band_lo_hz = band_hz.first;
  sp.band_hi_hz = band_hz.second;
  sp.frequencies_hz.resize(k_hi - k_lo + 1);
  sp.power.resize(k_hi - k_lo + 1);
  for (Eigen::Index k = k_lo; k <= k_hi; ++k) {
    std::complex<double> acc(0.0, 0.0);
    const double step = -2.0 * EIGEN_PI * static_cast<double>(k) / static_cast<double>(n_pad);
    for (Eigen::Index i = 0; i < n; ++i) {
      acc += tapered[i] * std::polar(1.0, step * static_cast<double>(i));
    }
    sp.frequencies_hz[k - k_lo] = k * df;
    sp.power[k - k_lo] = std::abs(acc);
  }

  Eigen::Index peak = 0;
  const double max_power = sp.power.maxCoeff(&peak);
  if (max_power > 0.0) sp.power /= max_power;
  sp.rate_bpm = 60.0 * sp.frequencies_hz[peak];
  return sp;
}

double rate_rmse(const std::vector<double>& estimates_bpm,
                 const std::vector<double>& references_bpm) {
  if (estimates_bpm.size() != references_bpm.size() || estimates_bpm.empty()) {
    throw ConfigError("rate lists must have equal nonzero length");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < estimates_bpm.size(); ++i) {
    const double d = estimates_bpm[i] - references_bpm[i];
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(estimates_bpm.size()));
}

}  // namespace msr
