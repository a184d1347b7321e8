// Delay-compensated correlation averaging and respiration-rate spectra.
#pragma once

#include <Eigen/Core>

#include <map>
#include <utility>
#include <vector>

#include "msr/association.hpp"

namespace msr {

struct AveragedAutocorrelation {
  int target_id = 0;
  Eigen::VectorXd lags_s;
  Eigen::VectorXd values;  // exactly 1 at lag 0
  int n_pairs = 0;
  double slow_rate_hz = 0.0;
};

struct RateSpectrum {
  int target_id = 0;
  Eigen::VectorXd frequencies_hz;  // band grid
  Eigen::VectorXd power;           // normalized so the band maximum is 1
  double rate_bpm = 0.0;
  double band_lo_hz = 0.0;
  double band_hi_hz = 0.0;
};

using CorrelationStore = std::map<std::pair<int, int>, CorrelationFunction>;

/// Average the members' correlations after shifting each so its own peak sits
/// at lag 0 and dividing by the peak value; lags outside any shifted support
/// are dropped (intersection of supports).
AveragedAutocorrelation averaged_autocorrelation(const AssociationSet& set,
                                                 const CorrelationStore& store);

/// Hann-taper the averaged correlation, zero-pad by the given factor, DFT and
/// normalize the magnitude to 1 within the band; rate = 60 x peak frequency.
RateSpectrum rate_spectrum(const AveragedAutocorrelation& acorr,
                           std::pair<double, double> band_hz, int zero_pad_factor);

/// Root mean square difference in breaths per minute.
double rate_rmse(const std::vector<double>& estimates_bpm,
                 const std::vector<double>& references_bpm);

}  // namespace msr
