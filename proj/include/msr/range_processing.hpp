// Range-FFT, averaged range profiles and CA-CFAR detection.
#pragma once

#include <Eigen/Core>

#include <vector>

#include "msr/types.hpp"

namespace msr {

enum class Window { kRect, kHann };

// Range/slow-time matrix for one radar: one row per frame, one column per bin.
struct RangeTimeMap {
  int radar_id = 0;
  Eigen::MatrixXcd values;  // n_frames x n_bins
  double bin_spacing_m = 0.0;
  double slow_rate_hz = 0.0;
  double start_offset_s = 0.0;

  int n_frames() const { return static_cast<int>(values.rows()); }
  int n_bins() const { return static_cast<int>(values.cols()); }
};

struct Detection {
  int bin_index = 0;
  double range_m = 0.0;
  double snr_estimate_db = 0.0;
};

struct CfarParams {
  int guard_cells = 2;
  int training_cells = 8;  // per side
  double pfa = 1e-3;
  // A cell above threshold is reported unless an adjacent cell exceeds it by
  // more than this fraction; lets both bins of a two-bin crest through while
  // still rejecting the shoulders of a single ridge.
  double plateau_tolerance = 0.1;

  void validate(int profile_len) const;
};

/// Coherently average the chirps of each frame, window the fast-time axis and
/// DFT it. One slow-time row per frame, all bins kept.
RangeTimeMap range_fft(const DataCube& cube, Window window = Window::kRect);

/// Per-bin mean of |values| across slow time.
Eigen::VectorXd mean_profile(const RangeTimeMap& map);

/// Cell-averaging CFAR with alpha = N (pfa^(-1/N) - 1); near the edges the
/// training window shrinks to the available cells. Returns cells that exceed
/// the threshold and survive the plateau-tolerant local-maximum rule, by bin.
std::vector<Detection> cfar_detect(const Eigen::VectorXd& profile, const CfarParams& params,
                                   double bin_spacing_m = 1.0);

/// Union of each detection's bin +/- expansion, clipped to [0, n_bins).
std::vector<int> candidate_bins(const std::vector<Detection>& detections, int expansion,
                                int n_bins);

}  // namespace msr
