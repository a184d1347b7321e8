// Cross-radar respiration correlation, ghost suppression and multilateration.
#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

#include "msr/vital_extraction.hpp"

namespace msr {

// Normalized cross-correlation over integer slow-time lags, values in [-1, 1].
struct CorrelationFunction {
  Eigen::VectorXd lags_s;  // symmetric about 0, odd length
  Eigen::VectorXd values;
  int bin_radar1 = 0;
  int bin_radar2 = 0;
  double slow_rate_hz = 0.0;
};

struct PairResult {
  int m = 0;  // radar 1 bin
  int k = 0;  // radar 2 bin
  double range1_m = 0.0;
  double range2_m = 0.0;
  double peak_lag_s = 0.0;
  double peak_value = 0.0;
  bool accepted = false;
};

struct Geometry {
  double a_m = 0.0;  // radar 1 x
  double b_m = 0.0;  // radar 2 x
  double d_m = 0.0;  // common out-of-plane offset
  void validate() const;
};

struct AssociationSet {
  int target_id = 0;
  std::vector<PairResult> pairs;
  double range1_m = 0.0;  // representative range per radar
  double range2_m = 0.0;
  std::optional<Eigen::Vector2d> position;
};

struct PeakCandidate {
  double lag_s = 0.0;
  double value = 0.0;
};

/// Pearson-normalized cross-correlation over the overlapping segments at each
/// integer lag within +/- max_lag. Positive lag means y is delayed w.r.t. x.
CorrelationFunction normalized_xcorr(const RespSignal& x, const RespSignal& y,
                                     double max_lag_s);

/// Dominant peak of |values|; exact ties resolved toward the smallest |lag|,
/// then the negative lag.
std::pair<double, double> peak_lag(const CorrelationFunction& corr);

/// Local maxima of |values| within rel_tol of the dominant peak. The dominant
/// peak itself is always included.
std::vector<PeakCandidate> peak_candidates(const CorrelationFunction& corr,
                                           double rel_tol = 0.01);

struct AssociationOutcome {
  std::vector<AssociationSet> sets;
  std::vector<PairResult> pair_grid;  // all pairs, rejected ones included
};

/// Correlate every radar-1 bin against every radar-2 bin, keep pairs whose
/// dominant peak exceeds gamma_th, reconcile the accepted peak lags against the
/// lag supported by the most pairs (the inter-radar offset is common to all
/// subjects), then cluster greedily by descending |peak|: a pair joins the
/// clusters it shares a bin with when its lag agrees with the cluster median
/// within two slow-time samples, merging clusters when it bridges several.
AssociationOutcome associate(const std::vector<RespSignal>& signals_r1,
                             const std::vector<RespSignal>& signals_r2, double gamma_th,
                             double max_lag_s);

/// Two-circle intersection x = (r1^2 - r2^2 + b^2 - a^2) / (2 (b - a)),
/// y = +sqrt(r1^2 - d^2 - (x - a)^2). Throws InfeasiblePairingError when the
/// circles cannot meet in front of the baseline.
Eigen::Vector2d multilaterate(const Geometry& geom, double r1_m, double r2_m);

struct RangeCandidate {
  double r1_m = 0.0;
  double r2_m = 0.0;
  std::optional<Eigen::Vector2d> position;  // empty when infeasible
};

/// Every pairing of the two range lists, multilaterated; infeasible pairings
/// are flagged, not dropped.
std::vector<RangeCandidate> enumerate_candidates(const Geometry& geom,
                                                 const std::vector<double>& ranges_r1,
                                                 const std::vector<double>& ranges_r2);

struct ResolveOutcome {
  std::vector<AssociationSet> targets;
  std::vector<std::string> dropped;  // diagnostics for infeasible sets
};

/// Fill each set's position from its representative ranges; geometrically
/// infeasible sets are dropped with a diagnostic.
ResolveOutcome resolve_targets(const std::vector<AssociationSet>& sets, const Geometry& geom);

}  // namespace msr
