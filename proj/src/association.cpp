#include "msr/association.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "msr/dsp.hpp"

namespace msr {

void Geometry::validate() const {
  if (a_m == b_m) throw ConfigError("radar baseline positions must differ");
  if (d_m < 0.0) throw ConfigError("plane offset d must be >= 0");
}

CorrelationFunction normalized_xcorr(const RespSignal& x, const RespSignal& y,
                                     double max_lag_s) {
  if (x.displacement_m.size() != y.displacement_m.size()) {
    throw ConfigError("correlation inputs must have equal length");
  }
  const double rate = x.slow_rate_hz;
  if (std::abs(rate - y.slow_rate_hz) > 1e-9 * rate) {
    throw ConfigError("correlation inputs must share the slow rate");
  }
  const Eigen::Index n = x.displacement_m.size();
  const double duration = static_cast<double>(n) / rate;
  if (!(max_lag_s > 0.0) || max_lag_s >= 0.5 * duration) {
    throw ConfigError("max lag must lie in (0, duration/2)");
  }
  const auto var_of = [](const Eigen::VectorXd& v) {
    const double m = v.mean();
    return (v.array() - m).square().sum();
  };
  if (!(var_of(x.displacement_m) > 0.0) || !(var_of(y.displacement_m) > 0.0)) {
    throw DegenerateSignalError("zero-variance respiration signal");
  }

  const int max_lag = static_cast<int>(std::floor(max_lag_s * rate));
  CorrelationFunction corr;
  corr.bin_radar1 = x.bin_index;
  corr.bin_radar2 = y.bin_index;
  corr.slow_rate_hz = rate;
  corr.lags_s.resize(2 * max_lag + 1);
  corr.values.resize(2 * max_lag + 1);
  for (int l = -max_lag; l <= max_lag; ++l) {
    const Eigen::Index overlap = n - std::abs(l);
    const auto xs =
        l >= 0 ? x.displacement_m.head(overlap) : x.displacement_m.tail(overlap);
    const auto ys =
        l >= 0 ? y.displacement_m.tail(overlap) : y.displacement_m.head(overlap);
    double v = dsp::pearson(xs, ys);
    v = std::clamp(v, -1.0, 1.0);
    corr.lags_s[l + max_lag] = static_cast<double>(l) / rate;
    corr.values[l + max_lag] = v;
  }
  return corr;
}

std::pair<double, double> peak_lag(const CorrelationFunction& corr) {
  if (corr.values.size() == 0) throw ConfigError("empty correlation function");
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < corr.values.size(); ++i) {
    const double ai = std::abs(corr.values[i]);
    const double ab = std::abs(corr.values[best]);
    if (ai > ab) {
      best = i;
    } else if (ai == ab) {
      const double li = std::abs(corr.lags_s[i]);
      const double lb = std::abs(corr.lags_s[best]);
      if (li < lb || (li == lb && corr.lags_s[i] < corr.lags_s[best])) best = i;
    }
  }
  return {corr.lags_s[best], corr.values[best]};
}

std::vector<PeakCandidate> peak_candidates(const CorrelationFunction& corr, double rel_tol) {
  const auto [lag_best, val_best] = peak_lag(corr);
  const double floor = (1.0 - rel_tol) * std::abs(val_best);
  std::vector<PeakCandidate> out;
  const Eigen::VectorXd a = corr.values.cwiseAbs();
  for (Eigen::Index i = 1; i + 1 < a.size(); ++i) {
    if (a[i] >= a[i - 1] && a[i] >= a[i + 1] && a[i] >= floor) {
      out.push_back({corr.lags_s[i], corr.values[i]});
    }
  }
  const bool has_best = std::any_of(out.begin(), out.end(), [&](const PeakCandidate& c) {
    return c.lag_s == lag_best;
  });
  if (!has_best) out.push_back({lag_best, val_best});
  return out;
}

namespace {

// The inter-radar time offset is shared by every true pair, while periodic
// breathing makes each pair's correlation peak ambiguous up to its own period.
// Pick the candidate lag supported by the most pairs; each pair then snaps to
// its own candidate nearest that consensus.
void reconcile_peak_lags(std::vector<PairResult>& accepted,
                         const std::vector<std::vector<PeakCandidate>>& candidates,
                         double slow_rate_hz, double gamma_th) {
  if (accepted.size() < 2) return;
  const double tol = 2.0 / slow_rate_hz;

  std::vector<double> lag_pool;
  for (const auto& cands : candidates) {
    for (const auto& c : cands) lag_pool.push_back(c.lag_s);
  }
  std::sort(lag_pool.begin(), lag_pool.end());

  int best_support = -1;
  double consensus = 0.0;
  for (double L : lag_pool) {
    int support = 0;
    for (const auto& cands : candidates) {
      if (std::any_of(cands.begin(), cands.end(),
                      [&](const PeakCandidate& c) { return std::abs(c.lag_s - L) <= tol; })) {
        ++support;
      }
    }
    if (support > best_support ||
        (support == best_support && std::abs(L) < std::abs(consensus))) {
      best_support = support;
      consensus = L;
    }
  }

  for (std::size_t i = 0; i < accepted.size(); ++i) {
    const PeakCandidate* pick = nullptr;
    for (const auto& c : candidates[i]) {
      if (std::abs(c.value) <= gamma_th) continue;  // keep the acceptance invariant
      if (!pick || std::abs(c.lag_s - consensus) < std::abs(pick->lag_s - consensus)) {
        pick = &c;
      }
    }
    if (pick) {
      accepted[i].peak_lag_s = pick->lag_s;
      accepted[i].peak_value = pick->value;
    }
  }
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct Cluster {
  std::vector<PairResult> pairs;
  bool shares_bin(const PairResult& p) const {
    return std::any_of(pairs.begin(), pairs.end(), [&](const PairResult& q) {
      return q.m == p.m || q.k == p.k;
    });
  }
  double median_lag() const {
    std::vector<double> lags;
    lags.reserve(pairs.size());
    for (const auto& p : pairs) lags.push_back(p.peak_lag_s);
    return median(std::move(lags));
  }
};

}  // namespace

AssociationOutcome associate(const std::vector<RespSignal>& signals_r1,
                             const std::vector<RespSignal>& signals_r2, double gamma_th,
                             double max_lag_s) {
  if (signals_r1.empty() || signals_r2.empty()) {
    throw ConfigError("association needs signals from both radars");
  }
  if (!(gamma_th > 0.0 && gamma_th < 1.0)) throw ConfigError("gamma_th must lie in (0, 1)");

  AssociationOutcome out;
  std::vector<PairResult> accepted;
  std::vector<std::vector<PeakCandidate>> accepted_cands;
  for (const auto& sx : signals_r1) {
    for (const auto& sy : signals_r2) {
      const CorrelationFunction corr = normalized_xcorr(sx, sy, max_lag_s);
      const auto [lag, value] = peak_lag(corr);
      PairResult pr;
      pr.m = sx.bin_index;
      pr.k = sy.bin_index;
      pr.range1_m = sx.range_m;
      pr.range2_m = sy.range_m;
      pr.peak_lag_s = lag;
      pr.peak_value = value;
      pr.accepted = std::abs(value) > gamma_th;
      out.pair_grid.push_back(pr);
      if (pr.accepted) {
        accepted.push_back(pr);
        accepted_cands.push_back(peak_candidates(corr));
      }
    }
  }
  if (accepted.empty()) return out;

  const double slow_rate = signals_r1.front().slow_rate_hz;
  reconcile_peak_lags(accepted, accepted_cands, slow_rate, gamma_th);
  // reflect the reconciled lags in the reported grid
  for (const auto& a : accepted) {
    for (auto& g : out.pair_grid) {
      if (g.m == a.m && g.k == a.k) {
        g.peak_lag_s = a.peak_lag_s;
        g.peak_value = a.peak_value;
      }
    }
  }

  std::stable_sort(accepted.begin(), accepted.end(), [](const PairResult& a, const PairResult& b) {
    if (std::abs(a.peak_value) != std::abs(b.peak_value)) {
      return std::abs(a.peak_value) > std::abs(b.peak_value);
    }
    return std::tie(a.m, a.k) < std::tie(b.m, b.k);
  });

  const double lag_tol = 2.0 / slow_rate;
  std::vector<Cluster> clusters;
  for (const auto& p : accepted) {
    std::vector<std::size_t> matches;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (clusters[c].shares_bin(p) &&
          std::abs(p.peak_lag_s - clusters[c].median_lag()) <= lag_tol) {
        matches.push_back(c);
      }
    }
    if (matches.empty()) {
      clusters.push_back(Cluster{{p}});
    } else {
      // merge every matched cluster into the first, then add the pair
      Cluster& home = clusters[matches.front()];
      for (std::size_t i = matches.size(); i-- > 1;) {
        auto& other = clusters[matches[i]];
        home.pairs.insert(home.pairs.end(), other.pairs.begin(), other.pairs.end());
        clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(matches[i]));
      }
      home.pairs.push_back(p);
    }
  }

  for (auto& c : clusters) {
    AssociationSet set;
    set.pairs = c.pairs;
    double w_sum = 0.0, r1 = 0.0, r2 = 0.0;
    for (const auto& p : c.pairs) {
      const double w = std::abs(p.peak_value);
      w_sum += w;
      r1 += w * p.range1_m;
      r2 += w * p.range2_m;
    }
    set.range1_m = r1 / w_sum;
    set.range2_m = r2 / w_sum;
    out.sets.push_back(std::move(set));
  }
  std::sort(out.sets.begin(), out.sets.end(), [](const AssociationSet& a, const AssociationSet& b) {
    return std::tie(a.range1_m, a.range2_m) < std::tie(b.range1_m, b.range2_m);
  });
  for (std::size_t i = 0; i < out.sets.size(); ++i) {
    out.sets[i].target_id = static_cast<int>(i) + 1;
  }
  return out;
}

Eigen::Vector2d multilaterate(const Geometry& geom, double r1_m, double r2_m) {
  geom.validate();
  if (!(r1_m > geom.d_m) || !(r2_m > geom.d_m)) {
    throw InfeasiblePairingError("range does not exceed the plane offset");
  }
  const double x = (r1_m * r1_m - r2_m * r2_m + geom.b_m * geom.b_m - geom.a_m * geom.a_m) /
                   (2.0 * (geom.b_m - geom.a_m));
  const double radicand = r1_m * r1_m - geom.d_m * geom.d_m - (x - geom.a_m) * (x - geom.a_m);
  if (radicand < 0.0) {
    throw InfeasiblePairingError("range circles do not intersect");
  }
  return {x, std::sqrt(radicand)};
}

std::vector<RangeCandidate> enumerate_candidates(const Geometry& geom,
                                                 const std::vector<double>& ranges_r1,
                                                 const std::vector<double>& ranges_r2) {
  if (ranges_r1.empty() || ranges_r2.empty()) {
    throw ConfigError("candidate enumeration needs ranges from both radars");
  }
  std::vector<RangeCandidate> out;
  for (double r1 : ranges_r1) {
    for (double r2 : ranges_r2) {
      RangeCandidate c;
      c.r1_m = r1;
      c.r2_m = r2;
      try {
        c.position = multilaterate(geom, r1, r2);
      } catch (const InfeasiblePairingError&) {
        c.position.reset();
      }
      out.push_back(c);
    }
  }
  return out;
}

ResolveOutcome resolve_targets(const std::vector<AssociationSet>& sets, const Geometry& geom) {
  ResolveOutcome out;
  for (const auto& set : sets) {
    AssociationSet resolved = set;
    try {
      resolved.position = multilaterate(geom, set.range1_m, set.range2_m);
    } catch (const InfeasiblePairingError& e) {
      out.dropped.push_back("target candidate with ranges (" + std::to_string(set.range1_m) +
                            ", " + std::to_string(set.range2_m) + ") dropped: " + e.what());
      continue;
    }
    out.targets.push_back(std::move(resolved));
  }
  for (std::size_t i = 0; i < out.targets.size(); ++i) {
    out.targets[i].target_id = static_cast<int>(i) + 1;
  }
  return out;
}

}  // namespace msr
