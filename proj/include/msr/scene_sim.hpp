// FMCW IF-signal synthesis for breathing targets observed by parallel radars.
#pragma once

#include "msr/types.hpp"

namespace msr {

/// Range resolution c / (2 B) of the configured chirp.
double range_resolution(const WaveformConfig& waveform);

/// Euclidean distance radar->target at scene time t, including the out-of-plane
/// offset d and the target's sinusoidal displacement.
double instantaneous_range(const RadarUnit& radar, const TargetModel& target, double t);

/// Synthesize the full IF data cube seen by one radar. Slow time for chirp p of
/// frame f is start_offset + (f * chirps_per_frame + p) * chirp_duration; each
/// chirp is a sum of per-target complex tones with beat frequency 2 gamma r / c
/// and carrier phase 4 pi f_c r / c. When the scene sets noise_snr_db, white
/// circularly symmetric noise is added so the per-sample SNR of the strongest
/// target equals that value, seeded by rng_seed XOR radar_id.
DataCube synthesize_if_cube(const SceneConfig& scene, int radar_id);

/// Re-synthesize the cube's radar with a different acquisition start offset.
/// The scene must be the one that produced the cube.
DataCube apply_start_offset(const SceneConfig& scene, const DataCube& cube, double offset_s);

}  // namespace msr
