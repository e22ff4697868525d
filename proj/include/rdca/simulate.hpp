#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rdca/higher_order.hpp"
#include "rdca/kernel.hpp"

namespace rdca {

// --- deterministic counter-based randomness ---------------------------------
//
// Every random value is a pure function of (seed, counter): the splitmix64
// finalizer applied to seed + (i+1) * golden-ratio increment. No hidden
// state, so any record of a sweep can be regenerated from its seed alone and
// parallel execution cannot perturb the stream.

std::uint64_t mix64(std::uint64_t x);
std::uint64_t counter_value(std::uint64_t seed, std::uint64_t i);

// Uniform draw from [0, capacity] (modulo reduction; the bias is far below
// anything observable at these ranges).
int uniform_state(std::uint64_t seed, std::uint64_t i, int capacity);

// Per-run seed for sweep cell (viability, delta, lambda_index, replicate):
// the coordinates are folded into the master seed one at a time through
// mix64, so reordering the sweep axes or re-running a single cell in
// isolation reproduces identical runs.
std::uint64_t derive_run_seed(std::uint64_t master, int viability, int delta,
                              int lambda_index, int replicate);

inline constexpr std::uint64_t kDefaultSeed = 0xB157AB1Eull;

// --- single-run protocol -----------------------------------------------------

struct SimConfig {
  int window_length = 200;
  int total_steps = 100;
  int transient_steps = 40;
  int max_period = 29;  // largest orbit period probed after the transient
  int replicates = 50;
  std::uint64_t master_seed = kDefaultSeed;

  // Throws InvalidParams unless the post-transient horizon can hold a full
  // period-max_period comparison (total > transient + 2*max_period) and the
  // window can host the detection margins (length > 2*max_period, >= 50).
  void validate() const;
};

enum class WaveKind {
  HomogeneousZero,
  HomogeneousFull,
  Pinned,
  MovingLeft,
  MovingRight,
  HigherOrder,
  Unclassified,
};
inline constexpr int kWaveKindCount = 7;

const char* to_token(WaveKind k);

struct WaveClassification {
  WaveKind kind = WaveKind::Unclassified;
  // Raw detected (shift, period); (0, 0) when nothing was detected,
  // (0, 1) for homogeneous outcomes (they are trivial fixed points).
  int shift = 0;
  int period = 0;
  int gamma_num = 0;  // reduced shift/period, 0/0 when nothing detected
  int gamma_den = 0;
};

// Uniform IC over [0, capacity] with tails held at the two stable states
// (0 on the left, capacity on the right), so a front is present somewhere.
LatticeWindow random_ic(int capacity, int length, std::uint64_t seed);

// Seeds a front-conditioned window (stable phases on the flanks, a random
// belt of window_length/5 cells in the middle), evolves it through the
// transient, and classifies the first orbit detected on the remaining
// horizon. Orbits with a homogeneous interior report as collapsed phases,
// not pinned fronts; no orbit at all reports the final state's homogeneity
// or the Unclassified sentinel.
WaveClassification classify_run(const ReactionFunction& f, DiffusionParam d,
                                const SimConfig& cfg);

// --- parameter sweep ---------------------------------------------------------

struct SweepRecord {
  int viability = 0;
  int delta = 0;
  int lambda_index = 0;
  double lambda = 0.0;
  int replicate = 0;
  std::uint64_t seed = 0;
  WaveClassification result;
};

struct SweepResult {
  int capacity = 0;
  SimConfig config;
  std::vector<int> viability_values;
  std::vector<int> delta_values;
  std::vector<double> lambda_values;
  int jobs = 1;
  // Ordered (viability, delta, lambda, replicate), independent of jobs.
  std::vector<SweepRecord> records;
};

// Monte-Carlo grid over the truncated-polynomial family. Each record's seed
// depends only on the master seed and its own coordinates, and records are
// written into their precomputed slots, so the output is byte-stable under
// any jobs count.
SweepResult sweep(int capacity, std::vector<int> viability_values,
                  std::vector<int> delta_values,
                  std::vector<double> lambda_values, const SimConfig& cfg,
                  int jobs = 1);

struct CellSummary {
  int viability = 0;
  int delta = 0;
  int lambda_index = 0;
  double lambda = 0.0;
  std::array<int, kWaveKindCount> kind_counts{};
  WaveKind modal = WaveKind::Unclassified;  // ties break to the lower enum
  // Mean reduced speed over the higher-order detections in the cell
  // (0 when there are none; see higher_order_count).
  double mean_higher_order_speed = 0.0;
  int higher_order_count = 0;
};

// Pure reducer over sweep records, one summary per grid cell in record order.
std::vector<CellSummary> aggregate(const SweepResult& result);

// Trajectory table: steps+1 rows of window cells, row 0 = initial state.
std::vector<std::vector<int>> spacetime(const ReactionFunction& f,
                                        DiffusionParam d, LatticeWindow w,
                                        int steps);

}  // namespace rdca
