#pragma once

#include <optional>
#include <vector>

#include "rdca/kernel.hpp"
#include "rdca/wave.hpp"

namespace rdca {

// Orbit that reproduces itself shifted by `shift` cells after `period` steps
// (negative shift = leftward). The mean speed shift/period is stored reduced;
// a plain traveling wave is the period-1 case, and shift 0 with period >= 2
// is a pulsating front that never translates.
struct HigherOrderWave {
  std::vector<LatticeWindow> orbit;  // states t0 .. t0 + period - 1
  int shift = 0;
  int period = 1;
  int gamma_num = 0;  // reduced shift/period
  int gamma_den = 1;
};

// Evolves the window up to max_steps updates, storing the trajectory, and
// scans for the first self-reproduction: outer loop over the start time, then
// periods 1..max_period in increasing order, then shifts ordered by |shift|
// with the negative one first. States are compared on the interior that
// excludes `period` cells at each end, so tail cells pinned by the boundary
// never mask or fake a match. Throws WindowTooSmall when the window cannot
// even host the max_period margins.
std::optional<HigherOrderWave> detect_wave(const ReactionFunction& f,
                                           DiffusionParam d,
                                           const LatticeWindow& start,
                                           int max_period = 60,
                                           int max_steps = 400);

// Seed window (..., 0, a, K-a, K, ...) — or its reflected complement when the
// threshold a sits above K/2 — for the maximal table, returned only when the
// capped-transfer constants make it a genuine period-2 orbit drifting one
// cell per cycle. Both gate conditions matter: the transfer from the full
// tail must land exactly on the threshold AND the secondary transfer must
// clear half of it, else the seed freezes into a fixed point instead.
std::optional<LatticeWindow> construct_period2_window(int capacity,
                                                      int viability,
                                                      DiffusionParam d);

enum class MaximalClass { Pinned, Moving, HigherOrder12, Unknown };

// Closed-form classification of the maximal table by (capacity, viability,
// cap). Unknown is kept for completeness but is not reachable for valid
// inputs: the three case families tile the whole parameter grid.
MaximalClass characterize_maximal(int capacity, int viability,
                                  DiffusionParam d);

}  // namespace rdca
