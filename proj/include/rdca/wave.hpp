#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rdca/kernel.hpp"

namespace rdca {

// Monotone front shape on the infinite line: an implicit all-zero tail on the
// left, an implicit all-capacity tail on the right, and the stored interior
// core in between. Index n of the bi-infinite profile is value_at(n); the
// core occupies n = 1 .. core_size, and transition_index() is the first index
// already holding the capacity value.
class WaveProfile {
 public:
  // Core entries must be nondecreasing and strictly inside (0, capacity).
  // An empty core (sharp step) is allowed.
  WaveProfile(std::vector<int> core, int capacity);

  int capacity() const { return capacity_; }
  const std::vector<int>& core() const { return core_; }
  int core_size() const { return static_cast<int>(core_.size()); }
  int transition_index() const { return core_size() + 1; }

  int value_at(long long n) const {
    if (n <= 0) return 0;
    if (n > core_size()) return capacity_;
    return core_[static_cast<std::size_t>(n - 1)];
  }

  bool operator==(const WaveProfile&) const = default;

 private:
  std::vector<int> core_;
  int capacity_ = 0;
};

// Checks the translation recurrence for the profile moving `speed` cells per
// step (negative = leftward). Exposed separately from verify_wave so the
// impossibility of |speed| >= 2 can be exercised directly.
bool satisfies_profile_recurrence(const WaveProfile& w,
                                  const ReactionFunction& f, DiffusionParam d,
                                  int speed);

// Same check gated to |speed| <= 1; faster translations never solve the
// recurrence (the per-step displacement of any site is bounded by the capped
// transfers), so asking for one is treated as a usage error.
bool verify_wave(const WaveProfile& w, const ReactionFunction& f,
                 DiffusionParam d, int speed);

// Smallest witness p with viability < p <= capacity/2, cap >= p and
// f(p) >= 2p; nonempty exactly when a leftward traveling front exists.
std::optional<int> exists_left_traveling_wave(const ReactionFunction& f,
                                              DiffusionParam d);

// Mirror condition; the returned witness is capacity minus the mirrored
// table's witness, so the duality with the left predicate is exact.
std::optional<int> exists_right_traveling_wave(const ReactionFunction& f,
                                               DiffusionParam d);

struct ConstructOptions {
  // Max completed profiles before the search refuses to continue
  // (BranchLimitExceeded).
  int branch_limit = 10000;
  // Max core entries per branch; -1 means 4 * capacity. Branches that grow
  // past this are dropped and flagged, not fatal.
  int length_limit = -1;
};

struct TravelingWaveSearch {
  std::vector<WaveProfile> profiles;  // lexicographically sorted cores
  bool length_truncated = false;      // some branch hit length_limit
};

// Enumerates every leftward traveling front (speed -1) by walking the zero
// sets of the successive one-variable closure functions; each zero either
// extends the core or, when it lands on the capacity value, completes a
// profile. Multiple zeros at one level are multiple waves, and all branches
// are explored. Empty result iff the existence predicate fails.
TravelingWaveSearch construct_left_traveling_waves(const ReactionFunction& f,
                                                   DiffusionParam d,
                                                   ConstructOptions opts = {});

// Rightward fronts, obtained by constructing on the mirrored table and
// mirroring the profiles back.
TravelingWaveSearch construct_right_traveling_waves(const ReactionFunction& f,
                                                    DiffusionParam d,
                                                    ConstructOptions opts = {});

// Conjugate pair: reversed-complement core and the mirrored table. w is a
// leftward wave for f exactly when mirror(w, f) is a rightward wave.
std::pair<WaveProfile, ReactionFunction> mirror(const WaveProfile& w,
                                                const ReactionFunction& f);

// Decreasing counterpart of the profile (capacity tail on the left, zero tail
// on the right) as a window. The emitted cells are one capacity cell, the
// core reversed, one zero cell. An ascending leftward wave reversed this way
// travels right under the same table.
LatticeWindow reverse_to_window(const WaveProfile& w);

enum class RadialKind { Expanding, Contracting };

// Two mirrored copies of the front glued around a plateau (length >= 1):
// Expanding = ascending core, capacity plateau, descending core, zero tails;
// Contracting = the complementary layout with capacity tails. Built from a
// leftward wave, the expanding plateau widens by 2 cells per step and the
// contracting gap closes by 2 per step until the fronts collide.
LatticeWindow radial_window(const WaveProfile& w, int plateau, RadialKind kind);

// Strips the zero prefix and capacity suffix of a window and returns the
// remaining cells as a profile core, or nullopt when the window is not a
// clean monotone front.
std::optional<WaveProfile> extract_profile(const LatticeWindow& w);

}  // namespace rdca
