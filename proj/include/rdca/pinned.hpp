#pragma once

#include <vector>

#include "rdca/kernel.hpp"
#include "rdca/wave.hpp"

namespace rdca {

// True when the profile is a fixed point of the update. Checked through the
// equivalent transfer-balance identities: at every interface the incoming
// capped transfer must exactly cancel the reaction deficit accumulated so
// far, and the balance must also close at the far tail (a profile can satisfy
// the interior identities yet fail on the final capacity step).
bool is_pinned(const WaveProfile& w, const ReactionFunction& f,
               DiffusionParam d);

// All pinned fronts for the table, sorted lexicographically by core. The
// search walks strictly increasing cores (pinned cores never repeat a value),
// anchored by f(w1) <= 1 on the left and f(w_last) >= capacity - 1 on the
// right, pruning when the accumulated reaction deficit leaves [0, delta];
// outside that band no capped transfer can restore balance. Core length is
// capped at 2*delta + 1, the proven maximum.
std::vector<WaveProfile> search_pinned(const ReactionFunction& f,
                                       DiffusionParam d);

}  // namespace rdca
