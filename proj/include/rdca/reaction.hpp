#pragma once

#include <string>
#include <vector>

#include "rdca/errors.hpp"

namespace rdca {

// Bistable reaction table on the state range [0, capacity]: stable fixed
// points at 0 and capacity, an unstable threshold in between. Below the
// threshold mass decays, above it mass grows, and the table is nondecreasing
// throughout. Immutable once built; all factory functions validate.
class ReactionFunction {
 public:
  // Builds from an explicit table of capacity+1 values. Throws InvalidParams
  // for size/threshold problems and NotBistable naming the first violated
  // shape clause (fixed points, monotonicity, then the two sign conditions
  // scanned upward from u = 0).
  static ReactionFunction from_table(int capacity, int viability,
                                     std::vector<int> values);

  // Pointwise largest admissible table: 0 below the threshold, the threshold
  // value at it, capacity above.
  static ReactionFunction maximal(int capacity, int viability);

  // Rounded cubic p + lambda*p*(capacity-p)*(p-viability): floored below the
  // threshold, ceiled above, clamped into [0, capacity]. lambda must be > 0.
  static ReactionFunction truncated_polynomial(int capacity, int viability,
                                               double lambda);

  // Evaluation; u outside [0, capacity] throws InvalidParams (states beyond
  // capacity are not part of the model).
  int operator()(int u) const {
    if (u < 0 || u > capacity_)
      throw InvalidParams("reaction argument outside [0, capacity]: " +
                          std::to_string(u));
    return values_[static_cast<std::size_t>(u)];
  }

  int capacity() const { return capacity_; }
  int viability() const { return viability_; }
  const std::vector<int>& values() const { return values_; }

  // Conjugate table u -> capacity - f(capacity - u). Swaps the roles of the
  // two stable states; the threshold reflects to capacity - viability.
  // Applying it twice gives back the original table.
  ReactionFunction mirrored() const;

  bool operator==(const ReactionFunction&) const = default;

 private:
  ReactionFunction() = default;

  int capacity_ = 0;
  int viability_ = 0;
  std::vector<int> values_;
};

// Cutoffs for the truncated-polynomial family at fixed (capacity, viability):
//  - below `lower`, no leftward front exists for any diffusion cap (for
//    thresholds at or below capacity/2 that rules out moving fronts
//    altogether, since rightward ones need a threshold above capacity/2);
//  - at or above `upper`, a leftward front exists once the diffusion cap
//    reaches viability + 1.
struct LambdaThresholds {
  double lower = 0.0;
  double upper = 0.0;
};

LambdaThresholds lambda_thresholds(int capacity, int viability);

}  // namespace rdca
