#include "rdca/reaction.hpp"

#include <cmath>
#include <utility>

namespace rdca {

ReactionFunction ReactionFunction::from_table(int capacity, int viability,
                                              std::vector<int> values) {
  if (capacity < 4)
    throw InvalidParams("capacity must be >= 4 to leave room for a threshold");
  if (viability < 2 || viability > capacity - 2)
    throw InvalidParams("viability threshold must lie in [2, capacity-2]");
  if (static_cast<int>(values.size()) != capacity + 1)
    throw InvalidParams("table must have capacity+1 entries, got " +
                        std::to_string(values.size()));

  // Shape clauses, reported in a fixed order so a failure message always
  // names the first violated one: fixed points, monotonicity, then the two
  // sign conditions scanned upward.
  if (values[0] != 0) throw NotBistable("f(0) = 0 violated");
  if (values[static_cast<std::size_t>(viability)] != viability)
    throw NotBistable("f(a) = a violated at the viability threshold");
  if (values[static_cast<std::size_t>(capacity)] != capacity)
    throw NotBistable("f(K) = K violated at capacity");
  for (int u = 1; u <= capacity; ++u)
    if (values[static_cast<std::size_t>(u)] <
        values[static_cast<std::size_t>(u) - 1])
      throw NotBistable("monotonicity violated at u=" + std::to_string(u));
  for (int u = 1; u < viability; ++u) {
    const int v = values[static_cast<std::size_t>(u)];
    if (v < 0) throw NotBistable("f(u) >= 0 violated at u=" + std::to_string(u));
    if (v >= u) throw NotBistable("f(u) < u violated at u=" + std::to_string(u));
  }
  for (int u = viability + 1; u < capacity; ++u) {
    const int v = values[static_cast<std::size_t>(u)];
    if (v <= u) throw NotBistable("f(u) > u violated at u=" + std::to_string(u));
    if (v > capacity)
      throw NotBistable("f(u) <= K violated at u=" + std::to_string(u));
  }

  ReactionFunction f;
  f.capacity_ = capacity;
  f.viability_ = viability;
  f.values_ = std::move(values);
  return f;
}

ReactionFunction ReactionFunction::maximal(int capacity, int viability) {
  std::vector<int> v(static_cast<std::size_t>(capacity) + 1);
  for (int u = 0; u <= capacity; ++u)
    v[static_cast<std::size_t>(u)] =
        u < viability ? 0 : (u == viability ? viability : capacity);
  return from_table(capacity, viability, std::move(v));
}

ReactionFunction ReactionFunction::truncated_polynomial(int capacity,
                                                        int viability,
                                                        double lambda) {
  if (!(lambda > 0.0)) throw InvalidParams("lambda must be > 0");
  std::vector<int> v(static_cast<std::size_t>(capacity) + 1);
  for (int p = 0; p <= capacity; ++p) {
    // Integer product first so only the final scaling rounds.
    const long long cubic = static_cast<long long>(p) * (capacity - p) *
                            (p - viability);
    const double poly = p + lambda * static_cast<double>(cubic);
    int r;
    if (p > viability)
      r = poly >= capacity ? capacity : static_cast<int>(std::ceil(poly));
    else
      r = poly <= 0.0 ? 0 : static_cast<int>(std::floor(poly));
    v[static_cast<std::size_t>(p)] = r;
  }
  return from_table(capacity, viability, std::move(v));
}

ReactionFunction ReactionFunction::mirrored() const {
  std::vector<int> v(static_cast<std::size_t>(capacity_) + 1);
  for (int u = 0; u <= capacity_; ++u)
    v[static_cast<std::size_t>(u)] =
        capacity_ - values_[static_cast<std::size_t>(capacity_ - u)];
  return from_table(capacity_, capacity_ - viability_, std::move(v));
}

LambdaThresholds lambda_thresholds(int capacity, int viability) {
  if (viability < 2 || viability > capacity - 2)
    throw InvalidParams("viability threshold must lie in [2, capacity-2]");
  long long best = 0;
  for (int p = viability + 1; p < capacity; ++p) {
    const long long cubic = static_cast<long long>(p) * (capacity - p) *
                            (p - viability);
    if (cubic > best) best = cubic;
  }
  LambdaThresholds t;
  // Below 1/max cubic the rounded table stays within one unit of the
  // identity on the growth side, so f(p) >= 2p is out of reach everywhere
  // and no leftward front can form.
  t.lower = 1.0 / static_cast<double>(best);
  // At 1/(K - a - 1) the first state past the threshold reacts to exactly
  // twice itself, which is the front-existence condition there.
  t.upper = 1.0 / static_cast<double>(capacity - viability - 1);
  return t;
}

}  // namespace rdca
