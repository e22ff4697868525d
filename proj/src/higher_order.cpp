#include "rdca/higher_order.hpp"

#include <algorithm>
#include <numeric>

namespace rdca {

namespace {

int leading_zeros(const std::vector<int>& s) {
  int z = 0;
  while (z < static_cast<int>(s.size()) && s[static_cast<std::size_t>(z)] == 0)
    ++z;
  return z;
}

int trailing_full(const std::vector<int>& s, int capacity) {
  int k = 0;
  const int L = static_cast<int>(s.size());
  while (k < L && s[static_cast<std::size_t>(L - 1 - k)] == capacity) ++k;
  return k;
}

// Does `later` equal `earlier` shifted by `shift` on the interior that
// excludes `period` cells at each end? The constant 0 / capacity stretches at
// both ends are skipped wholesale: a disagreement can only sit where at least
// one side is off its tail value.
bool shifted_match(const std::vector<int>& later, int z_later, int k_later,
                   const std::vector<int>& earlier, int z_earlier,
                   int k_earlier, int shift, int period) {
  const int L = static_cast<int>(later.size());
  const int lo = std::max(period, std::min(z_later, z_earlier + shift));
  const int hi =
      std::min(L - period, std::max(L - k_later, L - k_earlier + shift));
  for (int i = lo; i < hi; ++i)
    if (later[static_cast<std::size_t>(i)] !=
        earlier[static_cast<std::size_t>(i - shift)])
      return false;
  return true;
}

}  // namespace

std::optional<HigherOrderWave> detect_wave(const ReactionFunction& f,
                                           DiffusionParam d,
                                           const LatticeWindow& start,
                                           int max_period, int max_steps) {
  if (max_period < 1) throw InvalidParams("max_period must be >= 1");
  if (max_steps < max_period)
    throw InvalidParams("max_steps must be >= max_period");
  const int L = start.size();
  if (L <= 2 * max_period)
    throw WindowTooSmall("window of " + std::to_string(L) +
                         " cells cannot host period margins of " +
                         std::to_string(max_period));

  std::vector<LatticeWindow> traj;
  traj.reserve(static_cast<std::size_t>(max_steps) + 1);
  traj.push_back(start);
  for (int t = 0; t < max_steps; ++t)
    traj.push_back(apply_F(f, d, traj.back()));

  const int K = f.capacity();
  std::vector<int> zs, ks;
  zs.reserve(traj.size());
  ks.reserve(traj.size());
  for (const auto& w : traj) {
    zs.push_back(leading_zeros(w.cells()));
    ks.push_back(trailing_full(w.cells(), K));
  }

  for (int t = 0; t + 1 <= max_steps; ++t) {
    for (int m = 1; m <= max_period && t + m <= max_steps; ++m) {
      const auto& later = traj[static_cast<std::size_t>(t + m)].cells();
      const auto& earlier = traj[static_cast<std::size_t>(t)].cells();
      for (int mag = 0; mag <= m; ++mag) {
        for (int side = 0; side < (mag == 0 ? 1 : 2); ++side) {
          const int c = side == 0 ? -mag : mag;  // leftward first on ties
          if (!shifted_match(later, zs[static_cast<std::size_t>(t + m)],
                             ks[static_cast<std::size_t>(t + m)], earlier,
                             zs[static_cast<std::size_t>(t)],
                             ks[static_cast<std::size_t>(t)], c, m))
            continue;
          HigherOrderWave hw;
          hw.orbit.assign(traj.begin() + t, traj.begin() + t + m);
          hw.shift = c;
          hw.period = m;
          const int g = c == 0 ? m : std::gcd(std::abs(c), m);
          hw.gamma_num = c / g;
          hw.gamma_den = m / g;
          return hw;
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<LatticeWindow> construct_period2_window(int capacity,
                                                      int viability,
                                                      DiffusionParam d) {
  const int K = capacity;
  const int a = viability;
  if (a < 2 || a > K - 2)
    throw InvalidParams("viability threshold must lie in [2, capacity-2]");
  if (2 * a < K) {
    if (h_delta(d, K, 0) == a && h_delta(d, K, a) > a / 2)
      return LatticeWindow({a, K - a}, 0, K, K);
  } else if (2 * a > K) {
    const int b = K - a;
    if (h_delta(d, K, 0) == b && h_delta(d, K, b) > b / 2)
      return LatticeWindow({b, a}, 0, K, K);
  }
  return std::nullopt;
}

MaximalClass characterize_maximal(int capacity, int viability,
                                  DiffusionParam d) {
  const int K = capacity;
  const int a = viability;
  if (a < 2 || a > K - 2)
    throw InvalidParams("viability threshold must lie in [2, capacity-2]");
  const int near = std::min(a, K - a);

  // Small caps freeze everything regardless of which side is shorter.
  if (d.delta <= std::min(a - 1, K - a - 1)) return MaximalClass::Pinned;

  const bool balanced = a == K / 2 || a == (K + 1) / 2;
  if (balanced) {
    // For a centered threshold the cap is now >= near; the leftover quarter
    // decides between a drifting period-2 orbit and a frozen one.
    if (d.delta >= near)
      return K % 4 == 3 ? MaximalClass::HigherOrder12 : MaximalClass::Pinned;
    return MaximalClass::Unknown;
  }
  if (d.delta == near) return MaximalClass::HigherOrder12;
  if (d.delta >= near + 1) return MaximalClass::Moving;
  return MaximalClass::Unknown;
}

}  // namespace rdca
