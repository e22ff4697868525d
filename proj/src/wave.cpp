#include "rdca/wave.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace rdca {

WaveProfile::WaveProfile(std::vector<int> core, int capacity)
    : core_(std::move(core)), capacity_(capacity) {
  if (capacity_ < 2) throw InvalidParams("profile capacity must be >= 2");
  int prev = 0;
  for (int v : core_) {
    if (v <= 0 || v >= capacity_)
      throw InvalidParams("profile core value outside (0, capacity): " +
                          std::to_string(v));
    if (v < prev) throw InvalidParams("profile core must be nondecreasing");
    prev = v;
  }
}

namespace {

void check_capacity(const WaveProfile& w, const ReactionFunction& f) {
  if (w.capacity() != f.capacity())
    throw CapacityMismatch("profile capacity " + std::to_string(w.capacity()) +
                           " vs reaction capacity " +
                           std::to_string(f.capacity()));
}

}  // namespace

bool satisfies_profile_recurrence(const WaveProfile& w,
                                  const ReactionFunction& f, DiffusionParam d,
                                  int speed) {
  check_capacity(w, f);
  // Outside this index range every value involved sits in a constant tail,
  // where the relation degenerates to 0 = 0 or capacity = capacity.
  const int margin = std::max(2, std::abs(speed) + 1);
  const long long lo = -margin;
  const long long hi = w.transition_index() + margin;
  for (long long n = lo; n <= hi; ++n) {
    const int fc = f(w.value_at(n));
    const int rhs = fc + h_delta(d, f(w.value_at(n - 1)), fc) +
                    h_delta(d, f(w.value_at(n + 1)), fc);
    if (w.value_at(n - speed) != rhs) return false;
  }
  return true;
}

bool verify_wave(const WaveProfile& w, const ReactionFunction& f,
                 DiffusionParam d, int speed) {
  if (std::abs(speed) >= 2)
    throw FastSpeedUnsupported(
        "no front can translate by more than one cell per step; got speed " +
        std::to_string(speed));
  return satisfies_profile_recurrence(w, f, d, speed);
}

std::optional<int> exists_left_traveling_wave(const ReactionFunction& f,
                                              DiffusionParam d) {
  const int K = f.capacity();
  const int a = f.viability();
  if (2 * a >= K) return std::nullopt;
  for (int p = a + 1; p <= K / 2; ++p)
    if (d.delta >= p && f(p) >= 2 * p) return p;
  return std::nullopt;
}

std::optional<int> exists_right_traveling_wave(const ReactionFunction& f,
                                               DiffusionParam d) {
  const auto p = exists_left_traveling_wave(f.mirrored(), d);
  if (!p) return std::nullopt;
  return f.capacity() - *p;
}

namespace {

// Shared state of the depth-first profile search. The closure function at
// level n has one free variable m (the candidate next core value); each of
// its zeros either extends the core or, at m = capacity, completes it.
struct LeftWaveSearchState {
  const ReactionFunction& f;
  DiffusionParam d;
  int length_limit;
  int branch_limit;
  std::vector<int> core;
  TravelingWaveSearch out;

  // Zero test of the level-n closure at candidate m, where `prev`/`cur` are
  // the two most recent profile values (prev is 0 at the first level).
  bool closure_zero(int prev, int cur, int m) const {
    const int fc = f(cur);
    return fc - h_delta(d, fc, f(prev)) + h_delta(d, f(m), fc) - m == 0;
  }

  void emit() {
    if (static_cast<int>(out.profiles.size()) >= branch_limit)
      throw BranchLimitExceeded(
          "profile search exceeded branch limit of " +
          std::to_string(branch_limit));
    WaveProfile w(core, f.capacity());
    // The zero walk is exact, so a completed core must verify; anything else
    // is a bug worth failing loudly for.
    if (!verify_wave(w, f, d, -1))
      throw InvariantViolation("constructed profile fails verification");
    out.profiles.push_back(std::move(w));
  }

  void descend(int prev, int cur) {
    const int K = f.capacity();
    for (int m = cur; m <= K; ++m) {
      if (!closure_zero(prev, cur, m)) continue;
      if (m == K) {
        emit();
      } else if (static_cast<int>(core.size()) >= length_limit) {
        out.length_truncated = true;
      } else {
        core.push_back(m);
        descend(cur, m);
        core.pop_back();
      }
    }
  }
};

}  // namespace

TravelingWaveSearch construct_left_traveling_waves(const ReactionFunction& f,
                                                   DiffusionParam d,
                                                   ConstructOptions opts) {
  const int K = f.capacity();
  const int length_limit =
      opts.length_limit < 0 ? 4 * K : opts.length_limit;
  if (length_limit < 1 || opts.branch_limit < 1)
    throw InvalidParams("search limits must be >= 1");

  LeftWaveSearchState s{f, d, length_limit, opts.branch_limit, {}, {}};
  const auto witness = exists_left_traveling_wave(f, d);
  if (!witness) return std::move(s.out);

  // First core value: zeros of the level-0 closure. Candidates below the
  // smallest witness cannot be zeros (a zero there would itself be a smaller
  // witness), so the scan starts at the witness.
  for (int m = *witness; m <= K; ++m) {
    if (h_delta(d, f(m), 0) - m != 0) continue;
    // m = capacity is never a zero here (the capped transfer is at most
    // capacity/2), so this always extends rather than completes.
    s.core.assign(1, m);
    s.descend(0, m);
    s.core.clear();
  }
  std::sort(s.out.profiles.begin(), s.out.profiles.end(),
            [](const WaveProfile& x, const WaveProfile& y) {
              return x.core() < y.core();
            });
  return std::move(s.out);
}

TravelingWaveSearch construct_right_traveling_waves(const ReactionFunction& f,
                                                    DiffusionParam d,
                                                    ConstructOptions opts) {
  const ReactionFunction fm = f.mirrored();
  TravelingWaveSearch left = construct_left_traveling_waves(fm, d, opts);
  TravelingWaveSearch out;
  out.length_truncated = left.length_truncated;
  out.profiles.reserve(left.profiles.size());
  for (const auto& w : left.profiles) out.profiles.push_back(mirror(w, fm).first);
  std::sort(out.profiles.begin(), out.profiles.end(),
            [](const WaveProfile& x, const WaveProfile& y) {
              return x.core() < y.core();
            });
  return out;
}

std::pair<WaveProfile, ReactionFunction> mirror(const WaveProfile& w,
                                                const ReactionFunction& f) {
  check_capacity(w, f);
  const int K = w.capacity();
  std::vector<int> core(w.core().rbegin(), w.core().rend());
  for (int& v : core) v = K - v;
  return {WaveProfile(std::move(core), K), f.mirrored()};
}

LatticeWindow reverse_to_window(const WaveProfile& w) {
  const int K = w.capacity();
  std::vector<int> cells;
  cells.reserve(w.core().size() + 2);
  cells.push_back(K);
  cells.insert(cells.end(), w.core().rbegin(), w.core().rend());
  cells.push_back(0);
  return LatticeWindow(std::move(cells), K, 0, K);
}

LatticeWindow radial_window(const WaveProfile& w, int plateau,
                            RadialKind kind) {
  if (plateau < 1) throw InvalidParams("radial plateau must be >= 1");
  const int K = w.capacity();
  const auto& core = w.core();
  std::vector<int> cells;
  cells.reserve(2 * core.size() + static_cast<std::size_t>(plateau));
  if (kind == RadialKind::Expanding) {
    cells.insert(cells.end(), core.begin(), core.end());
    cells.insert(cells.end(), static_cast<std::size_t>(plateau), K);
    cells.insert(cells.end(), core.rbegin(), core.rend());
    return LatticeWindow(std::move(cells), 0, 0, K);
  }
  cells.insert(cells.end(), core.rbegin(), core.rend());
  cells.insert(cells.end(), static_cast<std::size_t>(plateau), 0);
  cells.insert(cells.end(), core.begin(), core.end());
  return LatticeWindow(std::move(cells), K, K, K);
}

std::optional<WaveProfile> extract_profile(const LatticeWindow& w) {
  if (w.boundary_left() != 0 || w.boundary_right() != w.capacity())
    return std::nullopt;
  const int K = w.capacity();
  const int L = w.size();
  int lo = 0;
  while (lo < L && w[lo] == 0) ++lo;
  int hi = L;
  while (hi > lo && w[hi - 1] == K) --hi;
  std::vector<int> core;
  core.reserve(static_cast<std::size_t>(hi - lo));
  int prev = 0;
  for (int i = lo; i < hi; ++i) {
    const int v = w[i];
    if (v <= 0 || v >= K || v < prev) return std::nullopt;
    core.push_back(v);
    prev = v;
  }
  return WaveProfile(std::move(core), K);
}

}  // namespace rdca
