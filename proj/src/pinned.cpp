#include "rdca/pinned.hpp"

#include <algorithm>

namespace rdca {

bool is_pinned(const WaveProfile& w, const ReactionFunction& f,
               DiffusionParam d) {
  if (w.capacity() != f.capacity())
    throw CapacityMismatch("profile capacity " + std::to_string(w.capacity()) +
                           " vs reaction capacity " +
                           std::to_string(f.capacity()));
  // Fixed-point identities in telescoped form: the transfer across each
  // interface must equal the reaction deficit accumulated to its left. The
  // loop runs one index past the transition so the balance is also forced to
  // close against the capacity tail; interior-only agreement is not enough.
  const int N = w.transition_index();
  int deficit = 0;
  for (int n = 1; n <= N + 1; ++n) {
    const int cur = w.value_at(n);
    if (h_delta(d, f(cur), f(w.value_at(n - 1))) != deficit) return false;
    deficit += cur - f(cur);
  }
  return true;
}

namespace {

struct PinnedSearchState {
  const ReactionFunction& f;
  DiffusionParam d;
  std::vector<int> core;
  std::vector<WaveProfile> out;

  void descend(int deficit) {
    const int K = f.capacity();
    const int last = core.back();
    const int flast = f(last);
    if (deficit == 0 && flast >= K - 1)
      out.emplace_back(core, K);
    if (static_cast<int>(core.size()) >= 2 * d.delta + 1) return;
    for (int m = last + 1; m <= K - 1; ++m) {
      if (h_delta(d, f(m), flast) != deficit) continue;
      const int next = deficit + m - f(m);
      if (next < 0 || next > d.delta) continue;
      core.push_back(m);
      descend(next);
      core.pop_back();
    }
  }
};

}  // namespace

std::vector<WaveProfile> search_pinned(const ReactionFunction& f,
                                       DiffusionParam d) {
  PinnedSearchState s{f, d, {}, {}};
  const int a = f.viability();
  // The leftmost core value must react to at most 1 (so the zero tail keeps
  // its balance), which also confines it below the threshold.
  for (int w1 = 1; w1 < a; ++w1) {
    if (f(w1) > 1) continue;
    const int deficit = w1 - f(w1);
    if (deficit > d.delta) continue;
    s.core.assign(1, w1);
    s.descend(deficit);
    s.core.clear();
  }
  std::sort(s.out.begin(), s.out.end(),
            [](const WaveProfile& x, const WaveProfile& y) {
              return x.core() < y.core();
            });
  return std::move(s.out);
}

}  // namespace rdca
