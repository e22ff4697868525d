#include "rdca/simulate.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <utility>

namespace rdca {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

std::uint64_t counter_value(std::uint64_t seed, std::uint64_t i) {
  return mix64(seed + (i + 1) * kGolden);
}

int uniform_state(std::uint64_t seed, std::uint64_t i, int capacity) {
  return static_cast<int>(counter_value(seed, i) %
                          static_cast<std::uint64_t>(capacity + 1));
}

std::uint64_t derive_run_seed(std::uint64_t master, int viability, int delta,
                              int lambda_index, int replicate) {
  std::uint64_t s = master;
  for (const int coord : {viability, delta, lambda_index, replicate})
    s = mix64(s + (static_cast<std::uint64_t>(coord) + 1) * kGolden);
  return s;
}

void SimConfig::validate() const {
  if (window_length < 50)
    throw InvalidParams("window_length must be >= 50");
  if (transient_steps < 0) throw InvalidParams("transient_steps must be >= 0");
  if (max_period < 1) throw InvalidParams("max_period must be >= 1");
  if (replicates < 1) throw InvalidParams("replicates must be >= 1");
  if (total_steps <= transient_steps + 2 * max_period)
    throw InvalidParams(
        "total_steps must exceed transient_steps + 2*max_period so the "
        "post-transient horizon can hold a full period comparison");
  if (window_length <= 2 * max_period)
    throw InvalidParams(
        "window_length must exceed 2*max_period to host detection margins");
}

const char* to_token(WaveKind k) {
  switch (k) {
    case WaveKind::HomogeneousZero: return "homogeneous_zero";
    case WaveKind::HomogeneousFull: return "homogeneous_full";
    case WaveKind::Pinned: return "pinned";
    case WaveKind::MovingLeft: return "moving_left";
    case WaveKind::MovingRight: return "moving_right";
    case WaveKind::HigherOrder: return "higher_order";
    case WaveKind::Unclassified: return "unclassified";
  }
  return "unclassified";
}

LatticeWindow random_ic(int capacity, int length, std::uint64_t seed) {
  if (length < 1) throw InvalidParams("window length must be >= 1");
  std::vector<int> cells(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i)
    cells[static_cast<std::size_t>(i)] =
        uniform_state(seed, static_cast<std::uint64_t>(i), capacity);
  return LatticeWindow(std::move(cells), 0, capacity, capacity);
}

namespace {

// Interior scan used to tell a collapsed phase from a genuine front. The
// margins mirror the detector's shift allowance so a wave hugging the edge
// is not mistaken for a constant.
bool interior_is(const LatticeWindow& w, int margin, int value) {
  for (int i = margin; i < w.size() - margin; ++i)
    if (w[i] != value) return false;
  return true;
}

}  // namespace

WaveClassification classify_run(const ReactionFunction& f, DiffusionParam d,
                                const SimConfig& cfg) {
  cfg.validate();
  const int K = f.capacity();
  const int L = cfg.window_length;

  // Front-conditioned start: hold the two stable phases on the flanks and
  // randomize a centered belt. A belt-wide uniform draw keeps every run
  // inside the basin of the 0 -> K connection; seeding the whole window
  // uniformly instead lands strong reactions in the basin of a homogeneous
  // phase before the transient even ends, and no wave is ever observable.
  const int belt = std::max(L / 5, 1);
  const int lo = (L - belt) / 2;
  const LatticeWindow noise = random_ic(K, belt, cfg.master_seed);
  std::vector<int> cells(static_cast<std::size_t>(L));
  for (int i = 0; i < L; ++i)
    cells[static_cast<std::size_t>(i)] =
        i < lo ? 0 : i < lo + belt ? noise[i - lo] : K;
  LatticeWindow w(std::move(cells), 0, K, K);

  w = iterate(f, d, w, cfg.transient_steps);
  const int horizon = cfg.total_steps - cfg.transient_steps;

  WaveClassification cls;

  const auto hw = detect_wave(f, d, w, cfg.max_period, horizon);
  if (!hw) {
    // Nothing periodic within the budget. If the run still ended in a
    // collapsed phase (the collapse can land on the very last step, too
    // late for the detector's one-period confirmation), report that.
    const LatticeWindow fin = iterate(f, d, w, horizon);
    const bool all_zero = interior_is(fin, cfg.max_period, 0);
    const bool all_full = interior_is(fin, cfg.max_period, K);
    if (!(all_zero || all_full)) return cls;  // Unclassified, (0,0) sentinel
    cls.kind = all_zero ? WaveKind::HomogeneousZero : WaveKind::HomogeneousFull;
    cls.shift = 0;
    cls.period = 1;  // trivial fixed point
    cls.gamma_num = 0;
    cls.gamma_den = 1;
    return cls;
  }

  // A homogeneous interior detects as a trivial fixed point; report it as a
  // collapsed phase, not a pinned front.
  const bool all_zero = interior_is(hw->orbit.front(), cfg.max_period, 0);
  const bool all_full = interior_is(hw->orbit.front(), cfg.max_period, K);
  if (all_zero || all_full) {
    cls.kind = all_zero ? WaveKind::HomogeneousZero : WaveKind::HomogeneousFull;
    cls.shift = 0;
    cls.period = 1;  // trivial fixed point
    cls.gamma_num = 0;
    cls.gamma_den = 1;
    return cls;
  }

  cls.shift = hw->shift;
  cls.period = hw->period;
  cls.gamma_num = hw->gamma_num;
  cls.gamma_den = hw->gamma_den;
  if (hw->period == 1)
    cls.kind = hw->shift == 0  ? WaveKind::Pinned
               : hw->shift < 0 ? WaveKind::MovingLeft
                               : WaveKind::MovingRight;
  else
    cls.kind = WaveKind::HigherOrder;
  return cls;
}

SweepResult sweep(int capacity, std::vector<int> viability_values,
                  std::vector<int> delta_values,
                  std::vector<double> lambda_values, const SimConfig& cfg,
                  int jobs) {
  cfg.validate();
  if (jobs < 1) throw InvalidParams("jobs must be >= 1");
  if (viability_values.empty() || delta_values.empty() ||
      lambda_values.empty())
    throw InvalidParams("sweep axes must be nonempty");

  SweepResult res;
  res.capacity = capacity;
  res.config = cfg;
  res.viability_values = std::move(viability_values);
  res.delta_values = std::move(delta_values);
  res.lambda_values = std::move(lambda_values);
  res.jobs = jobs;

  const std::size_t na = res.viability_values.size();
  const std::size_t nd = res.delta_values.size();
  const std::size_t nl = res.lambda_values.size();
  const std::size_t nr = static_cast<std::size_t>(cfg.replicates);
  const std::size_t total = na * nd * nl * nr;
  res.records.resize(total);

  // Each worker fills its own slots, identified purely by index, so the
  // record table is identical no matter how the work is carved up.
  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      std::size_t rest = idx;
      const int rep = static_cast<int>(rest % nr);
      rest /= nr;
      const int li = static_cast<int>(rest % nl);
      rest /= nl;
      const int di = static_cast<int>(rest % nd);
      const int ai = static_cast<int>(rest / nd);

      SweepRecord rec;
      rec.viability = res.viability_values[static_cast<std::size_t>(ai)];
      rec.delta = res.delta_values[static_cast<std::size_t>(di)];
      rec.lambda_index = li;
      rec.lambda = res.lambda_values[static_cast<std::size_t>(li)];
      rec.replicate = rep;
      rec.seed = derive_run_seed(cfg.master_seed, rec.viability, rec.delta,
                                 li, rep);

      const ReactionFunction f = ReactionFunction::truncated_polynomial(
          capacity, rec.viability, rec.lambda);
      SimConfig run_cfg = cfg;
      run_cfg.master_seed = rec.seed;
      rec.result = classify_run(f, DiffusionParam(rec.delta), run_cfg);
      res.records[idx] = rec;
    }
  };

  if (jobs == 1 || total < 2) {
    run_range(0, total);
    return res;
  }

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(jobs), total);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::size_t chunk = (total + workers - 1) / workers;
  for (std::size_t wi = 0; wi < workers; ++wi) {
    const std::size_t begin = wi * chunk;
    const std::size_t end = std::min(total, begin + chunk);
    pool.emplace_back([&, wi, begin, end] {
      try {
        run_range(begin, end);
      } catch (...) {
        errors[wi] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return res;
}

std::vector<CellSummary> aggregate(const SweepResult& result) {
  std::vector<CellSummary> cells;
  const std::size_t nr = static_cast<std::size_t>(result.config.replicates);
  if (nr == 0) return cells;
  for (std::size_t base = 0; base < result.records.size(); base += nr) {
    const SweepRecord& head = result.records[base];
    CellSummary cell;
    cell.viability = head.viability;
    cell.delta = head.delta;
    cell.lambda_index = head.lambda_index;
    cell.lambda = head.lambda;
    double speed_sum = 0.0;
    for (std::size_t i = base; i < base + nr; ++i) {
      const WaveClassification& r = result.records[i].result;
      cell.kind_counts[static_cast<std::size_t>(r.kind)] += 1;
      if (r.kind == WaveKind::HigherOrder) {
        speed_sum += static_cast<double>(r.gamma_num) / r.gamma_den;
        cell.higher_order_count += 1;
      }
    }
    int best = -1;
    for (int k = 0; k < kWaveKindCount; ++k) {
      const int c = cell.kind_counts[static_cast<std::size_t>(k)];
      if (c > best) {
        best = c;
        cell.modal = static_cast<WaveKind>(k);
      }
    }
    if (cell.higher_order_count > 0)
      cell.mean_higher_order_speed = speed_sum / cell.higher_order_count;
    cells.push_back(cell);
  }
  return cells;
}

std::vector<std::vector<int>> spacetime(const ReactionFunction& f,
                                        DiffusionParam d, LatticeWindow w,
                                        int steps) {
  if (steps < 0) throw InvalidParams("step count must be >= 0");
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(steps) + 1);
  rows.push_back(w.cells());
  for (int t = 0; t < steps; ++t) {
    w = apply_F(f, d, w);
    rows.push_back(w.cells());
  }
  return rows;
}

}  // namespace rdca
