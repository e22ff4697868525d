#include "rdca/kernel.hpp"

#include <cstdlib>
#include <utility>

namespace rdca {

int h_delta(DiffusionParam d, int m, int n) {
  // Closed form of the capped-transfer table: half the gap rounded down,
  // saturating at delta, signed toward the richer side. Gaps of 0 or 1 move
  // nothing, which is what keeps monotone staircases from dissolving.
  const int diff = m - n;
  const int mag = std::min(d.delta, std::abs(diff) / 2);
  return diff < 0 ? -mag : mag;
}

int d_delta(DiffusionParam d, int left, int center, int right) {
  return center + h_delta(d, left, center) + h_delta(d, right, center);
}

LatticeWindow::LatticeWindow(std::vector<int> cells, int boundary_left,
                             int boundary_right, int capacity)
    : cells_(std::move(cells)),
      boundary_left_(boundary_left),
      boundary_right_(boundary_right),
      capacity_(capacity) {
  if (capacity_ < 1) throw InvalidParams("window capacity must be >= 1");
  if (cells_.empty()) throw InvalidParams("window must hold at least one cell");
  auto in_range = [this](int v) { return v >= 0 && v <= capacity_; };
  if (!in_range(boundary_left_) || !in_range(boundary_right_))
    throw InvalidParams("window boundary value outside [0, capacity]");
  for (int v : cells_)
    if (!in_range(v))
      throw InvalidParams("window cell value outside [0, capacity]: " +
                          std::to_string(v));
}

LatticeWindow LatticeWindow::padded(int left, int right) const {
  if (left < 0 || right < 0)
    throw InvalidParams("padding counts must be >= 0");
  std::vector<int> out;
  out.reserve(cells_.size() + static_cast<std::size_t>(left) +
              static_cast<std::size_t>(right));
  out.insert(out.end(), static_cast<std::size_t>(left), boundary_left_);
  out.insert(out.end(), cells_.begin(), cells_.end());
  out.insert(out.end(), static_cast<std::size_t>(right), boundary_right_);
  return LatticeWindow(std::move(out), boundary_left_, boundary_right_,
                       capacity_);
}

LatticeWindow apply_F(const ReactionFunction& f, DiffusionParam d,
                      const LatticeWindow& w) {
  if (f.capacity() != w.capacity())
    throw CapacityMismatch("reaction capacity " +
                           std::to_string(f.capacity()) +
                           " vs window capacity " +
                           std::to_string(w.capacity()));
  const int L = w.size();
  const int K = w.capacity();

  // React first (including the ghost tails), then redistribute.
  std::vector<int> img(static_cast<std::size_t>(L) + 2);
  img[0] = f(w.boundary_left());
  for (int i = 0; i < L; ++i) img[static_cast<std::size_t>(i) + 1] = f(w[i]);
  img[static_cast<std::size_t>(L) + 1] = f(w.boundary_right());

  std::vector<int> out(static_cast<std::size_t>(L));
  for (int i = 0; i < L; ++i) {
    const std::size_t c = static_cast<std::size_t>(i) + 1;
    const int v = d_delta(d, img[c - 1], img[c], img[c + 1]);
    if (v < 0 || v > K)
      throw InvariantViolation("update left [0, capacity] at cell " +
                               std::to_string(i));
    out[static_cast<std::size_t>(i)] = v;
  }
  // A constant tail is homogeneous, so its update is reaction only.
  return LatticeWindow(std::move(out), img[0],
                       img[static_cast<std::size_t>(L) + 1], K);
}

LatticeWindow iterate(const ReactionFunction& f, DiffusionParam d,
                      LatticeWindow w, int steps) {
  if (steps < 0) throw InvalidParams("step count must be >= 0");
  for (int t = 0; t < steps; ++t) w = apply_F(f, d, w);
  return w;
}

}  // namespace rdca
