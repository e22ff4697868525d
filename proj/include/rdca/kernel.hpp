#pragma once

#include <string>
#include <vector>

#include "rdca/errors.hpp"
#include "rdca/reaction.hpp"

namespace rdca {

// Per-edge diffusion cap: at most this many units cross between a pair of
// neighboring sites in one step. Distinct type so a bare int can't slip in
// where the cap is meant.
struct DiffusionParam {
  explicit DiffusionParam(int cap) : delta(cap) {
    if (cap < 1)
      throw InvalidParams("diffusion cap must be >= 1, got " +
                          std::to_string(cap));
  }
  int delta;
};

// Net amount a site holding n receives from a neighbor holding m: half the
// gap, rounded toward the neighbor, capped at delta. Antisymmetric in (m, n),
// zero when the gap is at most 1.
int h_delta(DiffusionParam d, int m, int n);

// Post-reaction redistribution at one site: the center keeps its value and
// collects the capped transfers from both neighbors.
int d_delta(DiffusionParam d, int left, int center, int right);

// Finite slice of the bistable lattice. The slice evolves exactly like the
// infinite line whose left/right tails are held constant at the two boundary
// values, so fronts can be tracked without simulating an unbounded array.
class LatticeWindow {
 public:
  LatticeWindow(std::vector<int> cells, int boundary_left, int boundary_right,
                int capacity);

  int capacity() const { return capacity_; }
  int boundary_left() const { return boundary_left_; }
  int boundary_right() const { return boundary_right_; }
  int size() const { return static_cast<int>(cells_.size()); }
  int operator[](int i) const { return cells_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& cells() const { return cells_; }

  // Cell value with the constant tails extended past the stored range.
  int at_extended(int i) const {
    if (i < 0) return boundary_left_;
    if (i >= size()) return boundary_right_;
    return cells_[static_cast<std::size_t>(i)];
  }

  // Same lattice content with `left` / `right` extra tail cells materialized.
  LatticeWindow padded(int left, int right) const;

  bool operator==(const LatticeWindow&) const = default;

 private:
  std::vector<int> cells_;
  int boundary_left_ = 0;
  int boundary_right_ = 0;
  int capacity_ = 0;
};

// One synchronous update: react everywhere, then redistribute. Boundary
// values follow the homogeneous tail dynamics (b -> f(b)), so tails held at
// the stable states 0 / capacity stay put. Output states are checked against
// [0, capacity]; a violation would be a bug in the tables, not bad input.
LatticeWindow apply_F(const ReactionFunction& f, DiffusionParam d,
                      const LatticeWindow& w);

LatticeWindow iterate(const ReactionFunction& f, DiffusionParam d,
                      LatticeWindow w, int steps);

}  // namespace rdca
