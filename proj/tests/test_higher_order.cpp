#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "rdca/higher_order.hpp"
#include "rdca/pinned.hpp"
#include "rdca/wave.hpp"

using namespace rdca;

namespace {

// Orbit states are padded windows; compare them through the extracted core.
std::vector<int> core_at(const HigherOrderWave& hw, std::size_t i) {
  const auto p = extract_profile(hw.orbit.at(i));
  REQUIRE(p.has_value());
  return p->core();
}

}  // namespace

TEST_CASE("centered odd table drifts with a two-step period") {
  const auto f = ReactionFunction::maximal(7, 3);
  DiffusionParam d(3);
  const auto seed = construct_period2_window(7, 3, d);
  REQUIRE(seed.has_value());
  CHECK(seed->cells() == std::vector<int>{3, 4});

  const auto hw = detect_wave(f, d, seed->padded(16, 16), 8, 40);
  REQUIRE(hw.has_value());
  CHECK(hw->shift == -1);
  CHECK(hw->period == 2);
  CHECK(hw->gamma_num == -1);
  CHECK(hw->gamma_den == 2);
  REQUIRE(hw->orbit.size() == 2);
  CHECK(core_at(*hw, 0) == std::vector<int>{3, 4});
  CHECK(core_at(*hw, 1) == std::vector<int>{1, 4, 5});
}

TEST_CASE("the mirrored centered table drifts the other way") {
  const auto f = ReactionFunction::maximal(7, 4);
  DiffusionParam d(3);
  const auto seed = construct_period2_window(7, 4, d);
  REQUIRE(seed.has_value());
  CHECK(seed->cells() == std::vector<int>{3, 4});

  const auto hw = detect_wave(f, d, seed->padded(16, 16), 8, 40);
  REQUIRE(hw.has_value());
  CHECK(hw->shift == 1);
  CHECK(hw->period == 2);
  CHECK(hw->gamma_num == 1);
  CHECK(hw->gamma_den == 2);
}

TEST_CASE("wider centered odd table: same mechanism, bigger cap") {
  DiffusionParam d(5);
  const auto seed = construct_period2_window(11, 5, d);
  REQUIRE(seed.has_value());
  CHECK(seed->cells() == std::vector<int>{5, 6});
  const auto hw = detect_wave(ReactionFunction::maximal(11, 5), d,
                              seed->padded(16, 16), 8, 40);
  REQUIRE(hw.has_value());
  CHECK(hw->shift == -1);
  CHECK(hw->period == 2);
}

TEST_CASE("period-2 seeds exist exactly when both transfer gates open") {
  DiffusionParam d2(2);
  DiffusionParam d4(4);
  // Cap too small: the zero tail cannot feed the seed.
  CHECK_FALSE(construct_period2_window(7, 3, d2).has_value());
  // Quarter-capacity remainder 1: the second transfer is too weak and the
  // seed freezes instead of drifting.
  CHECK_FALSE(construct_period2_window(9, 4, d4).has_value());
  CHECK_FALSE(construct_period2_window(9, 5, d4).has_value());
  // An exactly even split never drifts either way.
  for (int delta = 1; delta <= 8; ++delta)
    CHECK_FALSE(construct_period2_window(8, 4, DiffusionParam(delta))
                    .has_value());
  CHECK_THROWS_AS(construct_period2_window(7, 1, d2), InvalidParams);
  CHECK_THROWS_AS(construct_period2_window(7, 6, d2), InvalidParams);
}

TEST_CASE("the frozen near-centered seed settles into a stationary front") {
  const auto f = ReactionFunction::maximal(9, 4);
  DiffusionParam d(4);
  LatticeWindow seed({4, 5}, 0, 9, 9);
  const auto hw = detect_wave(f, d, seed.padded(16, 16), 8, 40);
  REQUIRE(hw.has_value());
  CHECK(hw->shift == 0);
  CHECK(hw->period == 1);
  CHECK(hw->gamma_num == 0);
  CHECK(hw->gamma_den == 1);
  REQUIRE(hw->orbit.size() == 1);
  CHECK(core_at(*hw, 0) == std::vector<int>{2, 4, 7});
  // The settled state is one of the stationary fronts the search finds.
  CHECK(is_pinned(WaveProfile({2, 4, 7}, 9), f, d));
}

TEST_CASE("balanced even split pulses in place with period two") {
  const auto f = ReactionFunction::maximal(8, 4);
  DiffusionParam d(4);
  LatticeWindow seed({4, 4}, 0, 8, 8);
  const auto hw = detect_wave(f, d, seed.padded(16, 16), 8, 40);
  REQUIRE(hw.has_value());
  CHECK(hw->shift == 0);
  CHECK(hw->period == 2);
  CHECK(hw->gamma_num == 0);
  CHECK(hw->gamma_den == 1);
}

TEST_CASE("an ordinary traveling front registers as shift one, period one") {
  const std::vector<int> bench = {0,  0,  1,  3,  10, 12, 16, 17, 18, 19, 20,
                                  21, 22, 23, 24, 25, 26, 26, 26, 27, 27, 27,
                                  27, 28, 28, 28, 28, 29, 29, 30, 30};
  const auto f = ReactionFunction::from_table(30, 3, bench);
  DiffusionParam d(5);
  WaveProfile w({5, 11, 20, 24, 28, 29}, 30);
  const auto hw =
      detect_wave(f, d, testutil::embed_profile(w, 12), 4, 8);
  REQUIRE(hw.has_value());
  CHECK(hw->shift == -1);
  CHECK(hw->period == 1);
  CHECK(hw->gamma_num == -1);
  CHECK(hw->gamma_den == 1);
}

TEST_CASE("non-recurrent evolution exhausts the budget quietly") {
  // Two fronts running apart never reproduce a shift of an earlier state.
  const auto f = ReactionFunction::maximal(7, 2);
  DiffusionParam d(3);
  const auto waves = construct_left_traveling_waves(f, d);
  REQUIRE_FALSE(waves.profiles.empty());
  const auto win =
      radial_window(waves.profiles.front(), 5, RadialKind::Expanding)
          .padded(14, 14);
  CHECK_FALSE(detect_wave(f, d, win, 3, 6).has_value());
}

TEST_CASE("detection guards its window and budget parameters") {
  const auto f = ReactionFunction::maximal(7, 3);
  DiffusionParam d(3);
  LatticeWindow tiny({3, 4}, 0, 7, 7);
  CHECK_THROWS_AS(detect_wave(f, d, tiny, 8, 40), WindowTooSmall);
  LatticeWindow ok = tiny.padded(16, 16);
  CHECK_THROWS_AS(detect_wave(f, d, ok, 0, 40), InvalidParams);
  CHECK_THROWS_AS(detect_wave(f, d, ok, 8, 4), InvalidParams);
}

namespace {

void check_panel(int K, int a, const std::vector<MaximalClass>& by_delta) {
  for (int delta = 1; delta <= static_cast<int>(by_delta.size()); ++delta) {
    CAPTURE(K);
    CAPTURE(a);
    CAPTURE(delta);
    CHECK(characterize_maximal(K, a, DiffusionParam(delta)) ==
          by_delta[static_cast<std::size_t>(delta - 1)]);
  }
}

}  // namespace

TEST_CASE("classification panels for small capacities") {
  using MC = MaximalClass;
  const auto P = MC::Pinned;
  const auto H = MC::HigherOrder12;
  const auto M = MC::Moving;

  check_panel(7, 2, {P, H, M, M, M, M});
  check_panel(7, 3, {P, P, H, H, H, H});
  check_panel(7, 4, {P, P, H, H, H, H});
  check_panel(7, 5, {P, H, M, M, M, M});

  check_panel(8, 2, {P, H, M, M, M, M});
  check_panel(8, 3, {P, P, H, M, M, M});
  check_panel(8, 4, {P, P, P, P, P, P});
  check_panel(8, 5, {P, P, H, M, M, M});
  check_panel(8, 6, {P, H, M, M, M, M});

  check_panel(9, 2, {P, H, M, M, M, M});
  check_panel(9, 3, {P, P, H, M, M, M});
  check_panel(9, 4, {P, P, P, P, P, P});
  check_panel(9, 5, {P, P, P, P, P, P});
  check_panel(9, 6, {P, P, H, M, M, M});
  check_panel(9, 7, {P, H, M, M, M, M});

  CHECK_THROWS_AS(characterize_maximal(7, 1, DiffusionParam(1)),
                  InvalidParams);
}

TEST_CASE("classification is mirror symmetric") {
  for (int K = 4; K <= 12; ++K)
    for (int a = 2; a <= K - 2; ++a)
      for (int delta = 1; delta <= 8; ++delta)
        CHECK(characterize_maximal(K, a, DiffusionParam(delta)) ==
              characterize_maximal(K, K - a, DiffusionParam(delta)));
}

TEST_CASE("classes line up with what the other searches find") {
  // Where the chart says Moving, a directed front exists; where it says
  // stationary, the stationary search is nonempty and no front exists; the
  // period-2 cells carry a seed that demonstrably drifts.
  for (int K = 7; K <= 9; ++K) {
    for (int a = 2; a <= K - 2; ++a) {
      for (int delta = 1; delta <= 6; ++delta) {
        DiffusionParam d(delta);
        const auto f = ReactionFunction::maximal(K, a);
        const bool any_front = exists_left_traveling_wave(f, d).has_value() ||
                               exists_right_traveling_wave(f, d).has_value();
        CAPTURE(K);
        CAPTURE(a);
        CAPTURE(delta);
        switch (characterize_maximal(K, a, d)) {
          case MaximalClass::Pinned:
            CHECK_FALSE(any_front);
            CHECK_FALSE(search_pinned(f, d).empty());
            break;
          case MaximalClass::Moving:
            CHECK(any_front);
            break;
          case MaximalClass::HigherOrder12: {
            CHECK_FALSE(any_front);
            const auto seed = construct_period2_window(K, a, d);
            REQUIRE(seed.has_value());
            const auto hw = detect_wave(f, d, seed->padded(16, 16), 8, 40);
            REQUIRE(hw.has_value());
            CHECK(std::abs(hw->shift) == 1);
            CHECK(hw->period == 2);
            break;
          }
          case MaximalClass::Unknown:
            FAIL("unreachable classification");
            break;
        }
      }
    }
  }
}
