#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rdca/higher_order.hpp"
#include "rdca/io.hpp"
#include "rdca/pinned.hpp"
#include "rdca/simulate.hpp"
#include "rdca/wave.hpp"

namespace {

// Uniform exit scheme shared by every subcommand.
constexpr int kOk = 0;            // positive result
constexpr int kNegative = 1;      // clean run, negative answer (FAIL, no orbit)
constexpr int kUsage = 2;         // I/O, parse, or parameter errors
constexpr int kNotFound = 3;      // existence genuinely fails
constexpr int kLimit = 4;         // a search limit was exceeded

// A reaction table can come from a file or be generated from (K, a[, lambda]).
struct ReactionArgs {
  std::string file;
  bool maximal = false;
  bool truncated = false;
  int capacity = -1;
  int viability = -1;
  double lambda = 0.0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--reaction", file,
                    "reaction table file: \"K a\" then the K+1 values");
    cmd->add_flag("--maximal", maximal,
                  "generate the maximal table for --K/--a");
    cmd->add_flag("--truncated", truncated,
                  "generate the truncated cubic table for --K/--a/--lambda");
    cmd->add_option("--K", capacity, "state capacity");
    cmd->add_option("--a", viability, "viability threshold");
    cmd->add_option("--lambda", lambda, "cubic steepness (with --truncated)");
  }

  rdca::ReactionFunction build() const {
    const int sources = (file.empty() ? 0 : 1) + (maximal ? 1 : 0) +
                        (truncated ? 1 : 0);
    if (sources != 1)
      throw rdca::ParseError(
          "choose exactly one reaction source: --reaction FILE, --maximal, "
          "or --truncated");
    if (!file.empty()) return rdca::load_reaction(file);
    if (capacity < 0 || viability < 0)
      throw rdca::ParseError("--K and --a are required with --maximal/--truncated");
    if (maximal) return rdca::ReactionFunction::maximal(capacity, viability);
    if (lambda <= 0.0)
      throw rdca::ParseError("--lambda must be > 0 with --truncated");
    return rdca::ReactionFunction::truncated_polynomial(capacity, viability,
                                                        lambda);
  }
};

void print_profiles(const std::vector<rdca::WaveProfile>& ws, bool all) {
  for (std::size_t i = 0; i < ws.size(); ++i) {
    std::cout << rdca::to_text(ws[i]);
    if (!all) break;
  }
}

// Seed window for detect/render: explicit interior cells or the constructed
// period-2 pair, padded into a frame the evolution can live in.
rdca::LatticeWindow seeded_window(const rdca::ReactionFunction& f,
                                  rdca::DiffusionParam d,
                                  const std::vector<int>& core, bool period2,
                                  int pad) {
  if (period2 == !core.empty())
    throw rdca::ParseError("choose exactly one seed: --seed-core or --period2");
  if (period2) {
    const auto seed =
        rdca::construct_period2_window(f.capacity(), f.viability(), d);
    if (!seed) {
      std::cerr << "no drifting period-2 seed exists for these parameters\n";
      std::exit(kNotFound);
    }
    return seed->padded(pad, pad);
  }
  return rdca::LatticeWindow(core, 0, f.capacity(), f.capacity())
      .padded(pad, pad);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "bistable lattice fronts: validate tables, construct and search waves, "
      "classify parameter grids, sweep, and render spacetime"};
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "",
                 "INI file with a [subcommand] section per command; "
                 "flags given on the command line win over file values");
  int rc = kOk;

  // --- validate --------------------------------------------------------------
  auto* validate = app.add_subcommand(
      "validate", "check a reaction table against the bistability clauses");
  ReactionArgs validate_rx;
  validate_rx.attach(validate);
  validate->add_option("file", validate_rx.file,
                       "reaction table file (same as --reaction)");
  validate->callback([&] {
    try {
      (void)validate_rx.build();
    } catch (const rdca::NotBistable& e) {
      std::cout << "FAIL " << e.what() << '\n';
      rc = kNegative;
      return;
    }
    std::cout << "PASS\n";
  });

  // --- construct ---------------------------------------------------------------
  auto* construct = app.add_subcommand(
      "construct", "build the traveling-wave profiles for one direction");
  ReactionArgs construct_rx;
  construct_rx.attach(construct);
  int construct_delta = 1;
  std::string side = "left";
  bool all = false;
  rdca::ConstructOptions copts;
  construct->add_option("--delta", construct_delta, "diffusion cap")
      ->required();
  construct->add_option("--side", side, "wave direction")
      ->check(CLI::IsMember({"left", "right"}));
  construct->add_flag("--all", all, "print every profile, not just the first");
  construct->add_option("--branch-limit", copts.branch_limit,
                        "abort after this many search branches");
  construct->add_option("--length-limit", copts.length_limit,
                        "drop branches whose core grows past this length");
  construct->callback([&] {
    const auto f = construct_rx.build();
    rdca::DiffusionParam d(construct_delta);
    const auto res = side == "right"
                         ? rdca::construct_right_traveling_waves(f, d, copts)
                         : rdca::construct_left_traveling_waves(f, d, copts);
    print_profiles(res.profiles, all);
    if (res.length_truncated) {
      std::cerr << "search truncated at --length-limit; profile list may be "
                   "incomplete\n";
      rc = kLimit;
    } else if (res.profiles.empty()) {
      rc = kNotFound;
    }
  });

  // --- pinned ------------------------------------------------------------------
  auto* pinned = app.add_subcommand(
      "pinned", "search every stationary front for a reaction and cap");
  ReactionArgs pinned_rx;
  pinned_rx.attach(pinned);
  int pinned_delta = 1;
  pinned->add_option("--delta", pinned_delta, "diffusion cap")->required();
  pinned->callback([&] {
    const auto found =
        rdca::search_pinned(pinned_rx.build(), rdca::DiffusionParam(pinned_delta));
    print_profiles(found, true);
    if (found.empty()) rc = kNotFound;
  });

  // --- detect ------------------------------------------------------------------
  auto* detect = app.add_subcommand(
      "detect", "evolve a seeded window and report the first periodic orbit");
  ReactionArgs detect_rx;
  detect_rx.attach(detect);
  int detect_delta = 1;
  std::vector<int> detect_core;
  bool detect_period2 = false;
  int detect_max_period = 60;
  int detect_max_steps = 400;
  int detect_pad = -1;
  detect->add_option("--delta", detect_delta, "diffusion cap")->required();
  detect->add_option("--seed-core", detect_core,
                     "interior cells of the seed window (0-tail left, "
                     "K-tail right)");
  detect->add_flag("--period2", detect_period2,
                   "seed with the constructed drifting pair");
  detect->add_option("--max-period", detect_max_period,
                     "largest orbit period probed");
  detect->add_option("--max-steps", detect_max_steps,
                     "evolution budget in steps");
  detect->add_option("--pad", detect_pad,
                     "explicit tail cells on each side (default: "
                     "max-period + 4)");
  detect->callback([&] {
    const auto f = detect_rx.build();
    rdca::DiffusionParam d(detect_delta);
    const int pad = detect_pad >= 0 ? detect_pad : detect_max_period + 4;
    const auto win = seeded_window(f, d, detect_core, detect_period2, pad);
    const auto hw =
        rdca::detect_wave(f, d, win, detect_max_period, detect_max_steps);
    if (!hw) {
      std::cerr << "no periodic orbit detected within the budget\n";
      rc = kNegative;
      return;
    }
    std::cout << rdca::to_text(*hw);
  });

  // --- atlas ---------------------------------------------------------------
  auto* atlas = app.add_subcommand(
      "atlas", "classification grid over (a, delta) for the maximal table");
  int atlas_capacity = 0;
  int atlas_delta_max = 10;
  bool atlas_maximal = false;
  atlas->add_option("--K", atlas_capacity, "state capacity")->required();
  atlas->add_flag("--maximal", atlas_maximal,
                  "classify the maximal table family (required)");
  atlas->add_option("--delta-max", atlas_delta_max, "largest cap row");
  atlas->callback([&] {
    if (!atlas_maximal)
      throw rdca::ParseError("atlas classifies the maximal family: pass --maximal");
    if (atlas_capacity < 4)
      throw rdca::ParseError("--K must be >= 4 so some threshold is valid");
    std::cout << "    ";
    for (int a = 2; a <= atlas_capacity - 2; ++a) {
      std::cout.width(4);
      std::cout << ("a=" + std::to_string(a));
    }
    std::cout << '\n';
    for (int delta = 1; delta <= atlas_delta_max; ++delta) {
      rdca::DiffusionParam d(delta);
      std::cout.width(4);
      std::cout << ("d=" + std::to_string(delta));
      for (int a = 2; a <= atlas_capacity - 2; ++a) {
        char sym = 'U';
        switch (rdca::characterize_maximal(atlas_capacity, a, d)) {
          case rdca::MaximalClass::Pinned: sym = 'P'; break;
          case rdca::MaximalClass::HigherOrder12: sym = 'Z'; break;
          case rdca::MaximalClass::Moving: {
            const auto f = rdca::ReactionFunction::maximal(atlas_capacity, a);
            sym = rdca::exists_left_traveling_wave(f, d) ? 'L'
                  : rdca::exists_right_traveling_wave(f, d).has_value() ? 'R'
                                                                        : 'U';
            break;
          }
          case rdca::MaximalClass::Unknown: sym = 'U'; break;
        }
        std::cout.width(4);
        std::cout << sym;
      }
      std::cout << '\n';
    }
  });

  // --- sweep -----------------------------------------------------------------
  auto* sweep = app.add_subcommand(
      "sweep", "Monte-Carlo classification grid over (a, delta, lambda)");
  int sweep_capacity = 0;
  int a_min = 2, a_max = -1;
  int delta_min = 1, delta_max = 10;
  std::vector<double> lambdas = {0.001, 0.1};
  rdca::SimConfig sim;
  int jobs = 1;
  std::string out_path;
  sweep->add_option("--K", sweep_capacity, "state capacity")->required();
  sweep->add_option("--a-min", a_min, "smallest threshold");
  sweep->add_option("--a-max", a_max,
                    "largest threshold (default: min(10, K-2))");
  sweep->add_option("--delta-min", delta_min, "smallest cap");
  sweep->add_option("--delta-max", delta_max, "largest cap");
  sweep->add_option("--lambda", lambdas, "cubic steepness values");
  sweep->add_option("--replicates", sim.replicates, "runs per grid cell");
  sweep->add_option("--window-length", sim.window_length, "cells per run");
  sweep->add_option("--total-steps", sim.total_steps, "steps per run");
  sweep->add_option("--transient-steps", sim.transient_steps,
                    "steps discarded before classification");
  sweep->add_option("--max-period", sim.max_period,
                    "largest orbit period probed");
  sweep->add_option("--seed", sim.master_seed, "master seed")
      ->envname("RDCA_SEED");
  sweep->add_option("--jobs", jobs, "worker threads");
  sweep->add_option("--out", out_path,
                    "CSV file path (metadata sidecar at PATH.meta); stdout "
                    "when omitted");
  sweep->callback([&] {
    const int hi = a_max >= 0 ? a_max : std::min(10, sweep_capacity - 2);
    if (a_min > hi || delta_min > delta_max)
      throw rdca::ParseError("empty parameter grid");
    std::vector<int> a_vals, d_vals;
    for (int a = a_min; a <= hi; ++a) a_vals.push_back(a);
    for (int v = delta_min; v <= delta_max; ++v) d_vals.push_back(v);
    const auto res =
        rdca::sweep(sweep_capacity, a_vals, d_vals, lambdas, sim, jobs);
    if (out_path.empty()) {
      rdca::write_sweep_csv(std::cout, res);
      return;
    }
    std::ofstream csv(out_path, std::ios::binary);
    if (!csv) throw rdca::IoError("cannot open output file: " + out_path);
    rdca::write_sweep_csv(csv, res);
    std::ofstream meta(out_path + ".meta", std::ios::binary);
    if (!meta)
      throw rdca::IoError("cannot open output file: " + out_path + ".meta");
    rdca::write_sweep_meta(meta, res);
  });

  // --- render ------------------------------------------------------------------
  auto* render = app.add_subcommand(
      "render", "spacetime diagram of an evolution, text or graymap");
  ReactionArgs render_rx;
  render_rx.attach(render);
  int render_delta = 1;
  std::vector<int> render_core;
  bool render_period2 = false;
  bool render_random = false;
  int render_length = 80;
  std::uint64_t render_ic_seed = rdca::kDefaultSeed;
  int render_steps = 40;
  int render_pad = -1;
  std::string pgm_path;
  render->add_option("--delta", render_delta, "diffusion cap")->required();
  render->add_option("--seed-core", render_core,
                     "interior cells of the seed window");
  render->add_flag("--period2", render_period2,
                   "seed with the constructed drifting pair");
  render->add_flag("--random", render_random, "seed with a uniform random window");
  render->add_option("--length", render_length, "window length for --random");
  render->add_option("--ic-seed", render_ic_seed, "seed for --random")
      ->envname("RDCA_SEED");
  render->add_option("--steps", render_steps, "steps to draw");
  render->add_option("--pad", render_pad,
                     "tail cells each side of a seeded core (default: "
                     "steps/2 + 4)");
  render->add_option("--pgm", pgm_path, "write a binary graymap here instead "
                                        "of text output");
  render->callback([&] {
    const auto f = render_rx.build();
    rdca::DiffusionParam d(render_delta);
    if (render_steps < 0) throw rdca::ParseError("--steps must be >= 0");
    rdca::LatticeWindow win({0}, 0, f.capacity(), f.capacity());
    if (render_random) {
      if (render_period2 || !render_core.empty())
        throw rdca::ParseError(
            "choose exactly one seed: --seed-core, --period2, or --random");
      win = rdca::random_ic(f.capacity(), render_length, render_ic_seed);
    } else {
      const int pad = render_pad >= 0 ? render_pad : render_steps / 2 + 4;
      win = seeded_window(f, d, render_core, render_period2, pad);
    }
    const auto rows = rdca::spacetime(f, d, win, render_steps);
    if (pgm_path.empty()) {
      std::cout << rdca::render_text(rows, f.capacity());
      return;
    }
    std::ofstream pgm(pgm_path, std::ios::binary);
    if (!pgm) throw rdca::IoError("cannot open output file: " + pgm_path);
    rdca::write_pgm(pgm, rows, f.capacity());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const rdca::BranchLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kLimit;
  } catch (const rdca::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return rc;
}
