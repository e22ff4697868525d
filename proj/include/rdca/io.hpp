#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rdca/higher_order.hpp"
#include "rdca/reaction.hpp"
#include "rdca/simulate.hpp"
#include "rdca/wave.hpp"

namespace rdca {

// Reaction text format: "K a" on the first line, the K+1 table values on the
// next (any whitespace separates tokens).
std::string to_text(const ReactionFunction& f);
ReactionFunction parse_reaction(const std::string& text);
ReactionFunction load_reaction(const std::string& path);

// Profile line: "K N w1 ... w_{N-1}" where N is the transition index, so a
// core of N-1 values follows.
std::string to_text(const WaveProfile& w);
WaveProfile parse_profile(const std::string& text);

// Higher-order block: header "shift period gamma_num gamma_den", then one
// profile line per orbit state. Orbit states must be clean monotone fronts
// (they are for anything the detector returns from a seeded front); a
// non-front state raises IoError.
std::string to_text(const HigherOrderWave& hw);

// CSV with the fixed header
//   K,a,delta,lambda,replicate,seed,kind,c,m,gamma_num,gamma_den
// one row per record in sweep order. lambda uses the shortest round-trip
// decimal form, so identical inputs give byte-identical files.
void write_sweep_csv(std::ostream& os, const SweepResult& result);

// Sidecar "key=value" metadata naming every constant that shaped the sweep.
void write_sweep_meta(std::ostream& os, const SweepResult& result);

// Binary 8-bit PGM of a spacetime table; state u maps to floor(255*u/K).
void write_pgm(std::ostream& os, const std::vector<std::vector<int>>& rows,
               int capacity);

// Terminal rendering, one character per cell through a 10-step density ramp.
std::string render_text(const std::vector<std::vector<int>>& rows,
                        int capacity);

}  // namespace rdca
