#pragma once

// Stochastic substrate/catalyst lattice: unbonded molecules wander, adjacent
// substrate bonds into chains, catalysts nearby favour bonding and slow decay.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace symbio::proto {

enum class Content : std::uint8_t { Empty, Substrate, Catalyst };

struct Params {
  double p_bond = 0.1;
  double p_decay = 0.05;
  double p_move = 0.5;
  int catalyst_radius = 3;  ///< Manhattan distance
  double bond_boost = 5.0;
  double decay_damp = 0.2;

  /// Throws std::invalid_argument when out of range.
  void validate() const;
};

/// Neighbour directions; a bond is stored on both of its cells.
enum Dir : std::uint8_t { Right = 1, Down = 2, Left = 4, Up = 8 };

class State {
 public:
  State(int width, int height, std::uint64_t seed);

  /// Random soup: `catalysts` catalysts, then round(substrate_fraction * area) substrate.
  static State soup(int width, int height, int catalysts, double substrate_fraction, std::uint64_t seed);

  int width() const { return width_; }
  int height() const { return height_; }
  Content at(int x, int y) const { return content_[index(x, y)]; }
  std::uint8_t bonds_at(int x, int y) const { return bonds_[index(x, y)]; }
  int bond_count(int x, int y) const;
  std::size_t total_bonds() const;
  std::size_t count(Content c) const;

  void place(int x, int y, Content c);
  /// Bond between two 4-adjacent substrate cells with fewer than two bonds each.
  void bond(int x0, int y0, int x1, int y1);

  /// Checks the lattice invariants (bond symmetry, substrate-only bonds, at most 2 per cell).
  bool invariants_hold() const;

  std::string render() const;
  friend bool operator==(const State& a, const State& b);

 private:
  friend void step(State& s, const Params& p);
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x); }
  bool inside(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }
  double uniform();
  std::size_t pick(std::size_t n);

  int width_, height_;
  std::vector<Content> content_;
  std::vector<std::uint8_t> bonds_;
  std::mt19937_64 rng_;
};

/// One synchronous round: move, then bond, then decay, cells in row-major order.
void step(State& s, const Params& p);

/// Bond cycles that enclose at least one catalyst.
int count_membranes(const State& s);

struct RunSummary {
  std::uint64_t seed = 0;
  int catalysts = 0;
  int final_membranes = 0;
  /// Mean of count_membranes over every step of the run.
  double mean_membranes = 0.0;
  std::size_t final_bonds = 0;
};

struct Experiment {
  int width = 20, height = 20;
  int catalysts = 1;
  double substrate_fraction = 0.4;
  int steps = 2000;
};

RunSummary run(const Experiment& e, const Params& p, std::uint64_t seed);

/// Runs seeds first_seed .. first_seed + runs - 1 in parallel; results in seed order.
std::vector<RunSummary> run_many(const Experiment& e, const Params& p, std::uint64_t first_seed, int runs,
                                 unsigned workers);

}  // namespace symbio::proto
