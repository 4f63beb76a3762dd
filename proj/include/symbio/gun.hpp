#pragma once

// Splitting a period-30 glider gun into two interacting halves and checking
// how each half evolves over the half period.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "symbio/life.hpp"

namespace symbio::life {

class GunError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GunEmission {
  bool restored = false;      ///< gun is contained in L^30(gun)
  CellSet residue;            ///< L^30(gun) - gun
  bool residue_is_glider = false;
  unsigned cycles = 0;
  std::size_t gliders = 0;    ///< isolated gliders in L^(30 cycles)(gun) - gun
  bool ok() const { return restored && residue_is_glider && gliders == cycles; }
};

/// Checks L^30(gun) = gun + glider and counts gliders after `cycles` periods.
GunEmission verify_gun(const CellSet& gun, unsigned cycles = 4);

struct SubCheck {
  std::string name;
  unsigned steps = 0;
  bool holds = false;
  std::optional<RigidMotion> motion;
  std::size_t residue = 0;
  std::string detail;
};

struct CutResult {
  int cut = 0;  ///< P is every remaining cell with x < cut, Q the rest
  std::size_t p_cells = 0, q_cells = 0;
  std::vector<SubCheck> checks;  ///< always four entries, fixed order
  bool all_hold() const;
};

struct GunReport {
  PeriodReport emission;  ///< L^30(gun) = gun + glider
  CellSet left_block, right_block;
  std::vector<CutResult> cuts;
  std::vector<int> passing_cuts() const;
};

/// True when `cells` contains a glider in some phase and orientation; the
/// first match found is returned.
std::optional<RigidMotion> find_glider(const CellSet& cells, int* phase = nullptr);

/// Requires L^30(gun) = gun + 5-cell glider (throws GunError otherwise),
/// strips the leftmost and rightmost 2x2 blocks, and evaluates every cut
/// column (or only `cut` when given).
GunReport verify_gun_decomposition(const CellSet& gun, std::optional<int> cut = std::nullopt);

std::string to_text(const GunReport& report);

}  // namespace symbio::life
