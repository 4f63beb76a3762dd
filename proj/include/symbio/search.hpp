#pragma once

// Exhaustive search for small seeds X with L^p(X) = s(X) + residue at least
// period p, s a non-identity rigid motion.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "symbio/life.hpp"

namespace symbio::life {

struct SearchOptions {
  int width = 6;
  int height = 4;
  int live = 8;
  unsigned period = 48;
  /// Dead margin around the seed box; period + 1 keeps the light cone inside.
  int padding = 49;
  unsigned workers = 1;
  std::uint64_t budget = 10'000'000;
};

struct SearchHit {
  /// Canonical representative: least normalized image over the 8 symmetries.
  CellSet seed;
  PeriodReport report;
};

struct SearchStats {
  std::uint64_t candidates = 0;
  std::uint64_t classes = 0;
  std::uint64_t died = 0;
  std::uint64_t settled = 0;
  std::uint64_t reached_period = 0;
  std::uint64_t embedded = 0;
};

struct SearchReport {
  SearchOptions options;
  SearchStats stats;
  std::vector<SearchHit> hits;
};

class SearchBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t binomial(unsigned n, unsigned k);

/// Enumerates every placement of `live` cells in the box, simulates one
/// representative per symmetry class on a bitboard, and keeps seeds whose
/// least geometric period (full motion group, residue allowed) equals
/// `period` with a non-identity motion. Hits are re-verified with the sparse
/// engine and sorted canonically.
SearchReport search_period(const SearchOptions& options);

/// Canonical form of a seed under the 8 square symmetries and translation.
CellSet canonical_seed(const CellSet& seed);

}  // namespace symbio::life
