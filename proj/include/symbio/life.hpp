#pragma once

// Game of Life (B3/S23, Moore neighbourhood) on sparse cell sets, geometric
// period detection up to rigid motions, and RLE pattern files.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symbio::life {

struct Cell {
  int x, y;
  /// Row-major: y first.
  friend auto operator<=>(const Cell& a, const Cell& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct Box {
  int min_x = 0, min_y = 0, max_x = -1, max_y = -1;
  int width() const { return max_x - min_x + 1; }
  int height() const { return max_y - min_y + 1; }
};

/// Finite set of live cells, kept sorted and unique.
class CellSet {
 public:
  CellSet() = default;
  explicit CellSet(std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(Cell c) const;
  bool contains_all(const CellSet& other) const;
  bool disjoint(const CellSet& other) const;

  Box bounds() const;
  CellSet translated(int dx, int dy) const;
  /// Shifted so the bounding box starts at (0, 0).
  CellSet normalized() const;

  friend CellSet operator|(const CellSet& a, const CellSet& b);
  friend CellSet operator-(const CellSet& a, const CellSet& b);
  friend CellSet operator&(const CellSet& a, const CellSet& b);
  friend bool operator==(const CellSet&, const CellSet&) = default;
  friend auto operator<=>(const CellSet& a, const CellSet& b) { return a.cells_ <=> b.cells_; }

 private:
  std::vector<Cell> cells_;
};

/// Element of the square symmetry group: x' = a x + b y, y' = c x + d y.
struct Linear {
  int a, b, c, d;
  friend bool operator==(const Linear&, const Linear&) = default;
};

/// The 8 square symmetries, identity first.
const std::array<Linear, 8>& square_symmetries();
const char* symmetry_name(const Linear& m);

/// p -> linear(p) + (dx, dy).
struct RigidMotion {
  Linear linear{1, 0, 0, 1};
  int dx = 0, dy = 0;

  static RigidMotion identity() { return {}; }
  static RigidMotion translation(int dx, int dy) { return {{1, 0, 0, 1}, dx, dy}; }

  Cell apply(Cell p) const;
  CellSet apply(const CellSet& s) const;
  /// (this o other)(p) = this(other(p)).
  RigidMotion compose(const RigidMotion& other) const;
  RigidMotion inverse() const;
  bool is_identity() const { return *this == identity(); }
  bool is_translation() const { return linear == Linear{1, 0, 0, 1}; }
  std::string to_string() const;
  friend bool operator==(const RigidMotion&, const RigidMotion&) = default;
};

CellSet life_step(const CellSet& cells);
CellSet life_run(const CellSet& cells, unsigned steps);

enum class MotionGroup { Translations, Full };

/// L^period(X) = motion(X) + residue, with the union disjoint.
struct PeriodReport {
  unsigned period = 0;
  RigidMotion motion;
  CellSet residue;
  bool exact() const { return residue.empty(); }
};

/// Every motion s in `group` with s(x) contained in y (or equal to y when
/// residue is not allowed), in scan order: symmetries in square_symmetries()
/// order, translations by ascending anchor cell of y.
std::vector<RigidMotion> find_embeddings(const CellSet& x, const CellSet& y, bool allow_residue,
                                         MotionGroup group = MotionGroup::Full);

/// Least p <= max_steps such that some motion embeds x into L^p(x); the first
/// embedding in scan order is reported. max_steps is capped at 1000. The
/// empty pattern has no period.
std::optional<PeriodReport> detect_geometric_period(const CellSet& x, unsigned max_steps,
                                                    bool allow_residue,
                                                    MotionGroup group = MotionGroup::Full);

class RleError : public std::runtime_error {
 public:
  RleError(int line, int column, const std::string& what)
      : std::runtime_error("RLE " + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_, column_;
};

/// Standard run-length format: optional "x = W, y = H, rule = B3/S23" header,
/// runs of b/o, '$' row ends, '!' terminator, '#' comment lines.
CellSet load_rle(std::string_view text);
std::string save_rle(const CellSet& cells);

/// '#' for live, '.' for dead over the bounding box (optionally padded).
std::string render(const CellSet& cells, int pad = 0);

/// Reads a pattern file; throws RleError (line 0) when it cannot be opened.
CellSet load_rle_file(const std::string& path);

/// 8-connected components, ordered by their least cell.
std::vector<CellSet> components(const CellSet& cells);

/// Glider heading +x, +y (down-right on screen).
CellSet glider();

}  // namespace symbio::life
