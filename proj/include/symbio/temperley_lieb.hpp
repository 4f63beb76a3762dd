#pragma once

// Temperley-Lieb diagrams: non-crossing perfect matchings on 2n boundary
// points, composed by stacking and removing closed loops.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symbio/boundary_algebra.hpp"
#include "symbio/laurent.hpp"

namespace symbio::tl {

inline constexpr int kMaxBasisStrands = 12;

/// Points 1..n run along the top edge left to right, n+1..2n along the bottom
/// edge left to right. Stored as a partner table, which is canonical.
class PlanarMatching {
 public:
  /// Throws std::invalid_argument unless `pairs` is a non-crossing perfect matching.
  PlanarMatching(int n, const std::vector<std::pair<int, int>>& pairs);

  static PlanarMatching identity(int n);
  /// Generator U_i, 1 <= i < n: cup-cap between strands i and i+1.
  static PlanarMatching generator(int n, int i);

  int strands() const { return n_; }
  /// Partner of 1-based point p.
  int partner(int p) const { return partner_[static_cast<std::size_t>(p - 1)] + 1; }
  std::vector<std::pair<int, int>> pairs() const;
  /// Top/bottom reflection.
  PlanarMatching flipped() const;

  /// e.g. "{(1,2),(3,4)}".
  std::string to_string() const;

  friend auto operator<=>(const PlanarMatching&, const PlanarMatching&) = default;

 private:
  PlanarMatching(int n, std::vector<int> partner) : n_(n), partner_(std::move(partner)) {}
  friend struct Composer;
  int n_ = 0;
  std::vector<int> partner_;  // 0-based
};

struct Composite {
  PlanarMatching diagram;
  int loops;
};

/// Stacks `lower` below `upper` and removes closed loops.
Composite compose(const PlanarMatching& upper, const PlanarMatching& lower);

/// All non-crossing matchings for n strands, 1 <= n <= 12. Deterministic order.
std::vector<PlanarMatching> enumerate_basis(int n);

/// Monospace drawing: caps hang from the top row of points, cups rise from
/// the bottom row, through-strands jog sideways one at a time in between.
std::string render_ascii(const PlanarMatching& d);

/// Linear combination of diagrams. The loop value is carried by the element so
/// the same code serves a formal delta and the bracket's -A^2 - A^-2.
class Element {
 public:
  /// Formal loop variable delta.
  static LaurentPoly formal_delta() { return LaurentPoly::var(); }

  explicit Element(int n, LaurentPoly loop_value = formal_delta());
  static Element diagram(const PlanarMatching& d, LaurentPoly coeff = LaurentPoly(1),
                         LaurentPoly loop_value = formal_delta());
  static Element identity(int n, LaurentPoly loop_value = formal_delta());
  static Element generator(int n, int i, LaurentPoly loop_value = formal_delta());

  int strands() const { return n_; }
  const LaurentPoly& loop_value() const { return loop_value_; }
  const std::map<PlanarMatching, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(const PlanarMatching& d) const;

  Element& operator+=(const Element& o);
  Element& operator*=(const LaurentPoly& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator*(Element a, const LaurentPoly& c) { return a *= c; }
  /// Algebra product; `a` sits above `b`.
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string(const std::string& var = "d") const;

 private:
  void add(const PlanarMatching& d, const LaurentPoly& c);
  int n_;
  LaurentPoly loop_value_;
  std::map<PlanarMatching, LaurentPoly> terms_;
};

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<Check> checks;
  bool all_pass() const;
  std::string to_text() const;
};

/// U_i^2 = d U_i, U_i U_{i+-1} U_i = U_i, U_i U_j = U_j U_i for |i-j| > 1.
Report verify_relations(int n);

/// Image of an extainer word under E -> U1, F -> U2, G -> U1 U2, H -> U2 U1 in TL_3.
Element extainer_image(algebra::Extainer x);
/// Specializes a boundary-algebra element by [> = <] = 1, <> = [] = d and maps
/// it into TL_3. Throws std::invalid_argument for residual words with no image.
Element specialize(const algebra::Element& e);
/// Checks every entry of the container/extainer table, plus EFE, against TL_3.
Report boundary_embedding();

}  // namespace symbio::tl
