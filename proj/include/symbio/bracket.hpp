#pragma once

// Bracket state sum on layered tangle diagrams.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "symbio/laurent.hpp"
#include "symbio/temperley_lieb.hpp"

namespace symbio::knots {

inline constexpr int kMaxCrossings = 24;

enum class LayerKind { Identity, Cup, Cap, Cross };
enum class Sign { Positive, Negative };

/// One horizontal slice of a diagram. `strands` is the incoming strand count;
/// `pos` is the 1-based left position it acts on (unused for Identity).
struct Layer {
  LayerKind kind;
  int pos = 0;
  int strands = 0;
  Sign sign = Sign::Positive;

  int outgoing() const;
  std::string to_string() const;
  friend bool operator==(const Layer&, const Layer&) = default;
};

class TangleError : public std::runtime_error {
 public:
  TangleError(int layer_index, const std::string& what)
      : std::runtime_error(what), layer_(layer_index) {}
  /// 1-based index of the offending layer, 0 when not tied to a layer.
  int layer() const { return layer_; }

 private:
  int layer_;
};

/// Layers read bottom to top. Adjacent layers always agree on strand count.
class Tangle {
 public:
  Tangle() = default;
  /// Throws TangleError naming the first layer whose arity does not chain.
  explicit Tangle(std::vector<Layer> layers);

  const std::vector<Layer>& layers() const { return layers_; }
  int source_strands() const;
  int target_strands() const;
  bool closed() const { return source_strands() == 0 && target_strands() == 0; }
  int crossings() const;

  /// Every crossing sign flipped.
  Tangle mirrored() const;
  /// "cup 1 0 / cap 1 2" form.
  std::string to_string() const;

 private:
  std::vector<Layer> layers_;
};

/// Layers separated by '/' or newlines: `cup i n`, `cap i n`, `cross i n +|-`, `id n`.
Tangle parse_tangle(std::string_view text);

/// Loop value -A^2 - A^-2.
/// Built-in closed diagrams: "unknot", "hopf", "trefoil" (closures of the
/// 2-strand braids 1, s^2, s^3) and "kinked-unknot" (one positive curl).
std::optional<Tangle> named_diagram(std::string_view name);
const std::vector<std::string>& diagram_names();

LaurentPoly loop_value();

/// + : A * identity + A^-1 * U;  - : A^-1 * identity + A * U  (two strands).
tl::Element expand_crossing(Sign s);

struct BracketValue {
  LaurentPoly unnormalized;
  /// unnormalized / loop_value() for non-empty diagrams.
  LaurentPoly normalized;
  friend bool operator==(const BracketValue&, const BracketValue&) = default;
};

/// Brute force over all 2^c smoothings, counting loops with union-find.
/// `workers` > 1 splits the state range; partial sums combine exactly.
LaurentPoly state_sum(const Tangle& diagram, unsigned workers = 1);
/// Threads a linear combination of boundary matchings through the layers.
LaurentPoly tl_threading(const Tangle& diagram);

/// Runs both evaluators; throws std::logic_error if they ever disagree.
BracketValue evaluate_bracket(const Tangle& diagram, unsigned workers = 1);

struct R2Check {
  bool holds = false;
  /// Coefficient of U_i before substituting the loop value, e.g. "A^2 + A^-2 + d".
  std::string u_coefficient_symbolic;
  /// The same coefficient after substitution; zero when the move holds.
  LaurentPoly u_coefficient;
  tl::Element product;
};

/// Expands cross(i,+) followed by cross(i,-) in TL_n and compares to identity.
R2Check verify_r2(int n, int i);

}  // namespace symbio::knots
