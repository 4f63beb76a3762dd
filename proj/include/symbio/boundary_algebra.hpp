#pragma once

// Words over the four bracket symbols < > [ ] and the algebra they generate
// when every opener-closer pair (a container) is pulled out as a central scalar.

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symbio::algebra {

enum class Bracket : std::uint8_t { AngleOpen, AngleClose, SquareOpen, SquareClose };

constexpr bool is_opener(Bracket b) {
  return b == Bracket::AngleOpen || b == Bracket::SquareOpen;
}
constexpr bool is_closer(Bracket b) { return !is_opener(b); }
char to_char(Bracket b);

using Word = std::vector<Bracket>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error(what), position_(position) {}
  /// 1-based character offset of the offending character.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Whitespace is skipped; anything outside "<>[]" throws ParseError.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

/// True when the word has the reduced shape closers* openers*.
bool is_reduced(const Word& w);

/// The four container species, indexed c1..c4 as 0..3.
enum class Container : std::uint8_t { Angle = 0, Square = 1, SquareAngle = 2, AngleSquare = 3 };
/// "<>", "[]", "[>", "<]".
std::string_view container_text(Container c);
Container container_of(Bracket opener, Bracket closer);

/// Product c1^e1 c2^e2 c3^e3 c4^e4 of commuting container scalars.
struct Monomial {
  std::array<std::uint32_t, 4> exps{};

  static Monomial of(Container c, std::uint32_t power = 1);
  bool is_one() const { return exps == std::array<std::uint32_t, 4>{}; }
  std::uint32_t degree() const;
  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  /// e.g. "<>^2 <]"; empty string for the unit monomial.
  std::string to_string() const;
};

/// Which redex a single rewrite step removes. The default normalizer scans
/// left to right; the others exist for confluence checking.
enum class RedexOrder { LeftToRightScan, LeftmostFirst, RightmostFirst };

struct Normalized {
  Monomial scalar;
  Word residual;
  friend bool operator==(const Normalized&, const Normalized&) = default;
};

Normalized normalize(const Word& w, RedexOrder order = RedexOrder::LeftToRightScan);

/// Integer-linear combination of (monomial, reduced word) basis elements.
class Element {
 public:
  using Coeff = std::int64_t;
  using Key = std::pair<Word, Monomial>;

  Element() = default;
  /// Normalizes the word on the way in.
  static Element from_word(const Word& w, Coeff coeff = 1);
  static Element scalar(const Monomial& m, Coeff coeff = 1);
  /// Single basis term; `reduced` must already be in closers* openers* form.
  static Element term(const Word& reduced, const Monomial& m, Coeff coeff = 1);

  const std::map<Key, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Element& operator+=(const Element& o);
  Element scaled(const Monomial& m, Coeff coeff = 1) const;
  friend bool operator==(const Element&, const Element&) = default;

  /// e.g. "<] >[" or "2 <> >< + []"; named words E..H are printed by letter
  /// when `use_names` is set.
  std::string to_string(bool use_names = false) const;

 private:
  void add(const Word& w, const Monomial& m, Coeff c);
  std::map<Key, Coeff> terms_;
};

Element multiply(const Element& a, const Element& b);

/// The four extainer words.
enum class Extainer : std::uint8_t { E = 0, F = 1, G = 2, H = 3 };
inline constexpr std::array<Extainer, 4> kExtainers = {Extainer::E, Extainer::F, Extainer::G,
                                                       Extainer::H};
const Word& extainer_word(Extainer x);
char extainer_name(Extainer x);

using Table = std::array<std::array<Element, 4>, 4>;
/// Products XY for X, Y in {E, F, G, H}; row = left factor.
Table full_table();

}  // namespace symbio::algebra
