#pragma once

// Folding chains written as labelled bras and kets, their parenthesis
// projections, and secondary/tertiary classification.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symbio::fold {

inline constexpr int kMaxPairs = 52;

class ChainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Site {
  bool bra;  // <x| when true, |x> otherwise
  char letter;
  friend bool operator==(const Site&, const Site&) = default;
};

/// Each letter appears exactly once as a bra and once as a ket, bra first.
class Chain {
 public:
  Chain() = default;
  /// Throws ChainError if the sites violate the pairing rules.
  explicit Chain(std::vector<Site> sites);

  const std::vector<Site>& sites() const { return sites_; }
  std::size_t size() const { return sites_.size(); }
  std::size_t pairs() const { return sites_.size() / 2; }

  /// Position pairs (i, j), i < j, 0-based, ordered by bra position.
  std::vector<std::pair<int, int>> chords() const;

  /// "<a|<b||b>|a>"
  std::string to_braket() const;
  /// "abba"
  std::string to_abbrev() const;

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::vector<Site> sites_;
};

/// First occurrence of a letter is its bra, second its ket.
Chain parse_chain_abbrev(std::string_view text);
/// Full "<a|<b||b>|a>" syntax.
Chain parse_chain_braket(std::string_view text);
/// Either syntax; full syntax is recognised by its '<', '|' or '>' characters.
Chain parse_chain(std::string_view text);

/// Word over '<' and '>'; any such word is representable.
class ParenWord {
 public:
  ParenWord() = default;
  /// Throws ChainError on characters other than '<' and '>'.
  explicit ParenWord(std::string text);
  const std::string& text() const { return text_; }
  std::size_t size() const { return text_.size(); }
  friend bool operator==(const ParenWord&, const ParenWord&) = default;

 private:
  std::string text_;
};

ParenWord project_p(const Chain& c);
bool is_legal(const ParenWord& w);

/// 1-based (opener, closer) positions, sorted by opener. Throws ChainError if illegal.
std::vector<std::pair<int, int>> canonical_pairing(const ParenWord& w);

/// Fresh letters a..z then A..Z in order of opener position. Throws ChainError if illegal.
Chain relabel_q(const ParenWord& w);

/// Equal after renaming letters by first occurrence.
bool is_isomorphic(const Chain& a, const Chain& b);

enum class Fold { Secondary, Tertiary };
Fold classify(const Chain& c);
const char* to_string(Fold f);

/// True when no two chords interleave as i < j < k < l with chords (i,k), (j,l).
bool chords_noncrossing(const Chain& c);

/// Nesting tree of the chords: parent[k] is the index (into chords()) of the
/// innermost chord enclosing chord k, or -1 for top level. nullopt when chords cross.
std::optional<std::vector<int>> fold_tree(const Chain& c);

enum class EdgeKind { Backbone, Chord };

struct Edge {
  int u, v;
  EdgeKind kind;
};

struct ContactGraph {
  int vertices = 0;
  bool circular = false;
  std::vector<Edge> edges;
  /// Letter carried by each vertex.
  std::vector<char> labels;

  std::vector<int> degrees() const;
};

ContactGraph build_contact_graph(const Chain& c, bool circular);

/// Half-open range [start, start+length) of backbone positions, modulo the cycle length.
struct Arc {
  int start;
  int length;
};

struct K7Retraction {
  std::vector<Arc> arcs;
  std::vector<std::string> arc_letters;
  int contracted_vertices = 0;
  int contracted_edges = 0;
};

/// Largest C(n, 7) cut-set count the search accepts.
inline constexpr std::uint64_t kK7SearchBudget = 100'000'000;

/// Scans cut sets of the backbone cycle into 7 contiguous arcs in
/// lexicographic order and returns the first whose contraction (parallel edges
/// merged, loops deleted) is exactly K7. Throws ChainError when the graph is
/// not circular or the search exceeds kK7SearchBudget.
std::optional<K7Retraction> find_k7_retraction(const ContactGraph& g);

/// Chords drawn as arcs above the letter row.
std::string render_arcs(const Chain& c);

}  // namespace symbio::fold
