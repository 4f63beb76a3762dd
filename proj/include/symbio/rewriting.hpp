#pragma once

// Token rewrite systems: DNA duplex replication, the dual-pair schema, the
// universal builder, and fixed-point unfolding of a self-applying term.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symbio::rewrite {

class RewriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// DNA replication

enum class Token { BraW, KetC, Env, Separator };
using Strand = std::vector<Token>;

/// "<W|C>", "<W| |C>", "<W| E |C>" ...
std::string render(const Strand& s);
/// Accepts the rendered notation back; whitespace outside tokens is a separator.
Strand parse_strand(std::string_view text);
Strand duplexes(std::size_t count);
/// Number of duplexes, or RewriteError when `s` is not a concatenation of BraW KetC.
std::size_t count_duplexes(const Strand& s);

struct Generation {
  /// Strings for: start, split, environment insertion, environment expansion, regroup.
  std::vector<Strand> stages;
};

struct ReplicationTrace {
  std::vector<Generation> generations;
  Strand result;
  /// "1: <W|C> -> <W| |C> -> <W| E |C> -> <W| |C><W| |C> -> <W|C><W|C>"
  std::vector<std::string> lines() const;
};

/// Requires `s` to be a concatenation of duplexes.
ReplicationTrace dna_replicate(const Strand& s, unsigned generations);

// ---------------------------------------------------------------------------
// Dual pairs

struct DualPairTrace {
  std::uint64_t pairs;
  std::vector<std::string> lines;
};

inline constexpr unsigned kMaxDualGenerations = 24;

/// O -> O O*, O* -> O O*, applied to every part each generation.
DualPairTrace dual_pair_replicate(unsigned generations);

// ---------------------------------------------------------------------------
// Universal builder

enum class EntityKind { Machine, Description, Artifact };

struct Entity {
  EntityKind kind;
  std::string name;
  /// Description carried by a machine or attached to an artifact; empty if none.
  std::string attached;
  friend bool operator==(const Entity&, const Entity&) = default;
};

struct BuilderOptions {
  /// The machine is used up by building ("B,x -> X,x") instead of persisting.
  bool consuming = false;
};

struct BuilderSoup {
  std::vector<Entity> entities;
  /// Remaining build resources; nullopt means unbounded.
  std::optional<std::uint64_t> resources;

  std::size_t count(EntityKind k) const;
  /// "B,b ; B,b ; X,x"
  std::string to_string() const;
};

/// "B,b" machine with description; "x" loose description; "X,x" artifact when
/// the name is not a machine name. Entries separated by ';'.
BuilderSoup parse_soup(std::string_view text);

/// A description names what it builds by its upper-case form; the lower-case of a
/// machine's own name is that machine's description.
BuilderSoup builder_step(const BuilderSoup& soup, const BuilderOptions& opts = {});

// ---------------------------------------------------------------------------
// Lambda algebra terms

class Term;
using TermPtr = std::shared_ptr<const Term>;

/// Binary application tree over named atoms. Immutable.
class Term {
 public:
  static TermPtr atom(std::string name);
  static TermPtr apply(TermPtr fn, TermPtr arg);

  bool is_atom() const { return !fn_; }
  const std::string& name() const { return name_; }
  const TermPtr& fn() const { return fn_; }
  const TermPtr& arg() const { return arg_; }

  /// Fully parenthesised: "(b (a a))".
  std::string to_string() const;
  /// Juxtaposition style: "b(aa)"; the atom Not prints as the negation sign.
  std::string to_paper_string() const;

 private:
  std::string name_;
  TermPtr fn_, arg_;
};

bool equal(const TermPtr& a, const TermPtr& b);

/// The axiom instance (self x) -> (wrap (x x)).
struct SelfApplicationRule {
  std::string self = "a";
  std::string wrap = "b";
};

/// One leftmost-outermost rewrite, or nullopt in normal form.
std::optional<TermPtr> rewrite_once(const TermPtr& t, const SelfApplicationRule& rule);

/// n rewrites starting from (self self).
TermPtr lambda_unfold(const SelfApplicationRule& rule, unsigned n);

}  // namespace symbio::rewrite
