#include "symbio/folding.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <stack>

namespace symbio::fold {

namespace {

bool is_letter(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) != 0; }

char fresh_letter(std::size_t k) {
  return k < 26 ? static_cast<char>('a' + k) : static_cast<char>('A' + (k - 26));
}

}  // namespace

Chain::Chain(std::vector<Site> sites) : sites_(std::move(sites)) {
  std::map<char, std::pair<int, int>> seen;  // letter -> (bra index, ket index)
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    const Site& s = sites_[i];
    if (!is_letter(s.letter))
      throw ChainError(std::string("chain: '") + s.letter + "' is not an ASCII letter");
    auto [it, inserted] = seen.try_emplace(s.letter, -1, -1);
    int& slot = s.bra ? it->second.first : it->second.second;
    if (slot != -1)
      throw ChainError(std::string("chain: letter '") + s.letter + "' has two " +
                       (s.bra ? "bras" : "kets"));
    slot = static_cast<int>(i);
  }
  for (const auto& [letter, where] : seen) {
    if (where.first == -1 || where.second == -1)
      throw ChainError(std::string("chain: letter '") + letter + "' is missing its " +
                       (where.first == -1 ? "bra" : "ket"));
    if (where.first > where.second)
      throw ChainError(std::string("chain: ket of '") + letter + "' precedes its bra");
  }
  if (seen.size() > static_cast<std::size_t>(kMaxPairs))
    throw ChainError("chain: more than " + std::to_string(kMaxPairs) + " pairs");
}

std::vector<std::pair<int, int>> Chain::chords() const {
  std::map<char, int> open;
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    const Site& s = sites_[i];
    if (s.bra) {
      open[s.letter] = static_cast<int>(out.size());
      out.emplace_back(static_cast<int>(i), -1);
    } else {
      out[static_cast<std::size_t>(open.at(s.letter))].second = static_cast<int>(i);
    }
  }
  return out;
}

std::string Chain::to_braket() const {
  std::string out;
  for (const Site& s : sites_) {
    if (s.bra) out += std::string("<") + s.letter + "|";
    else out += std::string("|") + s.letter + ">";
  }
  return out;
}

std::string Chain::to_abbrev() const {
  std::string out;
  for (const Site& s : sites_) out.push_back(s.letter);
  return out;
}

Chain parse_chain_abbrev(std::string_view text) {
  std::vector<char> letters;
  std::map<char, int> count;
  std::vector<char> order;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (!is_letter(ch))
      throw ChainError("chain: invalid character '" + std::string(1, ch) + "' at position " +
                       std::to_string(i + 1));
    if (count[ch]++ == 0) order.push_back(ch);
    letters.push_back(ch);
  }
  for (char ch : order) {
    if (count[ch] != 2)
      throw ChainError("chain: letter '" + std::string(1, ch) + "' occurs " +
                       std::to_string(count[ch]) + " time(s); each letter must occur twice");
  }
  std::map<char, bool> opened;
  std::vector<Site> sites;
  sites.reserve(letters.size());
  for (char ch : letters) {
    bool bra = !opened[ch];
    opened[ch] = true;
    sites.push_back({bra, ch});
  }
  return Chain(std::move(sites));
}

Chain parse_chain_braket(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  std::vector<Site> sites;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    return ChainError("chain: " + why + " at offset " + std::to_string(i + 1));
  };
  while (i < compact.size()) {
    if (i + 2 >= compact.size()) throw fail("truncated bra/ket");
    char open = compact[i], letter = compact[i + 1], close = compact[i + 2];
    if (!is_letter(letter)) throw fail("expected a letter");
    if (open == '<' && close == '|') sites.push_back({true, letter});
    else if (open == '|' && close == '>') sites.push_back({false, letter});
    else throw fail("expected <x| or |x>");
    i += 3;
  }
  return Chain(std::move(sites));
}

Chain parse_chain(std::string_view text) {
  if (text.find_first_of("<>|") != std::string_view::npos) return parse_chain_braket(text);
  return parse_chain_abbrev(text);
}

ParenWord::ParenWord(std::string text) : text_(std::move(text)) {
  for (std::size_t i = 0; i < text_.size(); ++i)
    if (text_[i] != '<' && text_[i] != '>')
      throw ChainError("parenthesis word: invalid character at position " + std::to_string(i + 1));
}

ParenWord project_p(const Chain& c) {
  std::string s;
  for (const Site& site : c.sites()) s.push_back(site.bra ? '<' : '>');
  return ParenWord(std::move(s));
}

bool is_legal(const ParenWord& w) {
  int depth = 0;
  for (char ch : w.text()) {
    depth += ch == '<' ? 1 : -1;
    if (depth < 0) return false;
  }
  return depth == 0 && !w.text().empty();
}

std::vector<std::pair<int, int>> canonical_pairing(const ParenWord& w) {
  if (!is_legal(w)) throw ChainError("canonical_pairing: '" + w.text() + "' is not legal");
  std::vector<std::pair<int, int>> out;
  std::stack<std::size_t> open;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.text()[i] == '<') {
      open.push(out.size());
      out.emplace_back(static_cast<int>(i) + 1, 0);
    } else {
      out[open.top()].second = static_cast<int>(i) + 1;
      open.pop();
    }
  }
  return out;
}

Chain relabel_q(const ParenWord& w) {
  auto pairing = canonical_pairing(w);
  if (pairing.size() > static_cast<std::size_t>(kMaxPairs))
    throw ChainError("relabel_q: more than " + std::to_string(kMaxPairs) + " pairs");
  std::vector<Site> sites(w.size());
  for (std::size_t k = 0; k < pairing.size(); ++k) {
    auto [open, close] = pairing[k];
    sites[static_cast<std::size_t>(open - 1)] = {true, fresh_letter(k)};
    sites[static_cast<std::size_t>(close - 1)] = {false, fresh_letter(k)};
  }
  return Chain(std::move(sites));
}

namespace {

std::vector<Site> canonical_letters(const Chain& c) {
  std::map<char, char> rename;
  std::vector<Site> out;
  out.reserve(c.size());
  for (const Site& s : c.sites()) {
    auto [it, inserted] = rename.try_emplace(s.letter, fresh_letter(rename.size()));
    out.push_back({s.bra, it->second});
  }
  return out;
}

}  // namespace

bool is_isomorphic(const Chain& a, const Chain& b) {
  return a.size() == b.size() && canonical_letters(a) == canonical_letters(b);
}

Fold classify(const Chain& c) {
  ParenWord p = project_p(c);
  if (!is_legal(p)) return c.size() == 0 ? Fold::Secondary : Fold::Tertiary;
  return is_isomorphic(relabel_q(p), c) ? Fold::Secondary : Fold::Tertiary;
}

const char* to_string(Fold f) { return f == Fold::Secondary ? "Secondary" : "Tertiary"; }

bool chords_noncrossing(const Chain& c) {
  auto chords = c.chords();
  for (auto [i, k] : chords)
    for (auto [j, l] : chords)
      if (i < j && j < k && k < l) return false;
  return true;
}

std::optional<std::vector<int>> fold_tree(const Chain& c) {
  if (!chords_noncrossing(c)) return std::nullopt;
  auto chords = c.chords();
  std::vector<int> parent(chords.size(), -1);
  std::vector<int> owner(c.size(), -1);
  for (std::size_t k = 0; k < chords.size(); ++k) {
    owner[static_cast<std::size_t>(chords[k].first)] = static_cast<int>(k);
    owner[static_cast<std::size_t>(chords[k].second)] = static_cast<int>(k);
  }
  std::vector<int> open;
  for (std::size_t i = 0; i < c.size(); ++i) {
    int k = owner[i];
    if (c.sites()[i].bra) {
      parent[static_cast<std::size_t>(k)] = open.empty() ? -1 : open.back();
      open.push_back(k);
    } else {
      open.pop_back();
    }
  }
  return parent;
}

std::vector<int> ContactGraph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(vertices), 0);
  for (const Edge& e : edges) {
    ++d[static_cast<std::size_t>(e.u)];
    ++d[static_cast<std::size_t>(e.v)];
  }
  return d;
}

ContactGraph build_contact_graph(const Chain& c, bool circular) {
  ContactGraph g;
  g.vertices = static_cast<int>(c.size());
  g.circular = circular;
  for (const Site& s : c.sites()) g.labels.push_back(s.letter);
  for (int i = 0; i + 1 < g.vertices; ++i) g.edges.push_back({i, i + 1, EdgeKind::Backbone});
  if (circular && g.vertices >= 2) g.edges.push_back({g.vertices - 1, 0, EdgeKind::Backbone});
  for (auto [i, j] : c.chords()) g.edges.push_back({i, j, EdgeKind::Chord});
  return g;
}

namespace {

std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

class K7Search {
 public:
  explicit K7Search(const ContactGraph& g) : n_(g.vertices), partner_(static_cast<std::size_t>(g.vertices), -1) {
    for (const Edge& e : g.edges) {
      if (e.kind != EdgeKind::Chord) continue;
      partner_[static_cast<std::size_t>(e.u)] = e.v;
      partner_[static_cast<std::size_t>(e.v)] = e.u;
    }
    arc_of_.assign(static_cast<std::size_t>(n_), -1);
  }

  std::optional<std::array<int, 7>> run() {
    if (n_ < 7) return std::nullopt;
    for (int c0 = 0; c0 <= n_ - 7; ++c0) {
      cuts_[0] = c0;
      if (descend(1)) return cuts_;
    }
    return std::nullopt;
  }

 private:
  bool in_arc(int p, int lo, int hi) const {
    if (lo < hi) return p >= lo && p < hi;
    return p >= lo || p < hi;  // wrap arc
  }

  // Every K7 vertex has 6 neighbours; the backbone supplies at most 2 of them.
  bool viable(int lo, int hi) const {
    int external = 0;
    for (int p = lo; p != hi; p = (p + 1) % n_) {
      int q = partner_[static_cast<std::size_t>(p)];
      if (q >= 0 && !in_arc(q, lo, hi)) ++external;
    }
    return external >= 4;
  }

  void label(int lo, int hi, int arc) {
    for (int p = lo; p != hi; p = (p + 1) % n_) arc_of_[static_cast<std::size_t>(p)] = arc;
  }

  bool descend(int k) {
    if (k == 7) {
      if (!viable(cuts_[6], cuts_[0])) return false;
      label(cuts_[6], cuts_[0], 6);
      return is_k7();
    }
    for (int c = cuts_[static_cast<std::size_t>(k - 1)] + 1; c <= n_ - 7 + k; ++c) {
      if (!viable(cuts_[static_cast<std::size_t>(k - 1)], c)) continue;
      cuts_[static_cast<std::size_t>(k)] = c;
      label(cuts_[static_cast<std::size_t>(k - 1)], c, k - 1);
      if (descend(k + 1)) return true;
    }
    return false;
  }

  bool is_k7() const {
    std::array<std::uint8_t, 7> adj{};
    for (int a = 0; a < 7; ++a) {
      int b = (a + 1) % 7;
      adj[static_cast<std::size_t>(a)] |= static_cast<std::uint8_t>(1u << b);
      adj[static_cast<std::size_t>(b)] |= static_cast<std::uint8_t>(1u << a);
    }
    for (int p = 0; p < n_; ++p) {
      int q = partner_[static_cast<std::size_t>(p)];
      if (q < 0) continue;
      int a = arc_of_[static_cast<std::size_t>(p)], b = arc_of_[static_cast<std::size_t>(q)];
      if (a != b) adj[static_cast<std::size_t>(a)] |= static_cast<std::uint8_t>(1u << b);
    }
    for (int a = 0; a < 7; ++a)
      if ((adj[static_cast<std::size_t>(a)] | (1u << a)) != 0x7Fu) return false;
    return true;
  }

  int n_;
  std::vector<int> partner_;
  std::vector<int> arc_of_;
  std::array<int, 7> cuts_{};
};

}  // namespace

std::optional<K7Retraction> find_k7_retraction(const ContactGraph& g) {
  if (!g.circular) throw ChainError("find_k7_retraction: contact graph must be circular");
  if (choose(g.vertices, 7) > kK7SearchBudget)
    throw ChainError("find_k7_retraction: " + std::to_string(g.vertices) +
                     " sites exceed the search budget");
  auto cuts = K7Search(g).run();
  if (!cuts) return std::nullopt;
  K7Retraction r;
  const int n = g.vertices;
  for (int k = 0; k < 7; ++k) {
    int lo = (*cuts)[static_cast<std::size_t>(k)];
    int hi = k < 6 ? (*cuts)[static_cast<std::size_t>(k + 1)] : (*cuts)[0] + n;
    Arc a{lo, hi - lo};
    std::string letters;
    for (int p = lo; p < hi; ++p) letters.push_back(g.labels[static_cast<std::size_t>(p % n)]);
    r.arcs.push_back(a);
    r.arc_letters.push_back(letters);
  }
  r.contracted_vertices = 7;
  r.contracted_edges = 21;
  return r;
}

std::string render_arcs(const Chain& c) {
  auto chords = c.chords();
  std::sort(chords.begin(), chords.end(), [](auto a, auto b) {
    return (a.second - a.first) < (b.second - b.first) ||
           ((a.second - a.first) == (b.second - b.first) && a.first < b.first);
  });
  // Row 0 sits directly above the letters; wider arcs go higher.
  std::vector<std::vector<std::pair<int, int>>> rows;
  std::vector<std::pair<std::pair<int, int>, std::size_t>> placed;
  for (auto ch : chords) {
    std::size_t r = 0;
    for (; r < rows.size(); ++r) {
      bool clash = false;
      for (auto [a, b] : rows[r])
        if (!(b < ch.first || ch.second < a)) clash = true;
      // an arc must sit above every arc nested inside it
      for (auto [arc, row] : placed)
        if (row >= r && ch.first <= arc.first && arc.second <= ch.second) clash = true;
      if (!clash) break;
    }
    if (r == rows.size()) rows.emplace_back();
    rows[r].push_back(ch);
    placed.emplace_back(ch, r);
  }
  const std::size_t width = c.size() == 0 ? 0 : 2 * c.size() - 1;
  std::vector<std::string> grid(rows.size(), std::string(width, ' '));
  for (auto [arc, r] : placed) {
    auto col_a = static_cast<std::size_t>(2 * arc.first), col_b = static_cast<std::size_t>(2 * arc.second);
    for (std::size_t x = col_a; x <= col_b; ++x)
      if (grid[r][x] == ' ') grid[r][x] = '-';
    grid[r][col_a] = '+';
    grid[r][col_b] = '+';
    for (std::size_t below = 0; below < r; ++below) {
      grid[below][col_a] = '|';
      grid[below][col_b] = '|';
    }
  }
  std::string out;
  for (std::size_t r = rows.size(); r-- > 0;) {
    std::string line = grid[r];
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  std::string letters;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) letters += ' ';
    letters += c.sites()[i].letter;
  }
  out += letters + '\n';
  return out;
}

}  // namespace symbio::fold
