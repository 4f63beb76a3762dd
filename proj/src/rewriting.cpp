#include "symbio/rewriting.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace symbio::rewrite {

std::string render(const Strand& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case Token::BraW: out += "<W|"; break;
      case Token::KetC: out += (i > 0 && s[i - 1] == Token::BraW) ? "C>" : "|C>"; break;
      case Token::Env: out += " E "; break;
      case Token::Separator: out += " "; break;
    }
  }
  return out;
}

Strand parse_strand(std::string_view text) {
  Strand s;
  std::size_t i = 0;
  auto push_sep = [&] {
    if (!s.empty() && s.back() != Token::Separator && s.back() != Token::Env)
      s.push_back(Token::Separator);
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      push_sep();
      ++i;
    } else if (text.substr(i, 3) == "<W|") {
      s.push_back(Token::BraW);
      i += 3;
    } else if (text.substr(i, 3) == "|C>") {
      s.push_back(Token::KetC);
      i += 3;
    } else if (text.substr(i, 2) == "C>" && !s.empty() && s.back() == Token::BraW) {
      s.push_back(Token::KetC);
      i += 2;
    } else if (ch == 'E') {
      if (!s.empty() && s.back() == Token::Separator) s.pop_back();
      s.push_back(Token::Env);
      ++i;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      throw RewriteError("strand: unexpected '" + std::string(1, ch) + "' at position " +
                         std::to_string(i + 1));
    }
  }
  if (!s.empty() && s.back() == Token::Separator) s.pop_back();
  return s;
}

Strand duplexes(std::size_t count) {
  Strand s;
  for (std::size_t k = 0; k < count; ++k) {
    s.push_back(Token::BraW);
    s.push_back(Token::KetC);
  }
  return s;
}

std::size_t count_duplexes(const Strand& s) {
  if (s.size() % 2 != 0) throw RewriteError("strand: odd token count; not a duplex sequence");
  for (std::size_t i = 0; i < s.size(); i += 2)
    if (s[i] != Token::BraW || s[i + 1] != Token::KetC)
      throw RewriteError("strand: malformed duplex at token " + std::to_string(i + 1));
  return s.size() / 2;
}

namespace {

// Rewrites every occurrence of `from` left to right, without overlap.
Strand rewrite_all(const Strand& s, const Strand& from, const Strand& to) {
  Strand out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (i + from.size() <= s.size() && std::equal(from.begin(), from.end(), s.begin() + static_cast<std::ptrdiff_t>(i))) {
      out.insert(out.end(), to.begin(), to.end());
      i += from.size();
    } else {
      out.push_back(s[i++]);
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> ReplicationTrace::lines() const {
  std::vector<std::string> out;
  for (std::size_t g = 0; g < generations.size(); ++g) {
    std::string line = std::to_string(g + 1) + ": ";
    const auto& stages = generations[g].stages;
    for (std::size_t k = 0; k < stages.size(); ++k) {
      if (k) line += " -> ";
      line += render(stages[k]);
    }
    out.push_back(line);
  }
  return out;
}

ReplicationTrace dna_replicate(const Strand& s, unsigned generations) {
  count_duplexes(s);
  using T = Token;
  ReplicationTrace trace;
  Strand cur = s;
  for (unsigned g = 0; g < generations; ++g) {
    Generation gen;
    gen.stages.push_back(cur);
    Strand split = rewrite_all(cur, {T::BraW, T::KetC}, {T::BraW, T::Separator, T::KetC});
    gen.stages.push_back(split);
    Strand inserted = rewrite_all(split, {T::Separator}, {T::Env});
    gen.stages.push_back(inserted);
    Strand expanded =
        rewrite_all(inserted, {T::Env}, {T::Separator, T::KetC, T::BraW, T::Separator});
    gen.stages.push_back(expanded);
    Strand regrouped = rewrite_all(expanded, {T::Separator}, {});
    gen.stages.push_back(regrouped);
    cur = std::move(regrouped);
    trace.generations.push_back(std::move(gen));
  }
  trace.result = cur;
  return trace;
}

DualPairTrace dual_pair_replicate(unsigned generations) {
  if (generations > kMaxDualGenerations)
    throw RewriteError("dual pairs: at most " + std::to_string(kMaxDualGenerations) +
                       " generations");
  // true = O, false = O*
  std::vector<bool> parts{true, false};
  auto show = [](const std::vector<bool>& p, bool spaced_parts) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i && (spaced_parts || i % 2 == 0)) out += ' ';
      out += p[i] ? "O" : "O*";
    }
    return out;
  };
  DualPairTrace trace{1, {}};
  for (unsigned g = 0; g < generations; ++g) {
    std::string line = std::to_string(g + 1) + ": " + show(parts, false);
    if (parts.size() <= 8) line += " -> " + show(parts, true);
    std::vector<bool> next;
    next.reserve(parts.size() * 2);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      next.push_back(true);
      next.push_back(false);
    }
    parts = std::move(next);
    if (parts.size() <= 16) line += " -> " + show(parts, false);
    trace.lines.push_back(line);
  }
  trace.pairs = parts.size() / 2;
  return trace;
}

std::size_t BuilderSoup::count(EntityKind k) const {
  return static_cast<std::size_t>(
      std::count_if(entities.begin(), entities.end(), [k](const Entity& e) { return e.kind == k; }));
}

std::string BuilderSoup::to_string() const {
  std::string out;
  for (const Entity& e : entities) {
    if (!out.empty()) out += " ; ";
    out += e.name;
    if (!e.attached.empty()) out += "," + e.attached;
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

BuilderSoup parse_soup(std::string_view text) {
  BuilderSoup soup;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string item = trim(text.substr(start, end - start));
    start = end + 1;
    if (item.empty()) continue;
    std::size_t comma = item.find(',');
    std::string name = trim(item.substr(0, comma));
    std::string attached = comma == std::string::npos ? "" : trim(item.substr(comma + 1));
    if (name.empty()) throw RewriteError("soup: empty entity name in '" + item + "'");
    Entity e;
    if (comma == std::string::npos && name == lower(name)) {
      e = {EntityKind::Description, name, ""};
    } else if (name == "B") {
      e = {EntityKind::Machine, name, attached};
    } else {
      e = {EntityKind::Artifact, name, attached};
    }
    soup.entities.push_back(e);
  }
  return soup;
}

BuilderSoup builder_step(const BuilderSoup& soup, const BuilderOptions& opts) {
  BuilderSoup out;
  out.resources = soup.resources;
  std::vector<Entity> pool = soup.entities;

  // Idle machines take the first loose description still in the soup.
  std::vector<bool> taken(pool.size(), false);
  std::size_t next_desc = 0;
  for (Entity& m : pool) {
    if (m.kind != EntityKind::Machine || !m.attached.empty()) continue;
    while (next_desc < pool.size() && pool[next_desc].kind != EntityKind::Description) ++next_desc;
    if (next_desc == pool.size()) break;
    m.attached = pool[next_desc].name;
    taken[next_desc++] = true;
  }
  std::vector<Entity> remaining;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (!taken[i]) remaining.push_back(pool[i]);
  pool = std::move(remaining);

  std::vector<Entity> produced;
  std::vector<Entity> kept;
  for (const Entity& e : pool) {
    const bool can_build = e.kind == EntityKind::Machine && !e.attached.empty() &&
                           (!out.resources || *out.resources > 0);
    if (!can_build) {
      kept.push_back(e);
      continue;
    }
    if (out.resources) --*out.resources;
    const bool self = e.attached == lower(e.name);
    if (self) produced.push_back({EntityKind::Machine, e.name, e.attached});
    else produced.push_back({EntityKind::Artifact, upper(e.attached), e.attached});
    if (!opts.consuming) kept.push_back(e);
  }
  out.entities = std::move(kept);
  out.entities.insert(out.entities.end(), produced.begin(), produced.end());
  return out;
}

TermPtr Term::atom(std::string name) {
  if (name.empty()) throw RewriteError("term: empty atom name");
  auto t = std::make_shared<Term>();
  t->name_ = std::move(name);
  return t;
}

TermPtr Term::apply(TermPtr fn, TermPtr arg) {
  if (!fn || !arg) throw RewriteError("term: null operand");
  auto t = std::make_shared<Term>();
  t->fn_ = std::move(fn);
  t->arg_ = std::move(arg);
  return t;
}

std::string Term::to_string() const {
  if (is_atom()) return name_;
  return "(" + fn_->to_string() + " " + arg_->to_string() + ")";
}

std::string Term::to_paper_string() const {
  if (is_atom()) return name_ == "Not" ? "\xC2\xAC" : name_;
  std::string a = arg_->to_paper_string();
  return fn_->to_paper_string() + (arg_->is_atom() ? a : "(" + a + ")");
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->is_atom() != b->is_atom()) return false;
  if (a->is_atom()) return a->name() == b->name();
  return equal(a->fn(), b->fn()) && equal(a->arg(), b->arg());
}

std::optional<TermPtr> rewrite_once(const TermPtr& t, const SelfApplicationRule& rule) {
  if (t->is_atom()) return std::nullopt;
  if (t->fn()->is_atom() && t->fn()->name() == rule.self) {
    const TermPtr& x = t->arg();
    return Term::apply(Term::atom(rule.wrap), Term::apply(x, x));
  }
  if (auto f = rewrite_once(t->fn(), rule)) return Term::apply(*f, t->arg());
  if (auto a = rewrite_once(t->arg(), rule)) return Term::apply(t->fn(), *a);
  return std::nullopt;
}

TermPtr lambda_unfold(const SelfApplicationRule& rule, unsigned n) {
  TermPtr t = Term::apply(Term::atom(rule.self), Term::atom(rule.self));
  for (unsigned k = 0; k < n; ++k) {
    auto next = rewrite_once(t, rule);
    if (!next) break;
    t = *next;
  }
  return t;
}

}  // namespace symbio::rewrite
