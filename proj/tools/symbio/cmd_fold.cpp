#include <sstream>

#include "report.hpp"
#include "symbio/folding.hpp"
#include "symbio/rewriting.hpp"

namespace symbio::cli {

namespace {

using namespace symbio::fold;

bool is_paren_word(const std::string& s) {
  return !s.empty() && s.find_first_not_of("<>") == std::string::npos;
}

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

}  // namespace

void register_fold(CLI::App& app, Options& opts, RunReport& report) {
  (void)opts;
  // ---- fold ----
  auto* fo = app.add_subcommand("fold", "Bra/ket folding chains");
  fo->require_subcommand(1);

  auto* cls = fo->add_subcommand("classify", "Secondary or tertiary folding");
  static std::string cls_chain;
  static bool cls_render = false;
  cls->add_option("chain", cls_chain, "Abbreviated (abab) or bra/ket (<a|<b||a>|b>) chain")->required();
  cls->add_flag("--render", cls_render, "Draw the chain as an arc diagram");
  cls->callback([&] {
    report.command = "fold classify";
    const Chain c = parse_chain(cls_chain);
    const ParenWord p = project_p(c);
    const bool legal = is_legal(p);
    const Fold f = classify(c);
    report.input = {{"chain", c.to_abbrev()}, {"braket", c.to_braket()}};
    Json result{{"classification", to_string(f)},
                {"P", p.text()},
                {"legal", legal},
                {"noncrossing", chords_noncrossing(c)},
                {"arcs", render_arcs(c)}};
    report.trace.push_back("P(C) = " + p.text() + (legal ? " (legal)" : " (not legal)"));
    if (legal) {
      const Chain q = relabel_q(p);
      result["Q"] = q.to_abbrev();
      result["isomorphic"] = is_isomorphic(c, q);
      report.trace.push_back("Q(P(C)) = " + q.to_abbrev() + (is_isomorphic(c, q) ? " ~ C" : " not ~ C"));
    }
    report.result = result;
    std::string text = join(report.trace);
    if (cls_render) text += render_arcs(c);
    text += f == Fold::Secondary ? "Secondary" : "Tertiary (pseudoknot)";
    report.text = text;
  });

  auto* pair = fo->add_subcommand("pairing", "Canonical pairing of a parenthesis word or chain");
  static std::string pair_input;
  pair->add_option("input", pair_input, "Word over < > or a chain")->required();
  pair->callback([&] {
    report.command = "fold pairing";
    const ParenWord p = is_paren_word(pair_input) ? ParenWord(pair_input) : project_p(parse_chain(pair_input));
    report.input = {{"word", p.text()}};
    if (!is_legal(p)) {
      report.result = {{"legal", false}};
      report.text = p.text() + " is not a legal parenthesis structure";
      report.ok = false;
      return;
    }
    const auto pairs = canonical_pairing(p);
    const Chain q = relabel_q(p);
    Json list = Json::array();
    std::ostringstream text;
    text << p.text() << "\n";
    for (auto [a, b] : pairs) {
      list.push_back({a, b});
      text << "(" << a << "," << b << ") ";
    }
    text << "\nQ = " << q.to_abbrev() << "\n" << render_arcs(q);
    report.result = {{"legal", true}, {"pairs", list}, {"Q", q.to_abbrev()}, {"Q_braket", q.to_braket()}};
    report.text = text.str();
  });

  auto* kc = fo->add_subcommand("knotcheck", "Look for a K7 retraction of the closed contact graph");
  static std::string kc_chain;
  kc->add_option("chain", kc_chain, "Chain whose ends are joined into a cycle")->required();
  kc->callback([&] {
    report.command = "fold knotcheck";
    const Chain c = parse_chain(kc_chain);
    const ContactGraph g = build_contact_graph(c, true);
    report.input = {{"chain", c.to_abbrev()}, {"vertices", g.vertices}, {"edges", g.edges.size()}};
    const auto k = find_k7_retraction(g);
    if (!k) {
      report.result = {{"found", false}};
      report.text = "no partition into 7 arcs contracts to K7";
      report.ok = false;
      return;
    }
    Json arcs = Json::array();
    std::ostringstream text;
    text << "7 arcs contract to K7 (" << k->contracted_vertices << " vertices, " << k->contracted_edges << " edges)\n";
    for (std::size_t i = 0; i < k->arcs.size(); ++i) {
      arcs.push_back({{"start", k->arcs[i].start}, {"length", k->arcs[i].length}, {"letters", k->arc_letters[i]}});
      text << "  arc " << i + 1 << ": " << k->arc_letters[i] << "\n";
    }
    report.result = {{"found", true},
                     {"arcs", arcs},
                     {"contracted_vertices", k->contracted_vertices},
                     {"contracted_edges", k->contracted_edges}};
    report.text = text.str();
  });

  // ---- rewrite ----
  using namespace symbio::rewrite;
  auto* rw = app.add_subcommand("rewrite", "DNA, builder and self-application rewriting");
  rw->require_subcommand(1);

  auto* dna = rw->add_subcommand("dna", "Replicate duplexes <W|C>");
  static std::string dna_strand = "<W|C>";
  static unsigned dna_generations = 1;
  static bool dna_dual = false;
  dna->add_option("--strand", dna_strand, "Starting strand");
  dna->add_option("--generations", dna_generations, "Generations to run")->check(CLI::Range(0u, 20u));
  dna->add_flag("--dual", dna_dual, "Count dual pairs instead of rewriting strands");
  dna->callback([&] {
    report.command = "rewrite dna";
    report.input = {{"generations", dna_generations}};
    if (dna_dual) {
      const DualPairTrace t = dual_pair_replicate(dna_generations);
      report.input["dual"] = true;
      report.result = {{"pairs", t.pairs}};
      report.trace = t.lines;
      report.text = join(t.lines) + std::to_string(t.pairs) + " pairs";
      return;
    }
    const Strand s = parse_strand(dna_strand);
    report.input["strand"] = render(s);
    const ReplicationTrace t = dna_replicate(s, dna_generations);
    report.trace = t.lines();
    report.result = {{"result", render(t.result)}, {"duplexes", count_duplexes(t.result)}};
    report.text = join(report.trace) + std::to_string(count_duplexes(t.result)) + " duplexes";
  });

  auto* bld = rw->add_subcommand("builder", "Machines that build from descriptions");
  static std::string bld_soup = "B,b";
  static unsigned bld_steps = 3;
  static bool bld_consuming = false;
  bld->add_option("soup", bld_soup, "Entities separated by ';', e.g. 'B,b'");
  bld->add_option("--steps", bld_steps, "Rounds to run")->check(CLI::Range(0u, 20u));
  bld->add_flag("--consuming", bld_consuming, "A machine is used up by building");
  bld->callback([&] {
    report.command = "rewrite builder";
    BuilderSoup soup = parse_soup(bld_soup);
    report.input = {{"soup", soup.to_string()}, {"steps", bld_steps}, {"consuming", bld_consuming}};
    Json counts = Json::array();
    std::ostringstream text;
    auto record = [&](unsigned step) {
      const auto m = soup.count(EntityKind::Machine), d = soup.count(EntityKind::Description),
                 a = soup.count(EntityKind::Artifact);
      counts.push_back({{"step", step}, {"machines", m}, {"descriptions", d}, {"artifacts", a}});
      std::string line = std::to_string(step) + ": " + std::to_string(m) + " machines, " + std::to_string(a) + " artifacts";
      report.trace.push_back(line);
      text << line << "\n";
    };
    record(0);
    for (unsigned s = 1; s <= bld_steps; ++s) {
      soup = builder_step(soup, BuilderOptions{bld_consuming});
      record(s);
    }
    report.result = {{"counts", counts}, {"final", soup.to_string()}};
    if (soup.entities.size() <= 16) text << soup.to_string() << "\n";
    report.text = text.str();
  });

  auto* lam = rw->add_subcommand("lambda", "Unfold (a x) -> (b (x x)) from a a");
  static unsigned lam_n = 3;
  static std::string lam_self = "a", lam_wrap = "b";
  lam->add_option("--n", lam_n, "Unfolding steps")->check(CLI::Range(0u, 64u));
  lam->add_option("--self", lam_self, "Self-applying atom");
  lam->add_option("--wrap", lam_wrap, "Wrapper atom");
  lam->callback([&] {
    report.command = "rewrite lambda";
    const SelfApplicationRule rule{lam_self, lam_wrap};
    report.input = {{"n", lam_n}, {"self", lam_self}, {"wrap", lam_wrap}};
    for (unsigned k = 0; k <= lam_n; ++k) {
      const TermPtr t = lambda_unfold(rule, k);
      report.trace.push_back(std::to_string(k) + ": " + t->to_paper_string());
    }
    const TermPtr t = lambda_unfold(rule, lam_n);
    report.result = {{"term", t->to_string()}, {"compact", t->to_paper_string()}};
    report.text = join(report.trace);
  });
}

}  // namespace symbio::cli
