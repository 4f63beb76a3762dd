#include <fstream>
#include <sstream>

#include "report.hpp"
#include "symbio/boundary_algebra.hpp"
#include "symbio/bracket.hpp"
#include "symbio/temperley_lieb.hpp"

namespace symbio::cli {

namespace {

using namespace symbio::algebra;

Json element_json(const algebra::Element& e) {
  Json terms = Json::array();
  for (const auto& [key, coeff] : e.terms()) {
    const auto& [word, mono] = key;
    Json t{{"coeff", coeff}, {"scalar", mono.to_string()}, {"word", to_string(word)}};
    for (Extainer x : kExtainers)
      if (extainer_word(x) == word) t["name"] = std::string(1, extainer_name(x));
    terms.push_back(t);
  }
  return Json{{"text", e.to_string(true)}, {"terms", terms}};
}

RedexOrder parse_order(const std::string& s) {
  if (s == "scan") return RedexOrder::LeftToRightScan;
  if (s == "leftmost") return RedexOrder::LeftmostFirst;
  if (s == "rightmost") return RedexOrder::RightmostFirst;
  throw UsageError("unknown order '" + s + "'");
}

Json tl_report_json(const tl::Report& r) {
  Json checks = Json::array();
  for (const tl::Check& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return Json{{"title", r.title}, {"all_pass", r.all_pass()}, {"checks", checks}};
}

knots::Tangle load_diagram(const std::string& text) {
  if (auto named = knots::named_diagram(text)) return *named;
  return knots::parse_tangle(text);
}

}  // namespace

void register_algebra(CLI::App& app, Options& opts, RunReport& report) {
  // ---- algebra ----
  auto* alg = app.add_subcommand("algebra", "Container/extainer boundary algebra");
  alg->require_subcommand(1);

  auto* norm = alg->add_subcommand("normalize", "Extract containers from a bracket word");
  static std::string norm_word, norm_order = "scan";
  norm->add_option("word", norm_word, "Word over < > [ ]")->required();
  norm->add_option("--order", norm_order, "Redex order: scan, leftmost, rightmost");
  norm->callback([&] {
    const Word w = parse_word(norm_word);
    const Normalized n = normalize(w, parse_order(norm_order));
    const auto e = algebra::Element::term(n.residual, n.scalar);
    report.command = "algebra normalize";
    report.input = {{"word", to_string(w)}, {"order", norm_order}};
    report.result = {{"scalar", n.scalar.to_string()},
                     {"exponents", {{"<>", n.scalar.exps[0]}, {"[]", n.scalar.exps[1]}, {"[>", n.scalar.exps[2]}, {"<]", n.scalar.exps[3]}}},
                     {"residual", to_string(n.residual)},
                     {"text", e.to_string(true)}};
    report.text = to_string(w) + " = " + e.to_string(true);
  });

  auto* mul = alg->add_subcommand("mul", "Multiply bracket words left to right");
  static std::vector<std::string> mul_words;
  mul->add_option("words", mul_words, "Two or more words, or the names E F G H")->required()->expected(2, -1);
  mul->callback([&] {
    report.command = "algebra mul";
    algebra::Element acc;
    Json echo = Json::array();
    bool first = true;
    for (const std::string& text : mul_words) {
      Word w;
      if (text.size() == 1 && text[0] >= 'E' && text[0] <= 'H') {
        w = extainer_word(static_cast<Extainer>(text[0] - 'E'));
      } else {
        w = parse_word(text);
      }
      echo.push_back(to_string(w));
      const auto e = algebra::Element::from_word(w);
      acc = first ? e : multiply(acc, e);
      first = false;
    }
    report.input = {{"words", echo}};
    report.result = element_json(acc);
    report.text = acc.to_string(true);
  });

  auto* table = alg->add_subcommand("table", "Products of E, F, G, H");
  table->callback([&] {
    report.command = "algebra table";
    const Table t = full_table();
    Json entries = Json::array();
    std::ostringstream text;
    for (Extainer x : kExtainers)
      for (Extainer y : kExtainers) {
        const auto& e = t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
        const std::string lhs = std::string(1, extainer_name(x)) + extainer_name(y);
        const std::string word = to_string(extainer_word(x)) + to_string(extainer_word(y));
        Json entry{{"product", lhs}, {"word", word}, {"value", element_json(e)}};
        entries.push_back(entry);
        text << lhs << " = " << word << " = " << e.to_string(true) << "\n";
      }
    report.result = {{"entries", entries}};
    report.text = text.str();
  });

  // ---- tl ----
  auto* tlc = app.add_subcommand("tl", "Temperley-Lieb diagrams");
  tlc->require_subcommand(1);

  auto* basis = tlc->add_subcommand("basis", "List the planar matchings of TL_n");
  static int basis_n = 3;
  static bool basis_render = false;
  basis->add_option("n", basis_n, "Strand count (0..12)")->required();
  basis->add_flag("--render", basis_render, "Draw each matching");
  basis->callback([&] {
    report.command = "tl basis";
    report.input = {{"n", basis_n}};
    const auto all = tl::enumerate_basis(basis_n);
    Json list = Json::array();
    std::ostringstream text;
    text << "TL_" << basis_n << ": " << all.size() << " matchings\n";
    for (const auto& d : all) {
      list.push_back({{"pairs", d.pairs()}, {"text", d.to_string()}, {"ascii", tl::render_ascii(d)}});
      text << d.to_string() << "\n";
      if (basis_render) text << tl::render_ascii(d) << "\n";
    }
    report.result = {{"count", all.size()}, {"matchings", list}};
    report.text = text.str();
  });

  auto* verify = tlc->add_subcommand("verify", "Check the defining relations of TL_n");
  static int verify_n = 4;
  verify->add_option("n", verify_n, "Strand count (1..8)")->required();
  verify->callback([&] {
    if (verify_n < 1 || verify_n > 8) throw UsageError("tl verify takes 1 <= n <= 8");
    report.command = "tl verify";
    report.input = {{"n", verify_n}};
    const tl::Report r = tl::verify_relations(verify_n);
    report.result = tl_report_json(r);
    report.text = r.to_text();
    report.ok = r.all_pass();
  });

  auto* embed = tlc->add_subcommand("embed", "Map E, F, G, H into TL_3 and compare tables");
  embed->callback([&] {
    report.command = "tl embed";
    const tl::Report r = tl::boundary_embedding();
    report.result = tl_report_json(r);
    report.text = r.to_text();
    report.ok = r.all_pass();
  });

  // ---- bracket ----
  auto* br = app.add_subcommand("bracket", "Bracket polynomial of layered link diagrams");
  br->require_subcommand(1);

  auto* eval = br->add_subcommand("eval", "Evaluate a diagram by state sum and by TL threading");
  static std::string eval_text;
  static std::string eval_file;
  eval->add_option("diagram", eval_text, "Layers such as 'cup 1 0 / cap 1 2', or unknot, hopf, trefoil, kinked-unknot");
  eval->add_option("--file", eval_file, "Read the diagram from a file");
  eval->callback([&] {
    report.command = "bracket eval";
    std::string text = eval_text;
    if (!eval_file.empty()) {
      std::ifstream in(eval_file);
      if (!in) throw std::runtime_error("cannot open '" + eval_file + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    if (text.empty()) throw UsageError("bracket eval needs a diagram or --file");
    const knots::Tangle d = load_diagram(text);
    const LaurentPoly sum = knots::state_sum(d, opts.workers);
    const LaurentPoly threaded = knots::tl_threading(d);
    report.input = {{"diagram", d.to_string()}, {"crossings", d.crossings()}};
    report.ok = sum == threaded;
    const knots::BracketValue v = knots::evaluate_bracket(d, opts.workers);
    report.result = {{"state_sum", sum.to_string()},
                     {"tl_threading", threaded.to_string()},
                     {"agree", sum == threaded},
                     {"unnormalized", v.unnormalized.to_string()},
                     {"normalized", v.normalized.to_string()}};
    report.text = "diagram: " + d.to_string() + "\nstate sum:    " + sum.to_string() +
                  "\nTL threading: " + threaded.to_string() + "\nnormalized:   " + v.normalized.to_string();
  });

  auto* r2 = br->add_subcommand("verify-r2", "Expand a crossing followed by its inverse");
  static int r2_n = 2, r2_i = 1;
  r2->add_option("--n", r2_n, "Strand count");
  r2->add_option("--i", r2_i, "Crossing position");
  r2->callback([&] {
    report.command = "bracket verify-r2";
    report.input = {{"n", r2_n}, {"i", r2_i}};
    const knots::R2Check c = knots::verify_r2(r2_n, r2_i);
    report.result = {{"holds", c.holds},
                     {"u_coefficient_symbolic", c.u_coefficient_symbolic},
                     {"u_coefficient", c.u_coefficient.to_string()},
                     {"product", c.product.to_string("A")}};
    report.trace = {"cross+ = A 1 + A^-1 U", "cross- = A^-1 1 + A U",
                    "cross+ cross- = 1 + (" + c.u_coefficient_symbolic + ") U",
                    "d = -A^2 - A^-2  =>  U coefficient = " + (c.u_coefficient.is_zero() ? std::string("0") : c.u_coefficient.to_string())};
    std::string text;
    for (const auto& l : report.trace) text += l + "\n";
    text += c.holds ? "R2 holds" : "R2 fails";
    report.text = text;
    report.ok = c.holds;
  });
}

}  // namespace symbio::cli
