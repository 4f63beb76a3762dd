// Runs every acceptance criterion once and prints one line per criterion.
// Usage: acceptance [path-to-symbio-cli]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "symbio/boundary_algebra.hpp"
#include "symbio/bracket.hpp"
#include "symbio/folding.hpp"
#include "symbio/gun.hpp"
#include "symbio/life.hpp"
#include "symbio/protocell.hpp"
#include "symbio/quantum.hpp"
#include "symbio/rewriting.hpp"
#include "symbio/search.hpp"
#include "symbio/temperley_lieb.hpp"

using namespace symbio;

namespace {

struct Failure {
  std::string why;
};

void expect(bool cond, const std::string& why) {
  if (!cond) throw Failure{why};
}

std::string cli_path;

std::string run_cli(const std::string& args, int* status) {
  const std::string cmd = cli_path + " " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  expect(pipe != nullptr, "cannot start " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  *status = pclose(pipe.release());
  return out;
}

// ---------------------------------------------------------------------------

const std::map<std::string, std::string> kTable = {
    {"EE", "<> E"}, {"FF", "[] F"}, {"GG", "[> G"}, {"HH", "<] H"}, {"EF", "<] G"}, {"EG", "<> G"},
    {"EH", "<] E"}, {"FE", "[> H"}, {"FG", "[> F"}, {"FH", "[] H"}, {"GE", "[> E"}, {"GF", "[] G"},
    {"GH", "[] E"}, {"HE", "<> H"}, {"HF", "<] F"}, {"HG", "<> F"}};

double table_ms = 0;

void c1_table() {
  const auto t0 = std::chrono::steady_clock::now();
  const algebra::Table t = algebra::full_table();
  table_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  for (const auto& [lhs, rhs] : kTable) {
    const auto& e = t[static_cast<std::size_t>(lhs[0] - 'E')][static_cast<std::size_t>(lhs[1] - 'E')];
    expect(e.to_string(true) == rhs, lhs + " = " + e.to_string(true));
  }
  expect(table_ms < 1.0, "table took " + std::to_string(table_ms) + " ms");
  if (cli_path.empty()) return;
  int status = 0;
  const std::string out = run_cli("algebra table", &status);
  expect(status == 0, "algebra table exit status");
  std::istringstream in(out);
  std::string line;
  std::set<std::string> seen;
  while (std::getline(in, line)) {
    const std::string lhs = line.substr(0, 2);
    auto it = kTable.find(lhs);
    if (it == kTable.end()) continue;
    const std::string tail = " = " + it->second;
    expect(line.size() >= tail.size() && line.compare(line.size() - tail.size(), tail.size(), tail) == 0,
           "cli line: " + line);
    seen.insert(lhs);
  }
  expect(seen.size() == 16, "cli printed " + std::to_string(seen.size()) + " products");
}

void c2_confluence() {
  using namespace algebra;
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 1000; ++i) {
    const std::string text = oracle::random_word(rng, 20);
    const Word w = parse_word(text);
    const Normalized l = normalize(w, RedexOrder::LeftmostFirst);
    expect(l == normalize(w, RedexOrder::RightmostFirst), "orders disagree on " + text);
    expect(l == normalize(w, RedexOrder::LeftToRightScan), "scan disagrees on " + text);
    const oracle::Reduced r = oracle::reduce_text(text);
    expect(to_string(l.residual) == r.residual, "oracle residual differs on " + text);
  }
  for (int i = 0; i < 1000; ++i) {
    const Element a = Element::from_word(parse_word(oracle::random_word(rng, 20)));
    const Element b = Element::from_word(parse_word(oracle::random_word(rng, 20)));
    const Element c = Element::from_word(parse_word(oracle::random_word(rng, 20)));
    expect(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)), "associativity");
  }
}

void c3_tl_relations() {
  for (int n = 2; n <= 8; ++n) {
    const tl::Report r = tl::verify_relations(n);
    expect(r.all_pass(), "relations fail for n = " + std::to_string(n));
  }
  const std::size_t catalan[] = {1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 7; ++n) {
    const auto basis = tl::enumerate_basis(n);
    expect(basis.size() == catalan[n - 1], "basis size for n = " + std::to_string(n));
    std::set<std::set<std::pair<int, int>>> got;
    for (const auto& d : basis) {
      auto p = d.pairs();
      got.insert(std::set<std::pair<int, int>>(p.begin(), p.end()));
    }
    expect(got == oracle::tl_noncrossing(n), "basis differs from enumeration for n = " + std::to_string(n));
  }
}

void c4_embedding() {
  const tl::Report r = tl::boundary_embedding();
  expect(r.all_pass(), r.to_text());
  const tl::Element u1 = tl::Element::generator(3, 1), u2 = tl::Element::generator(3, 2);
  expect(u1 * u2 * u1 == u1, "U1 U2 U1 != U1");
  using namespace algebra;
  const Element e = Element::from_word(extainer_word(Extainer::E));
  const Element f = Element::from_word(extainer_word(Extainer::F));
  expect(tl::specialize(multiply(multiply(e, f), e)) == u1, "EFE does not map to U1");
  // each table entry specialised equals the product of the images
  const Table t = full_table();
  for (Extainer x : kExtainers)
    for (Extainer y : kExtainers)
      expect(tl::specialize(t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) ==
                 tl::extainer_image(x) * tl::extainer_image(y),
             std::string("entry ") + extainer_name(x) + extainer_name(y));
}

void c5_r2() {
  using knots::Sign;
  const LaurentPoly a = LaurentPoly::var(), ai = LaurentPoly::monomial(1, -1);
  const LaurentPoly d = knots::loop_value();
  // (A + A^-1 U)(A^-1 + A U) = 1 + (A^2 + A^-2) U + U^2 = 1 + (A^2 + A^-2 + d) U
  const LaurentPoly u_coeff = a * a + ai * ai + d;
  expect(u_coeff.is_zero(), "A^2 + A^-2 + d = " + u_coeff.to_string());
  const tl::Element prod = knots::expand_crossing(Sign::Positive) * knots::expand_crossing(Sign::Negative);
  expect(prod == tl::Element::identity(2, d), "product is " + prod.to_string());
  const knots::R2Check c = knots::verify_r2(2, 1);
  expect(c.holds && c.u_coefficient.is_zero(), "verify_r2");
  expect(c.u_coefficient_symbolic == "A^2 + A^-2 + d", "symbolic coefficient " + c.u_coefficient_symbolic);
}

void c6_bracket() {
  using namespace knots;
  const LaurentPoly a2 = LaurentPoly::monomial(1, 2), am2 = LaurentPoly::monomial(1, -2);
  const auto check = [](const std::string& name, const LaurentPoly& normalized) {
    const Tangle t = *named_diagram(name);
    const LaurentPoly s = state_sum(t), th = tl_threading(t);
    expect(s == th, name + ": state sum " + s.to_string() + " vs threading " + th.to_string());
    expect(evaluate_bracket(t).normalized == normalized, name + " = " + evaluate_bracket(t).normalized.to_string());
  };
  const Tangle unknot = *named_diagram("unknot");
  expect(state_sum(unknot) == -a2 - am2, "unknot unnormalized");
  expect(tl_threading(unknot) == -a2 - am2, "unknot unnormalized (threading)");
  check("unknot", LaurentPoly(1));
  check("hopf", -LaurentPoly::monomial(1, 4) - LaurentPoly::monomial(1, -4));
  check("trefoil", -LaurentPoly::monomial(1, 5) - LaurentPoly::monomial(1, -3) + LaurentPoly::monomial(1, -7));
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    const Tangle t = oracle::random_diagram(rng, 10);
    expect(t.crossings() <= 10, "random diagram too large");
    expect(state_sum(t) == tl_threading(t), "random diagram " + t.to_string());
  }
}

fold::Chain chain_from(const std::vector<std::pair<int, int>>& m) {
  std::vector<fold::Site> sites(m.size() * 2);
  std::vector<std::pair<int, int>> sorted = m;
  std::sort(sorted.begin(), sorted.end());
  char letter = 'a';
  for (auto [i, j] : sorted) {
    sites[static_cast<std::size_t>(i)] = {true, letter};
    sites[static_cast<std::size_t>(j)] = {false, letter};
    ++letter;
  }
  return fold::Chain(sites);
}

void c7_folding() {
  using namespace fold;
  const Chain sec = parse_chain("abccbddaee");
  expect(classify(sec) == Fold::Secondary, "abccbddaee not Secondary");
  expect(project_p(sec).text() == "<<<>><>><>", "P = " + project_p(sec).text());
  expect(classify(parse_chain("abab")) == Fold::Tertiary, "abab not Tertiary");
  const std::size_t counts[] = {1, 3, 15, 105, 945};
  for (int m = 1; m <= 5; ++m) {
    const auto all = oracle::all_matchings(2 * m);
    expect(all.size() == counts[m - 1], "pairing count for " + std::to_string(m));
    for (const auto& pairs : all) {
      const Chain c = chain_from(pairs);
      const bool secondary = classify(c) == Fold::Secondary;
      expect(secondary == !oracle::any_crossing(pairs), "classify disagrees on " + c.to_abbrev());
    }
  }
}

void c8_k7() {
  using namespace fold;
  const ContactGraph g = build_contact_graph(parse_chain("ABCDEFAGHIJKBGLMNOCHLPQRDIMPSTEJNQSUFKORTU"), true);
  const auto k = find_k7_retraction(g);
  expect(k.has_value(), "no retraction found");
  expect(k->arcs.size() == 7 && k->contracted_vertices == 7 && k->contracted_edges == 21, "not K7");
  // recontract independently
  std::vector<int> arc_of(static_cast<std::size_t>(g.vertices), -1);
  for (std::size_t i = 0; i < k->arcs.size(); ++i)
    for (int j = 0; j < k->arcs[i].length; ++j) {
      auto& slot = arc_of[static_cast<std::size_t>((k->arcs[i].start + j) % g.vertices)];
      expect(slot < 0, "arcs overlap");
      slot = static_cast<int>(i);
    }
  std::set<std::pair<int, int>> adj;
  for (const Edge& e : g.edges) {
    const int a = arc_of[static_cast<std::size_t>(e.u)], b = arc_of[static_cast<std::size_t>(e.v)];
    expect(a >= 0 && b >= 0, "arcs do not cover the cycle");
    if (a != b) adj.insert({std::min(a, b), std::max(a, b)});
  }
  expect(adj.size() == 21, "recontracted graph has " + std::to_string(adj.size()) + " edges");
}

void c9_rewriting() {
  using namespace rewrite;
  const ReplicationTrace one = dna_replicate(parse_strand("<W|C>"), 1);
  bool env = false;
  for (const Strand& s : one.generations.at(0).stages) env |= render(s) == "<W| E |C>";
  expect(env, "no <W| E |C> stage");
  expect(count_duplexes(one.result) == 2, "one generation");
  expect(count_duplexes(dna_replicate(parse_strand("<W|C>"), 3).result) == 8, "three generations");
  expect(lambda_unfold(SelfApplicationRule{}, 3)->to_paper_string() == "b(b(b(aa)))", "lambda unfold");
  BuilderSoup s = parse_soup("B,b");
  for (unsigned n = 1; n <= 10; ++n) {
    s = builder_step(s);
    expect(s.count(EntityKind::Machine) == (std::size_t{1} << n), "builder after " + std::to_string(n));
  }
}

void c10_quantum() {
  using namespace quantum;
  std::mt19937_64 rng(1000);
  for (int i = 0; i < 1000; ++i) {
    const int d = 1 + static_cast<int>(rng() % 16);
    const Ket a = random_ket(d, rng), b = random_ket(d, rng);
    const Operator p = outer(a, b);
    expect(approx_equal(p * p, p * inner(b, a)), "projector law, d = " + std::to_string(d));
    expect(approx_equal(completeness(columns(random_unitary(d, rng))), Operator::identity(d)),
           "completeness, d = " + std::to_string(d));
  }
  const double h = 1.0 / std::sqrt(2.0);
  const CloningDiscrepancy c = cloning_discrepancy(h, h);
  const double want[4] = {h - h * h, -h * h, -h * h, h - h * h};
  for (int i = 0; i < 4; ++i)
    expect(std::abs(c.delta.vec()(i) - Complex(want[i])) < 1e-12, "component " + std::to_string(i));
  expect(c.norm > 0.1, "norm " + std::to_string(c.norm));
  expect(cloning_discrepancy(0.0, 1.0).norm == 0.0 && cloning_discrepancy(1.0, 0.0).norm == 0.0,
         "basis states are cloned exactly");
}

life::CellSet gun_pattern() { return life::load_rle_file(std::string(SYMBIO_DATA_DIR) + "/gosper_gun.rle"); }

void c11_life() {
  using namespace life;
  const auto p = detect_geometric_period(glider(), 10, false, MotionGroup::Translations);
  expect(p && p->period == 4, "glider period");
  expect(std::abs(p->motion.dx) == 1 && std::abs(p->motion.dy) == 1, "not diagonal: " + p->motion.to_string());
  const CellSet g = gun_pattern();
  expect(g.size() == 36, "gun has " + std::to_string(g.size()) + " cells");
  const CellSet after = life_run(g, 30);
  expect(after.contains_all(g), "gun not restored");
  const CellSet rest = after - g;
  expect(rest.size() == 5 && rest.disjoint(g), "residue is not 5 disjoint cells");
  // the residue is a glider in some phase: it moves under its own steps
  const auto q = detect_geometric_period(rest, 4, false, MotionGroup::Translations);
  expect(q && q->period == 4 && !q->motion.is_identity(), "residue is not a glider");
}

// Dense re-simulation of one hit and an independent embedding scan.
bool reverify_hit(const life::CellSet& seed, unsigned period) {
  using namespace life;
  const int pad = static_cast<int>(period) + 2;
  const Box b = seed.bounds();
  const CellSet placed = seed.translated(pad - b.min_x, pad - b.min_y);
  const int w = b.width() + 2 * pad, h = b.height() + 2 * pad;
  auto grid = oracle::dense_from(placed, w, h);
  for (unsigned k = 0; k < period; ++k) grid = oracle::dense_step(grid);
  std::set<std::pair<int, int>> y;
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c)
      if (grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) y.insert({c, r});
  if (y.empty()) return false;
  for (const Linear& m : square_symmetries()) {
    std::vector<std::pair<int, int>> img;
    for (Cell c : placed.cells()) img.push_back({m.a * c.x + m.b * c.y, m.c * c.x + m.d * c.y});
    for (auto [ax, ay] : y) {
      const int dx = ax - img[0].first, dy = ay - img[0].second;
      const bool identity = m == Linear{1, 0, 0, 1} && dx == 0 && dy == 0;
      if (identity) continue;
      bool inside = true;
      for (auto [x, yy] : img)
        if (!y.count({x + dx, yy + dy})) {
          inside = false;
          break;
        }
      if (inside) return true;
    }
  }
  return false;
}

void c12_search() {
  life::SearchOptions o;
  o.workers = std::max(1u, std::thread::hardware_concurrency());
  const life::SearchReport r = life::search_period(o);
  expect(r.stats.candidates == 735471, "candidates " + std::to_string(r.stats.candidates));
  expect(!r.hits.empty(), "no configuration found");
  for (const life::SearchHit& h : r.hits)
    expect(reverify_hit(h.seed, 48), "hit fails re-verification:\n" + life::render(h.seed));
  std::cout << "    " << r.hits.size() << " configurations, " << r.stats.classes << " classes\n";
}

void c13_gun_decomposition() {
  const life::CellSet g = gun_pattern();
  const life::GunEmission e = life::verify_gun(g, 1);
  expect(e.restored && e.residue_is_glider, "period-30 precondition");
  const life::GunReport a = life::verify_gun_decomposition(g);
  const life::GunReport b = life::verify_gun_decomposition(g);
  expect(life::to_text(a) == life::to_text(b), "report differs between runs");
  expect(!a.cuts.empty(), "no cuts scanned");
  int prev = a.cuts.front().cut - 1;
  for (const life::CutResult& c : a.cuts) {
    expect(c.cut == prev + 1, "cut columns not contiguous");
    prev = c.cut;
    expect(c.checks.size() == 4, "cut without four checks");
  }
  std::cout << "    " << a.cuts.size() << " cuts scanned, " << a.passing_cuts().size() << " satisfy all four checks\n";
}

void c14_protocell() {
  proto::Params p;
  proto::Experiment with, without;
  with.catalysts = 1;
  without.catalysts = 0;
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  const auto a = proto::run_many(with, p, 1, 20, workers);
  const auto b = proto::run_many(without, p, 1, 20, workers);
  double ma = 0, mb = 0;
  for (const auto& r : a) ma += r.mean_membranes;
  for (const auto& r : b) mb += r.mean_membranes;
  ma /= 20;
  mb /= 20;
  std::cout << "    mean membranes: " << ma << " with one catalyst, " << mb << " without\n";
  expect(ma > mb, "no increase");
}

struct Criterion {
  int id;
  const char* name;
  double limit_ms;
  std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) cli_path = argv[1];
  const std::vector<Criterion> all = {
      {1, "multiplication table", 1000, c1_table},
      {2, "confluence and associativity", 1000, c2_confluence},
      {3, "TL relations and Catalan bases", 5000, c3_tl_relations},
      {4, "extainer embedding", 1000, c4_embedding},
      {5, "bracket R2", 1, c5_r2},
      {6, "bracket evaluator equivalence", 10000, c6_bracket},
      {7, "folding classification", 30000, c7_folding},
      {8, "K7 retraction", 60000, c8_k7},
      {9, "rewriting", 1000, c9_rewriting},
      {10, "quantum identities", 5000, c10_quantum},
      {11, "glider and gun", 1000, c11_life},
      {12, "period-48 search", 300000, c12_search},
      {13, "gun decomposition report", 30000, c13_gun_decomposition},
      {14, "protocell catalyst effect", 120000, c14_protocell},
  };
  int failed = 0;
  for (const Criterion& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      c.run();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && ms > c.limit_ms) why = "over time limit of " + std::to_string(c.limit_ms) + " ms";
    char line[160];
    std::snprintf(line, sizeof line, "[%s] %2d %s (%.1f ms)", why.empty() ? "PASS" : "FAIL", c.id, c.name, ms);
    std::cout << line << "\n";
    if (!why.empty()) {
      std::cout << "    " << why << "\n";
      ++failed;
    }
    std::cout.flush();
  }
  std::cout << (all.size() - static_cast<std::size_t>(failed)) << "/" << all.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
