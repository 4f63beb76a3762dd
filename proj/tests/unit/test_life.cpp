#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "symbio/gun.hpp"
#include "symbio/life.hpp"
#include "symbio/protocell.hpp"
#include "symbio/search.hpp"

using namespace symbio::life;

namespace {

CellSet from(std::initializer_list<Cell> cs) { return CellSet(std::vector<Cell>(cs)); }

CellSet gun() { return load_rle_file(std::string(SYMBIO_DATA_DIR) + "/gosper_gun.rle"); }

}  // namespace

TEST_CASE("sparse step agrees with a dense reference") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    // soup in the middle of a 16x16 field, dead border wide enough for 3 steps
    std::vector<Cell> cells;
    for (int y = 4; y < 12; ++y)
      for (int x = 4; x < 12; ++x)
        if (rng() % 3 == 0) cells.push_back({x, y});
    CellSet s(cells);
    auto g = oracle::dense_from(s, 16, 16);
    for (int k = 0; k < 3; ++k) {
      s = life_step(s);
      g = oracle::dense_step(g);
    }
    REQUIRE(oracle::dense_from(s, 16, 16) == g);
  }
}

TEST_CASE("still lifes and oscillators") {
  const CellSet block = from({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(life_step(block) == block);
  const auto b = detect_geometric_period(block, 10, false);
  REQUIRE(b);
  CHECK(b->period == 1);
  CHECK(b->motion.is_identity());

  const CellSet blinker = from({{0, 1}, {1, 1}, {2, 1}});
  const auto under_t = detect_geometric_period(blinker, 10, false, MotionGroup::Translations);
  REQUIRE(under_t);
  CHECK(under_t->period == 2);
  const auto under_f = detect_geometric_period(blinker, 10, false, MotionGroup::Full);
  REQUIRE(under_f);
  CHECK(under_f->period == 1);
  CHECK_FALSE(under_f->motion.is_translation());

  CHECK_FALSE(detect_geometric_period(CellSet{}, 10, false));
  CHECK_FALSE(detect_geometric_period(from({{0, 0}}), 10, false));
}

TEST_CASE("glider period depends on the motion group") {
  const CellSet g = glider();
  const auto t = detect_geometric_period(g, 10, false, MotionGroup::Translations);
  REQUIRE(t);
  CHECK(t->period == 4);
  CHECK(t->motion == RigidMotion::translation(1, 1));
  CHECK(t->exact());
  CHECK(life_run(g, 4) == g.translated(1, 1));

  const auto f = detect_geometric_period(g, 10, false, MotionGroup::Full);
  REQUIRE(f);
  CHECK(f->period == 2);
  CHECK_FALSE(f->motion.is_translation());
  CHECK(f->motion.apply(g) == life_run(g, 2));
}

TEST_CASE("rigid motions form a group") {
  for (const Linear& a : square_symmetries())
    for (const Linear& b : square_symmetries()) {
      const RigidMotion m{a, 3, -2}, n{b, -1, 5};
      for (Cell p : {Cell{0, 0}, Cell{4, -7}, Cell{-3, 2}}) {
        CHECK(m.compose(n).apply(p) == m.apply(n.apply(p)));
        CHECK(m.inverse().apply(m.apply(p)) == p);
      }
    }
  CHECK(RigidMotion::identity().to_string() == "identity");
  CHECK(RigidMotion::translation(1, 1).to_string() == "translate(1,1)");
  std::set<std::string> names;
  for (const Linear& a : square_symmetries()) names.insert(symmetry_name(a));
  CHECK(names.size() == 8);
}

TEST_CASE("embeddings with residue") {
  const CellSet g = glider();
  const CellSet y = g.translated(3, 0) | from({{20, 20}, {21, 20}, {20, 21}, {21, 21}});
  const auto exact = find_embeddings(g, y, false, MotionGroup::Translations);
  CHECK(exact.empty());
  const auto loose = find_embeddings(g, y, true, MotionGroup::Translations);
  REQUIRE(loose.size() == 1);
  CHECK(loose[0] == RigidMotion::translation(3, 0));
}

TEST_CASE("RLE round trip and errors") {
  const CellSet g = load_rle("x = 3, y = 3, rule = B3/S23\nbo$2bo$3o!\n");
  CHECK(g == glider());
  CHECK(load_rle(save_rle(g)) == g);
  CHECK(load_rle("#C comment\n3o!") == from({{0, 0}, {1, 0}, {2, 0}}));
  CHECK(load_rle("o2$o!") == from({{0, 0}, {0, 2}}));
  const CellSet gg = gun();
  CHECK(gg.size() == 36);
  CHECK(load_rle(save_rle(gg)) == gg);
  CHECK_THROWS_AS(load_rle("x = 2, y = 2, rule = B36/S23\no!"), RleError);
  try {
    load_rle("bo$\n2bq!");
    FAIL("expected an error");
  } catch (const RleError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(load_rle_file("/nonexistent/pattern.rle"), RleError);
  CHECK(render(from({{0, 0}, {1, 1}})) == "#.\n.#\n");
}

TEST_CASE("components") {
  const CellSet s = glider() | glider().translated(10, 0);
  const auto parts = components(s);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == glider());
}

TEST_CASE("gun emits a glider every 30 steps") {
  const GunEmission e = verify_gun(gun(), 4);
  CHECK(e.restored);
  CHECK(e.residue_is_glider);
  CHECK(e.gliders == 4);
  CHECK(e.ok());
  CHECK_FALSE(verify_gun(glider(), 1).ok());
}

TEST_CASE("find_glider recognises every phase") {
  CellSet g = glider();
  for (int k = 0; k < 4; ++k) {
    int phase = -1;
    CHECK(find_glider(g.translated(7, -2), &phase));
    CHECK(phase >= 0);
    g = life_step(g);
  }
  CHECK_FALSE(find_glider(from({{0, 0}, {1, 0}, {2, 0}})));
}

TEST_CASE("gun decomposition report is deterministic") {
  const GunReport a = verify_gun_decomposition(gun());
  const GunReport b = verify_gun_decomposition(gun());
  CHECK(to_text(a) == to_text(b));
  CHECK_FALSE(a.cuts.empty());
  for (const CutResult& c : a.cuts) CHECK(c.checks.size() == 4);
  CHECK_THROWS_AS(verify_gun_decomposition(glider()), GunError);
}

TEST_CASE("binomial and canonical seeds") {
  CHECK(binomial(24, 8) == 735471);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  const CellSet g = glider();
  for (const Linear& m : square_symmetries())
    CHECK(canonical_seed(RigidMotion{m, 5, 9}.apply(g)) == canonical_seed(g));
}

TEST_CASE("small exhaustive search finds the blinker and the glider") {
  SearchOptions o;
  o.width = 3;
  o.height = 3;
  o.live = 3;
  o.period = 1;
  o.padding = 4;
  const SearchReport r1 = search_period(o);
  CHECK(r1.stats.candidates == binomial(9, 3));
  bool blinker = false;
  for (const SearchHit& h : r1.hits) blinker |= h.seed == canonical_seed(from({{0, 0}, {1, 0}, {2, 0}}));
  CHECK(blinker);

  o.live = 5;
  o.period = 2;
  const SearchReport r2 = search_period(o);
  bool found = false;
  for (const SearchHit& h : r2.hits) {
    found |= h.seed == canonical_seed(glider());
    CHECK(h.report.period == 2);
    CHECK_FALSE(h.report.motion.is_identity());
  }
  CHECK(found);

  o.budget = 10;
  CHECK_THROWS_AS(search_period(o), SearchBudgetError);
}

namespace proto = symbio::proto;

TEST_CASE("protocell runs are reproducible and keep invariants") {
  const proto::Params p;
  proto::State a = proto::State::soup(20, 20, 1, 0.4, 5);
  proto::State b = proto::State::soup(20, 20, 1, 0.4, 5);
  CHECK(a == b);
  CHECK(a.count(proto::Content::Catalyst) == 1);
  CHECK(a.count(proto::Content::Substrate) == 160);
  for (int i = 0; i < 300; ++i) {
    proto::step(a, p);
    proto::step(b, p);
    REQUIRE(a.invariants_hold());
  }
  CHECK(a == b);
  CHECK(a.count(proto::Content::Substrate) == 160);

  const proto::Experiment e{20, 20, 1, 0.4, 100};
  const auto many = proto::run_many(e, p, 3, 4, 2);
  REQUIRE(many.size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(many[static_cast<std::size_t>(i)].seed == 3u + static_cast<unsigned>(i));
    CHECK(many[static_cast<std::size_t>(i)].mean_membranes == proto::run(e, p, 3 + static_cast<unsigned>(i)).mean_membranes);
  }
}

TEST_CASE("bond and decay extremes") {
  proto::Params none;
  none.p_bond = 0;
  proto::State s = proto::State::soup(12, 12, 2, 0.5, 1);
  for (int i = 0; i < 50; ++i) proto::step(s, none);
  CHECK(s.total_bonds() == 0);

  proto::Params all_decay;
  all_decay.p_decay = 1;
  all_decay.decay_damp = 1;
  proto::State t = proto::State::soup(12, 12, 0, 0.5, 1);
  for (int i = 0; i < 20; ++i) {
    proto::step(t, all_decay);
    CHECK(t.total_bonds() == 0);
  }

  proto::Params bad;
  bad.p_bond = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("membranes are closed rings around a catalyst") {
  proto::State s(10, 10, 0);
  s.place(5, 5, proto::Content::Catalyst);
  const std::vector<std::pair<int, int>> ring = {{4, 4}, {5, 4}, {6, 4}, {6, 5}, {6, 6}, {5, 6}, {4, 6}, {4, 5}};
  for (auto [x, y] : ring) s.place(x, y, proto::Content::Substrate);
  for (std::size_t i = 0; i + 1 < ring.size(); ++i)
    s.bond(ring[i].first, ring[i].second, ring[i + 1].first, ring[i + 1].second);
  CHECK(proto::count_membranes(s) == 0);  // still open
  s.bond(4, 5, 4, 4);
  CHECK(s.invariants_hold());
  CHECK(proto::count_membranes(s) == 1);

  proto::State empty_ring(10, 10, 0);
  for (auto [x, y] : ring) empty_ring.place(x, y, proto::Content::Substrate);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto& u = ring[i];
    const auto& v = ring[(i + 1) % ring.size()];
    empty_ring.bond(u.first, u.second, v.first, v.second);
  }
  CHECK(proto::count_membranes(empty_ring) == 0);

  CHECK_THROWS(s.bond(0, 0, 1, 0));
  CHECK_THROWS(s.bond(4, 4, 6, 6));
}
