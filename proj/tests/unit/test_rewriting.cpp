#include <doctest.h>

#include "symbio/rewriting.hpp"

using namespace symbio::rewrite;

TEST_CASE("strand parsing and rendering round trip") {
  for (const char* text : {"<W|C>", "<W| |C>", "<W| E |C>", "<W| |C><W| |C>", "<W|C><W|C>"})
    CHECK(render(parse_strand(text)) == text);
  CHECK_THROWS_AS(parse_strand("<W|X>"), RewriteError);
  CHECK(count_duplexes(duplexes(3)) == 3);
  CHECK_THROWS_AS(count_duplexes(parse_strand("<W| |C>")), RewriteError);
}

TEST_CASE("one generation of replication") {
  const ReplicationTrace t = dna_replicate(parse_strand("<W|C>"), 1);
  REQUIRE(t.generations.size() == 1);
  const auto& st = t.generations[0].stages;
  REQUIRE(st.size() == 5);
  CHECK(render(st[2]) == "<W| E |C>");
  CHECK(count_duplexes(t.result) == 2);
  CHECK(t.lines().front() == "1: <W|C> -> <W| |C> -> <W| E |C> -> <W| |C><W| |C> -> <W|C><W|C>");
}

TEST_CASE("duplexes double each generation") {
  for (unsigned g = 0; g <= 8; ++g) CHECK(count_duplexes(dna_replicate(duplexes(1), g).result) == (1u << g));
  CHECK(count_duplexes(dna_replicate(duplexes(3), 2).result) == 12);
}

TEST_CASE("dual pairs") {
  CHECK(dual_pair_replicate(0).pairs == 1);
  CHECK(dual_pair_replicate(3).pairs == 8);
  CHECK(dual_pair_replicate(1).lines.front() == "1: OO* -> O O* -> OO* OO*");
  CHECK_THROWS_AS(dual_pair_replicate(kMaxDualGenerations + 1), RewriteError);
}

TEST_CASE("builder doubles machines") {
  BuilderSoup s = parse_soup("B,b");
  CHECK(s.count(EntityKind::Machine) == 1);
  for (unsigned n = 1; n <= 10; ++n) {
    s = builder_step(s);
    CHECK(s.count(EntityKind::Machine) == (std::size_t{1} << n));
    CHECK(s.count(EntityKind::Artifact) == 0);
  }
}

TEST_CASE("builder variants") {
  // a consuming machine is replaced by its copy
  BuilderSoup c = parse_soup("B,b");
  for (int n = 0; n < 5; ++n) c = builder_step(c, {true});
  CHECK(c.count(EntityKind::Machine) == 1);

  // a machine holding a foreign description builds an artifact every round
  BuilderSoup f = builder_step(parse_soup("B,x"));
  CHECK(f.count(EntityKind::Machine) == 1);
  CHECK(f.count(EntityKind::Artifact) == 1);
  CHECK(f.to_string() == "B,x ; X,x");

  // an idle machine picks up a loose description first
  BuilderSoup idle = builder_step(parse_soup("B ; b"));
  CHECK(idle.count(EntityKind::Machine) == 2);
  CHECK(idle.count(EntityKind::Description) == 0);

  BuilderSoup limited = parse_soup("B,b");
  limited.resources = 3;
  for (int n = 0; n < 6; ++n) limited = builder_step(limited);
  CHECK(limited.count(EntityKind::Machine) == 4);
  CHECK(*limited.resources == 0);
}

TEST_CASE("self application unfolds") {
  const SelfApplicationRule rule;
  CHECK(lambda_unfold(rule, 0)->to_paper_string() == "aa");
  CHECK(lambda_unfold(rule, 1)->to_paper_string() == "b(aa)");
  CHECK(lambda_unfold(rule, 3)->to_paper_string() == "b(b(b(aa)))");
  CHECK(lambda_unfold(rule, 3)->to_string() == "(b (b (b (a a))))");
  const SelfApplicationRule russell{"R", "Not"};
  CHECK(lambda_unfold(russell, 2)->to_paper_string() == "\xC2\xAC(\xC2\xAC(RR))");
  const TermPtr stuck = Term::apply(Term::atom("b"), Term::atom("c"));
  CHECK_FALSE(rewrite_once(stuck, rule));
  CHECK(equal(lambda_unfold(rule, 2), *rewrite_once(lambda_unfold(rule, 1), rule)));
}
