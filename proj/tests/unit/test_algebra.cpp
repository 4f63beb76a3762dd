#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "symbio/boundary_algebra.hpp"
#include "symbio/laurent.hpp"

using namespace symbio;
using namespace symbio::algebra;

namespace {

Element word(const char* text) { return Element::from_word(parse_word(text)); }

Element named(char x) { return Element::from_word(extainer_word(static_cast<Extainer>(x - 'E'))); }

}  // namespace

TEST_CASE("laurent arithmetic") {
  const LaurentPoly A = LaurentPoly::var();
  const LaurentPoly Ainv = LaurentPoly::monomial(1, -1);
  CHECK((A * Ainv) == LaurentPoly(1));
  const LaurentPoly d = -(A * A) - Ainv * Ainv;
  CHECK(d.to_string() == "-A^2 - A^-2");
  CHECK((d * d).to_string() == "A^4 + 2 + A^-4");
  CHECK(d.pow(0) == LaurentPoly(1));
  CHECK(d.mirror() == d);
  CHECK(LaurentPoly::monomial(3, 5).mirror() == LaurentPoly::monomial(3, -5));
  CHECK((d - d).is_zero());
  CHECK(LaurentPoly().to_string() == "0");

  auto q = (d * (A + LaurentPoly(1))).divide_exact(d);
  REQUIRE(q);
  CHECK(*q == A + LaurentPoly(1));
  CHECK_FALSE((A + LaurentPoly(1)).divide_exact(d));
}

TEST_CASE("parse words") {
  CHECK(to_string(parse_word(" > < ")) == "><");
  CHECK(parse_word("").empty());
  try {
    parse_word(">< x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("normalize examples") {
  auto n = normalize(parse_word("><><"));
  CHECK(n.scalar == Monomial::of(Container::Angle));
  CHECK(to_string(n.residual) == "><");

  n = normalize(parse_word("<>"));
  CHECK(n.scalar == Monomial::of(Container::Angle));
  CHECK(n.residual.empty());

  n = normalize(parse_word("><]["));
  CHECK(n.scalar == Monomial::of(Container::AngleSquare));
  CHECK(to_string(n.residual) == ">[");

  n = normalize(parse_word("]<><"));
  CHECK(n.scalar.to_string() == "<>");
  CHECK(to_string(n.residual) == "]<");
}

TEST_CASE("normalize agrees with substring reduction and is order independent") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const std::string w = oracle::random_word(rng, 24);
    const Word parsed = parse_word(w);
    const Normalized a = normalize(parsed, RedexOrder::LeftToRightScan);
    const Normalized b = normalize(parsed, RedexOrder::LeftmostFirst);
    const Normalized c = normalize(parsed, RedexOrder::RightmostFirst);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(is_reduced(a.residual));
    const oracle::Reduced r = oracle::reduce_text(w);
    CHECK(to_string(a.residual) == r.residual);
    for (std::size_t k = 0; k < 4; ++k) CHECK(static_cast<int>(a.scalar.exps[k]) == r.counts[k]);
    // reduced shape: closers then openers
    bool seen_opener = false;
    for (Bracket s : a.residual) {
      if (is_opener(s)) seen_opener = true;
      else CHECK_FALSE(seen_opener);
    }
  }
}

TEST_CASE("the sixteen products") {
  // Written out from the closed multiplication table of E, F, G, H.
  const std::map<std::string, std::string> expected = {
      {"EE", "<> E"}, {"FF", "[] F"}, {"GG", "[> G"}, {"HH", "<] H"}, {"EF", "<] G"}, {"EG", "<> G"},
      {"EH", "<] E"}, {"FE", "[> H"}, {"FG", "[> F"}, {"FH", "[] H"}, {"GE", "[> E"}, {"GF", "[] G"},
      {"GH", "[] E"}, {"HE", "<> H"}, {"HF", "<] F"}, {"HG", "<> F"}};
  const Table t = full_table();
  for (const auto& [lhs, rhs] : expected) {
    const auto& e = t[static_cast<std::size_t>(lhs[0] - 'E')][static_cast<std::size_t>(lhs[1] - 'E')];
    CHECK_MESSAGE(e.to_string(true) == rhs, lhs);
    CHECK(e == multiply(named(lhs[0]), named(lhs[1])));
  }
  // EFE = <][> E
  const Element efe = multiply(multiply(named('E'), named('F')), named('E'));
  CHECK(efe == Element::term(extainer_word(Extainer::E),
                             Monomial::of(Container::AngleSquare) * Monomial::of(Container::SquareAngle)));
}

TEST_CASE("multiplication is associative and containers are central") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Element a = Element::from_word(parse_word(oracle::random_word(rng, 12)));
    const Element b = Element::from_word(parse_word(oracle::random_word(rng, 12)));
    const Element c = Element::from_word(parse_word(oracle::random_word(rng, 12)));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    const Element s = Element::scalar(Monomial::of(static_cast<Container>(rng() % 4)), 2);
    CHECK(multiply(multiply(s, a), b) == multiply(a, multiply(s, b)));
    CHECK(multiply(s, multiply(a, b)) == multiply(multiply(a, b), s));
  }
}

TEST_CASE("element sums and rendering") {
  Element e = word("><");
  e += word("<>");
  e += word("><");
  CHECK(e.to_string(true) == "<> + 2 E");
  CHECK(word("").to_string() == "1");
  CHECK(Element().to_string() == "0");
  CHECK_THROWS(Element::term(parse_word("<>"), Monomial{}));
  CHECK(Monomial::of(Container::Angle, 2).to_string() == "<>^2");
}
