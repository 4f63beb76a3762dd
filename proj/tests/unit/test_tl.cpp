#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "symbio/temperley_lieb.hpp"

using namespace symbio;
using namespace symbio::tl;

TEST_CASE("basis matches brute-force non-crossing enumeration") {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 7; ++n) {
    const auto basis = enumerate_basis(n);
    CHECK(basis.size() == static_cast<std::size_t>(catalan[n]));
    std::set<std::set<std::pair<int, int>>> got;
    for (const auto& d : basis) {
      auto p = d.pairs();
      got.insert(std::set<std::pair<int, int>>(p.begin(), p.end()));
    }
    CHECK(got.size() == basis.size());
    CHECK(got == oracle::tl_noncrossing(n));
  }
  CHECK_THROWS(enumerate_basis(kMaxBasisStrands + 1));
}

TEST_CASE("matching validation") {
  CHECK_THROWS(PlanarMatching(2, {{1, 4}, {2, 3}, {1, 2}}));
  CHECK_THROWS(PlanarMatching(2, std::vector<std::pair<int, int>>{{1, 2}}));
  CHECK_NOTHROW(PlanarMatching(2, {{1, 3}, {2, 4}}));
  CHECK_THROWS(PlanarMatching(2, {{1, 4}, {2, 3}}));
}

TEST_CASE("composition counts loops") {
  const auto u1 = PlanarMatching::generator(2, 1);
  auto c = compose(u1, u1);
  CHECK(c.diagram == u1);
  CHECK(c.loops == 1);

  const auto a = PlanarMatching::generator(3, 1), b = PlanarMatching::generator(3, 2);
  auto ab = compose(a, b);
  auto aba = compose(ab.diagram, a);
  CHECK(aba.diagram == a);
  CHECK(ab.loops + aba.loops == 0);

  const auto id = PlanarMatching::identity(4);
  auto ii = compose(id, id);
  CHECK(ii.diagram == id);
  CHECK(ii.loops == 0);
  CHECK_THROWS(compose(id, a));
}

TEST_CASE("composition is associative on the TL_4 basis") {
  const auto basis = enumerate_basis(4);
  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        auto xy = compose(x, y);
        auto left = compose(xy.diagram, z);
        auto yz = compose(y, z);
        auto right = compose(x, yz.diagram);
        CHECK(left.diagram == right.diagram);
        CHECK(xy.loops + left.loops == yz.loops + right.loops);
      }
}

TEST_CASE("identity is neutral and flipping reverses composition") {
  for (const auto& d : enumerate_basis(5)) {
    CHECK(compose(PlanarMatching::identity(5), d).diagram == d);
    CHECK(compose(d, PlanarMatching::identity(5)).diagram == d);
    CHECK(d.flipped().flipped() == d);
  }
  const auto basis = enumerate_basis(3);
  for (const auto& x : basis)
    for (const auto& y : basis) {
      auto xy = compose(x, y);
      auto yx = compose(y.flipped(), x.flipped());
      CHECK(xy.diagram.flipped() == yx.diagram);
      CHECK(xy.loops == yx.loops);
    }
}

TEST_CASE("relations") {
  CHECK(verify_relations(1).all_pass());
  CHECK(verify_relations(1).checks.empty());
  CHECK(verify_relations(2).checks.size() == 1);
  for (int n = 2; n <= 8; ++n) CHECK(verify_relations(n).all_pass());
}

TEST_CASE("algebra elements") {
  const Element u = Element::generator(3, 1);
  const Element sq = u * u;
  CHECK(sq.coeff(PlanarMatching::generator(3, 1)) == LaurentPoly::var());
  const Element sum = u + Element::identity(3);
  CHECK((sum * sum).terms().size() == 2);
  CHECK((u * LaurentPoly()).terms().empty());
}

TEST_CASE("embedding of the extainer algebra") {
  const Report r = boundary_embedding();
  CHECK(r.checks.size() == 17);
  CHECK(r.all_pass());
  CHECK(extainer_image(algebra::Extainer::E) == Element::generator(3, 1));
  CHECK(extainer_image(algebra::Extainer::F) == Element::generator(3, 2));
  CHECK(extainer_image(algebra::Extainer::G) == Element::generator(3, 1) * Element::generator(3, 2));
  CHECK(extainer_image(algebra::Extainer::H) == Element::generator(3, 2) * Element::generator(3, 1));
}

TEST_CASE("ascii rendering") {
  CHECK(render_ascii(PlanarMatching::generator(2, 1)) == "|_|\n _\n| |\n");
  CHECK(render_ascii(PlanarMatching::identity(3)) == "| | |\n");
  CHECK(render_ascii(PlanarMatching(3, {{1, 2}, {3, 4}, {5, 6}})) == "|_| |\n+---+\n|  _\n| | |\n");
}
