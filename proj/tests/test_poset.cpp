#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pgposet/homology.hpp"
#include "pgposet/pi1.hpp"
#include "pgposet/pposets.hpp"

using namespace pgposet;

namespace {

std::vector<std::size_t> bettis(const Poset& x) { return homology(orderComplex(x)).reducedBetti; }

std::vector<Poset> corpus() {
  auto s4 = builtinGroup("S4");
  return {fixtures::circle(),
          fixtures::chain(3),
          fixtures::antichain(3),
          fixtures::cone(),
          fixtures::orbitDiagram26(),
          buildPSubgroupPoset(s4, 2, PosetKind::Sp).poset,
          buildPSubgroupPoset(s4, 2, PosetKind::Ap).poset,
          buildPSubgroupPoset(builtinGroup("S3wrZ2"), 2, PosetKind::Xp).poset,
          buildPSubgroupPoset(builtinGroup("A5"), 2, PosetKind::Sp).poset};
}

}  // namespace

TEST_SUITE("poset") {

TEST_CASE("order validation and covers") {
  auto c = fixtures::circle();
  CHECK(c.size() == 4);
  CHECK(c.coverPairs().size() == 4);
  CHECK(c.less(0, 2));
  CHECK_FALSE(c.less(2, 0));
  std::vector<Bits> above(2, Bits(2));
  above[0].set(1);
  above[1].set(0);
  CHECK_THROWS_AS(Poset({"x", "y"}, above), Error);
  std::vector<Bits> skip(3, Bits(3));
  skip[0].set(1);
  skip[1].set(2);
  try {
    Poset({"x", "y", "z"}, skip);
    CHECK(false);
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::OrderNotTransitive));
  }
  auto three = fixtures::chain(3);
  CHECK(three.coverPairs().size() == 2);
  CHECK(three.less(0, 2));
}

TEST_CASE("subdivisions") {
  auto two = subdivide(fixtures::chain(2));
  CHECK(two.size() == 3);
  std::size_t top = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (two.maximal().size() == 1 && two.maximal()[0] == i) top = i;
  }
  CHECK(two.maximal().size() == 1);
  CHECK(two.minimal().size() == 2);
  for (auto m : two.minimal()) CHECK(two.less(m, top));

  auto c8 = subdivide(fixtures::circle());
  CHECK(c8.size() == 8);
  CHECK(oracle::chainsBySubsets(fixtures::circle()).size() == 8);
  CHECK(c8.minimal().size() == 4);
  CHECK(c8.maximal().size() == 4);
  CHECK(coreIndices(c8).size() == 8);

  auto a = subdivide(fixtures::antichain(5));
  CHECK(a.size() == 5);
  CHECK(a.coverPairs().empty());
  CHECK_THROWS_AS(subdivide(buildPSubgroupPoset(builtinGroup("S4"), 2, PosetKind::Sp).poset, 10), Error);
}

TEST_CASE("order complexes and face posets") {
  auto k = orderComplex(fixtures::circle());
  auto f = k.fVector();
  REQUIRE(f.size() == 2);
  CHECK(f[0] == 4);
  CHECK(f[1] == 4);
  auto ka = orderComplex(fixtures::antichain(4));
  CHECK(ka.fVector() == std::vector<std::size_t>{4});
  CHECK(ka.maximalFaces().size() == 4);
  for (const auto& x : corpus()) {
    auto fp = facePoset(orderComplex(x));
    auto sd = subdivide(x);
    CHECK(fp.size() == sd.size());
    CHECK(isomorphic(fp, sd));
  }
  CHECK(facePoset(orderComplex(fixtures::chain(2))).size() == 3);
}

TEST_CASE("beat points and cores") {
  auto withMax = fixtures::cone();
  CHECK(core(withMax).size() == 1);
  CHECK(isContractible(withMax));
  auto c = fixtures::circle();
  auto bp = beatPoints(c);
  CHECK(bp.down.empty());
  CHECK(bp.up.empty());
  for (std::size_t v = 0; v < c.size(); ++v) CHECK_FALSE(oracle::isBeatPoint(c, v));
  CHECK_FALSE(isContractible(c));
  CHECK(core(fixtures::orbitDiagram26()).size() > 1);
  CHECK(isContractible(fixtures::chain(4)));
  CHECK(isContractible(buildPSubgroupPoset(builtinGroup("S4"), 2, PosetKind::Sp).poset));
}

TEST_CASE("homotopy equivalence") {
  auto s4 = builtinGroup("S4");
  auto a2 = buildPSubgroupPoset(s4, 2, PosetKind::Ap).poset;
  auto s2 = buildPSubgroupPoset(s4, 2, PosetKind::Sp).poset;
  CHECK(homotopyEquivalent(a2, a2));
  // Both cores are a single point (also found by a brute-force core search).
  CHECK(core(a2).size() == 1);
  CHECK(core(s2).size() == 1);
  CHECK(homotopyEquivalent(a2, s2));
  auto x2 = buildPSubgroupPoset(builtinGroup("S3wrZ2"), 2, PosetKind::Xp).poset;
  CHECK(homotopyEquivalent(x2, fixtures::antichain(9)));
  CHECK_FALSE(homotopyEquivalent(x2, fixtures::antichain(8)));
  CHECK_FALSE(homotopyEquivalent(fixtures::circle(), fixtures::chain(1)));
}

TEST_CASE("homology") {
  auto s = buildPSubgroupPoset(builtinGroup("S3wrZ2"), 2, PosetKind::Sp).poset;
  auto h = homology(orderComplex(s));
  REQUIRE(h.reducedBetti.size() >= 2);
  CHECK(h.reducedBetti[0] == 0);
  CHECK(h.reducedBetti[1] == 16);
  for (std::size_t i = 2; i < h.reducedBetti.size(); ++i) CHECK(h.reducedBetti[i] == 0);
  CHECK(bettis(fixtures::circle()) == std::vector<std::size_t>{0, 1});
  CHECK(homology(orderComplex(fixtures::cone())).acyclic());
  CHECK(bettis(fixtures::antichain(3)) == std::vector<std::size_t>{2});
}

TEST_CASE("torsion appears in the projective plane") {
  // Six-vertex triangulation of RP^2.
  std::vector<Face> faces{{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5},
                          {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}};
  SimplicialComplex rp2({"0", "1", "2", "3", "4", "5"}, faces);
  auto h = homology(rp2);
  CHECK(h.reducedBetti == std::vector<std::size_t>{0, 0, 0});
  REQUIRE(h.torsion.size() >= 2);
  REQUIRE(h.torsion[1].size() == 1);
  CHECK(h.torsion[1][0] == 2);
  CHECK(h.euler == 1);
  CHECK((pi1Status(rp2) == Pi1Status::Nontrivial));
}

TEST_CASE("smith invariants") {
  std::vector<std::vector<BigInt>> m{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto inv = smithInvariants(m);
  REQUIRE(inv.size() == 3);
  CHECK(inv[0] == 2);
  CHECK(inv[1] == 6);
  CHECK(inv[2] == 12);
}

TEST_CASE("fundamental group") {
  SimplicialComplex simplex({"0", "1", "2", "3"}, {{0, 1, 2, 3}});
  CHECK((pi1Status(simplex) == Pi1Status::Trivial));
  CHECK((pi1Status(orderComplex(fixtures::circle())) == Pi1Status::Nontrivial));
  CHECK_THROWS_AS(pi1Status(orderComplex(fixtures::antichain(2))), Error);
  auto a6 = buildPSubgroupPoset(builtinGroup("A6"), 2, PosetKind::Sp);
  auto q = chainOrbitPoset(a6.gposet()).quotient.space;
  CHECK((pi1Status(orderComplex(q)) == Pi1Status::Trivial));
  // Dunce-hat style relator a a a^-1: trivial group after simplification.
  Presentation p;
  p.generators = 1;
  p.relators = {{0, 0, 1}};
  CHECK(enumerateCosets(simplify(p)) == 1);
  Presentation z3;
  z3.generators = 1;
  z3.relators = {{0, 0, 0}};
  CHECK(enumerateCosets(z3) == 3);
  Presentation free2;
  free2.generators = 2;
  CHECK(enumerateCosets(free2, 50) == 0);
}

TEST_CASE("strong deformation retracts") {
  auto x = fixtures::cone();
  std::vector<std::size_t> all{0, 1, 2, 3, 4};
  CHECK((strongDeformationRetract(x, all).answer == Answer::Yes));
  std::vector<std::size_t> top{4};
  auto r = strongDeformationRetract(x, top);
  CHECK((r.answer == Answer::Yes));
  CHECK(r.removalOrder.size() == 4);
  auto s4 = builtinGroup("S4");
  auto sp = buildPSubgroupPoset(s4, 2, PosetKind::Sp);
  auto ap = buildPSubgroupPoset(s4, 2, PosetKind::Ap);
  std::vector<std::size_t> keep;
  for (const auto& a : ap.subgroups) keep.push_back(*sp.find(a));
  std::sort(keep.begin(), keep.end());
  CHECK((strongDeformationRetract(sp.poset, keep).answer == Answer::No));
  CHECK((strongDeformationRetract(sp.poset, keep, kDefaultRetractBudget, true).answer == Answer::No));
  CHECK((strongDeformationRetract(sp.poset, keep, 1, true).answer == Answer::Unknown));
  std::vector<std::size_t> circlePart{0, 1, 2, 3};
  CHECK((strongDeformationRetract(x, circlePart).answer == Answer::No));
}

TEST_CASE("corpus invariants") {
  auto posets = corpus();
  for (const auto& x : posets) {
    auto k = orderComplex(x);
    auto h = homology(k);
    CHECK(k.eulerCharacteristic() == h.euler);
    if (x.size() <= 20) CHECK(oracle::eulerBySubsets(x) == h.euler);
    bool torsionFree = std::all_of(h.torsion.begin(), h.torsion.end(), [](auto& t) { return t.empty(); });
    if (torsionFree) {
      long long alt = 1;
      for (std::size_t i = 0; i < h.reducedBetti.size(); ++i) {
        alt += (i % 2 ? -1 : 1) * static_cast<long long>(h.reducedBetti[i]);
      }
      CHECK(alt == h.euler);
    }
    auto sd = subdivide(x);
    CHECK(homology(orderComplex(sd)).sameGroups(h));
    CHECK(isContractible(x) == isContractible(sd));
    auto bp = beatPoints(core(x));
    CHECK(bp.down.empty());
    CHECK(bp.up.empty());
  }
  for (const auto& a : posets) {
    CHECK(homotopyEquivalent(a, a));
    for (const auto& b : posets) {
      bool ab = homotopyEquivalent(a, b);
      CHECK(ab == homotopyEquivalent(b, a));
      if (!ab) continue;
      for (const auto& c : posets) {
        if (homotopyEquivalent(b, c)) CHECK(homotopyEquivalent(a, c));
      }
    }
  }
}

TEST_CASE("exports") {
  auto x = fixtures::circle();
  auto j = nlohmann::json::parse(toJson(x));
  CHECK(j["labels"].size() == 4);
  CHECK(j["covers"].size() == 4);
  auto dot = toDot(x, "circle");
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("rank=same") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find("->", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 4);
}

}  // TEST_SUITE
