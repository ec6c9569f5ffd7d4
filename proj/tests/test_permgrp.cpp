#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pgposet/pposets.hpp"

using namespace pgposet;
using fixtures::cyclicOf;
using fixtures::dihedralInS4;

namespace {

oracle::Set ids(const Subgroup& s) { return {s.members().begin(), s.members().end()}; }

Permutation cyc(std::size_t n, std::initializer_list<std::initializer_list<int>> c) {
  return Permutation::fromCycles(n, c);
}

}  // namespace

TEST_SUITE("permgrp") {

TEST_CASE("generateGroup orders") {
  auto d = generateGroup({cyc(4, {{1, 3}}), cyc(4, {{1, 2, 3, 4}})});
  CHECK(d->order() == 8);
  auto trivial = generateGroup({}, 5);
  CHECK(trivial->order() == 1);
  CHECK(trivial->degree() == 5);
  CHECK_THROWS_AS(generateGroup({cyc(4, {{1, 2}}), cyc(5, {{1, 2}})}), Error);
  CHECK_THROWS_AS(builtinGroup("Sym(9)", 1000), Error);
  if (fixtures::haveGroupFile26()) {
    auto g = loadGroupFile(fixtures::groupFile26());
    CHECK(g->degree() == 26);
    CHECK(g->order() == 31200);
  }
}

TEST_CASE("composition applies the left factor first") {
  Permutation a = cyc(3, {{1, 2}}), b = cyc(3, {{2, 3}});
  Permutation ab = a * b;
  for (Point x = 0; x < 3; ++x) CHECK(ab(x) == b(a(x)));
  auto s3 = builtinGroup("S3");
  ElementId ia = s3->idOf(a), ib = s3->idOf(b);
  CHECK(s3->element(s3->mul(ia, ib)) == ab);
  CHECK(s3->element(s3->conj(ia, ib)) == b.inverse() * a * b);
  CHECK(s3->identity() == 0);
  CHECK(s3->element(0).isIdentity());
}

TEST_CASE("builtin groups") {
  CHECK(builtinGroup("Alt(6)")->order() == 360);
  CHECK(builtinGroup("GL(3,2)")->order() == 168);
  CHECK(builtinGroup("GL(3,2)")->degree() == 7);
  CHECK(builtinGroup("Wreath(Sym(3),Cyclic(2))")->order() == 72);
  CHECK(builtinGroup("Sym(5)")->order() == 120);
  CHECK(builtinGroup("Cyclic(4)")->order() == 4);
  CHECK(builtinGroup("Dihedral(8)")->order() == 8);
  CHECK_THROWS_AS(builtinGroup("Monster"), Error);
  try {
    builtinGroup("Foo(3)");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::UnknownSpec));
  }
}

TEST_CASE("group file round trip") {
  auto g = builtinGroup("GL32");
  std::string path = "pgposet_test_group.json";
  {
    std::ofstream out(path);
    out << groupFileJson(*g);
  }
  auto h = loadGroupFile(path);
  CHECK(h->order() == 168);
  CHECK(h->degree() == 7);
  std::remove(path.c_str());
  CHECK_THROWS_AS(loadGroupFile("no/such/file.json"), Error);
}

TEST_CASE("sylow subgroups") {
  auto s4 = builtinGroup("S4");
  Subgroup p = sylow(s4, 2);
  CHECK(p.order() == 8);
  CHECK_FALSE(isAbelian(p));
  Subgroup d = dihedralInS4(s4);
  bool conjugateToD = false;
  for (ElementId g = 0; g < s4->order(); ++g) conjugateToD = conjugateToD || conjugate(d, g) == p;
  CHECK(conjugateToD);
  CHECK(sylow(s4, 3).order() == 3);
  CHECK(sylow(builtinGroup("A6"), 2).order() == 8);
  CHECK(sylow(s4, 2) == sylow(builtinGroup("S4"), 2));
  try {
    sylow(s4, 5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::PrimeDoesNotDivide));
  }
}

TEST_CASE("centralizers against brute force") {
  auto s4 = builtinGroup("S4");
  Subgroup whole = Subgroup::whole(s4);
  Subgroup h1 = cyclicOf(s4, cyc(4, {{1, 3}, {2, 4}}));
  Subgroup c = centralizer(whole, h1);
  CHECK(c.order() == 8);
  CHECK(ids(c) == oracle::centralizer(*s4, oracle::whole(*s4), ids(h1)));
  CHECK(centralizer(whole, Subgroup::trivial(s4)) == whole);
  Subgroup d = dihedralInS4(s4);
  Subgroup h2 = cyclicOf(s4, cyc(4, {{1, 2}, {3, 4}}));
  Subgroup cd = centralizer(d, h2);
  CHECK(cd.order() == 4);
  CHECK(ids(cd) == oracle::centralizer(*s4, ids(d), ids(h2)));
}

TEST_CASE("normalizers against brute force") {
  auto s4 = builtinGroup("S4");
  Subgroup whole = Subgroup::whole(s4);
  Subgroup d = dihedralInS4(s4);
  CHECK(normalizer(whole, d) == d);
  CHECK(ids(normalizer(whole, d)) == oracle::normalizer(*s4, oracle::whole(*s4), ids(d)));
  CHECK(normalizer(whole, whole) == whole);
  Subgroup h1 = cyclicOf(s4, cyc(4, {{1, 3}, {2, 4}}));
  CHECK(normalizer(whole, h1) == d);
  CHECK(center(d) == h1);
}

TEST_CASE("conjugation") {
  auto s4 = builtinGroup("S4");
  Subgroup h2 = cyclicOf(s4, cyc(4, {{1, 2}, {3, 4}}));
  Subgroup h1 = cyclicOf(s4, cyc(4, {{1, 3}, {2, 4}}));
  CHECK(conjugate(h2, s4->idOf(cyc(4, {{2, 3}}))) == h1);
  CHECK(conjugate(h2, Group::identity()) == h2);
  Subgroup v = pCore(s4, 2);
  for (ElementId g = 0; g < s4->order(); ++g) {
    CHECK(conjugate(v, g) == v);
    CHECK(conjugate(h2, g).order() == 2);
  }
  CHECK(oracle::isNormal(*s4, ids(v), oracle::whole(*s4)));
}

TEST_CASE("omega1 examples") {
  auto c4 = builtinGroup("Cyclic(4)");
  Subgroup o = omega1(Subgroup::whole(c4), 2);
  CHECK(o.order() == 2);
  auto s4 = builtinGroup("S4");
  Subgroup d = dihedralInS4(s4);
  CHECK(omega1(d, 2) == d);
  auto q8 = fixtures::quaternion();
  CHECK(q8->order() == 8);
  Subgroup wq = Subgroup::whole(q8);
  Subgroup oq = omega1(wq, 2);
  CHECK(oq.order() == 2);
  CHECK(oq == center(wq));
  CHECK(ids(oq) == oracle::closureIds(*q8, {q8->idOf(q8->element(oq.members()[1]))}));
  CHECK(omega1(Subgroup::whole(builtinGroup("Cyclic(3)")), 2).isTrivial());
}

TEST_CASE("center and p-core") {
  auto s4 = builtinGroup("S4");
  CHECK(center(dihedralInS4(s4)) == cyclicOf(s4, cyc(4, {{1, 3}, {2, 4}})));
  Subgroup v = pCore(s4, 2);
  CHECK(v.order() == 4);
  auto ps = oracle::pSubgroups(*s4, 2);
  CHECK(ids(v) == oracle::pCore(*s4, 2, ps));
  auto c4 = builtinGroup("Cyclic(4)");
  CHECK(pCore(c4, 2) == Subgroup::whole(c4));
  Subgroup v4 = Subgroup::whole(generateGroup({cyc(4, {{1, 2}}), cyc(4, {{3, 4}})}));
  CHECK(pCore(v4, 2) == v4);
}

TEST_CASE("fully centralized subgroups") {
  auto s4 = builtinGroup("S4");
  Subgroup d = dihedralInS4(s4);
  CHECK(isFullyCentralized(center(d), d, 2));
  Subgroup h2 = cyclicOf(s4, cyc(4, {{1, 2}, {3, 4}}));
  CHECK_FALSE(isFullyCentralized(h2, d, 2));
  CHECK(oracle::centralizer(*s4, ids(d), ids(h2)).size() == 4);
  CHECK(oracle::pPart(oracle::centralizer(*s4, oracle::whole(*s4), ids(h2)).size(), 2) == 8);
  auto [rep, g] = fcRepresentative(h2, d, 2);
  CHECK(rep == cyclicOf(s4, cyc(4, {{1, 3}, {2, 4}})));
  CHECK(conjugate(h2, g) == rep);
  auto [again, e] = fcRepresentative(rep, d, 2);
  CHECK(again == rep);
  CHECK(e == Group::identity());
  Subgroup outside = cyclicOf(s4, cyc(4, {{1, 2}}));
  CHECK_THROWS_AS(fcRepresentative(outside, d, 2), Error);
}

TEST_CASE("equivariance of centralizers, normalizers and omega1 on the catalog") {
  for (const auto& [name, p] : fixtures::catalogPairs()) {
    CAPTURE(name);
    CAPTURE(p);
    auto g = builtinGroup(name);
    Subgroup whole = Subgroup::whole(g);
    PContext ctx(g, p);
    for (const auto& s : ctx.subgroupsOfP) {
      Subgroup c = centralizer(whole, s), n = normalizer(whole, s), o = omega1(s, p);
      CHECK(ids(c) == oracle::centralizer(*g, oracle::whole(*g), ids(s)));
      for (ElementId x : g->generatorIds()) {
        Subgroup sx = conjugate(s, x);
        CHECK(conjugate(c, x) == centralizer(whole, sx));
        CHECK(conjugate(n, x) == normalizer(whole, sx));
        CHECK(conjugate(o, x) == omega1(sx, p));
      }
    }
  }
}

TEST_CASE("sylow orders and conjugates on the catalog") {
  for (const auto& [name, p] : fixtures::catalogPairs()) {
    CAPTURE(name);
    auto g = builtinGroup(name);
    PContext ctx(g, p);
    CHECK(ctx.sylow.order() == pPart(g->order(), p));
    for (const auto& s : ctx.sylows) CHECK(s.order() == ctx.sylow.order());
    auto ps = oracle::pSubgroups(*g, p);
    CHECK(ctx.sylows.size() == oracle::sylows(*g, p, ps).size());
  }
}

TEST_CASE("fully centralized subgroups times Omega stay fully centralized") {
  for (const auto& [name, p] : fixtures::catalogPairs()) {
    CAPTURE(name);
    auto g = builtinGroup(name);
    PContext ctx(g, p);
    for (const auto& c : ctx.subgroupsOfP) {
      if (!isFullyCentralized(c, ctx.sylow, p)) continue;
      Subgroup co = join(c, ctx.omega);
      CHECK(co.isSubgroupOf(ctx.sylow));
      CHECK(isFullyCentralized(co, ctx.sylow, p));
      CHECK(centralizer(ctx.sylow, co) == centralizer(ctx.sylow, c));
    }
  }
}

TEST_CASE("fcRepresentative is idempotent") {
  for (const auto& [name, p] : fixtures::catalogPairs()) {
    auto g = builtinGroup(name);
    PContext ctx(g, p);
    for (const auto& q : ctx.subgroupsOfP) {
      auto [rep, x] = fcRepresentative(q, ctx.sylow, p);
      CHECK(isFullyCentralized(rep, ctx.sylow, p));
      auto [rep2, y] = fcRepresentative(rep, ctx.sylow, p);
      CHECK(rep2 == rep);
      CHECK(y == Group::identity());
    }
  }
}

}  // TEST_SUITE
