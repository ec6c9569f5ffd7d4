// Acceptance suite: one line per criterion, nonzero exit if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "pgposet/homology.hpp"
#include "pgposet/pi1.hpp"
#include "pgposet/pposets.hpp"
#include "pgposet/verify.hpp"

using namespace pgposet;

namespace {

enum class Status { Pass, Fail, Skip };

struct Outcome {
  Status status = Status::Pass;
  std::string detail;
};

/// Collects failed conditions; the first few are reported.
struct Tally {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.status = failures.empty() ? Status::Pass : Status::Fail;
    o.detail = summary;
    for (std::size_t i = 0; i < failures.size() && i < 3; ++i) o.detail += "; " + failures[i];
    if (failures.size() > 3) o.detail += "; ... " + std::to_string(failures.size()) + " failures";
    for (const auto& n : notes) o.detail += "; " + n;
    return o;
  }
};

std::string pairName(const std::string& g, unsigned p) { return g + "/" + std::to_string(p); }

Subgroup cyclicS4(const GroupPtr& s4, std::initializer_list<std::initializer_list<int>> c) {
  return fixtures::cyclicOf(s4, Permutation::fromCycles(4, c));
}

Poset chainQuotient(const PContext& ctx, PosetKind k) {
  return chainOrbitPoset(buildPSubgroupPoset(ctx, k).gposet()).quotient.space;
}

Outcome sylowBase() {
  Tally t;
  auto s4 = builtinGroup("S4");
  Subgroup d = fixtures::dihedralInS4(s4);
  Subgroup p = sylow(s4, 2);
  t.expect(p.order() == 8, "Sylow order");
  t.expect(d.order() == 8 && !isAbelian(d) && pRank(d, 2) == 2, "D is dihedral of order 8");
  bool conj = false;
  for (ElementId g = 0; g < s4->order(); ++g) conj = conj || conjugate(d, g) == p;
  t.expect(conj, "Sylow conjugate to D");
  Subgroup h1 = cyclicS4(s4, {{1, 3}, {2, 4}}), h2 = cyclicS4(s4, {{1, 2}, {3, 4}});
  t.expect(center(d) == h1, "Z(D) = <(1 3)(2 4)>");
  t.expect(conjugate(h2, s4->idOf(Permutation::fromCycles(4, {{2, 3}}))) == h1, "H1, H2 conjugate by (2 3)");
  auto sp = buildPSubgroupPoset(s4, 2, PosetKind::Sp);
  auto xg = sp.gposet();
  Chain c1{*sp.find(h1), *sp.find(d)}, c2{*sp.find(h2), *sp.find(d)};
  bool sameOrbit = false;
  for (ElementId g = 0; g < s4->order(); ++g) sameOrbit = sameOrbit || actOnChain(xg, c1, g) == c2;
  t.expect(!sameOrbit, "(H1<D) and (H2<D) in distinct orbits");
  return t.outcome("D8 Sylow, Z(D), distinct chain orbits");
}

Outcome propertyMachinery() {
  Tally t;
  auto xg = buildPSubgroupPoset(builtinGroup("S4"), 2, PosetKind::Sp).gposet();
  t.expect(propertyA(xg).holds, "propertyA");
  t.expect(!propertyB(xg).holds, "propertyB should fail");
  t.expect(!alphaMap(xg).injective, "alpha injective on S2(S4)");
  t.expect(alphaMap(subdivideG(xg)).isomorphism, "alpha isomorphism on S2(S4)'");
  t.expect(subdivisionQuotientIso(xg, 2), "X''/G = (X'/G)'");
  return t.outcome("A holds, B fails, alpha behaves");
}

Outcome flipCircle() {
  Tally t;
  auto xg = fixtures::flipCircle();
  auto q = orbitPoset(xg);
  t.expect(q.space.size() == 2 && q.space.less(0, 1), "X/G is a 2-chain");
  auto k = quotientComplex(xg, q);
  t.expect(k == orderComplex(q.space), "K(X)/G = K(X/G)");
  t.expect(k.maximalFaces().size() == 1 && k.maximalFaces()[0].size() == 2, "single 1-simplex");
  t.expect(homology(k).acyclic(), "K(X)/G acyclic");
  auto x1 = chainOrbitPoset(xg).quotient.space;
  t.expect(homology(orderComplex(x1)).reducedBetti == std::vector<std::size_t>{0, 1}, "X'/G betti [0,1]");
  return t.outcome("X/G 2-chain, X'/G a circle");
}

Outcome brown() {
  Tally t;
  std::size_t n = 0;
  for (const auto& [name, p] : fixtures::catalogPairs()) {
    auto g = builtinGroup(name);
    long long chi = orderComplex(buildPSubgroupPoset(g, p, PosetKind::Sp).poset).eulerCharacteristic();
    long long m = static_cast<long long>(pPart(g->order(), p));
    t.expect(((chi - 1) % m + m) % m == 0, pairName(name, p) + " chi=" + std::to_string(chi));
    ++n;
  }
  return t.outcome(std::to_string(n) + " pairs");
}

Outcome quillen() {
  Tally t;
  std::size_t n = 0;
  for (const auto& [name, p] : fixtures::catalogPairs()) {
    PContext ctx(builtinGroup(name), p);
    auto ha = homology(orderComplex(buildPSubgroupPoset(ctx, PosetKind::Ap).poset));
    auto hs = homology(orderComplex(buildPSubgroupPoset(ctx, PosetKind::Sp).poset));
    t.expect(ha.sameGroups(hs), pairName(name, p));
    ++n;
  }
  return t.outcome(std::to_string(n) + " pairs");
}

Outcome stong() {
  Tally t;
  std::size_t contractible = 0, n = 0;
  for (const auto& [name, p] : fixtures::catalogPairs()) {
    auto g = builtinGroup(name);
    bool c = isContractible(buildPSubgroupPoset(g, p, PosetKind::Sp).poset);
    t.expect(c == !pCore(g, p).isTrivial(), pairName(name, p));
    contractible += c;
    ++n;
  }
  return t.outcome(std::to_string(n) + " pairs, " + std::to_string(contractible) + " contractible");
}

Outcome theorem41() {
  Tally t;
  std::size_t maps = 0;
  for (const auto& [name, p] : fixtures::catalogPairs()) {
    auto g = builtinGroup(name);
    PContext ctx(g, p);
    auto inst = apOrbitContraction(ctx);
    t.expect(inst.report.passes(), pairName(name, p) + " contraction");
    auto ps = oracle::pSubgroups(*g, p);
    oracle::Set pIds(ctx.sylow.members().begin(), ctx.sylow.members().end());
    for (const auto& a : ctx.subgroupsOfP) {
      if (!isElementaryAbelian(a, p) || !isFullyCentralized(a, ctx.sylow, p)) continue;
      Subgroup m = theorem41Map(a, ctx.sylow, p);
      oracle::Set mi(m.members().begin(), m.members().end()), ai(a.members().begin(), a.members().end());
      t.expect(mi == oracle::maximalElementaryMeet(*g, p, ai, pIds, ps), pairName(name, p) + " map " + a.label());
      ++maps;
    }
  }
  return t.outcome(std::to_string(maps) + " fully centralized subgroups checked");
}

Outcome webb() {
  Tally t;
  std::size_t unknown = 0, spaces = 0;
  for (const char* name : {"S4", "A5", "A6", "GL32"}) {
    PContext ctx(builtinGroup(name), 2);
    std::vector<std::pair<std::string, GPoset>> ks;
    for (auto k : {PosetKind::Sp, PosetKind::Ap, PosetKind::Bp}) {
      ks.emplace_back(std::string(toString(k)), subdivideG(buildPSubgroupPoset(ctx, k).gposet()));
    }
    ks.emplace_back("Rp", buildChainSubcomplexPoset(ctx, ChainKind::Rp).gposet);
    for (const auto& [label, xg] : ks) {
      auto q = orbitPoset(xg).space;
      auto k = orderComplex(q);
      std::string id = pairName(name, 2) + " " + label;
      t.expect(homology(k).acyclic(), id + " homology");
      auto s = pi1Status(k);
      t.expect(s != Pi1Status::Nontrivial, id + " pi1 nontrivial");
      if (s == Pi1Status::Unknown) {
        ++unknown;
        t.notes.push_back(id + " pi1 inconclusive");
      }
      ++spaces;
    }
  }
  return t.outcome(std::to_string(spaces) + " orbit spaces, " + std::to_string(unknown) + " pi1 inconclusive");
}

Outcome nonContractible() {
  Tally t;
  for (const char* name : {"A6", "GL32"}) {
    auto q = chainQuotient(PContext(builtinGroup(name), 2), PosetKind::Sp);
    auto c = coreIndices(q).size();
    t.expect(c > 1, std::string(name) + " core " + std::to_string(c));
    t.notes.push_back(std::string(name) + ": " + std::to_string(q.size()) + " points, core " + std::to_string(c));
  }
  return t.outcome("S2(G)'/G not contractible");
}

Outcome degree26Diagram() {
  if (!fixtures::haveGroupFile26()) return {Status::Skip, "group file " + fixtures::groupFile26() + " absent"};
  Tally t;
  auto g = loadGroupFile(fixtures::groupFile26());
  t.expect(g->order() == 31200, "order " + std::to_string(g->order()));
  auto q = chainQuotient(PContext(g, 2), PosetKind::Bp);
  t.expect(q.size() == 17, "size " + std::to_string(q.size()));
  std::vector<std::size_t> levels(3, 0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q.heightOf(i) < 3) ++levels[q.heightOf(i)];
  }
  t.expect(levels == std::vector<std::size_t>{5, 8, 4} && q.height() == 2, "levels 5/8/4");
  t.expect(findIsomorphism(q, fixtures::orbitDiagram26()).has_value(), "isomorphic to the drawn diagram");
  auto c = coreIndices(q).size();
  t.expect(c > 1, "core " + std::to_string(c));
  return t.outcome("B2(G)'/G: 17 points, core " + std::to_string(c));
}

Outcome xpSuite() {
  Tally t;
  auto w = builtinGroup("S3wrZ2");
  auto c = core(buildPSubgroupPoset(w, 2, PosetKind::Xp).poset);
  t.expect(c.size() == 9 && c.coverPairs().empty(), "X2 core is a 9-point antichain");
  auto h = homology(orderComplex(buildPSubgroupPoset(w, 2, PosetKind::Sp).poset));
  auto betti = h.reducedBetti;
  while (betti.size() > 2 && betti.back() == 0) betti.pop_back();
  t.expect(betti == std::vector<std::size_t>{0, 16}, "S2 betti [0,16]");
  for (const auto& [name, p] : fixtures::catalogPairs()) {
    PContext ctx(builtinGroup(name), p);
    t.expect(xpChainContraction(ctx).report.passes(), pairName(name, p) + " Xp'/G");
    t.expect(nChainContraction(ctx).report.passes(), pairName(name, p) + " N/G");
  }
  return t.outcome("discrete core, betti [0,16], conical contractions");
}

Outcome conditionalSweeps() {
  Tally t;
  std::size_t applied = 0;
  for (const auto& [name, p] : fixtures::catalogPairs()) {
    auto g = builtinGroup(name);
    PContext ctx(g, p);
    auto q = chainQuotient(ctx, PosetKind::Ap);
    bool contractible = isContractible(q);
    std::uint64_t rest = g->order() / pPart(g->order(), p);
    unsigned logP = *exactLog(ctx.sylow.order(), p);
    std::vector<std::pair<std::string, bool>> hyps{
        {"Omega1(P) abelian", isAbelian(omega1(ctx.sylow, p))},
        {"|G| = p^a q", rest > 1 && isPrime(rest)},
        {"rank gap <= 1", rankGap(ctx) <= 1},
        {"height 1", q.height() == 1},
        {"|P| <= p^4", logP <= 4},
    };
    for (const auto& [h, holds] : hyps) {
      if (!holds) continue;
      ++applied;
      t.expect(contractible, pairName(name, p) + " " + h);
    }
    if (isAbelian(ctx.sylow)) {
      std::set<Subgroup> isp, bp;
      for (const auto& s : buildPSubgroupPoset(ctx, PosetKind::iSp).subgroups) isp.insert(s);
      for (const auto& s : buildPSubgroupPoset(ctx, PosetKind::Bp).subgroups) bp.insert(s);
      t.expect(isp == bp, pairName(name, p) + " iSp = Bp");
    }
  }
  auto target = omegaComparableSubposet(PContext(builtinGroup("S4"), 2));
  auto r = strongDeformationRetract(target.quotient.quotient.space, target.keep);
  t.expect(r.answer == Answer::Yes, "A2(S4)'/G retract");
  return t.outcome(std::to_string(applied) + " hypothesis instances");
}

Outcome conjectureScan() {
  Tally t;
  std::vector<std::string> specs;
  for (const auto& name : builtinCatalog()) specs.push_back("builtin:" + name);
  auto s = runCatalog(specs, {"conjecture"});
  t.expect(s.violations() == 0, std::to_string(s.violations()) + " violations");
  t.expect(s.errors() == 0, std::to_string(s.errors()) + " errors");
  t.expect(s.inconclusive() == 0, std::to_string(s.inconclusive()) + " inconclusive");
  return t.outcome(std::to_string(s.entries.size()) + " entries, no counterexample");
}

struct Criterion {
  int id;
  const char* name;
  double limitSeconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Sylow and chain orbits in S4", 1, sylowBase},
      {2, "properties A and B, alpha", 10, propertyMachinery},
      {3, "flip circle", 1, flipCircle},
      {4, "Brown congruence", 300, brown},
      {5, "Quillen equivalence", 300, quillen},
      {6, "Stong criterion", 120, stong},
      {7, "conical contraction of Ap/G", 300, theorem41},
      {8, "Webb quotients", 600, webb},
      {9, "non-contractible Sp'/G", 600, nonContractible},
      {10, "degree-26 orbit space", 900, degree26Diagram},
      {11, "X_p suite", 600, xpSuite},
      {12, "conditional sweeps", 900, conditionalSweeps},
      {13, "conjecture scan", 1200, conjectureScan},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {Status::Fail, std::string("threw: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.status == Status::Pass && secs > c.limitSeconds) {
      o.status = Status::Fail;
      o.detail += "; over the time limit";
    }
    const char* tag = o.status == Status::Pass ? "PASS" : o.status == Status::Skip ? "SKIP" : "FAIL";
    std::printf("criterion %2d %s  %-32s %8.3fs  %s\n", c.id, tag, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
    failed += o.status == Status::Fail;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
