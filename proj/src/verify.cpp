#include "pgposet/verify.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "pgposet/homology.hpp"
#include "pgposet/quotient.hpp"

namespace pgposet {

namespace {

using Clock = std::chrono::steady_clock;

std::string joinLabels(const Poset& x, const std::vector<std::size_t>& idx, std::size_t limit = 12) {
  std::string out;
  for (std::size_t i = 0; i < idx.size() && i < limit; ++i) {
    if (i) out += ", ";
    out += x.label(idx[i]);
  }
  if (idx.size() > limit) out += ", ...";
  return out;
}

std::string coreWitness(const Poset& x) {
  auto c = coreIndices(x);
  return "core has " + std::to_string(c.size()) + " points: " + joinLabels(x, c);
}

std::string joinViolations(const std::vector<std::string>& v, std::size_t limit = 5) {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) {
    if (i) out += "; ";
    out += v[i];
  }
  if (v.size() > limit) out += "; (" + std::to_string(v.size()) + " in total)";
  return out;
}

/// Lazily built objects shared by the checks of one task.
class Pipeline {
 public:
  Pipeline(const GroupPtr& g, unsigned p, const Budgets& b) : ctx(g, p), budgets(b) {}

  PContext ctx;
  Budgets budgets;

  const PSubgroupPoset& poset(PosetKind k) {
    auto it = posets_.find(k);
    if (it == posets_.end()) it = posets_.emplace(k, buildPSubgroupPoset(ctx, k)).first;
    return it->second;
  }

  /// X'/G for X one of the subgroup posets.
  const Poset& chainQuotient(PosetKind k) {
    auto it = quotients_.find(k);
    if (it == quotients_.end()) {
      auto co = chainOrbitPoset(poset(k).gposet(), budgets.chains);
      it = quotients_.emplace(k, std::move(co.quotient.space)).first;
    }
    return it->second;
  }

  /// X(R_p(G))/G.
  const Poset& rpQuotient() {
    if (!rp_) {
      auto rc = buildChainSubcomplexPoset(ctx, ChainKind::Rp);
      rp_ = orbitPoset(rc.gposet).space;
    }
    return *rp_;
  }

 private:
  std::map<PosetKind, PSubgroupPoset> posets_;
  std::map<PosetKind, Poset> quotients_;
  std::optional<Poset> rp_;
};

class Builder {
 public:
  Builder(VerificationReport& r) : r_(r) {}

  void add(std::string name, Verdict v, std::string witness = "", std::string budget = "") {
    if (v == Verdict::Fail && witness.empty()) witness = "no witness recorded";
    r_.checks.push_back({std::move(name), v, std::move(witness), std::move(budget)});
  }
  void pass(std::string name, std::string witness = "") {
    add(std::move(name), Verdict::Pass, std::move(witness));
  }
  void fail(std::string name, std::string witness) {
    add(std::move(name), Verdict::Fail, std::move(witness));
  }
  void verdict(std::string name, bool ok, std::string witness) {
    add(std::move(name), ok ? Verdict::Pass : Verdict::Fail, std::move(witness));
  }
  void notMet(std::string name, std::string why) {
    add(std::move(name), Verdict::HypothesisNotMet, std::move(why));
  }
  void observe(std::string key, std::string value) {
    r_.observations.emplace_back(std::move(key), std::move(value));
  }
  template <class F>
  void timed(const std::string& phase, F&& f) {
    auto t0 = Clock::now();
    f();
    r_.timings.emplace_back(phase, std::chrono::duration<double>(Clock::now() - t0).count());
  }

  void contractible(std::string name, const Poset& x) {
    auto c = coreIndices(x);
    if (c.size() == 1) {
      pass(std::move(name), "core is the point " + x.label(c[0]));
    } else {
      fail(std::move(name), coreWitness(x));
    }
  }
  void contractibleIf(std::string name, bool hypothesis, const std::string& hypText,
                      const std::function<const Poset&()>& x) {
    if (!hypothesis) {
      notMet(std::move(name), hypText + " fails");
      return;
    }
    contractible(std::move(name), x());
  }

 private:
  VerificationReport& r_;
};

std::string countOf(const Poset& x) {
  return std::to_string(x.size()) + " elements, core " + std::to_string(coreIndices(x).size());
}

// --- tasks -------------------------------------------------------------------

void taskWebb(Pipeline& pl, Builder& b) {
  struct Item {
    std::string name;
    std::function<const Poset&()> build;
  };
  std::vector<Item> items{
      {"K(Sp)", [&]() -> const Poset& { return pl.chainQuotient(PosetKind::Sp); }},
      {"K(Ap)", [&]() -> const Poset& { return pl.chainQuotient(PosetKind::Ap); }},
      {"K(Bp)", [&]() -> const Poset& { return pl.chainQuotient(PosetKind::Bp); }},
      {"Rp", [&]() -> const Poset& { return pl.rpQuotient(); }},
  };
  for (auto& item : items) {
    b.timed("webb " + item.name, [&] {
      const Poset& q = item.build();
      auto k = orderComplex(q, pl.budgets.chains);
      auto h = homology(k, pl.budgets.chains);
      b.verdict("homology X(" + item.name + ")/G", h.acyclic(), "reduced homology " + h.toString());
      const std::string pname = "pi1 X(" + item.name + ")/G";
      if (!k.isConnected()) {
        b.fail(pname, "orbit space is disconnected");
      } else {
        switch (pi1Status(k, pl.budgets.cosets)) {
          case Pi1Status::Trivial: b.pass(pname, "trivial"); break;
          case Pi1Status::Nontrivial: b.fail(pname, "edge-path group is nontrivial"); break;
          case Pi1Status::Unknown:
            b.add(pname, Verdict::Inconclusive, "coset enumeration did not close",
                  "cosets=" + std::to_string(pl.budgets.cosets));
            break;
        }
      }
      b.observe("X(" + item.name + ")/G", countOf(q));
    });
  }
  b.observe("Sp'/G contractible", isContractible(pl.chainQuotient(PosetKind::Sp)) ? "yes" : "no");
}

void taskConjecture(Pipeline& pl, Builder& b) {
  b.timed("conjecture", [&] {
    const Poset& q = pl.chainQuotient(PosetKind::Ap);
    b.contractible("Ap'/G contractible", q);
    b.observe("Ap'/G", countOf(q));
  });
}

void taskTheorem41(Pipeline& pl, Builder& b) {
  const auto& ctx = pl.ctx;
  b.timed("theorem41", [&] {
    auto inst = apOrbitContraction(ctx);
    b.verdict("conical contraction of Ap/G", inst.report.passes(),
              inst.report.passes() ? "apex " + inst.space.label(inst.apex)
                                   : joinViolations(inst.report.violations));
    std::string bad;
    std::size_t count = 0;
    for (const auto& a : ctx.subgroupsOfP) {
      if (!isElementaryAbelian(a, ctx.prime) || !isFullyCentralized(a, ctx.sylow, ctx.prime)) continue;
      ++count;
      Subgroup t = theorem41Map(a, ctx.sylow, ctx.prime);
      if (!isElementaryAbelian(t, ctx.prime) || !a.isSubgroupOf(t) || !ctx.omega.isSubgroupOf(t)) {
        bad = a.label() + " -> " + t.label();
        break;
      }
    }
    b.verdict("contraction map contains A and Omega", bad.empty(),
              bad.empty() ? std::to_string(count) + " fully centralized subgroups" : bad);
    b.observe("Ap/G", countOf(inst.space));
  });
}

void taskBrown(Pipeline& pl, Builder& b) {
  b.timed("brown", [&] {
    const auto& sp = pl.poset(PosetKind::Sp);
    long long chi = orderComplex(sp.poset, pl.budgets.chains).eulerCharacteristic(pl.budgets.chains);
    auto m = static_cast<long long>(pPart(pl.ctx.group->order(), pl.ctx.prime));
    long long r = ((chi - 1) % m + m) % m;
    b.verdict("chi(K(Sp)) = 1 mod |G|_p", r == 0,
              "chi = " + std::to_string(chi) + ", |G|_p = " + std::to_string(m));
    b.observe("chi", std::to_string(chi));
  });
}

void taskQuillen(Pipeline& pl, Builder& b) {
  b.timed("quillen", [&] {
    auto ha = homology(orderComplex(pl.poset(PosetKind::Ap).poset, pl.budgets.chains));
    auto hs = homology(orderComplex(pl.poset(PosetKind::Sp).poset, pl.budgets.chains));
    b.verdict("homology K(Ap) = K(Sp)", ha.sameGroups(hs),
              "Ap " + ha.toString() + ", Sp " + hs.toString());
  });
}

void taskStong(Pipeline& pl, Builder& b) {
  const auto& ctx = pl.ctx;
  b.timed("stong", [&] {
    Subgroup op = pCore(ctx.group, ctx.prime);
    const auto& sp = pl.poset(PosetKind::Sp);
    bool contractible = isContractible(sp.poset);
    bool nontrivial = !op.isTrivial();
    b.verdict("Sp contractible iff O_p(G) != 1", contractible == nontrivial,
              std::string("Sp ") + (contractible ? "contractible" : "not contractible") +
                  ", |O_p(G)| = " + std::to_string(op.order()));
    b.contractibleIf("O_p(G) != 1 gives Sp'/G contractible", nontrivial, "O_p(G) != 1",
                     [&]() -> const Poset& { return pl.chainQuotient(PosetKind::Sp); });
    b.contractibleIf("O_p(G) != 1 gives Bp'/G contractible", nontrivial, "O_p(G) != 1",
                     [&]() -> const Poset& { return pl.chainQuotient(PosetKind::Bp); });
    b.observe("O_p(G)", op.isTrivial() ? "1" : op.label());
    b.observe("Sp", countOf(sp.poset));
  });
}

void taskRankGap(Pipeline& pl, Builder& b) {
  const auto& ctx = pl.ctx;
  b.timed("rankgap", [&] {
    unsigned r = pRank(ctx.sylow, ctx.prime);
    int gap = rankGap(ctx);
    unsigned logP = *exactLog(ctx.sylow.order(), ctx.prime);
    const Poset& q = pl.chainQuotient(PosetKind::Ap);
    auto get = [&]() -> const Poset& { return q; };
    b.contractibleIf("rank gap <= 1", gap <= 1, "r_p(G) - r_p(Omega) <= 1", get);
    b.contractibleIf("height 1", q.height() == 1, "height of Ap'/G equal to 1", get);
    b.contractibleIf("rank gap <= 2 and r_p(G) >= log_p|P| - 1",
                     gap <= 2 && static_cast<int>(r) + 1 >= static_cast<int>(logP),
                     "r_p(G) - r_p(Omega) <= 2 and r_p(G) >= log_p|P| - 1", get);
    b.contractibleIf("|P| <= p^4", logP <= 4, "|P| <= p^4", get);
    b.observe("r_p(G)", std::to_string(r));
    b.observe("rank gap", std::to_string(gap));
    b.observe("log_p|P|", std::to_string(logP));
    b.observe("height of Ap'/G", std::to_string(q.height()));
  });
}

void taskPq(Pipeline& pl, Builder& b) {
  const auto& ctx = pl.ctx;
  b.timed("pq", [&] {
    std::uint64_t n = ctx.group->order();
    std::uint64_t rest = n / pPart(n, ctx.prime);
    bool hyp = isPrime(rest);
    const std::string text = "|G| = p^a q with q prime";
    for (auto k : {PosetKind::Ap, PosetKind::Sp, PosetKind::Bp}) {
      b.contractibleIf(std::string(toString(k)) + "'/G contractible", hyp, text,
                       [&, k]() -> const Poset& { return pl.chainQuotient(k); });
    }
    b.observe("|G|_p'", std::to_string(rest));
  });
}

std::vector<std::size_t> indicesIn(const PSubgroupPoset& big, const PSubgroupPoset& small) {
  std::vector<std::size_t> out;
  for (const auto& s : small.subgroups) out.push_back(*big.find(s));
  std::sort(out.begin(), out.end());
  return out;
}

void retractCheck(Builder& b, const std::string& name, const RetractSearch& rs, bool expected,
                  std::size_t budget, const std::string& what) {
  if (rs.answer == Answer::Unknown) {
    b.add(name, Verdict::Inconclusive, "retract search did not finish",
          "retract=" + std::to_string(budget));
    return;
  }
  bool yes = rs.answer == Answer::Yes;
  b.verdict(name, yes == expected,
            what + (yes ? " is a strong deformation retract" : " is not a strong deformation retract") +
                " (" + std::to_string(rs.nodes) + " search nodes)");
}

void taskSdr(Pipeline& pl, Builder& b) {
  const auto& ctx = pl.ctx;
  b.timed("sdr", [&] {
    bool omegaAbelian = isAbelian(omega1(ctx.sylow, ctx.prime));
    const auto& sp = pl.poset(PosetKind::Sp);
    const auto& ap = pl.poset(PosetKind::Ap);
    auto keep = indicesIn(sp, ap);
    auto rs = strongDeformationRetract(sp.poset, keep, pl.budgets.retract);
    retractCheck(b, "Ap in Sp retract iff Omega_1(P) abelian", rs, omegaAbelian, pl.budgets.retract,
                 "Ap");
    const std::string hyp = "Omega_1(P) abelian";
    b.contractibleIf("Omega_1(P) abelian gives Ap'/G contractible", omegaAbelian, hyp,
                     [&]() -> const Poset& { return pl.chainQuotient(PosetKind::Ap); });
    b.contractibleIf("Omega_1(P) abelian gives Sp'/G contractible", omegaAbelian, hyp,
                     [&]() -> const Poset& { return pl.chainQuotient(PosetKind::Sp); });

    bool sylowAbelian = isAbelian(ctx.sylow);
    if (sylowAbelian) {
      const auto& isp = pl.poset(PosetKind::iSp);
      const auto& bp = pl.poset(PosetKind::Bp);
      b.verdict("abelian Sylow gives iSp = Bp", isp.subgroups == bp.subgroups,
                "|iSp| = " + std::to_string(isp.subgroups.size()) +
                    ", |Bp| = " + std::to_string(bp.subgroups.size()));
    } else {
      b.notMet("abelian Sylow gives iSp = Bp", "Sylow abelian fails");
    }
    b.contractibleIf("abelian Sylow gives Bp'/G contractible", sylowAbelian, "Sylow abelian",
                     [&]() -> const Poset& { return pl.chainQuotient(PosetKind::Bp); });

    int gap = rankGap(ctx);
    if (gap <= 2) {
      auto t = omegaComparableSubposet(ctx);
      auto rt = strongDeformationRetract(t.quotient.quotient.space, t.keep, pl.budgets.retract);
      retractCheck(b, "rank gap <= 2 gives the subposet P as retract", rt, true, pl.budgets.retract,
                   "P (" + std::to_string(t.keep.size()) + " of " +
                       std::to_string(t.quotient.quotient.space.size()) + " orbits)");
    } else {
      b.notMet("rank gap <= 2 gives the subposet P as retract", "r_p(G) - r_p(Omega) <= 2 fails");
    }
    b.observe("Omega_1(P) abelian", omegaAbelian ? "yes" : "no");
    b.observe("Sylow abelian", sylowAbelian ? "yes" : "no");
  });
}

void taskAlperin(Pipeline& pl, Builder& b) {
  const auto& ctx = pl.ctx;
  const Group& grp = *ctx.group;
  b.timed("alperin", [&] {
    std::size_t certified = 0, exhausted = 0;
    std::string bad;
    for (const auto& a : ctx.subgroupsOfP) {
      std::set<std::vector<ElementId>> targets;
      for (ElementId g = 0; g < grp.order() && bad.empty(); ++g) {
        std::vector<ElementId> img;
        bool inside = true;
        for (auto x : a.generators()) {
          img.push_back(grp.conj(x, g));
          inside = inside && ctx.sylow.contains(img.back());
        }
        if (!inside || !targets.insert(img).second) continue;
        auto res = fusionDecompose(ctx, a, g, pl.budgets.fusion);
        if (res.exhausted) {
          ++exhausted;
        } else if (!res.found || !checkFusionCertificate(ctx.sylow, a, g, res.steps)) {
          bad = "A = " + a.label() + ", g = " + grp.element(g).cycleString();
        } else {
          ++certified;
        }
      }
    }
    if (!bad.empty()) {
      b.fail("fusion certificates", bad);
    } else if (exhausted) {
      b.add("fusion certificates", Verdict::Inconclusive,
            std::to_string(exhausted) + " searches hit the state budget",
            "fusion=" + std::to_string(pl.budgets.fusion));
    } else {
      b.pass("fusion certificates", std::to_string(certified) + " fusion maps certified");
    }
  });
}

void taskXp(Pipeline& pl, Builder& b) {
  const auto& ctx = pl.ctx;
  b.timed("xp", [&] {
    auto xi = xpChainContraction(ctx);
    b.verdict("conical contraction of Xp'/G", xi.report.passes(),
              xi.report.passes() ? "apex " + xi.space.label(xi.apex) : joinViolations(xi.report.violations));
    auto ni = nChainContraction(ctx);
    b.verdict("conical contraction of N/G", ni.report.passes(),
              ni.report.passes() ? "apex " + ni.space.label(ni.apex) : joinViolations(ni.report.violations));
    const auto& xp = pl.poset(PosetKind::Xp).poset;
    const auto& sp = pl.poset(PosetKind::Sp).poset;
    bool cx = isContractible(xp), cs = isContractible(sp);
    b.verdict("Xp contractible iff Sp contractible", cx == cs,
              std::string("Xp ") + (cx ? "contractible" : "not contractible") + ", Sp " +
                  (cs ? "contractible" : "not contractible"));
    bool xc = isConnected(xp);
    if (xc) {
      bool sc = isConnected(sp);
      b.verdict("Xp connected gives Sp connected", sc, sc ? "both connected" : "Sp disconnected");
      auto hx = homology(orderComplex(xp, pl.budgets.chains));
      auto hs = homology(orderComplex(sp, pl.budgets.chains));
      b.observe("Xp and Sp homology agree", hx.sameGroups(hs) ? "yes" : "no");
    } else {
      b.notMet("Xp connected gives Sp connected", "Xp connected fails");
    }
    b.observe("Xp", countOf(xp));
  });
}

using TaskFn = void (*)(Pipeline&, Builder&);

const std::vector<std::pair<std::string, TaskFn>>& taskTable() {
  static const std::vector<std::pair<std::string, TaskFn>> table{
      {"webb", taskWebb},       {"conjecture", taskConjecture}, {"theorem41", taskTheorem41},
      {"brown", taskBrown},     {"quillen", taskQuillen},       {"stong", taskStong},
      {"rankgap", taskRankGap}, {"pq", taskPq},                 {"sdr", taskSdr},
      {"alperin", taskAlperin}, {"xp", taskXp},
  };
  return table;
}

}  // namespace

std::string_view toString(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::HypothesisNotMet: return "hypothesis_not_met";
  }
  return "inconclusive";
}

nlohmann::ordered_json Budgets::toJson() const {
  return {{"chains", chains}, {"cosets", cosets}, {"retract", retract},
          {"fusion", fusion}, {"iso", iso}};
}

bool VerificationReport::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const Check& c) { return c.verdict == Verdict::Fail; });
}

bool VerificationReport::inconclusive() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.verdict == Verdict::Inconclusive; });
}

int VerificationReport::exitCode() const {
  if (failed()) return 1;
  if (inconclusive()) return 3;
  return 0;
}

nlohmann::ordered_json VerificationReport::toJson(bool withTimings) const {
  nlohmann::ordered_json j;
  j["task"] = task;
  j["group"] = group;
  j["group_spec"] = groupSpec;
  j["prime"] = prime;
  j["verdict"] = failed() ? "fail" : inconclusive() ? "inconclusive" : "pass";
  auto& cs = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e{{"name", c.name}, {"verdict", toString(c.verdict)}, {"witness", c.witness}};
    if (!c.budget.empty()) e["budget"] = c.budget;
    cs.push_back(std::move(e));
  }
  auto& obs = j["observations"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : observations) obs[k] = v;
  j["budgets"] = budgets.toJson();
  j["replay"] = "pgposet verify --task " + task + " --group " + groupSpec + " --prime " +
                std::to_string(prime);
  if (withTimings) {
    auto& t = j["timings"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : timings) t[k] = v;
  }
  return j;
}

const std::vector<std::string>& taskNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : taskTable()) n.push_back(name);
    return n;
  }();
  return names;
}

bool isTask(std::string_view task) {
  const auto& n = taskNames();
  return std::find(n.begin(), n.end(), task) != n.end();
}

VerificationReport runTask(std::string_view task, const GroupPtr& g, unsigned p,
                           const Budgets& budgets, const std::string& groupSpec) {
  TaskFn fn = nullptr;
  for (const auto& [name, f] : taskTable()) {
    if (name == task) fn = f;
  }
  if (!fn) throw Error(ErrorKind::InvalidInput, "unknown task " + std::string(task));
  if (!isPrime(p)) throw Error(ErrorKind::InvalidInput, std::to_string(p) + " is not prime");

  VerificationReport r;
  r.task = std::string(task);
  r.group = g->name();
  r.groupSpec = groupSpec.empty() ? "builtin:" + g->name() : groupSpec;
  r.prime = p;
  r.budgets = budgets;
  Builder b(r);
  std::optional<Pipeline> pl;
  b.timed("setup", [&] { pl.emplace(g, p, budgets); });
  fn(*pl, b);
  return r;
}

GroupPtr loadGroupSpec(std::string_view spec, std::size_t cap) {
  if (spec.starts_with("builtin:")) return builtinGroup(spec.substr(8), cap);
  if (spec.starts_with("file:")) return loadGroupFile(std::string(spec.substr(5)), cap);
  return builtinGroup(spec, cap);
}

std::vector<unsigned> primeDivisors(std::uint64_t n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

std::size_t CatalogSummary::violations() const {
  std::size_t n = 0;
  for (const auto& e : entries) {
    if (e.report && e.report->failed()) ++n;
  }
  return n;
}

std::size_t CatalogSummary::inconclusive() const {
  std::size_t n = 0;
  for (const auto& e : entries) {
    if ((e.report && !e.report->failed() && e.report->inconclusive()) || e.budgetError) ++n;
  }
  return n;
}

std::size_t CatalogSummary::errors() const {
  std::size_t n = 0;
  for (const auto& e : entries) {
    if (!e.error.empty() && !e.budgetError) ++n;
  }
  return n;
}

int CatalogSummary::exitCode() const {
  if (violations()) return 1;
  if (errors()) return 2;
  if (inconclusive()) return 3;
  return 0;
}

nlohmann::ordered_json CatalogSummary::toJson(bool withTimings) const {
  nlohmann::ordered_json j;
  j["entries"] = entries.size();
  j["violations"] = violations();
  j["inconclusive"] = inconclusive();
  j["errors"] = errors();
  auto& fails = j["failed_checks"] = nlohmann::ordered_json::array();
  auto& open = j["inconclusive_checks"] = nlohmann::ordered_json::array();
  auto& errs = j["entry_errors"] = nlohmann::ordered_json::array();
  auto& reports = j["reports"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    if (!e.error.empty()) {
      errs.push_back({{"group", e.group}, {"prime", e.prime}, {"task", e.task}, {"error", e.error}});
      continue;
    }
    for (const auto& c : e.report->checks) {
      nlohmann::ordered_json ref{{"group", e.group}, {"prime", e.prime}, {"task", e.task},
                                 {"check", c.name}, {"witness", c.witness}};
      if (c.verdict == Verdict::Fail) fails.push_back(ref);
      if (c.verdict == Verdict::Inconclusive) open.push_back(ref);
    }
    reports.push_back(e.report->toJson(withTimings));
  }
  return j;
}

CatalogSummary runCatalog(const std::vector<std::string>& specs, const std::vector<std::string>& tasks,
                          const Budgets& budgets) {
  CatalogSummary out;
  for (const auto& spec : specs) {
    GroupPtr g;
    try {
      g = loadGroupSpec(spec);
    } catch (const Error& e) {
      out.entries.push_back({spec, spec, 0, "", std::nullopt, e.what(), e.isBudget()});
      continue;
    }
    for (unsigned p : primeDivisors(g->order())) {
      for (const auto& task : tasks) {
        CatalogEntry entry{spec, g->name(), p, task, std::nullopt, "", false};
        try {
          entry.report = runTask(task, g, p, budgets, spec);
        } catch (const Error& e) {
          entry.error = e.what();
          entry.budgetError = e.isBudget();
        }
        out.entries.push_back(std::move(entry));
      }
    }
  }
  std::stable_sort(out.entries.begin(), out.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::tie(a.group, a.prime, a.task) < std::tie(b.group, b.prime, b.task);
  });
  return out;
}

std::vector<std::string> groupFilesIn(const std::string& dir) {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      out.push_back("file:" + entry.path().string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pgposet
