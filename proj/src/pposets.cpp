#include "pgposet/pposets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace pgposet {

std::string_view toString(PosetKind k) {
  switch (k) {
    case PosetKind::Sp: return "Sp";
    case PosetKind::Ap: return "Ap";
    case PosetKind::Bp: return "Bp";
    case PosetKind::Xp: return "Xp";
    case PosetKind::iSp: return "iSp";
  }
  return "?";
}

std::string_view toString(ChainKind k) { return k == ChainKind::Rp ? "Rp" : "N"; }

std::optional<PosetKind> parsePosetKind(std::string_view s) {
  for (auto k : {PosetKind::Sp, PosetKind::Ap, PosetKind::Bp, PosetKind::Xp, PosetKind::iSp}) {
    if (toString(k) == s) return k;
  }
  return std::nullopt;
}

std::optional<ChainKind> parseChainKind(std::string_view s) {
  if (s == "Rp") return ChainKind::Rp;
  if (s == "N") return ChainKind::N;
  return std::nullopt;
}

namespace {

/// All G-conjugates of q, found by conjugating with the generators.
std::vector<Subgroup> conjugacyClass(const Subgroup& q) {
  std::vector<Subgroup> out{q};
  std::unordered_set<Subgroup, SubgroupHash> seen{q};
  const auto gens = q.parent().generatorIds();
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (ElementId g : gens) {
      Subgroup c = conjugate(out[i], g);
      if (seen.insert(c).second) out.push_back(std::move(c));
    }
  }
  return out;
}

bool sortKey(const Subgroup& a, const Subgroup& b) { return a < b; }

Poset inclusionPoset(const std::vector<Subgroup>& subs) {
  const std::size_t n = subs.size();
  std::vector<Bits> above(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (subs[j].order() > subs[i].order() && subs[i].isSubgroupOf(subs[j])) above[i].set(j);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& s : subs) labels.push_back(s.label());
  return Poset(std::move(labels), std::move(above));
}

bool insideAll(const Subgroup& q, const Subgroup& p) { return q.isSubgroupOf(p); }

}  // namespace

PContext::PContext(GroupPtr g, unsigned p)
    : group(std::move(g)), prime(p), sylow(pgposet::sylow(group, p)), omega(Subgroup::trivial(group)) {
  sylows = conjugacyClass(sylow);
  std::sort(sylows.begin(), sylows.end(), sortKey);
  subgroupsOfP = subgroupsOfPGroup(sylow, prime);
  omega = omega1(center(sylow), prime);
}

std::vector<Subgroup> subgroupsOfPGroup(const Subgroup& p, unsigned prime) {
  const Group& g = p.parent();
  std::vector<Subgroup> out;
  std::unordered_set<Subgroup, SubgroupHash> seen;
  std::vector<Subgroup> level;
  for (ElementId x : p.members()) {
    if (g.elementOrder(x) != prime) continue;
    std::vector<ElementId> gen{x};
    Subgroup s = Subgroup::generatedBy(p.parentPtr(), gen);
    if (seen.insert(s).second) level.push_back(std::move(s));
  }
  while (!level.empty()) {
    std::sort(level.begin(), level.end(), sortKey);
    out.insert(out.end(), level.begin(), level.end());
    std::vector<Subgroup> next;
    for (const auto& s : level) {
      Subgroup n = normalizer(p, s);
      for (ElementId x : n.members()) {
        if (s.contains(x) || !s.contains(g.power(x, prime))) continue;
        std::vector<ElementId> gens(s.generators().begin(), s.generators().end());
        gens.push_back(x);
        Subgroup t = Subgroup::generatedBy(p.parentPtr(), gens);
        if (seen.insert(t).second) next.push_back(std::move(t));
      }
    }
    level = std::move(next);
  }
  return out;
}

bool hasKind(const PContext& ctx, const Subgroup& q, PosetKind kind) {
  if (q.isTrivial() || !isPGroup(q, ctx.prime)) return false;
  switch (kind) {
    case PosetKind::Sp:
      return true;
    case PosetKind::Ap:
      return isElementaryAbelian(q, ctx.prime);
    case PosetKind::Bp: {
      Subgroup n = normalizer(Subgroup::whole(ctx.group), q);
      return pCore(n, ctx.prime) == q;
    }
    case PosetKind::Xp:
      for (const auto& s : ctx.sylows) {
        if (insideAll(q, s) && !isNormalIn(q, s)) return false;
      }
      return true;
    case PosetKind::iSp: {
      std::vector<ElementId> meet;
      bool first = true;
      for (const auto& s : ctx.sylows) {
        if (!insideAll(q, s)) continue;
        if (first) {
          meet.assign(s.members().begin(), s.members().end());
          first = false;
        } else {
          std::vector<ElementId> kept;
          std::set_intersection(meet.begin(), meet.end(), s.members().begin(), s.members().end(),
                                std::back_inserter(kept));
          meet.swap(kept);
        }
      }
      return std::equal(meet.begin(), meet.end(), q.members().begin(), q.members().end());
    }
  }
  return false;
}

std::optional<std::uint32_t> PSubgroupPoset::find(const Subgroup& s) const {
  auto it = index.find(s);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

GPoset PSubgroupPoset::gposet() const {
  auto subs = std::make_shared<std::vector<Subgroup>>(subgroups);
  auto idx = std::make_shared<std::unordered_map<Subgroup, std::uint32_t, SubgroupHash>>(index);
  GPoset::Action act = [subs, idx](std::uint32_t x, ElementId g) {
    auto it = idx->find(conjugate((*subs)[x], g));
    if (it == idx->end()) throw Error(ErrorKind::ActionInvalid, "conjugate left the poset");
    return it->second;
  };
  Bits preferred(subgroups.size());
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (subgroups[i].isSubgroupOf(sylow)) preferred.set(i);
  }
  return GPoset(poset, group, std::move(act), std::move(preferred));
}

PSubgroupPoset buildPSubgroupPoset(const PContext& ctx, PosetKind kind) {
  PSubgroupPoset out;
  out.group = ctx.group;
  out.prime = ctx.prime;
  out.kind = kind;
  out.sylow = ctx.sylow;
  std::unordered_set<Subgroup, SubgroupHash> collected;
  for (const auto& q : ctx.subgroupsOfP) {
    if (collected.count(q) || !hasKind(ctx, q, kind)) continue;
    for (auto& c : conjugacyClass(q)) {
      collected.insert(c);
      if (collected.size() > kDensePosetLimit) {
        throw Error(ErrorKind::SizeExceeded, "too many p-subgroups for a dense poset");
      }
    }
  }
  out.subgroups.assign(collected.begin(), collected.end());
  std::sort(out.subgroups.begin(), out.subgroups.end(), sortKey);
  for (std::uint32_t i = 0; i < out.subgroups.size(); ++i) out.index.emplace(out.subgroups[i], i);
  out.poset = inclusionPoset(out.subgroups);
  return out;
}

PSubgroupPoset buildPSubgroupPoset(const GroupPtr& g, unsigned p, PosetKind kind) {
  return buildPSubgroupPoset(PContext(g, p), kind);
}

ChainSubcomplexPoset buildChainSubcomplexPoset(const PContext& ctx, ChainKind kind) {
  ChainSubcomplexPoset out;
  out.base = buildPSubgroupPoset(ctx, PosetKind::Sp);
  const auto& subs = out.base.subgroups;
  auto all = enumerateChains(out.base.poset);
  for (auto& c : all) {
    bool keep = true;
    if (kind == ChainKind::Rp) {
      const Subgroup& top = subs[c.back()];
      for (auto x : c) keep = keep && isNormalIn(subs[x], top);
    } else {
      keep = false;
      for (const auto& s : ctx.sylows) {
        bool ok = true;
        for (auto x : c) ok = ok && subs[x].isSubgroupOf(s) && isNormalIn(subs[x], s);
        if (ok) {
          keep = true;
          break;
        }
      }
    }
    if (keep) out.chains.push_back(std::move(c));
  }
  const std::size_t n = out.chains.size();
  if (n > kDensePosetLimit) throw Error(ErrorKind::SizeExceeded, "chain subposet too large");
  auto index = std::make_shared<std::unordered_map<Chain, std::uint32_t, ChainHash>>();
  for (std::uint32_t i = 0; i < n; ++i) index->emplace(out.chains[i], i);

  std::vector<Bits> above(n, Bits(n));
  Chain sub;
  for (std::size_t d = 0; d < n; ++d) {
    const Chain& chain = out.chains[d];
    const std::size_t k = chain.size();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
      sub.clear();
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1U) sub.push_back(chain[i]);
      }
      above[index->at(sub)].set(d);
    }
  }
  std::vector<std::string> labels;
  Bits preferred(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(chainLabel(out.base.poset, out.chains[i]));
    bool in = true;
    for (auto x : out.chains[i]) in = in && subs[x].isSubgroupOf(ctx.sylow);
    if (in) preferred.set(i);
  }
  auto chains = std::make_shared<std::vector<Chain>>(out.chains);
  auto baseG = std::make_shared<GPoset>(out.base.gposet());
  GPoset::Action act = [chains, index, baseG](std::uint32_t c, ElementId g) {
    auto it = index->find(actOnChain(*baseG, (*chains)[c], g));
    if (it == index->end()) throw Error(ErrorKind::ActionInvalid, "chain image left the subposet");
    return it->second;
  };
  out.gposet = GPoset(Poset(std::move(labels), std::move(above)), ctx.group, std::move(act),
                      std::move(preferred));
  return out;
}

unsigned pRank(const Subgroup& h, unsigned p) {
  if (h.order() % p != 0) return 0;
  Subgroup s = sylow(h, p);
  unsigned best = 0;
  for (const auto& q : subgroupsOfPGroup(s, p)) {
    if (isElementaryAbelian(q, p)) best = std::max(best, *exactLog(q.order(), p));
  }
  return best;
}

int rankGap(const PContext& ctx) {
  int rg = static_cast<int>(pRank(ctx.sylow, ctx.prime));
  int ro = static_cast<int>(*exactLog(ctx.omega.order(), ctx.prime));
  return rg - ro;
}

Subgroup theorem41Map(const Subgroup& a, const Subgroup& p, unsigned prime) {
  if (!a.isSubgroupOf(p)) throw Error(ErrorKind::NotInSylow, a.label() + " is not in " + p.label());
  if (a.isTrivial() || !isElementaryAbelian(a, prime)) {
    throw Error(ErrorKind::PreconditionViolated, a.label() + " is not elementary abelian");
  }
  if (!isFullyCentralized(a, p, prime)) {
    throw Error(ErrorKind::NotFullyCentralized, a.label() + " is not fully centralized");
  }
  return omega1(center(omega1(centralizer(p, a), prime)), prime);
}

ContractionReport verifyConicalContraction(const Poset& q,
                                           const std::vector<std::vector<std::uint32_t>>& candidates,
                                           std::uint32_t apex) {
  ContractionReport r;
  const std::size_t n = q.size();
  if (candidates.size() != n) {
    r.wellDefined = false;
    r.violations.push_back("map is not defined on every element");
    return r;
  }
  std::vector<std::uint32_t> f(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (candidates[x].empty()) {
      r.wellDefined = false;
      r.violations.push_back("no representative for " + q.label(x));
      continue;
    }
    f[x] = candidates[x].front();
    for (auto c : candidates[x]) {
      if (c != f[x]) {
        r.wellDefined = false;
        r.violations.push_back("representatives of " + q.label(x) + " disagree: " +
                               q.label(f[x]) + " vs " + q.label(c));
        break;
      }
    }
  }
  if (!r.wellDefined) return r;
  for (std::size_t x = 0; x < n; ++x) {
    if (!q.leq(x, f[x]) || !q.leq(apex, f[x])) {
      r.conical = false;
      r.violations.push_back("not conical at " + q.label(x));
    }
    const Bits& up = q.above(x);
    for (auto y = up.find_first(); y != Bits::npos; y = up.find_next(y)) {
      if (!q.leq(f[x], f[y])) {
        r.orderPreserving = false;
        r.violations.push_back("order not preserved: " + q.label(x) + " < " + q.label(y));
      }
    }
  }
  return r;
}

ContractionInstance apOrbitContraction(const PContext& ctx) {
  ContractionInstance out;
  auto ap = buildPSubgroupPoset(ctx, PosetKind::Ap);
  auto q = orbitPoset(ap.gposet());
  out.space = q.space;
  out.candidates.resize(q.orbits.size());
  for (std::size_t o = 0; o < q.orbits.size(); ++o) {
    for (auto m : q.orbits[o]) {
      const Subgroup& a = ap.subgroups[m];
      if (!a.isSubgroupOf(ctx.sylow) || !isFullyCentralized(a, ctx.sylow, ctx.prime)) continue;
      auto t = ap.find(theorem41Map(a, ctx.sylow, ctx.prime));
      if (!t) throw Error(ErrorKind::PreconditionViolated, "contraction image not in the poset");
      out.candidates[o].push_back(q.fiber[*t]);
    }
  }
  out.apex = q.fiber[*ap.find(ctx.omega)];
  out.report = verifyConicalContraction(out.space, out.candidates, out.apex);
  return out;
}

ContractionInstance xpChainContraction(const PContext& ctx) {
  ContractionInstance out;
  auto xp = buildPSubgroupPoset(ctx, PosetKind::Xp);
  auto xg = xp.gposet();
  auto co = chainOrbitPoset(xg);
  std::unordered_map<Chain, std::uint32_t, ChainHash> index;
  for (std::uint32_t i = 0; i < co.chains.size(); ++i) index.emplace(co.chains[i], i);
  const std::uint32_t top = *xp.find(ctx.sylow);
  const auto& q = co.quotient;
  out.space = q.space;
  out.candidates.resize(q.orbits.size());
  for (std::size_t o = 0; o < q.orbits.size(); ++o) {
    for (auto m : q.orbits[o]) {
      const Chain& c = co.chains[m];
      bool inside = std::all_of(c.begin(), c.end(), [&](std::uint32_t x) { return xg.isPreferred(x); });
      if (!inside) continue;
      Chain d = c;
      if (d.back() != top) d.push_back(top);
      out.candidates[o].push_back(q.fiber[index.at(d)]);
    }
  }
  out.apex = q.fiber[index.at(Chain{top})];
  out.report = verifyConicalContraction(out.space, out.candidates, out.apex);
  return out;
}

ContractionInstance nChainContraction(const PContext& ctx) {
  ContractionInstance out;
  auto nc = buildChainSubcomplexPoset(ctx, ChainKind::N);
  auto q = orbitPoset(nc.gposet);
  std::unordered_map<Chain, std::uint32_t, ChainHash> index;
  for (std::uint32_t i = 0; i < nc.chains.size(); ++i) index.emplace(nc.chains[i], i);
  const std::uint32_t top = *nc.base.find(ctx.sylow);
  const auto& subs = nc.base.subgroups;
  out.space = q.space;
  out.candidates.resize(q.orbits.size());
  for (std::size_t o = 0; o < q.orbits.size(); ++o) {
    for (auto m : q.orbits[o]) {
      const Chain& c = nc.chains[m];
      bool normal = std::all_of(c.begin(), c.end(), [&](std::uint32_t x) {
        return subs[x].isSubgroupOf(ctx.sylow) && isNormalIn(subs[x], ctx.sylow);
      });
      if (!normal) continue;
      Chain d = c;
      if (d.back() != top) d.push_back(top);
      out.candidates[o].push_back(q.fiber[index.at(d)]);
    }
  }
  out.apex = q.fiber[index.at(Chain{top})];
  out.report = verifyConicalContraction(out.space, out.candidates, out.apex);
  return out;
}

RetractTarget omegaComparableSubposet(const PContext& ctx) {
  RetractTarget out;
  out.ap = buildPSubgroupPoset(ctx, PosetKind::Ap);
  auto xg = out.ap.gposet();
  out.quotient = chainOrbitPoset(xg);
  const auto& subs = out.ap.subgroups;
  std::map<std::uint32_t, bool> fc;
  auto isFc = [&](std::uint32_t x) {
    auto it = fc.find(x);
    if (it != fc.end()) return it->second;
    bool v = isFullyCentralized(subs[x], ctx.sylow, ctx.prime);
    fc.emplace(x, v);
    return v;
  };
  const auto& q = out.quotient.quotient;
  for (std::size_t o = 0; o < q.orbits.size(); ++o) {
    bool ok = true;
    for (auto m : q.orbits[o]) {
      const Chain& c = out.quotient.chains[m];
      bool inside = std::all_of(c.begin(), c.end(), [&](std::uint32_t x) { return xg.isPreferred(x); });
      if (!inside) continue;
      for (auto x : c) {
        if (!isFc(x)) continue;
        if (!subs[x].isSubgroupOf(ctx.omega) && !ctx.omega.isSubgroupOf(subs[x])) ok = false;
      }
      if (!ok) break;
    }
    if (ok) out.keep.push_back(o);
  }
  return out;
}

FusionResult fusionDecompose(const PContext& ctx, const Subgroup& a, ElementId g,
                             std::size_t budget) {
  const Group& grp = *ctx.group;
  const Subgroup& p = ctx.sylow;
  if (!a.isSubgroupOf(p) || !conjugate(a, g).isSubgroupOf(p)) {
    throw Error(ErrorKind::PreconditionViolated, "A and A^g must lie in the Sylow subgroup");
  }
  using State = std::vector<ElementId>;
  auto imagesUnder = [&](ElementId k) {
    State s;
    for (auto x : a.generators()) s.push_back(grp.conj(x, k));
    return s;
  };
  const State target = imagesUnder(g);

  std::vector<Subgroup> qs = ctx.subgroupsOfP;
  std::vector<Subgroup> norms;
  Subgroup whole = Subgroup::whole(ctx.group);
  for (const auto& q : qs) norms.push_back(normalizer(whole, q));

  struct Node {
    State images;
    std::size_t parent;
    std::size_t q;
    ElementId step;
  };
  std::vector<Node> nodes{{imagesUnder(Group::identity()), SIZE_MAX, 0, 0}};
  std::set<State> seen{nodes[0].images};
  FusionResult out;
  std::size_t hit = SIZE_MAX;
  if (nodes[0].images == target) hit = 0;
  for (std::size_t i = 0; i < nodes.size() && hit == SIZE_MAX; ++i) {
    for (std::size_t qi = 0; qi < qs.size() && hit == SIZE_MAX; ++qi) {
      bool inside = std::all_of(nodes[i].images.begin(), nodes[i].images.end(),
                                [&](ElementId x) { return qs[qi].contains(x); });
      if (!inside) continue;
      for (ElementId h : norms[qi].members()) {
        State next;
        for (auto x : nodes[i].images) next.push_back(grp.conj(x, h));
        if (!seen.insert(next).second) continue;
        nodes.push_back({std::move(next), i, qi, h});
        if (nodes.back().images == target) {
          hit = nodes.size() - 1;
          break;
        }
        if (nodes.size() > budget) {
          out.exhausted = true;
          out.states = nodes.size();
          return out;
        }
      }
    }
  }
  out.states = nodes.size();
  if (hit == SIZE_MAX) return out;
  out.found = true;
  for (std::size_t k = hit; nodes[k].parent != SIZE_MAX; k = nodes[k].parent) {
    out.steps.push_back({qs[nodes[k].q], nodes[k].step});
  }
  std::reverse(out.steps.begin(), out.steps.end());
  return out;
}

bool checkFusionCertificate(const Subgroup& p, const Subgroup& a, ElementId g,
                            const std::vector<FusionStep>& steps) {
  const Group& grp = a.parent();
  ElementId k = Group::identity();
  for (const auto& s : steps) {
    if (!s.q.isSubgroupOf(p)) return false;
    for (auto x : a.generators()) {
      if (!s.q.contains(grp.conj(x, k))) return false;
    }
    for (auto y : s.q.generators()) {
      if (!s.q.contains(grp.conj(y, s.g))) return false;
    }
    k = grp.mul(k, s.g);
  }
  for (auto x : a.generators()) {
    if (grp.conj(x, k) != grp.conj(x, g)) return false;
  }
  return true;
}

}  // namespace pgposet
