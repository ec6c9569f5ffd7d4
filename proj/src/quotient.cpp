#include "pgposet/quotient.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace pgposet {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Orbit bookkeeping from a union-find over n points; orbits are numbered by
/// their smallest member and represented by the smallest preferred member.
OrbitPoset collectOrbits(UnionFind& uf, std::size_t n, const std::function<bool(std::size_t)>& pref) {
  OrbitPoset q;
  q.fiber.assign(n, 0);
  std::vector<std::uint32_t> orbitOfRoot(n, UINT32_MAX);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t r = uf.find(x);
    if (orbitOfRoot[r] == UINT32_MAX) {
      orbitOfRoot[r] = static_cast<std::uint32_t>(q.orbits.size());
      q.orbits.emplace_back();
    }
    q.fiber[x] = orbitOfRoot[r];
    q.orbits[q.fiber[x]].push_back(static_cast<std::uint32_t>(x));
  }
  for (const auto& orbit : q.orbits) {
    std::uint32_t rep = orbit.front();
    for (auto x : orbit) {
      if (pref(x)) {
        rep = x;
        break;
      }
    }
    q.reps.push_back(rep);
  }
  return q;
}

void buildOrbitOrder(OrbitPoset& q, const std::vector<std::string>& labels,
                     std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (auto [a, b] : pairs) {
    if (a == b) throw Error(ErrorKind::ActionInvalid, "an orbit contains two comparable elements");
  }
  std::vector<std::string> orbitLabels;
  for (auto r : q.reps) orbitLabels.push_back(labels[r]);
  q.space = Poset::fromPairs(std::move(orbitLabels), pairs, false);
}

}  // namespace

GPoset::GPoset(Poset s, GroupPtr g, Action a, Bits pref)
    : space(std::move(s)), group(std::move(g)), act(std::move(a)), preferred(std::move(pref)) {
  for (auto gen : group->generatorIds()) {
    std::vector<std::uint32_t> images(space.size());
    for (std::uint32_t x = 0; x < space.size(); ++x) images[x] = act(x, gen);
    generatorImages.push_back(std::move(images));
  }
}

GPoset GPoset::fromGeneratorImages(Poset space, GroupPtr group,
                                   std::vector<std::vector<std::uint32_t>> images, Bits preferred) {
  const auto gens = group->generatorIds();
  if (images.size() != gens.size()) {
    throw Error(ErrorKind::ActionInvalid, "one image list per group generator is required");
  }
  for (const auto& im : images) {
    if (im.size() != space.size()) throw Error(ErrorKind::ActionInvalid, "image list has the wrong size");
    for (auto y : im) {
      if (y >= space.size()) throw Error(ErrorKind::ActionInvalid, "image out of range");
    }
  }
  // Breadth-first words: element e = pred[e] * gens[step[e]].
  const std::size_t order = group->order();
  auto pred = std::make_shared<std::vector<ElementId>>(order, UINT32_MAX);
  auto step = std::make_shared<std::vector<std::uint32_t>>(order, 0);
  std::vector<ElementId> queue{Group::identity()};
  (*pred)[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::uint32_t k = 0; k < gens.size(); ++k) {
      ElementId next = group->mul(queue[i], gens[k]);
      if ((*pred)[next] == UINT32_MAX) {
        (*pred)[next] = queue[i];
        (*step)[next] = k;
        queue.push_back(next);
      }
    }
  }
  auto table = std::make_shared<std::vector<std::vector<std::uint32_t>>>(images);
  Action act = [pred, step, table](std::uint32_t x, ElementId g) {
    std::vector<std::uint32_t> word;
    while (g != 0) {
      word.push_back((*step)[g]);
      g = (*pred)[g];
    }
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = (*table)[*it][x];
    return x;
  };
  GPoset out;
  out.space = std::move(space);
  out.group = std::move(group);
  out.act = std::move(act);
  out.generatorImages = std::move(images);
  out.preferred = std::move(preferred);
  return out;
}

GPoset GPoset::trivial(Poset space, GroupPtr group) {
  return GPoset(std::move(space), std::move(group), [](std::uint32_t x, ElementId) { return x; });
}

void GPoset::validate() const {
  const std::size_t n = space.size();
  if (!preferred.empty() && preferred.size() != n) {
    throw Error(ErrorKind::ActionInvalid, "preferred set has the wrong size");
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (act(x, Group::identity()) != x) {
      throw Error(ErrorKind::ActionInvalid, "identity moves " + space.label(x));
    }
  }
  const auto gens = group->generatorIds();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& im = generatorImages[i];
    std::vector<char> hit(n, 0);
    for (std::uint32_t x = 0; x < n; ++x) {
      if (im[x] >= n || hit[im[x]]) {
        throw Error(ErrorKind::ActionInvalid, "generator does not act bijectively");
      }
      hit[im[x]] = 1;
    }
    for (std::uint32_t x = 0; x < n; ++x) {
      Bits mapped(n);
      for (auto y = space.above(x).find_first(); y != Bits::npos; y = space.above(x).find_next(y)) {
        mapped.set(im[y]);
      }
      if (mapped != space.above(im[x])) {
        throw Error(ErrorKind::ActionInvalid, "generator is not an order automorphism at " +
                                                  space.label(x));
      }
    }
    for (std::size_t j = 0; j < gens.size(); ++j) {
      ElementId gh = group->mul(gens[i], gens[j]);
      for (std::uint32_t x = 0; x < n; ++x) {
        if (act(x, gh) != generatorImages[j][im[x]]) {
          throw Error(ErrorKind::ActionInvalid, "action is not compatible with the product");
        }
      }
    }
  }
}

OrbitPoset orbitPoset(const GPoset& xg) {
  const std::size_t n = xg.space.size();
  UnionFind uf(n);
  for (const auto& im : xg.generatorImages) {
    for (std::size_t x = 0; x < n; ++x) uf.unite(x, im[x]);
  }
  OrbitPoset q = collectOrbits(uf, n, [&](std::size_t x) { return xg.isPreferred(x); });
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x) {
    const Bits& up = xg.space.above(x);
    for (auto y = up.find_first(); y != Bits::npos; y = up.find_next(y)) {
      pairs.emplace_back(q.fiber[x], q.fiber[y]);
    }
  }
  buildOrbitOrder(q, xg.space.labels(), pairs);
  return q;
}

Chain actOnChain(const GPoset& xg, const Chain& c, ElementId g) {
  Chain out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = xg.act(c[i], g);
  return out;
}

ChainOrbitPoset chainOrbitPoset(const GPoset& xg, std::size_t bound) {
  ChainOrbitPoset out;
  out.chains = enumerateChains(xg.space, bound);
  const std::size_t n = out.chains.size();
  std::unordered_map<Chain, std::uint32_t, ChainHash> index;
  index.reserve(2 * n);
  for (std::uint32_t i = 0; i < n; ++i) index.emplace(out.chains[i], i);

  UnionFind uf(n);
  Chain image;
  for (const auto& im : xg.generatorImages) {
    for (std::size_t i = 0; i < n; ++i) {
      image.clear();
      for (auto x : out.chains[i]) image.push_back(im[x]);
      auto it = index.find(image);
      if (it == index.end()) {
        throw Error(ErrorKind::ActionInvalid, "generator does not map chains to chains");
      }
      uf.unite(i, it->second);
    }
  }
  auto inside = [&](std::size_t i) {
    if (xg.preferred.empty()) return false;
    for (auto x : out.chains[i]) {
      if (!xg.preferred[x]) return false;
    }
    return true;
  };
  out.quotient = collectOrbits(uf, n, inside);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  Chain sub;
  for (std::size_t d = 0; d < n; ++d) {
    const Chain& chain = out.chains[d];
    const std::size_t k = chain.size();
    if (k < 2) continue;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
      sub.clear();
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1U) sub.push_back(chain[i]);
      }
      pairs.emplace_back(out.quotient.fiber[index.at(sub)], out.quotient.fiber[d]);
    }
  }
  std::vector<std::string> chainLabels;
  chainLabels.reserve(n);
  for (const auto& c : out.chains) chainLabels.push_back(chainLabel(xg.space, c));
  buildOrbitOrder(out.quotient, chainLabels, pairs);
  return out;
}

GPoset subdivideG(const GPoset& xg, std::size_t bound) {
  auto sub = subdivideWithChains(xg.space, bound);
  auto chains = std::make_shared<std::vector<Chain>>(std::move(sub.chains));
  auto index = std::make_shared<std::unordered_map<Chain, std::uint32_t, ChainHash>>();
  for (std::uint32_t i = 0; i < chains->size(); ++i) index->emplace((*chains)[i], i);
  Bits preferred;
  if (!xg.preferred.empty()) {
    preferred.resize(chains->size());
    for (std::size_t i = 0; i < chains->size(); ++i) {
      bool in = true;
      for (auto x : (*chains)[i]) in = in && xg.preferred[x];
      if (in) preferred.set(i);
    }
  }
  auto base = std::make_shared<GPoset>(xg);
  GPoset::Action act = [base, chains, index](std::uint32_t c, ElementId g) {
    return index->at(actOnChain(*base, (*chains)[c], g));
  };
  return GPoset(std::move(sub.poset), xg.group, std::move(act), std::move(preferred));
}

SimplicialComplex quotientComplex(const GPoset& xg, const OrbitPoset& q, std::size_t bound) {
  std::vector<Face> faces;
  for (const auto& c : maximalChains(xg.space, bound)) {
    Face f;
    for (auto x : c) f.push_back(q.fiber[x]);
    faces.push_back(std::move(f));
  }
  return SimplicialComplex(q.space.labels(), std::move(faces));
}

PropertyResult propertyA(const GPoset& xg) {
  PropertyResult out;
  const std::size_t n = xg.space.size();
  UnionFind uf(n);
  for (const auto& im : xg.generatorImages) {
    for (std::size_t x = 0; x < n; ++x) uf.unite(x, im[x]);
  }
  for (std::size_t x = 0; x < n; ++x) {
    const Bits& up = xg.space.above(x);
    for (auto y = up.find_first(); y != Bits::npos; y = up.find_next(y)) {
      if (uf.find(x) == uf.find(y)) {
        out.holds = false;
        out.witness = std::make_pair(Chain{static_cast<std::uint32_t>(x)},
                                     Chain{static_cast<std::uint32_t>(y)});
        return out;
      }
    }
  }
  return out;
}

PropertyResult propertyB(const GPoset& xg, std::size_t bound) {
  PropertyResult out;
  const std::size_t n = xg.space.size();
  UnionFind uf(n);
  for (const auto& im : xg.generatorImages) {
    for (std::size_t x = 0; x < n; ++x) uf.unite(x, im[x]);
  }
  auto chains = enumerateChains(xg.space, bound);
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    std::vector<std::size_t> key;
    for (auto x : chains[i]) key.push_back(uf.find(x));
    groups[key].push_back(i);
  }
  const Group& g = *xg.group;
  for (const auto& [key, members] : groups) {
    const Chain& ref = chains[members.front()];
    for (std::size_t m = 1; m < members.size(); ++m) {
      const Chain& target = chains[members[m]];
      bool found = false;
      for (ElementId h = 0; h < g.order() && !found; ++h) {
        if (xg.act(ref[0], h) != target[0]) continue;
        found = actOnChain(xg, ref, h) == target;
      }
      if (!found) {
        out.holds = false;
        out.witness = std::make_pair(ref, target);
        return out;
      }
    }
  }
  return out;
}

AlphaResult alphaMap(const GPoset& xg, std::size_t bound) {
  AlphaResult out;
  out.domain = chainOrbitPoset(xg, bound);
  auto base = orbitPoset(xg);
  out.codomain = subdivideWithChains(base.space, bound);
  std::unordered_map<Chain, std::uint32_t, ChainHash> index;
  for (std::uint32_t i = 0; i < out.codomain.chains.size(); ++i) {
    index.emplace(out.codomain.chains[i], i);
  }
  const auto& dq = out.domain.quotient;
  const std::size_t m = dq.orbits.size();
  const std::size_t k = out.codomain.chains.size();
  out.map.resize(m);
  for (std::size_t o = 0; o < m; ++o) {
    Chain image;
    for (auto x : out.domain.chains[dq.reps[o]]) image.push_back(base.fiber[x]);
    out.map[o] = index.at(image);
  }
  std::vector<char> hit(k, 0);
  out.injective = true;
  for (auto t : out.map) {
    if (hit[t]) out.injective = false;
    hit[t] = 1;
  }
  out.surjective = std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  out.isomorphism = out.injective && out.surjective;
  if (out.isomorphism) {
    for (std::size_t a = 0; a < m && out.isomorphism; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (dq.space.less(a, b) != out.codomain.poset.less(out.map[a], out.map[b])) {
          out.isomorphism = false;
          break;
        }
      }
    }
  }
  return out;
}

bool subdivisionQuotientIso(const GPoset& xg, unsigned n, std::size_t bound) {
  if (n == 0 || n > 2) {
    throw Error(ErrorKind::PreconditionViolated, "subdivision depth must be 1 or 2");
  }
  if (n == 1) {
    auto a = chainOrbitPoset(xg, bound).quotient.space;
    auto b = chainOrbitPoset(xg, bound).quotient.space;
    return a == b;
  }
  return alphaMap(subdivideG(xg, bound), bound).isomorphism;
}

}  // namespace pgposet
