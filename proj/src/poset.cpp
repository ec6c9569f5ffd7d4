#include "pgposet/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"

namespace pgposet {

namespace {

template <typename F>
void forEachBit(const Bits& b, F&& f) {
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) f(i);
}

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

void checkDense(std::size_t n) {
  if (n > kDensePosetLimit) {
    throw Error(ErrorKind::SizeExceeded, "poset with " + std::to_string(n) +
                                             " elements exceeds the dense limit of " +
                                             std::to_string(kDensePosetLimit));
  }
}

}  // namespace

std::size_t ChainHash::operator()(const std::vector<std::uint32_t>& c) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : c) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// --- Poset -------------------------------------------------------------------

Poset::Poset(std::vector<std::string> labels, std::vector<Bits> above)
    : labels_(std::move(labels)), above_(std::move(above)) {
  checkDense(labels_.size());
  if (above_.size() != labels_.size()) {
    throw Error(ErrorKind::InvalidInput, "relation rows do not match the label count");
  }
  for (auto& row : above_) {
    if (row.size() != labels_.size()) {
      throw Error(ErrorKind::InvalidInput, "relation row has the wrong width");
    }
  }
  derive();
}

Poset Poset::fromPairs(std::vector<std::string> labels,
                       std::span<const std::pair<std::size_t, std::size_t>> lessPairs, bool close) {
  const std::size_t n = labels.size();
  checkDense(n);
  std::vector<Bits> above(n, Bits(n));
  for (auto [a, b] : lessPairs) {
    if (a >= n || b >= n) throw Error(ErrorKind::InvalidInput, "relation pair out of range");
    above[a].set(b);
  }
  if (close) {
    // Reverse topological order: every successor is finished before x.
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t x = 0; x < n; ++x) forEachBit(above[x], [&](std::size_t y) { ++indeg[y]; });
    std::vector<std::size_t> topo;
    for (std::size_t x = 0; x < n; ++x) {
      if (indeg[x] == 0) topo.push_back(x);
    }
    for (std::size_t i = 0; i < topo.size(); ++i) {
      forEachBit(above[topo[i]], [&](std::size_t y) {
        if (--indeg[y] == 0) topo.push_back(y);
      });
    }
    if (topo.size() != n) {
      throw Error(ErrorKind::OrderNotTransitive, "relation contains a cycle");
    }
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      Bits acc = above[*it];
      forEachBit(above[*it], [&](std::size_t y) { acc |= above[y]; });
      above[*it] = std::move(acc);
    }
  }
  return Poset(std::move(labels), std::move(above));
}

void Poset::derive() {
  const std::size_t n = labels_.size();
  below_.assign(n, Bits(n));
  for (std::size_t x = 0; x < n; ++x) {
    if (above_[x][x]) {
      throw Error(ErrorKind::OrderNotTransitive, "relation is not irreflexive at " + labels_[x]);
    }
    forEachBit(above_[x], [&](std::size_t y) { below_[y].set(x); });
  }
  for (std::size_t x = 0; x < n; ++x) {
    forEachBit(above_[x], [&](std::size_t y) {
      if (!above_[y].is_subset_of(above_[x])) {
        throw Error(ErrorKind::OrderNotTransitive,
                    "relation is not transitive through " + labels_[x] + " < " + labels_[y]);
      }
    });
  }

  upperCovers_.assign(n, {});
  lowerCovers_.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) {
    forEachBit(above_[x], [&](std::size_t y) {
      if (!above_[x].intersects(below_[y])) {
        upperCovers_[x].push_back(static_cast<std::uint32_t>(y));
        lowerCovers_[y].push_back(static_cast<std::uint32_t>(x));
      }
    });
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return below_[a].count() < below_[b].count();
  });
  heightOf_.assign(n, 0);
  for (std::size_t x : order) {
    for (auto y : lowerCovers_[x]) heightOf_[x] = std::max(heightOf_[x], heightOf_[y] + 1);
  }
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::coverPairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t x = 0; x < size(); ++x) {
    for (auto y : upperCovers_[x]) out.emplace_back(x, y);
  }
  return out;
}

long Poset::height() const {
  if (empty()) return -1;
  return static_cast<long>(*std::max_element(heightOf_.begin(), heightOf_.end()));
}

std::vector<std::size_t> Poset::minimal() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (below_[x].none()) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> Poset::maximal() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (above_[x].none()) out.push_back(x);
  }
  return out;
}

Poset Poset::induced(std::span<const std::size_t> keep) const {
  std::vector<std::size_t> where(size(), SIZE_MAX);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= size()) throw Error(ErrorKind::InvalidInput, "subposet index out of range");
    where[keep[i]] = i;
  }
  std::vector<std::string> labels;
  std::vector<Bits> rows(keep.size(), Bits(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    labels.push_back(labels_[keep[i]]);
    forEachBit(above_[keep[i]], [&](std::size_t y) {
      if (where[y] != SIZE_MAX) rows[i].set(where[y]);
    });
  }
  return Poset(std::move(labels), std::move(rows));
}

// --- chains and subdivision -----------------------------------------------------

bool isChain(const Poset& x, const Chain& c) {
  if (c.empty()) return false;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] >= x.size()) return false;
    if (i > 0 && !x.less(c[i - 1], c[i])) return false;
  }
  return true;
}

std::string chainLabel(const Poset& x, const Chain& c) {
  std::string out = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += '<';
    out += x.label(c[i]);
  }
  return out + ")";
}

std::vector<Chain> enumerateChains(const Poset& x, std::size_t bound) {
  std::vector<Chain> out;
  Chain cur;
  auto tooMany = [&] {
    throw Error(ErrorKind::SizeExceeded,
                "chain count exceeds the bound of " + std::to_string(bound));
  };
  auto dfs = [&](auto&& self, std::size_t last) -> void {
    forEachBit(x.above(last), [&](std::size_t y) {
      cur.push_back(static_cast<std::uint32_t>(y));
      out.push_back(cur);
      if (out.size() > bound) tooMany();
      self(self, y);
      cur.pop_back();
    });
  };
  for (std::size_t v = 0; v < x.size(); ++v) {
    cur.assign(1, static_cast<std::uint32_t>(v));
    out.push_back(cur);
    if (out.size() > bound) tooMany();
    dfs(dfs, v);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Chain& a, const Chain& b) { return a.size() < b.size(); });
  return out;
}

std::vector<Chain> maximalChains(const Poset& x, std::size_t bound) {
  std::vector<Chain> out;
  Chain cur;
  auto dfs = [&](auto&& self, std::size_t last) -> void {
    if (x.upperCovers(last).empty()) {
      out.push_back(cur);
      if (out.size() > bound) {
        throw Error(ErrorKind::SizeExceeded, "maximal chain count exceeds the bound");
      }
      return;
    }
    for (auto y : x.upperCovers(last)) {
      cur.push_back(y);
      self(self, y);
      cur.pop_back();
    }
  };
  for (auto m : x.minimal()) {
    cur.assign(1, static_cast<std::uint32_t>(m));
    dfs(dfs, m);
  }
  return out;
}

Subdivision subdivideWithChains(const Poset& x, std::size_t bound) {
  Subdivision out;
  out.chains = enumerateChains(x, bound);
  const std::size_t n = out.chains.size();
  checkDense(n);
  std::unordered_map<Chain, std::size_t, ChainHash> index;
  index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index.emplace(out.chains[i], i);

  std::vector<Bits> above(n, Bits(n));
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
      above[index.at(sub)].set(d);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& c : out.chains) labels.push_back(chainLabel(x, c));
  out.poset = Poset(std::move(labels), std::move(above));
  return out;
}

Poset subdivide(const Poset& x, std::size_t bound) { return subdivideWithChains(x, bound).poset; }

// --- simplicial complexes ----------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertexLabels, std::vector<Face> faces,
                                     bool alreadyMaximal)
    : vertexLabels_(std::move(vertexLabels)) {
  for (auto& f : faces) {
    if (f.empty()) throw Error(ErrorKind::InvalidInput, "empty face");
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    if (f.back() >= vertexLabels_.size()) {
      throw Error(ErrorKind::InvalidInput, "face vertex out of range");
    }
  }
  if (!alreadyMaximal) {
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
      return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<std::vector<std::size_t>> byVertex(vertexLabels_.size());
    std::vector<Face> kept;
    for (auto& f : faces) {
      bool contained = false;
      for (std::size_t idx : byVertex[f.front()]) {
        const Face& g = kept[idx];
        if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
          contained = true;
          break;
        }
      }
      if (contained) continue;
      for (auto v : f) byVertex[v].push_back(kept.size());
      kept.push_back(std::move(f));
    }
    faces = std::move(kept);
  }
  std::sort(faces.begin(), faces.end());
  maximalFaces_ = std::move(faces);
}

long SimplicialComplex::dimension() const {
  long d = -1;
  for (const auto& f : maximalFaces_) d = std::max(d, static_cast<long>(f.size()) - 1);
  return d;
}

std::vector<std::vector<Face>> SimplicialComplex::facesByDimension(std::size_t bound) const {
  const long dim = dimension();
  std::vector<std::unordered_set<Face, ChainHash>> sets(static_cast<std::size_t>(dim + 1));
  std::size_t total = 0;
  Face sub;
  for (const auto& f : maximalFaces_) {
    const std::size_t k = f.size();
    if (k > 30) throw Error(ErrorKind::SizeExceeded, "face dimension too large to enumerate");
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      sub.clear();
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1U) sub.push_back(f[i]);
      }
      if (sets[sub.size() - 1].insert(sub).second && ++total > bound) {
        throw Error(ErrorKind::SizeExceeded, "face count exceeds the bound");
      }
    }
  }
  std::vector<std::vector<Face>> out(sets.size());
  for (std::size_t d = 0; d < sets.size(); ++d) {
    out[d].assign(sets[d].begin(), sets[d].end());
    std::sort(out[d].begin(), out[d].end());
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::fVector(std::size_t bound) const {
  std::vector<std::size_t> f;
  for (const auto& layer : facesByDimension(bound)) f.push_back(layer.size());
  return f;
}

long long SimplicialComplex::eulerCharacteristic(std::size_t bound) const {
  long long chi = 0;
  auto f = fVector(bound);
  for (std::size_t i = 0; i < f.size(); ++i) {
    chi += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(f[i]);
  }
  return chi;
}

bool SimplicialComplex::isConnected() const {
  if (maximalFaces_.empty()) return false;
  UnionFind uf(vertexLabels_.size());
  std::vector<char> used(vertexLabels_.size(), 0);
  for (const auto& f : maximalFaces_) {
    for (auto v : f) {
      used[v] = 1;
      uf.unite(f.front(), v);
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t v = 0; v < used.size(); ++v) {
    if (used[v]) roots.insert(uf.find(v));
  }
  return roots.size() == 1;
}

SimplicialComplex orderComplex(const Poset& x, std::size_t bound) {
  std::vector<Face> faces;
  for (auto& c : maximalChains(x, bound)) {
    std::sort(c.begin(), c.end());
    faces.push_back(std::move(c));
  }
  return SimplicialComplex(x.labels(), std::move(faces), true);
}

Poset facePoset(const SimplicialComplex& k, std::size_t bound) {
  std::vector<Face> faces;
  for (auto& layer : k.facesByDimension(bound)) {
    for (auto& f : layer) faces.push_back(std::move(f));
  }
  const std::size_t n = faces.size();
  checkDense(n);
  std::unordered_map<Face, std::size_t, ChainHash> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(faces[i], i);
  std::vector<Bits> above(n, Bits(n));
  Face sub;
  for (std::size_t d = 0; d < n; ++d) {
    const Face& f = faces[d];
    const std::size_t m = f.size();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
      sub.clear();
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1U) sub.push_back(f[i]);
      }
      above[index.at(sub)].set(d);
    }
  }
  std::vector<std::string> labels;
  for (const auto& f : faces) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) s += ',';
      s += k.vertexLabels()[f[i]];
    }
    labels.push_back(s + "}");
  }
  return Poset(std::move(labels), std::move(above));
}

// --- beat points and cores ---------------------------------------------------------

namespace {

/// Beat-point tests inside the subposet of `alive` elements. A maximum of
/// U^_x must be the unique element of greatest height, so one candidate is
/// enough.
class BeatTester {
 public:
  explicit BeatTester(const Poset& x) : x_(x), alive_(x.size()) { alive_.set(); }

  const Bits& alive() const { return alive_; }
  void remove(std::size_t v) { alive_.reset(v); }
  void restore(std::size_t v) { alive_.set(v); }
  void assign(const Bits& b) { alive_ = b; }

  bool isDownBeat(std::size_t v) const {
    Bits d = x_.below(v) & alive_;
    return hasExtreme(d, true);
  }
  bool isUpBeat(std::size_t v) const {
    Bits u = x_.above(v) & alive_;
    return hasExtreme(u, false);
  }
  bool isBeat(std::size_t v) const { return isDownBeat(v) || isUpBeat(v); }

 private:
  bool hasExtreme(const Bits& set, bool wantMax) const {
    if (set.none()) return false;
    std::size_t best = Bits::npos;
    bool tie = false;
    forEachBit(set, [&](std::size_t y) {
      if (best == Bits::npos) {
        best = y;
        return;
      }
      auto hy = x_.heightOf(y);
      auto hb = x_.heightOf(best);
      if (wantMax ? hy > hb : hy < hb) {
        best = y;
        tie = false;
      } else if (hy == hb) {
        tie = true;
      }
    });
    if (tie) return false;
    Bits rest = set - (wantMax ? x_.below(best) : x_.above(best));
    return rest.count() == 1;
  }

  const Poset& x_;
  Bits alive_;
};

}  // namespace

BeatPoints beatPoints(const Poset& x) {
  BeatPoints out;
  BeatTester t(x);
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (t.isDownBeat(v)) out.down.push_back(v);
    if (t.isUpBeat(v)) out.up.push_back(v);
  }
  return out;
}

std::vector<std::size_t> coreIndices(const Poset& x) {
  BeatTester t(x);
  std::set<std::size_t> beats;
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (t.isBeat(v)) beats.insert(v);
  }
  while (!beats.empty()) {
    std::size_t v = *beats.begin();
    beats.erase(beats.begin());
    t.remove(v);
    Bits touched = (x.above(v) | x.below(v)) & t.alive();
    forEachBit(touched, [&](std::size_t y) {
      if (t.isBeat(y)) {
        beats.insert(y);
      } else {
        beats.erase(y);
      }
    });
  }
  std::vector<std::size_t> keep;
  forEachBit(t.alive(), [&](std::size_t v) { keep.push_back(v); });
  return keep;
}

Poset core(const Poset& x) {
  auto keep = coreIndices(x);
  return x.induced(keep);
}

bool isContractible(const Poset& x) { return coreIndices(x).size() == 1; }

bool isConnected(const Poset& x) {
  if (x.empty()) return false;
  UnionFind uf(x.size());
  for (auto [a, b] : x.coverPairs()) uf.unite(a, b);
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (uf.find(v) != 0) return false;
  }
  return true;
}

// --- isomorphism ---------------------------------------------------------------

namespace {

/// Color refinement over the Hasse diagram; colors are shared between the two
/// posets so equal colors are comparable across them.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refineColors(const Poset& x,
                                                                           const Poset& y) {
  using Sig = std::vector<std::size_t>;
  auto depth = [](const Poset& p) {
    std::vector<std::size_t> d(p.size(), 0);
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return p.above(a).count() < p.above(b).count(); });
    for (std::size_t v : order) {
      for (auto u : p.upperCovers(v)) d[v] = std::max(d[v], d[u] + 1);
    }
    return d;
  };
  auto initial = [&](const Poset& p) {
    auto d = depth(p);
    std::vector<Sig> sig(p.size());
    for (std::size_t v = 0; v < p.size(); ++v) {
      sig[v] = {p.heightOf(v), d[v], p.below(v).count(), p.above(v).count(),
                p.lowerCovers(v).size(), p.upperCovers(v).size()};
    }
    return sig;
  };
  auto sx = initial(x);
  auto sy = initial(y);
  std::vector<std::size_t> cx(x.size()), cy(y.size());
  std::size_t classes = 0;
  for (int round = 0; round < 8; ++round) {
    std::map<Sig, std::size_t> ids;
    for (const auto& s : sx) ids.emplace(s, 0);
    for (const auto& s : sy) ids.emplace(s, 0);
    std::size_t next = 0;
    for (auto& [k, v] : ids) v = next++;
    for (std::size_t v = 0; v < x.size(); ++v) cx[v] = ids[sx[v]];
    for (std::size_t v = 0; v < y.size(); ++v) cy[v] = ids[sy[v]];
    if (next == classes) break;
    classes = next;
    auto refine = [](const Poset& p, const std::vector<std::size_t>& c) {
      std::vector<Sig> sig(p.size());
      for (std::size_t v = 0; v < p.size(); ++v) {
        Sig up, down;
        for (auto u : p.upperCovers(v)) up.push_back(c[u]);
        for (auto u : p.lowerCovers(v)) down.push_back(c[u]);
        std::sort(up.begin(), up.end());
        std::sort(down.begin(), down.end());
        sig[v] = {c[v], SIZE_MAX};
        sig[v].insert(sig[v].end(), up.begin(), up.end());
        sig[v].push_back(SIZE_MAX);
        sig[v].insert(sig[v].end(), down.begin(), down.end());
      }
      return sig;
    };
    sx = refine(x, cx);
    sy = refine(y, cy);
  }
  return {cx, cy};
}

}  // namespace

std::optional<std::vector<std::size_t>> findIsomorphism(const Poset& x, const Poset& y,
                                                        std::size_t bound) {
  if (x.size() > bound || y.size() > bound) {
    throw Error(ErrorKind::SizeExceeded, "isomorphism test exceeds the size bound of " +
                                             std::to_string(bound));
  }
  if (x.size() != y.size()) return std::nullopt;
  if (x.coverPairs().size() != y.coverPairs().size()) return std::nullopt;
  const std::size_t n = x.size();
  auto [cx, cy] = refineColors(x, y);
  {
    auto sx = cx, sy = cy;
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx != sy) return std::nullopt;
  }
  std::map<std::size_t, std::vector<std::size_t>> byColor;
  for (std::size_t v = 0; v < n; ++v) byColor[cy[v]].push_back(v);

  // Most constrained first, then grow along the Hasse diagram.
  std::vector<std::size_t> order;
  std::vector<char> placed(n, 0);
  std::vector<std::size_t> seeds(n);
  std::iota(seeds.begin(), seeds.end(), 0);
  std::stable_sort(seeds.begin(), seeds.end(), [&](std::size_t a, std::size_t b) {
    return byColor[cx[a]].size() < byColor[cx[b]].size();
  });
  for (std::size_t s : seeds) {
    if (placed[s]) continue;
    std::vector<std::size_t> queue{s};
    placed[s] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::size_t v = queue[i];
      order.push_back(v);
      auto visit = [&](std::uint32_t u) {
        if (!placed[u]) {
          placed[u] = 1;
          queue.push_back(u);
        }
      };
      for (auto u : x.upperCovers(v)) visit(u);
      for (auto u : x.lowerCovers(v)) visit(u);
    }
  }

  std::vector<std::size_t> map(n, SIZE_MAX);
  std::vector<char> used(n, 0);
  auto consistent = [&](std::size_t depthIdx, std::size_t v, std::size_t w) {
    for (std::size_t i = 0; i < depthIdx; ++i) {
      std::size_t a = order[i];
      std::size_t b = map[a];
      if (x.less(a, v) != y.less(b, w) || x.less(v, a) != y.less(w, b)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depthIdx) -> bool {
    if (depthIdx == n) return true;
    std::size_t v = order[depthIdx];
    for (std::size_t w : byColor[cx[v]]) {
      if (used[w] || !consistent(depthIdx, v, w)) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, depthIdx + 1)) return true;
      used[w] = 0;
      map[v] = SIZE_MAX;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

bool isomorphic(const Poset& x, const Poset& y, std::size_t bound) {
  return findIsomorphism(x, y, bound).has_value();
}

bool homotopyEquivalent(const Poset& x, const Poset& y, std::size_t bound) {
  return isomorphic(core(x), core(y), bound);
}

// --- strong deformation retracts ------------------------------------------------------

std::string_view toString(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "unknown";
}

RetractSearch strongDeformationRetract(const Poset& x, std::span<const std::size_t> keep,
                                       std::size_t budget, bool exhaustive) {
  Bits target(x.size());
  for (auto k : keep) {
    if (k >= x.size()) throw Error(ErrorKind::InvalidInput, "retract index out of range");
    target.set(k);
  }
  RetractSearch result;
  BeatTester t(x);
  if (!exhaustive) {
    // Removing any beat point outside A keeps A a strong deformation retract
    // when it was one, so a dead end settles the question.
    while (t.alive() != target) {
      if (++result.nodes > budget) return result;
      Bits candidates = t.alive() - target;
      auto v = candidates.find_first();
      while (v != Bits::npos && !t.isBeat(v)) v = candidates.find_next(v);
      if (v == Bits::npos) {
        result.answer = Answer::No;
        return result;
      }
      t.remove(v);
      result.removalOrder.push_back(v);
    }
    result.answer = Answer::Yes;
    return result;
  }
  std::unordered_set<std::string> dead;
  std::vector<std::size_t> path;
  bool exhausted = false;
  auto key = [&] {
    std::string k;
    boost::to_string(t.alive(), k);
    return k;
  };
  auto dfs = [&](auto&& self) -> bool {
    if (t.alive() == target) return true;
    if (++result.nodes > budget) {
      exhausted = true;
      return false;
    }
    std::string k = key();
    if (dead.count(k)) return false;
    Bits candidates = t.alive() - target;
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      if (!t.isBeat(v)) continue;
      t.remove(v);
      path.push_back(v);
      if (self(self)) return true;
      path.pop_back();
      t.restore(v);
      if (exhausted) return false;
    }
    dead.insert(std::move(k));
    return false;
  };
  if (dfs(dfs)) {
    result.answer = Answer::Yes;
    result.removalOrder = path;
  } else {
    result.answer = exhausted ? Answer::Unknown : Answer::No;
  }
  return result;
}

// --- export --------------------------------------------------------------------

std::string toDot(const Poset& x, const std::string& name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t v = 0; v < x.size(); ++v) {
    std::string l = x.label(v);
    std::string esc;
    for (char c : l) {
      if (c == '"' || c == '\\') esc += '\\';
      esc += c;
    }
    out << "  n" << v << " [label=\"" << esc << "\"];\n";
  }
  std::map<std::size_t, std::vector<std::size_t>> levels;
  for (std::size_t v = 0; v < x.size(); ++v) levels[x.heightOf(v)].push_back(v);
  for (const auto& [h, vs] : levels) {
    out << "  { rank=same;";
    for (auto v : vs) out << " n" << v << ";";
    out << " }\n";
  }
  for (auto [a, b] : x.coverPairs()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string toJson(const Poset& x) {
  nlohmann::json j;
  j["labels"] = x.labels();
  auto covers = nlohmann::json::array();
  for (auto [a, b] : x.coverPairs()) covers.push_back({a, b});
  j["covers"] = covers;
  return j.dump();
}

}  // namespace pgposet
