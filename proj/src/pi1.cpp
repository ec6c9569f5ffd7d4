#include "pgposet/pi1.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "pgposet/homology.hpp"

namespace pgposet {

namespace {

using Word = std::vector<std::uint32_t>;

std::uint32_t inverse(std::uint32_t letter) { return letter ^ 1U; }

void freeReduce(Word& w) {
  Word out;
  for (auto x : w) {
    if (!out.empty() && out.back() == inverse(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  // Cyclic reduction.
  std::size_t a = 0, b = out.size();
  while (b - a >= 2 && out[a] == inverse(out[b - 1])) {
    ++a;
    --b;
  }
  w.assign(out.begin() + static_cast<long>(a), out.begin() + static_cast<long>(b));
}

Word invertWord(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = inverse(x);
  return out;
}

SimplicialComplex twoSkeleton(const SimplicialComplex& k) {
  std::vector<Face> faces;
  for (const auto& f : k.maximalFaces()) {
    if (f.size() <= 3) {
      faces.push_back(f);
      continue;
    }
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = a + 1; b < f.size(); ++b) {
        for (std::size_t c = b + 1; c < f.size(); ++c) faces.push_back({f[a], f[b], f[c]});
      }
    }
  }
  return SimplicialComplex(k.vertexLabels(), std::move(faces));
}

}  // namespace

std::string_view toString(Pi1Status s) {
  switch (s) {
    case Pi1Status::Trivial: return "trivial";
    case Pi1Status::Nontrivial: return "nontrivial";
    case Pi1Status::Unknown: return "unknown";
  }
  return "unknown";
}

Presentation edgePathPresentation(const SimplicialComplex& k) {
  auto faces = twoSkeleton(k).facesByDimension();
  Presentation out;
  if (faces.size() < 2) return out;
  const auto& vertices = faces[0];
  const auto& edges = faces[1];

  std::unordered_map<std::uint32_t, std::vector<std::pair<std::uint32_t, std::size_t>>> adj;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e][0]].emplace_back(edges[e][1], e);
    adj[edges[e][1]].emplace_back(edges[e][0], e);
  }
  std::vector<char> tree(edges.size(), 0);
  std::unordered_map<std::uint32_t, char> seen;
  std::vector<std::uint32_t> queue{vertices[0][0]};
  seen[vertices[0][0]] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto [w, e] : adj[queue[i]]) {
      if (!seen[w]) {
        seen[w] = 1;
        tree[e] = 1;
        queue.push_back(w);
      }
    }
  }

  std::map<Face, long> edgeGen;  // -1 for tree edges
  for (std::size_t e = 0; e < edges.size(); ++e) {
    edgeGen[edges[e]] = tree[e] ? -1 : static_cast<long>(out.generators++);
  }
  auto letter = [&](std::uint32_t a, std::uint32_t b, bool inv, Word& w) {
    long g = edgeGen.at(Face{a, b});
    if (g >= 0) w.push_back(static_cast<std::uint32_t>(2 * g) + (inv ? 1U : 0U));
  };
  if (faces.size() > 2) {
    for (const auto& t : faces[2]) {
      Word w;
      letter(t[0], t[1], false, w);
      letter(t[1], t[2], false, w);
      letter(t[0], t[2], true, w);
      freeReduce(w);
      if (!w.empty()) out.relators.push_back(std::move(w));
    }
  }
  return out;
}

Presentation simplify(Presentation p) {
  for (auto& r : p.relators) freeReduce(r);
  std::vector<char> alive(p.generators, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::erase_if(p.relators, [](const Word& w) { return w.empty(); });
    std::sort(p.relators.begin(), p.relators.end(), [](const Word& a, const Word& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    p.relators.erase(std::unique(p.relators.begin(), p.relators.end()), p.relators.end());

    for (std::size_t ri = 0; ri < p.relators.size() && !changed; ++ri) {
      const Word r = p.relators[ri];
      std::map<std::uint32_t, std::size_t> count;
      for (auto x : r) ++count[x >> 1];
      for (auto [g, c] : count) {
        if (c != 1) continue;
        // r = u x^e v, so x^e = u^-1 v^-1 and x = (u^-1 v^-1)^e.
        std::size_t pos = 0;
        while ((r[pos] >> 1) != g) ++pos;
        Word u(r.begin(), r.begin() + static_cast<long>(pos));
        Word v(r.begin() + static_cast<long>(pos) + 1, r.end());
        Word value = invertWord(u);
        Word vi = invertWord(v);
        value.insert(value.end(), vi.begin(), vi.end());
        if (r[pos] & 1U) value = invertWord(value);
        Word valueInv = invertWord(value);

        std::vector<Word> next;
        for (std::size_t rj = 0; rj < p.relators.size(); ++rj) {
          if (rj == ri) continue;
          Word w;
          for (auto x : p.relators[rj]) {
            if ((x >> 1) == g) {
              const Word& s = (x & 1U) ? valueInv : value;
              w.insert(w.end(), s.begin(), s.end());
            } else {
              w.push_back(x);
            }
          }
          freeReduce(w);
          next.push_back(std::move(w));
        }
        p.relators = std::move(next);
        alive[g] = 0;
        changed = true;
        break;
      }
    }
  }

  // Renumber the surviving generators.
  std::vector<std::uint32_t> remap(p.generators, 0);
  std::uint32_t n = 0;
  for (std::size_t g = 0; g < p.generators; ++g) {
    if (alive[g]) remap[g] = n++;
  }
  for (auto& r : p.relators) {
    for (auto& x : r) x = 2 * remap[x >> 1] + (x & 1U);
  }
  p.generators = n;
  return p;
}

std::size_t enumerateCosets(const Presentation& p, std::size_t cosetBound) {
  if (p.generators == 0) return 1;
  const std::size_t width = 2 * p.generators;
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> table(width, kNone);
  std::vector<std::uint32_t> parent{0};
  std::size_t defined = 1;

  auto row = [&](std::uint32_t c) { return table.data() + static_cast<std::size_t>(c) * width; };
  auto rep = [&](std::uint32_t c) {
    std::uint32_t r = c;
    while (parent[r] != r) r = parent[r];
    while (parent[c] != r) {
      std::uint32_t next = parent[c];
      parent[c] = r;
      c = next;
    }
    return r;
  };
  bool exhausted = false;
  auto define = [&](std::uint32_t c, std::uint32_t x) {
    if (defined >= cosetBound) {
      exhausted = true;
      return;
    }
    std::uint32_t n = static_cast<std::uint32_t>(parent.size());
    parent.push_back(n);
    table.resize(table.size() + width, kNone);
    ++defined;
    row(c)[x] = n;
    row(n)[inverse(x)] = c;
  };
  auto coincidence = [&](std::uint32_t a, std::uint32_t b) {
    std::vector<std::uint32_t> queue;
    auto merge = [&](std::uint32_t k, std::uint32_t l) {
      k = rep(k);
      l = rep(l);
      if (k == l) return;
      if (k > l) std::swap(k, l);
      parent[l] = k;
      queue.push_back(l);
    };
    merge(a, b);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      std::uint32_t e = queue[i];
      for (std::uint32_t x = 0; x < width; ++x) {
        std::uint32_t f = row(e)[x];
        if (f == kNone) continue;
        row(f)[inverse(x)] = kNone;
        std::uint32_t e1 = rep(e), f1 = rep(f);
        if (row(e1)[x] != kNone) {
          merge(f1, row(e1)[x]);
        } else if (row(f1)[inverse(x)] != kNone) {
          merge(e1, row(f1)[inverse(x)]);
        } else {
          row(e1)[x] = f1;
          row(f1)[inverse(x)] = e1;
        }
      }
    }
  };
  auto scanAndFill = [&](std::uint32_t c, const Word& w) {
    std::uint32_t f = c, b = c;
    std::size_t i = 0, j = w.size();
    while (true) {
      while (i < j && row(f)[w[i]] != kNone) f = row(f)[w[i++]];
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && row(b)[inverse(w[j - 1])] != kNone) b = row(b)[inverse(w[--j])];
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        row(f)[w[i]] = b;
        row(b)[inverse(w[i])] = f;
        return;
      }
      define(f, w[i]);
      if (exhausted) return;
    }
  };

  for (std::uint32_t c = 0; c < parent.size(); ++c) {
    for (const auto& r : p.relators) {
      if (parent[c] != c) break;
      scanAndFill(c, r);
      if (exhausted) return 0;
    }
    for (std::uint32_t x = 0; x < width; ++x) {
      if (parent[c] != c) break;
      if (row(c)[x] == kNone) define(c, x);
      if (exhausted) return 0;
    }
  }
  std::size_t live = 0;
  for (std::uint32_t c = 0; c < parent.size(); ++c) {
    if (parent[c] == c) ++live;
  }
  return live;
}

Pi1Status pi1Status(const SimplicialComplex& k, std::size_t cosetBound) {
  if (!k.isConnected()) {
    throw Error(ErrorKind::Disconnected, "fundamental group needs a connected complex");
  }
  auto h1 = homology(twoSkeleton(k));
  if (h1.reducedBetti.size() > 1 && (h1.reducedBetti[1] > 0 || !h1.torsion[1].empty())) {
    return Pi1Status::Nontrivial;
  }
  auto p = simplify(edgePathPresentation(k));
  if (p.generators == 0) return Pi1Status::Trivial;
  std::size_t order = enumerateCosets(p, cosetBound);
  if (order == 0) return Pi1Status::Unknown;
  return order == 1 ? Pi1Status::Trivial : Pi1Status::Nontrivial;
}

}  // namespace pgposet
