#pragma once

// Small posets, groups and actions shared by the test binaries.

#include <array>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "pgposet/permgrp.hpp"
#include "pgposet/poset.hpp"
#include "pgposet/quotient.hpp"

#ifndef PGPOSET_DATA_DIR
#define PGPOSET_DATA_DIR "data"
#endif

namespace fixtures {

using namespace pgposet;

inline Poset fromCovers(std::vector<std::string> labels,
                        const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  return Poset::fromPairs(std::move(labels), covers);
}

/// Four-point model of the circle: m0, m1 below M0, M1.
inline Poset circle() {
  return fromCovers({"m0", "m1", "M0", "M1"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

inline Poset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i) covers.emplace_back(i - 1, i);
  }
  return fromCovers(labels, covers);
}

inline Poset antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  return fromCovers(labels, {});
}

/// Cone over the circle: the circle plus a maximum.
inline Poset cone() {
  return fromCovers({"m0", "m1", "M0", "M1", "top"},
                    {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
}

/// The circle with the flip exchanging m0, m1 and M0, M1.
inline GPoset flipCircle() {
  auto z2 = builtinGroup("Cyclic(2)");
  std::vector<std::vector<std::uint32_t>> images{{1, 0, 3, 2}};
  return GPoset::fromGeneratorImages(circle(), z2, images);
}

/// Quaternion group in its regular representation on 8 points.
inline GroupPtr quaternion() {
  // Index 2u + s for sign s in {0: +, 1: -} and unit u in {1, i, j, k}.
  static const int unitMul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int signMul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto right = [&](int u) {
    std::vector<Point> images(8);
    for (int x = 0; x < 8; ++x) {
      int xu = x / 2, xs = x % 2;
      int ru = unitMul[xu][u], rs = xs ^ signMul[xu][u];
      images[x] = static_cast<Point>(2 * ru + rs);
    }
    return Permutation(images);
  };
  return makeGroup("Q8", 8, {right(1), right(2)});
}

/// The dihedral Sylow subgroup <(1 3), (1 2 3 4)> of Sym(4).
inline Subgroup dihedralInS4(const GroupPtr& s4) {
  std::vector<ElementId> gens{s4->idOf(Permutation::fromCycles(4, {{1, 3}})),
                              s4->idOf(Permutation::fromCycles(4, {{1, 2, 3, 4}}))};
  return Subgroup::generatedBy(s4, gens);
}

inline Subgroup cyclicOf(const GroupPtr& g, const Permutation& x) {
  std::vector<ElementId> gens{g->idOf(x)};
  return Subgroup::generatedBy(g, gens);
}

/// Hasse diagram of the 17-point orbit space drawn for the degree-26 group:
/// orbits of chains in P, Q, R, A, B and conjugates by g, h.
inline Poset orbitDiagram26() {
  std::vector<std::string> labels{"(P)",       "(Q)",       "(R)",         "(A)",
                                  "(B)",       "(Q<P)",     "(R<P)",       "(A<P)",
                                  "(B<Rg)",    "(B<R)",     "(B<P)",       "(Bh<P)",
                                  "(Bh<Q)",    "(B<Rg<P)",  "(B<R<P)",     "(Bh<Q<P)",
                                  "(Bh<R<P)"};
  std::vector<std::pair<std::size_t, std::size_t>> covers{
      {0, 5},  {0, 6},   {0, 7},   {0, 10},  {0, 11}, {1, 5},   {1, 12},
      {2, 6},  {2, 8},   {2, 9},   {3, 7},   {4, 8},  {4, 9},   {4, 10},
      {4, 11}, {4, 12},  {5, 15},  {6, 13},  {6, 14}, {6, 16},  {8, 13},
      {8, 16}, {9, 14},  {10, 13}, {10, 14}, {11, 15}, {11, 16}, {12, 15}};
  return fromCovers(labels, covers);
}

inline std::string groupFile26() { return std::string(PGPOSET_DATA_DIR) + "/26t62.json"; }
inline bool haveGroupFile26() { return std::filesystem::exists(groupFile26()); }

/// Builtin catalog paired with every prime dividing the order.
inline std::vector<std::pair<std::string, unsigned>> catalogPairs() {
  std::vector<std::pair<std::string, unsigned>> out;
  for (const auto& name : builtinCatalog()) {
    auto g = builtinGroup(name);
    std::uint64_t n = g->order();
    for (unsigned p = 2; p <= n; ++p) {
      if (n % p) continue;
      out.emplace_back(name, p);
      while (n % p == 0) n /= p;
    }
  }
  return out;
}

}  // namespace fixtures
