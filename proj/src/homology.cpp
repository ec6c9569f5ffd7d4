#include "pgposet/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pgposet {

namespace {

using Entry = std::pair<std::uint32_t, std::int64_t>;  // row, value
using Column = std::vector<Entry>;

struct Overflow {};

std::int64_t checkedMulAdd(std::int64_t a, std::int64_t b, std::int64_t c) {
  // a - b * c
  std::int64_t prod = 0, out = 0;
  if (__builtin_mul_overflow(b, c, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw Overflow{};
  }
  return out;
}

/// target -= factor * source, both sorted by row.
Column axpy(const Column& target, const Column& source, std::int64_t factor) {
  Column out;
  out.reserve(target.size() + source.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < source.size()) {
    if (j == source.size() || (i < target.size() && target[i].first < source[j].first)) {
      out.push_back(target[i++]);
    } else if (i == target.size() || source[j].first < target[i].first) {
      out.emplace_back(source[j].first, checkedMulAdd(0, factor, source[j].second));
      ++j;
    } else {
      auto v = checkedMulAdd(target[i].second, factor, source[j].second);
      if (v != 0) out.emplace_back(target[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

struct RankResult {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;
};

/// Rank and invariant factors > 1 of a sparse integer matrix given by columns.
RankResult sparseSmith(std::vector<Column> cols, std::size_t rows) {
  RankResult result;
  std::vector<std::unordered_set<std::uint32_t>> rowCols(rows);
  for (std::uint32_t c = 0; c < cols.size(); ++c) {
    for (auto [r, v] : cols[c]) rowCols[r].insert(c);
  }
  std::vector<char> colAlive(cols.size(), 1);

  bool progress = true;
  try {
    while (progress) {
      progress = false;
      for (std::uint32_t p = 0; p < cols.size(); ++p) {
        if (!colAlive[p] || cols[p].empty()) continue;
        std::uint32_t pivotRow = UINT32_MAX;
        std::int64_t pivotVal = 0;
        for (auto [r, v] : cols[p]) {
          if ((v == 1 || v == -1) &&
              (pivotRow == UINT32_MAX || rowCols[r].size() < rowCols[pivotRow].size())) {
            pivotRow = r;
            pivotVal = v;
          }
        }
        if (pivotRow == UINT32_MAX) continue;
        std::vector<std::uint32_t> others(rowCols[pivotRow].begin(), rowCols[pivotRow].end());
        std::sort(others.begin(), others.end());
        for (auto c : others) {
          if (c == p) continue;
          auto it = std::lower_bound(cols[c].begin(), cols[c].end(), Entry{pivotRow, INT64_MIN});
          std::int64_t factor = it->second * pivotVal;
          Column updated = axpy(cols[c], cols[p], factor);
          for (auto [r, v] : cols[c]) rowCols[r].erase(c);
          cols[c] = std::move(updated);
          for (auto [r, v] : cols[c]) rowCols[r].insert(c);
        }
        // The pivot row now meets only column p; drop both.
        for (auto [r, v] : cols[p]) rowCols[r].erase(p);
        cols[p].clear();
        colAlive[p] = 0;
        ++result.rank;
        progress = true;
      }
    }
  } catch (const Overflow&) {
    // Fall through with the current, equivalent, partially reduced matrix.
  }

  std::vector<std::uint32_t> liveCols, liveRows;
  std::unordered_map<std::uint32_t, std::size_t> rowIndex;
  for (std::uint32_t c = 0; c < cols.size(); ++c) {
    if (colAlive[c] && !cols[c].empty()) liveCols.push_back(c);
  }
  for (auto c : liveCols) {
    for (auto [r, v] : cols[c]) {
      if (rowIndex.emplace(r, liveRows.size()).second) liveRows.push_back(r);
    }
  }
  if (liveCols.empty()) return result;
  if (liveCols.size() * liveRows.size() > 50'000'000ULL) {
    throw Error(ErrorKind::SizeExceeded, "dense Smith form remainder too large");
  }
  std::vector<std::vector<BigInt>> dense(liveRows.size(), std::vector<BigInt>(liveCols.size()));
  for (std::size_t j = 0; j < liveCols.size(); ++j) {
    for (auto [r, v] : cols[liveCols[j]]) dense[rowIndex[r]][j] = v;
  }
  for (auto& d : smithInvariants(std::move(dense))) {
    ++result.rank;
    if (d > 1) result.torsion.push_back(d);
  }
  return result;
}

}  // namespace

std::vector<BigInt> smithInvariants(std::vector<std::vector<BigInt>> m) {
  std::vector<BigInt> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest nonzero entry in the remaining block as pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (m[i][j] != 0 && (pr == rows || abs(m[i][j]) < abs(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          clean = false;
        }
      }
    }
    diag.push_back(abs(m[t][t]));
    ++t;
  }
  // Normalize to a divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      BigInt g = gcd(diag[i], diag[j]);
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  }
  return diag;
}

HomologyProfile homology(const SimplicialComplex& k, std::size_t bound) {
  HomologyProfile out;
  auto faces = k.facesByDimension(bound);
  const std::size_t dims = faces.size();
  for (std::size_t d = 0; d < dims; ++d) {
    out.euler += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(faces[d].size());
  }
  if (dims == 0) return out;

  // rank[d] and torsion[d] of the boundary C_d -> C_{d-1}; d = 0 is the
  // augmentation C_0 -> Z.
  std::vector<RankResult> boundary(dims + 1);
  boundary[0].rank = faces[0].empty() ? 0 : 1;
  for (std::size_t d = 1; d < dims; ++d) {
    std::unordered_map<Face, std::uint32_t, ChainHash> index;
    for (std::uint32_t i = 0; i < faces[d - 1].size(); ++i) index.emplace(faces[d - 1][i], i);
    std::vector<Column> cols(faces[d].size());
    Face sub;
    for (std::size_t c = 0; c < faces[d].size(); ++c) {
      const Face& f = faces[d][c];
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        sub.assign(f.begin(), f.end());
        sub.erase(sub.begin() + static_cast<long>(drop));
        cols[c].emplace_back(index.at(sub), drop % 2 == 0 ? 1 : -1);
      }
      std::sort(cols[c].begin(), cols[c].end());
    }
    boundary[d] = sparseSmith(std::move(cols), faces[d - 1].size());
  }

  out.reducedBetti.resize(dims);
  out.torsion.resize(dims);
  for (std::size_t d = 0; d < dims; ++d) {
    std::size_t next = boundary[d + 1].rank;
    out.reducedBetti[d] = faces[d].size() - boundary[d].rank - next;
    out.torsion[d] = boundary[d + 1].torsion;
  }

  long long alt = 0;
  for (std::size_t d = 0; d < dims; ++d) {
    alt += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(out.reducedBetti[d]);
  }
  if (alt != out.euler - 1) {
    throw Error(ErrorKind::PreconditionViolated, "Euler characteristic cross-check failed");
  }
  return out;
}

bool HomologyProfile::acyclic() const {
  for (auto b : reducedBetti) {
    if (b) return false;
  }
  for (const auto& t : torsion) {
    if (!t.empty()) return false;
  }
  return true;
}

bool HomologyProfile::sameGroups(const HomologyProfile& other) const {
  const std::size_t n = std::max(reducedBetti.size(), other.reducedBetti.size());
  for (std::size_t d = 0; d < n; ++d) {
    std::size_t a = d < reducedBetti.size() ? reducedBetti[d] : 0;
    std::size_t b = d < other.reducedBetti.size() ? other.reducedBetti[d] : 0;
    if (a != b) return false;
    static const std::vector<BigInt> none;
    const auto& ta = d < torsion.size() ? torsion[d] : none;
    const auto& tb = d < other.torsion.size() ? other.torsion[d] : none;
    if (ta != tb) return false;
  }
  return true;
}

std::string HomologyProfile::toString() const {
  std::ostringstream out;
  out << "betti=[";
  for (std::size_t d = 0; d < reducedBetti.size(); ++d) out << (d ? "," : "") << reducedBetti[d];
  out << "] torsion=[";
  for (std::size_t d = 0; d < torsion.size(); ++d) {
    out << (d ? "," : "") << "[";
    for (std::size_t i = 0; i < torsion[d].size(); ++i) out << (i ? "," : "") << torsion[d][i];
    out << "]";
  }
  out << "] euler=" << euler;
  return out.str();
}

}  // namespace pgposet
