#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "pgposet/error.hpp"

namespace pgposet {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// A chain x0 < x1 < ... < xn of element indices, listed bottom to top.
using Chain = std::vector<std::uint32_t>;
/// A simplex as a sorted list of vertex indices.
using Face = std::vector<std::uint32_t>;

struct ChainHash {
  std::size_t operator()(const std::vector<std::uint32_t>& c) const noexcept;
};

inline constexpr std::size_t kDefaultChainBound = 2'000'000;
/// Largest poset held as a dense reachability bit-matrix.
inline constexpr std::size_t kDensePosetLimit = 40'000;
inline constexpr std::size_t kDefaultIsoBound = 10'000;
inline constexpr std::size_t kDefaultRetractBudget = 1'000'000;

/// A finite T0-space: labeled elements with a strict order stored as a
/// reachability bit-matrix, plus the derived Hasse diagram.
class Poset {
 public:
  Poset() = default;

  /// `above[x]` holds every y with x < y. Throws OrderNotTransitive when the
  /// relation is not a strict partial order.
  Poset(std::vector<std::string> labels, std::vector<Bits> above);

  /// Builds the order generated by `lessPairs` (a < b), taking the transitive
  /// closure when `close` is set.
  static Poset fromPairs(std::vector<std::string> labels,
                         std::span<const std::pair<std::size_t, std::size_t>> lessPairs,
                         bool close = true);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  bool less(std::size_t x, std::size_t y) const { return above_[x][y]; }
  bool leq(std::size_t x, std::size_t y) const { return x == y || above_[x][y]; }
  bool comparable(std::size_t x, std::size_t y) const { return leq(x, y) || leq(y, x); }

  const Bits& above(std::size_t x) const { return above_[x]; }
  const Bits& below(std::size_t x) const { return below_[x]; }
  const std::vector<std::uint32_t>& upperCovers(std::size_t x) const { return upperCovers_[x]; }
  const std::vector<std::uint32_t>& lowerCovers(std::size_t x) const { return lowerCovers_[x]; }
  std::vector<std::pair<std::size_t, std::size_t>> coverPairs() const;

  /// Length of the longest chain ending at x (0 for minimal elements).
  std::size_t heightOf(std::size_t x) const { return heightOf_[x]; }
  /// Length of the longest chain (number of elements minus one); -1 if empty.
  long height() const;

  std::vector<std::size_t> minimal() const;
  std::vector<std::size_t> maximal() const;

  Poset induced(std::span<const std::size_t> keep) const;

  bool operator==(const Poset& other) const {
    return labels_ == other.labels_ && above_ == other.above_;
  }

 private:
  void derive();

  std::vector<std::string> labels_;
  std::vector<Bits> above_;
  std::vector<Bits> below_;
  std::vector<std::vector<std::uint32_t>> upperCovers_;
  std::vector<std::vector<std::uint32_t>> lowerCovers_;
  std::vector<std::size_t> heightOf_;
};

/// Strictly increasing, nonempty, and every step is a relation of X.
bool isChain(const Poset& x, const Chain& c);
std::string chainLabel(const Poset& x, const Chain& c);

/// All nonempty chains, ordered by length and then lexicographically.
std::vector<Chain> enumerateChains(const Poset& x, std::size_t bound = kDefaultChainBound);
/// Maximal chains (saturated chains from a minimal to a maximal element).
std::vector<Chain> maximalChains(const Poset& x, std::size_t bound = kDefaultChainBound);

struct Subdivision {
  Poset poset;
  std::vector<Chain> chains;  // chains[i] is element i of the subdivision
};

/// X': nonempty chains of X ordered by inclusion.
Subdivision subdivideWithChains(const Poset& x, std::size_t bound = kDefaultChainBound);
Poset subdivide(const Poset& x, std::size_t bound = kDefaultChainBound);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Keeps only the inclusion-maximal faces of `faces`.
  SimplicialComplex(std::vector<std::string> vertexLabels, std::vector<Face> faces,
                    bool alreadyMaximal = false);

  std::size_t vertexCount() const noexcept { return vertexLabels_.size(); }
  const std::vector<std::string>& vertexLabels() const noexcept { return vertexLabels_; }
  const std::vector<Face>& maximalFaces() const noexcept { return maximalFaces_; }
  /// -1 for the empty complex.
  long dimension() const;

  /// Every face grouped by dimension, each group sorted.
  std::vector<std::vector<Face>> facesByDimension(std::size_t bound = kDefaultChainBound) const;
  std::vector<std::size_t> fVector(std::size_t bound = kDefaultChainBound) const;
  long long eulerCharacteristic(std::size_t bound = kDefaultChainBound) const;

  bool isConnected() const;

  bool operator==(const SimplicialComplex& other) const {
    return vertexLabels_.size() == other.vertexLabels_.size() &&
           maximalFaces_ == other.maximalFaces_;
  }

 private:
  std::vector<std::string> vertexLabels_;
  std::vector<Face> maximalFaces_;
};

/// K(X): simplices are the nonempty chains of X.
SimplicialComplex orderComplex(const Poset& x, std::size_t bound = kDefaultChainBound);
/// X(K): faces of K ordered by inclusion.
Poset facePoset(const SimplicialComplex& k, std::size_t bound = kDefaultChainBound);

struct BeatPoints {
  std::vector<std::size_t> down;  // U^_x has a maximum
  std::vector<std::size_t> up;    // F^_x has a minimum
};

BeatPoints beatPoints(const Poset& x);
/// Indices of X that survive repeated removal of the smallest-index beat point.
std::vector<std::size_t> coreIndices(const Poset& x);
Poset core(const Poset& x);
bool isContractible(const Poset& x);
bool isConnected(const Poset& x);

/// A poset isomorphism X -> Y as an index map, if one exists.
std::optional<std::vector<std::size_t>> findIsomorphism(const Poset& x, const Poset& y,
                                                        std::size_t bound = kDefaultIsoBound);
bool isomorphic(const Poset& x, const Poset& y, std::size_t bound = kDefaultIsoBound);
/// Same finite homotopy type: the cores are isomorphic.
bool homotopyEquivalent(const Poset& x, const Poset& y, std::size_t bound = kDefaultIsoBound);

enum class Answer { Yes, No, Unknown };
std::string_view toString(Answer a);

struct RetractSearch {
  Answer answer = Answer::Unknown;
  std::vector<std::size_t> removalOrder;  // a witness when answer == Yes
  std::size_t nodes = 0;
};

/// Whether removing beat points one at a time can take X down to exactly
/// `keep`. By default deletes the smallest removable beat point until none is
/// left; `exhaustive` backtracks over all deletion orders instead. Unknown
/// once `budget` states have been visited.
RetractSearch strongDeformationRetract(const Poset& x, std::span<const std::size_t> keep,
                                       std::size_t budget = kDefaultRetractBudget,
                                       bool exhaustive = false);

/// Hasse diagram in DOT, one rank per height level, edges pointing up.
std::string toDot(const Poset& x, const std::string& name = "poset");
/// {"labels": [...], "covers": [[lower, upper], ...]}
std::string toJson(const Poset& x);

}  // namespace pgposet
