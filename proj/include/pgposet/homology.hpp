#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pgposet/poset.hpp"

namespace pgposet {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced integral homology of a simplicial complex. Index i is dimension i,
/// up to the dimension of the complex.
struct HomologyProfile {
  std::vector<std::size_t> reducedBetti;
  std::vector<std::vector<BigInt>> torsion;  // invariant factors > 1
  long long euler = 0;

  bool acyclic() const;
  /// Same groups, ignoring trailing zero dimensions.
  bool sameGroups(const HomologyProfile& other) const;
  std::string toString() const;
};

/// Smith normal form of boundary matrices over the integers. Unit pivots are
/// eliminated sparsely; what remains goes to a dense arbitrary-precision pass.
HomologyProfile homology(const SimplicialComplex& k, std::size_t bound = kDefaultChainBound);

/// Invariant factors (nonzero diagonal of the Smith form) of a dense matrix.
std::vector<BigInt> smithInvariants(std::vector<std::vector<BigInt>> m);

}  // namespace pgposet
