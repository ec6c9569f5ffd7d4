#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "pgposet/poset.hpp"

namespace pgposet {

inline constexpr std::size_t kDefaultCosetBound = 100'000;

enum class Pi1Status { Trivial, Nontrivial, Unknown };
std::string_view toString(Pi1Status s);

/// A finite presentation. Letters are 2*g for generator g and 2*g+1 for its
/// inverse.
struct Presentation {
  std::size_t generators = 0;
  std::vector<std::vector<std::uint32_t>> relators;
};

/// Edge-path group of the 2-skeleton, based at the first vertex, with the
/// edges of a breadth-first spanning tree collapsed.
Presentation edgePathPresentation(const SimplicialComplex& k);

/// Eliminates generators killed by length-one relators or appearing exactly
/// once in some relator.
Presentation simplify(Presentation p);

/// Order of the presented group by coset enumeration over the trivial
/// subgroup; 0 when the coset bound is hit.
std::size_t enumerateCosets(const Presentation& p, std::size_t cosetBound = kDefaultCosetBound);

/// Throws Disconnected when K is empty or disconnected.
Pi1Status pi1Status(const SimplicialComplex& k, std::size_t cosetBound = kDefaultCosetBound);

}  // namespace pgposet
