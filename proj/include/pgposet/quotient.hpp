#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pgposet/permgrp.hpp"
#include "pgposet/poset.hpp"

namespace pgposet {

/// A poset with a right action of a permutation group by order automorphisms.
struct GPoset {
  using Action = std::function<std::uint32_t(std::uint32_t, ElementId)>;

  Poset space;
  GroupPtr group;
  Action act;
  /// generatorImages[i][x] = act(x, i-th generator)
  std::vector<std::vector<std::uint32_t>> generatorImages;
  /// Elements preferred as orbit representatives (e.g. those inside a fixed
  /// Sylow subgroup); empty means no preference.
  Bits preferred;

  GPoset() = default;
  GPoset(Poset space, GroupPtr group, Action act, Bits preferred = {});

  /// Builds the full action from generator images alone by writing each
  /// group element as a word in the generators.
  static GPoset fromGeneratorImages(Poset space, GroupPtr group,
                                    std::vector<std::vector<std::uint32_t>> images,
                                    Bits preferred = {});

  /// Trivial action of `group` on `space`.
  static GPoset trivial(Poset space, GroupPtr group);

  bool isPreferred(std::size_t x) const { return !preferred.empty() && preferred[x]; }

  /// Checks identity, compatibility on generator pairs and that every
  /// generator acts as an order automorphism. Throws ActionInvalid.
  void validate() const;
};

struct OrbitPoset {
  Poset space;
  std::vector<std::uint32_t> fiber;  // element -> orbit
  std::vector<std::uint32_t> reps;   // orbit -> representative element
  std::vector<std::vector<std::uint32_t>> orbits;
};

/// X/G. Orbits are numbered by their smallest member. Throws ActionInvalid
/// when an orbit meets a chain, OrderNotTransitive when the induced relation
/// is not an order.
OrbitPoset orbitPoset(const GPoset& xg);

struct ChainOrbitPoset {
  std::vector<Chain> chains;  // every nonempty chain of X
  OrbitPoset quotient;        // fiber is indexed by chains
};

/// X'/G computed from the chains of X without materializing X'. Orbit
/// representatives lie inside the preferred set when the orbit meets it.
ChainOrbitPoset chainOrbitPoset(const GPoset& xg, std::size_t bound = kDefaultChainBound);

/// X' with the induced action on chains.
GPoset subdivideG(const GPoset& xg, std::size_t bound = kDefaultChainBound);

/// Image of a chain under a group element.
Chain actOnChain(const GPoset& xg, const Chain& c, ElementId g);

/// K(X)/G as a simplicial complex on the orbits.
SimplicialComplex quotientComplex(const GPoset& xg, const OrbitPoset& q,
                                  std::size_t bound = kDefaultChainBound);

struct PropertyResult {
  bool holds = true;
  std::optional<std::pair<Chain, Chain>> witness;  // a violating pair of simplices
};

/// No simplex of K(X) has two distinct vertices in one orbit.
PropertyResult propertyA(const GPoset& xg);
/// Simplices with orbit-equal vertex sequences lie in one orbit. Checked by
/// searching all of G for a single conjugating element.
PropertyResult propertyB(const GPoset& xg, std::size_t bound = kDefaultChainBound);

struct AlphaResult {
  std::vector<std::uint32_t> map;  // X'/G orbit -> element of (X/G)'
  bool injective = false;
  bool surjective = false;
  bool isomorphism = false;
  ChainOrbitPoset domain;
  Subdivision codomain;
};

/// alpha : X'/G -> (X/G)', sending the orbit of (x0 < ... < xn) to the chain
/// of orbits.
AlphaResult alphaMap(const GPoset& xg, std::size_t bound = kDefaultChainBound);

/// X^(n)/G = (X'/G)^(n-1) for n in {1, 2}.
bool subdivisionQuotientIso(const GPoset& xg, unsigned n, std::size_t bound = kDefaultChainBound);

}  // namespace pgposet
