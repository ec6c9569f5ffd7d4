#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pgposet/permgrp.hpp"
#include "pgposet/poset.hpp"
#include "pgposet/quotient.hpp"

namespace pgposet {

enum class PosetKind { Sp, Ap, Bp, Xp, iSp };
enum class ChainKind { Rp, N };

std::string_view toString(PosetKind k);
std::string_view toString(ChainKind k);
std::optional<PosetKind> parsePosetKind(std::string_view s);
std::optional<ChainKind> parseChainKind(std::string_view s);

/// Data shared by every construction over one (G, p): the canonical Sylow P,
/// all Sylow p-subgroups, and the nontrivial subgroups of P.
struct PContext {
  GroupPtr group;
  unsigned prime = 0;
  Subgroup sylow;
  std::vector<Subgroup> sylows;
  std::vector<Subgroup> subgroupsOfP;  // nontrivial, sorted by order
  Subgroup omega;                      // Omega_1(Z(P))

  /// Throws PrimeDoesNotDivide.
  PContext(GroupPtr group, unsigned prime);
};

/// Nontrivial subgroups of a p-group, built bottom-up: every subgroup of
/// order p^(k+1) is S<x> with S of order p^k, x normalizing S and x^p in S.
std::vector<Subgroup> subgroupsOfPGroup(const Subgroup& p, unsigned prime);

/// Kind membership, a conjugation invariant.
bool hasKind(const PContext& ctx, const Subgroup& q, PosetKind kind);

struct PSubgroupPoset {
  GroupPtr group;
  unsigned prime = 0;
  PosetKind kind = PosetKind::Sp;
  Subgroup sylow;
  std::vector<Subgroup> subgroups;  // element i of the poset
  Poset poset;
  std::unordered_map<Subgroup, std::uint32_t, SubgroupHash> index;

  std::optional<std::uint32_t> find(const Subgroup& s) const;
  /// Conjugation action; elements inside the canonical Sylow are preferred
  /// as orbit representatives.
  GPoset gposet() const;
};

PSubgroupPoset buildPSubgroupPoset(const PContext& ctx, PosetKind kind);
PSubgroupPoset buildPSubgroupPoset(const GroupPtr& g, unsigned p, PosetKind kind);

struct ChainSubcomplexPoset {
  PSubgroupPoset base;        // S_p(G)
  std::vector<Chain> chains;  // element i, as a chain of base
  GPoset gposet;              // inclusion order with the chain-wise action
};

/// X(R_p(G)) or the subposet N of S_p(G)'.
ChainSubcomplexPoset buildChainSubcomplexPoset(const PContext& ctx, ChainKind kind);

unsigned pRank(const Subgroup& h, unsigned p);
/// r_p(G) - r_p(Omega_1(Z(P))).
int rankGap(const PContext& ctx);

/// Omega_1(Z(Omega_1(C_P(A)))) for A <= P elementary abelian and fully
/// centralized. Throws NotInSylow, PreconditionViolated, NotFullyCentralized.
Subgroup theorem41Map(const Subgroup& a, const Subgroup& p, unsigned prime);

struct ContractionReport {
  bool wellDefined = true;
  bool orderPreserving = true;
  bool conical = true;
  std::vector<std::string> violations;
  bool passes() const { return wellDefined && orderPreserving && conical; }
};

/// candidates[x] lists f(x) as computed from each admissible representative
/// of x; f is well-defined when they agree. Checks that f is order-preserving
/// and that x <= f(x) >= apex.
ContractionReport verifyConicalContraction(const Poset& q,
                                           const std::vector<std::vector<std::uint32_t>>& candidates,
                                           std::uint32_t apex);

/// A contraction instance: the orbit poset, the map candidates and the apex.
struct ContractionInstance {
  Poset space;
  std::vector<std::vector<std::uint32_t>> candidates;
  std::uint32_t apex = 0;
  ContractionReport report;
};

/// A_p(G)/G with A -> Omega_1(Z(Omega_1(C_P(A)))) over fully centralized
/// representatives inside P, apex the orbit of Omega_1(Z(P)).
ContractionInstance apOrbitContraction(const PContext& ctx);
/// X_p(G)'/G with c -> c u (P) over representatives inside P, apex (P).
ContractionInstance xpChainContraction(const PContext& ctx);
/// N/G with c -> c^g u (P) over representatives normal in P, apex (P).
ContractionInstance nChainContraction(const PContext& ctx);

/// Orbits of A_p(G)'/G whose representatives inside P have every fully
/// centralized member comparable with Omega_1(Z(P)). A strong deformation
/// retract when the rank gap is at most 2.
struct RetractTarget {
  PSubgroupPoset ap;
  ChainOrbitPoset quotient;
  std::vector<std::size_t> keep;
};
RetractTarget omegaComparableSubposet(const PContext& ctx);

struct FusionStep {
  Subgroup q;
  ElementId g;
};

struct FusionResult {
  bool found = false;
  bool exhausted = false;  // the state budget was hit
  std::vector<FusionStep> steps;
  std::size_t states = 0;
};

inline constexpr std::size_t kDefaultFusionBudget = 100'000;

/// Breadth-first search for Q_i <= P and g_i in N_G(Q_i) with
/// A^(g_1...g_(i-1)) <= Q_i and c_g = c_(g_1...g_n) on A. Throws
/// PreconditionViolated unless A and A^g lie in P.
FusionResult fusionDecompose(const PContext& ctx, const Subgroup& a, ElementId g,
                             std::size_t budget = kDefaultFusionBudget);

/// Checks conditions (1) and (2) for a proposed sequence.
bool checkFusionCertificate(const Subgroup& p, const Subgroup& a, ElementId g,
                            const std::vector<FusionStep>& steps);

}  // namespace pgposet
