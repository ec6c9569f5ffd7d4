#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pgposet/permgrp.hpp"
#include "pgposet/pi1.hpp"
#include "pgposet/poset.hpp"
#include "pgposet/pposets.hpp"

namespace pgposet {

enum class Verdict { Pass, Fail, Inconclusive, HypothesisNotMet };
std::string_view toString(Verdict v);

struct Budgets {
  std::size_t chains = kDefaultChainBound;
  std::size_t cosets = kDefaultCosetBound;
  std::size_t retract = kDefaultRetractBudget;
  std::size_t fusion = kDefaultFusionBudget;
  std::size_t iso = kDefaultIsoBound;

  nlohmann::ordered_json toJson() const;
};

struct Check {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string witness;  // required for Fail
  std::string budget;   // required for Inconclusive
};

struct VerificationReport {
  std::string task;
  std::string group;
  std::string groupSpec;  // how to load the group again
  unsigned prime = 0;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, std::string>> observations;
  std::vector<std::pair<std::string, double>> timings;  // seconds
  Budgets budgets;

  bool failed() const;
  bool inconclusive() const;
  /// 0 pass, 1 a check failed, 3 a budget ran out.
  int exitCode() const;
  /// Timings are the only nondeterministic part and can be left out.
  nlohmann::ordered_json toJson(bool withTimings = true) const;
};

/// webb, conjecture, theorem41, brown, quillen, stong, rankgap, pq, sdr,
/// alperin, xp.
const std::vector<std::string>& taskNames();
bool isTask(std::string_view task);

/// Throws InvalidInput for an unknown task and PrimeDoesNotDivide.
VerificationReport runTask(std::string_view task, const GroupPtr& g, unsigned p,
                           const Budgets& budgets = {}, const std::string& groupSpec = "");

/// Loads builtin:<name> or file:<path>; a bare name is taken as builtin.
GroupPtr loadGroupSpec(std::string_view spec, std::size_t cap = kDefaultGroupCap);

/// Primes dividing n, ascending.
std::vector<unsigned> primeDivisors(std::uint64_t n);

struct CatalogEntry {
  std::string spec;
  std::string group;
  unsigned prime = 0;
  std::string task;
  std::optional<VerificationReport> report;
  std::string error;  // set when the entry raised
  bool budgetError = false;
};

struct CatalogSummary {
  std::vector<CatalogEntry> entries;  // sorted by group, prime, task

  std::size_t violations() const;
  std::size_t inconclusive() const;
  std::size_t errors() const;
  int exitCode() const;
  nlohmann::ordered_json toJson(bool withTimings = true) const;
};

/// Runs every task over every (G, p) with p dividing |G|. Errors are recorded
/// per entry and the sweep continues.
CatalogSummary runCatalog(const std::vector<std::string>& specs,
                          const std::vector<std::string>& tasks, const Budgets& budgets = {});

/// Group files (*.json) in a directory, as file: specs in name order.
std::vector<std::string> groupFilesIn(const std::string& dir);

}  // namespace pgposet
