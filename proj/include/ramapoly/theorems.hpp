#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ramapoly/family.hpp"
#include "ramapoly/integer.hpp"

namespace ramapoly {

enum class Status { Pass, Fail, NotApplicable };

struct CheckResult {
  std::string claim;
  std::uint64_t n = 0;
  /// Auxiliary parameters such as {"p", 3} or {"k", 2}; empty for plain
  /// per-index claims.
  std::vector<std::pair<std::string, std::uint64_t>> params;
  Status status = Status::NotApplicable;
  /// Counterexample payload; nonempty exactly when status is Fail.
  std::string witness;
};

struct ClaimSummary {
  std::uint64_t pass = 0, fail = 0, na = 0;
};

struct VerificationReport {
  std::uint64_t n_min = 1, n_max = 1;
  std::vector<CheckResult> results;  // sorted by (claim, n, params)
  std::map<std::string, ClaimSummary> summary;
  std::uint64_t failures() const;
};

struct SuiteConfig {
  std::vector<std::uint64_t> aux_primes{2, 3, 5, 7, 11, 13};
  /// Evaluation point, term count and tolerance for the truncated
  /// log-series comparison (the suite's one inexact check).
  Rat log_x0{1, 2};
  unsigned log_terms = 200;
  double log_tol = 1e-9;
  bool cross_check = true;
  unsigned jobs = 1;
};

/// All registered claim identifiers, sorted.
const std::vector<std::string>& claim_registry();

/// True when the filter admits the claim. Filter entries match exactly or
/// as a prefix up to a '.' or '-' boundary ("Thm7" matches "Thm7.ii").
bool claim_matches(const std::set<std::string>& filter,
                   const std::string& claim);

/// Runs a single registered claim at index n. Parameterized claims return
/// one result per applicable parameter, or a single not-applicable result.
std::vector<CheckResult> run_claim(const std::string& claim_id,
                                   std::uint64_t n, const SuiteConfig& cfg,
                                   FamilyCache& cache);

/// Runs every claim admitted by the filter (empty filter = all) at every
/// index in [n_min, n_max]. cfg.jobs > 1 fans indices out across OpenMP
/// threads with per-thread caches; the report is identical to the serial
/// one. Failures are recorded as data, not exceptions.
VerificationReport run_suite(std::uint64_t n_min, std::uint64_t n_max,
                             const SuiteConfig& cfg = {},
                             const std::set<std::string>& filter = {});

/// Serial reference path; run_suite with jobs > 1 must reproduce it.
VerificationReport run_suite_serial(std::uint64_t n_min, std::uint64_t n_max,
                                    const SuiteConfig& cfg = {},
                                    const std::set<std::string>& filter = {});

const char* status_name(Status s);

}  // namespace ramapoly
