#pragma once

// Cross-checks the count formula against the brute-force oracles for every
// ordered pair of groups of each squarefree order up to a limit.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hgsq/bigint.hpp"
#include "hgsq/groups.hpp"
#include "hgsq/oracles.hpp"

namespace hgsq {

struct VerifyOptions {
  OracleConfig oracle;  // oracle.threads spreads pairs over workers
  bool run_semantic = true;
  bool run_census = true;
  /// Added to lambda (mod g) in the table predicate. A negative control: any
  /// nonzero offset must produce mismatches somewhere.
  u64 lambda_offset = 0;
};

struct PairCheck {
  GroupSpec galois;
  GroupSpec type;
  bool compatible = false;
  BigInt formula_hgs;
  BigInt formula_regular;
  std::vector<BigInt> formula_nh;
  std::vector<u64> table_nh;
  std::vector<u64> semantic_nh;
  u64 quintuples = 0;
  BigInt census;
  std::string failure;  // empty when every check passed; otherwise a witness

  bool ok() const noexcept { return failure.empty(); }
};

PairCheck verify_pair(const GroupSpec& galois, const GroupSpec& type,
                      const VerifyOptions& options = {});

struct OrderSummary {
  u64 n = 0;
  u64 classes = 0;
  u64 pairs = 0;
  u64 failures = 0;
};

struct VerifySummary {
  std::vector<OrderSummary> orders;
  u64 pairs = 0;
  u64 compatible_pairs = 0;
  u64 quintuples = 0;
  BigInt subgroups;
  std::vector<PairCheck> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Every squarefree n in [1, n_max], every ordered pair of classes.
VerifySummary verify_up_to(u64 n_max, const VerifyOptions& options = {});

}  // namespace hgsq
