#pragma once

// Seeded differential testing: every deduction path against the oracle on
// one random instance. Shared by the CLI `oracle --fuzz` command, the unit
// tests and the acceptance suite.

#include <cstdint>
#include <string>
#include <vector>

#include "hornstab/core.hpp"
#include "hornstab/kernels.hpp"

namespace hornstab {

struct FuzzConfig {
  std::size_t max_vars = 10;
  std::size_t max_clauses = 15;
  std::size_t max_len = 4;
  bool inconsistent = false;
  bool neg_only = false;
  /// run_fuzz makes every k-th instance inconsistent (0 disables).
  std::size_t inconsistent_every = 0;
};

struct FuzzInstance {
  std::uint64_t seed = 0;
  HornTheory theory;
  ModelSet models;   // mod(theory)
  ModelSet charset;  // characteristic set of mod(theory)
  Clause clause;
  std::size_t alpha = 0;
};

FuzzInstance make_fuzz_instance(std::uint64_t seed, const FuzzConfig& cfg);

struct FuzzReport {
  std::size_t instances = 0;
  std::size_t checks = 0;
  /// One line per disagreement: "<seed> <path>: got X, oracle Y".
  std::vector<std::string> mismatches;
};

/// Runs the interior (formula, reference, charset), exterior (formula,
/// charset N side, charset P side) and envelope (formula, charset) paths and
/// compares each with the oracle. NO answers must also carry a witness that
/// falsifies c and lies in the operator's model set.
void check_against_oracle(const FuzzInstance& inst, Execution exec, FuzzReport& report);

/// alpha = 0 answers of every path equal plain entailment, and for negative
/// theories the envelope answers equal the exterior answers.
void check_degeneration(const FuzzInstance& inst, Execution exec, FuzzReport& report);

/// `count` instances with seeds base_seed, base_seed + 1, ...
FuzzReport run_fuzz(std::size_t count, std::uint64_t base_seed, const FuzzConfig& cfg,
                    Execution exec = Execution::kParallel);

}  // namespace hornstab
