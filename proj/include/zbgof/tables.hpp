#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "zbgof/rng.hpp"

namespace zbgof {

/// Published reference values the reproduction driver checks against.
namespace tables {

struct MomentRow {
  double a, mean, variance, sqrt_beta1, beta2;
};
const std::vector<MomentRow>& moment_rows();  // Table 1, all eight a

struct QuantileRow {
  int n;  // 0 = asymptotic law
  double a;
  double q01, q05, q10, q90, q95, q99;
};
const std::vector<QuantileRow>& quantile_rows();  // Table 2, all blocks

struct PowerCell {
  const char* alternative;
  int n;
  const char* statistic;
  double rate;  // in [0,1]
};
const std::vector<PowerCell>& power_cells();  // 12-cell Table 3 subset

}  // namespace tables

enum class TableId { Table1, Table2, Table3Subset };

struct ReplicationBudget {
  std::uint64_t table2_reps = 20000;
  std::uint64_t table3_reps = 10000;
  std::uint64_t critical_reps = 20000;  // per-statistic H0 critical values
};

/// Batch driver: re-derives each reference cell and reports
/// {cell_id, paper_value, reproduced_value, std_error, tolerance, pass}.
/// Cells whose computation throws are reported with an "error" marker
/// instead of aborting the run.
nlohmann::json reproduce_table(TableId table, const ReplicationBudget& budget,
                               const SeedSpec& seed);

}  // namespace zbgof
