#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgb/balance.hpp"
#include "sgb/dataset.hpp"

namespace sgb {

// The linear simulation: n = 100, p = 200, 40 groups of 5, true effects on
// the first 20 columns, all columns and the outcome standardized.
struct LinearSim {
    Dataset ds;
    GroupStructure gs;
    Eigen::VectorXd beta_true;  // length 200 (pre-standardization scale)
};

LinearSim gen_linear_sim(std::uint64_t seed);

// Bias-benchmark scenarios:
//   1: n = 50,  groups {3-level categorical, binary, numeric}, normal outcome
//   2: n = 500, same design, normal outcome
//   3: n = 500, same design, gamma(1,1) outcome (centered by its mean)
//   4: n = 30,  numeric groups of 46 and 4 (p > n), normal outcome
// The 3-level categorical enters as raw one-hot indicator columns; the
// binary and continuous columns are standardized.
struct ScenarioData {
    int id = 0;
    Dataset ds;  // y holds one draw from the outcome sampler
    GroupStructure gs;
    NullDistribution outcome = NullDistribution::StandardNormal;
};

ScenarioData gen_scenario(int id, std::uint64_t seed);

struct BiasRow {
    int scenario = 0;
    std::string group;
    double equal_lambda = 0.0;
    double equal_df = 0.0;
    double balanced = 0.0;
    double df_used = 0.0;  // d* used by the balanced scheme
};

struct BiasReport {
    std::vector<BiasRow> rows;
};

// One-step selection frequencies per scenario and scheme: equal penalties
// (lambda = 0.1), equal df (0.5), and df from balance(). The balanced scheme
// calibrates under cfg.null_distribution (standard normal by default) and is
// evaluated, like the other schemes, under the scenario's outcome sampler.
BiasReport run_bias_experiment(const std::vector<int>& scenario_ids,
                               const BalanceConfig& cfg);

}  // namespace sgb
