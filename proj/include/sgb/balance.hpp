#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "sgb/learner.hpp"

namespace sgb {

enum class NullDistribution { StandardNormal, CenteredGamma };

enum class BalanceTargetKind { Uniform, AlphaWeighted };

// The calibration walks either df space (default) or log10(lambda) space;
// the latter runs the same accept/reject logic with the sign flipped
// (more lambda = less df).
enum class UpdateSpace { DegreesOfFreedom, LogLambda };

struct BalanceConfig {
    int reps = 3000;      // K: null outcomes per round
    int iters = 20;       // R: rounds
    double lr = 0.5;      // nu_b
    double gamma = 0.9;   // learning-rate decay on rejection
    double eta = 0.5;     // mixing weight on rejection
    double init_df = 0.5; // c
    double min_df = 0.01;
    // NaN = rank - 0.01 per learner.
    double max_df = std::numeric_limits<double>::quiet_NaN();
    NullDistribution null_distribution = NullDistribution::StandardNormal;
    BalanceTargetKind target = BalanceTargetKind::Uniform;
    double target_alpha = 0.5;  // only for AlphaWeighted
    // Subtract the empirical mean from each simulated outcome before the
    // selection step. Off by default: the one-step competition runs on the
    // raw null draw.
    bool center_outcomes = false;
    UpdateSpace update_space = UpdateSpace::DegreesOfFreedom;
    // 1-based learner id whose df stays frozen at init_df (uniqueness device).
    std::optional<int> fixed_learner;
    // Early stop once the round imbalance drops below this value.
    std::optional<double> stop_threshold;
    std::uint64_t seed = 1;
};

struct BalanceResult {
    Eigen::VectorXd df_star;            // L
    Eigen::VectorXd lambda_star;        // L
    Eigen::MatrixXd freq_history;       // rounds x L
    Eigen::MatrixXd df_history;         // rounds x L (d at which the round measured)
    Eigen::VectorXd imbalance_history;  // rounds
    std::vector<bool> accepted;         // improvement flag per round
    double best_imbalance = 0.0;
    int best_round = 0;
};

// Target selection-probability vector: uniform 1/L, or masses proportional
// to alpha (individual) / 1-alpha (group), normalized.
Eigen::VectorXd target_vector(const BalanceConfig& cfg,
                              const std::vector<BaseLearner>& learners);

// Fraction of `reps` null outcomes on which each learner wins the one-step
// RSS competition at its current lambda. Replicate k of round `round` draws
// from an independently derived stream, so results are identical for any
// thread count. Exactly one winner per replicate; the result sums to 1.
Eigen::VectorXd selection_frequencies(const std::vector<BaseLearner>& learners,
                                      const BalanceConfig& cfg,
                                      std::uint64_t round = 0,
                                      std::uint64_t purpose = 0);

// Algorithm: iteratively adjust per-learner df so the null selection
// frequencies match the target. Returns the iterate with the smallest
// recorded imbalance; non-convergence is reported, not thrown.
BalanceResult balance(const std::vector<BaseLearner>& learners,
                      const BalanceConfig& cfg);

// Deterministic reconstruction of the null outcome used by replicate k of
// round `round`; exposed so tests can replay individual draws.
Eigen::VectorXd null_outcome(Eigen::Index n, const BalanceConfig& cfg,
                             std::uint64_t round, std::uint64_t k,
                             std::uint64_t purpose = 0);

}  // namespace sgb
