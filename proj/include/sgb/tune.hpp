#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "sgb/boost.hpp"
#include "sgb/dataset.hpp"

namespace sgb {

// Fold/replicate assignments, materialized up front so they are deterministic
// and identical for any execution order.
struct ResamplingPlan {
    enum class Kind { KFold, Bootstrap };

    Kind kind = Kind::Bootstrap;
    std::uint64_t seed = 0;
    std::vector<std::vector<Eigen::Index>> train_rows;  // bootstrap keeps duplicates
    std::vector<std::vector<Eigen::Index>> test_rows;

    std::size_t replicates() const { return train_rows.size(); }

    static ResamplingPlan kfold(Eigen::Index n, int k, std::uint64_t seed);
    static ResamplingPlan bootstrap(Eigen::Index n, int reps, std::uint64_t seed);
};

struct RiskCurve {
    // replicates x (mstop + 1): held-out loss per observation, iteration 0
    // (offset only) through mstop.
    Eigen::MatrixXd risks;
    Eigen::VectorXd mean_curve;
    int optimal = 0;  // argmin of the mean curve, smallest on ties
};

// Out-of-sample risk over boosting iterations. Each replicate refits on its
// in-sample rows (lambda re-solved on the in-sample blocks) and evaluates the
// family loss on held-out rows after every iteration.
//
// By default the predictors keep the full-sample standardization they were
// loaded with; refold_standardize recomputes mean/sd on each fold's training
// rows and applies them to that fold's held-out rows as well (columns that
// are constant within a fold are screened to zero with a warning).
RiskCurve cv_risk(const Dataset& ds, const GroupStructure& gs, double alpha,
                  const BoostConfig& config, const ResamplingPlan& plan,
                  bool refold_standardize = false);

// Argmin of the mean curve; smallest iteration on ties.
int optimal_mstop(const RiskCurve& curve);

}  // namespace sgb
