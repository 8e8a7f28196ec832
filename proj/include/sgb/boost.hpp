#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sgb/dataset.hpp"
#include "sgb/family.hpp"
#include "sgb/learner.hpp"

namespace sgb {

struct BoostConfig {
    int mstop = 100;
    double nu = 0.1;
    Family family{FamilyKind::Gaussian};
    // Keeps every candidate's RSS in each trace record (bias diagnostics).
    bool record_candidate_rss = false;
    // Replaces the family's empirical offset; the balance module runs its
    // one-step selections with offset 0.
    std::optional<double> offset_override;
};

struct TraceRecord {
    int iteration = 0;   // 1-based
    int learner_id = 0;  // 1-based id of the selected learner
    Eigen::VectorXd increment;  // nu * ridge coefficients, learner's columns
    double loss_before = 0.0;
    double loss_after = 0.0;
    std::vector<double> candidate_rss;  // empty unless recorded
};

struct BoostModel {
    double nu = 1.0;
    int mstop = 0;
    Family family{FamilyKind::Gaussian};
    double offset = 0.0;
    Eigen::VectorXd coefficients;  // length p, aggregated over learners
    Eigen::VectorXd fitted;        // training-sample f at mstop (empty after
                                   // deserialization; blocks are not stored)
    std::vector<BaseLearner> learners;
    std::vector<TraceRecord> trace;

    // Dataset metadata carried for reporting and the model document.
    std::vector<std::string> column_names;
    std::vector<std::string> column_source;
    std::vector<Standardization> standardization;
    Standardization outcome_standardization;
    std::string outcome_name;
    Eigen::Index n_rows = 0;

    const BaseLearner& learner_by_id(int id) const;
};

// Mutable fitting state threaded through boost_step.
struct BoostState {
    Eigen::VectorXd y;
    Eigen::VectorXd f;
    Eigen::VectorXd coefficients;
    double loss = 0.0;
    int iteration = 0;
};

// Selection half of a boosting step: fits every learner to u by ridge and
// returns the argmin-RSS learner index (ties break to the lowest id).
// `weights` are the per-learner selection_weights at their lambdas.
std::size_t select_candidate(const std::vector<BaseLearner>& learners,
                             const std::vector<Eigen::VectorXd>& weights,
                             const Eigen::VectorXd& u,
                             std::vector<double>* rss_out = nullptr);

std::vector<Eigen::VectorXd> candidate_weights(
    const std::vector<BaseLearner>& learners);

// One full iteration of the sparse-group boosting loop.
TraceRecord boost_step(BoostState& state,
                       const std::vector<BaseLearner>& learners,
                       const std::vector<Eigen::VectorXd>& weights,
                       const BoostConfig& config);

BoostModel fit(const Dataset& ds, const std::vector<BaseLearner>& learners,
               const BoostConfig& config);

// Linear predictor offset + x_new * beta; response = true applies the
// family's inverse link. Caller supplies x_new on the training scale.
Eigen::VectorXd predict(const BoostModel& model, const Eigen::MatrixXd& x_new,
                        bool response = false);

// Model after stopping at iteration m: replays the first m trace records.
BoostModel truncate(const BoostModel& model, int m);

}  // namespace sgb
