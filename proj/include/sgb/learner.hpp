#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sgb/dataset.hpp"
#include "sgb/ridge.hpp"

namespace sgb {

enum class LearnerKind { Individual, Group };

// One candidate ridge regression: a column subset with a fixed penalty
// parameterized through its effective degrees of freedom.
struct BaseLearner {
    int id = 0;  // 1-based position in the registry
    LearnerKind kind = LearnerKind::Individual;
    double target_df = 0.0;
    double lambda = 0.0;
    std::string label;
    std::vector<Eigen::Index> columns_;
    // Null after deserialization; the model document stores the registry but
    // not the design values.
    std::shared_ptr<const DesignBlock> block;

    const std::vector<Eigen::Index>& columns() const { return columns_; }
    const char* kind_name() const {
        return kind == LearnerKind::Individual ? "individual" : "group";
    }
};

// The create_formula analog: one individual learner per covered column with
// df = alpha, then one group learner per group with df = 1 - alpha. alpha = 0
// drops the individual learners, alpha = 1 drops the group learners.
std::vector<BaseLearner> build_base_learners(const Dataset& ds,
                                             const GroupStructure& gs,
                                             double alpha);

// Group learners only, all at the same df; the registry used by the balance
// module for plain group boosting.
std::vector<BaseLearner> build_group_learners(const Dataset& ds,
                                              const GroupStructure& gs,
                                              double df);

// Re-solves lambda for a new df on an existing learner.
void set_target_df(BaseLearner& learner, double df);

}  // namespace sgb
