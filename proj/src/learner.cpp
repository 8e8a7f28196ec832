#include "sgb/learner.hpp"

#include "sgb/errors.hpp"

namespace sgb {

namespace {

std::shared_ptr<const DesignBlock> block_for(const Dataset& ds,
                                             const std::vector<Eigen::Index>& cols) {
    Eigen::MatrixXd values(ds.nrow(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k)
        values.col(static_cast<Eigen::Index>(k)) = ds.x.col(cols[k]);
    return std::make_shared<DesignBlock>(cols, std::move(values));
}

BaseLearner make_learner(const Dataset& ds, std::vector<Eigen::Index> cols,
                         LearnerKind kind, double df, std::string label) {
    BaseLearner bl;
    bl.kind = kind;
    bl.label = std::move(label);
    bl.columns_ = cols;
    bl.block = block_for(ds, cols);
    try {
        bl.lambda = solve_lambda(*bl.block, df);
    } catch (const InfeasibleDf&) {
        throw InfeasibleDf("learner '" + bl.label + "': target df " +
                           std::to_string(df) + " exceeds rank " +
                           std::to_string(bl.block->rank()));
    }
    bl.target_df = df;
    return bl;
}

}  // namespace

std::vector<BaseLearner> build_base_learners(const Dataset& ds,
                                             const GroupStructure& gs,
                                             double alpha) {
    if (alpha < 0.0 || alpha > 1.0)
        throw InfeasibleDf("alpha must be in [0, 1], got " +
                           std::to_string(alpha));
    std::vector<BaseLearner> learners;
    if (alpha > 0.0) {
        for (auto j : gs.covered_columns())
            learners.push_back(make_learner(ds, {j}, LearnerKind::Individual,
                                            alpha, ds.column_names[j]));
    }
    if (alpha < 1.0) {
        for (const auto& g : gs.groups())
            learners.push_back(make_learner(ds, g.columns, LearnerKind::Group,
                                            1.0 - alpha, g.name));
    }
    if (learners.empty()) throw NoLearners("no base-learners constructed");
    for (std::size_t i = 0; i < learners.size(); ++i)
        learners[i].id = static_cast<int>(i) + 1;
    return learners;
}

std::vector<BaseLearner> build_group_learners(const Dataset& ds,
                                              const GroupStructure& gs,
                                              double df) {
    std::vector<BaseLearner> learners;
    for (const auto& g : gs.groups())
        learners.push_back(
            make_learner(ds, g.columns, LearnerKind::Group, df, g.name));
    for (std::size_t i = 0; i < learners.size(); ++i)
        learners[i].id = static_cast<int>(i) + 1;
    return learners;
}

void set_target_df(BaseLearner& learner, double df) {
    learner.lambda = solve_lambda(*learner.block, df);
    learner.target_df = df;
}

}  // namespace sgb
