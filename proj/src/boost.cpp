#include "sgb/boost.hpp"

#include <string>

#include "sgb/errors.hpp"
#include "sgb/ridge.hpp"

namespace sgb {

const BaseLearner& BoostModel::learner_by_id(int id) const {
    if (id < 1 || id > static_cast<int>(learners.size()))
        throw OutOfRange("learner id " + std::to_string(id) +
                         " outside registry");
    return learners[static_cast<std::size_t>(id - 1)];
}

std::vector<Eigen::VectorXd> candidate_weights(
    const std::vector<BaseLearner>& learners) {
    std::vector<Eigen::VectorXd> weights;
    weights.reserve(learners.size());
    for (const auto& bl : learners)
        weights.push_back(selection_weights(*bl.block, bl.lambda));
    return weights;
}

std::size_t select_candidate(const std::vector<BaseLearner>& learners,
                             const std::vector<Eigen::VectorXd>& weights,
                             const Eigen::VectorXd& u,
                             std::vector<double>* rss_out) {
    if (learners.empty()) throw NoLearners("candidate set is empty");
    const double u2 = u.squaredNorm();
    if (rss_out) rss_out->assign(learners.size(), 0.0);
    std::size_t best = 0;
    double best_score = -1.0;
    for (std::size_t l = 0; l < learners.size(); ++l) {
        const double score =
            selection_score(*learners[l].block, weights[l], u);
        if (rss_out) (*rss_out)[l] = u2 - score;
        if (score > best_score) {
            best_score = score;
            best = l;
        }
    }
    return best;
}

TraceRecord boost_step(BoostState& state,
                       const std::vector<BaseLearner>& learners,
                       const std::vector<Eigen::VectorXd>& weights,
                       const BoostConfig& config) {
    const Eigen::VectorXd u =
        config.family.negative_gradient(state.y, state.f);

    TraceRecord rec;
    rec.iteration = ++state.iteration;
    rec.loss_before = state.loss;
    const std::size_t sel = select_candidate(
        learners, weights, u,
        config.record_candidate_rss ? &rec.candidate_rss : nullptr);

    const BaseLearner& bl = learners[sel];
    const RidgeFit ridge = ridge_fit(*bl.block, bl.lambda, u);
    rec.learner_id = bl.id;
    rec.increment = config.nu * ridge.coefficients;

    const auto& cols = bl.columns();
    for (std::size_t k = 0; k < cols.size(); ++k)
        state.coefficients[cols[k]] += rec.increment[static_cast<Eigen::Index>(k)];
    state.f += bl.block->values() * rec.increment;
    state.loss = config.family.loss(state.y, state.f);
    rec.loss_after = state.loss;
    return rec;
}

BoostModel fit(const Dataset& ds, const std::vector<BaseLearner>& learners,
               const BoostConfig& config) {
    if (learners.empty()) throw NoLearners("fit: no base-learners");
    if (config.mstop < 1)
        throw OutOfRange("fit: mstop must be >= 1, got " +
                         std::to_string(config.mstop));
    if (!(config.nu > 0.0) || config.nu > 1.0)
        throw OutOfRange("fit: nu must be in (0, 1]");

    const double offset = config.offset_override
                              ? *config.offset_override
                              : config.family.offset(ds.y);

    BoostState state;
    state.y = ds.y;
    state.f = Eigen::VectorXd::Constant(ds.nrow(), offset);
    state.coefficients = Eigen::VectorXd::Zero(ds.ncol());
    state.loss = config.family.loss(state.y, state.f);

    const auto weights = candidate_weights(learners);

    BoostModel model;
    model.nu = config.nu;
    model.mstop = config.mstop;
    model.family = config.family;
    model.offset = offset;
    model.learners = learners;
    model.column_names = ds.column_names;
    model.column_source = ds.column_source;
    model.standardization = ds.standardization;
    model.outcome_standardization = ds.outcome_standardization;
    model.outcome_name = ds.outcome_name;
    model.n_rows = ds.nrow();
    model.trace.reserve(static_cast<std::size_t>(config.mstop));
    for (int m = 0; m < config.mstop; ++m)
        model.trace.push_back(boost_step(state, learners, weights, config));
    model.coefficients = state.coefficients;
    model.fitted = state.f;
    return model;
}

Eigen::VectorXd predict(const BoostModel& model, const Eigen::MatrixXd& x_new,
                        bool response) {
    if (x_new.cols() != model.coefficients.size())
        throw DimensionMismatch("predict: x has " +
                                std::to_string(x_new.cols()) +
                                " columns, model has " +
                                std::to_string(model.coefficients.size()));
    Eigen::VectorXd f =
        (x_new * model.coefficients).array() + model.offset;
    return response ? model.family.response(f) : f;
}

BoostModel truncate(const BoostModel& model, int m) {
    if (m < 0 || m > model.mstop)
        throw OutOfRange("truncate: m = " + std::to_string(m) +
                         " outside [0, " + std::to_string(model.mstop) + "]");
    BoostModel out = model;
    out.mstop = m;
    out.trace.assign(model.trace.begin(), model.trace.begin() + m);
    out.coefficients = Eigen::VectorXd::Zero(model.coefficients.size());
    const bool have_blocks =
        !model.learners.empty() && model.learners.front().block != nullptr;
    if (have_blocks && model.n_rows > 0)
        out.fitted = Eigen::VectorXd::Constant(model.n_rows, model.offset);
    else
        out.fitted.resize(0);
    for (const auto& rec : out.trace) {
        const BaseLearner& bl = model.learner_by_id(rec.learner_id);
        const auto& cols = bl.columns();
        for (std::size_t k = 0; k < cols.size(); ++k)
            out.coefficients[cols[k]] +=
                rec.increment[static_cast<Eigen::Index>(k)];
        if (out.fitted.size() > 0)
            out.fitted += bl.block->values() * rec.increment;
    }
    return out;
}

}  // namespace sgb
