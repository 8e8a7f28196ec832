#include "sgb/tune.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <string>

#include "sgb/errors.hpp"
#include "sgb/learner.hpp"
#include "sgb/parallel.hpp"
#include "sgb/rng.hpp"

namespace sgb {

ResamplingPlan ResamplingPlan::kfold(Eigen::Index n, int k, std::uint64_t seed) {
    if (k < 2)
        throw FoldTooSmall("k-fold needs k >= 2 (a single fold leaves no "
                           "held-out observations)");
    if (static_cast<Eigen::Index>(k) > n)
        throw FoldTooSmall("k-fold with k > n leaves empty folds");
    ResamplingPlan plan;
    plan.kind = Kind::KFold;
    plan.seed = seed;
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    RngStream rng = RngStream::derive(seed, stream_purpose::kResampling);
    for (Eigen::Index i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    plan.train_rows.resize(static_cast<std::size_t>(k));
    plan.test_rows.resize(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < n; ++i) {
        const std::size_t fold = static_cast<std::size_t>(i) %
                                 static_cast<std::size_t>(k);
        plan.test_rows[fold].push_back(perm[static_cast<std::size_t>(i)]);
    }
    for (std::size_t f = 0; f < static_cast<std::size_t>(k); ++f) {
        std::sort(plan.test_rows[f].begin(), plan.test_rows[f].end());
        for (Eigen::Index i = 0; i < n; ++i)
            if (!std::binary_search(plan.test_rows[f].begin(),
                                    plan.test_rows[f].end(), i))
                plan.train_rows[f].push_back(i);
        if (plan.train_rows[f].empty())
            throw FoldTooSmall("fold " + std::to_string(f) +
                               " leaves an empty training set");
    }
    return plan;
}

ResamplingPlan ResamplingPlan::bootstrap(Eigen::Index n, int reps,
                                         std::uint64_t seed) {
    if (reps < 1) throw FoldTooSmall("bootstrap needs >= 1 replicate");
    if (n < 2) throw FoldTooSmall("bootstrap needs >= 2 observations");
    ResamplingPlan plan;
    plan.kind = Kind::Bootstrap;
    plan.seed = seed;
    plan.train_rows.resize(static_cast<std::size_t>(reps));
    plan.test_rows.resize(static_cast<std::size_t>(reps));
    for (int b = 0; b < reps; ++b) {
        RngStream rng = RngStream::derive(seed, stream_purpose::kResampling,
                                          static_cast<std::uint64_t>(b));
        std::vector<bool> drawn(static_cast<std::size_t>(n), false);
        auto& train = plan.train_rows[static_cast<std::size_t>(b)];
        train.reserve(static_cast<std::size_t>(n));
        for (Eigen::Index i = 0; i < n; ++i) {
            const Eigen::Index row = static_cast<Eigen::Index>(
                rng.below(static_cast<std::uint64_t>(n)));
            train.push_back(row);
            drawn[static_cast<std::size_t>(row)] = true;
        }
        std::sort(train.begin(), train.end());
        auto& test = plan.test_rows[static_cast<std::size_t>(b)];
        for (Eigen::Index i = 0; i < n; ++i)
            if (!drawn[static_cast<std::size_t>(i)]) test.push_back(i);
        if (test.empty())
            throw FoldTooSmall("bootstrap replicate " + std::to_string(b) +
                               " has no out-of-bag observations");
    }
    return plan;
}

namespace {

Dataset subset_rows(const Dataset& ds, const std::vector<Eigen::Index>& rows) {
    Dataset sub = ds;
    sub.x.resize(static_cast<Eigen::Index>(rows.size()), ds.ncol());
    sub.y.resize(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        sub.x.row(static_cast<Eigen::Index>(i)) = ds.x.row(rows[i]);
        sub.y[static_cast<Eigen::Index>(i)] = ds.y[rows[i]];
    }
    return sub;
}

Eigen::MatrixXd test_matrix(const Dataset& ds,
                            const std::vector<Eigen::Index>& rows) {
    Eigen::MatrixXd x(static_cast<Eigen::Index>(rows.size()), ds.ncol());
    for (std::size_t i = 0; i < rows.size(); ++i)
        x.row(static_cast<Eigen::Index>(i)) = ds.x.row(rows[i]);
    return x;
}

// Recomputes column standardization on the fold's training rows and applies
// it to the held-out rows. In-fold constant columns are screened to zero.
void refold(Dataset& sub, Eigen::MatrixXd& xte, int replicate) {
    for (Eigen::Index j = 0; j < sub.ncol(); ++j) {
        const double m = sub.x.col(j).mean();
        const double n = static_cast<double>(sub.nrow());
        const double sd =
            std::sqrt((sub.x.col(j).array() - m).square().sum() / (n - 1.0));
        if (sd <= 0.0) {
            std::cerr << "cv_risk: replicate " << replicate << ": column '"
                      << sub.column_names[static_cast<std::size_t>(j)]
                      << "' constant in fold, screened\n";
            sub.x.col(j).setZero();
            xte.col(j).setZero();
            continue;
        }
        sub.x.col(j) = (sub.x.col(j).array() - m) / sd;
        xte.col(j) = (xte.col(j).array() - m) / sd;
    }
}

// Builds the fold's learners. Resampling can degrade a block's rank below
// the target df (or to zero after screening); such learners are clamped to
// rank - 0.01, or skipped entirely at rank zero, instead of failing the
// whole tune run.
std::vector<BaseLearner> fold_learners(const Dataset& sub,
                                       const GroupStructure& gs, double alpha,
                                       int replicate) {
    try {
        return build_base_learners(sub, gs, alpha);
    } catch (const Error&) {
        std::vector<BaseLearner> learners;
        auto add = [&](const std::vector<Eigen::Index>& cols, LearnerKind kind,
                       double df, const std::string& label) {
            Eigen::MatrixXd values(sub.nrow(),
                                   static_cast<Eigen::Index>(cols.size()));
            for (std::size_t k = 0; k < cols.size(); ++k)
                values.col(static_cast<Eigen::Index>(k)) = sub.x.col(cols[k]);
            BaseLearner bl;
            bl.kind = kind;
            bl.label = label;
            bl.columns_ = cols;
            std::shared_ptr<DesignBlock> block;
            try {
                block = std::make_shared<DesignBlock>(cols, std::move(values));
            } catch (const Error&) {
                block = nullptr;  // all-zero block
            }
            if (!block || block->rank() == 0) {
                std::cerr << "cv_risk: replicate " << replicate
                          << ": learner '" << label
                          << "' has rank 0 in fold, skipped\n";
                return;
            }
            bl.block = std::move(block);
            const double rank = static_cast<double>(bl.block->rank());
            double target = df;
            if (target > rank) {
                target = rank - 0.01;
                std::cerr << "cv_risk: replicate " << replicate
                          << ": clamped df of learner '" << label << "' to "
                          << target << " (rank " << rank << ")\n";
            }
            bl.lambda = solve_lambda(*bl.block, target);
            bl.target_df = target;
            learners.push_back(std::move(bl));
        };
        if (alpha > 0.0)
            for (auto j : gs.covered_columns())
                add({j}, LearnerKind::Individual, alpha, sub.column_names[j]);
        if (alpha < 1.0)
            for (const auto& g : gs.groups())
                add(g.columns, LearnerKind::Group, 1.0 - alpha, g.name);
        if (learners.empty())
            throw FoldTooSmall("cv_risk: replicate " +
                               std::to_string(replicate) +
                               " has no usable learners");
        for (std::size_t i = 0; i < learners.size(); ++i)
            learners[i].id = static_cast<int>(i) + 1;
        return learners;
    }
}

}  // namespace

RiskCurve cv_risk(const Dataset& ds, const GroupStructure& gs, double alpha,
                  const BoostConfig& config, const ResamplingPlan& plan,
                  bool refold_standardize) {
    if (config.mstop < 1) throw OutOfRange("cv_risk: mstop must be >= 1");
    if (plan.replicates() == 0) throw FoldTooSmall("cv_risk: empty plan");

    RiskCurve curve;
    curve.risks.resize(static_cast<Eigen::Index>(plan.replicates()),
                       config.mstop + 1);

    parallel_for(plan.replicates(), [&](std::size_t b) {
        const auto& train = plan.train_rows[b];
        const auto& test = plan.test_rows[b];
        if (train.empty() || test.empty())
            throw FoldTooSmall("cv_risk: replicate " + std::to_string(b) +
                               " has an empty fold");
        Dataset sub = subset_rows(ds, train);
        Eigen::MatrixXd xte = test_matrix(ds, test);
        if (refold_standardize) refold(sub, xte, static_cast<int>(b));
        const auto learners =
            fold_learners(sub, gs, alpha, static_cast<int>(b));
        const auto weights = candidate_weights(learners);

        const double offset = config.offset_override
                                  ? *config.offset_override
                                  : config.family.offset(sub.y);
        const Eigen::Index nte = static_cast<Eigen::Index>(test.size());
        Eigen::VectorXd yte(nte);
        for (Eigen::Index i = 0; i < nte; ++i)
            yte[i] = ds.y[test[static_cast<std::size_t>(i)]];
        Eigen::VectorXd fte = Eigen::VectorXd::Constant(nte, offset);

        BoostState state;
        state.y = sub.y;
        state.f = Eigen::VectorXd::Constant(sub.nrow(), offset);
        state.coefficients = Eigen::VectorXd::Zero(sub.ncol());
        state.loss = config.family.loss(state.y, state.f);

        const double inv_nte = 1.0 / static_cast<double>(nte);
        curve.risks(static_cast<Eigen::Index>(b), 0) =
            config.family.loss(yte, fte) * inv_nte;
        for (int m = 1; m <= config.mstop; ++m) {
            const TraceRecord rec =
                boost_step(state, learners, weights, config);
            const auto& bl =
                learners[static_cast<std::size_t>(rec.learner_id - 1)];
            const auto& cols = bl.columns();
            for (Eigen::Index i = 0; i < nte; ++i) {
                double dot = 0.0;
                for (std::size_t k = 0; k < cols.size(); ++k)
                    dot += xte(i, cols[k]) *
                           rec.increment[static_cast<Eigen::Index>(k)];
                fte[i] += dot;
            }
            curve.risks(static_cast<Eigen::Index>(b), m) =
                config.family.loss(yte, fte) * inv_nte;
        }
    });

    curve.mean_curve = curve.risks.colwise().mean();
    curve.optimal = optimal_mstop(curve);
    return curve;
}

int optimal_mstop(const RiskCurve& curve) {
    if (curve.mean_curve.size() == 0)
        throw OutOfRange("optimal_mstop: empty curve");
    int best = 0;
    for (int m = 1; m < curve.mean_curve.size(); ++m)
        if (curve.mean_curve[m] < curve.mean_curve[best]) best = m;
    return best;
}

}  // namespace sgb
