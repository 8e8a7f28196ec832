#include "sgb/balance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sgb/boost.hpp"
#include "sgb/errors.hpp"
#include "sgb/parallel.hpp"
#include "sgb/rng.hpp"

namespace sgb {

Eigen::VectorXd target_vector(const BalanceConfig& cfg,
                              const std::vector<BaseLearner>& learners) {
    const Eigen::Index L = static_cast<Eigen::Index>(learners.size());
    Eigen::VectorXd t(L);
    if (cfg.target == BalanceTargetKind::Uniform) {
        t.setConstant(1.0 / static_cast<double>(L));
        return t;
    }
    bool any_ind = false, any_grp = false;
    for (const auto& bl : learners) {
        (bl.kind == LearnerKind::Individual ? any_ind : any_grp) = true;
    }
    if (!any_ind || !any_grp)
        throw NoLearners(
            "alpha-weighted target requires both individual and group "
            "learners");
    const double a = cfg.target_alpha;
    if (a < 0.0 || a > 1.0)
        throw OutOfRange("target alpha must be in [0, 1]");
    double total = 0.0;
    for (Eigen::Index l = 0; l < L; ++l) {
        t[l] = learners[static_cast<std::size_t>(l)].kind ==
                       LearnerKind::Individual
                   ? a
                   : 1.0 - a;
        total += t[l];
    }
    if (total <= 0.0)
        throw OutOfRange("target alpha produces an all-zero target");
    t /= total;
    return t;
}

Eigen::VectorXd null_outcome(Eigen::Index n, const BalanceConfig& cfg,
                             std::uint64_t round, std::uint64_t k,
                             std::uint64_t purpose) {
    if (purpose == 0) purpose = stream_purpose::kBalanceReplicate;
    RngStream rng = RngStream::derive(cfg.seed, purpose, round, k);
    Eigen::VectorXd y(n);
    if (cfg.null_distribution == NullDistribution::StandardNormal) {
        for (Eigen::Index i = 0; i < n; ++i) y[i] = rng.normal();
    } else {
        // Gamma(shape 1, rate 1) centered by its mean.
        for (Eigen::Index i = 0; i < n; ++i) y[i] = rng.exponential() - 1.0;
    }
    return y;
}

Eigen::VectorXd selection_frequencies(const std::vector<BaseLearner>& learners,
                                      const BalanceConfig& cfg,
                                      std::uint64_t round,
                                      std::uint64_t purpose) {
    if (learners.empty()) throw NoLearners("selection_frequencies: no learners");
    if (cfg.reps < 1) throw OutOfRange("selection_frequencies: reps must be >= 1");
    const Eigen::Index n = learners.front().block->nrow();
    const auto weights = candidate_weights(learners);

    std::vector<int> winner(static_cast<std::size_t>(cfg.reps));
    parallel_for(static_cast<std::size_t>(cfg.reps), [&](std::size_t k) {
        Eigen::VectorXd y = null_outcome(n, cfg, round, k, purpose);
        if (cfg.center_outcomes) y.array() -= y.mean();
        winner[k] = static_cast<int>(select_candidate(learners, weights, y));
    });

    Eigen::VectorXd freq = Eigen::VectorXd::Zero(
        static_cast<Eigen::Index>(learners.size()));
    for (int w : winner) freq[w] += 1.0;
    freq /= static_cast<double>(cfg.reps);
    return freq;
}

namespace {

struct Bounds {
    Eigen::VectorXd lo_df, hi_df;
};

Bounds df_bounds(const BalanceConfig& cfg,
                 const std::vector<BaseLearner>& learners) {
    const Eigen::Index L = static_cast<Eigen::Index>(learners.size());
    Bounds b{Eigen::VectorXd(L), Eigen::VectorXd(L)};
    for (Eigen::Index l = 0; l < L; ++l) {
        const double rank =
            static_cast<double>(learners[static_cast<std::size_t>(l)].block->rank());
        b.lo_df[l] = cfg.min_df;
        b.hi_df[l] = std::isnan(cfg.max_df) ? rank - 0.01
                                            : std::min(cfg.max_df, rank);
        if (!(b.lo_df[l] > 0.0) || b.lo_df[l] >= b.hi_df[l])
            throw InfeasibleDf(
                "balance: invalid df bounds for learner '" +
                learners[static_cast<std::size_t>(l)].label + "' (min " +
                std::to_string(b.lo_df[l]) + ", max " +
                std::to_string(b.hi_df[l]) + ")");
    }
    return b;
}

}  // namespace

BalanceResult balance(const std::vector<BaseLearner>& learners,
                      const BalanceConfig& cfg) {
    const Eigen::Index L = static_cast<Eigen::Index>(learners.size());
    if (L < 2) throw NoLearners("balance: needs at least 2 learners");
    if (cfg.iters < 1) throw OutOfRange("balance: iters must be >= 1");
    if (!(cfg.lr > 0.0)) throw OutOfRange("balance: lr must be > 0");
    if (!(cfg.gamma > 0.0 && cfg.gamma < 1.0))
        throw OutOfRange("balance: gamma must be in (0, 1)");
    if (!(cfg.eta > 0.0 && cfg.eta < 1.0))
        throw OutOfRange("balance: eta must be in (0, 1)");
    if (!(cfg.init_df > 0.0 && cfg.init_df < 1.0))
        throw OutOfRange("balance: init_df must be in (0, 1)");
    if (cfg.fixed_learner &&
        (*cfg.fixed_learner < 1 || *cfg.fixed_learner > L))
        throw OutOfRange("balance: fixed learner id outside registry");

    const Bounds bounds = df_bounds(cfg, learners);
    const Eigen::VectorXd target = target_vector(cfg, learners);
    const bool log_space = cfg.update_space == UpdateSpace::LogLambda;

    // Working copy whose (df, lambda) track the current iterate.
    std::vector<BaseLearner> work = learners;

    // State vector: df, or log10(lambda) in the log-lambda variant.
    auto df_to_state = [&](Eigen::Index l, double df) {
        if (!log_space) return df;
        return std::log10(
            solve_lambda(*work[static_cast<std::size_t>(l)].block, df));
    };
    auto apply_state = [&](const Eigen::VectorXd& state) {
        for (Eigen::Index l = 0; l < L; ++l) {
            auto& bl = work[static_cast<std::size_t>(l)];
            if (log_space) {
                bl.lambda = std::pow(10.0, state[l]);
                bl.target_df = effective_df(*bl.block, bl.lambda);
            } else {
                set_target_df(bl, state[l]);
            }
        }
    };
    auto clamp_state = [&](Eigen::VectorXd state) {
        for (Eigen::Index l = 0; l < L; ++l) {
            if (log_space) {
                // df bounds translate to lambda bounds; df decreasing in
                // lambda swaps the ends.
                const double lo = std::log10(solve_lambda(
                    *work[static_cast<std::size_t>(l)].block, bounds.hi_df[l]));
                const double hi = std::log10(solve_lambda(
                    *work[static_cast<std::size_t>(l)].block, bounds.lo_df[l]));
                state[l] = std::clamp(state[l], lo, hi);
            } else {
                state[l] = std::clamp(state[l], bounds.lo_df[l], bounds.hi_df[l]);
            }
        }
        return state;
    };
    // Error sign: under-selected learners need more df, i.e. less lambda.
    const double direction = log_space ? -1.0 : 1.0;

    Eigen::VectorXd state(L);
    for (Eigen::Index l = 0; l < L; ++l)
        state[l] = df_to_state(l, std::clamp(cfg.init_df, bounds.lo_df[l],
                                             bounds.hi_df[l]));
    const Eigen::VectorXd init_state = state;
    Eigen::VectorXd best_state = state;

    BalanceResult result;
    result.freq_history.resize(cfg.iters, L);
    result.df_history.resize(cfg.iters, L);
    result.imbalance_history.resize(cfg.iters);
    result.accepted.assign(static_cast<std::size_t>(cfg.iters), false);

    double nu = cfg.lr;
    double best_imbalance = std::numeric_limits<double>::infinity();
    int best_round = 0;
    int rounds_run = 0;

    for (int r = 0; r < cfg.iters; ++r) {
        apply_state(state);
        for (Eigen::Index l = 0; l < L; ++l)
            result.df_history(r, l) = work[static_cast<std::size_t>(l)].target_df;

        const Eigen::VectorXd s = selection_frequencies(
            work, cfg, static_cast<std::uint64_t>(r));
        const Eigen::VectorXd error = target - s;
        const double imbalance = error.squaredNorm();
        result.freq_history.row(r) = s.transpose();
        result.imbalance_history[r] = imbalance;
        ++rounds_run;

        if (imbalance < best_imbalance) {
            result.accepted[static_cast<std::size_t>(r)] = true;
            best_imbalance = imbalance;
            best_state = state;
            best_round = r;
            state = best_state + nu * direction * error;
        } else {
            nu *= cfg.gamma;
            state = (1.0 - cfg.eta) * best_state +
                    cfg.eta * (state + nu * direction * error);
        }
        if (cfg.fixed_learner)
            state[*cfg.fixed_learner - 1] = init_state[*cfg.fixed_learner - 1];
        state = clamp_state(std::move(state));

        if (cfg.stop_threshold && imbalance < *cfg.stop_threshold) break;
    }

    if (rounds_run < cfg.iters) {
        result.freq_history.conservativeResize(rounds_run, L);
        result.df_history.conservativeResize(rounds_run, L);
        result.imbalance_history.conservativeResize(rounds_run);
        result.accepted.resize(static_cast<std::size_t>(rounds_run));
    }

    apply_state(best_state);
    result.df_star.resize(L);
    result.lambda_star.resize(L);
    for (Eigen::Index l = 0; l < L; ++l) {
        result.df_star[l] = work[static_cast<std::size_t>(l)].target_df;
        result.lambda_star[l] = work[static_cast<std::size_t>(l)].lambda;
    }
    result.best_imbalance = best_imbalance;
    result.best_round = best_round;
    return result;
}

}  // namespace sgb
