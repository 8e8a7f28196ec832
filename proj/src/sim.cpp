#include "sgb/sim.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "sgb/errors.hpp"
#include "sgb/rng.hpp"

namespace sgb {

namespace {

void standardize_column(Eigen::Ref<Eigen::VectorXd> v) {
    const double m = v.mean();
    const double s = std::sqrt((v.array() - m).square().sum() /
                               static_cast<double>(v.size() - 1));
    if (s <= 0.0) throw ConstantColumn("simulated column is constant");
    v = (v.array() - m) / s;
}

}  // namespace

LinearSim gen_linear_sim(std::uint64_t seed) {
    const Eigen::Index n = 100, p = 200;
    RngStream rng = RngStream::derive(seed, stream_purpose::kSimDesign);

    Eigen::VectorXd beta(p);
    beta.setZero();
    beta.segment(0, 5).setConstant(5.0);
    beta[5] = 5.0; beta[6] = -5.0; beta[7] = 2.0;
    beta.segment(10, 5).setConstant(-5.0);
    beta[15] = 2.0; beta[16] = -3.0; beta[17] = 8.0;

    Eigen::MatrixXd x(n, p);
    for (Eigen::Index j = 0; j < p; ++j)
        for (Eigen::Index i = 0; i < n; ++i) x(i, j) = rng.normal();
    Eigen::VectorXd y = x * beta;
    for (Eigen::Index i = 0; i < n; ++i) y[i] += rng.normal();

    LinearSim sim;
    sim.beta_true = beta;
    sim.ds.x = std::move(x);
    for (Eigen::Index j = 0; j < p; ++j) {
        standardize_column(sim.ds.x.col(j));
        sim.ds.column_names.push_back("X" + std::to_string(j + 1));
        sim.ds.column_source.push_back(sim.ds.column_names.back());
    }
    standardize_column(y);
    sim.ds.y = std::move(y);
    sim.ds.standardization.assign(static_cast<std::size_t>(p), {});
    sim.ds.outcome_name = "y";

    std::vector<std::pair<std::string, std::string>> pairs;
    for (Eigen::Index j = 0; j < p; ++j)
        pairs.emplace_back("X" + std::to_string(j + 1),
                           std::to_string(j / 5 + 1));
    sim.gs = GroupStructure::from_assignments(sim.ds, pairs);
    return sim;
}

ScenarioData gen_scenario(int id, std::uint64_t seed) {
    if (id < 1 || id > 4)
        throw OutOfRange("scenario id must be 1..4, got " + std::to_string(id));

    ScenarioData sc;
    sc.id = id;
    sc.outcome = id == 3 ? NullDistribution::CenteredGamma
                         : NullDistribution::StandardNormal;
    RngStream rng = RngStream::derive(seed, stream_purpose::kSimDesign,
                                      static_cast<std::uint64_t>(id));
    Dataset& ds = sc.ds;
    std::vector<std::pair<std::string, std::string>> pairs;

    if (id <= 3) {
        const Eigen::Index n = id == 1 ? 50 : 500;
        ds.x.resize(n, 5);
        // 3-level categorical, uniform levels, raw one-hot.
        const char* levels[3] = {"a", "b", "c"};
        std::vector<int> cat(static_cast<std::size_t>(n));
        for (auto& c : cat) c = static_cast<int>(rng.below(3));
        for (int l = 0; l < 3; ++l) {
            for (Eigen::Index i = 0; i < n; ++i)
                ds.x(i, l) = cat[static_cast<std::size_t>(i)] == l ? 1.0 : 0.0;
            ds.column_names.push_back(std::string("cat3.") + levels[l]);
            ds.column_source.push_back("cat3");
        }
        // Binary predictor (two categories as one numeric column).
        for (Eigen::Index i = 0; i < n; ++i)
            ds.x(i, 3) = static_cast<double>(rng.below(2));
        standardize_column(ds.x.col(3));
        ds.column_names.push_back("bin");
        ds.column_source.push_back("bin");
        // Continuous predictor.
        for (Eigen::Index i = 0; i < n; ++i) ds.x(i, 4) = rng.normal();
        standardize_column(ds.x.col(4));
        ds.column_names.push_back("x");
        ds.column_source.push_back("x");

        pairs = {{"cat3", "1"}, {"bin", "2"}, {"x", "3"}};
    } else {
        const Eigen::Index n = 30, p = 50;
        ds.x.resize(n, p);
        for (Eigen::Index j = 0; j < p; ++j) {
            for (Eigen::Index i = 0; i < n; ++i) ds.x(i, j) = rng.normal();
            standardize_column(ds.x.col(j));
            ds.column_names.push_back("x" + std::to_string(j + 1));
            ds.column_source.push_back(ds.column_names.back());
            pairs.emplace_back(ds.column_names.back(), j < 46 ? "1" : "2");
        }
    }

    ds.standardization.assign(static_cast<std::size_t>(ds.ncol()), {});
    ds.outcome_name = "y";
    // One outcome draw, matching the balance module's stream derivation so
    // emitted scenario files are reproducible.
    BalanceConfig draw_cfg;
    draw_cfg.seed = seed;
    draw_cfg.null_distribution = sc.outcome;
    ds.y = null_outcome(ds.nrow(), draw_cfg, static_cast<std::uint64_t>(id), 0,
                        stream_purpose::kSimOutcome);
    sc.gs = GroupStructure::from_assignments(ds, pairs);
    return sc;
}

BiasReport run_bias_experiment(const std::vector<int>& scenario_ids,
                               const BalanceConfig& cfg) {
    BiasReport report;
    for (int id : scenario_ids) {
        const std::uint64_t scenario_seed =
            splitmix64(cfg.seed ^ splitmix64(9000u + static_cast<unsigned>(id)));
        ScenarioData sc = gen_scenario(id, scenario_seed);
        auto learners = build_group_learners(sc.ds, sc.gs, 0.5);
        const std::size_t G = learners.size();

        // Evaluation config: the scenario's own outcome distribution.
        BalanceConfig eval = cfg;
        eval.seed = scenario_seed;
        eval.null_distribution = sc.outcome;

        // equal lambda = 0.1
        auto equal_lambda = learners;
        for (auto& bl : equal_lambda) {
            bl.lambda = 0.1;
            bl.target_df = effective_df(*bl.block, bl.lambda);
        }
        const Eigen::VectorXd f_lambda = selection_frequencies(
            equal_lambda, eval, 1, stream_purpose::kBalanceEvaluate);

        // equal df = 0.5
        auto equal_df = learners;
        for (auto& bl : equal_df) set_target_df(bl, 0.5);
        const Eigen::VectorXd f_df = selection_frequencies(
            equal_df, eval, 2, stream_purpose::kBalanceEvaluate);

        // balanced: calibrate under cfg's null, evaluate under the scenario's.
        BalanceConfig calib = cfg;
        calib.seed = scenario_seed;
        const BalanceResult bal = balance(learners, calib);
        auto balanced = learners;
        for (std::size_t g = 0; g < G; ++g)
            set_target_df(balanced[g],
                          bal.df_star[static_cast<Eigen::Index>(g)]);
        const Eigen::VectorXd f_bal = selection_frequencies(
            balanced, eval, 3, stream_purpose::kBalanceEvaluate);

        for (std::size_t g = 0; g < G; ++g) {
            BiasRow row;
            row.scenario = id;
            row.group = learners[g].label;
            row.equal_lambda = f_lambda[static_cast<Eigen::Index>(g)];
            row.equal_df = f_df[static_cast<Eigen::Index>(g)];
            row.balanced = f_bal[static_cast<Eigen::Index>(g)];
            row.df_used = bal.df_star[static_cast<Eigen::Index>(g)];
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace sgb
