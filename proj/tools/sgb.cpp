#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sgb/balance.hpp"
#include "sgb/boost.hpp"
#include "sgb/csv.hpp"
#include "sgb/dataset.hpp"
#include "sgb/errors.hpp"
#include "sgb/interpret.hpp"
#include "sgb/learner.hpp"
#include "sgb/parallel.hpp"
#include "sgb/serialize.hpp"
#include "sgb/sim.hpp"
#include "sgb/tune.hpp"

namespace fs = std::filesystem;
using namespace sgb;

namespace {

// Exit codes: 0 success, 2 usage/validation, 1 numeric/runtime.
constexpr int kExitValidation = 2;
constexpr int kExitNumeric = 1;

struct CommonData {
    std::string data_path;
    std::string groups_path;
    std::string outcome = "y";
    std::string var_column;
    std::string group_column;
    std::string family = "gaussian";
    bool no_standardize = false;
    bool standardize_outcome = false;
};

void add_data_flags(CLI::App* cmd, CommonData& d) {
    cmd->add_option("--data", d.data_path, "data CSV (header row)")->required();
    cmd->add_option("--groups", d.groups_path,
                    "group CSV (variable_name,group_name)")
        ->required();
    cmd->add_option("--outcome", d.outcome, "outcome column name");
    cmd->add_option("--var-column", d.var_column,
                    "variable column in the group file");
    cmd->add_option("--group-column", d.group_column,
                    "group column in the group file");
    cmd->add_option("--family", d.family, "gaussian or binomial");
    cmd->add_flag("--no-standardize", d.no_standardize,
                  "skip predictor standardization");
    cmd->add_flag("--standardize-outcome", d.standardize_outcome,
                  "standardize a gaussian outcome");
}

std::pair<Dataset, GroupStructure> load_inputs(const CommonData& d) {
    const Family family = Family::parse(d.family);
    LoadOptions opts;
    opts.standardize_predictors = !d.no_standardize;
    opts.standardize_outcome = d.standardize_outcome;
    opts.family = family.kind();
    Dataset ds = load_dataset_file(d.data_path, d.outcome, opts);
    GroupStructure gs =
        GroupStructure::from_file(ds, d.groups_path, d.var_column, d.group_column);
    return {std::move(ds), std::move(gs)};
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

std::string importance_csv(const ImportanceTable& table) {
    std::ostringstream out;
    out << "reduction,blearner,predictor,selfreq,type,relative_importance\n";
    for (const auto& r : table.rows) {
        out << format_number(r.reduction) << ',' << csv_escape(r.learner) << ','
            << csv_escape(r.predictor) << ',' << format_number(r.selfreq) << ','
            << (r.kind == LearnerKind::Group ? "group" : "individual") << ','
            << format_number(r.relative_importance) << '\n';
    }
    return out.str();
}

std::string coefficients_raw_csv(const CoefficientTable& table) {
    std::ostringstream out;
    out << "variable,effect,blearner,predictor,type\n";
    for (const auto& r : table.raw) {
        out << csv_escape(r.variable) << ',' << format_number(r.effect) << ','
            << csv_escape(r.learner) << ',' << csv_escape(r.predictor) << ','
            << (r.kind == LearnerKind::Group ? "group" : "individual") << '\n';
    }
    return out.str();
}

std::string coefficients_aggregate_csv(const CoefficientTable& table) {
    std::ostringstream out;
    out << "variable,effect,learner,predictor\n";
    for (const auto& r : table.aggregate) {
        out << csv_escape(r.variable) << ',' << format_number(r.effect) << ','
            << csv_escape(r.learners) << ',' << csv_escape(r.predictors) << '\n';
    }
    return out.str();
}

std::string path_csv(const PathTable& table) {
    std::ostringstream out;
    out << "iteration,variable,value,updated_by\n";
    for (const auto& r : table.rows) {
        out << r.iteration << ',' << csv_escape(r.variable) << ','
            << format_number(r.value) << ',' << r.updated_by << '\n';
    }
    return out.str();
}

std::string dataset_csv(const Dataset& ds) {
    std::ostringstream out;
    for (Eigen::Index j = 0; j < ds.ncol(); ++j)
        out << csv_escape(ds.column_names[static_cast<std::size_t>(j)]) << ',';
    out << csv_escape(ds.outcome_name) << '\n';
    for (Eigen::Index i = 0; i < ds.nrow(); ++i) {
        for (Eigen::Index j = 0; j < ds.ncol(); ++j)
            out << format_number(ds.x(i, j)) << ',';
        out << format_number(ds.y[i]) << '\n';
    }
    return out.str();
}

std::string groups_csv(const Dataset& ds, const GroupStructure& gs) {
    // Emitted data files carry the expanded (indicator) columns, so the
    // group file references them by their expanded names.
    std::ostringstream out;
    out << "variable_name,group_name\n";
    for (const auto& g : gs.groups())
        for (auto c : g.columns)
            out << csv_escape(ds.column_names[static_cast<std::size_t>(c)])
                << ',' << csv_escape(g.name) << '\n';
    return out.str();
}

struct BalanceFlags {
    int reps = 3000;
    int iters = 20;
    double lr = 0.5;
    double gamma = 0.9;
    double eta = 0.5;
    double init_df = 0.5;
    double min_df = 0.01;
    double max_df = -1.0;  // <0 = per-learner rank - 0.01
    std::string target = "uniform";
    std::string null_dist = "normal";
    std::string update_space = "df";
    int fixed_learner = 0;
    double stop_threshold = -1.0;
    bool center_outcomes = false;
};

void add_balance_flags(CLI::App* cmd, BalanceFlags& b) {
    cmd->add_option("--reps", b.reps, "null outcomes per round (K)");
    cmd->add_option("--iters", b.iters, "rounds (R)");
    cmd->add_option("--lr", b.lr, "learning rate");
    cmd->add_option("--gamma", b.gamma, "learning-rate decay");
    cmd->add_option("--eta", b.eta, "rejection mixing weight");
    cmd->add_option("--init-df", b.init_df, "initial df");
    cmd->add_option("--min-df", b.min_df, "lower df clamp");
    cmd->add_option("--max-df", b.max_df,
                    "upper df clamp (default: rank - 0.01 per learner)");
    cmd->add_option("--target", b.target, "uniform or alpha:<value>");
    cmd->add_option("--null", b.null_dist, "null distribution: normal or gamma");
    cmd->add_option("--update-space", b.update_space, "df or log-lambda");
    cmd->add_option("--fix-learner", b.fixed_learner,
                    "freeze this learner id at init df");
    cmd->add_option("--stop-threshold", b.stop_threshold,
                    "early stop on imbalance below this value");
    cmd->add_flag("--center-outcomes", b.center_outcomes,
                  "subtract the empirical mean before each selection");
}

BalanceConfig to_config(const BalanceFlags& b, std::uint64_t seed) {
    BalanceConfig cfg;
    cfg.reps = b.reps;
    cfg.iters = b.iters;
    cfg.lr = b.lr;
    cfg.gamma = b.gamma;
    cfg.eta = b.eta;
    cfg.init_df = b.init_df;
    cfg.min_df = b.min_df;
    if (b.max_df >= 0.0) cfg.max_df = b.max_df;
    if (b.target == "uniform") {
        cfg.target = BalanceTargetKind::Uniform;
    } else if (b.target.rfind("alpha:", 0) == 0) {
        cfg.target = BalanceTargetKind::AlphaWeighted;
        auto v = parse_number(b.target.substr(6));
        if (!v) throw ParseError("bad --target value: " + b.target);
        cfg.target_alpha = *v;
    } else {
        throw ParseError("--target must be uniform or alpha:<value>");
    }
    if (b.null_dist == "normal")
        cfg.null_distribution = NullDistribution::StandardNormal;
    else if (b.null_dist == "gamma")
        cfg.null_distribution = NullDistribution::CenteredGamma;
    else
        throw ParseError("--null must be normal or gamma");
    if (b.update_space == "df")
        cfg.update_space = UpdateSpace::DegreesOfFreedom;
    else if (b.update_space == "log-lambda")
        cfg.update_space = UpdateSpace::LogLambda;
    else
        throw ParseError("--update-space must be df or log-lambda");
    if (b.fixed_learner > 0) cfg.fixed_learner = b.fixed_learner;
    if (b.stop_threshold >= 0.0) cfg.stop_threshold = b.stop_threshold;
    cfg.center_outcomes = b.center_outcomes;
    cfg.seed = seed;
    return cfg;
}

int count_kind(const std::vector<BaseLearner>& learners, LearnerKind kind) {
    int c = 0;
    for (const auto& bl : learners)
        if (bl.kind == kind) ++c;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sparse-group boosting with ridge base-learners and selection-frequency balancing"};
    app.require_subcommand(1);

    unsigned threads = 0;
    app.add_option("--threads", threads, "worker thread cap (0 = all cores)");

    // ---- fit ----
    auto* fit_cmd = app.add_subcommand("fit", "fit a sparse-group model");
    CommonData fit_data;
    add_data_flags(fit_cmd, fit_data);
    double alpha = 0.3, nu = 0.1;
    int mstop = 100;
    bool record_rss = false;
    std::string model_out = "model.json";
    fit_cmd->add_option("--alpha", alpha, "individual-learner df (mixing)");
    fit_cmd->add_option("--nu", nu, "learning rate");
    fit_cmd->add_option("--mstop", mstop, "boosting iterations");
    fit_cmd->add_flag("--record-rss", record_rss,
                      "record every candidate's RSS in the trace");
    fit_cmd->add_option("--model-out", model_out, "output model document");

    // ---- tune ----
    auto* tune_cmd = app.add_subcommand(
        "tune", "out-of-sample risk over iterations, optimal mstop");
    CommonData tune_data;
    add_data_flags(tune_cmd, tune_data);
    double t_alpha = 0.3, t_nu = 0.1;
    int t_mstop = 100, t_bootstrap = 25, t_kfold = 0;
    std::uint64_t t_seed = 1;
    bool refold = false;
    std::string curve_out, summary_out, refit_out;
    tune_cmd->add_option("--alpha", t_alpha, "individual-learner df (mixing)");
    tune_cmd->add_option("--nu", t_nu, "learning rate");
    tune_cmd->add_option("--mstop", t_mstop, "maximum iterations");
    tune_cmd->add_option("--bootstrap", t_bootstrap,
                         "bootstrap replicates (default plan)");
    tune_cmd->add_option("--kfold", t_kfold, "use k-fold instead of bootstrap");
    tune_cmd->add_option("--seed", t_seed, "resampling seed");
    tune_cmd->add_flag("--refold-standardize", refold,
                       "restandardize predictors within each training fold");
    tune_cmd->add_option("--curve-out", curve_out,
                         "risk curve CSV (replicate,iteration,loss)");
    tune_cmd->add_option("--summary-out", summary_out,
                         "mean curve CSV (iteration,mean_loss)");
    tune_cmd->add_option("--refit-out", refit_out,
                         "write the model truncated at the optimal mstop");

    // ---- balance ----
    auto* bal_cmd =
        app.add_subcommand("balance", "simulation-based df calibration");
    CommonData bal_data;
    add_data_flags(bal_cmd, bal_data);
    BalanceFlags bal_flags;
    add_balance_flags(bal_cmd, bal_flags);
    std::uint64_t bal_seed = 1;
    std::string learners_mode = "group";
    std::string out_prefix = "balance";
    double bal_alpha = 0.5;
    bal_cmd->add_option("--seed", bal_seed, "simulation seed");
    bal_cmd->add_option("--learners", learners_mode,
                        "group (group learners only) or all (p + G registry)");
    bal_cmd->add_option("--alpha", bal_alpha,
                        "df split when --learners all (individual = alpha)");
    bal_cmd->add_option("--out-prefix", out_prefix, "output file prefix");

    // ---- report ----
    auto* rep_cmd =
        app.add_subcommand("report", "importance, coefficients, path tables");
    std::string model_in, out_dir = ".";
    int n_predictors = 0;
    double prop = 0.0;
    int max_char_length = 0;
    rep_cmd->add_option("--model", model_in, "model document")->required();
    rep_cmd->add_option("--out-dir", out_dir, "output directory");
    rep_cmd->add_option("--n-predictors", n_predictors,
                        "display at most this many importance rows");
    rep_cmd->add_option("--prop", prop,
                        "display only rows with importance >= prop");
    rep_cmd->add_option("--max-char-length", max_char_length,
                        "truncate displayed labels to this many characters");

    // ---- simulate ----
    auto* sim_cmd = app.add_subcommand(
        "simulate", "scenario generators and the bias benchmark");
    bool linear_sim = false, bias_benchmark = false;
    int scenario_id = 0;
    std::uint64_t sim_seed = 1;
    std::string sim_out_dir = ".";
    BalanceFlags sim_bal_flags;
    sim_cmd->add_flag("--linear-sim", linear_sim,
                      "emit the linear simulation data + groups");
    sim_cmd->add_option("--scenario", scenario_id,
                        "emit one bias scenario (1..4)");
    sim_cmd->add_flag("--bias-benchmark", bias_benchmark,
                      "run the full bias benchmark");
    sim_cmd->add_option("--seed", sim_seed, "simulation seed");
    sim_cmd->add_option("--out-dir", sim_out_dir, "output directory");
    add_balance_flags(sim_cmd, sim_bal_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitValidation;
    }

    set_max_threads(threads);

    try {
        if (*fit_cmd) {
            auto [ds, gs] = load_inputs(fit_data);
            auto learners = build_base_learners(ds, gs, alpha);
            BoostConfig cfg;
            cfg.mstop = mstop;
            cfg.nu = nu;
            cfg.family = Family::parse(fit_data.family);
            cfg.record_candidate_rss = record_rss;
            BoostModel model = fit(ds, learners, cfg);
            save_model(model, model_out);

            int ind_sel = 0, grp_sel = 0;
            for (const auto& rec : model.trace) {
                if (model.learner_by_id(rec.learner_id).kind ==
                    LearnerKind::Group)
                    ++grp_sel;
                else
                    ++ind_sel;
            }
            std::cout << "iterations: " << model.mstop << "\n"
                      << "final_loss: "
                      << format_number(model.trace.back().loss_after) << "\n"
                      << "individual_learners: "
                      << count_kind(learners, LearnerKind::Individual) << "\n"
                      << "group_learners: "
                      << count_kind(learners, LearnerKind::Group) << "\n"
                      << "individual_selections: " << ind_sel << "\n"
                      << "group_selections: " << grp_sel << "\n"
                      << "model: " << model_out << "\n";
        } else if (*tune_cmd) {
            auto [ds, gs] = load_inputs(tune_data);
            BoostConfig cfg;
            cfg.mstop = t_mstop;
            cfg.nu = t_nu;
            cfg.family = Family::parse(tune_data.family);
            const ResamplingPlan plan =
                t_kfold > 0
                    ? ResamplingPlan::kfold(ds.nrow(), t_kfold, t_seed)
                    : ResamplingPlan::bootstrap(ds.nrow(), t_bootstrap, t_seed);
            const RiskCurve curve =
                cv_risk(ds, gs, t_alpha, cfg, plan, refold);
            const int mstar = optimal_mstop(curve);

            if (!curve_out.empty()) {
                std::ostringstream out;
                out << "replicate,iteration,loss\n";
                for (Eigen::Index b = 0; b < curve.risks.rows(); ++b)
                    for (Eigen::Index m = 0; m < curve.risks.cols(); ++m)
                        out << b << ',' << m << ','
                            << format_number(curve.risks(b, m)) << '\n';
                write_file(curve_out, out.str());
            }
            if (!summary_out.empty()) {
                std::ostringstream out;
                out << "iteration,mean_loss\n";
                for (Eigen::Index m = 0; m < curve.mean_curve.size(); ++m)
                    out << m << ',' << format_number(curve.mean_curve[m])
                        << '\n';
                write_file(summary_out, out.str());
            }
            if (!refit_out.empty()) {
                auto learners = build_base_learners(ds, gs, t_alpha);
                BoostConfig full = cfg;
                full.mstop = std::max(mstar, 1);
                BoostModel model = fit(ds, learners, full);
                if (mstar == 0) model = truncate(model, 0);
                save_model(model, refit_out);
            }
            std::cout << "optimal_mstop: " << mstar << "\n";
        } else if (*bal_cmd) {
            auto [ds, gs] = load_inputs(bal_data);
            BalanceConfig cfg = to_config(bal_flags, bal_seed);
            std::vector<BaseLearner> learners;
            if (learners_mode == "group") {
                if (cfg.target == BalanceTargetKind::AlphaWeighted)
                    learners = build_base_learners(ds, gs, bal_alpha);
                else
                    learners = build_group_learners(ds, gs, cfg.init_df);
            } else if (learners_mode == "all") {
                learners = build_base_learners(ds, gs, bal_alpha);
            } else {
                throw ParseError("--learners must be group or all");
            }
            const BalanceResult res = balance(learners, cfg);

            std::ostringstream head;
            head << "# reps=" << cfg.reps << " iters=" << cfg.iters
                 << " lr=" << format_number(cfg.lr)
                 << " gamma=" << format_number(cfg.gamma)
                 << " eta=" << format_number(cfg.eta)
                 << " init_df=" << format_number(cfg.init_df)
                 << " seed=" << cfg.seed << "\n";

            std::ostringstream dfout;
            dfout << head.str() << "learner,label,kind,df,lambda\n";
            for (std::size_t l = 0; l < learners.size(); ++l) {
                dfout << learners[l].id << ',' << csv_escape(learners[l].label)
                      << ',' << learners[l].kind_name() << ','
                      << format_number(
                             res.df_star[static_cast<Eigen::Index>(l)])
                      << ','
                      << format_number(
                             res.lambda_star[static_cast<Eigen::Index>(l)])
                      << '\n';
            }
            write_file(out_prefix + "_df.csv", dfout.str());

            std::ostringstream freq;
            freq << "round,learner,df,frequency\n";
            for (Eigen::Index r = 0; r < res.freq_history.rows(); ++r)
                for (Eigen::Index l = 0; l < res.freq_history.cols(); ++l)
                    freq << r + 1 << ',' << l + 1 << ','
                         << format_number(res.df_history(r, l)) << ','
                         << format_number(res.freq_history(r, l)) << '\n';
            write_file(out_prefix + "_freq.csv", freq.str());

            std::ostringstream imb;
            imb << "round,imbalance,accepted\n";
            for (Eigen::Index r = 0; r < res.imbalance_history.size(); ++r)
                imb << r + 1 << ','
                    << format_number(res.imbalance_history[r]) << ','
                    << (res.accepted[static_cast<std::size_t>(r)] ? 1 : 0)
                    << '\n';
            write_file(out_prefix + "_imbalance.csv", imb.str());

            std::cout << "best_round: " << res.best_round + 1 << "\n"
                      << "best_imbalance: "
                      << format_number(res.best_imbalance) << "\n"
                      << "df_star:";
            for (Eigen::Index l = 0; l < res.df_star.size(); ++l)
                std::cout << ' ' << format_number(res.df_star[l]);
            std::cout << "\n";
        } else if (*rep_cmd) {
            const BoostModel model = load_model(model_in);
            const ImportanceTable imp = variable_importance(model);
            const CoefficientTable coef = coefficients(model);
            const PathTable path = coefficient_path(model);

            fs::create_directories(out_dir);
            write_file((fs::path(out_dir) / "importance.csv").string(),
                       importance_csv(imp));
            write_file((fs::path(out_dir) / "coefficients_raw.csv").string(),
                       coefficients_raw_csv(coef));
            write_file(
                (fs::path(out_dir) / "coefficients_aggregate.csv").string(),
                coefficients_aggregate_csv(coef));
            write_file((fs::path(out_dir) / "path.csv").string(),
                       path_csv(path));

            // Display copy: filters apply here only, shares stay global.
            auto shorten = [&](std::string s) {
                if (max_char_length > 0 &&
                    s.size() > static_cast<std::size_t>(max_char_length))
                    s = s.substr(0, static_cast<std::size_t>(max_char_length));
                return s;
            };
            int shown = 0;
            std::cout
                << "reduction,blearner,predictor,selfreq,type,relative_"
                   "importance\n";
            for (const auto& r : imp.rows) {
                if (n_predictors > 0 && shown >= n_predictors) break;
                if (prop > 0.0 && r.relative_importance < prop) continue;
                std::cout << format_number(r.reduction) << ','
                          << csv_escape(shorten(r.learner)) << ','
                          << csv_escape(shorten(r.predictor)) << ','
                          << format_number(r.selfreq) << ','
                          << (r.kind == LearnerKind::Group ? "group"
                                                           : "individual")
                          << ',' << format_number(r.relative_importance)
                          << '\n';
                ++shown;
            }
            std::cout << "group_importance: "
                      << format_number(imp.group_importance) << "\n"
                      << "individual_importance: "
                      << format_number(imp.individual_importance) << "\n";
        } else if (*sim_cmd) {
            fs::create_directories(sim_out_dir);
            const int modes = (linear_sim ? 1 : 0) + (scenario_id > 0 ? 1 : 0) +
                              (bias_benchmark ? 1 : 0);
            if (modes != 1)
                throw ParseError(
                    "choose exactly one of --linear-sim, --scenario, "
                    "--bias-benchmark");
            if (linear_sim) {
                const LinearSim sim = gen_linear_sim(sim_seed);
                write_file((fs::path(sim_out_dir) / "data.csv").string(),
                           dataset_csv(sim.ds));
                write_file((fs::path(sim_out_dir) / "groups.csv").string(),
                           groups_csv(sim.ds, sim.gs));
                std::cout << "rows: " << sim.ds.nrow()
                          << "\ncolumns: " << sim.ds.ncol() + 1
                          << "\ngroups: " << sim.gs.size() << "\n";
            } else if (scenario_id > 0) {
                const ScenarioData sc = gen_scenario(scenario_id, sim_seed);
                write_file((fs::path(sim_out_dir) / "data.csv").string(),
                           dataset_csv(sc.ds));
                write_file((fs::path(sim_out_dir) / "groups.csv").string(),
                           groups_csv(sc.ds, sc.gs));
                std::cout << "scenario: " << sc.id << "\nrows: " << sc.ds.nrow()
                          << "\ncolumns: " << sc.ds.ncol() + 1
                          << "\ngroups: " << sc.gs.size() << "\n";
            } else {
                BalanceConfig cfg = to_config(sim_bal_flags, sim_seed);
                const BiasReport report =
                    run_bias_experiment({1, 2, 3, 4}, cfg);
                std::ostringstream out;
                out << "scenario,group,equal_lambda,equal_df,group_adjustment,"
                       "df_used\n";
                for (const auto& r : report.rows)
                    out << r.scenario << ',' << csv_escape(r.group) << ','
                        << format_number(r.equal_lambda) << ','
                        << format_number(r.equal_df) << ','
                        << format_number(r.balanced) << ','
                        << format_number(r.df_used) << '\n';
                const std::string path =
                    (fs::path(sim_out_dir) / "bias_benchmark.csv").string();
                write_file(path, out.str());
                std::cout << out.str();
            }
        }
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const MissingOutcome& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NonNumericColumn& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ConstantColumn& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const OutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const FoldTooSmall& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const EmptyModel& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NoLearners& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return 0;
}
