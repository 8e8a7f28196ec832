// Acceptance suite: one line per criterion, exit code = number of failures.
// Run via ctest (test name "acceptance") or directly:
//   ./tests/acceptance [seed]

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sgb/balance.hpp"
#include "sgb/boost.hpp"
#include "sgb/csv.hpp"
#include "sgb/interpret.hpp"
#include "sgb/learner.hpp"
#include "sgb/parallel.hpp"
#include "sgb/ridge.hpp"
#include "sgb/rng.hpp"
#include "sgb/sim.hpp"
#include "sgb/tune.hpp"

namespace fs = std::filesystem;
using namespace sgb;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << "criterion " << criterion << ": "
              << (pass ? "PASS" : "FAIL") << " - " << detail << "\n";
    if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v, int digits = 3) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(digits);
    out << v;
    return out.str();
}

std::string freq_list(const std::vector<double>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += fmt(v[i]);
    }
    return out + ")";
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t seed =
        argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
    std::cout << "acceptance seed: " << seed << "\n";

    // --- Criteria 1-3, 10: the bias benchmark --------------------------
    BalanceConfig cfg;  // defaults: 3000 reps, 20 iters, lr .5, gamma .9
    cfg.seed = seed;
    set_max_threads(1);
    auto t0 = Clock::now();
    const BiasReport bias = run_bias_experiment({1, 2, 3, 4}, cfg);
    const double bias_seconds = seconds_since(t0);
    set_max_threads(0);

    auto scheme = [&](int scenario, auto member) {
        std::vector<double> out;
        for (const auto& r : bias.rows)
            if (r.scenario == scenario) out.push_back(r.*member);
        return out;
    };

    {  // criterion 1: equal lambda, scenario 1
        const std::vector<double> got = scheme(1, &BiasRow::equal_lambda);
        const std::vector<double> want = {0.699, 0.157, 0.144};
        double err = 0.0;
        for (std::size_t g = 0; g < 3; ++g)
            err = std::max(err, std::abs(got[g] - want[g]));
        report(1, err <= 0.05 && bias_seconds < 600.0,
               "equal-lambda scenario 1 " + freq_list(got) +
                   " vs reference (0.699, 0.157, 0.144), max err " + fmt(err) +
                   "; benchmark run " + fmt(bias_seconds, 1) + "s");
    }

    {  // criterion 2: equal df, scenarios 1-3
        const std::map<int, std::vector<double>> reference = {
            {1, {0.453, 0.364, 0.183}},
            {2, {0.407, 0.419, 0.174}},
            {3, {0.417, 0.408, 0.175}}};
        double err = 0.0;
        std::string detail;
        for (const auto& [sid, want] : reference) {
            const std::vector<double> got = scheme(sid, &BiasRow::equal_df);
            for (std::size_t g = 0; g < 3; ++g)
                err = std::max(err, std::abs(got[g] - want[g]));
            detail += "s" + std::to_string(sid) + " " + freq_list(got) + " ";
        }
        report(2, err <= 0.03,
               "equal-df " + detail + "max err vs reference " + fmt(err) +
                   " (tolerance 0.03)");
    }

    {  // criterion 3: balanced frequencies near uniform
        double dev123 = 0.0;
        for (int sid : {1, 2, 3}) {
            const std::vector<double> got = scheme(sid, &BiasRow::balanced);
            for (double f : got) dev123 = std::max(dev123, std::abs(f - 1.0 / 3));
        }
        const std::vector<double> s4 = scheme(4, &BiasRow::balanced);
        double dev4 = 0.0;
        for (double f : s4) dev4 = std::max(dev4, std::abs(f - 0.5));
        report(3, dev123 <= 0.04 && dev4 <= 0.05 && bias_seconds < 600.0,
               "balanced max dev: scenarios 1-3 " + fmt(dev123) +
                   " (<= 0.04), scenario 4 " + fmt(dev4) + " (<= 0.05)");
    }

    // --- Criterion 4: df machinery -------------------------------------
    {
        RngStream pick = RngStream::derive(seed, 0xacc4);
        double worst_rt = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            const Eigen::Index p = 1 + static_cast<Eigen::Index>(pick.below(6));
            const Eigen::Index n =
                p + 2 + static_cast<Eigen::Index>(pick.below(24));
            Eigen::MatrixXd x(n, p);
            for (Eigen::Index j = 0; j < p; ++j)
                for (Eigen::Index i = 0; i < n; ++i) x(i, j) = pick.normal();
            std::vector<Eigen::Index> cols;
            for (Eigen::Index j = 0; j < p; ++j) cols.push_back(j);
            const DesignBlock block(cols, x);
            const double target =
                0.05 +
                pick.uniform01() * (static_cast<double>(block.rank()) - 0.05);
            const double lambda = solve_lambda(block, target);
            worst_rt = std::max(
                worst_rt, std::abs(effective_df(block, lambda) - target));
        }
        double worst_dense = 0.0;
        for (Eigen::Index p : {2, 5, 8}) {
            const Eigen::Index n = p == 8 ? 30 : 4 * p;
            Eigen::MatrixXd x(n, p);
            for (Eigen::Index j = 0; j < p; ++j)
                for (Eigen::Index i = 0; i < n; ++i) x(i, j) = pick.normal();
            std::vector<Eigen::Index> cols;
            for (Eigen::Index j = 0; j < p; ++j) cols.push_back(j);
            const DesignBlock block(cols, x);
            for (double lambda : {1e-3, 0.1, 1.0, 25.0}) {
                Eigen::MatrixXd gram = x.transpose() * x;
                gram.diagonal().array() += lambda;
                const Eigen::MatrixXd h =
                    x * gram.ldlt().solve(x.transpose().eval());
                const double dense = 2.0 * h.trace() - (h * h).trace();
                worst_dense = std::max(
                    worst_dense,
                    std::abs(effective_df(block, lambda) - dense));
            }
        }
        report(4, worst_rt <= 1e-8 && worst_dense <= 1e-9,
               "df round trip worst " + fmt(worst_rt * 1e9, 3) +
                   "e-9; SVD-vs-dense worst " + fmt(worst_dense * 1e10, 3) +
                   "e-10");
    }

    // --- Criterion 5: boosting oracle ----------------------------------
    {
        RngStream rng = RngStream::derive(seed, 0xacc5);
        // one step with a single lambda-0 learner equals OLS on the block
        const Eigen::Index n = 24, p = 3;
        Eigen::MatrixXd x(n, p);
        for (Eigen::Index j = 0; j < p; ++j)
            for (Eigen::Index i = 0; i < n; ++i) x(i, j) = rng.normal();
        Eigen::VectorXd y = rng.normal_vector(n);
        Dataset ds;
        ds.x = x;
        ds.y = y;
        for (Eigen::Index j = 0; j < p; ++j) {
            ds.column_names.push_back("c" + std::to_string(j));
            ds.column_source.push_back(ds.column_names.back());
        }
        ds.standardization.assign(3, {});
        ds.outcome_name = "y";
        BaseLearner bl;
        bl.id = 1;
        bl.kind = LearnerKind::Group;
        bl.label = "all";
        bl.columns_ = {0, 1, 2};
        bl.block = std::make_shared<DesignBlock>(bl.columns_, x);
        bl.lambda = 0.0;
        bl.target_df = 3.0;
        BoostConfig bc;
        bc.mstop = 1;
        bc.nu = 1.0;
        bc.offset_override = 0.0;
        const BoostModel one = fit(ds, {bl}, bc);
        const Eigen::VectorXd ols =
            (x.transpose() * x).ldlt().solve(x.transpose() * y);
        const double err_one = (one.coefficients - ols).norm() / ols.norm();

        // orthonormal design: p component-wise steps recover OLS
        Eigen::MatrixXd raw(20, 6);
        for (Eigen::Index j = 0; j < 6; ++j)
            raw.col(j) = rng.normal_vector(20);
        const Eigen::MatrixXd q =
            Eigen::HouseholderQR<Eigen::MatrixXd>(raw).householderQ() *
            Eigen::MatrixXd::Identity(20, 6);
        Eigen::VectorXd y2 = rng.normal_vector(20);
        Dataset ds2;
        ds2.x = q;
        ds2.y = y2;
        std::vector<std::pair<std::string, std::string>> pairs;
        for (Eigen::Index j = 0; j < 6; ++j) {
            ds2.column_names.push_back("q" + std::to_string(j));
            ds2.column_source.push_back(ds2.column_names.back());
            pairs.emplace_back(ds2.column_names.back(), "g");
        }
        ds2.standardization.assign(6, {});
        ds2.outcome_name = "y";
        const GroupStructure gs2 =
            GroupStructure::from_assignments(ds2, pairs);
        auto comp = build_base_learners(ds2, gs2, 1.0);
        BoostConfig bc2;
        bc2.mstop = 6;
        bc2.nu = 1.0;
        bc2.offset_override = 0.0;
        const BoostModel six = fit(ds2, comp, bc2);
        const Eigen::VectorXd ols2 = q.transpose() * y2;
        const double err_orth =
            (six.coefficients - ols2).norm() / ols2.norm();

        report(5, err_one <= 1e-8 && err_orth <= 1e-10,
               "one-step vs OLS rel err " + fmt(err_one * 1e10, 3) +
                   "e-10; orthonormal replay rel err " +
                   fmt(err_orth * 1e12, 3) + "e-12");
    }

    // --- Criterion 6: Binomial gradient vs finite differences ----------
    {
        const Family fam(FamilyKind::Binomial);
        RngStream rng = RngStream::derive(seed, 0xacc6);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const Eigen::Index n = 12;
            Eigen::VectorXd y(n), f(n);
            for (Eigen::Index i = 0; i < n; ++i) {
                y[i] = rng.uniform01() < 0.5 ? -1.0 : 1.0;
                f[i] = 2.5 * rng.normal();
            }
            const Eigen::VectorXd g = fam.negative_gradient(y, f);
            const double h = 1e-6;
            for (Eigen::Index i = 0; i < n; ++i) {
                // Differentiate through the loss restricted to coordinate i:
                // the loss is additive, and the one-term difference keeps the
                // oracle's roundoff far below the 1e-6 tolerance.
                Eigen::VectorXd yi(1), fp(1), fm(1);
                yi[0] = y[i];
                fp[0] = f[i] + h;
                fm[0] = f[i] - h;
                const double fd =
                    -(fam.loss(yi, fp) - fam.loss(yi, fm)) / (2.0 * h);
                const double scale = std::max(std::abs(g[i]), 1e-3);
                worst = std::max(worst, std::abs(g[i] - fd) / scale);
            }
        }
        report(6, worst <= 1e-6,
               "binomial gradient vs central differences, worst rel err " +
                   fmt(worst * 1e7, 3) + "e-7");
    }

    // --- Criterion 7: the simulated-data workflow ----------------------
    {
        t0 = Clock::now();
        const LinearSim sim = gen_linear_sim(seed);
        BoostConfig bc;
        bc.mstop = 600;
        bc.nu = 1.0;
        const ResamplingPlan plan =
            ResamplingPlan::bootstrap(sim.ds.nrow(), 25, seed);
        const RiskCurve curve = cv_risk(sim.ds, sim.gs, 0.4, bc, plan);
        const int mstar = optimal_mstop(curve);

        auto learners = build_base_learners(sim.ds, sim.gs, 0.4);
        BoostConfig fit_cfg = bc;
        fit_cfg.mstop = std::max(mstar, 1);
        const BoostModel model = fit(sim.ds, learners, fit_cfg);
        const ImportanceTable imp = variable_importance(model);
        double support_share = 0.0;
        for (const auto& row : imp.rows) {
            const auto& cols = model.learner_by_id(row.learner_id).columns();
            bool inside = true;
            for (auto c : cols)
                if (c >= 20) inside = false;
            if (inside) support_share += row.relative_importance;
        }
        const double group_share = imp.group_importance;
        const double secs = seconds_since(t0);
        const bool pass = mstar >= 50 && mstar <= 450 &&
                          support_share >= 0.85 && group_share >= 0.3 &&
                          group_share <= 0.7 && secs < 300.0;
        report(7, pass,
               "m* = " + std::to_string(mstar) +
                   " (band [50,450]); support importance " +
                   fmt(support_share) + " (>= 0.85); group share " +
                   fmt(group_share) + " ([0.3,0.7]); " + fmt(secs, 1) + "s");
    }

    // --- Criterion 8: interpretation exactness -------------------------
    {
        const LinearSim sim = gen_linear_sim(seed + 1);
        auto learners = build_base_learners(sim.ds, sim.gs, 0.4);
        BoostConfig bc;
        bc.mstop = 120;
        bc.nu = 1.0;
        const BoostModel model = fit(sim.ds, learners, bc);
        const ImportanceTable imp = variable_importance(model);
        double rel = 0.0;
        for (const auto& r : imp.rows) rel += r.relative_importance;
        bool ok = std::abs(rel - 1.0) <= 1e-10;

        const CoefficientTable coef = coefficients(model);
        std::map<std::string, double> sums;
        for (const auto& r : coef.raw) sums[r.variable] += r.effect;
        for (const auto& a : coef.aggregate)
            ok = ok && a.effect == sums[a.variable];

        const PathTable path = coefficient_path(model);
        std::map<std::string, double> final_slice;
        for (const auto& r : path.rows)
            if (r.iteration == model.mstop) final_slice[r.variable] = r.value;
        for (const auto& a : coef.aggregate)
            ok = ok && final_slice[a.variable] == a.effect;

        RngStream rng = RngStream::derive(seed, 0xacc8);
        for (int trial = 0; trial < 5; ++trial) {
            const int m = 1 + static_cast<int>(rng.below(120));
            const BoostModel cut = truncate(model, m);
            const CoefficientTable cut_coef = coefficients(cut);
            std::map<std::string, double> slice;
            for (const auto& r : path.rows)
                if (r.iteration == m) slice[r.variable] = r.value;
            for (const auto& a : cut_coef.aggregate)
                ok = ok && slice[a.variable] == a.effect;
        }
        report(8, ok,
               "importance sums to 1 (err " + fmt(std::abs(rel - 1.0) * 1e12, 3) +
                   "e-12); aggregate = sum(raw) exact; path slices exact at "
                   "mstop and 5 random m");
    }

    // --- Criterion 9: CLI byte-determinism -----------------------------
    {
        const fs::path dir = fs::current_path() / "acceptance_scratch";
        fs::remove_all(dir);
        fs::create_directories(dir);
        auto run = [&](const std::string& args) {
            const std::string cmd = std::string(SGB_CLI_PATH) + " " + args +
                                    " > /dev/null 2>&1";
            return std::system(cmd.c_str()) == 0;
        };
        bool ok = true;
        ok &= run("simulate --linear-sim --seed 42 --out-dir " +
                  (dir / "s1").string());
        ok &= run("simulate --linear-sim --seed 42 --out-dir " +
                  (dir / "s2").string());
        ok &= slurp(dir / "s1" / "data.csv") == slurp(dir / "s2" / "data.csv");

        const std::string data = (dir / "s1" / "data.csv").string();
        const std::string groups = (dir / "s1" / "groups.csv").string();
        const std::string fit_args =
            "fit --data " + data + " --groups " + groups +
            " --outcome y --alpha 0.4 --nu 1 --mstop 40 --no-standardize "
            "--model-out ";
        ok &= run("--threads 1 " + fit_args + (dir / "m1.json").string());
        ok &= run("--threads 4 " + fit_args + (dir / "m2.json").string());
        ok &= slurp(dir / "m1.json") == slurp(dir / "m2.json");

        const std::string bal_args =
            "balance --data " + data + " --groups " + groups +
            " --outcome y --no-standardize --reps 400 --iters 4 --seed 7 "
            "--out-prefix ";
        ok &= run("--threads 1 " + bal_args + (dir / "b1").string());
        ok &= run("--threads 4 " + bal_args + (dir / "b2").string());
        ok &= slurp(dir / "b1_df.csv") == slurp(dir / "b2_df.csv");
        ok &= slurp(dir / "b1_freq.csv") == slurp(dir / "b2_freq.csv");

        const std::string tune_args =
            "tune --data " + data + " --groups " + groups +
            " --outcome y --alpha 0.4 --nu 1 --mstop 30 --bootstrap 8 "
            "--seed 3 --no-standardize --curve-out ";
        ok &= run("--threads 1 " + tune_args + (dir / "c1.csv").string());
        ok &= run("--threads 4 " + tune_args + (dir / "c2.csv").string());
        ok &= slurp(dir / "c1.csv") == slurp(dir / "c2.csv");
        report(9, ok,
               "seeded simulate/fit/balance/tune outputs byte-identical "
               "across runs and across --threads 1/4");
    }

    // --- Criterion 10: gamma robustness --------------------------------
    {
        // Balanced scheme for scenario 3 was calibrated under standard
        // normal nulls and evaluated under centered Gamma(1,1) outcomes.
        const std::vector<double> got = scheme(3, &BiasRow::balanced);
        double dev = 0.0;
        for (double f : got) dev = std::max(dev, std::abs(f - 1.0 / 3));
        report(10, dev <= 0.04,
               "normal-calibrated balance under gamma outcomes " +
                   freq_list(got) + ", max dev " + fmt(dev) + " (<= 0.04)");
    }

    std::cout << (failures == 0
                      ? "all criteria passed"
                      : std::to_string(failures) + " criterion(s) failed")
              << "\n";
    return failures;
}
