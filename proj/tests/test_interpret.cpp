#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "sgb/boost.hpp"
#include "sgb/errors.hpp"
#include "sgb/interpret.hpp"
#include "sgb/rng.hpp"
#include "sgb/sim.hpp"

using namespace sgb;

namespace {

BoostModel sim_model(std::uint64_t seed, int mstop, double nu = 1.0) {
    const LinearSim sim = gen_linear_sim(seed);
    auto learners = build_base_learners(sim.ds, sim.gs, 0.4);
    BoostConfig cfg;
    cfg.mstop = mstop;
    cfg.nu = nu;
    return fit(sim.ds, learners, cfg);
}

}  // namespace

TEST_CASE("single-learner model gets all the importance") {
    RngStream rng = RngStream::derive(2, 0x1e);
    Dataset ds;
    ds.x = rng.normal_vector(25);
    ds.y = 2.0 * ds.x.col(0) + 0.05 * rng.normal_vector(25);
    ds.column_names = {"only"};
    ds.column_source = {"only"};
    ds.standardization = {{}};
    ds.outcome_name = "y";
    const GroupStructure gs =
        GroupStructure::from_assignments(ds, {{"only", "g"}});
    auto learners = build_base_learners(ds, gs, 0.0);
    BoostConfig cfg;
    cfg.mstop = 7;
    cfg.nu = 0.6;
    const BoostModel model = fit(ds, learners, cfg);
    const ImportanceTable imp = variable_importance(model);
    REQUIRE(imp.rows.size() == 1);
    CHECK(imp.rows[0].relative_importance == doctest::Approx(1.0));
    CHECK(imp.rows[0].selfreq == doctest::Approx(1.0));
    CHECK(imp.group_importance == doctest::Approx(1.0));
}

TEST_CASE("reductions equal analytic loss drops on an orthogonal design") {
    // Two orthogonal columns, lambda = 0, nu = 1: step 1 removes all of
    // column 1's energy, step 2 all of column 2's.
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(4, 2);
    x(0, 0) = 1;
    x(1, 0) = -1;
    x(2, 1) = 1;
    x(3, 1) = -1;
    Eigen::VectorXd y(4);
    y << 2, -2, 1, -1;
    Dataset ds;
    ds.x = x;
    ds.y = y;
    ds.column_names = {"a", "b"};
    ds.column_source = {"a", "b"};
    ds.standardization = {{}, {}};
    ds.outcome_name = "y";
    const GroupStructure gs = GroupStructure::from_assignments(
        ds, {{"a", "1"}, {"b", "2"}});
    auto learners = build_base_learners(ds, gs, 1.0);  // df 1 -> lambda 0
    BoostConfig cfg;
    cfg.mstop = 2;
    cfg.nu = 1.0;
    cfg.offset_override = 0.0;
    const BoostModel model = fit(ds, learners, cfg);
    const ImportanceTable imp = variable_importance(model);
    REQUIRE(imp.rows.size() == 2);
    // loss drops: 0.5*||y||^2 = 5 total; column a removes 4, column b 1
    CHECK(imp.rows[0].reduction == doctest::Approx(4.0));
    CHECK(imp.rows[1].reduction == doctest::Approx(1.0));
    CHECK(imp.rows[0].relative_importance == doctest::Approx(0.8));
    CHECK(imp.total_reduction == doctest::Approx(5.0));
}

TEST_CASE("importance sums and ledger consistency") {
    const BoostModel model = sim_model(11, 80);
    const ImportanceTable imp = variable_importance(model);
    double rel = 0.0, red = 0.0, self = 0.0;
    for (const auto& r : imp.rows) {
        rel += r.relative_importance;
        red += r.reduction;
        self += r.selfreq;
        CHECK(r.reduction >= 0.0);
    }
    CHECK(std::abs(rel - 1.0) <= 1e-10);
    CHECK(std::abs(self - 1.0) <= 1e-10);
    CHECK(imp.group_importance + imp.individual_importance ==
          doctest::Approx(1.0).epsilon(1e-10));
    const double total_drop =
        model.trace.front().loss_before - model.trace.back().loss_after;
    CHECK(std::abs(red - total_drop) <= 1e-8 * total_drop);
    for (std::size_t i = 1; i < imp.rows.size(); ++i)
        CHECK(imp.rows[i - 1].reduction >= imp.rows[i].reduction);
}

TEST_CASE("aggregate coefficients are the per-variable sums of raw effects") {
    const BoostModel model = sim_model(12, 120);
    const CoefficientTable table = coefficients(model);
    std::map<std::string, double> sums;
    for (const auto& r : table.raw) sums[r.variable] += r.effect;
    REQUIRE(!table.aggregate.empty());
    for (const auto& a : table.aggregate) {
        CHECK(sums.count(a.variable) == 1);
        CHECK(a.effect == sums[a.variable]);
    }
    // every nonzero coefficient appears in exactly one aggregate row
    std::map<std::string, int> seen;
    for (const auto& a : table.aggregate) seen[a.variable]++;
    for (Eigen::Index j = 0; j < model.coefficients.size(); ++j) {
        if (model.coefficients[j] != 0.0) {
            const auto& name =
                model.column_names[static_cast<std::size_t>(j)];
            CHECK(seen[name] == 1);
        }
    }
    // sorted by |effect| descending
    for (std::size_t i = 1; i < table.aggregate.size(); ++i)
        CHECK(std::abs(table.aggregate[i - 1].effect) >=
              std::abs(table.aggregate[i].effect));
    for (std::size_t i = 1; i < table.raw.size(); ++i)
        CHECK(std::abs(table.raw[i - 1].effect) >=
              std::abs(table.raw[i].effect));
}

TEST_CASE("variables selected via both kinds show both in the tables") {
    const BoostModel model = sim_model(13, 150);
    const CoefficientTable table = coefficients(model);
    // find a variable with two raw rows (group + individual)
    std::map<std::string, std::set<LearnerKind>> kinds;
    for (const auto& r : table.raw) kinds[r.variable].insert(r.kind);
    bool found_both = false;
    for (const auto& [var, ks] : kinds)
        if (ks.size() == 2) found_both = true;
    CHECK(found_both);

    const PathTable path = coefficient_path(model);
    std::map<std::string, std::set<std::string>> path_kinds;
    for (const auto& r : path.rows)
        if (!r.updated_by.empty()) path_kinds[r.variable].insert(r.updated_by);
    bool path_both = false;
    for (const auto& [var, ks] : path_kinds)
        if (ks.size() == 2) path_both = true;
    CHECK(path_both);
}

TEST_CASE("path: final slice equals the aggregate table, piecewise constant") {
    const BoostModel model = sim_model(14, 90);
    const PathTable path = coefficient_path(model);
    const CoefficientTable table = coefficients(model);

    std::map<std::string, double> final_slice;
    for (const auto& r : path.rows)
        if (r.iteration == model.mstop) final_slice[r.variable] = r.value;
    for (const auto& a : table.aggregate) {
        REQUIRE(final_slice.count(a.variable) == 1);
        CHECK(final_slice[a.variable] == a.effect);
    }

    // piecewise constant except at update rows
    std::map<std::string, double> prev;
    for (const auto& r : path.rows) {
        if (r.iteration == 0) {
            CHECK(r.value == 0.0);
            prev[r.variable] = r.value;
            continue;
        }
        if (r.updated_by.empty())
            CHECK(r.value == prev[r.variable]);
        prev[r.variable] = r.value;
    }
}

TEST_CASE("truncate-then-interpret equals the path slice") {
    const BoostModel model = sim_model(15, 70);
    RngStream rng = RngStream::derive(15, 0x5e);
    const PathTable path = coefficient_path(model);
    for (int trial = 0; trial < 5; ++trial) {
        const int m = 1 + static_cast<int>(rng.below(70));
        const BoostModel cut = truncate(model, m);
        const CoefficientTable table = coefficients(cut);
        std::map<std::string, double> slice;
        for (const auto& r : path.rows)
            if (r.iteration == m) slice[r.variable] = r.value;
        for (const auto& a : table.aggregate)
            CHECK(slice[a.variable] == a.effect);
    }
}

TEST_CASE("mstop = 1 path covers exactly the first selection's variables") {
    const BoostModel model = sim_model(16, 1);
    const PathTable path = coefficient_path(model);
    const auto& first = model.learner_by_id(model.trace[0].learner_id);
    std::set<std::string> vars;
    for (const auto& r : path.rows) vars.insert(r.variable);
    CHECK(vars.size() == first.columns().size());
}

TEST_CASE("interpretation ops reject empty models") {
    const BoostModel model = sim_model(17, 5);
    const BoostModel empty = truncate(model, 0);
    CHECK_THROWS_AS(variable_importance(empty), EmptyModel);
    CHECK_THROWS_AS(coefficients(empty), EmptyModel);
    CHECK_THROWS_AS(coefficient_path(empty), EmptyModel);
}
