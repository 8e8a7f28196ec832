#pragma once

#include <string>
#include <vector>

#include "sgb/boost.hpp"

namespace sgb {

// Variable importance: realized in-sample loss reduction per selected
// learner, normalized to sum to one.
struct ImportanceRow {
    double reduction = 0.0;
    std::string learner;    // learner label
    std::string predictor;  // comma-joined member column names
    double selfreq = 0.0;   // selections / mstop
    LearnerKind kind = LearnerKind::Individual;
    double relative_importance = 0.0;
    int learner_id = 0;
};

struct ImportanceTable {
    std::vector<ImportanceRow> rows;  // descending by reduction
    double group_importance = 0.0;    // summed relative importance by kind
    double individual_importance = 0.0;
    double total_reduction = 0.0;
};

struct CoefficientRow {
    std::string variable;
    double effect = 0.0;
    std::string learner;
    std::string predictor;
    LearnerKind kind = LearnerKind::Individual;
    Eigen::Index column = 0;
    int learner_id = 0;
};

struct AggregateRow {
    std::string variable;
    double effect = 0.0;
    std::string learners;    // contributing learner labels, ';'-joined
    std::string predictors;  // their predictor lists, ';'-joined
    Eigen::Index column = 0;
};

// Raw: one row per (learner, variable) with a nonzero accumulated effect.
// Aggregate: per-variable sums across learners. Both sorted by |effect|.
struct CoefficientTable {
    std::vector<CoefficientRow> raw;
    std::vector<AggregateRow> aggregate;
};

struct PathRow {
    int iteration = 0;       // 0 .. mstop
    std::string variable;
    double value = 0.0;      // aggregated coefficient after `iteration`
    std::string updated_by;  // "individual" / "group" when updated here
    Eigen::Index column = 0;
};

// Long-format aggregated coefficient path; rows for every iteration of every
// variable the model ever touched. The slice at iteration == mstop matches
// the aggregate coefficient table.
struct PathTable {
    std::vector<PathRow> rows;
};

ImportanceTable variable_importance(const BoostModel& model);
CoefficientTable coefficients(const BoostModel& model);
PathTable coefficient_path(const BoostModel& model);

}  // namespace sgb
