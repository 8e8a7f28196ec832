#include "sgb/interpret.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sgb/errors.hpp"

namespace sgb {

namespace {

std::string predictor_label(const BoostModel& model, const BaseLearner& bl) {
    std::string out;
    for (auto c : bl.columns()) {
        if (!out.empty()) out += ", ";
        out += model.column_names[static_cast<std::size_t>(c)];
    }
    return out;
}

void require_iterations(const BoostModel& model, const char* op) {
    if (model.trace.empty())
        throw EmptyModel(std::string(op) + ": model has no iterations");
}

}  // namespace

ImportanceTable variable_importance(const BoostModel& model) {
    require_iterations(model, "variable_importance");

    std::map<int, double> reduction;
    std::map<int, int> count;
    for (const auto& rec : model.trace) {
        reduction[rec.learner_id] += rec.loss_before - rec.loss_after;
        count[rec.learner_id] += 1;
    }
    double total = 0.0;
    for (const auto& [id, red] : reduction) total += red;

    ImportanceTable table;
    table.total_reduction = total;
    for (const auto& [id, red] : reduction) {
        const BaseLearner& bl = model.learner_by_id(id);
        ImportanceRow row;
        row.learner_id = id;
        row.reduction = red;
        row.learner = bl.label;
        row.predictor = predictor_label(model, bl);
        row.selfreq = static_cast<double>(count[id]) /
                      static_cast<double>(model.trace.size());
        row.kind = bl.kind;
        row.relative_importance = total > 0.0 ? red / total : 0.0;
        table.rows.push_back(std::move(row));
    }
    std::sort(table.rows.begin(), table.rows.end(),
              [](const ImportanceRow& a, const ImportanceRow& b) {
                  if (a.reduction != b.reduction) return a.reduction > b.reduction;
                  return a.learner_id < b.learner_id;
              });
    for (const auto& row : table.rows) {
        if (row.kind == LearnerKind::Group)
            table.group_importance += row.relative_importance;
        else
            table.individual_importance += row.relative_importance;
    }
    return table;
}

CoefficientTable coefficients(const BoostModel& model) {
    require_iterations(model, "coefficients");

    // (learner id, column) -> accumulated effect
    std::map<std::pair<int, Eigen::Index>, double> raw_effects;
    for (const auto& rec : model.trace) {
        const BaseLearner& bl = model.learner_by_id(rec.learner_id);
        const auto& cols = bl.columns();
        for (std::size_t k = 0; k < cols.size(); ++k)
            raw_effects[{rec.learner_id, cols[k]}] +=
                rec.increment[static_cast<Eigen::Index>(k)];
    }

    CoefficientTable table;
    std::map<Eigen::Index, AggregateRow> agg;
    for (const auto& [key, effect] : raw_effects) {
        if (effect == 0.0) continue;
        const auto& [id, col] = key;
        const BaseLearner& bl = model.learner_by_id(id);
        CoefficientRow row;
        row.variable = model.column_names[static_cast<std::size_t>(col)];
        row.effect = effect;
        row.learner = bl.label;
        row.predictor = predictor_label(model, bl);
        row.kind = bl.kind;
        row.column = col;
        row.learner_id = id;
        table.raw.push_back(row);

        auto& a = agg[col];
        if (a.learners.empty()) {
            a.variable = row.variable;
            a.column = col;
        } else {
            a.learners += "; ";
            a.predictors += "; ";
        }
        a.effect += effect;
        a.learners += row.learner;
        a.predictors += row.predictor;
    }
    for (auto& [col, row] : agg) table.aggregate.push_back(std::move(row));

    auto by_abs_effect = [](double ea, Eigen::Index ca, double eb,
                            Eigen::Index cb) {
        const double aa = std::abs(ea), ab = std::abs(eb);
        if (aa != ab) return aa > ab;
        return ca < cb;
    };
    std::sort(table.raw.begin(), table.raw.end(),
              [&](const CoefficientRow& a, const CoefficientRow& b) {
                  if (std::abs(a.effect) != std::abs(b.effect))
                      return std::abs(a.effect) > std::abs(b.effect);
                  if (a.column != b.column) return a.column < b.column;
                  return a.learner_id < b.learner_id;
              });
    std::sort(table.aggregate.begin(), table.aggregate.end(),
              [&](const AggregateRow& a, const AggregateRow& b) {
                  return by_abs_effect(a.effect, a.column, b.effect, b.column);
              });
    return table;
}

PathTable coefficient_path(const BoostModel& model) {
    require_iterations(model, "coefficient_path");

    // Per-(learner, column) accumulators; slice values are re-summed over
    // learners in id order so every slice agrees bit-for-bit with the
    // aggregate table of the correspondingly truncated model.
    std::map<std::pair<int, Eigen::Index>, double> acc;
    std::map<Eigen::Index, std::vector<int>> contributors;
    for (const auto& rec : model.trace) {
        for (auto c : model.learner_by_id(rec.learner_id).columns()) {
            if (!acc.count({rec.learner_id, c})) {
                acc[{rec.learner_id, c}] = 0.0;
                contributors[c].push_back(rec.learner_id);
            }
        }
    }
    for (auto& [col, ids] : contributors) std::sort(ids.begin(), ids.end());

    PathTable table;
    table.rows.reserve((model.trace.size() + 1) * contributors.size());
    auto emit = [&](int m, const std::vector<Eigen::Index>* updated,
                    const char* kind) {
        for (const auto& [col, ids] : contributors) {
            PathRow row;
            row.iteration = m;
            row.variable = model.column_names[static_cast<std::size_t>(col)];
            double v = 0.0;
            for (int id : ids) v += acc[{id, col}];
            row.value = v;
            row.column = col;
            if (updated &&
                std::binary_search(updated->begin(), updated->end(), col))
                row.updated_by = kind;
            table.rows.push_back(std::move(row));
        }
    };

    emit(0, nullptr, "");
    for (const auto& rec : model.trace) {
        const BaseLearner& bl = model.learner_by_id(rec.learner_id);
        const auto& cols = bl.columns();
        for (std::size_t k = 0; k < cols.size(); ++k)
            acc[{rec.learner_id, cols[k]}] +=
                rec.increment[static_cast<Eigen::Index>(k)];
        emit(rec.iteration, &cols, bl.kind_name());
    }
    return table;
}

}  // namespace sgb
