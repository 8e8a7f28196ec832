#include "sgb/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sgb/errors.hpp"

namespace sgb {

std::vector<Eigen::Index> Dataset::columns_of(const std::string& variable) const {
    std::vector<Eigen::Index> out;
    for (Eigen::Index j = 0; j < ncol(); ++j)
        if (column_source[j] == variable || column_names[j] == variable)
            out.push_back(j);
    return out;
}

namespace {

struct RawColumn {
    std::string name;
    bool categorical = false;
    std::vector<double> numeric;      // when numeric
    std::vector<std::string> labels;  // when categorical
};

RawColumn read_column(const CsvTable& table, std::size_t j) {
    RawColumn col;
    col.name = table.header[j];
    for (const auto& row : table.rows)
        if (row[j].quoted) col.categorical = true;
    if (col.categorical) {
        col.labels.reserve(table.nrow());
        for (const auto& row : table.rows) col.labels.push_back(row[j].text);
        return col;
    }
    col.numeric.reserve(table.nrow());
    for (std::size_t i = 0; i < table.nrow(); ++i) {
        auto v = parse_number(table.rows[i][j].text);
        if (!v)
            throw NonNumericColumn("column '" + col.name + "' row " +
                                   std::to_string(i + 2) +
                                   ": cannot parse '" + table.rows[i][j].text +
                                   "' (quote categorical values)");
        col.numeric.push_back(*v);
    }
    return col;
}

std::vector<std::string> sorted_levels(const std::vector<std::string>& labels) {
    std::set<std::string> s(labels.begin(), labels.end());
    return {s.begin(), s.end()};
}

double sample_sd(const Eigen::VectorXd& v) {
    if (v.size() < 2) return 0.0;
    const double m = v.mean();
    return std::sqrt((v.array() - m).square().sum() /
                     static_cast<double>(v.size() - 1));
}

Eigen::VectorXd code_binomial_outcome(const RawColumn& col) {
    const std::size_t n =
        col.categorical ? col.labels.size() : col.numeric.size();
    Eigen::VectorXd y(n);
    if (col.categorical) {
        auto levels = sorted_levels(col.labels);
        if (levels.size() != 2)
            throw ParseError("binomial outcome '" + col.name + "' has " +
                             std::to_string(levels.size()) +
                             " levels, expected 2");
        for (std::size_t i = 0; i < n; ++i)
            y[i] = col.labels[i] == levels[0] ? -1.0 : 1.0;
        return y;
    }
    std::set<double> values(col.numeric.begin(), col.numeric.end());
    if (values.size() != 2)
        throw ParseError("binomial outcome '" + col.name + "' has " +
                         std::to_string(values.size()) +
                         " distinct values, expected 2");
    const double lo = *values.begin();
    for (std::size_t i = 0; i < n; ++i)
        y[i] = col.numeric[i] == lo ? -1.0 : 1.0;
    return y;
}

}  // namespace

Dataset load_dataset(const CsvTable& table, const std::string& outcome_name,
                     const LoadOptions& options) {
    auto yj = table.find_column(outcome_name);
    if (!yj)
        throw MissingOutcome("outcome column '" + outcome_name +
                             "' not found in data");
    if (table.nrow() == 0) throw ParseError("data table has no rows");

    Dataset ds;
    ds.outcome_name = outcome_name;
    const Eigen::Index n = static_cast<Eigen::Index>(table.nrow());

    // Outcome.
    RawColumn ycol = read_column(table, *yj);
    if (options.family == FamilyKind::Binomial) {
        ds.y = code_binomial_outcome(ycol);
    } else {
        if (ycol.categorical)
            throw NonNumericColumn("gaussian outcome '" + outcome_name +
                                   "' is categorical");
        ds.y = Eigen::Map<const Eigen::VectorXd>(ycol.numeric.data(), n);
        if (options.standardize_outcome) {
            const double m = ds.y.mean();
            const double s = sample_sd(ds.y);
            if (s <= 0.0)
                throw ConstantColumn("outcome '" + outcome_name +
                                     "' is constant");
            ds.y = (ds.y.array() - m) / s;
            ds.outcome_standardization = {m, s};
        }
    }

    // Predictors: expand categoricals, then optionally standardize.
    std::vector<Eigen::VectorXd> cols;
    for (std::size_t j = 0; j < table.ncol(); ++j) {
        if (j == *yj) continue;
        RawColumn raw = read_column(table, j);
        if (raw.categorical) {
            for (const auto& level : sorted_levels(raw.labels)) {
                Eigen::VectorXd ind(n);
                for (Eigen::Index i = 0; i < n; ++i)
                    ind[i] = raw.labels[i] == level ? 1.0 : 0.0;
                cols.push_back(std::move(ind));
                ds.column_names.push_back(raw.name + "." + level);
                ds.column_source.push_back(raw.name);
            }
        } else {
            cols.push_back(Eigen::Map<const Eigen::VectorXd>(raw.numeric.data(), n));
            ds.column_names.push_back(raw.name);
            ds.column_source.push_back(raw.name);
        }
    }

    const Eigen::Index p = static_cast<Eigen::Index>(cols.size());
    ds.x.resize(n, p);
    ds.standardization.assign(p, Standardization{});
    for (Eigen::Index j = 0; j < p; ++j) {
        Eigen::VectorXd v = cols[j];
        const double s = sample_sd(v);
        if (s <= 0.0)
            throw ConstantColumn("predictor column '" + ds.column_names[j] +
                                 "' is constant");
        if (options.standardize_predictors) {
            const double m = v.mean();
            v = (v.array() - m) / s;
            ds.standardization[j] = {m, s};
        }
        ds.x.col(j) = v;
    }
    return ds;
}

Dataset load_dataset_file(const std::string& path,
                          const std::string& outcome_name,
                          const LoadOptions& options) {
    return load_dataset(read_csv(path), outcome_name, options);
}

GroupStructure GroupStructure::from_assignments(
    const Dataset& ds,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    GroupStructure gs;
    std::map<std::string, std::size_t> index;
    std::set<Eigen::Index> used;
    for (const auto& [variable, group] : pairs) {
        auto cols = ds.columns_of(variable);
        if (cols.empty())
            throw ParseError("group file references unknown variable '" +
                             variable + "'");
        auto it = index.find(group);
        if (it == index.end()) {
            index.emplace(group, gs.groups_.size());
            gs.groups_.push_back({group, {}});
            it = index.find(group);
        }
        auto& members = gs.groups_[it->second].columns;
        for (auto c : cols) {
            if (used.count(c))
                throw ParseError("variable '" + variable +
                                 "' assigned to more than one group");
            used.insert(c);
            members.push_back(c);
        }
    }
    for (auto& g : gs.groups_) {
        std::sort(g.columns.begin(), g.columns.end());
        if (g.columns.empty())
            throw ParseError("group '" + g.name + "' is empty");
    }
    if (gs.groups_.empty()) throw ParseError("group structure is empty");
    return gs;
}

GroupStructure GroupStructure::from_table(const Dataset& ds,
                                          const CsvTable& table,
                                          const std::string& var_column,
                                          const std::string& group_column) {
    std::string vc = var_column, gc = group_column;
    if (vc.empty()) {
        if (table.find_column("variable_name")) vc = "variable_name";
        else if (table.find_column("variable")) vc = "variable";
        else if (table.find_column("var_name")) vc = "var_name";
        else throw ParseError("group file: no variable column found "
                              "(expected variable_name/variable/var_name)");
    }
    if (gc.empty()) {
        if (table.find_column("group_name")) gc = "group_name";
        else if (table.find_column("group")) gc = "group";
        else throw ParseError("group file: no group column found "
                              "(expected group_name/group)");
    }
    auto vj = table.find_column(vc);
    auto gj = table.find_column(gc);
    if (!vj) throw ParseError("group file: column '" + vc + "' not found");
    if (!gj) throw ParseError("group file: column '" + gc + "' not found");
    std::vector<std::pair<std::string, std::string>> pairs;
    pairs.reserve(table.nrow());
    for (const auto& row : table.rows)
        pairs.emplace_back(row[*vj].text, row[*gj].text);
    return from_assignments(ds, pairs);
}

GroupStructure GroupStructure::from_file(const Dataset& ds,
                                         const std::string& path,
                                         const std::string& var_column,
                                         const std::string& group_column) {
    return from_table(ds, read_csv(path), var_column, group_column);
}

std::vector<Eigen::Index> GroupStructure::covered_columns() const {
    std::vector<Eigen::Index> all;
    for (const auto& g : groups_)
        all.insert(all.end(), g.columns.begin(), g.columns.end());
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace sgb
