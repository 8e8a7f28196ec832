#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "sgb/csv.hpp"
#include "sgb/family.hpp"

namespace sgb {

// Per-column standardization record; identity transform when sd == 1, mean == 0.
struct Standardization {
    double mean = 0.0;
    double sd = 1.0;
};

// Design matrix plus outcome. Categorical predictor columns (quoted cells in
// the CSV) are expanded to one indicator column per level; `source` keeps the
// original variable name so group files can reference either form.
class Dataset {
  public:
    Eigen::MatrixXd x;                       // n x p
    Eigen::VectorXd y;                       // n
    std::vector<std::string> column_names;   // expanded names, length p
    std::vector<std::string> column_source;  // original variable, length p
    std::vector<Standardization> standardization;  // length p
    Standardization outcome_standardization;
    std::string outcome_name;

    Eigen::Index nrow() const { return x.rows(); }
    Eigen::Index ncol() const { return x.cols(); }

    // All column indices whose source variable equals `variable` (the
    // variable itself for numeric columns, the parent for indicator columns).
    std::vector<Eigen::Index> columns_of(const std::string& variable) const;
};

struct LoadOptions {
    bool standardize_predictors = true;
    // Gaussian outcomes only; Binomial outcomes are recoded, never scaled.
    bool standardize_outcome = false;
    FamilyKind family = FamilyKind::Gaussian;
};

// Parses a comma-separated table (header row; quoted cells = categorical) and
// builds a Dataset. Categorical predictors expand to `name.level` indicator
// columns, one per level, levels sorted. Binomial outcomes are coded to
// {-1, +1} (two distinct values or levels required).
Dataset load_dataset(const CsvTable& table, const std::string& outcome_name,
                     const LoadOptions& options = {});
Dataset load_dataset_file(const std::string& path,
                          const std::string& outcome_name,
                          const LoadOptions& options = {});

// Non-overlapping named groups of dataset columns.
class GroupStructure {
  public:
    struct Group {
        std::string name;
        std::vector<Eigen::Index> columns;  // strictly increasing
    };

    // Builds from (variable, group) assignments; each variable expands to all
    // its dataset columns. Order of groups = first appearance in the pairs.
    static GroupStructure from_assignments(
        const Dataset& ds,
        const std::vector<std::pair<std::string, std::string>>& pairs);

    // Reads a two-column table; column names default to variable_name /
    // group_name but can be overridden.
    static GroupStructure from_table(const Dataset& ds, const CsvTable& table,
                                     const std::string& var_column = "",
                                     const std::string& group_column = "");
    static GroupStructure from_file(const Dataset& ds, const std::string& path,
                                    const std::string& var_column = "",
                                    const std::string& group_column = "");

    const std::vector<Group>& groups() const { return groups_; }
    std::size_t size() const { return groups_.size(); }

    // Union of all group members, in dataset column order.
    std::vector<Eigen::Index> covered_columns() const;

  private:
    std::vector<Group> groups_;
};

}  // namespace sgb
