#pragma once

#include <vector>

#include <Eigen/Dense>

namespace sgb {

// A column subset of the design matrix with its SVD cached at construction.
// The SVD is reused for every lambda and every boosting iteration, so a
// ridge fit against a new target costs O(n*rank).
//
// Immutable after construction; safe to share across threads.
class DesignBlock {
  public:
    DesignBlock(std::vector<Eigen::Index> columns, Eigen::MatrixXd values);

    const std::vector<Eigen::Index>& columns() const { return columns_; }
    const Eigen::MatrixXd& values() const { return values_; }
    Eigen::Index nrow() const { return values_.rows(); }
    Eigen::Index ncol() const { return values_.cols(); }

    // Only singular values above 1e-10 * d_max are kept; rank() is their
    // count.
    Eigen::Index rank() const { return singular_.size(); }
    const Eigen::MatrixXd& left_vectors() const { return left_; }       // n x r
    const Eigen::MatrixXd& right_vectors() const { return right_; }     // p x r
    const Eigen::VectorXd& singular_values() const { return singular_; }  // r

  private:
    std::vector<Eigen::Index> columns_;
    Eigen::MatrixXd values_;
    Eigen::MatrixXd left_;
    Eigen::MatrixXd right_;
    Eigen::VectorXd singular_;
};

struct RidgeFit {
    double lambda = 0.0;
    Eigen::VectorXd coefficients;  // length p_l
    Eigen::VectorXd fitted;        // length n
    double rss = 0.0;
};

// Minimizes ||target - X b||^2 + lambda ||b||^2 via the cached SVD.
// lambda == 0 requires a full-column-rank block.
RidgeFit ridge_fit(const DesignBlock& block, double lambda,
                   const Eigen::VectorXd& target);

// Effective degrees of freedom df(lambda) = tr(2H - H^2) for the ridge hat
// matrix H = X (X'X + lambda I)^-1 X'; equals sum_i (2 a_i - a_i^2) with
// a_i = d_i^2 / (d_i^2 + lambda). Strictly decreasing in lambda, df(0) = rank.
double effective_df(const DesignBlock& block, double lambda);

// Inverts effective_df: finds lambda >= 0 with df(lambda) = target_df, by
// bisection on log10(lambda) over [-12, 12]. |df - target| <= 1e-8 at the
// returned value. Throws InfeasibleDf if target_df <= 0 or > rank.
double solve_lambda(const DesignBlock& block, double target_df);

// Per-direction selection weights w_i = 2 a_i - a_i^2. The RSS of a ridge
// fit to u decomposes as ||u||^2 - sum_i w_i (U_i' u)^2, so boosting's
// argmin-RSS selection maximizes the weighted score; see selection_score.
Eigen::VectorXd selection_weights(const DesignBlock& block, double lambda);

double selection_score(const DesignBlock& block,
                       const Eigen::VectorXd& weights,
                       const Eigen::VectorXd& u);

}  // namespace sgb
