#include "sgb/ridge.hpp"

#include <cmath>
#include <string>

#include "sgb/errors.hpp"

namespace sgb {

namespace {
constexpr double kRankTolerance = 1e-10;
}

DesignBlock::DesignBlock(std::vector<Eigen::Index> columns,
                         Eigen::MatrixXd values)
    : columns_(std::move(columns)), values_(std::move(values)) {
    if (values_.cols() == 0 || values_.rows() == 0)
        throw DimensionMismatch("design block must be non-empty");
    if (static_cast<Eigen::Index>(columns_.size()) != values_.cols())
        throw DimensionMismatch("column index count does not match values");
    for (std::size_t i = 1; i < columns_.size(); ++i)
        if (columns_[i] <= columns_[i - 1])
            throw DimensionMismatch(
                "block column indices must be strictly increasing");

    Eigen::BDCSVD<Eigen::MatrixXd> svd(values_,
                                       Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& d = svd.singularValues();
    const double dmax = d.size() > 0 ? d[0] : 0.0;
    Eigen::Index r = 0;
    while (r < d.size() && d[r] > kRankTolerance * dmax) ++r;
    if (dmax <= 0.0) r = 0;
    left_ = svd.matrixU().leftCols(r);
    right_ = svd.matrixV().leftCols(r);
    singular_ = d.head(r);
}

RidgeFit ridge_fit(const DesignBlock& block, double lambda,
                   const Eigen::VectorXd& target) {
    if (target.size() != block.nrow())
        throw DimensionMismatch("ridge_fit: target length " +
                                std::to_string(target.size()) +
                                " != block rows " +
                                std::to_string(block.nrow()));
    if (lambda < 0.0) throw InfeasibleDf("ridge_fit: lambda must be >= 0");
    if (lambda == 0.0 && block.rank() < block.ncol())
        throw SingularBlock(
            "ridge_fit: lambda = 0 on a rank-deficient block (rank " +
            std::to_string(block.rank()) + " of " +
            std::to_string(block.ncol()) + ")");

    const Eigen::VectorXd& d = block.singular_values();
    const Eigen::VectorXd z = block.left_vectors().transpose() * target;
    Eigen::VectorXd shrink(d.size());
    Eigen::VectorXd axis(d.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        shrink[i] = d[i] / (d[i] * d[i] + lambda);
        axis[i] = d[i] * shrink[i];  // a_i = d_i^2/(d_i^2+lambda)
    }
    RidgeFit fit;
    fit.lambda = lambda;
    fit.coefficients = block.right_vectors() * shrink.cwiseProduct(z).eval();
    fit.fitted = block.left_vectors() * axis.cwiseProduct(z).eval();
    fit.rss = (target - fit.fitted).squaredNorm();
    return fit;
}

double effective_df(const DesignBlock& block, double lambda) {
    if (lambda < 0.0) throw InfeasibleDf("effective_df: lambda must be >= 0");
    const Eigen::VectorXd& d = block.singular_values();
    double df = 0.0;
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        const double d2 = d[i] * d[i];
        const double a = lambda == 0.0 ? 1.0 : d2 / (d2 + lambda);
        df += a * (2.0 - a);
    }
    return df;
}

double solve_lambda(const DesignBlock& block, double target_df) {
    const double rank = static_cast<double>(block.rank());
    if (!(target_df > 0.0) || target_df > rank + 1e-12)
        throw InfeasibleDf("solve_lambda: target df " +
                           std::to_string(target_df) +
                           " outside (0, rank=" + std::to_string(block.rank()) +
                           "]");
    if (target_df >= rank) return 0.0;

    double lo = -12.0, hi = 12.0;  // log10 lambda
    if (effective_df(block, std::pow(10.0, lo)) <= target_df) return 0.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double df = effective_df(block, std::pow(10.0, mid));
        if (std::abs(df - target_df) <= 1e-8 * 0.5) return std::pow(10.0, mid);
        if (df > target_df)
            lo = mid;
        else
            hi = mid;
    }
    return std::pow(10.0, 0.5 * (lo + hi));
}

Eigen::VectorXd selection_weights(const DesignBlock& block, double lambda) {
    const Eigen::VectorXd& d = block.singular_values();
    Eigen::VectorXd w(d.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        const double d2 = d[i] * d[i];
        const double a = lambda == 0.0 ? 1.0 : d2 / (d2 + lambda);
        w[i] = a * (2.0 - a);
    }
    return w;
}

double selection_score(const DesignBlock& block, const Eigen::VectorXd& weights,
                       const Eigen::VectorXd& u) {
    const Eigen::VectorXd z = block.left_vectors().transpose() * u;
    return weights.dot(z.cwiseAbs2());
}

}  // namespace sgb
