#pragma once

#include <string>

#include <Eigen/Dense>

namespace sgb {

enum class FamilyKind { Gaussian, Binomial };

// Outcome family: loss, negative gradient, and offset rules.
//
// Gaussian: loss(f) = 0.5 ||y - f||^2 so the negative gradient is the plain
// residual y - f.
//
// Binomial with logit link, y coded in {-1, +1}: loss(f) =
// sum_i log(1 + exp(-2 y_i f_i)), negative gradient 2y / (1 + exp(2yf)).
// f lives on the half-log-odds scale; response(f) = 1 / (1 + exp(-2f)).
class Family {
  public:
    explicit Family(FamilyKind kind) : kind_(kind) {}

    FamilyKind kind() const { return kind_; }
    std::string name() const {
        return kind_ == FamilyKind::Gaussian ? "gaussian" : "binomial";
    }

    double loss(const Eigen::VectorXd& y, const Eigen::VectorXd& f) const;
    Eigen::VectorXd negative_gradient(const Eigen::VectorXd& y,
                                      const Eigen::VectorXd& f) const;

    // Empirical optimum of the constant model: mean(y) for Gaussian,
    // half log-odds for Binomial.
    double offset(const Eigen::VectorXd& y) const;

    // Inverse link applied to the linear predictor (identity / probability).
    Eigen::VectorXd response(const Eigen::VectorXd& f) const;

    static Family parse(const std::string& name);

  private:
    FamilyKind kind_;
};

}  // namespace sgb
