#include "sgb/family.hpp"

#include <algorithm>
#include <cmath>

#include "sgb/errors.hpp"

namespace sgb {

namespace {

// log(1 + exp(t)) without overflow.
double softplus(double t) {
    if (t > 0.0) return t + std::log1p(std::exp(-t));
    return std::log1p(std::exp(t));
}

void check_dims(const Eigen::VectorXd& y, const Eigen::VectorXd& f) {
    if (y.size() != f.size())
        throw DimensionMismatch("family: y length " + std::to_string(y.size()) +
                                " != f length " + std::to_string(f.size()));
}

}  // namespace

double Family::loss(const Eigen::VectorXd& y, const Eigen::VectorXd& f) const {
    check_dims(y, f);
    if (kind_ == FamilyKind::Gaussian) return 0.5 * (y - f).squaredNorm();
    double total = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i)
        total += softplus(-2.0 * y[i] * f[i]);
    return total;
}

Eigen::VectorXd Family::negative_gradient(const Eigen::VectorXd& y,
                                          const Eigen::VectorXd& f) const {
    check_dims(y, f);
    if (kind_ == FamilyKind::Gaussian) return y - f;
    Eigen::VectorXd g(y.size());
    for (Eigen::Index i = 0; i < y.size(); ++i)
        g[i] = 2.0 * y[i] / (1.0 + std::exp(2.0 * y[i] * f[i]));
    return g;
}

double Family::offset(const Eigen::VectorXd& y) const {
    if (y.size() == 0) return 0.0;
    if (kind_ == FamilyKind::Gaussian) return y.mean();
    double p = (y.array() > 0.0).cast<double>().mean();
    p = std::clamp(p, 1e-12, 1.0 - 1e-12);
    return 0.5 * std::log(p / (1.0 - p));
}

Eigen::VectorXd Family::response(const Eigen::VectorXd& f) const {
    if (kind_ == FamilyKind::Gaussian) return f;
    Eigen::VectorXd p(f.size());
    for (Eigen::Index i = 0; i < f.size(); ++i)
        p[i] = 1.0 / (1.0 + std::exp(-2.0 * f[i]));
    return p;
}

Family Family::parse(const std::string& name) {
    if (name == "gaussian") return Family(FamilyKind::Gaussian);
    if (name == "binomial") return Family(FamilyKind::Binomial);
    throw ParseError("unknown family: " + name +
                     " (expected gaussian or binomial)");
}

}  // namespace sgb
