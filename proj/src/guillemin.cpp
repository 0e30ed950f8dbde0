#include "hcsck/guillemin.hpp"

#include <cmath>

namespace hcsck {

void GuilleminPotential::require_interior(const Eigen::VectorXd& x) const {
    if (P_->min_ell(x) <= 0.0)
        throw BoundaryEvaluation("point not strictly interior, min ell = " +
                                 std::to_string(P_->min_ell(x)));
}

double GuilleminPotential::value(const Eigen::VectorXd& x) const {
    require_interior(x);
    double u = 0.0;
    for (int i = 0; i < static_cast<int>(P_->facets().size()); ++i) {
        double l = P_->ell(i, x);
        u += l * std::log(l);
    }
    return u;
}

Eigen::VectorXd GuilleminPotential::gradient(const Eigen::VectorXd& x) const {
    require_interior(x);
    Eigen::VectorXd g = Eigen::VectorXd::Zero(P_->dim());
    for (int i = 0; i < static_cast<int>(P_->facets().size()); ++i) {
        double l = P_->ell(i, x);
        g += (std::log(l) + 1.0) *
             P_->facets()[static_cast<std::size_t>(i)].normal.cast<double>();
    }
    return g;
}

Eigen::MatrixXd GuilleminPotential::hessian(const Eigen::VectorXd& x) const {
    require_interior(x);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(P_->dim(), P_->dim());
    for (int i = 0; i < static_cast<int>(P_->facets().size()); ++i) {
        Eigen::VectorXd nu = P_->facets()[static_cast<std::size_t>(i)].normal.cast<double>();
        h += nu * nu.transpose() / P_->ell(i, x);
    }
    return h;
}

} // namespace hcsck
