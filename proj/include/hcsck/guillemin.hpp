#ifndef HCSCK_GUILLEMIN_HPP
#define HCSCK_GUILLEMIN_HPP

#include <Eigen/Dense>

#include "hcsck/geometry.hpp"

namespace hcsck {

// Closed-form canonical potential u_G(x) = sum_i ell_i(x) log ell_i(x).
// Its Hessian sum_i nu_i nu_i^T / ell_i(x) is symmetric positive definite at
// every interior point. Evaluation at a point with some ell_i <= 0 throws
// BoundaryEvaluation.
class GuilleminPotential {
public:
    explicit GuilleminPotential(const DelzantPolytope& P) : P_(&P) {}

    double value(const Eigen::VectorXd& x) const;
    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const;
    Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const;

    const DelzantPolytope& polytope() const { return *P_; }

private:
    void require_interior(const Eigen::VectorXd& x) const;
    const DelzantPolytope* P_;
};

inline GuilleminPotential guillemin_base(const DelzantPolytope& P) {
    return GuilleminPotential(P);
}

} // namespace hcsck

#endif
