#ifndef HCSCK_ABREU_HPP
#define HCSCK_ABREU_HPP

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "hcsck/basis.hpp"
#include "hcsck/geometry.hpp"
#include "hcsck/guillemin.hpp"
#include "hcsck/polynomial.hpp"
#include "hcsck/spectral.hpp"

namespace hcsck {

// Symplectic potential u = u_G + sum_j c_j phi_j: closed-form Guillemin part
// plus a polynomial correction over a Galerkin basis. The correction is
// smooth up to the boundary, so Guillemin's boundary conditions are
// preserved for every coefficient vector.
class PotentialField {
public:
    explicit PotentialField(const DelzantPolytope& P)
        : P_(&P), base_(P) {}

    PotentialField(const DelzantPolytope& P, const GalerkinBasis& basis,
                   Eigen::VectorXd coeffs)
        : P_(&P), base_(P), basis_(&basis), coeffs_(std::move(coeffs)) {}

    const DelzantPolytope& polytope() const { return *P_; }
    const GuilleminPotential& base() const { return base_; }
    const GalerkinBasis* basis() const { return basis_; }
    const Eigen::VectorXd& coeffs() const { return coeffs_; }

    double value(const Eigen::VectorXd& x) const {
        return base_.value(x) + correction_value(x);
    }
    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const {
        Eigen::VectorXd g = base_.gradient(x);
        if (basis_)
            for (Eigen::Index j = 0; j < coeffs_.size(); ++j)
                g += coeffs_[j] * basis_->function(j).gradient(x);
        return g;
    }
    Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const {
        Eigen::MatrixXd G = base_.hessian(x);
        if (basis_) G += correction_hessian(x);
        return G;
    }

    // polynomial part only; finite up to and beyond the boundary
    double correction_value(const Eigen::VectorXd& x) const {
        double v = 0.0;
        if (basis_)
            for (Eigen::Index j = 0; j < coeffs_.size(); ++j)
                v += coeffs_[j] * basis_->function(j).value(x);
        return v;
    }
    Eigen::MatrixXd correction_hessian(const Eigen::VectorXd& x) const {
        Eigen::MatrixXd H = Eigen::MatrixXd::Zero(P_->dim(), P_->dim());
        if (basis_)
            for (Eigen::Index j = 0; j < coeffs_.size(); ++j)
                H += coeffs_[j] * basis_->function(j).hessian(x);
        return H;
    }

private:
    const DelzantPolytope* P_;
    GuilleminPotential base_;
    const GalerkinBasis* basis_ = nullptr;
    Eigen::VectorXd coeffs_;
};

// Hessian H = D^2 h of the deformation potential h, a complex symmetric
// matrix field. Either a constant matrix or a complex polynomial h. H never
// depends on the symplectic potential: transporting u at fixed H is exactly
// the horizontal transport of the deformation.
class DeformationHessian {
public:
    DeformationHessian() = default;

    static DeformationHessian zero(int dim) {
        DeformationHessian d;
        d.constant_ = Eigen::MatrixXcd::Zero(dim, dim);
        return d;
    }
    static DeformationHessian constant(const Eigen::MatrixXcd& H) {
        if ((H - H.transpose()).norm() > 1e-14 * (1.0 + H.norm()))
            throw Error("deformation matrix must be symmetric");
        DeformationHessian d;
        d.constant_ = 0.5 * (H + H.transpose());
        return d;
    }
    static DeformationHessian from_potential(const CPoly& h) {
        DeformationHessian d;
        d.poly_ = h;
        return d;
    }

    Eigen::MatrixXcd value(const Eigen::VectorXd& x) const {
        if (poly_) {
            Eigen::MatrixXcd H = poly_->hessian(x);
            return 0.5 * (H + H.transpose());  // exact symmetry
        }
        return constant_;
    }

    bool is_zero() const {
        if (poly_) return poly_->deg() <= 1;
        return constant_.norm() == 0.0;
    }

private:
    Eigen::MatrixXcd constant_;
    std::optional<CPoly> poly_;
};

// Pointwise tensor data of the deformed Abreu operator at an interior point:
//   G = D^2 u,   M = G^{-1/2} H G^{-1/2},   N = M^* M,
//   T = G^{-1/2} (1 + 2 t k'(N) N) G^{-1/2}.
// N is Hermitian PSD with the same spectrum as the product endomorphism
// G^{-1} conj(H) G^{-1} H, and T is Hermitian positive definite with
// min-eig(T) >= 1/max-eig(G). The weight t scales the deformation term of
// the continuity path; t = 1 is the full equation.
struct TensorSample {
    Eigen::VectorXd x;
    Eigen::MatrixXd G;
    Eigen::MatrixXd G_inv_sqrt;
    Eigen::MatrixXcd M;
    Eigen::VectorXd lambda;   // ascending eigenvalues of N
    Eigen::MatrixXcd U;       // eigenvectors of N
    Eigen::MatrixXcd T;
    double lambda_max = 0.0;

    double trace_T_dot(const Eigen::MatrixXd& S) const {
        return (T * S).trace().real();
    }
};

TensorSample tensor_from_matrices(const Eigen::MatrixXd& G, const Eigen::MatrixXcd& H,
                                  const SpectralFunction& k, double t_weight = 1.0);

TensorSample tensor_sample(const PotentialField& u, const DeformationHessian& H,
                           const SpectralFunction& k, const Eigen::VectorXd& x,
                           double t_weight = 1.0);

// A test function: anything with a value and a Hessian. Adapters from
// ScaledPoly and Polynomial are provided.
struct TestFunction {
    std::function<double(const Eigen::VectorXd&)> value;
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hessian;

    static TestFunction from(const ScaledPoly& p) {
        return {[p](const Eigen::VectorXd& x) { return p.value(x); },
                [p](const Eigen::VectorXd& x) { return p.hessian(x); }};
    }
    static TestFunction from(const Poly& p) {
        return {[p](const Eigen::VectorXd& x) { return p.value(x); },
                [p](const Eigen::VectorXd& x) { return p.hessian(x); }};
    }
};

// Weak-form residual of the equation against the test functions:
//   r_j = int_P Tr(T D^2 phi_j) dmu - int_{dP} phi_j dsigma + int_P A phi_j dmu.
// r = 0 on a spanning test space iff u is a discrete solution. Only second
// derivatives of u and h enter.
Eigen::VectorXd weak_residual(const PotentialField& u, const DeformationHessian& H,
                              const SpectralFunction& k, const AffineFunction& A,
                              const std::vector<TestFunction>& testfns,
                              const QuadratureRule& interior, const QuadratureRule& boundary,
                              double t_weight = 1.0);

double weak_residual_single(const PotentialField& u, const DeformationHessian& H,
                            const SpectralFunction& k, const AffineFunction& A,
                            const TestFunction& v, const QuadratureRule& interior,
                            const QuadratureRule& boundary, double t_weight = 1.0);

// Relative energy HK(u) - HK(u_ref) with the log-det difference integrated
// as the bounded integrand log(det G_ref / det G):
//   int_{dP}(u - u_ref) dsigma - int_P A (u - u_ref) dmu
//   + int_P log(det G_ref / det G) dmu + t int_P [f(N_u) - f(N_ref)] dmu.
double energy(const PotentialField& u, const DeformationHessian& H,
              const SpectralFunction& k, const AffineFunction& A,
              const PotentialField& u_ref, const QuadratureRule& interior,
              const QuadratureRule& boundary, double t_weight = 1.0);

struct GradientCheck {
    double fd_derivative;
    double minus_residual;
    double discrepancy;  // |fd + r(w)| / max(1, |fd|)
};

// Central-difference check of the variational identity
// d/dt|_0 HK(u + t w) = -r(w).
GradientCheck energy_gradient_check(const PotentialField& u, const DeformationHessian& H,
                                    const SpectralFunction& k, const AffineFunction& A,
                                    const ScaledPoly& w, double step,
                                    const QuadratureRule& interior,
                                    const QuadratureRule& boundary, double t_weight = 1.0);

// Double divergence (T^{ab})_{,ab}(x) by second-order central finite
// differences of the tensor field on a 5-point-per-axis stencil.
double fd_double_divergence(const PotentialField& u, const DeformationHessian& H,
                            const SpectralFunction& k, const Eigen::VectorXd& x,
                            double fd_step, double t_weight = 1.0);

// Pointwise strong-form diagnostic -(T^{ab})_{,ab}(x) - A(x).
double strong_residual_at(const PotentialField& u, const DeformationHessian& H,
                          const SpectralFunction& k, const AffineFunction& A,
                          const Eigen::VectorXd& x, double fd_step, double t_weight = 1.0);

struct JacobianResult {
    Eigen::MatrixXd sym;      // symmetrized discrete Hessian of the energy
    double asymmetry = 0.0;   // ||J - J^T|| / ||J|| before symmetrization
};

// Discrete Hessian of the energy (equivalently minus the Jacobian of the
// weak residual) in the correction coefficients, by central finite
// differences of r, then symmetrized. At a discrete solution it is PSD with
// kernel only from affine modes, which the basis excludes.
JacobianResult galerkin_jacobian(const PotentialField& u, const DeformationHessian& H,
                                 const SpectralFunction& k, const AffineFunction& A,
                                 const GalerkinBasis& basis, const QuadratureRule& interior,
                                 const QuadratureRule& boundary, double t_weight = 1.0,
                                 double fd_step = 1e-5);

} // namespace hcsck

#endif
