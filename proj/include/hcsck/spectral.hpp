#ifndef HCSCK_SPECTRAL_HPP
#define HCSCK_SPECTRAL_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "hcsck/errors.hpp"

namespace hcsck {

// Scalar spectral function k with its first two derivatives and the least
// upper bound of its domain. k is required to be convex and non-decreasing
// on [0, lambda_sup); validate_on_grid checks this numerically.
class SpectralFunction {
public:
    SpectralFunction() = default;
    SpectralFunction(std::string name, std::function<double(double)> k,
                     std::function<double(double)> kp, std::function<double(double)> kpp,
                     double lambda_sup)
        : name_(std::move(name)), k_(std::move(k)), kp_(std::move(kp)),
          kpp_(std::move(kpp)), lambda_sup_(lambda_sup) {}

    const std::string& name() const { return name_; }
    double lambda_sup() const { return lambda_sup_; }

    // Domain guard: for a finite lambda_sup, values within 1e-9 of the
    // supremum are rejected as well; the divided-difference calculus is not
    // usable that close to the singular locus.
    void check_domain(double lambda) const {
        if (lambda < -1e-12) throw DomainExceeded("negative eigenvalue " + std::to_string(lambda));
        if (std::isfinite(lambda_sup_) && lambda >= lambda_sup_ - 1e-9)
            throw DomainExceeded("lambda = " + std::to_string(lambda) + " >= sup " +
                                 std::to_string(lambda_sup_));
    }

    double k(double lambda) const {
        check_domain(lambda);
        return k_(std::max(lambda, 0.0));
    }
    double kp(double lambda) const {
        check_domain(lambda);
        return kp_(std::max(lambda, 0.0));
    }
    double kpp(double lambda) const {
        check_domain(lambda);
        return kpp_(std::max(lambda, 0.0));
    }

    // k' >= 0 and k'' >= 0 on an n-point grid of [lo, hi]
    bool validate_on_grid(double lo, double hi, int n) const;

private:
    std::string name_;
    std::function<double(double)> k_, kp_, kpp_;
    double lambda_sup_ = std::numeric_limits<double>::infinity();
};

// Builtin catalogue: "linear" k = lambda, "quadratic" k = lambda^2/2 (both
// with unbounded domain) and "hyperkahler"
//   k(lambda) = 1 - sqrt(1-lambda) + log((1 + sqrt(1-lambda))/2),
// defined for lambda < 1.
SpectralFunction builtin_spectral(const std::string& name);

// Custom k from polynomial coefficients c_0 + c_1 lambda + ...; derivatives
// are exact. The coefficients are checked for convexity/monotonicity on a
// grid of [0, grid_hi].
SpectralFunction polynomial_spectral(const std::vector<double>& coeffs, double grid_hi = 2.0);

// Eigendecomposition of a Hermitian positive semidefinite matrix with
// eigenvalues in ascending order.
struct HermitianEig {
    Eigen::MatrixXcd matrix;
    Eigen::VectorXd lambda;
    Eigen::MatrixXcd U;

    explicit HermitianEig(const Eigen::MatrixXcd& N);
};

// f(N) = sum_a k(lambda_a) for the spectral function f = sum k.
double eval_f(const Eigen::VectorXd& eigs, const SpectralFunction& k);
double eval_f(const HermitianEig& eig, const SpectralFunction& k);

// Gradient f'(N) = U diag(k'(lambda_a)) U^*; commutes with N.
Eigen::MatrixXcd matrix_gradient(const Eigen::MatrixXcd& N, const SpectralFunction& k);

// Divided differences lifted to matrices: first derivative of the spectral
// matrix function h(N) in direction E (Daleckii-Krein),
//   d/dt|_0 h(N + tE) = U (Gamma o (U^* E U)) U^*,
// Gamma_ab = (h(l_a) - h(l_b))/(l_a - l_b), Gamma_aa = h'(l_a). Eigenvalue
// pairs closer than the degeneracy threshold use h' at the midpoint.
Eigen::MatrixXcd loewner_derivative(const Eigen::MatrixXcd& N, const Eigen::MatrixXcd& E,
                                    const std::function<double(double)>& h,
                                    const std::function<double(double)>& hp);

// |l_a - l_b| below this is treated as a coincident pair
inline bool degenerate_pair(double la, double lb) {
    return std::abs(la - lb) < 1e-8 * std::max(1.0, std::abs(la) + std::abs(lb));
}

} // namespace hcsck

#endif
