#include "hcsck/spectral.hpp"

#include <cmath>

namespace hcsck {

bool SpectralFunction::validate_on_grid(double lo, double hi, int n) const {
    for (int i = 0; i < n; ++i) {
        double lambda = lo + (hi - lo) * i / (n - 1);
        if (std::isfinite(lambda_sup_) && lambda >= lambda_sup_ - 1e-9) break;
        if (kp_(lambda) < -1e-12 || kpp_(lambda) < -1e-12) return false;
    }
    return true;
}

SpectralFunction builtin_spectral(const std::string& name) {
    if (name == "linear") {
        return SpectralFunction(
            name, [](double l) { return l; }, [](double) { return 1.0; },
            [](double) { return 0.0; }, std::numeric_limits<double>::infinity());
    }
    if (name == "quadratic") {
        return SpectralFunction(
            name, [](double l) { return 0.5 * l * l; }, [](double l) { return l; },
            [](double) { return 1.0; }, std::numeric_limits<double>::infinity());
    }
    if (name == "hyperkahler") {
        // k = 1 - sqrt(1-l) + log((1 + sqrt(1-l))/2); the metric it defines
        // is smooth only where the eigenvalues stay below 1
        auto k = [](double l) {
            double s = std::sqrt(1.0 - l);
            return 1.0 - s + std::log((1.0 + s) / 2.0);
        };
        auto kp = [](double l) { return 1.0 / (2.0 * (1.0 + std::sqrt(1.0 - l))); };
        auto kpp = [](double l) {
            double s = std::sqrt(1.0 - l);
            return 1.0 / (4.0 * s * (1.0 + s) * (1.0 + s));
        };
        return SpectralFunction(name, k, kp, kpp, 1.0);
    }
    throw UnknownSpectralFunction(name);
}

SpectralFunction polynomial_spectral(const std::vector<double>& coeffs, double grid_hi) {
    auto eval = [coeffs](double l, int order) {
        double acc = 0.0;
        for (int i = static_cast<int>(coeffs.size()) - 1; i >= order; --i) {
            double f = 1.0;
            for (int m = 0; m < order; ++m) f *= double(i - m);
            acc = acc * l + f * coeffs[static_cast<std::size_t>(i)];
        }
        return acc;
    };
    SpectralFunction k(
        "polynomial", [eval](double l) { return eval(l, 0); },
        [eval](double l) { return eval(l, 1); }, [eval](double l) { return eval(l, 2); },
        std::numeric_limits<double>::infinity());
    if (!k.validate_on_grid(0.0, grid_hi, 1000))
        throw UnknownSpectralFunction("polynomial k is not convex non-decreasing on [0, " +
                                      std::to_string(grid_hi) + "]");
    return k;
}

HermitianEig::HermitianEig(const Eigen::MatrixXcd& N) : matrix(N) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (N + N.adjoint()));
    lambda = es.eigenvalues();
    U = es.eigenvectors();
}

double eval_f(const Eigen::VectorXd& eigs, const SpectralFunction& k) {
    double f = 0.0;
    for (Eigen::Index a = 0; a < eigs.size(); ++a) f += k.k(eigs[a]);
    return f;
}

double eval_f(const HermitianEig& eig, const SpectralFunction& k) {
    return eval_f(eig.lambda, k);
}

Eigen::MatrixXcd matrix_gradient(const Eigen::MatrixXcd& N, const SpectralFunction& k) {
    HermitianEig eig(N);
    Eigen::VectorXd d(eig.lambda.size());
    for (Eigen::Index a = 0; a < d.size(); ++a) d[a] = k.kp(eig.lambda[a]);
    return eig.U * d.asDiagonal() * eig.U.adjoint();
}

Eigen::MatrixXcd loewner_derivative(const Eigen::MatrixXcd& N, const Eigen::MatrixXcd& E,
                                    const std::function<double(double)>& h,
                                    const std::function<double(double)>& hp) {
    HermitianEig eig(N);
    const Eigen::Index n = eig.lambda.size();
    Eigen::MatrixXcd Ep = eig.U.adjoint() * E * eig.U;
    for (Eigen::Index a = 0; a < n; ++a) {
        for (Eigen::Index b = 0; b < n; ++b) {
            double la = eig.lambda[a], lb = eig.lambda[b];
            double gamma = degenerate_pair(la, lb) ? hp(0.5 * (la + lb))
                                                   : (h(la) - h(lb)) / (la - lb);
            Ep(a, b) *= gamma;
        }
    }
    return eig.U * Ep * eig.U.adjoint();
}

} // namespace hcsck
