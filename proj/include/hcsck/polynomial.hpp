#ifndef HCSCK_POLYNOMIAL_HPP
#define HCSCK_POLYNOMIAL_HPP

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hcsck/errors.hpp"

namespace hcsck {

// Dense polynomial in one or two variables with scalar coefficients.
// Coefficients are stored on a rectangular (deg+1)^dim grid; entries with
// total degree above deg() are simply zero. Degrees stay small (<= ~20)
// throughout the library, so the dense representation is fine.
template <typename Scalar>
class Polynomial {
public:
    Polynomial() : dim_(1), deg_(0), coef_(1, Scalar(0)) {}

    Polynomial(int dim, int deg)
        : dim_(dim), deg_(deg),
          coef_(static_cast<std::size_t>(dim == 1 ? deg + 1 : (deg + 1) * (deg + 1)),
                Scalar(0)) {}

    static Polynomial constant(int dim, Scalar c) {
        Polynomial p(dim, 0);
        p.coef_[0] = c;
        return p;
    }

    // x^i (dim 1) or x^i y^j (dim 2)
    static Polynomial monomial(int dim, int i, int j = 0) {
        Polynomial p(dim, i + j);
        p.at(i, j) = Scalar(1);
        return p;
    }

    int dim() const { return dim_; }
    int deg() const { return deg_; }

    Scalar& at(int i, int j = 0) {
        return coef_[static_cast<std::size_t>(dim_ == 1 ? i : i + j * (deg_ + 1))];
    }
    Scalar at(int i, int j = 0) const {
        if (i < 0 || j < 0 || i > deg_ || j > deg_) return Scalar(0);
        return coef_[static_cast<std::size_t>(dim_ == 1 ? i : i + j * (deg_ + 1))];
    }

    Scalar value(const Eigen::VectorXd& x) const {
        if (dim_ == 1) {
            Scalar acc(0);
            for (int i = deg_; i >= 0; --i) acc = acc * x[0] + at(i);
            return acc;
        }
        Scalar acc(0);
        for (int j = deg_; j >= 0; --j) {
            Scalar row(0);
            for (int i = deg_; i >= 0; --i) row = row * x[0] + at(i, j);
            acc = acc * x[1] + row;
        }
        return acc;
    }

    Polynomial derivative(int axis) const {
        Polynomial out(dim_, std::max(0, deg_ - 1));
        if (dim_ == 1) {
            for (int i = 1; i <= deg_; ++i) out.at(i - 1) = Scalar(i) * at(i);
            return out;
        }
        for (int i = 0; i <= deg_; ++i)
            for (int j = 0; j <= deg_; ++j) {
                if (axis == 0 && i >= 1 && i - 1 <= out.deg_ && j <= out.deg_)
                    out.at(i - 1, j) = Scalar(i) * at(i, j);
                if (axis == 1 && j >= 1 && i <= out.deg_ && j - 1 <= out.deg_)
                    out.at(i, j - 1) = Scalar(j) * at(i, j);
            }
        return out;
    }

    Eigen::Vector<Scalar, Eigen::Dynamic> gradient(const Eigen::VectorXd& x) const {
        Eigen::Vector<Scalar, Eigen::Dynamic> g(dim_);
        for (int a = 0; a < dim_; ++a) g[a] = derivative(a).value(x);
        return g;
    }

    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
    hessian(const Eigen::VectorXd& x) const {
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> h(dim_, dim_);
        for (int a = 0; a < dim_; ++a) {
            Polynomial da = derivative(a);
            for (int b = a; b < dim_; ++b) {
                h(a, b) = da.derivative(b).value(x);
                h(b, a) = h(a, b);
            }
        }
        return h;
    }

    Polynomial operator+(const Polynomial& o) const {
        Polynomial out(dim_, std::max(deg_, o.deg_));
        for (int i = 0; i <= out.deg_; ++i)
            for (int j = 0; j <= (dim_ == 1 ? 0 : out.deg_); ++j)
                out.at(i, j) = at(i, j) + o.at(i, j);
        return out;
    }
    Polynomial operator-(const Polynomial& o) const {
        Polynomial out(dim_, std::max(deg_, o.deg_));
        for (int i = 0; i <= out.deg_; ++i)
            for (int j = 0; j <= (dim_ == 1 ? 0 : out.deg_); ++j)
                out.at(i, j) = at(i, j) - o.at(i, j);
        return out;
    }
    Polynomial operator*(Scalar s) const {
        Polynomial out = *this;
        for (auto& c : out.coef_) c *= s;
        return out;
    }
    Polynomial operator*(const Polynomial& o) const {
        Polynomial out(dim_, deg_ + o.deg_);
        for (int i = 0; i <= deg_; ++i)
            for (int j = 0; j <= (dim_ == 1 ? 0 : deg_); ++j) {
                if (at(i, j) == Scalar(0)) continue;
                for (int p = 0; p <= o.deg_; ++p)
                    for (int q = 0; q <= (dim_ == 1 ? 0 : o.deg_); ++q)
                        out.at(i + p, j + q) += at(i, j) * o.at(p, q);
            }
        return out;
    }

private:
    int dim_;
    int deg_;
    std::vector<Scalar> coef_;
};

using Poly = Polynomial<double>;
using CPoly = Polynomial<std::complex<double>>;

// Legendre polynomial P_k on [-1, 1] as a 1D coefficient polynomial.
inline Poly legendre(int k) {
    Poly p0 = Poly::constant(1, 1.0);
    if (k == 0) return p0;
    Poly x = Poly::monomial(1, 1);
    Poly p1 = x;
    for (int m = 1; m < k; ++m) {
        // (m+1) P_{m+1} = (2m+1) x P_m - m P_{m-1}
        Poly next = (x * p1) * (double(2 * m + 1) / (m + 1)) - p0 * (double(m) / (m + 1));
        p0 = p1;
        p1 = next;
    }
    return p1;
}

// A polynomial precomposed with the affine map x -> (x - center)/scale.
// Used for basis functions, which are orthonormalized in well-conditioned
// local coordinates but evaluated in world coordinates.
struct ScaledPoly {
    Poly p;
    Eigen::VectorXd center;
    double scale = 1.0;

    double value(const Eigen::VectorXd& x) const {
        return p.value((x - center) / scale);
    }
    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const {
        return p.gradient((x - center) / scale) / scale;
    }
    Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const {
        return p.hessian((x - center) / scale) / (scale * scale);
    }
};

} // namespace hcsck

#endif
