#ifndef HCSCK_GEOMETRY_HPP
#define HCSCK_GEOMETRY_HPP

#include <Eigen/Dense>
#include <vector>

#include "hcsck/errors.hpp"

namespace hcsck {

// One half-space ell(x) = <normal, x> - offset >= 0 of the facet presentation.
struct Facet {
    Eigen::VectorXi normal;  // primitive integer inward normal
    double offset = 0.0;
};

// An affine function a0 + <lin, x>; used for the right-hand side A of the
// equation and for the extremal affine function.
struct AffineFunction {
    double a0 = 0.0;
    Eigen::VectorXd lin;

    double value(const Eigen::VectorXd& x) const { return a0 + lin.dot(x); }
    static AffineFunction constant(int dim, double c) {
        AffineFunction a;
        a.a0 = c;
        a.lin = Eigen::VectorXd::Zero(dim);
        return a;
    }
};

// Quadrature rule against the interior measure dmu or the boundary measure
// dsigma. Boundary nodes remember which facet they sit on.
struct QuadratureRule {
    enum class Measure { Interior, Boundary };

    std::vector<Eigen::VectorXd> nodes;
    Eigen::VectorXd weights;
    Measure measure = Measure::Interior;
    int order = 0;
    std::vector<int> facet_index;  // boundary rules only; -1 for interior

    double total() const { return weights.sum(); }

    template <typename F>
    auto integrate(F&& f) const -> decltype(f(nodes[0])) {
        decltype(f(nodes[0])) acc{};
        for (std::size_t i = 0; i < nodes.size(); ++i)
            acc += weights[static_cast<Eigen::Index>(i)] * f(nodes[i]);
        return acc;
    }
};

// Delzant polytope in dimension 1 or 2 given by its facet presentation.
// Immutable after construction; construction validates boundedness,
// primitivity of normals, absence of redundant facets and the vertex
// determinant condition.
class DelzantPolytope {
public:
    static DelzantPolytope from_facets(int dim, std::vector<Facet> facets);

    // common test polytopes
    static DelzantPolytope interval(double a, double b);
    static DelzantPolytope unit_square();
    static DelzantPolytope standard_simplex();

    int dim() const { return dim_; }
    const std::vector<Facet>& facets() const { return facets_; }
    // vertices in boundary (counter-clockwise) order; for dim 1 the two
    // endpoints in increasing order
    const std::vector<Eigen::VectorXd>& vertices() const { return vertices_; }

    double ell(int facet, const Eigen::VectorXd& x) const {
        return facets_[static_cast<std::size_t>(facet)].normal.cast<double>().dot(x) -
               facets_[static_cast<std::size_t>(facet)].offset;
    }
    double min_ell(const Eigen::VectorXd& x) const;
    // Euclidean distance to the boundary (min over facets of ell/|nu|)
    double boundary_distance(const Eigen::VectorXd& x) const;
    bool contains(const Eigen::VectorXd& x, double margin = 0.0) const {
        return min_ell(x) > margin;
    }

    Eigen::VectorXd barycenter() const { return barycenter_; }
    double measure() const { return measure_; }           // mu(P)
    double boundary_measure() const { return boundary_measure_; }  // sigma(dP)

private:
    DelzantPolytope() = default;

    int dim_ = 0;
    std::vector<Facet> facets_;
    std::vector<Eigen::VectorXd> vertices_;
    Eigen::VectorXd barycenter_;
    double measure_ = 0.0;
    double boundary_measure_ = 0.0;
};

// Gauss-Legendre nodes and weights on [-1, 1] (Golub-Welsch).
void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

// Interior rule exact for polynomials of total degree <= order, with all
// nodes strictly inside P. Fan triangulation from the barycenter plus
// Duffy-mapped tensor Gauss rules.
QuadratureRule interior_quadrature(const DelzantPolytope& P, int order);

// Per-facet Gauss rule against dsigma = (Hausdorff measure)/|nu|_2, the
// unique facet measure with dsigma ^ d ell = +-dmu. In dim 1 each endpoint
// carries weight 1.
QuadratureRule boundary_quadrature(const DelzantPolytope& P, int order);

// Quadrature over an arbitrary convex polygon given by CCW vertices.
// Used internally by interior_quadrature and by the stability module for
// crease-split integration.
QuadratureRule polygon_quadrature(const std::vector<Eigen::VectorXd>& vertices,
                                  int order);

// Clip a CCW-ordered convex polygon against the half-plane <dir, x> >= offset.
std::vector<Eigen::VectorXd> clip_polygon(const std::vector<Eigen::VectorXd>& vertices,
                                          const Eigen::VectorXd& dir, double offset);

} // namespace hcsck

#endif
