#include "hcsck/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hcsck {

namespace {

long long gcd_ll(long long a, long long b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

void check_primitive(const Eigen::VectorXi& nu) {
    long long g = 0;
    for (int i = 0; i < nu.size(); ++i) g = gcd_ll(g, nu[i]);
    if (g != 1)
        throw NonPrimitiveNormal("normal (" + std::to_string(nu[0]) +
                                 (nu.size() > 1 ? "," + std::to_string(nu[1]) : "") +
                                 ") has gcd " + std::to_string(g));
}

constexpr double kGeomTol = 1e-9;

} // namespace

DelzantPolytope DelzantPolytope::from_facets(int dim, std::vector<Facet> facets) {
    if (dim != 1 && dim != 2)
        throw Error("only dimensions 1 and 2 are supported");
    if ((dim == 1 && facets.size() < 2) || (dim == 2 && facets.size() < 3))
        throw Error("too few facets");
    for (const Facet& f : facets) {
        if (f.normal.size() != dim) throw Error("normal has wrong dimension");
        check_primitive(f.normal);
    }

    DelzantPolytope P;
    P.dim_ = dim;
    P.facets_ = std::move(facets);

    if (dim == 1) {
        // ell = nu x - c >= 0 with nu = +-1
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        int lo_count = 0, hi_count = 0;
        for (const Facet& f : P.facets_) {
            if (f.normal[0] == 1) {
                lo = std::max(lo, f.offset);
                ++lo_count;
            } else {
                hi = std::min(hi, -f.offset);
                ++hi_count;
            }
        }
        if (lo_count == 0 || hi_count == 0) throw NotBounded("interval missing an endpoint");
        if (P.facets_.size() > 2) throw RedundantFacet("more than two facets in dim 1");
        if (hi - lo <= kGeomTol) throw Error("empty interior");
        Eigen::VectorXd a(1), b(1);
        a << lo;
        b << hi;
        P.vertices_ = {a, b};
        P.measure_ = hi - lo;
        P.boundary_measure_ = 2.0;
        P.barycenter_ = 0.5 * (a + b);
        return P;
    }

    const int r = static_cast<int>(P.facets_.size());

    // boundedness: inward normals must positively span the plane, i.e. the
    // angular gap between consecutive normal directions is < pi
    {
        std::vector<double> angles;
        for (const Facet& f : P.facets_)
            angles.push_back(std::atan2(double(f.normal[1]), double(f.normal[0])));
        std::sort(angles.begin(), angles.end());
        double max_gap = 2 * M_PI + angles.front() - angles.back();
        for (std::size_t i = 1; i < angles.size(); ++i)
            max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
        if (max_gap >= M_PI - 1e-12) throw NotBounded("facet normals do not span the plane");
    }

    // candidate vertices from all pairs of facet lines
    struct Vertex {
        Eigen::VectorXd x;
        int fa, fb;
    };
    std::vector<Vertex> verts;
    for (int i = 0; i < r; ++i) {
        for (int j = i + 1; j < r; ++j) {
            Eigen::Matrix2d M;
            M.row(0) = P.facets_[static_cast<std::size_t>(i)].normal.cast<double>().transpose();
            M.row(1) = P.facets_[static_cast<std::size_t>(j)].normal.cast<double>().transpose();
            if (std::abs(M.determinant()) < 1e-14) continue;
            Eigen::Vector2d c(P.facets_[static_cast<std::size_t>(i)].offset,
                              P.facets_[static_cast<std::size_t>(j)].offset);
            Eigen::VectorXd x = M.inverse() * c;
            bool inside = true;
            for (int k = 0; k < r && inside; ++k)
                if (k != i && k != j && P.ell(k, x) < -kGeomTol) inside = false;
            if (!inside) continue;
            bool dup = false;
            for (const Vertex& v : verts)
                if ((v.x - x).norm() < 1e-9) dup = true;
            if (!dup) verts.push_back({x, i, j});
        }
    }
    if (verts.size() < 3) throw Error("empty interior");

    // order counter-clockwise around the centroid
    Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
    for (const Vertex& v : verts) centroid += v.x;
    centroid /= double(verts.size());
    std::sort(verts.begin(), verts.end(), [&](const Vertex& a, const Vertex& b) {
        return std::atan2(a.x[1] - centroid[1], a.x[0] - centroid[0]) <
               std::atan2(b.x[1] - centroid[1], b.x[0] - centroid[0]);
    });

    // every facet must carry exactly one edge, i.e. exactly two vertices
    std::vector<int> count(static_cast<std::size_t>(r), 0);
    for (const Vertex& v : verts) {
        ++count[static_cast<std::size_t>(v.fa)];
        ++count[static_cast<std::size_t>(v.fb)];
    }
    for (int i = 0; i < r; ++i) {
        if (count[static_cast<std::size_t>(i)] < 2)
            throw RedundantFacet("facet " + std::to_string(i) + " carries no edge");
        if (count[static_cast<std::size_t>(i)] > 2)
            throw Error("facet " + std::to_string(i) + " meets more than two vertices");
    }

    // Delzant condition: adjacent normals form a lattice basis
    for (const Vertex& v : verts) {
        Eigen::Matrix2d M;
        M.row(0) = P.facets_[static_cast<std::size_t>(v.fa)].normal.cast<double>().transpose();
        M.row(1) = P.facets_[static_cast<std::size_t>(v.fb)].normal.cast<double>().transpose();
        double det = M.determinant();
        if (std::abs(std::abs(det) - 1.0) > 1e-9)
            throw NotDelzant("vertex determinant " + std::to_string(det));
    }

    for (const Vertex& v : verts) P.vertices_.push_back(v.x);

    // area by the shoelace formula, barycenter by the standard centroid sum
    double area2 = 0.0;
    Eigen::Vector2d bc = Eigen::Vector2d::Zero();
    const std::size_t m = P.vertices_.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Eigen::VectorXd& a = P.vertices_[i];
        const Eigen::VectorXd& b = P.vertices_[(i + 1) % m];
        double cross = a[0] * b[1] - b[0] * a[1];
        area2 += cross;
        bc += cross * Eigen::Vector2d(a[0] + b[0], a[1] + b[1]);
    }
    P.measure_ = area2 / 2.0;
    if (P.measure_ <= kGeomTol) throw Error("empty interior");
    P.barycenter_ = bc / (3.0 * area2);

    P.boundary_measure_ = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const Eigen::VectorXd& a = P.vertices_[i];
        const Eigen::VectorXd& b = P.vertices_[(i + 1) % m];
        // the facet supporting this edge
        for (int k = 0; k < r; ++k)
            if (std::abs(P.ell(k, a)) < 1e-9 && std::abs(P.ell(k, b)) < 1e-9) {
                P.boundary_measure_ +=
                    (b - a).norm() /
                    P.facets_[static_cast<std::size_t>(k)].normal.cast<double>().norm();
                break;
            }
    }
    return P;
}

DelzantPolytope DelzantPolytope::interval(double a, double b) {
    Facet lo, hi;
    lo.normal = Eigen::VectorXi::Constant(1, 1);
    lo.offset = a;
    hi.normal = Eigen::VectorXi::Constant(1, -1);
    hi.offset = -b;
    return from_facets(1, {lo, hi});
}

DelzantPolytope DelzantPolytope::unit_square() {
    std::vector<Facet> f(4);
    f[0].normal = Eigen::Vector2i(1, 0);
    f[0].offset = 0;
    f[1].normal = Eigen::Vector2i(0, 1);
    f[1].offset = 0;
    f[2].normal = Eigen::Vector2i(-1, 0);
    f[2].offset = -1;
    f[3].normal = Eigen::Vector2i(0, -1);
    f[3].offset = -1;
    return from_facets(2, f);
}

DelzantPolytope DelzantPolytope::standard_simplex() {
    std::vector<Facet> f(3);
    f[0].normal = Eigen::Vector2i(1, 0);
    f[0].offset = 0;
    f[1].normal = Eigen::Vector2i(0, 1);
    f[1].offset = 0;
    f[2].normal = Eigen::Vector2i(-1, -1);
    f[2].offset = -1;
    return from_facets(2, f);
}

double DelzantPolytope::min_ell(const Eigen::VectorXd& x) const {
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < static_cast<int>(facets_.size()); ++i) m = std::min(m, ell(i, x));
    return m;
}

double DelzantPolytope::boundary_distance(const Eigen::VectorXd& x) const {
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < facets_.size(); ++i)
        m = std::min(m, ell(static_cast<int>(i), x) / facets_[i].normal.cast<double>().norm());
    return m;
}

void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        double b = k / std::sqrt(4.0 * k * k - 1.0);
        J(k - 1, k) = b;
        J(k, k - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    nodes = es.eigenvalues();
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double v = es.eigenvectors()(0, i);
        weights[i] = 2.0 * v * v;
    }
}

QuadratureRule polygon_quadrature(const std::vector<Eigen::VectorXd>& vertices, int order) {
    QuadratureRule rule;
    rule.measure = QuadratureRule::Measure::Interior;
    rule.order = order;

    const int p = (order + 1) / 2 + 1;  // 2p-1 >= order+1 covers the Duffy Jacobian
    Eigen::VectorXd gx, gw;
    gauss_legendre(p, gx, gw);

    Eigen::Vector2d c = Eigen::Vector2d::Zero();
    for (const auto& v : vertices) c += v;
    c /= double(vertices.size());

    std::vector<double> w;
    const std::size_t m = vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        Eigen::Vector2d a = vertices[i];
        Eigen::Vector2d b = vertices[(i + 1) % m];
        double area = 0.5 * std::abs((a - c).x() * (b - c).y() - (b - c).x() * (a - c).y());
        if (area < 1e-15) continue;
        // Duffy map of the unit square onto the triangle (c, a, b);
        // barycentric coordinates stay strictly positive at Gauss nodes
        for (int is = 0; is < p; ++is) {
            double s = 0.5 * (gx[is] + 1.0);
            double ws = 0.5 * gw[is];
            for (int it = 0; it < p; ++it) {
                double t = 0.5 * (gx[it] + 1.0);
                double wt = 0.5 * gw[it];
                Eigen::VectorXd x = (1.0 - s) * c + s * (1.0 - t) * a + s * t * b;
                rule.nodes.push_back(x);
                w.push_back(2.0 * area * s * ws * wt);
            }
        }
    }
    rule.weights = Eigen::Map<Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
    rule.facet_index.assign(rule.nodes.size(), -1);
    return rule;
}

QuadratureRule interior_quadrature(const DelzantPolytope& P, int order) {
    if (order < 1) throw Error("quadrature order must be >= 1");
    if (P.dim() == 1) {
        QuadratureRule rule;
        rule.measure = QuadratureRule::Measure::Interior;
        rule.order = order;
        const int p = order / 2 + 1;
        Eigen::VectorXd gx, gw;
        gauss_legendre(p, gx, gw);
        double a = P.vertices()[0][0], b = P.vertices()[1][0];
        rule.weights.resize(p);
        for (int i = 0; i < p; ++i) {
            Eigen::VectorXd x(1);
            x << a + 0.5 * (gx[i] + 1.0) * (b - a);
            rule.nodes.push_back(x);
            rule.weights[i] = 0.5 * (b - a) * gw[i];
        }
        rule.facet_index.assign(rule.nodes.size(), -1);
        return rule;
    }
    QuadratureRule rule = polygon_quadrature(P.vertices(), order);
    rule.order = order;
    return rule;
}

QuadratureRule boundary_quadrature(const DelzantPolytope& P, int order) {
    if (order < 1) throw Error("quadrature order must be >= 1");
    QuadratureRule rule;
    rule.measure = QuadratureRule::Measure::Boundary;
    rule.order = order;

    if (P.dim() == 1) {
        // 0-dimensional Hausdorff measure: unit point mass at each endpoint
        rule.nodes = {P.vertices()[0], P.vertices()[1]};
        rule.weights = Eigen::Vector2d(1.0, 1.0);
        for (const auto& v : rule.nodes) {
            for (std::size_t k = 0; k < P.facets().size(); ++k)
                if (std::abs(P.ell(static_cast<int>(k), v)) < 1e-12)
                    rule.facet_index.push_back(static_cast<int>(k));
        }
        return rule;
    }

    const int p = order / 2 + 1;
    Eigen::VectorXd gx, gw;
    gauss_legendre(p, gx, gw);

    std::vector<double> w;
    const auto& verts = P.vertices();
    const std::size_t m = verts.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Eigen::VectorXd& a = verts[i];
        const Eigen::VectorXd& b = verts[(i + 1) % m];
        int facet = -1;
        for (std::size_t k = 0; k < P.facets().size(); ++k)
            if (std::abs(P.ell(static_cast<int>(k), a)) < 1e-9 &&
                std::abs(P.ell(static_cast<int>(k), b)) < 1e-9)
                facet = static_cast<int>(k);
        double nu_norm = P.facets()[static_cast<std::size_t>(facet)].normal.cast<double>().norm();
        double mass = (b - a).norm() / nu_norm;  // dsigma = Hausdorff / |nu|
        for (int q = 0; q < p; ++q) {
            double t = 0.5 * (gx[q] + 1.0);
            rule.nodes.push_back(a + t * (b - a));
            w.push_back(0.5 * gw[q] * mass);
            rule.facet_index.push_back(facet);
        }
    }
    rule.weights = Eigen::Map<Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size()));
    return rule;
}

std::vector<Eigen::VectorXd> clip_polygon(const std::vector<Eigen::VectorXd>& vertices,
                                          const Eigen::VectorXd& dir, double offset) {
    std::vector<Eigen::VectorXd> out;
    const std::size_t m = vertices.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Eigen::VectorXd& a = vertices[i];
        const Eigen::VectorXd& b = vertices[(i + 1) % m];
        double fa = dir.dot(a) - offset;
        double fb = dir.dot(b) - offset;
        if (fa >= 0) out.push_back(a);
        if ((fa > 0 && fb < 0) || (fa < 0 && fb > 0)) {
            double t = fa / (fa - fb);
            out.push_back(a + t * (b - a));
        }
    }
    return out;
}

} // namespace hcsck
