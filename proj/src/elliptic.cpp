#include "rb/elliptic.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include "rb/errors.hpp"
#include "rb/mapped_laplace.hpp"

namespace rb {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

/** Curve data on the half-index angular grid: values and derivatives at
 * nodes (even it2) and segment midpoints (odd it2), all second-order. */
struct HalfGridCurve {
    explicit HalfGridCurve(const StarCurve& c) {
        const int n = c.size();
        const double dtheta = kTwoPi / n;
        f.resize(static_cast<std::size_t>(2 * n));
        df.resize(static_cast<std::size_t>(2 * n));
        for (int i = 0; i < n; ++i) {
            const double fm = c.radius((i + n - 1) % n);
            const double f0 = c.radius(i);
            const double fp = c.radius((i + 1) % n);
            f[static_cast<std::size_t>(2 * i)] = f0;
            df[static_cast<std::size_t>(2 * i)] = (fp - fm) / (2.0 * dtheta);
            f[static_cast<std::size_t>(2 * i + 1)] = 0.5 * (f0 + fp);
            df[static_cast<std::size_t>(2 * i + 1)] = (fp - f0) / dtheta;
        }
    }
    std::vector<double> f, df;
};

}  // namespace

AnnularMesh::AnnularMesh(StarCurve inner_, StarCurve outer_, int nr_, int ntheta_)
    : inner(std::move(inner_)), outer(std::move(outer_)), nr(nr_), ntheta(ntheta_) {
    if (nr < 3) throw MeshError("annular mesh: nr must be >= 3");
    if (ntheta < 8) throw MeshError("annular mesh: ntheta must be >= 8");
    if (inner.size() != ntheta || outer.size() != ntheta)
        throw MeshError("annular mesh: curve grids must match ntheta");
    for (int i = 0; i < ntheta; ++i)
        if (!(outer.radius(i) > inner.radius(i)))
            throw MeshError("annular mesh: boundaries cross (f_out <= f_in)");
}

double AnnularMesh::theta(int i) const { return kTwoPi * i / ntheta; }

double AnnularMesh::radius(int j, int i) const {
    const double sj = s(j);
    return (1.0 - sj) * inner.radius(i) + sj * outer.radius(i);
}

GridField::GridField(AnnularMesh mesh_, std::vector<double> values_)
    : mesh(std::move(mesh_)), values(std::move(values_)) {
    if (values.size() != static_cast<std::size_t>(mesh.nr) * mesh.ntheta)
        throw std::invalid_argument("grid field: value count does not match mesh");
}

GridField solve_dirichlet(const AnnularMesh& mesh, const std::vector<double>& g_inner,
                          const std::vector<double>& g_outer, double tolerance) {
    if (static_cast<int>(g_inner.size()) != mesh.ntheta ||
        static_cast<int>(g_outer.size()) != mesh.ntheta)
        throw std::invalid_argument("solve_dirichlet: boundary data size mismatch");

    const HalfGridCurve in(mesh.inner), out(mesh.outer);
    const double ds2 = 0.5 / (mesh.nr - 1);  // s step per half-index

    // Polar Laplacian in mapped coordinates, conservative form with
    //   d = f_out - f_in,  r = (1-s) f_in + s f_out,  p = dr/dtheta:
    //   alpha = (r^2 + p^2)/(r d),  beta = -p/r,  gamma = d/r.
    auto geom = [&](int js2, int it2, double& r, double& d, double& p) {
        const double s = js2 * ds2;
        const auto i = static_cast<std::size_t>(it2);
        d = out.f[i] - in.f[i];
        r = (1.0 - s) * in.f[i] + s * out.f[i];
        p = (1.0 - s) * in.df[i] + s * out.df[i];
    };

    MappedLaplaceProblem problem;
    problem.ns = mesh.nr;
    problem.ntheta = mesh.ntheta;
    problem.alpha = [&, geom](int js2, int it2) {
        double r, d, p;
        geom(js2, it2, r, d, p);
        return (r * r + p * p) / (r * d);
    };
    problem.beta = [&, geom](int js2, int it2) {
        double r, d, p;
        geom(js2, it2, r, d, p);
        return -p / r;
    };
    problem.gamma = [&, geom](int js2, int it2) {
        double r, d, p;
        geom(js2, it2, r, d, p);
        return d / r;
    };
    problem.bottom = g_inner;
    problem.top = TopCondition::dirichlet;
    problem.top_values = g_outer;
    problem.tolerance = tolerance;

    return GridField(mesh, solve_mapped_laplace(problem));
}

std::vector<double> boundary_gradient(const GridField& field, Side side) {
    const AnnularMesh& mesh = field.mesh;
    const int nt = mesh.ntheta;
    const double ds = 1.0 / (mesh.nr - 1);
    const double dtheta = kTwoPi / nt;
    const int j0 = (side == Side::inner) ? 0 : mesh.nr - 1;

    std::vector<double> grad(static_cast<std::size_t>(nt));
    for (int i = 0; i < nt; ++i) {
        double vs;
        if (side == Side::inner)
            vs = (-3.0 * field.at(0, i) + 4.0 * field.at(1, i) - field.at(2, i)) / (2.0 * ds);
        else
            vs = (3.0 * field.at(j0, i) - 4.0 * field.at(j0 - 1, i) + field.at(j0 - 2, i)) /
                 (2.0 * ds);
        const double vt =
            (field.at(j0, (i + 1) % nt) - field.at(j0, (i + nt - 1) % nt)) / (2.0 * dtheta);

        const int im = (i + nt - 1) % nt, ip = (i + 1) % nt;
        const StarCurve& curve = (side == Side::inner) ? mesh.inner : mesh.outer;
        const double fprime = (curve.radius(ip) - curve.radius(im)) / (2.0 * dtheta);
        const double d = mesh.outer.radius(i) - mesh.inner.radius(i);
        const double r = curve.radius(i);

        const double ur = vs / d;
        const double utheta = -fprime / d * vs + vt;
        grad[static_cast<std::size_t>(i)] = std::hypot(ur, utheta / r);
    }
    return grad;
}

void write_grid_field(const std::string& path, const GridField& field,
                      const std::vector<std::string>& header_lines) {
    std::ofstream fout(path);
    if (!fout) throw ParseError("cannot open for writing: " + path);
    for (const auto& h : header_lines) fout << "# " << h << "\n";
    fout << field.mesh.nr << " " << field.mesh.ntheta << "\n";
    char buf[32];
    for (int j = 0; j < field.mesh.nr; ++j) {
        for (int i = 0; i < field.mesh.ntheta; ++i) {
            std::snprintf(buf, sizeof(buf), "%.12g", field.at(j, i));
            fout << buf << (i + 1 == field.mesh.ntheta ? "\n" : " ");
        }
    }
}

}  // namespace rb
