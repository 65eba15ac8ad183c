#pragma once

#include <string>
#include <vector>

#include "rb/star_curve.hpp"

namespace rb {

/** Boundary-fitted annular mesh between two star curves sharing one angular
 * grid. Radial lines blend linearly,
 *     r(s, theta) = (1-s) f_in(theta) + s f_out(theta),  s in [0, 1],
 * with nr nodes in s and ntheta periodic nodes in theta. */
struct AnnularMesh {
    /// Throws MeshError on boundary crossing or grid mismatch.
    AnnularMesh(StarCurve inner_, StarCurve outer_, int nr_, int ntheta_);

    StarCurve inner;
    StarCurve outer;
    int nr;
    int ntheta;

    double s(int j) const { return static_cast<double>(j) / (nr - 1); }
    double theta(int i) const;
    double radius(int j, int i) const;
};

/// Nodal scalar field on an annular mesh, values[j*ntheta + i].
struct GridField {
    GridField(AnnularMesh mesh_, std::vector<double> values_);

    AnnularMesh mesh;
    std::vector<double> values;

    double at(int j, int i) const {
        return values[static_cast<std::size_t>(j) * mesh.ntheta + i];
    }
};

enum class Side { inner, outer };

/** Solves the Laplace equation on the mesh with Dirichlet data per angular
 * node on both boundaries (second-order accurate in both directions). */
GridField solve_dirichlet(const AnnularMesh& mesh, const std::vector<double>& g_inner,
                          const std::vector<double>& g_outer, double tolerance = 1e-10);

/** |grad u| per angular node on the requested boundary, from a one-sided
 * second-order radial difference and centered angular differences, combined
 * through the mesh map Jacobian. */
std::vector<double> boundary_gradient(const GridField& field, Side side);

/// Text dump: header "nr ntheta", then one row of values per s-level.
void write_grid_field(const std::string& path, const GridField& field,
                      const std::vector<std::string>& header_lines = {});

}  // namespace rb
