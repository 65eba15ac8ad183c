#include "rb/mapped_laplace.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rb/errors.hpp"

namespace rb {

namespace {

struct StencilContext {
    const MappedLaplaceProblem& p;
    double ds, dtheta;
    std::vector<Eigen::Triplet<double>> entries;

    int index(int j, int i) const {
        i %= p.ntheta;
        if (i < 0) i += p.ntheta;
        return j * p.ntheta + i;
    }

    // Fold ghost rows back into the grid (zero-flux reflection at s = 1).
    int fold(int j) const { return j >= p.ns ? 2 * (p.ns - 1) - j : j; }

    void add(int row, int j, int i, double w) {
        entries.emplace_back(row, index(fold(j), i), w);
    }
};

}  // namespace

std::vector<double> solve_mapped_laplace(const MappedLaplaceProblem& p) {
    if (p.ns < 3) throw std::invalid_argument("mapped laplace: ns must be >= 3");
    if (p.ntheta < 8) throw std::invalid_argument("mapped laplace: ntheta must be >= 8");
    if (static_cast<int>(p.bottom.size()) != p.ntheta)
        throw std::invalid_argument("mapped laplace: bottom data size mismatch");
    if (p.top == TopCondition::dirichlet &&
        static_cast<int>(p.top_values.size()) != p.ntheta)
        throw std::invalid_argument("mapped laplace: top data size mismatch");

    const int ns = p.ns, nt = p.ntheta;
    const int n = ns * nt;
    StencilContext ctx{p, 1.0 / (ns - 1), 2.0 * std::numbers::pi / nt, {}};
    ctx.entries.reserve(static_cast<std::size_t>(9) * static_cast<std::size_t>(n));
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);

    const double ws = 1.0 / (ctx.ds * ctx.ds);
    const double wt = 1.0 / (ctx.dtheta * ctx.dtheta);
    const double wc = 1.0 / (4.0 * ctx.ds * ctx.dtheta);

    auto theta_mod = [&](int it2) {
        it2 %= 2 * nt;
        if (it2 < 0) it2 += 2 * nt;
        return it2;
    };

    for (int j = 0; j < ns; ++j) {
        const bool bottom_row = (j == 0);
        const bool top_row = (j == ns - 1);
        for (int i = 0; i < nt; ++i) {
            const int row = ctx.index(j, i);
            if (bottom_row) {
                ctx.add(row, j, i, 1.0);
                rhs[row] = p.bottom[static_cast<std::size_t>(i)];
                continue;
            }
            if (top_row && p.top == TopCondition::dirichlet) {
                ctx.add(row, j, i, 1.0);
                rhs[row] = p.top_values[static_cast<std::size_t>(i)];
                continue;
            }

            const double a_hi = p.alpha(2 * j + 1, theta_mod(2 * i));
            const double a_lo = p.alpha(2 * j - 1, theta_mod(2 * i));
            const double b_hi = p.beta(2 * j + 1, theta_mod(2 * i));
            const double b_lo = p.beta(2 * j - 1, theta_mod(2 * i));
            const double g_e = p.gamma(2 * j, theta_mod(2 * i + 1));
            const double g_w = p.gamma(2 * j, theta_mod(2 * i - 1));
            const double b_e = p.beta(2 * j, theta_mod(2 * i + 1));
            const double b_w = p.beta(2 * j, theta_mod(2 * i - 1));

            // d/ds(alpha v_s): [a_hi (v_{j+1} - v_j) - a_lo (v_j - v_{j-1})]/ds^2
            ctx.add(row, j + 1, i, ws * a_hi);
            ctx.add(row, j, i, -ws * (a_hi + a_lo));
            ctx.add(row, j - 1, i, ws * a_lo);

            // d/dtheta(gamma v_theta)
            ctx.add(row, j, i + 1, wt * g_e);
            ctx.add(row, j, i, -wt * (g_e + g_w));
            ctx.add(row, j, i - 1, wt * g_w);

            // d/ds(beta v_theta): centered theta-differences averaged over
            // the two rows adjacent to each flux midpoint.
            ctx.add(row, j, i + 1, wc * (b_hi - b_lo));
            ctx.add(row, j, i - 1, -wc * (b_hi - b_lo));
            ctx.add(row, j + 1, i + 1, wc * b_hi);
            ctx.add(row, j + 1, i - 1, -wc * b_hi);
            ctx.add(row, j - 1, i + 1, -wc * b_lo);
            ctx.add(row, j - 1, i - 1, wc * b_lo);

            // d/dtheta(beta v_s)
            ctx.add(row, j + 1, i, wc * (b_e - b_w));
            ctx.add(row, j - 1, i, -wc * (b_e - b_w));
            ctx.add(row, j + 1, i + 1, wc * b_e);
            ctx.add(row, j - 1, i + 1, -wc * b_e);
            ctx.add(row, j + 1, i - 1, -wc * b_w);
            ctx.add(row, j - 1, i - 1, wc * b_w);
        }
    }

    Eigen::SparseMatrix<double> mat(n, n);
    mat.setFromTriplets(ctx.entries.begin(), ctx.entries.end());
    mat.makeCompressed();

    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.analyzePattern(mat);
    lu.factorize(mat);
    if (lu.info() != Eigen::Success)
        throw SolverError("mapped laplace: LU factorization failed",
                          std::numeric_limits<double>::quiet_NaN());
    Eigen::VectorXd x = lu.solve(rhs);
    if (lu.info() != Eigen::Success)
        throw SolverError("mapped laplace: LU solve failed",
                          std::numeric_limits<double>::quiet_NaN());

    // Backward-error style residual: ||Ax-b|| / (||A|| ||x|| + ||b||).
    Eigen::VectorXd abs_row_sums = Eigen::VectorXd::Zero(n);
    for (int k = 0; k < mat.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(mat, k); it; ++it)
            abs_row_sums[it.row()] += std::abs(it.value());
    const double row_sum_max = abs_row_sums.maxCoeff();
    const double resid = (mat * x - rhs).cwiseAbs().maxCoeff();
    const double scale = row_sum_max * x.cwiseAbs().maxCoeff() + rhs.cwiseAbs().maxCoeff();
    const double rel = scale > 0.0 ? resid / scale : resid;
    if (!std::isfinite(rel) || rel > p.tolerance)
        throw SolverError("mapped laplace: linear residual above tolerance", rel);

    return std::vector<double>(x.data(), x.data() + n);
}

}  // namespace rb
