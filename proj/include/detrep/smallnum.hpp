#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "detrep/errors.hpp"

namespace detrep {

struct RootReport {
  std::vector<std::complex<double>> roots;  // with multiplicity
  bool all_real = false;
  double tol = 1e-8;
};

// Roots of c0 + c1 t + ... + cn t^n via companion-matrix eigenvalues,
// with exact zero roots deflated first. A root counts as real when
// |Im| <= tol*(1+|Re|).
RootReport poly_roots(const std::vector<double>& ascending, double tol = 1e-8);

// Groups the real parts of an all-real report into clusters of radius
// cluster_tol (scaled by 1+|value|); each member is replaced by the cluster
// mean. Preserves descending order of the output.
std::vector<double> clustered_real_roots(const RootReport& report,
                                         double cluster_tol = 1e-6);

// Spectral decomposition of a symmetric matrix; eigenvalues descending,
// eigenvector columns aligned.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> sym_eig(const Eigen::MatrixXd& A);

// Solves G y = z, rejecting condition numbers above 1e12 (NearSingular).
Eigen::VectorXd lin_solve(const Eigen::MatrixXd& G, const Eigen::VectorXd& z);

// General solve that tolerates rank deficiency: particular solution plus an
// orthonormal kernel basis, or consistent=false when z is not in col(G).
struct LinearSolution {
  bool consistent = false;
  Eigen::VectorXd particular;
  Eigen::MatrixXd kernel;  // one column per free direction; 0 columns if unique
  bool unique() const { return consistent && kernel.cols() == 0; }
};
LinearSolution solve_allowing_singular(const Eigen::MatrixXd& G,
                                       const Eigen::VectorXd& z,
                                       double tol = 1e-9);

struct LpResult {
  bool feasible = false;
  Eigen::VectorXd weights;       // one per point, >= 0, sums to 1
  double deviation_l1 = 0.0;     // achieved |sum w_i p_i - target|_1
  double deviation_inf = 0.0;
  Eigen::VectorXd certificate;   // phase-one dual; separates on infeasibility
};

// Convex-hull membership: is target = sum w_i points[i] with w >= 0,
// sum w = 1, each coordinate within tol? Phase-one simplex minimizing the
// L1 equation deviation, Bland's rule throughout.
LpResult lp_feasible_convex(const Eigen::VectorXd& target,
                            const std::vector<Eigen::VectorXd>& points,
                            double tol = 1e-7);

// min c.w over the same feasible set (used to probe weight uniqueness).
struct LpOptimum {
  bool feasible = false;
  double value = 0.0;
  Eigen::VectorXd weights;
};
LpOptimum lp_minimize_over_hull(const Eigen::VectorXd& cost,
                                const Eigen::VectorXd& target,
                                const std::vector<Eigen::VectorXd>& points,
                                double tol = 1e-7);

}  // namespace detrep
