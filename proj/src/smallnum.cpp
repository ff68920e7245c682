#include "detrep/smallnum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace detrep {

RootReport poly_roots(const std::vector<double>& ascending, double tol) {
  std::vector<double> c = ascending;
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  if (c.size() <= 1) throw ZeroPolynomial("degree must be at least 1");

  RootReport rep;
  rep.tol = tol;
  // deflate exact zero roots
  size_t lead = 0;
  while (lead + 1 < c.size() && c[lead] == 0.0) {
    rep.roots.emplace_back(0.0, 0.0);
    ++lead;
  }
  c.erase(c.begin(), c.begin() + lead);

  const int n = static_cast<int>(c.size()) - 1;
  if (n == 1) {
    rep.roots.emplace_back(-c[0] / c[1], 0.0);
  } else if (n == 2) {
    double a = c[2], b = c[1], c0 = c[0];
    double disc = b * b - 4 * a * c0;
    if (disc >= 0) {
      double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
      double r1 = (q != 0.0) ? c0 / q : 0.0;
      double r2 = q / a;
      rep.roots.emplace_back(r1, 0.0);
      rep.roots.emplace_back(r2, 0.0);
    } else {
      double re = -b / (2 * a), im = std::sqrt(-disc) / (2 * a);
      rep.roots.emplace_back(re, im);
      rep.roots.emplace_back(re, -im);
    }
  } else if (n >= 3) {
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    comp.diagonal(-1).setOnes();
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[i] / c[n];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(comp, false);
    if (solver.info() != Eigen::Success)
      throw InternalError("companion eigensolver failed");
    for (int i = 0; i < n; ++i)
      rep.roots.push_back(solver.eigenvalues()(i));
  }

  rep.all_real = true;
  for (auto& r : rep.roots) {
    if (std::abs(r.imag()) <= tol * (1.0 + std::abs(r.real()))) {
      r = {r.real(), 0.0};
    } else {
      rep.all_real = false;
    }
  }
  std::sort(rep.roots.begin(), rep.roots.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return rep;
}

std::vector<double> clustered_real_roots(const RootReport& report, double cluster_tol) {
  std::vector<double> vals;
  for (const auto& r : report.roots) vals.push_back(r.real());
  std::sort(vals.begin(), vals.end());
  std::vector<double> out;
  size_t i = 0;
  while (i < vals.size()) {
    size_t j = i + 1;
    double sum = vals[i];
    while (j < vals.size() &&
           vals[j] - vals[j - 1] <= cluster_tol * (1.0 + std::abs(vals[j]))) {
      sum += vals[j];
      ++j;
    }
    double mean = sum / static_cast<double>(j - i);
    for (size_t k = i; k < j; ++k) out.push_back(mean);
    i = j;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> sym_eig(const Eigen::MatrixXd& A) {
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  if ((A - A.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
    throw NotSymmetric("matrix is not symmetric within tolerance");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (A + A.transpose()));
  if (es.info() != Eigen::Success) throw InternalError("symmetric eigensolver failed");
  Eigen::VectorXd vals = es.eigenvalues().reverse();
  Eigen::MatrixXd vecs = es.eigenvectors().rowwise().reverse();
  return {vals, vecs};
}

Eigen::VectorXd lin_solve(const Eigen::MatrixXd& G, const Eigen::VectorXd& z) {
  if (G.rows() != G.cols() || G.rows() != z.size())
    throw DimensionMismatch("lin_solve expects a square system");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(G);
  const auto& sv = svd.singularValues();
  double smax = sv(0), smin = sv(sv.size() - 1);
  if (smin <= 0 || smax / smin > 1e12)
    throw NearSingular("condition estimate above 1e12 (repeated eigenvalues?)");
  return G.fullPivLu().solve(z);
}

LinearSolution solve_allowing_singular(const Eigen::MatrixXd& G,
                                       const Eigen::VectorXd& z, double tol) {
  LinearSolution out;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(G);
  cod.setThreshold(1e-10);
  out.particular = cod.solve(z);
  double resid = (G * out.particular - z).cwiseAbs().maxCoeff();
  out.consistent = resid <= tol * (1.0 + z.cwiseAbs().maxCoeff());
  Eigen::FullPivLU<Eigen::MatrixXd> lu(G);
  lu.setThreshold(1e-10);
  out.kernel = lu.kernel();
  if (lu.dimensionOfKernel() == 0) out.kernel.resize(G.cols(), 0);
  // orthonormalize and orient deterministically
  for (int c = 0; c < out.kernel.cols(); ++c) {
    for (int p = 0; p < c; ++p)
      out.kernel.col(c) -= out.kernel.col(p).dot(out.kernel.col(c)) * out.kernel.col(p);
    out.kernel.col(c).normalize();
    for (int r = 0; r < out.kernel.rows(); ++r) {
      if (std::abs(out.kernel(r, c)) > 1e-12) {
        if (out.kernel(r, c) < 0) out.kernel.col(c) = -out.kernel.col(c);
        break;
      }
    }
  }
  return out;
}

namespace {

// Dense tableau simplex with Bland's rule. Variables: n original (the convex
// weights) then 2m signed deviations. Phase one minimizes the total
// deviation; phase two (optional) minimizes a cost over the weights with the
// deviation columns barred from entering.
class Simplex {
 public:
  Simplex(const Eigen::MatrixXd& A, const Eigen::VectorXd& b)
      : m_(static_cast<int>(A.rows())), n_(static_cast<int>(A.cols())) {
    T_.resize(m_, n_ + 2 * m_ + 1);
    T_.leftCols(n_) = A;
    T_.block(0, n_, m_, m_) = Eigen::MatrixXd::Identity(m_, m_);
    T_.block(0, n_ + m_, m_, m_) = -Eigen::MatrixXd::Identity(m_, m_);
    T_.col(n_ + 2 * m_) = b;
    basis_.resize(m_);
    row_sign_.assign(m_, 1.0);
    for (int i = 0; i < m_; ++i) {
      if (b(i) >= 0) {
        basis_[i] = n_ + i;
      } else {
        basis_[i] = n_ + m_ + i;
        row_sign_[i] = -1.0;
        T_.row(i) = -T_.row(i);
      }
    }
  }

  // returns optimal objective value
  double solve(const Eigen::VectorXd& cost, bool allow_deviation_entering) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(n_ + 2 * m_);
    c.head(cost.size()) = cost;
    for (int iter = 0; iter < 50000; ++iter) {
      Eigen::VectorXd cb(m_);
      for (int i = 0; i < m_; ++i) cb(i) = c(basis_[i]);
      int entering = -1;
      int limit = allow_deviation_entering ? n_ + 2 * m_ : n_;
      for (int j = 0; j < limit; ++j) {
        double rc = c(j) - cb.dot(T_.col(j));
        if (rc < -1e-11) {
          entering = j;
          break;  // Bland: smallest index
        }
      }
      if (entering < 0) break;
      int leaving = -1;
      double best = 0;
      for (int i = 0; i < m_; ++i) {
        double a = T_(i, entering);
        if (a > 1e-11) {
          double ratio = T_(i, n_ + 2 * m_) / a;
          if (leaving < 0 || ratio < best - 1e-13 ||
              (std::abs(ratio - best) <= 1e-13 && basis_[i] < basis_[leaving])) {
            leaving = i;
            best = ratio;
          }
        }
      }
      if (leaving < 0) throw InternalError("simplex: unbounded subproblem");
      pivot(leaving, entering);
    }
    double obj = 0;
    for (int i = 0; i < m_; ++i) obj += c(basis_[i]) * T_(i, n_ + 2 * m_);
    return obj;
  }

  // Pivots basic deviation variables (level ~0 after a successful phase one)
  // out of the basis so they cannot grow during phase two. Rows with no
  // original-column pivot are redundant equations and stay inert.
  void purge_deviations() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (int j = 0; j < n_; ++j) {
        if (std::abs(T_(i, j)) > 1e-9) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Eigen::VectorXd primal(int n) const {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n) x(basis_[i]) = T_(i, n_ + 2 * m_);
    return x;
  }

  // Dual multipliers of the phase-one objective against the original row
  // orientation: y_i = cb . (B^-1 e_i), undoing any construction-time row flip.
  Eigen::VectorXd phase_one_dual() const {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(n_ + 2 * m_);
    c.segment(n_, 2 * m_).setOnes();
    Eigen::VectorXd cb(m_);
    for (int i = 0; i < m_; ++i) cb(i) = c(basis_[i]);
    Eigen::VectorXd y(m_);
    // stored column n_+i is B^-1 (sign_i e_i)
    for (int i = 0; i < m_; ++i) y(i) = row_sign_[i] * cb.dot(T_.col(n_ + i));
    return y;
  }

 private:
  void pivot(int row, int col) {
    T_.row(row) /= T_(row, col);
    for (int i = 0; i < m_; ++i) {
      if (i == row) continue;
      double f = T_(i, col);
      if (f != 0.0) T_.row(i) -= f * T_.row(row);
    }
    basis_[row] = col;
  }

  int m_, n_;
  Eigen::MatrixXd T_;
  std::vector<int> basis_;
  std::vector<double> row_sign_;
};

void hull_system(const Eigen::VectorXd& target,
                 const std::vector<Eigen::VectorXd>& points, Eigen::MatrixXd& A,
                 Eigen::VectorXd& b) {
  const int dim = static_cast<int>(target.size());
  const int n = static_cast<int>(points.size());
  for (const auto& p : points)
    if (p.size() != dim)
      throw DimensionMismatch("hull points must match the target dimension");
  A.resize(dim + 1, n);
  for (int j = 0; j < n; ++j) A.col(j).head(dim) = points[j];
  A.row(dim).setOnes();
  b.resize(dim + 1);
  b.head(dim) = target;
  b(dim) = 1.0;
}

}  // namespace

LpResult lp_feasible_convex(const Eigen::VectorXd& target,
                            const std::vector<Eigen::VectorXd>& points,
                            double tol) {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  hull_system(target, points, A, b);
  const int n = static_cast<int>(points.size());
  const int m = static_cast<int>(A.rows());

  Simplex sx(A, b);
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + 2 * m);
  phase1.segment(n, 2 * m).setOnes();
  sx.solve(phase1, true);

  LpResult out;
  out.weights = sx.primal(n);
  Eigen::VectorXd resid = b.head(m - 1) - A.topRows(m - 1) * out.weights;
  out.deviation_l1 = resid.cwiseAbs().sum() + std::abs(1.0 - out.weights.sum());
  out.deviation_inf = std::max(resid.cwiseAbs().maxCoeff(), std::abs(1.0 - out.weights.sum()));
  out.certificate = sx.phase_one_dual();
  out.feasible = out.deviation_inf <= tol;
  return out;
}

LpOptimum lp_minimize_over_hull(const Eigen::VectorXd& cost,
                                const Eigen::VectorXd& target,
                                const std::vector<Eigen::VectorXd>& points,
                                double tol) {
  Eigen::MatrixXd A;
  Eigen::VectorXd b;
  hull_system(target, points, A, b);
  const int n = static_cast<int>(points.size());
  const int m = static_cast<int>(A.rows());
  if (cost.size() != n) throw DimensionMismatch("cost size must match point count");

  Simplex sx(A, b);
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + 2 * m);
  phase1.segment(n, 2 * m).setOnes();
  double dev = sx.solve(phase1, true);

  LpOptimum out;
  if (dev > tol * m) return out;
  out.feasible = true;
  out.value = sx.solve(cost, false);
  out.weights = sx.primal(n);
  return out;
}

}  // namespace detrep
