#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "detrep/errors.hpp"

namespace detrep {

// Restriction of a bivariate polynomial to one coordinate axis,
// stored as ascending coefficients with constant term 1.
struct UnivariateSlice {
  std::vector<double> coeffs;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct MixedCoefficients {
  // (f_{1,1}, f_{2,1}, ..., f_{d-1,1}, f_{1,2}, ..., f_{1,d-1}) — length 2d-3.
  std::vector<double> primary;
  // Every f_{a1,a2} with a1,a2 >= 1, a1+a2 <= d.
  std::map<std::pair<int, int>, double> grid;
};

// Degree-d bivariate polynomial with unit constant term, held as a dense
// (d+1)x(d+1) coefficient grid: grid(a1, a2) multiplies x1^a1 * x2^a2.
// Immutable after construction.
class BivariatePoly {
 public:
  // Parses a sum of terms c*x1^a*x2^b (decimal or p/q rational c, '*' optional
  // before variables). Rejects non-unit constant terms, degrees above
  // max_degree, and inputs whose top total-degree layer cancels to zero.
  static BivariatePoly parse(const std::string& text, int max_degree = 8);

  // Builds from a coefficient grid, trimming to the effective degree
  // (highest layer with an entry above 1e-12 relative). grid(0,0) must be 1.
  static BivariatePoly from_grid(const Eigen::MatrixXd& grid);

  // JSON form {"degree": d, "coeffs": [[...], ...]} with row index a1.
  static BivariatePoly from_json_text(const std::string& text);

  int degree() const { return degree_; }
  double coeff(int a1, int a2) const { return grid_(a1, a2); }
  const Eigen::MatrixXd& grid() const { return grid_; }

  UnivariateSlice restrict_axis(int axis) const;
  double evaluate(double x1, double x2) const;
  MixedCoefficients mixed_coefficient_vector() const;

  // Expression text that parse() maps back to the identical grid.
  std::string serialize() const;
  std::string to_json_text() const;

  // Max over coefficients of |coeff(a) - coeff(b)| / (1 + |coeff(b)|),
  // aligned on the larger grid.
  static double max_relative_gap(const BivariatePoly& a, const BivariatePoly& b);

 private:
  BivariatePoly(int degree, Eigen::MatrixXd grid)
      : degree_(degree), grid_(std::move(grid)) {}

  int degree_;
  Eigen::MatrixXd grid_;
};

}  // namespace detrep
