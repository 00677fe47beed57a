#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

namespace lab {

struct LatticePoint {
    std::array<double, 4> x{};  // a + shift
    double q = 0;                // x^T Y x
};

// All x = a + shift (a integral) with x^T Y x <= r2.  Y symmetric positive definite, dim <= 4.
// Fincke-Pohst style enumeration on the Cholesky factor, so thin ellipsoids cost no more than their volume.
std::vector<LatticePoint> ellipsoid_points(const Eigen::MatrixXd& Y, const Eigen::VectorXd& shift, double r2);

// Upper bound for sum over lattice points with x^T Y x > r2 of |x|^deg exp(-pi x^T Y x),
// counting shell points by the enclosing box.
double gaussian_tail_bound(double r2, double lambda_min, int dim, int deg);

// Smallest r2 on a 0.25 grid with gaussian_tail_bound(r2, ...) < tol.
double radius2_for_tol(double lambda_min, int dim, double tol, int deg = 0);

double min_eigenvalue(const Eigen::MatrixXd& Y);

}  // namespace lab
