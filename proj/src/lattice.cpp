#include "lab/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace lab {

namespace {

void recurse(const Eigen::MatrixXd& R, const Eigen::VectorXd& shift, int i, double rem, double acc,
             std::array<double, 4>& x, std::vector<LatticePoint>& out) {
    const int n = static_cast<int>(R.rows());
    if (i < 0) {
        out.push_back({x, acc});
        return;
    }
    double s = 0;
    for (int j = i + 1; j < n; ++j) s += R(i, j) * x[j];
    double c = -s / R(i, i);
    double w = std::sqrt(std::max(rem, 0.0)) / R(i, i);
    long lo = static_cast<long>(std::ceil(c - w - shift[i] - 1e-12));
    long hi = static_cast<long>(std::floor(c + w - shift[i] + 1e-12));
    for (long a = lo; a <= hi; ++a) {
        x[i] = a + shift[i];
        double t = R(i, i) * (x[i] - c);
        double used = t * t;
        if (used > rem + 1e-12) continue;
        recurse(R, shift, i - 1, rem - used, acc + used, x, out);
    }
}

}  // namespace

std::vector<LatticePoint> ellipsoid_points(const Eigen::MatrixXd& Y, const Eigen::VectorXd& shift, double r2) {
    const int n = static_cast<int>(Y.rows());
    if (n < 1 || n > 4 || Y.cols() != n || shift.size() != n)
        throw std::invalid_argument("ellipsoid_points: dimension must be 1..4");
    Eigen::LLT<Eigen::MatrixXd> llt(Y);
    if (llt.info() != Eigen::Success) throw std::domain_error("ellipsoid_points: matrix not positive definite");
    Eigen::MatrixXd R = llt.matrixU();
    std::vector<LatticePoint> out;
    std::array<double, 4> x{};
    recurse(R, shift, n - 1, r2, 0.0, x, out);
    return out;
}

double gaussian_tail_bound(double r2, double lambda_min, int dim, int deg) {
    double total = 0;
    for (int k = 0; k < 10000; ++k) {
        double hi = r2 + k + 1;
        double box = std::pow(2 * std::sqrt(hi / lambda_min) + 2, dim);
        double poly = deg > 0 ? std::pow(hi / lambda_min, deg / 2.0) : 1.0;
        double term = box * poly * std::exp(-M_PI * (r2 + k));
        total += term;
        if (term < 1e-30 * (total + 1e-300) || term < 1e-300) break;
    }
    return total;
}

double radius2_for_tol(double lambda_min, int dim, double tol, int deg) {
    if (!(lambda_min > 0)) throw std::domain_error("radius2_for_tol: non-positive eigenvalue");
    if (!(tol > 0)) throw std::invalid_argument("radius2_for_tol: tol must be positive");
    double r2 = 0.25;
    while (gaussian_tail_bound(r2, lambda_min, dim, deg) >= tol) r2 += 0.25;
    return r2;
}

double min_eigenvalue(const Eigen::MatrixXd& Y) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Y, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

}  // namespace lab
