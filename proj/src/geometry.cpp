#include "fusefold/geometry.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

namespace fusefold {

namespace {
constexpr double kDegenEps = 1e-9;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Point3 cross(const Point3& a, const Point3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(const Point3& a) { return std::sqrt(dot(a, a)); }

double wrap(double angle_rad) {
    if (!std::isfinite(angle_rad)) throw DomainError("wrap: non-finite angle");
    double a = std::remainder(angle_rad, 2.0 * kPi);  // (-pi, pi] up to the -pi edge
    if (a <= -kPi) a += 2.0 * kPi;
    return a;
}

double dihedral(const Point3& p0, const Point3& p1, const Point3& p2, const Point3& p3) {
    const Point3 b0 = p1 - p0;
    const Point3 b1 = p2 - p1;
    const Point3 b2 = p3 - p2;

    const double nb1 = norm(b1);
    if (nb1 < kDegenEps) throw DegenerateGeometryError("dihedral: central bond degenerate");
    const Point3 b1h = b1 * (1.0 / nb1);

    const Point3 v = b0 - b1h * dot(b0, b1h);
    const Point3 w = b2 - b1h * dot(b2, b1h);
    if (norm(v) < kDegenEps || norm(w) < kDegenEps)
        throw DegenerateGeometryError("dihedral: collinear points");

    return std::atan2(dot(cross(b1h, v), w), dot(v, w));
}

DihedralTrace virtual_dihedrals(const Conformation& c) {
    const std::size_t n = c.size();
    DihedralTrace t;
    t.phi_hat.assign(n, 0.0);
    t.psi_hat.assign(n, 0.0);
    t.phi_mask.assign(n, false);
    t.psi_mask.assign(n, false);

    auto ca = [&](std::size_t i) -> const Point3& { return c.residues[i].ca; };

    for (std::size_t i = 0; i < n; ++i) {
        // phi window i-2..i+1, psi window i-1..i+2 (0-indexed)
        if (i >= 2 && i + 1 < n) {
            try {
                t.phi_hat[i] = dihedral(ca(i - 2), ca(i - 1), ca(i), ca(i + 1));
                t.phi_mask[i] = true;
            } catch (const DegenerateGeometryError&) {
            }
        }
        if (i >= 1 && i + 2 < n) {
            try {
                t.psi_hat[i] = dihedral(ca(i - 1), ca(i), ca(i + 1), ca(i + 2));
                t.psi_mask[i] = true;
            } catch (const DegenerateGeometryError&) {
            }
        }
    }
    return t;
}

double kabsch_rmsd(const Conformation& a, const Conformation& b) {
    if (a.size() != b.size()) throw ShapeError("kabsch_rmsd: length mismatch");
    const std::size_t n = a.size();
    if (n == 0) throw ShapeError("kabsch_rmsd: empty conformation");

    Eigen::MatrixXd P(3, n), Q(3, n);
    for (std::size_t i = 0; i < n; ++i) {
        P.col(i) << a.residues[i].ca.x, a.residues[i].ca.y, a.residues[i].ca.z;
        Q.col(i) << b.residues[i].ca.x, b.residues[i].ca.y, b.residues[i].ca.z;
    }
    const Eigen::Vector3d pc = P.rowwise().mean();
    const Eigen::Vector3d qc = Q.rowwise().mean();
    P.colwise() -= pc;
    Q.colwise() -= qc;

    const Eigen::Matrix3d H = P * Q.transpose();
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(H, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d U = svd.matrixU();
    const Eigen::Matrix3d V = svd.matrixV();
    // proper rotation only: flip the smallest singular direction if needed
    double d = (V * U.transpose()).determinant();
    Eigen::Matrix3d D = Eigen::Matrix3d::Identity();
    if (d < 0) D(2, 2) = -1.0;
    const Eigen::Matrix3d R = V * D * U.transpose();

    const Eigen::MatrixXd diff = R * P - Q;
    return std::sqrt(diff.squaredNorm() / static_cast<double>(n));
}

}  // namespace fusefold
