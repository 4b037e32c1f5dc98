#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fusefold/errors.hpp"

namespace fusefold {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Point3 operator-(const Point3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Point3 operator+(const Point3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Point3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

double dot(const Point3& a, const Point3& b);
Point3 cross(const Point3& a, const Point3& b);
double norm(const Point3& a);

struct Residue {
    char code = 'A';  // one-letter amino-acid code
    Point3 ca;
};

// Calpha-only backbone of one candidate fragment.
struct Conformation {
    std::string id;
    std::vector<Residue> residues;
    double energy_q = 0.0;

    std::size_t size() const { return residues.size(); }
};

// Per-residue virtual phi/psi proxies. Entries without a valid torsion
// window are masked; masked slots hold no meaningful angle.
struct DihedralTrace {
    std::vector<double> phi_hat;
    std::vector<double> psi_hat;
    std::vector<bool> phi_mask;
    std::vector<bool> psi_mask;

    std::size_t size() const { return phi_hat.size(); }
    // true when both torsions are defined at residue i
    bool both(std::size_t i) const { return phi_mask[i] && psi_mask[i]; }
};

// Map any finite angle into (-pi, pi].
double wrap(double angle_rad);

// Four-point torsion. Throws DegenerateGeometryError when the central bond
// or either projected arm falls below 1e-9 (collinear/coincident points).
double dihedral(const Point3& p0, const Point3& p1, const Point3& p2, const Point3& p3);

// phi_hat[i] from Ca(i-2..i+1), psi_hat[i] from Ca(i-1..i+2), 0-indexed
// internally. Residues whose window is missing or degenerate are masked.
DihedralTrace virtual_dihedrals(const Conformation& c);

// Minimum RMSD over proper rotations + translations (Kabsch, det +1).
double kabsch_rmsd(const Conformation& a, const Conformation& b);

}  // namespace fusefold
