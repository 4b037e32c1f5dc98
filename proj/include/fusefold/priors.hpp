#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fusefold/errors.hpp"

namespace fusefold {

// SS8 class order used everywhere in this library.
inline constexpr std::array<char, 8> kSs8Order = {'H', 'G', 'I', 'E', 'B', 'T', 'S', 'L'};
inline constexpr std::array<char, 3> kSs3Order = {'H', 'E', 'C'};

using Ss3 = std::array<double, 3>;
using Ss8 = std::array<double, 8>;

// Residue-wise neural-predictor priors for one sequence.
// Angles are radians in (-pi, pi]; masked entries carry no value.
struct PriorsProfile {
    std::string sequence;
    std::vector<Ss3> ss3;
    std::vector<Ss8> ss8;
    std::vector<double> phi, psi;
    std::vector<bool> phi_mask, psi_mask;
    std::vector<double> rsa;

    std::size_t size() const { return sequence.size(); }
};

enum class PriorsSchema {
    // Header-named tab/comma-delimited table; columns located by name.
    // Canonical header (19 columns):
    //   idx residue p8_H p8_G p8_I p8_E p8_B p8_T p8_S p8_L
    //   p3_H p3_E p3_C dis_in dis_out rsa asa phi psi
    header_named,
    // Headerless NetSurfP-3.0 CSV, columns by position:
    //   id, seq, n, rsa, asa, q3, p[q3_H], p[q3_E], p[q3_C],
    //   q8, p[q8_G], p[q8_H], p[q8_I], p[q8_B], p[q8_E], p[q8_S], p[q8_T], p[q8_C],
    //   phi, psi, disorder
    netsurfp3_positional,
};

// Parse a delimited priors table (phi/psi in degrees on disk, radians in
// the profile). SS vectors are renormalized to sum to one.
PriorsProfile parse_priors(const std::string& table, PriorsSchema schema = PriorsSchema::header_named);

// Clip RSA into [0,1] (NaN -> 1.0), impute non-finite SS rows with the
// uniform distribution, mask non-finite angles. Idempotent.
PriorsProfile sanitize(const PriorsProfile& p);

// Canonical header-named writer (round-trips through parse_priors).
std::string serialize_priors(const PriorsProfile& p);

}  // namespace fusefold
