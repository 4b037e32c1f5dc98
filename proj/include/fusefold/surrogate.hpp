#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fusefold/geometry.hpp"

namespace fusefold {

// Relative moves on the cubic lattice, expressed in the local frame of the
// previous bond. The alphabet excludes "backward", so chains never backtrack
// onto the preceding residue. A MoveString has length L-2; the first bond is
// fixed along +x.
inline constexpr char kMoveAlphabet[] = "FUDLR";
using MoveString = std::string;

inline constexpr std::array<char, 20> kAminoAcids = {'A', 'C', 'D', 'E', 'F', 'G', 'H',
                                                     'I', 'K', 'L', 'M', 'N', 'P', 'Q',
                                                     'R', 'S', 'T', 'V', 'W', 'Y'};

int amino_index(char one_letter);  // throws ValidationError on unknown code

// Contact-energy model on the cubic lattice: Miyazawa-Jernigan pair terms at
// unit lattice separation plus a dominant overlap penalty.
struct SurrogateEnergyModel {
    std::array<std::array<double, 20>, 20> contact_matrix{};
    double lambda_steric = 0.0;
    double bond_length = 3.8;

    // standard MJ table with lambda = 1000 * max|MJ| * L^2
    static SurrogateEnergyModel standard(std::size_t fragment_length);
};

// The published 20x20 Miyazawa-Jernigan contact table (symmetric).
const std::array<std::array<double, 20>, 20>& mj_contact_matrix();
double mj_max_abs();

struct CandidateSet {
    std::vector<Conformation> conformations;  // ascending energy
    std::vector<MoveString> moves;            // aligned with conformations
    std::string method;
    std::uint64_t seed = 0;
};

// Move-string to Calpha coordinates. Residue 1 at the origin, residue 2 at
// (bond_length, 0, 0); every bond has length bond_length by construction.
Conformation decode(const MoveString& m, const std::string& sequence, double bond_length = 3.8);

// Lattice contact energy: MJ terms over non-bonded pairs (|i-j| >= 3) at
// unit lattice distance, plus lambda_steric per coinciding residue pair.
double lattice_energy(const Conformation& c, const SurrogateEnergyModel& model);

// Score every move string (L <= 10) and keep the top_n lowest-energy
// overlap-free conformations, ties broken lexicographically.
CandidateSet enumerate_exhaustive(const std::string& sequence, const SurrogateEnergyModel& model,
                                  std::size_t top_n);

struct AnnealSchedule {
    double t_start = 2.0;
    double t_end = 0.05;
    std::size_t steps = 2000;
};

// Single-move-mutation Metropolis chain with geometric cooling. Maintains a
// pool of the best distinct overlap-free conformations; deterministic per seed.
CandidateSet anneal(const std::string& sequence, const SurrogateEnergyModel& model,
                    const AnnealSchedule& schedule, std::uint64_t rng_seed, std::size_t top_n);

}  // namespace fusefold
