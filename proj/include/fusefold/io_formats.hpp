#pragma once

#include <optional>
#include <string>

#include "fusefold/evaluation.hpp"
#include "fusefold/geometry.hpp"
#include "fusefold/scoring.hpp"

namespace fusefold {

// XYZ with the candidate energy embedded in the comment line as E_q=<value>.
// Residue codes come from an optional 5th column, else from `sequence`.
// Throws FormatError on malformed layout; a missing E_q throws unless
// `fallback_energy` is supplied.
Conformation read_xyz(const std::string& text, const std::string& id = "",
                      const std::optional<std::string>& sequence = std::nullopt,
                      std::optional<double> fallback_energy = std::nullopt);

// 6 fixed decimals, residue code in the 5th column; byte-deterministic.
std::string write_xyz(const Conformation& c);

// Calpha-only fixed-column ATOM records, chain A, TER + END.
// Throws FormatError when any |coordinate| >= 1e4 (column overflow).
std::string write_pdb(const Conformation& c);

// Ranking summary CSV: leading comment echoing weights/config, then one row
// per candidate in rank order, 6 fixed decimals.
std::string write_summary(const RankingReport& report);

// fragment-by-method RMSD CSV (header: fragment_id,method,rmsd_angstrom[,score]).
// Throws ValidationError listing fragment ids missing for some method.
MethodRmsdTable read_rmsd_csv(const std::string& text);

}  // namespace fusefold
