#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusefold/geometry.hpp"
#include "fusefold/priors.hpp"
#include "fusefold/rama.hpp"

namespace fusefold {

enum class SsMetric { CE, KL, L2 };
enum class SsMode { SS3, SS8 };

struct FusionWeights {
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;
};

struct ScoringConfig {
    SsMetric ss_metric = SsMetric::KL;
    SsMode ss_mode = SsMode::SS3;
    double epsilon = 1e-8;
    bool rsa_weighting = false;
    bool normalize = true;
    RamaConfig rama;
};

// A conformation's derived virtual dihedrals plus induced SS distributions.
// induced_valid[i] requires both torsions at residue i.
struct CandidateAnnotation {
    std::string id;
    double energy_q = 0.0;
    DihedralTrace dihedrals;
    std::vector<Ss3> induced_ss3;
    std::vector<bool> induced_valid;
};

CandidateAnnotation annotate(const Conformation& c, const RamaConfig& rama = {});

// Per-candidate raw and normalized term values plus the fused total.
struct FusedScore {
    std::string candidate_id;
    std::optional<double> e_q_raw;
    std::optional<double> d_ss_raw;
    std::optional<double> d_angle_raw;
    double e_q_norm = 0.0;
    double d_ss_norm = 0.0;
    double d_angle_norm = 0.0;
    double e_fuse = 0.0;
    std::string tie_break;  // empty, "e_q_raw", or "id"
};

struct RankingReport {
    std::vector<FusedScore> ranked;  // ascending e_fuse
    FusionWeights weights;
    ScoringConfig config;
};

// Residue-level divergence between prior and induced distributions.
double ss_divergence(const double* p, const double* p_hat, std::size_t k, SsMetric metric,
                     double epsilon);

// Mean residue divergence over residues where both sides exist;
// nullopt when no residue qualifies.
std::optional<double> ss_aggregate(const CandidateAnnotation& c, const PriorsProfile& priors,
                                   const ScoringConfig& cfg);

// RSA-weighted mean of wrapped squared phi/psi errors; nullopt when no
// residue has a comparable torsion pair.
std::optional<double> angle_consistency(const CandidateAnnotation& c, const PriorsProfile& priors,
                                        const ScoringConfig& cfg);

// Min-max over finite entries; absent/non-finite entries map to 0.
std::vector<double> minmax_normalize(const std::vector<std::optional<double>>& values);

// Full pipeline: raw terms, per-term normalization across candidates,
// fused energy, ascending sort with (e_q_raw, id) tie-break.
RankingReport fuse(const std::vector<Conformation>& candidates, const PriorsProfile& priors,
                   const FusionWeights& w, const ScoringConfig& cfg);

}  // namespace fusefold
