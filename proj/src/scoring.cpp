#include "fusefold/scoring.hpp"

#include <algorithm>
#include <cmath>

namespace fusefold {

CandidateAnnotation annotate(const Conformation& c, const RamaConfig& rama) {
    CandidateAnnotation a;
    a.id = c.id;
    a.energy_q = c.energy_q;
    a.dihedrals = virtual_dihedrals(c);
    const std::size_t n = c.size();
    a.induced_ss3.assign(n, Ss3{});
    a.induced_valid.assign(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.dihedrals.both(i)) {
            a.induced_ss3[i] = induce_ss3(a.dihedrals.phi_hat[i], a.dihedrals.psi_hat[i], rama);
            a.induced_valid[i] = true;
        }
    }
    return a;
}

double ss_divergence(const double* p, const double* p_hat, std::size_t k, SsMetric metric,
                     double epsilon) {
    switch (metric) {
        case SsMetric::CE: {
            double s = 0.0;
            for (std::size_t i = 0; i < k; ++i) s -= p[i] * std::log(p_hat[i] + epsilon);
            return s;
        }
        case SsMetric::KL: {
            double s = 0.0;
            for (std::size_t i = 0; i < k; ++i)
                s += p[i] * std::log((p[i] + epsilon) / (p_hat[i] + epsilon));
            return s;
        }
        case SsMetric::L2: {
            double s = 0.0;
            for (std::size_t i = 0; i < k; ++i) {
                const double d = p[i] - p_hat[i];
                s += d * d;
            }
            return std::sqrt(s);
        }
    }
    throw ConfigError("ss_divergence: unknown metric");
}

std::optional<double> ss_aggregate(const CandidateAnnotation& c, const PriorsProfile& priors,
                                   const ScoringConfig& cfg) {
    const std::size_t n = std::min(c.induced_valid.size(), priors.size());
    double sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (!c.induced_valid[i]) continue;
        if (cfg.ss_mode == SsMode::SS3) {
            sum += ss_divergence(priors.ss3[i].data(), c.induced_ss3[i].data(), 3, cfg.ss_metric,
                                 cfg.epsilon);
        } else {
            const Ss8 induced8 = expand_ss8(c.induced_ss3[i]);
            sum += ss_divergence(priors.ss8[i].data(), induced8.data(), 8, cfg.ss_metric, cfg.epsilon);
        }
        ++count;
    }
    if (count == 0) return std::nullopt;
    return sum / static_cast<double>(count);
}

std::optional<double> angle_consistency(const CandidateAnnotation& c, const PriorsProfile& priors,
                                        const ScoringConfig& cfg) {
    const std::size_t n = std::min(c.dihedrals.size(), priors.size());

    // a residue enters I_angle when at least one torsion is comparable on
    // both sides; each valid torsion contributes its own squared error
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
        const bool phi_ok = c.dihedrals.phi_mask[i] && priors.phi_mask[i];
        const bool psi_ok = c.dihedrals.psi_mask[i] && priors.psi_mask[i];
        if (phi_ok || psi_ok) idx.push_back(i);
    }
    if (idx.empty()) return std::nullopt;

    double wsum = 0.0;
    for (std::size_t i : idx) wsum += cfg.rsa_weighting ? priors.rsa[i] : 1.0;
    const bool uniform = wsum <= 0.0;  // all-zero RSA: fall back to uniform weights

    double num = 0.0, den = 0.0;
    for (std::size_t i : idx) {
        const double w = uniform ? 1.0 : (cfg.rsa_weighting ? priors.rsa[i] : 1.0);
        double err = 0.0;
        if (c.dihedrals.phi_mask[i] && priors.phi_mask[i]) {
            const double d = wrap(priors.phi[i] - c.dihedrals.phi_hat[i]);
            err += d * d;
        }
        if (c.dihedrals.psi_mask[i] && priors.psi_mask[i]) {
            const double d = wrap(priors.psi[i] - c.dihedrals.psi_hat[i]);
            err += d * d;
        }
        num += w * err;
        den += w;
    }
    return num / den;
}

std::vector<double> minmax_normalize(const std::vector<std::optional<double>>& values) {
    if (values.empty()) throw ValidationError("minmax_normalize: empty input");
    double lo = 0.0, hi = 0.0;
    bool any = false;
    for (const auto& v : values) {
        if (v && std::isfinite(*v)) {
            if (!any) {
                lo = hi = *v;
                any = true;
            } else {
                lo = std::min(lo, *v);
                hi = std::max(hi, *v);
            }
        }
    }
    std::vector<double> out(values.size(), 0.0);
    if (!any) return out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] && std::isfinite(*values[i]))
            out[i] = hi > lo ? (*values[i] - lo) / (hi - lo) : 0.0;
    }
    return out;
}

RankingReport fuse(const std::vector<Conformation>& candidates, const PriorsProfile& priors,
                   const FusionWeights& w, const ScoringConfig& cfg) {
    if (candidates.empty()) throw ValidationError("fuse: empty candidate list");
    for (const auto& c : candidates) {
        if (c.size() != priors.size())
            throw ShapeError("fuse: candidate '" + c.id + "' length " + std::to_string(c.size()) +
                             " != priors length " + std::to_string(priors.size()));
    }

    const std::size_t n = candidates.size();
    std::vector<std::optional<double>> eq(n), dss(n), dang(n);
    std::vector<FusedScore> scores(n);
    for (std::size_t i = 0; i < n; ++i) {
        const CandidateAnnotation ann = annotate(candidates[i], cfg.rama);
        eq[i] = candidates[i].energy_q;
        dss[i] = ss_aggregate(ann, priors, cfg);
        dang[i] = angle_consistency(ann, priors, cfg);
        scores[i].candidate_id = candidates[i].id;
        scores[i].e_q_raw = eq[i];
        scores[i].d_ss_raw = dss[i];
        scores[i].d_angle_raw = dang[i];
    }

    std::vector<double> eqn, dssn, dangn;
    if (cfg.normalize) {
        eqn = minmax_normalize(eq);
        dssn = minmax_normalize(dss);
        dangn = minmax_normalize(dang);
    } else {
        auto raw_or_zero = [](const std::vector<std::optional<double>>& v) {
            std::vector<double> out(v.size(), 0.0);
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] && std::isfinite(*v[i])) out[i] = *v[i];
            return out;
        };
        eqn = raw_or_zero(eq);
        dssn = raw_or_zero(dss);
        dangn = raw_or_zero(dang);
    }

    for (std::size_t i = 0; i < n; ++i) {
        scores[i].e_q_norm = eqn[i];
        scores[i].d_ss_norm = dssn[i];
        scores[i].d_angle_norm = dangn[i];
        scores[i].e_fuse = w.alpha * eqn[i] + w.beta * dssn[i] + w.gamma * dangn[i];
    }

    std::stable_sort(scores.begin(), scores.end(), [](const FusedScore& a, const FusedScore& b) {
        if (a.e_fuse != b.e_fuse) return a.e_fuse < b.e_fuse;
        const double aq = a.e_q_raw.value_or(0.0), bq = b.e_q_raw.value_or(0.0);
        if (aq != bq) return aq < bq;
        return a.candidate_id < b.candidate_id;
    });

    // annotate where the tie-break chain actually decided the order
    for (std::size_t i = 1; i < n; ++i) {
        if (scores[i].e_fuse == scores[i - 1].e_fuse) {
            const double aq = scores[i - 1].e_q_raw.value_or(0.0);
            const double bq = scores[i].e_q_raw.value_or(0.0);
            scores[i].tie_break = (aq != bq) ? "e_q_raw" : "id";
        }
    }

    RankingReport report;
    report.ranked = std::move(scores);
    report.weights = w;
    report.config = cfg;
    return report;
}

}  // namespace fusefold
