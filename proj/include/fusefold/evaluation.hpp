#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusefold/errors.hpp"

namespace fusefold {

struct SummaryStats {
    double mean = 0.0;
    double median = 0.0;
    double stddev = 0.0;  // sample (n-1); 0 for n == 1
    double min = 0.0;
    double max = 0.0;
    std::size_t n = 0;
};

SummaryStats summary_stats(const std::vector<double>& values);

// 100 * (baseline - hybrid) / baseline; baseline must be positive.
double improvement_percent(double baseline_mean, double hybrid_mean);

struct PairedTestResult {
    std::size_t n = 0;
    double mean_diff = 0.0;
    double ci95_low = 0.0;
    double ci95_high = 0.0;
    double t_statistic = 0.0;
    double p_one_tailed = 0.0;  // alternative: baseline > hybrid
    double cohens_dz = 0.0;
    double wilcoxon_p_one_tailed = 0.0;
};

// diffs = baseline - hybrid; one-tailed Student-t with n-1 df,
// Cohen's dz = mean/sd, two-sided 95% CI on the mean difference.
// Also runs the Wilcoxon signed-rank check on the same pairs.
PairedTestResult paired_t_test(const std::vector<double>& baseline,
                               const std::vector<double>& hybrid);

// Exact null distribution for n <= 25 (after dropping zero diffs),
// normal approximation with continuity correction above.
double wilcoxon_signed_rank(const std::vector<double>& baseline, const std::vector<double>& hybrid);

struct CorrelationResult {
    double pearson_r = 0.0;
    double r_squared = 0.0;
    double slope = 0.0;
    double intercept = 0.0;
};

CorrelationResult score_rmsd_correlation(const std::vector<double>& scores,
                                         const std::vector<double>& rmsds);

// Numerics shared with the tests: regularized incomplete beta I_x(a,b)
// (continued fraction, relative accuracy ~1e-14) and the Student-t CDF
// built on it.
double regularized_incomplete_beta(double a, double b, double x);
double student_t_cdf(double t, double df);

// method name -> per-fragment RMSDs, aligned by fragment id
struct MethodRmsdTable {
    std::vector<std::string> fragment_ids;
    std::map<std::string, std::vector<double>> rmsd;          // per method
    std::map<std::string, std::vector<double>> score;         // optional, per method
    bool has_scores = false;
};

struct EvalReport {
    std::map<std::string, SummaryStats> stats;
    std::map<std::string, double> improvement;       // baseline -> percent
    std::map<std::string, PairedTestResult> tests;   // baseline -> paired result
    std::optional<CorrelationResult> correlation;    // pooled score vs rmsd
};

EvalReport evaluate(const MethodRmsdTable& table, const std::string& hybrid,
                    const std::vector<std::string>& baselines);

}  // namespace fusefold
