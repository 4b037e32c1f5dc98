#include "fusefold/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fusefold {

namespace {

double sample_sd(const std::vector<double>& v, double mean) {
    if (v.size() < 2) return 0.0;
    double s = 0.0;
    for (double x : v) s += (x - mean) * (x - mean);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

// continued fraction for I_x(a,b), modified Lentz
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 500;
    constexpr double kEps = 1e-15;
    constexpr double kFpMin = 1e-300;

    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::abs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) break;
    }
    return h;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// two-sided 97.5% Student-t quantile via bisection on the CDF
double t_quantile_975(double df) {
    double lo = 0.0, hi = 200.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (student_t_cdf(mid, df) < 0.975)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (a <= 0.0 || b <= 0.0) throw DomainError("incomplete beta: a, b must be positive");
    if (x < 0.0 || x > 1.0) throw DomainError("incomplete beta: x out of [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - std::exp(std::lgamma(a + b) - std::lgamma(b) - std::lgamma(a) +
                          b * std::log1p(-x) + a * std::log(x)) *
                     betacf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df) {
    if (df <= 0.0) throw DomainError("student_t_cdf: df must be positive");
    if (t == 0.0) return 0.5;
    const double x = df / (df + t * t);
    const double half_tail = 0.5 * regularized_incomplete_beta(df / 2.0, 0.5, x);
    return t > 0.0 ? 1.0 - half_tail : half_tail;
}

SummaryStats summary_stats(const std::vector<double>& values) {
    if (values.empty()) throw ValidationError("summary_stats: empty input");
    SummaryStats s;
    s.n = values.size();
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(s.n);
    s.stddev = sample_sd(values, s.mean);
    std::vector<double> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    s.min = sorted.front();
    s.max = sorted.back();
    s.median = (s.n % 2 == 1) ? sorted[s.n / 2]
                              : 0.5 * (sorted[s.n / 2 - 1] + sorted[s.n / 2]);
    return s;
}

double improvement_percent(double baseline_mean, double hybrid_mean) {
    if (baseline_mean <= 0.0) throw DomainError("improvement: baseline mean must be positive");
    return 100.0 * (baseline_mean - hybrid_mean) / baseline_mean;
}

double wilcoxon_signed_rank(const std::vector<double>& baseline, const std::vector<double>& hybrid) {
    if (baseline.size() != hybrid.size()) throw ShapeError("wilcoxon: length mismatch");
    std::vector<double> diffs;
    for (std::size_t i = 0; i < baseline.size(); ++i) {
        const double d = baseline[i] - hybrid[i];
        if (d != 0.0) diffs.push_back(d);
    }
    if (diffs.empty()) throw DegenerateTestError("wilcoxon: all differences are zero");
    const std::size_t n = diffs.size();
    if (n < 5) throw ValidationError("wilcoxon: need n >= 5 nonzero differences");

    // average ranks of |d|
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return std::abs(diffs[a]) < std::abs(diffs[b]); });
    std::vector<double> rank(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && std::abs(diffs[order[j + 1]]) == std::abs(diffs[order[i]])) ++j;
        const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) rank[order[k]] = avg;
        i = j + 1;
    }

    double w_minus = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        if (diffs[k] < 0.0) w_minus += rank[k];

    if (n <= 25) {
        // exact: DP over doubled ranks (halves become integers)
        std::vector<long> r2(n);
        long total2 = 0;
        for (std::size_t k = 0; k < n; ++k) {
            r2[k] = std::lround(2.0 * rank[k]);
            total2 += r2[k];
        }
        std::vector<double> count(static_cast<std::size_t>(total2) + 1, 0.0);
        count[0] = 1.0;
        long reach = 0;
        for (std::size_t k = 0; k < n; ++k) {
            reach += r2[k];
            for (long s = reach; s >= r2[k]; --s) count[s] += count[s - r2[k]];
        }
        const long obs2 = std::lround(2.0 * w_minus);
        double below = 0.0;
        for (long s = 0; s <= std::min(obs2, total2); ++s) below += count[s];
        return below / std::pow(2.0, static_cast<double>(n));
    }

    // normal approximation with continuity correction and tie correction
    const double dn = static_cast<double>(n);
    const double mu = dn * (dn + 1.0) / 4.0;
    double var = dn * (dn + 1.0) * (2.0 * dn + 1.0) / 24.0;
    i = 0;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return std::abs(diffs[a]) < std::abs(diffs[b]); });
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && std::abs(diffs[order[j + 1]]) == std::abs(diffs[order[i]])) ++j;
        const double t = static_cast<double>(j - i + 1);
        if (t > 1.0) var -= t * (t * t - 1.0) / 48.0;
        i = j + 1;
    }
    const double z = (w_minus - mu + 0.5) / std::sqrt(var);
    return normal_cdf(z);
}

PairedTestResult paired_t_test(const std::vector<double>& baseline,
                               const std::vector<double>& hybrid) {
    if (baseline.size() != hybrid.size()) throw ShapeError("paired_t_test: length mismatch");
    if (baseline.size() < 2) throw ValidationError("paired_t_test: need n >= 2");

    std::vector<double> diffs(baseline.size());
    for (std::size_t i = 0; i < baseline.size(); ++i) diffs[i] = baseline[i] - hybrid[i];

    PairedTestResult r;
    r.n = diffs.size();
    const double dn = static_cast<double>(r.n);
    r.mean_diff = std::accumulate(diffs.begin(), diffs.end(), 0.0) / dn;
    const double sd = sample_sd(diffs, r.mean_diff);
    if (sd == 0.0) throw DegenerateTestError("paired_t_test: zero-variance differences");

    r.t_statistic = r.mean_diff / (sd / std::sqrt(dn));
    r.cohens_dz = r.mean_diff / sd;
    r.p_one_tailed = 1.0 - student_t_cdf(r.t_statistic, dn - 1.0);
    const double half = t_quantile_975(dn - 1.0) * sd / std::sqrt(dn);
    r.ci95_low = r.mean_diff - half;
    r.ci95_high = r.mean_diff + half;
    try {
        r.wilcoxon_p_one_tailed = wilcoxon_signed_rank(baseline, hybrid);
    } catch (const Error&) {
        r.wilcoxon_p_one_tailed = std::nan("");
    }
    return r;
}

CorrelationResult score_rmsd_correlation(const std::vector<double>& scores,
                                         const std::vector<double>& rmsds) {
    if (scores.size() != rmsds.size()) throw ShapeError("correlation: length mismatch");
    const std::size_t n = scores.size();
    if (n < 3) throw ValidationError("correlation: need n >= 3");

    const double dn = static_cast<double>(n);
    const double mx = std::accumulate(scores.begin(), scores.end(), 0.0) / dn;
    const double my = std::accumulate(rmsds.begin(), rmsds.end(), 0.0) / dn;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (scores[i] - mx) * (scores[i] - mx);
        syy += (rmsds[i] - my) * (rmsds[i] - my);
        sxy += (scores[i] - mx) * (rmsds[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0)
        throw DegenerateTestError("correlation: zero variance");

    CorrelationResult c;
    c.pearson_r = sxy / std::sqrt(sxx * syy);
    c.r_squared = c.pearson_r * c.pearson_r;
    c.slope = sxy / sxx;
    c.intercept = my - c.slope * mx;
    return c;
}

EvalReport evaluate(const MethodRmsdTable& table, const std::string& hybrid,
                    const std::vector<std::string>& baselines) {
    auto need = [&](const std::string& m) -> const std::vector<double>& {
        auto it = table.rmsd.find(m);
        if (it == table.rmsd.end()) throw ValidationError("evaluate: unknown method '" + m + "'");
        return it->second;
    };
    const auto& hyb = need(hybrid);

    EvalReport rep;
    rep.stats[hybrid] = summary_stats(hyb);
    for (const auto& b : baselines) {
        const auto& base = need(b);
        if (base.size() != hyb.size())
            throw ShapeError("evaluate: method '" + b + "' has mismatched fragment count");
        rep.stats[b] = summary_stats(base);
        rep.improvement[b] = improvement_percent(rep.stats[b].mean, rep.stats[hybrid].mean);
        rep.tests[b] = paired_t_test(base, hyb);
    }

    if (table.has_scores) {
        std::vector<double> s, r;
        for (const auto& [method, scores] : table.score) {
            const auto& rm = table.rmsd.at(method);
            for (std::size_t i = 0; i < scores.size(); ++i) {
                if (std::isfinite(scores[i])) {
                    s.push_back(scores[i]);
                    r.push_back(rm[i]);
                }
            }
        }
        if (s.size() >= 3) rep.correlation = score_rmsd_correlation(s, r);
    }
    return rep;
}

}  // namespace fusefold
