// fusefold command line: surrogate candidate generation, fused re-ranking,
// and RMSD evaluation statistics.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "fusefold/evaluation.hpp"
#include "fusefold/io_formats.hpp"
#include "fusefold/priors.hpp"
#include "fusefold/scoring.hpp"
#include "fusefold/surrogate.hpp"

namespace fs = std::filesystem;
using namespace fusefold;

namespace {

constexpr const char* kVersion = "fusefold 0.1.0";

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + p.string());
    out << text;
}

int run_generate(const std::string& seq, const std::string& method, std::size_t top_n,
                 std::uint64_t seed, double t_start, double t_end, std::size_t steps,
                 const fs::path& out_dir) {
    SurrogateEnergyModel model = SurrogateEnergyModel::standard(seq.size());
    CandidateSet set;
    if (method == "exhaustive") {
        set = enumerate_exhaustive(seq, model, top_n);
    } else {
        set = anneal(seq, model, {t_start, t_end, steps}, seed, top_n);
    }

    fs::create_directories(out_dir);
    std::ostringstream manifest;
    manifest << "candidate_id,file,energy\n";
    for (std::size_t i = 0; i < set.conformations.size(); ++i) {
        Conformation c = set.conformations[i];
        char name[32];
        std::snprintf(name, sizeof(name), "cand_%03zu", i);
        c.id = name;
        const std::string file = std::string(name) + ".xyz";
        spit(out_dir / file, write_xyz(c));
        char ebuf[32];
        std::snprintf(ebuf, sizeof(ebuf), "%.6f", c.energy_q);
        manifest << name << ',' << file << ',' << ebuf << '\n';
    }
    spit(out_dir / "manifest.csv", manifest.str());
    std::cout << "wrote " << set.conformations.size() << " candidates to " << out_dir.string()
              << '\n';
    return 0;
}

int run_rank(const fs::path& candidates_dir, const fs::path& priors_path, const FusionWeights& w,
             const ScoringConfig& cfg, bool netsurfp3, const fs::path& out_dir) {
    std::vector<fs::path> files;
    if (!fs::is_directory(candidates_dir))
        throw ValidationError("candidate directory not found: " + candidates_dir.string());
    for (const auto& e : fs::directory_iterator(candidates_dir)) {
        if (e.path().extension() == ".xyz") files.push_back(e.path());
    }
    if (files.empty()) throw ValidationError("no .xyz candidates in " + candidates_dir.string());
    std::sort(files.begin(), files.end());  // deterministic, independent of discovery order

    PriorsProfile priors = sanitize(parse_priors(
        slurp(priors_path),
        netsurfp3 ? PriorsSchema::netsurfp3_positional : PriorsSchema::header_named));

    std::vector<Conformation> cands;
    for (const auto& f : files) cands.push_back(read_xyz(slurp(f), f.stem().string()));

    RankingReport report = fuse(cands, priors, w, cfg);

    fs::create_directories(out_dir);
    spit(out_dir / "summary.csv", write_summary(report));

    const std::string& best_id = report.ranked.front().candidate_id;
    for (const auto& c : cands) {
        if (c.id == best_id) {
            spit(out_dir / (best_id + "_rank1.pdb"), write_pdb(c));
            break;
        }
    }
    std::cout << "rank 1: " << best_id << " (E_fuse=" << report.ranked.front().e_fuse << ")\n";
    return 0;
}

int run_eval(const fs::path& rmsd_csv, const std::string& hybrid,
             const std::vector<std::string>& baselines, const fs::path& out_path) {
    const MethodRmsdTable table = read_rmsd_csv(slurp(rmsd_csv));
    const EvalReport rep = evaluate(table, hybrid, baselines);

    std::ostringstream txt;
    txt.setf(std::ios::fixed);
    txt.precision(4);
    txt << "method,n,mean,median,stddev,min,max\n";
    for (const auto& [m, s] : rep.stats) {
        txt << m << ',' << s.n << ',' << s.mean << ',' << s.median << ',' << s.stddev << ','
            << s.min << ',' << s.max << '\n';
    }
    txt << "\nbaseline,improvement_pct,mean_diff,ci95_low,ci95_high,t,p_one_tailed,cohens_dz,"
           "wilcoxon_p\n";
    for (const auto& b : baselines) {
        const auto& t = rep.tests.at(b);
        txt << b << ',' << rep.improvement.at(b) << ',' << t.mean_diff << ',' << t.ci95_low << ','
            << t.ci95_high << ',' << t.t_statistic << ',';
        txt.precision(12);
        txt << std::scientific << t.p_one_tailed << ',' << std::fixed;
        txt.precision(4);
        txt << t.cohens_dz << ',';
        txt.precision(12);
        txt << std::scientific << t.wilcoxon_p_one_tailed << std::fixed << '\n';
        txt.precision(4);
    }
    if (rep.correlation) {
        const auto& c = *rep.correlation;
        txt << "\ncorrelation: pearson_r=" << c.pearson_r << " r_squared=" << c.r_squared
            << " slope=" << c.slope << " intercept=" << c.intercept << '\n';
    }

    const std::string out = txt.str();
    if (out_path.empty())
        std::cout << out;
    else
        spit(out_path, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Re-rank candidate protein-fragment backbones by fusing a physics-derived "
                 "energy with statistical structural priors"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config");
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Generate surrogate low-energy candidates");
    std::string seq, method = "exhaustive";
    std::size_t top_n = 5, steps = 2000;
    std::uint64_t seed = 0;
    double t_start = 2.0, t_end = 0.05;
    std::string gen_out = "candidates";
    gen->add_option("--seq", seq, "Amino-acid sequence (one-letter codes)")->required();
    gen->add_option("--method", method)->check(CLI::IsMember({"exhaustive", "anneal"}));
    gen->add_option("--top-n", top_n);
    gen->add_option("--seed", seed);
    gen->add_option("--t-start", t_start);
    gen->add_option("--t-end", t_end);
    gen->add_option("--steps", steps);
    gen->add_option("--out", gen_out, "Output directory");

    // rank
    auto* rank = app.add_subcommand("rank", "Re-rank candidates against priors");
    std::string cand_dir, priors_path, rank_out = "ranking";
    FusionWeights w;
    std::string ss_metric = "kl", ss_mode = "ss3";
    double epsilon = 1e-8;
    bool rsa_weight = false, no_normalize = false, netsurfp3 = false;
    unsigned threads = 1;
    rank->add_option("--candidates", cand_dir, "Directory of .xyz candidates")->required();
    rank->add_option("--priors", priors_path, "Priors table (.tsv/.csv)")->required();
    rank->add_option("--alpha", w.alpha)->check(CLI::NonNegativeNumber);
    rank->add_option("--beta", w.beta)->check(CLI::NonNegativeNumber);
    rank->add_option("--gamma", w.gamma)->check(CLI::NonNegativeNumber);
    rank->add_option("--ss-metric", ss_metric)->check(CLI::IsMember({"ce", "kl", "l2"}));
    rank->add_option("--ss-mode", ss_mode)->check(CLI::IsMember({"ss3", "ss8"}));
    rank->add_option("--epsilon", epsilon);
    rank->add_flag("--rsa-weight", rsa_weight, "Weight angle terms by RSA");
    rank->add_flag("--no-normalize", no_normalize, "Skip min-max normalization");
    rank->add_flag("--netsurfp3", netsurfp3, "Priors file is headerless NetSurfP-3.0 CSV");
    rank->add_option("--threads", threads, "Worker threads (outputs are schedule-independent)");
    rank->add_option("--out", rank_out, "Output directory");

    // eval
    auto* eval = app.add_subcommand("eval", "RMSD summary statistics and paired tests");
    std::string rmsd_csv, hybrid = "hybrid", eval_out;
    std::vector<std::string> baselines;
    eval->add_option("--rmsd", rmsd_csv, "Fragment-by-method RMSD CSV")->required();
    eval->add_option("--hybrid", hybrid, "Name of the hybrid method column");
    eval->add_option("--baseline", baselines, "Baseline method name (repeatable)")->required();
    eval->add_option("--out", eval_out, "Report path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*gen) return run_generate(seq, method, top_n, seed, t_start, t_end, steps, gen_out);
        if (*rank) {
            ScoringConfig cfg;
            cfg.ss_metric = ss_metric == "ce" ? SsMetric::CE
                            : ss_metric == "kl" ? SsMetric::KL : SsMetric::L2;
            cfg.ss_mode = ss_mode == "ss3" ? SsMode::SS3 : SsMode::SS8;
            cfg.epsilon = epsilon;
            cfg.rsa_weighting = rsa_weight;
            cfg.normalize = !no_normalize;
            if (cfg.epsilon <= 0.0 || cfg.epsilon > 1e-3)
                throw ValidationError("--epsilon must lie in (0, 1e-3]");
            if (w.alpha == 0.0 && w.beta == 0.0 && w.gamma == 0.0)
                throw ValidationError("weights must not all be zero");
            return run_rank(cand_dir, priors_path, w, cfg, netsurfp3, rank_out);
        }
        if (*eval) return run_eval(rmsd_csv, hybrid, baselines, eval_out);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
