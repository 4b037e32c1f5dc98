// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
// Usage: acceptance --cli <path-to-cli-binary>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fusefold/evaluation.hpp"
#include "fusefold/geometry.hpp"
#include "fusefold/io_formats.hpp"
#include "fusefold/priors.hpp"
#include "fusefold/rama.hpp"
#include "fusefold/scoring.hpp"
#include "fusefold/surrogate.hpp"

namespace fs = std::filesystem;
using namespace fusefold;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int run_cli(const std::string& args, const fs::path& workdir, std::string* output = nullptr) {
    const fs::path log = workdir / "cli.log";
    const std::string cmd = "cd '" + workdir.string() + "' && '" + g_cli + "' " + args + " > '" +
                            log.string() + "' 2>&1";
    const int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(log);
        std::ostringstream ss;
        ss << in.rdbuf();
        *output = ss.str();
    }
#ifdef _WIN32
    return status;
#else
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path d = fs::temp_directory_path() / ("fusefold_accept_" + tag);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// ---- criterion 1: improvement reproduction through the eval subcommand ----

bool criterion_1(std::string& note) {
    const fs::path d = fresh_dir("c1");
    {
        std::ofstream out(d / "rmsd.csv");
        out << "fragment_id,method,rmsd_angstrom\n";
        out.setf(std::ios::fixed);
        out.precision(6);
        // 75 fragments; per-method offsets sum to zero so the means are exact,
        // and differ in scale so paired differences are not constant
        for (int i = 1; i <= 75; ++i) {
            const double off = (i - 38) * 0.01;
            out << "f" << i << ",hybrid," << 4.89 + off << "\n";
            out << "f" << i << ",af3," << 11.43 + 1.5 * off << "\n";
            out << "f" << i << ",colabfold," << 11.79 + 2.0 * off << "\n";
            out << "f" << i << ",quantum," << 6.85 + 0.5 * off << "\n";
        }
    }
    const auto t0 = Clock::now();
    const int rc = run_cli(
        "eval --rmsd rmsd.csv --hybrid hybrid --baseline af3 --baseline colabfold "
        "--baseline quantum --out report.txt",
        d);
    const double dt = seconds_since(t0);
    if (rc != 0) {
        note = "eval exited with code " + std::to_string(rc);
        return false;
    }

    std::map<std::string, double> imp;
    std::istringstream in(slurp(d / "report.txt"));
    std::string line;
    while (std::getline(in, line)) {
        for (const std::string m : {"af3", "colabfold", "quantum"}) {
            if (line.rfind(m + ",", 0) == 0) {
                const auto a = line.find(',');
                const auto b = line.find(',', a + 1);
                imp[m] = std::stod(line.substr(a + 1, b - a - 1));
            }
        }
    }
    std::ostringstream ss;
    ss.precision(3);
    ss << std::fixed << "improvements " << imp["af3"] << "/" << imp["colabfold"] << "/"
       << imp["quantum"] << "%, " << dt << " s";
    note = ss.str();
    return close(imp["af3"], 57.2, 0.05) && close(imp["colabfold"], 58.5, 0.05) &&
           close(imp["quantum"], 28.6, 0.05) && dt < 1.0;
}

// ---- criterion 2: effect-size consistency dz = t / sqrt(n) ----

bool criterion_2(std::string& note) {
    const double rn = std::sqrt(75.0);
    bool ok = close(19.93 / rn, 2.30, 0.01) && close(21.50 / rn, 2.48, 0.01) &&
              close(10.12 / rn, 1.17, 0.01);

    // the library's own report obeys the same identity
    std::mt19937_64 rng(2);
    std::normal_distribution<double> g(6.5, 1.1);
    std::vector<double> base(75), hyb(75);
    for (int i = 0; i < 75; ++i) {
        base[i] = g(rng);
        hyb[i] = base[i] - std::abs(g(rng)) * 0.5;
    }
    const PairedTestResult r = paired_t_test(base, hyb);
    ok = ok && close(r.cohens_dz, r.t_statistic / rn, 1e-12);

    std::ostringstream ss;
    ss.precision(4);
    ss << std::fixed << "t/sqrt(75): " << 19.93 / rn << ", " << 21.50 / rn << ", " << 10.12 / rn;
    note = ss.str();
    return ok;
}

// ---- criterion 3: correlation consistency ----

bool criterion_3(std::string& note) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g(0.0, 1.0);
    bool ok = true;
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<double> s(40), r(40);
        for (int i = 0; i < 40; ++i) {
            s[i] = g(rng);
            r[i] = 0.57 * s[i] + g(rng);
        }
        const CorrelationResult c = score_rmsd_correlation(s, r);
        ok = ok && std::abs(c.r_squared - c.pearson_r * c.pearson_r) < 1e-12;
    }
    const double published_gap = std::abs(0.568 * 0.568 - 0.322);
    note = "R^2 == r^2 enforced; |0.568^2 - 0.322| = " + std::to_string(published_gap);
    return ok && published_gap < 2e-3;
}

// ---- criterion 4: per-fragment reproduction is unattainable by design ----

bool criterion_4(std::string& note) {
    note = "per-fragment source data is not recoverable; covered by the property "
           "criteria 5-9 as specified";
    return true;
}

// ---- criterion 5: fusion oracle property on surrogate fragments ----

bool criterion_5(std::string& note) {
    const auto t0 = Clock::now();
    const std::string pool = "FWLIVMYA";
    int total = 0, at_most = 0, strictly = 0;

    for (std::uint64_t frag = 0; frag < 50; ++frag) {
        std::mt19937_64 rng(1000 + frag);
        const std::size_t L = 6 + frag % 3;
        std::string seq(L, 'A');
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        for (auto& c : seq) c = pool[pick(rng)];

        const auto model = SurrogateEnergyModel::standard(L);
        CandidateSet set = enumerate_exhaustive(seq, model, 20);
        if (set.conformations.size() < 2) continue;
        const Conformation native = set.conformations.front();

        // noisy stand-ins for hardware energies corrupt the raw ordering
        std::normal_distribution<double> noise(0.0, 1.5);
        std::vector<Conformation> cands = set.conformations;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            cands[i].id = "c" + std::to_string(i);
            cands[i].energy_q += noise(rng);
        }

        // priors synthesized from the native structure itself
        const CandidateAnnotation ann = annotate(native);
        PriorsProfile priors;
        priors.sequence = seq;
        for (std::size_t i = 0; i < L; ++i) {
            priors.ss3.push_back(ann.induced_valid[i] ? ann.induced_ss3[i]
                                                      : Ss3{1.0 / 3, 1.0 / 3, 1.0 / 3});
            priors.ss8.push_back(expand_ss8(priors.ss3.back()));
            priors.phi.push_back(ann.dihedrals.phi_mask[i] ? ann.dihedrals.phi_hat[i] : 0.0);
            priors.psi.push_back(ann.dihedrals.psi_mask[i] ? ann.dihedrals.psi_hat[i] : 0.0);
            priors.phi_mask.push_back(ann.dihedrals.phi_mask[i]);
            priors.psi_mask.push_back(ann.dihedrals.psi_mask[i]);
            priors.rsa.push_back(1.0);
        }

        auto rmsd_to_native = [&](const Conformation& c) { return kabsch_rmsd(native, c); };

        // raw pick: lowest noisy energy
        std::size_t raw_idx = 0;
        for (std::size_t i = 1; i < cands.size(); ++i)
            if (cands[i].energy_q < cands[raw_idx].energy_q) raw_idx = i;
        const double raw_rmsd = rmsd_to_native(cands[raw_idx]);

        const RankingReport rep = fuse(cands, priors, {1.0, 1.0, 1.0}, {});
        double fused_rmsd = 0.0;
        for (const auto& c : cands)
            if (c.id == rep.ranked.front().candidate_id) fused_rmsd = rmsd_to_native(c);

        ++total;
        if (fused_rmsd <= raw_rmsd + 1e-9) ++at_most;
        if (fused_rmsd < raw_rmsd - 1e-9) ++strictly;
    }

    const double dt = seconds_since(t0);
    std::ostringstream ss;
    ss.precision(2);
    ss << std::fixed << at_most << "/" << total << " at-most, " << strictly << "/" << total
       << " strictly lower, " << dt << " s";
    note = ss.str();
    return total >= 50 && at_most * 10 >= total * 8 && strictly * 10 >= total * 3 && dt < 60.0;
}

// ---- criterion 6: anneal matches the exhaustive optimum ----

bool criterion_6(std::string& note) {
    const auto t0 = Clock::now();
    const std::vector<std::string> instances = {"FWFWF", "FWLIVF", "WFYLIVM", "FWFWFWFW"};
    bool ok = true;
    std::ostringstream ss;

    for (const auto& seq : instances) {
        const auto model = SurrogateEnergyModel::standard(seq.size());
        const double best = enumerate_exhaustive(seq, model, 1).conformations.front().energy_q;
        int hits = 0;
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            const CandidateSet s = anneal(seq, model, {2.5, 0.01, 10000}, seed, 1);
            if (s.conformations.empty()) continue;
            const double got = s.conformations.front().energy_q;
            if (got < best - 1e-9) {
                ss << seq << ": below exhaustive minimum! ";
                ok = false;
            }
            if (std::abs(got - best) < 1e-9) ++hits;
        }
        ss << seq << "=" << hits << "/100 ";
        if (hits < 95) ok = false;
    }
    const double dt = seconds_since(t0);
    ss.precision(1);
    ss << std::fixed << "(" << dt << " s)";
    note = ss.str();
    return ok && dt < 120.0;
}

// ---- criterion 7: numerical invariant suite ----

bool criterion_7(std::string& note) {
    constexpr double kPi = 3.14159265358979323846;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-40.0, 40.0);
    std::normal_distribution<double> g(0.0, 1.0);
    bool ok = true;
    std::string why;

    // wrap idempotence
    for (int t = 0; t < 2000 && ok; ++t) {
        const double a = u(rng);
        const double w = wrap(a);
        ok = w > -kPi && w <= kPi && std::abs(wrap(w) - w) < 1e-15;
        if (!ok) why = "wrap idempotence";
    }

    // dihedral rigid-motion invariance over 1000 random rotations
    for (int t = 0; t < 1000 && ok; ++t) {
        Point3 p[4];
        for (auto& q : p) q = {g(rng), g(rng), g(rng)};
        double ref;
        try {
            ref = dihedral(p[0], p[1], p[2], p[3]);
        } catch (const DomainError&) {
            continue;
        }
        // random rotation via Gram-Schmidt on gaussian vectors
        Point3 a{g(rng), g(rng), g(rng)};
        a = a * (1.0 / norm(a));
        Point3 b{g(rng), g(rng), g(rng)};
        b = b - a * dot(a, b);
        b = b * (1.0 / norm(b));
        const Point3 c = cross(a, b);
        const Point3 shift{g(rng), g(rng), g(rng)};
        Point3 rp[4];
        for (int i = 0; i < 4; ++i)
            rp[i] = Point3{dot(a, p[i]), dot(b, p[i]), dot(c, p[i])} + shift;
        const double rot = dihedral(rp[0], rp[1], rp[2], rp[3]);
        ok = std::abs(wrap(rot - ref)) < 1e-9;
        if (!ok) why = "dihedral rigid-motion invariance";
    }

    // KL(p, p) == 0, SS normalization, expand/marginalize identity
    for (int t = 0; t < 500 && ok; ++t) {
        Ss3 p = {std::abs(g(rng)) + 1e-3, std::abs(g(rng)) + 1e-3, std::abs(g(rng)) + 1e-3};
        const double s = p[0] + p[1] + p[2];
        for (double& v : p) v /= s;
        ok = ss_divergence(p.data(), p.data(), 3, SsMetric::KL, 1e-8) == 0.0;
        if (!ok) { why = "KL(p,p) != 0"; break; }
        const Ss3 ind = induce_ss3(u(rng) * 0.05, u(rng) * 0.05);
        ok = std::abs(ind[0] + ind[1] + ind[2] - 1.0) < 1e-9;
        if (!ok) { why = "SS3 normalization"; break; }
        const Ss8 e8 = expand_ss8(p);
        double s8 = 0.0;
        for (double v : e8) s8 += v;
        ok = std::abs(s8 - 1.0) < 1e-9;
        if (!ok) { why = "SS8 normalization"; break; }
        const Ss3 back = marginalize_ss8(e8);
        ok = std::abs(back[0] - p[0]) < 1e-12 && std::abs(back[1] - p[1]) < 1e-12 &&
             std::abs(back[2] - p[2]) < 1e-12;
        if (!ok) why = "expand/marginalize identity";
    }

    // min-max outputs in [0,1]
    for (int t = 0; t < 200 && ok; ++t) {
        std::vector<std::optional<double>> v;
        for (int i = 0; i < 10; ++i)
            v.push_back(i % 4 == 3 ? std::nullopt : std::optional<double>(g(rng) * 10));
        for (double x : minmax_normalize(v)) {
            if (x < 0.0 || x > 1.0) {
                ok = false;
                why = "min-max range";
            }
        }
    }

    // ranking affine invariance under E_q -> a*E_q + b
    if (ok) {
        PriorsProfile priors;
        priors.sequence = "AAAAAAA";
        priors.ss3.assign(7, Ss3{0.5, 0.3, 0.2});
        priors.ss8.assign(7, expand_ss8({0.5, 0.3, 0.2}));
        priors.phi.assign(7, -1.0);
        priors.psi.assign(7, 0.5);
        priors.phi_mask.assign(7, true);
        priors.psi_mask.assign(7, true);
        priors.rsa.assign(7, 1.0);
        std::vector<Conformation> cands;
        const std::vector<MoveString> moves = {"UDLRF", "FFFFF", "ULURD", "RRUUL", "FUDFU"};
        for (std::size_t i = 0; i < moves.size(); ++i) {
            Conformation c = decode(moves[i], "AAAAAAA");
            c.id = "c" + std::to_string(i);
            c.energy_q = g(rng) * 3.0;
            cands.push_back(c);
        }
        const RankingReport r1 = fuse(cands, priors, {1, 1, 1}, {});
        for (auto& c : cands) c.energy_q = 2.75 * c.energy_q + 13.0;
        const RankingReport r2 = fuse(cands, priors, {1, 1, 1}, {});
        for (std::size_t i = 0; i < r1.ranked.size(); ++i) {
            if (r1.ranked[i].candidate_id != r2.ranked[i].candidate_id ||
                std::abs(r1.ranked[i].e_fuse - r2.ranked[i].e_fuse) > 1e-9) {
                ok = false;
                why = "ranking affine invariance";
            }
        }
    }

    // byte-identical cmd_rank reruns
    if (ok) {
        const fs::path d = fresh_dir("c7");
        if (run_cli("generate --seq FAAF --method exhaustive --top-n 5 --out cands", d) != 0) {
            ok = false;
            why = "generate failed";
        } else {
            std::ofstream out(d / "priors.tsv");
            out << "idx\tresidue\tp8_H\tp8_G\tp8_I\tp8_E\tp8_B\tp8_T\tp8_S\tp8_L\t"
                   "p3_H\tp3_E\tp3_C\tdis_in\tdis_out\trsa\tasa\tphi\tpsi\n";
            for (int i = 1; i <= 4; ++i)
                out << i << "\tA\t0.4\t0.05\t0.05\t0.27\t0.03\t0.1\t0.05\t0.05\t"
                       "0.5\t0.3\t0.2\t0\t0\t0.8\t50\t-60\t-45\n";
            out.close();
            if (run_cli("rank --candidates cands --priors priors.tsv --out r1", d) != 0 ||
                run_cli("rank --candidates cands --priors priors.tsv --out r2", d) != 0 ||
                slurp(d / "r1" / "summary.csv") != slurp(d / "r2" / "summary.csv") ||
                slurp(d / "r1" / "summary.csv").empty()) {
                ok = false;
                why = "byte-identical rank reruns";
            }
        }
    }

    note = ok ? "wrap, dihedral, KL, min-max, SS sums, expand/marginalize, affine, rerun" : why;
    return ok;
}

// ---- criterion 8: statistics oracles ----

double t_density(double x, double df) {
    const double ln_c = std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0) -
                        0.5 * std::log(df * 3.14159265358979323846);
    return std::exp(ln_c - (df + 1.0) / 2.0 * std::log1p(x * x / df));
}

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fb,
               double fm, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double flm = f(0.5 * (a + m)), frm = f(0.5 * (m + b));
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson(f, a, m, fa, fm, flm, left, tol / 2.0, depth - 1) +
           simpson(f, m, b, fm, fb, frm, right, tol / 2.0, depth - 1);
}

double reference_t_cdf(double t, double df) {
    auto f = [df](double x) { return t_density(x, df); };
    const double lo = std::min(0.0, t), hi = std::max(0.0, t);
    const double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    const double integral = simpson(f, lo, hi, fa, fb, fm, whole, 1e-13, 60);
    return t >= 0.0 ? 0.5 + integral : 0.5 - integral;
}

bool criterion_8(std::string& note) {
    bool ok = true;
    std::string why;

    // Wilcoxon exact vs 2^n brute force
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-2.0, 3.0);
    for (std::size_t n = 5; n <= 12 && ok; ++n) {
        for (int rep = 0; rep < 6 && ok; ++rep) {
            std::vector<double> diffs(n);
            for (auto& dd : diffs) {
                dd = u(rng);
                if (dd == 0.0) dd = 0.25;
                if (rep % 2 == 0 && u(rng) > 1.5) dd = (dd < 0 ? -1.0 : 1.0) * 0.5;  // tied |d|
            }
            // ranks with averaged ties
            std::vector<double> mag(n);
            for (std::size_t i = 0; i < n; ++i) mag[i] = std::abs(diffs[i]);
            std::vector<std::size_t> order(n);
            for (std::size_t i = 0; i < n; ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](auto a, auto b) { return mag[a] < mag[b]; });
            std::vector<double> rank(n);
            std::size_t i = 0;
            while (i < n) {
                std::size_t j = i;
                while (j + 1 < n && mag[order[j + 1]] == mag[order[i]]) ++j;
                for (std::size_t k = i; k <= j; ++k) rank[order[k]] = 0.5 * double(i + j) + 1.0;
                i = j + 1;
            }
            double observed = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                if (diffs[k] < 0.0) observed += rank[k];
            std::size_t at_or_below = 0;
            for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
                double wsum = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    if (mask & (std::size_t(1) << k)) wsum += rank[k];
                if (wsum <= observed + 1e-12) ++at_or_below;
            }
            const double brute = double(at_or_below) / std::pow(2.0, double(n));
            const double got = wilcoxon_signed_rank(diffs, std::vector<double>(n, 0.0));
            if (std::abs(got - brute) > 1e-12) {
                ok = false;
                why = "wilcoxon vs brute force (n=" + std::to_string(n) + ")";
            }
        }
    }

    // Student-t CDF vs quadrature reference on a fixed grid
    double worst = 0.0;
    for (double df : {1.0, 2.0, 4.0, 10.0, 30.0, 74.0, 200.0}) {
        for (double t : {-10.0, -3.2, -1.0, -0.3, 0.2, 0.5, 1.0, 2.5, 4.0, 10.0, 19.93}) {
            worst = std::max(worst, std::abs(student_t_cdf(t, df) - reference_t_cdf(t, df)));
        }
    }
    if (worst > 1e-9) {
        ok = false;
        why = "t CDF worst error " + std::to_string(worst);
    }

    std::ostringstream ss;
    ss << "wilcoxon exact matched; t CDF worst |err| = " << worst;
    note = ok ? ss.str() : why;
    return ok;
}

// ---- criterion 9: format fidelity ----

bool criterion_9(std::string& note) {
    bool ok = true;
    std::string why;

    // PDB column fixture
    Conformation ref;
    ref.residues.push_back({'A', {1.0, 2.0, 3.0}});
    const std::string pdb = write_pdb(ref);
    const std::string want =
        "ATOM      1  CA  ALA A   1       1.000   2.000   3.000  1.00  0.00           C";
    if (pdb.substr(0, want.size()) != want) {
        ok = false;
        why = "PDB fixture mismatch";
    }

    // XYZ round trip
    if (ok) {
        Conformation c = decode("UL", "FAGW");
        c.id = "rt";
        c.energy_q = -1.25;
        const Conformation back = read_xyz(write_xyz(c), c.id);
        ok = back.size() == c.size() && back.energy_q == c.energy_q;
        for (std::size_t i = 0; ok && i < c.size(); ++i)
            ok = back.residues[i].code == c.residues[i].code &&
                 std::abs(back.residues[i].ca.x - c.residues[i].ca.x) < 1e-6 &&
                 std::abs(back.residues[i].ca.y - c.residues[i].ca.y) < 1e-6 &&
                 std::abs(back.residues[i].ca.z - c.residues[i].ca.z) < 1e-6;
        if (!ok) why = "XYZ round trip";
        if (ok && write_xyz(back) != write_xyz(c)) {
            ok = false;
            why = "XYZ writer determinism";
        }
    }

    // summary determinism and ordering
    if (ok) {
        PriorsProfile priors;
        priors.sequence = "AAAAAA";
        priors.ss3.assign(6, Ss3{0.5, 0.3, 0.2});
        priors.ss8.assign(6, expand_ss8({0.5, 0.3, 0.2}));
        priors.phi.assign(6, -1.0);
        priors.psi.assign(6, 0.5);
        priors.phi_mask.assign(6, true);
        priors.psi_mask.assign(6, true);
        priors.rsa.assign(6, 1.0);
        std::vector<Conformation> cands;
        const std::vector<MoveString> moves = {"UDLR", "FFFF", "ULUR"};
        for (std::size_t i = 0; i < moves.size(); ++i) {
            Conformation c = decode(moves[i], "AAAAAA");
            c.id = "c" + std::to_string(i);
            c.energy_q = double(i) - 1.0;
            cands.push_back(c);
        }
        const std::string s1 = write_summary(fuse(cands, priors, {}, {}));
        const std::string s2 = write_summary(fuse(cands, priors, {}, {}));
        if (s1 != s2 || s1.find("rank,candidate_id,") == std::string::npos) {
            ok = false;
            why = "summary determinism";
        }
    }

    note = ok ? "PDB columns, XYZ round trip, summary determinism" : why;
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") g_cli = argv[i + 1];
    }
    if (g_cli.empty()) {
        std::cerr << "usage: acceptance --cli <path>\n";
        return 2;
    }

    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> fn;
    };
    const std::vector<Criterion> criteria = {
        {1, "improvement reproduction via eval", criterion_1},
        {2, "effect-size consistency dz = t/sqrt(n)", criterion_2},
        {3, "correlation consistency R^2 = r^2", criterion_3},
        {4, "per-fragment reproduction (substituted)", criterion_4},
        {5, "fusion oracle property on surrogate fragments", criterion_5},
        {6, "anneal optimality vs exhaustive enumeration", criterion_6},
        {7, "numerical invariant suite", criterion_7},
        {8, "statistics oracles", criterion_8},
        {9, "format fidelity", criterion_9},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string note;
        bool pass = false;
        try {
            pass = c.fn(note);
        } catch (const std::exception& e) {
            note = std::string("exception: ") + e.what();
        }
        if (!pass) ++failures;
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.name
                  << " -- " << note << "\n";
    }
    return failures == 0 ? 0 : 1;
}
