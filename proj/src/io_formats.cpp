#include "fusefold/io_formats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace fusefold {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

double parse_double(const std::string& s, const std::string& what) {
    double v;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw FormatError("bad numeric field '" + s + "' in " + what);
    return v;
}

const char* three_letter(char aa) {
    switch (aa) {
        case 'A': return "ALA";
        case 'C': return "CYS";
        case 'D': return "ASP";
        case 'E': return "GLU";
        case 'F': return "PHE";
        case 'G': return "GLY";
        case 'H': return "HIS";
        case 'I': return "ILE";
        case 'K': return "LYS";
        case 'L': return "LEU";
        case 'M': return "MET";
        case 'N': return "ASN";
        case 'P': return "PRO";
        case 'Q': return "GLN";
        case 'R': return "ARG";
        case 'S': return "SER";
        case 'T': return "THR";
        case 'V': return "VAL";
        case 'W': return "TRP";
        case 'Y': return "TYR";
        default: return "UNK";
    }
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

Conformation read_xyz(const std::string& text, const std::string& id,
                      const std::optional<std::string>& sequence,
                      std::optional<double> fallback_energy) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw FormatError("xyz: empty document");

    std::size_t count = 0;
    {
        const std::string t = trim(line);
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), count);
        if (ec != std::errc() || ptr != t.data() + t.size())
            throw FormatError("xyz: bad atom count line '" + t + "'");
    }

    if (!std::getline(in, line)) throw FormatError("xyz: missing comment line");
    std::optional<double> energy;
    for (const auto& tok : split_ws(line)) {
        if (tok.rfind("E_q=", 0) == 0) energy = parse_double(tok.substr(4), "E_q metadata");
    }
    if (!energy) {
        if (fallback_energy)
            energy = fallback_energy;
        else
            throw FormatError("xyz: missing E_q=<value> metadata in comment line");
    }

    Conformation c;
    c.id = id;
    c.energy_q = *energy;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const auto f = split_ws(line);
        if (f.size() < 4) throw FormatError("xyz: record with fewer than 4 fields");
        Residue r;
        r.ca = {parse_double(f[1], "x"), parse_double(f[2], "y"), parse_double(f[3], "z")};
        if (f.size() >= 5 && f[4].size() == 1) {
            r.code = f[4][0];
        } else if (sequence && row < sequence->size()) {
            r.code = (*sequence)[row];
        } else {
            r.code = 'A';
        }
        if (!std::isfinite(r.ca.x) || !std::isfinite(r.ca.y) || !std::isfinite(r.ca.z))
            throw FormatError("xyz: non-finite coordinate");
        c.residues.push_back(r);
        ++row;
    }
    if (c.size() != count)
        throw FormatError("xyz: declared " + std::to_string(count) + " atoms, found " +
                          std::to_string(c.size()));
    return c;
}

std::string write_xyz(const Conformation& c) {
    std::ostringstream out;
    out << c.size() << '\n';
    out << "E_q=" << fmt6(c.energy_q);
    if (!c.id.empty()) out << " id=" << c.id;
    out << '\n';
    for (const auto& r : c.residues) {
        out << "CA " << fmt6(r.ca.x) << ' ' << fmt6(r.ca.y) << ' ' << fmt6(r.ca.z) << ' ' << r.code
            << '\n';
    }
    return out.str();
}

std::string write_pdb(const Conformation& c) {
    if (c.size() == 0) throw ValidationError("write_pdb: empty conformation");
    for (const auto& r : c.residues) {
        if (std::abs(r.ca.x) >= 1e4 || std::abs(r.ca.y) >= 1e4 || std::abs(r.ca.z) >= 1e4)
            throw FormatError("write_pdb: coordinate magnitude >= 1e4 A overflows PDB columns");
    }
    std::ostringstream out;
    char buf[96];
    int serial = 1;
    for (const auto& r : c.residues) {
        std::snprintf(buf, sizeof(buf),
                      "ATOM  %5d  CA  %-3s %c%4d    %8.3f%8.3f%8.3f%6.2f%6.2f          %2s", serial,
                      three_letter(r.code), 'A', serial, r.ca.x, r.ca.y, r.ca.z, 1.00, 0.00, "C");
        out << buf << '\n';
        ++serial;
    }
    std::snprintf(buf, sizeof(buf), "TER   %5d      %-3s %c%4d", serial,
                  three_letter(c.residues.back().code), 'A', serial - 1);
    out << buf << '\n' << "END\n";
    return out.str();
}

std::string write_summary(const RankingReport& report) {
    if (report.ranked.empty()) throw ValidationError("write_summary: empty report");
    const auto& cfg = report.config;
    std::ostringstream out;
    out << "# alpha=" << fmt6(report.weights.alpha) << " beta=" << fmt6(report.weights.beta)
        << " gamma=" << fmt6(report.weights.gamma)
        << " ss_metric=" << (cfg.ss_metric == SsMetric::CE ? "ce"
                             : cfg.ss_metric == SsMetric::KL ? "kl" : "l2")
        << " ss_mode=" << (cfg.ss_mode == SsMode::SS3 ? "ss3" : "ss8")
        << " epsilon=" << cfg.epsilon << " rsa_weight=" << (cfg.rsa_weighting ? 1 : 0)
        << " normalize=" << (cfg.normalize ? 1 : 0) << '\n';
    out << "rank,candidate_id,e_q_raw,d_ss_raw,d_angle_raw,e_q_norm,d_ss_norm,d_angle_norm,"
           "e_fuse,tie_break\n";
    auto opt6 = [](const std::optional<double>& v) { return v ? fmt6(*v) : std::string(); };
    int rank = 1;
    for (const auto& s : report.ranked) {
        out << rank << ',' << s.candidate_id << ',' << opt6(s.e_q_raw) << ',' << opt6(s.d_ss_raw)
            << ',' << opt6(s.d_angle_raw) << ',' << fmt6(s.e_q_norm) << ',' << fmt6(s.d_ss_norm)
            << ',' << fmt6(s.d_angle_norm) << ',' << fmt6(s.e_fuse) << ',' << s.tie_break << '\n';
        ++rank;
    }
    return out.str();
}

MethodRmsdTable read_rmsd_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw FormatError("rmsd csv: empty file");

    auto split_csv = [](const std::string& l) {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : l) {
            if (ch == ',') {
                out.push_back(trim(cur));
                cur.clear();
            } else if (ch != '\r') {
                cur += ch;
            }
        }
        out.push_back(trim(cur));
        return out;
    };

    const auto header = split_csv(line);
    auto col_of = [&](const std::string& name) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        return std::nullopt;
    };
    const auto c_id = col_of("fragment_id");
    const auto c_method = col_of("method");
    const auto c_rmsd = col_of("rmsd_angstrom");
    if (!c_id || !c_method || !c_rmsd)
        throw SchemaError("rmsd csv: header must name fragment_id, method, rmsd_angstrom");
    const auto c_score = col_of("score");

    // fragment -> method -> (rmsd, score)
    std::map<std::string, std::map<std::string, std::pair<double, double>>> cells;
    std::vector<std::string> frag_order;
    std::set<std::string> methods;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        const auto f = split_csv(line);
        if (f.size() <= std::max(*c_method, *c_rmsd))
            throw FormatError("rmsd csv: short row '" + line + "'");
        const std::string frag = f[*c_id];
        const std::string method = f[*c_method];
        const double rmsd = parse_double(f[*c_rmsd], "rmsd_angstrom");
        if (rmsd < 0.0 || !std::isfinite(rmsd))
            throw ValidationError("rmsd csv: RMSD must be finite and >= 0");
        double score = std::nan("");
        if (c_score && *c_score < f.size() && !f[*c_score].empty())
            score = parse_double(f[*c_score], "score");
        if (cells.find(frag) == cells.end()) frag_order.push_back(frag);
        cells[frag][method] = {rmsd, score};
        methods.insert(method);
    }
    if (cells.empty()) throw ValidationError("rmsd csv: no data rows");

    // alignment check: every method present for every fragment
    std::string missing;
    for (const auto& frag : frag_order) {
        for (const auto& m : methods) {
            if (cells[frag].find(m) == cells[frag].end())
                missing += " " + frag + "/" + m;
        }
    }
    if (!missing.empty())
        throw ValidationError("rmsd csv: misaligned fragment ids, missing:" + missing);

    MethodRmsdTable t;
    t.fragment_ids = frag_order;
    t.has_scores = c_score.has_value();
    for (const auto& m : methods) {
        auto& rm = t.rmsd[m];
        auto& sc = t.score[m];
        for (const auto& frag : frag_order) {
            rm.push_back(cells[frag][m].first);
            sc.push_back(cells[frag][m].second);
        }
    }
    return t;
}

}  // namespace fusefold
