#include "fusefold/priors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "fusefold/geometry.hpp"

namespace fusefold {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kProbSlack = 1e-6;

std::vector<std::string> split_fields(const std::string& line) {
    // accepts tab- or comma-delimited; falls back to whitespace
    char delim = '\t';
    if (line.find('\t') == std::string::npos) {
        if (line.find(',') != std::string::npos)
            delim = ',';
        else
            delim = ' ';
    }
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == delim) {
            if (delim == ' ' && cur.empty()) continue;
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    if (!cur.empty() || delim != ' ') out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// locale-independent float parse; "nan" accepted
double parse_cell(const std::string& raw, std::size_t row, const std::string& col) {
    const std::string s = trim(raw);
    if (s.empty()) throw ParseError("priors row " + std::to_string(row) + ": empty cell in " + col);
    double v;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        // std::from_chars handles "nan"/"inf" on libstdc++, but be permissive
        if (s == "NA" || s == "na" || s == "NaN") return std::nan("");
        throw ParseError("priors row " + std::to_string(row) + ": non-numeric cell '" + s +
                         "' in column " + col);
    }
    return v;
}

double check_prob(double v, std::size_t row, const std::string& col) {
    if (std::isfinite(v) && (v < -kProbSlack || v > 1.0 + kProbSlack))
        throw ValidationError("priors row " + std::to_string(row) + ": probability out of [0,1] in " +
                              col);
    return v;
}

template <std::size_t K>
void renormalize(std::array<double, K>& p) {
    double s = 0.0;
    bool finite = true;
    for (double v : p) {
        if (!std::isfinite(v)) finite = false;
        s += v;
    }
    if (!finite || s <= 0.0) return;  // sanitize handles these
    for (double& v : p) v = std::max(0.0, v) / s;
    // tiny re-sum to kill clamp residue
    double s2 = 0.0;
    for (double v : p) s2 += v;
    for (double& v : p) v /= s2;
}

const std::array<std::string, 8> kSs8Cols = {"p8_H", "p8_G", "p8_I", "p8_E",
                                             "p8_B", "p8_T", "p8_S", "p8_L"};
const std::array<std::string, 3> kSs3Cols = {"p3_H", "p3_E", "p3_C"};

}  // namespace

PriorsProfile parse_priors(const std::string& table, PriorsSchema schema) {
    std::vector<std::string> lines;
    {
        std::istringstream in(table);
        std::string line;
        while (std::getline(in, line)) {
            if (!trim(line).empty()) lines.push_back(line);
        }
    }
    if (lines.empty()) throw ParseError("priors table is empty");

    PriorsProfile p;

    if (schema == PriorsSchema::header_named) {
        const auto header = split_fields(lines.front());
        std::map<std::string, std::size_t> col;
        for (std::size_t i = 0; i < header.size(); ++i) col[trim(header[i])] = i;

        auto need = [&](const std::string& name) {
            auto it = col.find(name);
            if (it == col.end()) throw SchemaError("priors: missing required column '" + name + "'");
            return it->second;
        };
        const std::size_t c_res = need("residue");
        const std::size_t c_rsa = need("rsa");
        const std::size_t c_phi = need("phi");
        const std::size_t c_psi = need("psi");
        std::array<std::size_t, 8> c_ss8;
        for (std::size_t k = 0; k < 8; ++k) c_ss8[k] = need(kSs8Cols[k]);
        std::array<std::size_t, 3> c_ss3;
        for (std::size_t k = 0; k < 3; ++k) c_ss3[k] = need(kSs3Cols[k]);

        for (std::size_t r = 1; r < lines.size(); ++r) {
            const auto f = split_fields(lines[r]);
            auto cell = [&](std::size_t c, const std::string& name) {
                if (c >= f.size())
                    throw ParseError("priors row " + std::to_string(r) + ": too few fields");
                return parse_cell(f[c], r, name);
            };
            p.sequence += trim(f[c_res]).empty() ? 'X' : trim(f[c_res])[0];
            Ss8 s8;
            for (std::size_t k = 0; k < 8; ++k)
                s8[k] = check_prob(cell(c_ss8[k], kSs8Cols[k]), r, kSs8Cols[k]);
            Ss3 s3;
            for (std::size_t k = 0; k < 3; ++k)
                s3[k] = check_prob(cell(c_ss3[k], kSs3Cols[k]), r, kSs3Cols[k]);
            renormalize(s8);
            renormalize(s3);
            p.ss8.push_back(s8);
            p.ss3.push_back(s3);
            p.rsa.push_back(cell(c_rsa, "rsa"));
            const double phi_deg = cell(c_phi, "phi");
            const double psi_deg = cell(c_psi, "psi");
            p.phi.push_back(std::isfinite(phi_deg) ? wrap(phi_deg * kPi / 180.0) : phi_deg);
            p.psi.push_back(std::isfinite(psi_deg) ? wrap(psi_deg * kPi / 180.0) : psi_deg);
            p.phi_mask.push_back(std::isfinite(phi_deg));
            p.psi_mask.push_back(std::isfinite(psi_deg));
        }
    } else {
        // headerless NetSurfP-3.0 layout; SS8 arrives as [G,H,I,B,E,S,T,C]
        // and is reordered to [H,G,I,E,B,T,S,L]
        constexpr std::size_t kMinCols = 20;
        static constexpr std::array<std::size_t, 8> ss8_src = {11, 10, 12, 14, 13, 16, 15, 17};
        for (std::size_t r = 0; r < lines.size(); ++r) {
            const auto f = split_fields(lines[r]);
            if (f.size() < kMinCols)
                throw SchemaError("priors row " + std::to_string(r) +
                                  ": netsurfp3 schema needs >= 20 columns");
            p.sequence += trim(f[1]).empty() ? 'X' : trim(f[1])[0];
            Ss8 s8;
            for (std::size_t k = 0; k < 8; ++k)
                s8[k] = check_prob(parse_cell(f[ss8_src[k]], r, "ss8"), r, "ss8");
            Ss3 s3 = {check_prob(parse_cell(f[6], r, "ss3"), r, "ss3"),
                      check_prob(parse_cell(f[7], r, "ss3"), r, "ss3"),
                      check_prob(parse_cell(f[8], r, "ss3"), r, "ss3")};
            renormalize(s8);
            renormalize(s3);
            p.ss8.push_back(s8);
            p.ss3.push_back(s3);
            p.rsa.push_back(parse_cell(f[3], r, "rsa"));
            const double phi_deg = parse_cell(f[18], r, "phi");
            const double psi_deg = parse_cell(f[19], r, "psi");
            p.phi.push_back(std::isfinite(phi_deg) ? wrap(phi_deg * kPi / 180.0) : phi_deg);
            p.psi.push_back(std::isfinite(psi_deg) ? wrap(psi_deg * kPi / 180.0) : psi_deg);
            p.phi_mask.push_back(std::isfinite(phi_deg));
            p.psi_mask.push_back(std::isfinite(psi_deg));
        }
    }
    return p;
}

PriorsProfile sanitize(const PriorsProfile& in) {
    PriorsProfile p = in;
    const std::size_t n = p.size();
    p.phi_mask.resize(n, false);
    p.psi_mask.resize(n, false);

    for (std::size_t i = 0; i < n; ++i) {
        double& r = p.rsa[i];
        if (!std::isfinite(r))
            r = 1.0;
        else
            r = std::clamp(r, 0.0, 1.0);

        auto fix = [](auto& dist) {
            double s = 0.0;
            bool ok = true;
            for (double v : dist) {
                if (!std::isfinite(v) || v < 0.0) ok = false;
                s += v;
            }
            if (!ok || s <= 0.0) {
                for (double& v : dist) v = 1.0 / static_cast<double>(dist.size());
            } else {
                for (double& v : dist) v /= s;
            }
        };
        fix(p.ss3[i]);
        fix(p.ss8[i]);

        if (!std::isfinite(p.phi[i])) {
            p.phi[i] = 0.0;
            p.phi_mask[i] = false;
        } else {
            p.phi[i] = wrap(p.phi[i]);
        }
        if (!std::isfinite(p.psi[i])) {
            p.psi[i] = 0.0;
            p.psi_mask[i] = false;
        } else {
            p.psi[i] = wrap(p.psi[i]);
        }
    }
    return p;
}

std::string serialize_priors(const PriorsProfile& p) {
    std::ostringstream out;
    out << "idx\tresidue";
    for (const auto& c : kSs8Cols) out << '\t' << c;
    for (const auto& c : kSs3Cols) out << '\t' << c;
    out << "\tdis_in\tdis_out\trsa\tasa\tphi\tpsi\n";
    out.setf(std::ios::fixed);
    out.precision(8);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out << (i + 1) << '\t' << p.sequence[i];
        for (double v : p.ss8[i]) out << '\t' << v;
        for (double v : p.ss3[i]) out << '\t' << v;
        out << "\t0.0\t0.0";  // disorder columns: carried for layout, unused
        out << '\t' << p.rsa[i] << "\t0.0";
        const double phi = p.phi_mask.empty() || p.phi_mask[i] ? p.phi[i] * 180.0 / kPi : std::nan("");
        const double psi = p.psi_mask.empty() || p.psi_mask[i] ? p.psi[i] * 180.0 / kPi : std::nan("");
        out << '\t' << phi << '\t' << psi << '\n';
    }
    return out.str();
}

}  // namespace fusefold
