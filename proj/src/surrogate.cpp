#include "fusefold/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace fusefold {

namespace {

struct IVec3 {
    long x = 0, y = 0, z = 0;
    bool operator==(const IVec3&) const = default;
    auto operator<=>(const IVec3&) const = default;
};

// heading as signed lattice axis; the lateral moves pick the cyclically
// next/previous axis so no move ever reverses the previous bond
struct Heading {
    int axis = 0;  // 0=x 1=y 2=z
    int sign = 1;
};

IVec3 unit(const Heading& h) {
    IVec3 v;
    (h.axis == 0 ? v.x : h.axis == 1 ? v.y : v.z) = h.sign;
    return v;
}

Heading step(const Heading& h, char move) {
    switch (move) {
        case 'F': return h;
        case 'U': return {(h.axis + 1) % 3, h.sign};
        case 'D': return {(h.axis + 1) % 3, -h.sign};
        case 'L': return {(h.axis + 2) % 3, -h.sign};
        case 'R': return {(h.axis + 2) % 3, h.sign};
        default: throw ValidationError(std::string("invalid move '") + move + "'");
    }
}

std::vector<IVec3> decode_lattice(const MoveString& m) {
    std::vector<IVec3> pts;
    pts.push_back({0, 0, 0});
    pts.push_back({1, 0, 0});
    Heading h{0, 1};
    IVec3 pos{1, 0, 0};
    for (char mv : m) {
        h = step(h, mv);
        const IVec3 u = unit(h);
        pos = {pos.x + u.x, pos.y + u.y, pos.z + u.z};
        pts.push_back(pos);
    }
    return pts;
}

long sq_dist(const IVec3& a, const IVec3& b) {
    const long dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
    return dx * dx + dy * dy + dz * dz;
}

double lattice_energy_pts(const std::vector<IVec3>& pts, const std::string& seq,
                          const SurrogateEnergyModel& model) {
    double e = 0.0;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const long d2 = sq_dist(pts[i], pts[j]);
            if (d2 == 0) {
                e += model.lambda_steric;
            } else if (d2 == 1 && j - i >= 3) {
                e += model.contact_matrix[amino_index(seq[i])][amino_index(seq[j])];
            }
        }
    }
    return e;
}

bool overlap_free(const std::vector<IVec3>& pts) {
    std::vector<IVec3> s = pts;
    std::sort(s.begin(), s.end());
    return std::adjacent_find(s.begin(), s.end()) == s.end();
}

void validate_sequence(const std::string& seq) {
    if (seq.size() < 2) throw ValidationError("sequence must have length >= 2");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        try {
            amino_index(seq[i]);
        } catch (const ValidationError&) {
            throw ValidationError(std::string("invalid residue letter '") + seq[i] +
                                  "' at position " + std::to_string(i + 1));
        }
    }
}

Conformation from_lattice(const std::vector<IVec3>& pts, const std::string& seq,
                          double bond_length, std::string id, double energy) {
    Conformation c;
    c.id = std::move(id);
    c.energy_q = energy;
    c.residues.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        c.residues.push_back({seq[i], {pts[i].x * bond_length, pts[i].y * bond_length,
                                       pts[i].z * bond_length}});
    }
    return c;
}

}  // namespace

SurrogateEnergyModel SurrogateEnergyModel::standard(std::size_t fragment_length) {
    SurrogateEnergyModel m;
    m.contact_matrix = mj_contact_matrix();
    m.lambda_steric =
        1e3 * mj_max_abs() * static_cast<double>(fragment_length) * static_cast<double>(fragment_length);
    return m;
}

Conformation decode(const MoveString& m, const std::string& sequence, double bond_length) {
    validate_sequence(sequence);
    if (m.size() + 2 != sequence.size())
        throw ShapeError("decode: move string length " + std::to_string(m.size()) +
                         " does not match sequence length " + std::to_string(sequence.size()));
    const auto pts = decode_lattice(m);  // throws on invalid alphabet
    return from_lattice(pts, sequence, bond_length, m, 0.0);
}

double lattice_energy(const Conformation& c, const SurrogateEnergyModel& model) {
    const double b = model.bond_length;
    std::vector<IVec3> pts;
    pts.reserve(c.size());
    for (const auto& r : c.residues) {
        auto snap = [&](double v) {
            const double q = v / b;
            const double rq = std::round(q);
            if (std::abs(q - rq) > 1e-6)
                throw DomainError("lattice_energy: off-lattice coordinate");
            return static_cast<long>(rq);
        };
        pts.push_back({snap(r.ca.x), snap(r.ca.y), snap(r.ca.z)});
    }
    std::string seq;
    for (const auto& r : c.residues) seq += r.code;
    return lattice_energy_pts(pts, seq, model);
}

CandidateSet enumerate_exhaustive(const std::string& sequence, const SurrogateEnergyModel& model,
                                  std::size_t top_n) {
    validate_sequence(sequence);
    const std::size_t len = sequence.size();
    if (len > 10)
        throw ValidationError("enumerate_exhaustive: L > 10 (" + std::to_string(len) +
                              "); use anneal for longer fragments");

    const std::size_t moves = len - 2;
    std::vector<std::pair<double, MoveString>> pool;

    MoveString m(moves, 'D');  // 'D' is the lexicographically smallest move
    // odometer over the 5^(L-2) move strings in lexicographic order
    const std::string alpha = "DFLRU";
    std::vector<std::size_t> digits(moves, 0);
    const std::size_t total = [&] {
        std::size_t t = 1;
        for (std::size_t i = 0; i < moves; ++i) t *= 5;
        return t;
    }();

    for (std::size_t it = 0; it < total; ++it) {
        for (std::size_t i = 0; i < moves; ++i) m[i] = alpha[digits[i]];
        const auto pts = decode_lattice(m);
        if (overlap_free(pts)) pool.emplace_back(lattice_energy_pts(pts, sequence, model), m);
        // increment (most significant digit first keeps lexicographic order)
        for (std::size_t i = moves; i-- > 0;) {
            if (++digits[i] < 5) break;
            digits[i] = 0;
        }
    }

    std::sort(pool.begin(), pool.end());
    if (pool.size() > top_n) pool.resize(top_n);

    CandidateSet out;
    out.method = "exhaustive";
    for (std::size_t i = 0; i < pool.size(); ++i) {
        out.moves.push_back(pool[i].second);
        out.conformations.push_back(from_lattice(decode_lattice(pool[i].second), sequence,
                                                 model.bond_length, pool[i].second, pool[i].first));
    }
    return out;
}

CandidateSet anneal(const std::string& sequence, const SurrogateEnergyModel& model,
                    const AnnealSchedule& schedule, std::uint64_t rng_seed, std::size_t top_n) {
    validate_sequence(sequence);
    if (sequence.size() < 4) throw ValidationError("anneal: L >= 4 required");
    if (schedule.steps < 1) throw ConfigError("anneal: steps >= 1 required");
    if (schedule.t_start <= 0.0 || schedule.t_end <= 0.0 || schedule.t_end > schedule.t_start)
        throw ConfigError("anneal: need 0 < t_end <= t_start");

    const std::size_t moves = sequence.size() - 2;
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<std::size_t> pick_pos(0, moves - 1);
    std::uniform_int_distribution<std::size_t> pick_move(0, 4);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    MoveString cur(moves, 'F');
    for (auto& c : cur) c = kMoveAlphabet[pick_move(rng)];
    auto eval = [&](const MoveString& ms) {
        return lattice_energy_pts(decode_lattice(ms), sequence, model);
    };
    double cur_e = eval(cur);

    std::map<MoveString, double> pool;
    auto record = [&](const MoveString& ms, double e) {
        if (e < model.lambda_steric && overlap_free(decode_lattice(ms))) pool.emplace(ms, e);
    };
    record(cur, cur_e);

    const double ratio =
        schedule.steps > 1
            ? std::pow(schedule.t_end / schedule.t_start, 1.0 / static_cast<double>(schedule.steps - 1))
            : 1.0;
    double temp = schedule.t_start;

    for (std::size_t s = 0; s < schedule.steps; ++s) {
        MoveString prop = cur;
        prop[pick_pos(rng)] = kMoveAlphabet[pick_move(rng)];
        const double e = eval(prop);
        const double delta = e - cur_e;
        if (delta <= 0.0 || unif(rng) < std::exp(-delta / temp)) {
            cur = std::move(prop);
            cur_e = e;
            record(cur, cur_e);
        }
        temp *= ratio;
    }

    std::vector<std::pair<double, MoveString>> best;
    best.reserve(pool.size());
    for (const auto& [ms, e] : pool) best.emplace_back(e, ms);
    std::sort(best.begin(), best.end());
    if (best.size() > top_n) best.resize(top_n);

    CandidateSet out;
    out.method = "anneal";
    out.seed = rng_seed;
    for (const auto& [e, ms] : best) {
        out.moves.push_back(ms);
        out.conformations.push_back(
            from_lattice(decode_lattice(ms), sequence, model.bond_length, ms, e));
    }
    return out;
}

}  // namespace fusefold
