#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fusefold/evaluation.hpp"
#include "fusefold/io_formats.hpp"
#include "fusefold/priors.hpp"
#include "fusefold/rama.hpp"
#include "fusefold/scoring.hpp"
#include "fusefold/surrogate.hpp"

namespace py = pybind11;
using namespace fusefold;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Candidate backbone re-ranking by fused physics + statistical priors";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    // geometry
    py::class_<Point3>(m, "Point3")
        .def(py::init<>())
        .def(py::init([](double x, double y, double z) { return Point3{x, y, z}; }))
        .def_readwrite("x", &Point3::x)
        .def_readwrite("y", &Point3::y)
        .def_readwrite("z", &Point3::z);

    py::class_<Residue>(m, "Residue")
        .def(py::init<>())
        .def_readwrite("code", &Residue::code)
        .def_readwrite("ca", &Residue::ca);

    py::class_<Conformation>(m, "Conformation")
        .def(py::init<>())
        .def_readwrite("id", &Conformation::id)
        .def_readwrite("residues", &Conformation::residues)
        .def_readwrite("energy_q", &Conformation::energy_q)
        .def("__len__", &Conformation::size);

    py::class_<DihedralTrace>(m, "DihedralTrace")
        .def_readonly("phi_hat", &DihedralTrace::phi_hat)
        .def_readonly("psi_hat", &DihedralTrace::psi_hat)
        .def_readonly("phi_mask", &DihedralTrace::phi_mask)
        .def_readonly("psi_mask", &DihedralTrace::psi_mask);

    m.def("wrap", &wrap, py::arg("angle_rad"));
    m.def("dihedral", &dihedral);
    m.def("virtual_dihedrals", &virtual_dihedrals);
    m.def("kabsch_rmsd", &kabsch_rmsd);

    // priors
    py::enum_<PriorsSchema>(m, "PriorsSchema")
        .value("header_named", PriorsSchema::header_named)
        .value("netsurfp3_positional", PriorsSchema::netsurfp3_positional);

    py::class_<PriorsProfile>(m, "PriorsProfile")
        .def(py::init<>())
        .def_readwrite("sequence", &PriorsProfile::sequence)
        .def_readwrite("ss3", &PriorsProfile::ss3)
        .def_readwrite("ss8", &PriorsProfile::ss8)
        .def_readwrite("phi", &PriorsProfile::phi)
        .def_readwrite("psi", &PriorsProfile::psi)
        .def_readwrite("phi_mask", &PriorsProfile::phi_mask)
        .def_readwrite("psi_mask", &PriorsProfile::psi_mask)
        .def_readwrite("rsa", &PriorsProfile::rsa)
        .def("__len__", &PriorsProfile::size);

    m.def("parse_priors", &parse_priors, py::arg("table"),
          py::arg("schema") = PriorsSchema::header_named);
    m.def("sanitize", &sanitize);
    m.def("serialize_priors", &serialize_priors);

    // rama
    py::class_<RamaConfig>(m, "RamaConfig")
        .def(py::init<>())
        .def_readwrite("centers_deg", &RamaConfig::centers_deg)
        .def_readwrite("sigma_deg", &RamaConfig::sigma_deg);

    m.def("induce_ss3", &induce_ss3, py::arg("phi_rad"), py::arg("psi_rad"),
          py::arg("cfg") = RamaConfig{});
    m.def("expand_ss8", &expand_ss8);
    m.def("marginalize_ss8", &marginalize_ss8);

    // scoring
    py::enum_<SsMetric>(m, "SsMetric")
        .value("CE", SsMetric::CE)
        .value("KL", SsMetric::KL)
        .value("L2", SsMetric::L2);
    py::enum_<SsMode>(m, "SsMode").value("SS3", SsMode::SS3).value("SS8", SsMode::SS8);

    py::class_<FusionWeights>(m, "FusionWeights")
        .def(py::init<>())
        .def_readwrite("alpha", &FusionWeights::alpha)
        .def_readwrite("beta", &FusionWeights::beta)
        .def_readwrite("gamma", &FusionWeights::gamma);

    py::class_<ScoringConfig>(m, "ScoringConfig")
        .def(py::init<>())
        .def_readwrite("ss_metric", &ScoringConfig::ss_metric)
        .def_readwrite("ss_mode", &ScoringConfig::ss_mode)
        .def_readwrite("epsilon", &ScoringConfig::epsilon)
        .def_readwrite("rsa_weighting", &ScoringConfig::rsa_weighting)
        .def_readwrite("normalize", &ScoringConfig::normalize);

    py::class_<FusedScore>(m, "FusedScore")
        .def_readonly("candidate_id", &FusedScore::candidate_id)
        .def_readonly("e_q_raw", &FusedScore::e_q_raw)
        .def_readonly("d_ss_raw", &FusedScore::d_ss_raw)
        .def_readonly("d_angle_raw", &FusedScore::d_angle_raw)
        .def_readonly("e_q_norm", &FusedScore::e_q_norm)
        .def_readonly("d_ss_norm", &FusedScore::d_ss_norm)
        .def_readonly("d_angle_norm", &FusedScore::d_angle_norm)
        .def_readonly("e_fuse", &FusedScore::e_fuse)
        .def_readonly("tie_break", &FusedScore::tie_break);

    py::class_<RankingReport>(m, "RankingReport")
        .def_readonly("ranked", &RankingReport::ranked)
        .def_readonly("weights", &RankingReport::weights);

    m.def("minmax_normalize", &minmax_normalize);
    m.def("fuse", &fuse, py::arg("candidates"), py::arg("priors"),
          py::arg("weights") = FusionWeights{}, py::arg("config") = ScoringConfig{});

    // surrogate
    py::class_<SurrogateEnergyModel>(m, "SurrogateEnergyModel")
        .def_static("standard", &SurrogateEnergyModel::standard)
        .def_readwrite("lambda_steric", &SurrogateEnergyModel::lambda_steric)
        .def_readwrite("bond_length", &SurrogateEnergyModel::bond_length);

    py::class_<CandidateSet>(m, "CandidateSet")
        .def_readonly("conformations", &CandidateSet::conformations)
        .def_readonly("moves", &CandidateSet::moves)
        .def_readonly("method", &CandidateSet::method)
        .def_readonly("seed", &CandidateSet::seed);

    py::class_<AnnealSchedule>(m, "AnnealSchedule")
        .def(py::init<>())
        .def_readwrite("t_start", &AnnealSchedule::t_start)
        .def_readwrite("t_end", &AnnealSchedule::t_end)
        .def_readwrite("steps", &AnnealSchedule::steps);

    m.def("decode", &decode, py::arg("moves"), py::arg("sequence"), py::arg("bond_length") = 3.8);
    m.def("lattice_energy", &lattice_energy);
    m.def("enumerate_exhaustive", &enumerate_exhaustive, py::arg("sequence"), py::arg("model"),
          py::arg("top_n"));
    m.def("anneal", &anneal, py::arg("sequence"), py::arg("model"), py::arg("schedule"),
          py::arg("rng_seed"), py::arg("top_n"));

    // evaluation
    py::class_<SummaryStats>(m, "SummaryStats")
        .def_readonly("mean", &SummaryStats::mean)
        .def_readonly("median", &SummaryStats::median)
        .def_readonly("stddev", &SummaryStats::stddev)
        .def_readonly("min", &SummaryStats::min)
        .def_readonly("max", &SummaryStats::max)
        .def_readonly("n", &SummaryStats::n);

    py::class_<PairedTestResult>(m, "PairedTestResult")
        .def_readonly("n", &PairedTestResult::n)
        .def_readonly("mean_diff", &PairedTestResult::mean_diff)
        .def_readonly("ci95_low", &PairedTestResult::ci95_low)
        .def_readonly("ci95_high", &PairedTestResult::ci95_high)
        .def_readonly("t_statistic", &PairedTestResult::t_statistic)
        .def_readonly("p_one_tailed", &PairedTestResult::p_one_tailed)
        .def_readonly("cohens_dz", &PairedTestResult::cohens_dz)
        .def_readonly("wilcoxon_p_one_tailed", &PairedTestResult::wilcoxon_p_one_tailed);

    py::class_<CorrelationResult>(m, "CorrelationResult")
        .def_readonly("pearson_r", &CorrelationResult::pearson_r)
        .def_readonly("r_squared", &CorrelationResult::r_squared)
        .def_readonly("slope", &CorrelationResult::slope)
        .def_readonly("intercept", &CorrelationResult::intercept);

    m.def("summary_stats", &summary_stats);
    m.def("improvement_percent", &improvement_percent);
    m.def("paired_t_test", &paired_t_test);
    m.def("wilcoxon_signed_rank", &wilcoxon_signed_rank);
    m.def("score_rmsd_correlation", &score_rmsd_correlation);
    m.def("student_t_cdf", &student_t_cdf);

    // io
    m.def("read_xyz", &read_xyz, py::arg("text"), py::arg("id") = "",
          py::arg("sequence") = std::nullopt, py::arg("fallback_energy") = std::nullopt);
    m.def("write_xyz", &write_xyz);
    m.def("write_pdb", &write_pdb);
    m.def("write_summary", &write_summary);
}
