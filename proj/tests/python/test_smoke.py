"""End-to-end smoke tests for the python bindings."""

import math

import pytest

import fusefold as ff


def test_version():
    assert ff.__version__ == "0.1.0"


def test_wrap_and_dihedral():
    assert ff.wrap(3 * math.pi / 2) == pytest.approx(-math.pi / 2)
    ang = ff.dihedral(
        ff.Point3(0, 0, 1), ff.Point3(0, 0, 0), ff.Point3(1, 0, 0), ff.Point3(1, 1, 0)
    )
    assert ang == pytest.approx(math.pi / 2)


def test_decode_energy_and_rmsd():
    c = ff.decode("UL", "FAAF")
    assert len(c.residues) == 4
    model = ff.SurrogateEnergyModel.standard(4)
    e = ff.lattice_energy(c, model)
    assert e < 0.0  # one hydrophobic contact
    assert ff.kabsch_rmsd(c, c) == pytest.approx(0.0, abs=1e-9)


def test_generate_and_rank_pipeline():
    seq = "FWAF"
    model = ff.SurrogateEnergyModel.standard(len(seq))
    cands = ff.enumerate_exhaustive(seq, model, 5)
    assert len(cands.conformations) == 5
    energies = [c.energy_q for c in cands.conformations]
    assert energies == sorted(energies)

    table = (
        "idx\tresidue\tp8_H\tp8_G\tp8_I\tp8_E\tp8_B\tp8_T\tp8_S\tp8_L\t"
        "p3_H\tp3_E\tp3_C\tdis_in\tdis_out\trsa\tasa\tphi\tpsi\n"
    )
    for i in range(1, 5):
        table += (
            f"{i}\tA\t0.4\t0.05\t0.05\t0.27\t0.03\t0.1\t0.05\t0.05\t"
            "0.5\t0.3\t0.2\t0\t0\t0.8\t50\t-60\t-45\n"
        )
    priors = ff.sanitize(ff.parse_priors(table))

    report = ff.fuse(cands.conformations, priors, ff.FusionWeights(), ff.ScoringConfig())
    assert len(report.ranked) == 5
    fused = [s.e_fuse for s in report.ranked]
    assert fused == sorted(fused)

    csv = ff.write_summary(report)
    assert csv.startswith("# alpha=")
    pdb = ff.write_pdb(cands.conformations[0])
    assert pdb.startswith("ATOM")


def test_statistics():
    base = [11.0, 12.0, 11.5, 12.5, 10.8, 11.2]
    hyb = [4.0, 5.0, 4.5, 5.5, 4.2, 5.8]
    r = ff.paired_t_test(base, hyb)
    assert r.p_one_tailed < 0.01
    assert r.cohens_dz == pytest.approx(r.t_statistic / math.sqrt(6))
    assert ff.improvement_percent(11.43, 4.89) == pytest.approx(57.2, abs=0.05)


def test_validation_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        ff.decode("F", "ABZ")
    with pytest.raises(ValueError):
        ff.improvement_percent(-1.0, 1.0)
