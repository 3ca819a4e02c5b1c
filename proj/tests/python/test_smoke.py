import math

import frackansa


def test_mittag_leffler_classical_limits():
    assert math.isclose(frackansa.mittag_leffler(1.0, 1.0), math.e, rel_tol=1e-12)
    assert math.isclose(
        frackansa.mittag_leffler(2.0, -4.0), math.cos(2.0), rel_tol=1e-12
    )
    z = frackansa.mittag_leffler(1.0, complex(0.0, math.pi))
    assert abs(z - complex(-1.0, 0.0)) < 1e-12


def test_gauss_jacobi_legendre_weights_sum_to_two():
    nodes, weights = frackansa.gauss_jacobi(5, 0.0, 0.0)
    assert len(nodes) == 5
    assert math.isclose(sum(weights), 2.0, rel_tol=1e-13)
    assert all(-1.0 < x < 1.0 for x in nodes)


def test_case_catalogue():
    cases = frackansa.list_cases()
    ids = [c[0] for c in cases]
    assert len(ids) == 6
    assert ids[0] == "example1_1d"
    assert all(desc for _, desc in cases)


def test_run_strip_case():
    cfg = frackansa.RunConfig()
    cfg.case_id = "example1_1d"
    cfg.spacing = 0.1
    out = frackansa.run_case(cfg)
    assert out["nodes"].shape == (11, 2)
    assert out["has_exact"]
    assert len(out["fields"]) == len(out["times"])
    assert out["fields"][0].shape == (11,)
    assert 0.003 < out["mae"] < 0.005


def test_convergence_rows():
    rows = frackansa.convergence_study(
        "example1_1d", [0.1, 0.05], frackansa.RunConfig()
    )
    assert len(rows) == 2
    assert math.isnan(rows[0]["rate"])
    assert rows[1]["rate"] > 21.0 / 11.0
    assert rows[1]["mae"] < rows[0]["mae"]
