import pytest

import rcq

X1X2 = rcq.laurent({(1, 1): 1})


def test_modular_rc1_is_delta_multiple():
    r = rcq.modular_rc(1, "E4", "E6", prec=10)
    assert r["weight"] == 12
    # -3456 q + 82944 q^2 + ...
    q = r["q"]["coeffs"]
    assert q[0] == [0, 1]
    assert q[1] == [-3456, 1]
    assert q[2] == [82944, 1]


def test_star_leading_terms():
    s = rcq.star(X1X2, rcq.laurent({(0, 1): 1}), order=2)
    assert s["order"] == 2
    c = s["coeffs"]
    assert c[0]["terms"] == [[1, 2, [1, 1, 0, 1]]]
    # -i/2 {x1 x2, x2}
    assert c[1]["terms"] == [[0, 1, [0, 1, -1, 2]]]
    assert c[2]["terms"] == []


def test_flat_section_starts_with_f():
    fs = rcq.flat_section(X1X2, degree=2)
    first = [e for e in fs if e["m"] == 0 and e["n"] == 0][0]
    assert first["a"]["terms"] == X1X2["terms"]


def test_rc_h1_and_omega():
    assert rcq.rc_h1(0)["rank"] == 2
    om = rcq.omega_from_mu(rcq.laurent({(0, 1): 1}))
    assert om["terms"] == [[0, -2, [-1, 1, 0, 1]]]


def test_suite_runs():
    assert "modular" in rcq.suite_names()
    rep = rcq.verify("modular", seed=3)
    assert rep["summary"]["status"] == "PASS"


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        rcq.star("{bad", X1X2)
    with pytest.raises(ValueError):
        rcq.verify("nosuch")
