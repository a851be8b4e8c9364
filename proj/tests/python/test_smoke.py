import pytest

import cohcfg


def test_large_hollmann():
    x = cohcfg.build("hollmann-large", 8)
    assert (x.degree, x.rank) == (28, 4)
    assert cohcfg.pseudocyclic(x) == (True, 9)
    assert cohcfg.indistinguishing_number(x) == 8
    assert cohcfg.automorphism_order(x) == 504


def test_extension_fibers():
    x = cohcfg.extend(cohcfg.build("hollmann-large", 8), [0])
    assert sorted(len(f) for f in x.fibers) == [1, 9, 9, 9]
    assert cohcfg.automorphism_order(x) == 18


def test_text_round_trip():
    x = cohcfg.build("passman", 5)
    y = cohcfg.from_text(x.to_text())
    assert x == y
    assert y.rows() == x.rows()


def test_closure_of_pentagon():
    n = 5
    rows = [[0 if i == j else (1 if (i - j) % n in (1, n - 1) else 2) for j in range(n)] for i in range(n)]
    x = cohcfg.closure(rows)
    assert x.rank == 3
    assert cohcfg.validate(x)["passed"]


def test_passman_two_point_extension():
    x = cohcfg.build("passman", 5)
    assert cohcfg.partly_regular(x) == []
    assert len(cohcfg.partly_regular(cohcfg.extend(x, [0, 6]))) > 0


def test_verify_ledger():
    r = cohcfg.verify("310520d", "q=5")
    assert r["passed"]
    assert r["ledger"].startswith("CLAIM 310520d q=5 PASS")
    bad = cohcfg.verify("4151533a", "d=3")
    assert not bad["passed"] and bad["failures"]
    assert "030620i" in cohcfg.claims()


def test_matching_graph():
    g = cohcfg.matching_graph(5)
    assert g["connected"] and len(g["vertices"]) == 15


def test_base_number():
    assert cohcfg.base_number(cohcfg.build("hollmann-large", 8), exact=True) == 3


def test_errors():
    with pytest.raises(ValueError):
        cohcfg.build("passman", 4)
    with pytest.raises(RuntimeError):
        cohcfg.from_text("nope")
    with pytest.raises(RuntimeError):
        cohcfg.Configuration([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        cohcfg.Configuration([[0, 1]])
