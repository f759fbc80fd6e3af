import json
import logging

import pytest

from sbk.catalog import algebra, r_template
from sbk.cybe import schouten_square
from sbk.linsolve import cocycle_space
from sbk.serialize import (FormatError, algebra_from_dict, algebra_to_dict, catalog_to_dict,
                           cocycle_basis_to_dict, dumps, load_algebra, load_rmatrix,
                           rmatrix_from_dict, rmatrix_to_dict, tensor3_to_list)
from sbk.superkernel import verify_lie_superalgebra

SL2 = {"name": "sl2",
       "generators": [{"name": "H", "parity": 0}, {"name": "E", "parity": 0},
                      {"name": "F", "parity": 0}],
       "brackets": [{"left": "H", "right": "E", "result": {"E": "2"}},
                    {"left": "H", "right": "F", "result": {"F": "-2"}},
                    {"left": "E", "right": "F", "result": {"H": "1"}}],
       "mirror": True}


def test_round_trip_builtin(osp22, tmp_path):
    path = tmp_path / "osp22.json"
    path.write_text(dumps(algebra_to_dict(osp22)))
    loaded = load_algebra(path)
    assert loaded.c == osp22.c and loaded.parities == osp22.parities


def test_sl2_from_file():
    alg = algebra_from_dict(SL2)
    assert verify_lie_superalgebra(alg).ok
    assert alg.c[2][1][0] == -1


def test_unmirrored_file_rejected_naming_triple():
    data = dict(SL2, mirror=False)
    with pytest.raises(FormatError, match=r"antisymmetry .*\(H, E, E\)"):
        algebra_from_dict(data)


def test_parity_violation_rejected():
    data = {"name": "bad", "generators": [{"name": "a", "parity": 0}, {"name": "q", "parity": 1}],
            "brackets": [{"left": "a", "right": "a", "result": {"q": "1"}}]}
    with pytest.raises(FormatError, match=r"parity violation in \[a,a\] -> q"):
        algebra_from_dict(data)


def test_malformed_files(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(FormatError):
        load_algebra(bad)
    with pytest.raises(FormatError):
        algebra_from_dict({"generators": []})
    with pytest.raises(FormatError):
        algebra_from_dict({"name": "x", "generators": [{"name": "a"}]})


def test_rmatrix_round_trip(tmp_path, osp22):
    r = r_template("e1").evaluate(x=2, y="1/3")
    path = tmp_path / "r.json"
    path.write_text(dumps(rmatrix_to_dict(r)))
    assert load_rmatrix(path) == r


def test_rmatrix_loader_projects_and_warns(caplog):
    data = {"algebra": "osp22", "entries": [{"row": "H", "col": "X+", "value": "2"},
                                            {"row": "H", "col": "V+", "value": "5"}]}
    with caplog.at_level(logging.WARNING):
        r = rmatrix_from_dict(data)
    assert "projected" in caplog.text
    assert r.entries == ((0, 1, 1), (1, 0, -1))


def test_rmatrix_inline_algebra():
    data = {"algebra": SL2, "entries": [{"row": 0, "col": 1, "value": "1"},
                                        {"row": 1, "col": 0, "value": "-1"}]}
    r = rmatrix_from_dict(data)
    assert r.alg.name == "sl2"


def test_rmatrix_unknown_algebra():
    with pytest.raises(FormatError):
        rmatrix_from_dict({"algebra": "nope", "entries": []})


def test_exports_are_json(osp12):
    space = cocycle_space(osp12)
    d = cocycle_basis_to_dict(osp12, space)
    assert d["dimension"] == 9 and len(d["basis"]) == 9
    T = schouten_square(algebra("osp22"), r_template("h1").evaluate(x=1, y=0))
    rows = tensor3_to_list(T)
    assert rows and set(rows[0]) == {"i", "j", "k", "value"}
    cat = json.loads(dumps(catalog_to_dict()))
    assert {"algebras", "templates", "printed_forms", "witnesses"} <= set(cat)
    assert any(t["id"] == "case22" for t in cat["templates"])
