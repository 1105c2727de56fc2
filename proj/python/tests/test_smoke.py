import json

import pytest

import growthlab
from growthlab import _core


def test_field_extension():
    f = growthlab.Field("GF(8)")
    assert f.q == 8
    assert f.modulus == [1, 1, 0, 1]
    t = f.from_coeffs([0, 1, 0])
    t2 = f.from_coeffs([0, 0, 1])
    assert f.coeffs(f.mul(t, t2)) == [1, 1, 0]


def test_group_order():
    assert growthlab.group_order("SL(3,3)") == "5616"


def test_construct_run():
    records, code = growthlab.run("command = construct\nexamples = dense:n=3,q=3\n")
    assert code == 0
    assert records[0]["size1"] == 8
    assert records[0]["size3"] <= 344
    csv = growthlab.plot_data([json.dumps(r) for r in records], "growth-sweep")
    assert csv.splitlines()[0] == "n,q,size1,size3,bound"


def test_pargcd_verify():
    rep = growthlab.pargcd_verify("field = GF(5)\nparams = 1\nt^2 - z1\nt - 1\n")
    assert rep["ok"]
    assert rep["classes"] == 2


def test_errors_are_translated():
    with pytest.raises(growthlab.Error, match="ConfigError"):
        growthlab.parse_config("colour = blue\n")
    assert "pargcd" in _core.commands()
