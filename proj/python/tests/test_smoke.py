import json

import pytest

import momentlab as ml


def test_path_counts():
    assert [ml.count_paths(n) for n in range(9)] == [1, 1, 2, 4, 9, 21, 51, 127, 323]
    assert [ml.count_paths(n, "lukasiewicz") for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    assert ml.enumerate_paths(2, irreducible=True) == [[0, 1, 0]]
    assert ml.factorize([0, 1, 0, 0, 1, 1, 0]) == [[0, 1, 0], [0, 0], [0, 1, 1, 0]]
    assert ml.valuate([0, 1, 2, 0], "lukas-free") == "c_3"


def test_transforms():
    semi = ml.catalog("semicircle", 8)
    assert semi == ["1", "0", "1", "0", "2", "0", "5", "0", "14"]
    assert ml.cumulants_from_moments(semi, "free") == ["0", "1"] + ["0"] * 6
    gauss = ml.catalog("gaussian-hermite", 6)
    assert ml.cumulants_from_moments(gauss, "classical") == ["0", "1", "0", "0", "0", "0"]
    mu = ["1", "1/2", "-3", "7/5"]
    for kind in ("free", "classical", "boolean"):
        assert ml.moments_from_cumulants(ml.cumulants_from_moments(mu, kind), kind) == mu


def test_jacobi():
    a, lam = ml.jacobi_from_moments(ml.catalog("gaussian-hermite", 8))
    assert a == ["0"] * 4
    assert lam == ["1", "2", "3"]
    assert ml.moments_from_jacobi(["a_0", "a_1"], ["lambda_1"], 3)[3] == ml.normalize(
        "a_0^3 + 2*a_0*lambda_1 + a_1*lambda_1"
    )
    assert ml.orthopolys(["0"] * 4, ["1", "2", "3"], 3)[3] == "x^3 - 3*x"


def test_identities():
    assert ml.free_cumulant_motzkin(3) == ml.normalize("a_1*lambda_1 - a_0*lambda_1")
    det = ml.hankel_minor([0, 1, 2], [0, 1, 3], "det", "lukas-free")
    gv = ml.hankel_minor([0, 1, 2], [0, 1, 3], "gv", "lukas-free")
    assert det["value"] == gv["value"]
    assert gv["configurations"] == 19
    assert ml.hankel_minor([0, 1, 2, 3, 4], [0, 1, 2, 3, 4], "gv")["configurations"] == 1
    report = ml.verify(3)
    assert report["passed"]
    assert len(report["entries"]) == len(ml.identity_names())


def test_math_error():
    with pytest.raises(ml.MathError) as info:
        ml.jacobi_from_moments(ml.catalog("point-mass", 6, "2"))
    assert info.value.kind == "SingularHankel"
    assert info.value.index == 1


def test_cli_in_process():
    code, out, _ = ml.run_cli(["catalog", "semicircle", "--order", "4"])
    assert code == 0
    assert json.loads(out)["values"] == ["1", "0", "1", "0", "2"]
    code, out, _ = ml.run_cli(["transform", "--to", "free"], out)
    assert code == 0
    assert json.loads(out)["kind"] == "free"
