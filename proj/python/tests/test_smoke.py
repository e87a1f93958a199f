import pytest

import hcyl


def test_magnus_commutator():
    s = hcyl.magnus("[g1,g2]", 2, 2)
    assert s["rank"] == 2
    terms = {tuple(t["mono"]): t["coeff"] for t in s["terms"]}
    assert terms == {(): "1", (1, 2): "1", (2, 1): "-1"}
    assert hcyl.lcs_weight("[[g1,g2],g1]", 2, 4) == 3


def test_dimensions():
    assert [hcyl.dim_lie(2, n) for n in range(1, 6)] == [2, 1, 2, 3, 6]
    assert hcyl.lyndon_basis(2, 3) == ["[g1,[g1,g2]]", "[[g1,g2],g2]"]
    assert len(hcyl.dn_basis(4, 1)) == 10
    assert hcyl.tree_dimension(1, 4) == 4


def test_tripod_image_is_in_kernel():
    t = hcyl.psi("Y(x1,x2,y2)", 4)
    assert t["in_D"]
    assert len(t["tensor"]) == 3


def test_hain_bracket_vanishes():
    assert hcyl.bracket("Y(x1,x2,y2)", "Y(x3,x4,y4)", 4)["terms"] == []
    assert len(hcyl.star("Y(x1,x2,y2)", "Y(y1,x2,y2)", 2)["terms"]) == 4


def test_johnson_and_realize():
    assert hcyl.johnson(["x1", "y1"], 2)["tensor"] == []
    h = hcyl.realize("g1(x)[[g1,g2],g2] + g2(x)[g1,[g1,g2]]", 2)
    assert h["round_trip"]


def test_massey_and_errors():
    assert hcyl.massey([1, 2], "[g1,g2]", 2) == 1
    assert hcyl.massey([2, 1], "[g1,g2]", 2) == -1
    with pytest.raises(hcyl.Error, match="weight_mismatch"):
        hcyl.massey([1], "[g1,g2]", 2)
    with pytest.raises(hcyl.Error, match="syntax"):
        hcyl.magnus("[g1,", 2)


def test_suite_report():
    assert "hain" in hcyl.suites()
    r = hcyl.run_suite("hain", seed=3)
    assert r["status"] == "pass"
