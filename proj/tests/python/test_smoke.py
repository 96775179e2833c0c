"""Smoke tests for the Python bindings."""

import pytest

import flagrig_py as fr


DESK = dict(m=5, n=5, k=[5, 4, 2], l=[5, 4, 2])
GR44 = dict(m=4, n=4, k=[4, 2], l=[4, 2])
GR2211 = dict(m=2, n=2, k=[2, 1], l=[2, 1])


def test_validate():
    v = fr.validate(**DESK)
    assert v["generic"] is True
    assert v["admissible"] is True
    bad = fr.validate(**GR2211)
    assert bad["admissible"] is False


def test_classify_weight_dominant_and_singular():
    t = fr.classify_weight(2, 0, [2, 1], [0, 0], mu=[1, 0], la=[])
    assert t["degrees"][0]["total"] == "2"
    singular = fr.classify_weight(2, 0, [2, 1], [0, 0], mu=[0, 1], la=[])
    assert all(d["total"] == "0" for d in singular["degrees"])


def test_cohomology_family():
    env = fr.cohomology(sheaf="T", p=2, **GR44)
    h1 = env["payload"]["h1"]
    assert h1 == {"lo": "1", "hi": "1", "exact": True}
    assert env["schema_version"] == 1


def test_rigidity_verdicts():
    env = fr.rigidity(**DESK)
    payload = env["payload"]
    assert payload["verdict"] == "Rigid"
    assert payload["h1_T"]["exact"] is True
    assert payload["h1_T"]["lo"] == "0"
    assert env["assumption_log"]

    small = fr.rigidity(allow_nonadmissible=True, **GR2211)
    assert small["payload"]["verdict"] == "OutsideHypotheses"


def test_oracle():
    env = fr.oracle_cocycle(**DESK)
    d = env["payload"]
    assert (d["z1"], d["b1"], d["h1"]) == ("0", "0", "0")


def test_errors():
    with pytest.raises(ValueError):
        fr.cohomology(sheaf="X", **DESK)
    with pytest.raises(fr.FlagrigError):
        fr.oracle_cocycle(**GR2211)
    with pytest.raises(ValueError):
        fr.validate(3, 3, [2, 1], [3, 1])
