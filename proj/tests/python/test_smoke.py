import json
import os
import pathlib

import pytest

import ivifedas as iv

DATA = pathlib.Path(os.environ.get("IVIF_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))
GROUP = str(DATA / "case_study_group.json")


def test_ivifn_algebra():
    x = iv.Ivifn(0.5, 0.6, 0.25, 0.3)
    assert iv.complement(iv.complement(x)) == x
    assert iv.compare(x, x) == "equal"
    h = iv.hesitancy(x)
    assert h == pytest.approx((0.10, 0.25))
    assert iv.dist_hybrid(iv.Ivifn(1, 1, 0, 0), iv.Ivifn(0, 0, 1, 1)) == pytest.approx(1.5)


def test_invalid_ivifn_is_rejected():
    with pytest.raises(ValueError):
        iv.Ivifn(0.6, 0.5, 0.1, 0.2)
    with pytest.raises(iv.IvifError):
        iv.Ivifn(0.5, 0.7, 0.2, 0.4)


def test_aggregation_and_cpt_weight():
    cells = [iv.Ivifn(.5, .6, .25, .3), iv.Ivifn(.6, .7, .15, .2), iv.Ivifn(.5, .6, .25, .3),
             iv.Ivifn(.6, .7, .15, .2), iv.Ivifn(.7, .8, .05, .1)]
    agg = iv.ivifwa(cells, [0.29, 0.17, 0.19, 0.15, 0.20])
    assert agg.bounds() == pytest.approx((0.580, 0.682, 0.154, 0.212), abs=0.002)
    assert iv.cpt_weight(0.28, "gain") == pytest.approx(0.308, abs=5e-4)
    assert iv.cpt_weight(0.28, "loss") == pytest.approx(0.314, abs=5e-4)
    with pytest.raises(ValueError):
        iv.cpt_weight(0.28, "sideways")


def test_edas_on_identical_rows_gives_half():
    row = [iv.Ivifn(0.3, 0.4, 0.2, 0.3), iv.Ivifn(0.5, 0.6, 0.1, 0.2)]
    out = iv.edas([row, row, row], [0.5, 0.5])
    assert out["scores"] == [0.5, 0.5, 0.5]
    assert out["ranking"] == [0, 1, 2]


def test_run_case_study():
    report = iv.run(GROUP, emit_intermediates=True)
    assert report["format"] == "ivif-report/1"
    assert report["ranking"] == ["HL2", "HL5", "HL1", "HL3", "HL4"]
    scores = [row[-1] for row in report["tables"]["scores"]["values"]]
    assert scores == pytest.approx([0.224, 0.987, 0.079, 0.029, 0.429], abs=0.01)
    assert "pda" in report["tables"]


def test_run_accepts_json_text_and_method_override():
    text = pathlib.Path(GROUP).read_text()
    report = iv.run(text, method="topsis")
    assert report["method"] == "topsis"
    assert report["metadata"]["topsis_form"] == "single_weighting"
    assert report["ranking"][:2] == ["HL2", "HL5"]


def test_sweep_and_validate():
    doc = iv.sweep(GROUP, "rho", [1.55, 10.0])
    assert doc["format"] == "ivif-sweep/1"
    first, last = doc["rows"]
    assert first["scores"] == pytest.approx(last["scores"], abs=1e-12)
    assert iv.validate(str(DATA / "case_study_linguistic.json")) == (5, 6, 5)
    with pytest.raises(iv.IvifError):
        iv.sweep(GROUP, "alpha", [1.5])
    with pytest.raises(iv.IvifError):
        iv.run(json.dumps({"format": "ivif-problem/1"}))
