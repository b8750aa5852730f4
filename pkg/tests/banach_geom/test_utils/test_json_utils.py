import math

import numpy as np
from banach_geom.models.enums.verdict_status_enum import VerdictStatusEnum
from banach_geom.models.reports.verdict import Verdict
from banach_geom.utils.json_utils import canonical_json, load_json, to_jsonable, write_json


def test_to_jsonable_numpy_and_specials():
    data = {"a": np.array([1.0, 2.0]), "b": np.int64(3), "c": math.inf, "d": VerdictStatusEnum.FAILS}
    assert to_jsonable(data) == {"a": [1.0, 2.0], "b": 3, "c": "inf", "d": "fails"}


def test_to_jsonable_models():
    verdict = Verdict(property="rotund", status="holds-exact")
    assert to_jsonable(verdict)["property"] == "rotund"


def test_canonical_json_sorted_and_newline_terminated():
    text = canonical_json({"b": 1, "a": 2})
    assert text.endswith("\n")
    assert text.index('"a"') < text.index('"b"')


def test_write_then_load(tmp_path):
    path = tmp_path / "report.json"
    write_json(path, {"x": [1.0, 2.0]})
    assert load_json(path) == {"x": [1.0, 2.0]}
    assert path.read_text(encoding="utf-8") == canonical_json({"x": [1.0, 2.0]})
