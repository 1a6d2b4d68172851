import json

import pytest

from ctswap.core import InvalidInstanceError
from ctswap.io import instance_from_dict, instance_to_dict, load_instance, load_sequence

VALID = {"colors": 2, "vertices": 2, "edges": [[0, 1]], "f0": [1, 2], "ft": [2, 1], "budget": None}


def test_roundtrip(tmp_path):
    p = tmp_path / "i.json"
    p.write_text(json.dumps(VALID))
    inst = load_instance(p)
    assert inst.n == 2 and inst.c == 2 and inst.budget is None
    assert instance_to_dict(inst) == VALID


@pytest.mark.parametrize("patch, where", [
    ({"f0": [0, 2]}, r"f0\[0\]"),
    ({"ft": [2, 3]}, r"ft\[1\]"),
    ({"edges": [[0, 0]]}, "self-loop"),
    ({"edges": [[0, 1], [1, 0]]}, "duplicate"),
    ({"edges": [[0, 2]]}, "out of range"),
    ({"f0": [1]}, "f0: length"),
    ({"budget": -1}, "budget"),
    ({"vertices": "2"}, "vertices"),
])
def test_rejects(patch, where):
    with pytest.raises(InvalidInstanceError, match=where):
        instance_from_dict({**VALID, **patch})


def test_missing_field():
    data = dict(VALID)
    del data["ft"]
    with pytest.raises(InvalidInstanceError, match="ft: missing"):
        instance_from_dict(data)


def test_malformed_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{not json")
    with pytest.raises(InvalidInstanceError, match="malformed"):
        load_instance(p)


def test_sequence_file(tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps({"swaps": [[1, 0], [1, 2]]}))
    assert load_sequence(p) == ((0, 1), (1, 2))
    p.write_text(json.dumps({"swaps": [[1]]}))
    with pytest.raises(InvalidInstanceError, match=r"swaps\[0\]"):
        load_sequence(p)
