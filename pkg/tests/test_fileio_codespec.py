import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from groupring_ldpc import fileio
from groupring_ldpc.codespec import CodeSpec, SpecError, theorem2_members
from groupring_ldpc.fixtures import FIXTURES, get


@settings(max_examples=40)
@given(st.tuples(st.integers(1, 9), st.integers(1, 15)).flatmap(
    lambda s: arrays(np.uint8, s, elements=st.integers(0, 1))))
def test_alist_round_trip(H):
    assert (fileio.read_alist(fileio.write_alist(H)) == H).all()


def test_alist_layout():
    H = np.array([[1, 1, 0], [0, 1, 1]], np.uint8)
    lines = fileio.write_alist(H).splitlines()
    assert lines[:4] == ["3 2", "2 2", "1 2 1", "2 2"]
    assert lines[4:] == ["1 0", "1 2", "2 0", "1 2", "2 3"]


def test_alist_file_and_bad_input(tmp_path):
    H = np.eye(3, dtype=np.uint8)
    p = tmp_path / "h.alist"
    fileio.write_alist(H, p)
    assert (fileio.read_alist(str(p)) == H).all()
    bad = fileio.write_alist(H).replace("1 1 1\n1 1 1", "1 1 1\n1 1 2", 1)
    with pytest.raises(ValueError):
        fileio.read_alist(bad)


def test_bit_packing_is_lsb_first():
    assert fileio.pack_bits([1, 0, 0, 0, 0, 0, 0, 0, 0, 1]) == b"\x01\x02"
    assert fileio.unpack_bits(b"\x80", 8).tolist() == [0] * 7 + [1]


def test_words_pad_the_tail(tmp_path):
    p = tmp_path / "m.bin"
    p.write_bytes(bytes([0xFF, 0x21]))
    W = fileio.read_words(str(p), 6)
    assert W.shape == (3, 6)
    assert W[1].tolist() == [1, 1, 1, 0, 0, 0] and W[2].tolist() == [0, 1, 0, 0, 0, 0]
    p.write_bytes(bytes([0xFF, 0x01]))
    W = fileio.read_words(str(p), 6)
    assert W.shape == (2, 6)  # the last 4 zero bits are byte padding


def test_words_round_trip_with_byte_padding(tmp_path):
    p = tmp_path / "m.bin"
    words = np.random.default_rng(3).integers(0, 2, (3, 13), dtype=np.uint8)
    fileio.write_words(str(p), words)
    assert (fileio.read_words(str(p), 13) == words).all()


def test_theorem2_members():
    assert theorem2_members(8) == [(1,), (2,), (4,), (8,), (16,), (32,), (64,), (128,)]


def test_spec_round_trip():
    s = get("c5").code_spec()
    t = CodeSpec.from_json(s.to_json(with_derived=True))
    assert t.to_dict() == s.to_dict()
    assert (t.H == s.H).all()


def test_spec_alist_round_trip():
    s = get("c1").code_spec()
    assert (fileio.read_alist(fileio.write_alist(s.H)) == s.H).all()


def test_derived_fields_are_recomputed():
    d = get("c5").code_spec().to_dict(with_derived=True)
    d["derived"]["dimension"] = 1
    s = CodeSpec.from_dict(d)
    assert s.derived()["dimension"] == 1273


@pytest.mark.parametrize("patch,msg", [
    ({"colour": "red"}, "unknown"),
    ({"schema_version": 2}, "schema_version"),
    ({"construction": "magic"}, "construction"),
    ({"group": {"kind": "nope"}}, "kind"),
])
def test_spec_validation(patch, msg):
    d = dict(get("c1").spec, schema_version=1)
    d.update(patch)
    with pytest.raises(SpecError, match=msg):
        CodeSpec.from_dict(d)


def test_spec_field_combinations():
    base = {"schema_version": 1, "group": {"kind": "cyclic", "n": 3}}
    with pytest.raises(SpecError):
        CodeSpec.from_dict(dict(base, construction="s2set"))
    with pytest.raises(SpecError):
        CodeSpec.from_dict(dict(base, construction="theorem2", moduli=[7]))
    with pytest.raises(SpecError):
        CodeSpec.from_dict(dict(base, construction="s2set", p=2, s2_set=[[0]], moduli=[7]))
    with pytest.raises(SpecError):
        CodeSpec.from_json("{not json")


def test_fixture_registry():
    assert {"c1", "c2", "c3", "c4", "c5", "z8_h38", "d8_h38", "q8_h38", "z2x4_h36"} <= set(FIXTURES)
    for f in FIXTURES.values():
        assert f.source
        json.dumps(f.code_spec().to_dict())
    with pytest.raises(KeyError):
        get("c99")


@pytest.mark.parametrize("name", [n for n in FIXTURES if n not in ("c1", "c3", "z8_h38")])
def test_fixture_parameters(name):
    f = get(name)
    d = f.code_spec().derived()
    assert d["length"] == f.length
    if f.dimension is not None:
        assert d["dimension"] == f.dimension
    else:
        assert d["dimension"] >= d["length"] // 2
