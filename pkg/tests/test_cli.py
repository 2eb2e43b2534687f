import json

import numpy as np
import pytest

from groupring_ldpc import fileio
from groupring_ldpc.cli import _snr_range, main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_snr_range():
    assert _snr_range("1.0:0.5:2.0") == [1.0, 1.5, 2.0]
    assert _snr_range("1,3") == [1.0, 3.0]


def test_construct_writes_files(tmp_path, capsys):
    rc, out, _ = run(capsys, "--out-dir", str(tmp_path), "construct", "--fixture", "c5")
    assert rc == 0 and "dimension = 1273" in out
    H = fileio.read_alist(str(tmp_path / "H.alist"))
    assert H.shape == (508, 1778)
    spec = json.loads((tmp_path / "spec.json").read_text())
    assert spec["schema_version"] == 1 and spec["derived"]["dimension"] == 1273
    assert (tmp_path / "report.txt").exists()
    # the written spec builds the same matrix
    rc, out, _ = run(capsys, "check", "--code", str(tmp_path / "spec.json"))
    rep = json.loads(out)
    assert rc == 0 and rep["dimension"] == 1273 and rep["girth_at_least_6"] and rep["regular"]
    assert rep["b_at_least_n"] and rep["constraints"] == "pass"


def test_check_alist_with_four_cycle(tmp_path, capsys):
    p = tmp_path / "h.alist"
    fileio.write_alist(np.array([[1, 1, 0, 1], [1, 1, 1, 0]], np.uint8), p)
    rc, out, _ = run(capsys, "check", "--alist", str(p))
    assert rc == 2 and json.loads(out)["girth"] == 4


def test_search_s2(capsys):
    rc, out, _ = run(capsys, "search-s2", "--group", "2,2,2,2")
    d = json.loads(out)
    assert rc == 0 and d["size"] == 6 and d["certified"] and d["group"] == [2, 2, 2, 2]


@pytest.mark.parametrize("path", ["matrix", "groupring", "fast"])
def test_encode_paths(tmp_path, capsys, path):
    from groupring_ldpc.fixtures import get
    H = get("z2x4_h36").code_spec().H
    msg = tmp_path / "m.bin"
    msg.write_bytes(bytes(range(20)))
    out = tmp_path / f"c_{path}.bin"
    rc, _, _ = run(capsys, "encode", "--fixture", "z2x4_h36", "--in", str(msg), "--out", str(out), "--path", path)
    assert rc == 0
    cw = fileio.unpack_bits(out.read_bytes())
    n = H.shape[1]
    words = cw[: len(cw) // n * n].reshape(-1, n)
    assert len(words) == 3  # 160 bits over k = 54
    assert not ((words.astype(int) @ H.T) % 2).any()


def test_decode(tmp_path, capsys):
    from groupring_ldpc.fixtures import get
    n = get("z2x4_h36").code_spec().H.shape[1]
    llr = np.full((2, n), 6.0)
    llr[1, 5] = -6.0
    np.save(tmp_path / "llr.npy", llr)
    rc, out, _ = run(capsys, "decode", "--fixture", "z2x4_h36", "--in", str(tmp_path / "llr.npy"),
                     "--out", str(tmp_path / "d.bin"))
    assert rc == 0 and "2 converged" in out
    assert not fileio.unpack_bits((tmp_path / "d.bin").read_bytes()).any()


def test_simulate_csv_is_reproducible(tmp_path, capsys):
    args = ["simulate", "--fixture", "z2x4_h36", "--snr", "2:1:3", "--min-errors", "3",
            "--max-frames", "64", "--seed", "5"]
    rc, _, _ = run(capsys, *args, "--out", str(tmp_path / "a.csv"))
    rc2, _, _ = run(capsys, *args, "--out", str(tmp_path / "b.csv"))
    assert rc == rc2 == 0
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
    assert (tmp_path / "a.csv").read_text().startswith("ebn0_db,frames,bit_errors")


def test_fixtures_listing(capsys):
    rc, out, _ = run(capsys, "fixtures")
    assert rc == 0 and "c1" in out and "2040" in out


def test_exit_codes(tmp_path, capsys):
    rc, _, err = run(capsys, "check", "--code", str(tmp_path / "missing.json"))
    assert rc == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"schema_version": 1, "construction": "theorem2",
                               "group": {"kind": "cyclic", "n": 4}, "extra": 1}))
    rc, _, err = run(capsys, "construct", "--code", str(bad))
    assert rc == 2 and "unknown fields" in err
    rc, _, _ = run(capsys, "check")
    assert rc == 2
    llr = tmp_path / "llr.txt"
    llr.write_text("1 2 3\n")
    rc, _, _ = run(capsys, "decode", "--fixture", "z2x4_h36", "--in", str(llr), "--out", str(tmp_path / "o"))
    assert rc == 2
