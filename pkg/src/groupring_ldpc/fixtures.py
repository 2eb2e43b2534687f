"""Named code presets with their published (length, dimension)."""
from __future__ import annotations

from dataclasses import dataclass

from .codespec import CodeSpec

Z2_4_SET = [[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0], [1, 1, 1, 1]]


@dataclass(frozen=True)
class Fixture:
    name: str
    spec: dict
    length: int
    dimension: int | None  # ours; None when only the length is printed
    source: str  # the published sentence the numbers come from
    published_dimension: int | None = None  # set when the printed value is not reproducible

    def code_spec(self):
        return CodeSpec.from_dict(dict(self.spec, schema_version=1, name=self.name))


def _t2(n, rho, gamma, kind="cyclic", **kw):
    g = {"kind": kind} if kind == "quaternion" else {"kind": kind, "n": n}
    return dict({"construction": "theorem2", "group": g, "rho": rho, "gamma": gamma}, **kw)


def _ext(n, rho, gamma=None, cols=None):
    return {"construction": "s2set_extended", "group": {"kind": "cyclic", "n": n}, "p": 2,
            "rho": rho, "gamma": gamma, "cols": cols}


_Z13 = [(6, 6, 4), (6, 6, 1), (6, 4, 4), (6, 7, 4), (6, 1, 3), (8, 6, 4), (8, 4, 2), (7, 6, 1),
        (7, 7, 2), (4, 4, 3), (2, 3, 3), (3, 8, 4), (1, 1, 1)]
_Z4_4 = [(3, 4, 1, 4), (3, 4, 1, 3), (3, 4, 2, 4), (3, 4, 4, 1), (3, 3, 1, 4), (3, 1, 2, 1),
         (1, 3, 1, 3), (1, 1, 4, 4), (4, 4, 1, 4), (4, 3, 2, 4), (4, 1, 1, 2), (4, 2, 3, 1),
         (2, 4, 4, 2), (2, 3, 3, 3), (2, 1, 2, 3), (2, 2, 4, 1)]


def _zero_based(D, moduli):
    return [[(x - 1) % m for x, m in zip(d, moduli)] for d in D]


FIXTURES = {f.name: f for f in [
    Fixture("c1", _t2(8, 4, 8), 2040, 1031,
            "C1: null space of H(4,8) from the field construction with G = Z8, a (2040,1031) code"),
    Fixture("c2", _ext(8, 4, cols=list(range(10))), 2550, 1537,
            "C2: [H(4,8) | -H(4,2)] with G = Z8, printed as a (2550,1297) code",
            published_dimension=1297),
    Fixture("c3", _t2(9, 3, 6), 3066, 1538,
            "H(3,6) with G = Z9 gives a (3066,1538) code with rate 0.501"),
    Fixture("c4", _ext(8, 3, 16), 4080, 3319,
            "C4: [H(3,8) | -H(3,8)] with G = Z8, length 4080, dimension 3319"),
    Fixture("c5", _ext(7, 4, 14), 1778, 1273,
            "C5: [H(4,7) | -H(4,7)] with G = Z7, a (1778,1273) code"),
    Fixture("z8_h38", _t2(8, 3, 8), 2040, 1279,
            "H(3,8) with G = Z8 gives a (2040,1279) regular code"),
    Fixture("d8_h38", _t2(8, None, None, kind="dihedral", rows=[2, 4, 5]), 2040, 1279,
            "three rows of the D8 matrix give a (2040,1279) code"),
    Fixture("q8_h38", _t2(8, None, None, kind="quaternion", rows=[3, 4, 5]), 2040, 1277,
            "three rows of the Q8 matrix, printed as (2040,1279)", published_dimension=1279),
    Fixture("z4x4_h416", {"construction": "s2set", "group": {"kind": "cyclic", "n": 16},
                          "moduli": [4, 4, 4, 4], "s2_set": _zero_based(_Z4_4, (4, 4, 4, 4)),
                          "rho": 4, "gamma": 16}, 4096, 3075,
            "modified S2-set of size 16 in Z4^4, G = Z16, H(4,16): a (4096,3075) code"),
    Fixture("z884_h413", {"construction": "s2set", "group": {"kind": "cyclic", "n": 13},
                          "moduli": [8, 8, 4], "s2_set": _zero_based(_Z13, (8, 8, 4)),
                          "rho": 4, "gamma": 13}, 3328, 2307,
            "S2-set of size 13 in Z8xZ8xZ4, G = Z13, H(4,13): a (3328,2307) code"),
    Fixture("z4x4_ext_h432", {"construction": "s2set_extended", "group": {"kind": "cyclic", "n": 16},
                              "moduli": [4, 4, 4, 4], "s2_set": _zero_based(_Z4_4, (4, 4, 4, 4)),
                              "rho": 4, "gamma": 32}, 8192, 7171,
            "H(4,32) of the extended matrix from the Z4^4 set: length 8192, rate 0.87"),
    Fixture("z2x4_h36", {"construction": "s2set", "group": {"kind": "cyclic", "n": 6},
                    "moduli": [2, 2, 2, 2], "s2_set": Z2_4_SET, "rho": 3}, 96, 54,
            "three rows of the circulant RG-matrix over Z2^4 give length 96 and rate at least 1/2"),
]}


def get(name):
    try:
        return FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(FIXTURES)}") from None
