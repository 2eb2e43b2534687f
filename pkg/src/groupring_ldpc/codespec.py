"""JSON code specifications: everything needed to rebuild a parity-check matrix."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import construction as C
from . import gf2
from .groups import make_group

SCHEMA_VERSION = 1
CONSTRUCTIONS = ("theorem2", "s2set", "s2set_extended")
_FIELDS = {"schema_version", "name", "construction", "group", "p", "moduli", "s2_set",
           "rho", "gamma", "rows", "cols", "derived"}


class SpecError(ValueError):
    """Raised for malformed or inconsistent specs."""


def theorem2_members(n, p=2):
    """Exponents p^i mod (p^n - 1), i < n: the S2-set behind the field construction."""
    m = p ** n - 1
    return [(pow(p, i, m) if m > 1 else 0,) for i in range(n)]


@dataclass
class CodeSpec:
    construction: str
    group: dict
    p: int | None = None
    moduli: list | None = None
    s2_set: list | None = None
    rho: int | None = None
    gamma: int | None = None
    rows: list | None = None
    cols: list | None = None
    name: str = ""
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.construction not in CONSTRUCTIONS:
            raise SpecError(f"unknown construction {self.construction!r}")
        self.group_obj = make_group(self.group)
        self.group = self.group_obj.to_dict()
        if self.construction == "theorem2":
            if self.s2_set is not None or self.moduli is not None:
                raise SpecError("theorem2 takes p, not moduli/s2_set")
            self.p = 2 if self.p is None else int(self.p)
        elif self.s2_set is None:
            # extended field construction: [W | -W] with the p^i set
            if self.construction != "s2set_extended" or self.moduli is not None:
                raise SpecError("s2_set required")
            self.p = 2 if self.p is None else int(self.p)
        else:
            if self.p is not None:
                raise SpecError("give either p or s2_set, not both")
            if self.moduli is None:
                raise SpecError("moduli required with s2_set")
            self.moduli = [int(m) for m in self.moduli]
            self.s2_set = [[int(v) for v in d] for d in self.s2_set]

    def full_matrix(self):
        """Whole exponent matrix before taking the subarray."""
        if "W" not in self._cache:
            G = self.group_obj
            if self.construction == "theorem2":
                W = C.construct_theorem2(G, self.p)
            else:
                if self.s2_set is None:
                    D = theorem2_members(G.order, self.p)
                    moduli = (self.p ** G.order - 1,)
                else:
                    D, moduli = [tuple(d) for d in self.s2_set], tuple(self.moduli)
                build = C.construct_from_s2 if self.construction == "s2set" else C.construct_extended
                W = build(D, G, moduli)
            self._cache["W"] = W
        return self._cache["W"]

    def exponent_matrix(self):
        return C.subarray(self.full_matrix(), self.rho, self.gamma, self.rows, self.cols)

    def lifted(self):
        if "L" not in self._cache:
            self._cache["L"] = C.lift(self.exponent_matrix())
        return self._cache["L"]

    @property
    def H(self):
        return self.lifted().H

    def derived(self):
        """Recomputed parameters; never taken from a file."""
        if "derived" not in self._cache:
            W = self.exponent_matrix()
            L = self.lifted()
            r = gf2.rank(L.H)
            self._cache["derived"] = {"rho": W.shape[0], "n_blocks": W.shape[1], "b": W.b,
                                      "length": L.length, "rank": r, "dimension": L.length - r}
        return self._cache["derived"]

    def to_dict(self, with_derived=False):
        d = {"schema_version": SCHEMA_VERSION}
        if self.name:
            d["name"] = self.name
        d["construction"] = self.construction
        d["group"] = dict(self.group)
        for k in ("p", "moduli", "s2_set", "rho", "gamma", "rows", "cols"):
            v = getattr(self, k)
            if v is not None:
                d[k] = v
        if with_derived:
            d["derived"] = self.derived()
        return d

    def to_json(self, with_derived=False):
        return json.dumps(self.to_dict(with_derived), indent=2)

    @classmethod
    def from_dict(cls, d):
        if not isinstance(d, dict):
            raise SpecError("spec must be a JSON object")
        extra = set(d) - _FIELDS
        if extra:
            raise SpecError(f"unknown fields {sorted(extra)}")
        if d.get("schema_version") != SCHEMA_VERSION:
            raise SpecError(f"schema_version must be {SCHEMA_VERSION}")
        for k in ("construction", "group"):
            if k not in d:
                raise SpecError(f"missing field {k!r}")
        kw = {k: v for k, v in d.items() if k not in ("schema_version", "derived")}
        try:
            return cls(**kw)
        except SpecError:
            raise
        except (TypeError, ValueError, KeyError) as e:
            raise SpecError(str(e)) from e

    @classmethod
    def from_json(cls, text):
        try:
            d = json.loads(text)
        except json.JSONDecodeError as e:
            raise SpecError(f"bad JSON: {e}") from e
        return cls.from_dict(d)

    @classmethod
    def load(cls, path):
        with open(path) as f:
            return cls.from_json(f.read())

    def save(self, path, with_derived=True):
        with open(path, "w") as f:
            f.write(self.to_json(with_derived) + "\n")
