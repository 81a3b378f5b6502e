"""Path realizations built directly on semi-infinite tensor strings.

A path on ``lam`` is a sequence ``... (x) p_2 (x) p_1 (x) p_0`` that agrees
with the ground element ``(a,a)`` (or ``(0,0)`` for infinity) far to the left.
Only the finite prefix is stored, ``entries[0]`` being the rightmost factor.
Operators evaluate the tensor rule on the prefix padded with a few ground
copies and a head element standing in for the rest of the tail.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass

from .adjoint import AdjointElem, LambdaSpec, LimitElem
from .crystal import (
    DEFAULT_NODE_CAP,
    AffineCrystal,
    AffineElem,
    Crystal,
    CrystalGraph,
    component,
    e_site,
    f_site,
    tensor_eps,
    tensor_phi,
)
from .energy import H_affine
from .weights import Weight, pair

DEFAULT_MARGIN = 2
MAX_MARGIN = 64


class PathConditionError(ValueError):
    """A generated sequence fails the affine path conditions."""


class _Head(Crystal):
    """Everything left of the padded prefix, collapsed into one element.

    It behaves like a highest weight element of weight ``lam``: ``eps = 0``,
    ``phi_i = <h_i, lam>``, and both operators vanish on it.
    """

    def __init__(self, lam: LambdaSpec):
        self.lam = lam

    def wt(self, b):
        return self.lam.weight

    def e(self, i, b):
        return None

    def f(self, i, b):
        return None

    def eps(self, i, b):
        return 0

    def phi(self, i, b):
        return pair(i, self.lam.weight)

    def key(self, b):
        return "head"


HEAD = object()


def tail_element(lam: LambdaSpec, affine: bool = True):
    g = lam.ground_element()
    return AffineElem(g, 0) if affine else g


def padded_string(lam: LambdaSpec, entries: list, margin: int, affine: bool = True) -> tuple[list, list]:
    """Elements and factor crystals of ``head (x) tail^margin (x) entries``.

    ``entries`` run left to right, i.e. deepest first.
    """
    base = lam.crystal()
    factor = AffineCrystal(base) if affine else base
    elems = [HEAD] + [tail_element(lam, affine)] * margin + list(entries)
    crystals = [_Head(lam)] + [factor] * (margin + len(entries))
    return elems, crystals


def act_on_string(lam: LambdaSpec, entries: list, i: int, raising: bool, margin: int = DEFAULT_MARGIN, affine: bool = True):
    """Apply ``e_i``/``f_i`` to the semi-infinite string ending in ``entries``.

    The padding is doubled until the action site is not next to the head.
    Returns the new padded entries (head removed) or ``None``.
    """
    while True:
        elems, crystals = padded_string(lam, entries, margin, affine)
        site = (e_site if raising else f_site)(i, elems, crystals)
        if site == 0:
            return None
        if site > 1 or margin >= MAX_MARGIN:
            break
        margin *= 2
    new = (crystals[site].e if raising else crystals[site].f)(i, elems[site])
    if new is None:
        return None
    out = elems[1:]
    out[site - 1] = new
    return out


def string_stats(lam: LambdaSpec, entries: list, i: int, affine: bool = True) -> tuple[int, int]:
    elems, crystals = padded_string(lam, entries, DEFAULT_MARGIN, affine)
    return tensor_eps(i, elems, crystals), tensor_phi(i, elems, crystals)


# -- paths -------------------------------------------------------------------


def _entry_text(u) -> str:
    return str(u)


@dataclass(frozen=True)
class Path:
    """``entries[0]`` is the rightmost factor; the tail is trimmed."""

    lam: LambdaSpec
    entries: tuple = ()
    affine: bool = True

    def __post_init__(self):
        ent = tuple(self.entries)
        tail = tail_element(self.lam, self.affine)
        while ent and ent[-1] == tail:
            ent = ent[:-1]
        object.__setattr__(self, "entries", ent)

    def entry(self, k: int):
        return self.entries[k] if k < len(self.entries) else tail_element(self.lam, self.affine)

    def key(self) -> str:
        if not self.entries:
            return "ground"
        return " (x) ".join(_entry_text(u) for u in reversed(self.entries))

    def __str__(self) -> str:
        return self.key()

    def deep_first(self) -> list:
        return list(reversed(self.entries))

    def forget_grades(self) -> Path:
        if not self.affine:
            return self
        return Path(self.lam, tuple(u.b for u in self.entries), affine=False)

    def to_json(self) -> dict:
        out = []
        for u in self.entries:
            b, m = (u.b, u.m) if self.affine else (u, 0)
            out.append({"x": b.x, "y": b.y, "m": m})
        return {"lambda": self.lam.to_json(), "entries": out}

    @classmethod
    def from_json(cls, data: dict) -> Path:
        lam = LambdaSpec.from_json(data["lambda"])
        ent = []
        for e in data["entries"]:
            b = LimitElem(e["x"], e["y"]) if lam.is_infinite else AdjointElem(e["x"], e["y"], lam.l)
            ent.append(AffineElem(b, int(e["m"])))
        return cls(lam, tuple(ent))

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def ground_path(lam: LambdaSpec, affine: bool = True) -> Path:
    return Path(lam, (), affine)


def path_violations(p: Path) -> list[str]:
    """Problems with the affine path conditions; empty when ``p`` is a valid path."""
    if not p.affine:
        return []
    bad = []
    for k, u in enumerate(p.entries):
        if u.m > 0:
            bad.append(f"entry {k} has positive grade {u.m}")
    for k in range(len(p.entries)):
        v = H_affine(p.entry(k + 1), p.entry(k))
        if v != 0:
            bad.append(f"H(p_{k + 1} (x) p_{k}) = {v}")
    return bad


def _from_padded(lam: LambdaSpec, padded: list, affine: bool) -> Path:
    p = Path(lam, tuple(reversed(padded)), affine)
    bad = path_violations(p)
    if bad:
        raise PathConditionError(f"{p}: {'; '.join(bad)}")
    return p


def path_f(i: int, p: Path, margin: int = DEFAULT_MARGIN) -> Path | None:
    out = act_on_string(p.lam, p.deep_first(), i, False, margin, p.affine)
    return None if out is None else _from_padded(p.lam, out, p.affine)


def path_e(i: int, p: Path, margin: int = DEFAULT_MARGIN) -> Path | None:
    out = act_on_string(p.lam, p.deep_first(), i, True, margin, p.affine)
    return None if out is None else _from_padded(p.lam, out, p.affine)


def path_eps(i: int, p: Path) -> int:
    return string_stats(p.lam, p.deep_first(), i, p.affine)[0]


def path_phi(i: int, p: Path) -> int:
    return string_stats(p.lam, p.deep_first(), i, p.affine)[1]


def path_wt(p: Path) -> Weight:
    """``lam`` plus the weight change of each entry relative to the tail."""
    base = p.lam.crystal()
    crys = AffineCrystal(base) if p.affine else base
    tail = tail_element(p.lam, p.affine)
    w = p.lam.weight
    t = crys.wt(tail)
    for u in p.entries:
        d = crys.wt(u) - t
        w = w + (d if isinstance(d, Weight) else Weight(d.c0, d.c1, 0))
    return w


class PathCrystal(Crystal):
    def __init__(self, lam: LambdaSpec, margin: int = DEFAULT_MARGIN, affine: bool = True):
        self.lam = lam
        self.margin = margin
        self.affine = affine

    def __reduce__(self):
        return (PathCrystal, (self.lam, self.margin, self.affine))

    def wt(self, p):
        w = path_wt(p)
        return w if self.affine else w.cl()

    def e(self, i, p):
        return path_e(i, p, self.margin)

    def f(self, i, p):
        return path_f(i, p, self.margin)

    def eps(self, i, p):
        return path_eps(i, p)

    def phi(self, i, p):
        return path_phi(i, p)

    def key(self, p):
        return p.key()

    def contains(self, p):
        return isinstance(p, Path) and p.lam == self.lam and p.affine == self.affine


def path_component(
    lam: LambdaSpec,
    depth: int,
    directions: str = "down",
    margin: int = DEFAULT_MARGIN,
    cap: int = DEFAULT_NODE_CAP,
    jobs: int = 1,
    affine: bool = True,
) -> CrystalGraph:
    g = component(PathCrystal(lam, margin, affine), ground_path(lam, affine), depth, directions, cap, jobs)
    for key, p in g.nodes.items():
        bad = path_violations(p)
        if bad:
            raise PathConditionError(f"{key}: {'; '.join(bad)}")
    return g


def multiplicity_table(lam: LambdaSpec, depth: int, cap: int = DEFAULT_NODE_CAP, jobs: int = 1) -> Counter:
    return path_component(lam, depth, cap=cap, jobs=jobs).multiplicities()


__all__ = [
    "Path",
    "PathCrystal",
    "PathConditionError",
    "ground_path",
    "path_f",
    "path_e",
    "path_eps",
    "path_phi",
    "path_wt",
    "path_violations",
    "path_component",
    "multiplicity_table",
    "act_on_string",
    "string_stats",
    "padded_string",
]
