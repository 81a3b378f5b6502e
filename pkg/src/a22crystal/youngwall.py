"""Young walls for the adjoint crystal and for ``B(infinity)``.

A column is recorded by ``<s, sbar, tbar>``: ``s`` counts 0-blocks above the
ground-state line, ``sbar``/``tbar`` count 0-/1-blocks relative to the
topmost basic level-``l`` ground column inside it (signed in the infinity
context).  The number of 1-blocks above the ground line is derived as
``t = tbar + s - sbar``.

Columns are in bijection with graded adjoint elements ``(x, y)(-s)`` via
``psi``/``phi_inv``, and the column operators are defined by transporting the
adjoint crystal operators through that bijection.  Walls list their columns
from the rightmost one, ``C_0``, leftwards; everything past the stored list is
the basic ground-state column.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .adjoint import AdjointElem, LambdaSpec, LimitElem, INFINITY
from .crystal import AffineElem, Crystal, affinize_e, affinize_f
from . import kernels
from .paths import act_on_string, string_stats
from .weights import ALPHA0, ALPHA1, Weight


class WallConditionError(ValueError):
    """An operator produced a sequence of columns that is not a Young wall."""

    def __init__(self, message: str, columns=None):
        super().__init__(message)
        self.columns = columns


# -- columns -----------------------------------------------------------------


def column_valid(s: int, sbar: int, tbar: int, l: int | None) -> bool:
    """Whether ``<s, sbar, tbar>`` is a normalized column of the given context."""
    if s < 0 or tbar % 2:
        return False
    t = tbar + s - sbar
    if t < 0 or t % 2:
        return False
    if l is None:
        return True
    if sbar >= tbar:
        return 0 <= tbar and sbar <= l
    return l <= sbar and tbar <= 2 * l


@dataclass(frozen=True, slots=True)
class Column:
    s: int
    sbar: int
    tbar: int
    l: int | None

    def __post_init__(self):
        if not column_valid(self.s, self.sbar, self.tbar, self.l):
            raise ValueError(f"invalid column {self.text()} for level {self.l}")

    @classmethod
    def make(cls, s: int, sbar: int, tbar: int, l: int | None) -> Column:
        """Build a column, applying the ``sbar = tbar`` normalization first."""
        sbar, tbar = normalize(sbar, tbar, l)
        return cls(s, sbar, tbar, l)

    @property
    def t(self) -> int:
        return self.tbar + self.s - self.sbar

    def text(self) -> str:
        return f"⟨{self.s},{self.sbar},{self.tbar}⟩"

    def __str__(self) -> str:
        return self.text()

    def to_json(self) -> dict:
        return {"s": self.s, "sbar": self.sbar, "tbar": self.tbar}

    @classmethod
    def from_json(cls, data: dict, l: int | None) -> Column:
        return cls.make(int(data["s"]), int(data["sbar"]), int(data["tbar"]), l)


def normalize(sbar: int, tbar: int, l: int | None) -> tuple[int, int]:
    """Pick the smaller representative ``min(v, 2l - v)`` when ``sbar = tbar = v``."""
    if l is not None and sbar == tbar:
        v = min(sbar, 2 * l - sbar)
        return v, v
    return sbar, tbar


def psi(c: Column) -> AffineElem:
    """Column to graded adjoint element ``(x, y)(-s)``."""
    half = c.tbar // 2
    if c.l is None:
        if c.sbar >= c.tbar:
            return AffineElem(LimitElem(c.sbar - half, half), -c.s)
        return AffineElem(LimitElem(-half, -c.sbar + half), -c.s)
    if c.sbar >= c.tbar:
        return AffineElem(AdjointElem(c.sbar - half, half, c.l), -c.s)
    return AffineElem(AdjointElem(c.l - half, c.l - c.sbar + half, c.l), -c.s)


def phi_inv(u: AffineElem) -> Column:
    """Graded element ``(x, y)(-m)`` with ``m >= 0`` back to its column."""
    if u.m > 0:
        raise ValueError(f"grade {u.m} is positive; no column corresponds to {u}")
    b, m = u.b, -u.m
    x, y = b.x, b.y
    if isinstance(b, LimitElem):
        if x >= y:
            return Column(m, x + y, 2 * y, None)
        return Column(m, -(x + y), -2 * x, None)
    l = b.l
    if x >= y:
        return Column(m, x + y, 2 * y, l)
    return Column(m, 2 * l - (x + y), 2 * (l - x), l)


def _base_crystal(l: int | None) -> Crystal:
    return LambdaSpec(l, 0).crystal() if l is not None else INFINITY.crystal()


def _transport(op, i: int, c: Column) -> Column | None:
    u = op(i, psi(c), _base_crystal(c.l))
    if u is None:
        return None
    try:
        return phi_inv(u)
    except ValueError:
        # left the column set: positive grade, or fewer than zero 1-blocks above G
        return None


def column_f(i: int, c: Column) -> Column | None:
    return _transport(affinize_f, i, c)


def column_e(i: int, c: Column) -> Column | None:
    return _transport(affinize_e, i, c)


def column_h(c: Column, d: Column) -> int:
    """Energy of ``c (x) d`` written directly in column coordinates."""
    if c.l != d.l:
        raise ValueError("columns from different contexts")
    lv = 0 if c.l is None else c.l
    s, t = c.sbar, c.tbar
    s2, t2 = d.sbar, d.tbar
    if s >= t and s2 >= t2:
        return max(s - s2, s + s2 - 2 * t2, s2 - s, s2 - 3 * s + 2 * t)
    if s >= t and s2 < t2:
        return max(s + s2 - 2 * lv, 2 * lv - 3 * s - s2 + 2 * t, 2 * lv - s - s2, -2 * lv + s + 3 * s2 - 2 * t2)
    if s < t and s2 >= t2:
        return max(2 * lv - s - s2, -2 * lv - s + s2 + 2 * t, -2 * lv + s + s2, 2 * lv - s + s2 - 2 * t2)
    return max(s - s2, -s - s2 + 2 * t, s2 - s, -s + 3 * s2 - 2 * t2)


def column_H(c: Column, d: Column) -> int:
    """Affine energy of two adjacent columns, ``c`` on the left."""
    return -c.s + d.s - column_h(c, d)


def ground_column(lam: LambdaSpec) -> Column:
    if lam.is_infinite:
        return Column(0, 0, 0, None)
    return Column(0, 2 * lam.a, 2 * lam.a, lam.l)


# -- walls -------------------------------------------------------------------


@dataclass(frozen=True)
class Wall:
    """A Young wall candidate on ``lam``: ``columns[0]`` is the rightmost column."""

    lam: LambdaSpec
    columns: tuple[Column, ...] = ()

    def __post_init__(self):
        cols = tuple(self.columns)
        g = ground_column(self.lam)
        for c in cols:
            if c.l != self.lam.l:
                raise ValueError(f"column {c} has context {c.l}, wall has {self.lam.l}")
        while cols and cols[-1] == g:
            cols = cols[:-1]
        object.__setattr__(self, "columns", cols)

    @property
    def ground(self) -> Column:
        return ground_column(self.lam)

    def column(self, k: int) -> Column:
        return self.columns[k] if k < len(self.columns) else self.ground

    def replace(self, k: int, c: Column) -> Wall:
        cols = list(self.columns)
        while len(cols) <= k:
            cols.append(self.ground)
        cols[k] = c
        return Wall(self.lam, tuple(cols))

    def key(self) -> str:
        if not self.columns:
            return "ground"
        return " ".join(c.text() for c in reversed(self.columns))

    def __str__(self) -> str:
        return self.key()

    def to_json(self) -> dict:
        return {"lambda": self.lam.to_json(), "columns": [c.to_json() for c in self.columns]}

    @classmethod
    def from_json(cls, data: dict) -> Wall:
        lam = LambdaSpec.from_json(data["lambda"])
        return cls(lam, tuple(Column.from_json(c, lam.l) for c in data["columns"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def ground_wall(lam: LambdaSpec) -> Wall:
    return Wall(lam, ())


NOT_WALL = "not_wall"
WALL = "wall"
REDUCED = "reduced_wall"


def wall_energies(y: Wall) -> list[int]:
    """``H(C_{k+1} (x) C_k)`` for ``k = 0 .. N-1`` (``C_N`` is the ground column)."""
    return [column_H(y.column(k + 1), y.column(k)) for k in range(len(y.columns))]


def wall_validate(y: Wall) -> str:
    energies = wall_energies(y)
    if any(v < 0 for v in energies):
        return NOT_WALL
    if all(v == 0 for v in energies):
        return REDUCED
    return WALL


def wall_wt(y: Wall) -> Weight:
    """``lambda - k_0 alpha_0 - (k_1 / 2) alpha_1`` from block counts above the ground wall."""
    k0 = sum(c.s for c in y.columns)
    k1 = sum(c.t for c in y.columns)
    if k1 % 2:
        raise ValueError(f"odd number of 1-blocks in {y}")
    return y.lam.weight - k0 * ALPHA0 - (k1 // 2) * ALPHA1


def _wall_entries(y: Wall) -> list[AffineElem]:
    return [psi(c) for c in reversed(y.columns)]


def _wall_from_entries(lam: LambdaSpec, entries: list[AffineElem]) -> Wall:
    cols = []
    for u in reversed(entries):
        cols.append(phi_inv(u))
    return Wall(lam, tuple(cols))


def _tensor_act(i: int, y: Wall, raising: bool) -> Wall | None:
    entries = act_on_string(y.lam, _wall_entries(y), i, raising)
    if entries is None:
        return None
    try:
        out = _wall_from_entries(y.lam, entries)
    except ValueError as exc:
        raise WallConditionError(f"operator left the column set: {exc}") from exc
    if wall_validate(out) == NOT_WALL:
        raise WallConditionError(f"result is not a Young wall: {out}", out.columns)
    return out


def wall_f(i: int, y: Wall, method: str = "tensor") -> Wall | None:
    """``F_i`` on a Young wall.

    ``method="tensor"`` maps the wall through ``psi`` and uses the tensor
    rule; ``method="oracle"`` locates the column with the removable/admissible
    signature computed by literally adding and removing blocks.
    """
    if method == "tensor":
        return _tensor_act(i, y, raising=False)
    if method == "oracle":
        return _oracle_act(i, y, raising=False)
    raise ValueError(f"unknown method {method!r}")


def wall_e(i: int, y: Wall, method: str = "tensor") -> Wall | None:
    if method == "tensor":
        return _tensor_act(i, y, raising=True)
    if method == "oracle":
        return _oracle_act(i, y, raising=True)
    raise ValueError(f"unknown method {method!r}")


def wall_eps(i: int, y: Wall, method: str = "tensor") -> int:
    if method == "tensor":
        return string_stats(y.lam, _wall_entries(y), i)[0]
    return oracle_counts(i, y)[0]


def wall_phi(i: int, y: Wall, method: str = "tensor") -> int:
    if method == "tensor":
        return string_stats(y.lam, _wall_entries(y), i)[1]
    return oracle_counts(i, y)[1]


# -- the block-by-block signature --------------------------------------------


def _power(op, i: int, c: Column, n: int) -> Iterator[tuple[int, Column]]:
    cur = c
    for k in range(1, n + 1):
        cur = op(i, cur)
        if cur is None:
            return
        yield k, cur


def column_signature(i: int, y: Wall, k: int) -> tuple[int, int]:
    """Number of removable and admissible ``i``-blocks (1-blocks in pairs) in column ``k``.

    Removing ``n`` blocks is tried for every ``n`` up to the graded element's
    ``eps_i`` and kept whenever the whole modified wall is still a Young wall;
    likewise for adding.  In the infinity context the element's ``eps_i`` or
    ``phi_i`` can be negative; the count is then that negative number, since
    no literal removal or addition can be charged to the column.
    """
    c = y.column(k)
    u = psi(c)
    base = _base_crystal(c.l)
    counts = []
    for op, bound in ((column_e, base.eps(i, u.b)), (column_f, base.phi(i, u.b))):
        if bound < 0:
            counts.append(bound)
            continue
        best = 0
        for n, cc in _power(op, i, c, bound):
            if wall_validate(y.replace(k, cc)) != NOT_WALL:
                best = n
        counts.append(best)
    return counts[0], counts[1]


def _sig_text(minus: int, plus: int) -> str:
    if minus < 0 or plus < 0:
        return f"-^{minus}+^{plus}"
    return "-" * minus + "+" * plus


def column_counts(i: int, y: Wall) -> list[tuple[int, int]]:
    """``(removable, admissible)`` for columns ``0 .. N``; index ``k`` is column ``k``."""
    return [column_signature(i, y, k) for k in range(len(y.columns) + 1)]


def signature_oracle(i: int, y: Wall) -> list[str]:
    """Per-column ``i``-signatures, deepest column first.

    The list runs ``C_N, ..., C_1, C_0`` where ``C_N`` is the first ground
    column, so concatenating it gives the word that is cancelled.  Negative
    counts (infinity context only) are written ``-^m+^p``.
    """
    return [_sig_text(m, p) for m, p in reversed(column_counts(i, y))]


def _locate(counts: list[tuple[int, int]], infinite: bool) -> tuple[int, int, int, int]:
    """Reduced counts and the columns where ``E_i``/``F_i`` act.

    The word runs from the deepest column rightwards.  Level-``l`` walls use
    bracket cancellation.  Columns of the infinity context carry integer
    counts of either sign and ``F_i`` never vanishes there, so the two-factor
    max rule is folded instead; on non-negative counts with a surviving ``+``
    both rules pick the same column.
    """
    n = len(counts)
    minus = [counts[n - 1 - j][0] for j in range(n)]
    plus = [counts[n - 1 - j][1] for j in range(n)]
    if not infinite:
        n_minus, n_plus, e_pos, f_pos = kernels.cancel_counts(minus, plus)
    else:
        n_minus, n_plus = kernels.fold_stats(minus, plus)
        e_pos = kernels.e_position(minus, plus) if n_minus > 0 else -1
        f_pos = kernels.f_position(minus, plus)
    e_col = n - 1 - e_pos if e_pos >= 0 else -1
    f_col = n - 1 - f_pos if f_pos >= 0 else -1
    return n_minus, n_plus, e_col, f_col


def reduced_signature(i: int, y: Wall) -> str:
    n_minus, n_plus = oracle_counts(i, y)
    return _sig_text(n_minus, n_plus)


def oracle_counts(i: int, y: Wall) -> tuple[int, int]:
    n_minus, n_plus, _, _ = _locate(column_counts(i, y), y.lam.is_infinite)
    return n_minus, n_plus


def _oracle_act(i: int, y: Wall, raising: bool) -> Wall | None:
    n_minus, n_plus, e_col, f_col = _locate(column_counts(i, y), y.lam.is_infinite)
    if raising:
        if n_minus <= 0 or e_col < 0:
            return None
        k, new = e_col, column_e(i, y.column(e_col))
    else:
        if f_col < 0 or (not y.lam.is_infinite and not n_plus):
            return None
        k, new = f_col, column_f(i, y.column(f_col))
    if new is None:
        raise WallConditionError(f"column {k} of {y} admits no {'removal' if raising else 'addition'}")
    out = y.replace(k, new)
    if wall_validate(out) == NOT_WALL:
        raise WallConditionError(f"result is not a Young wall: {out}", out.columns)
    return out


class WallCrystal(Crystal):
    """Young walls on ``lam`` with the Kashiwara operators of the chosen route."""

    def __init__(self, lam: LambdaSpec, method: str = "tensor"):
        self.lam = lam
        self.method = method

    def __reduce__(self):
        return (WallCrystal, (self.lam, self.method))

    def wt(self, y):
        return wall_wt(y)

    def e(self, i, y):
        return wall_e(i, y, self.method)

    def f(self, i, y):
        return wall_f(i, y, self.method)

    def eps(self, i, y):
        return wall_eps(i, y, self.method)

    def phi(self, i, y):
        return wall_phi(i, y, self.method)

    def key(self, y):
        return y.key()

    def contains(self, y):
        return isinstance(y, Wall) and y.lam == self.lam


def enumerate_walls(lam: LambdaSpec, depth: int, method: str = "tensor", cap: int | None = None):
    """BFS component of the ground wall under ``F_i`` to the given depth."""
    from .crystal import DEFAULT_NODE_CAP, component

    return component(WallCrystal(lam, method), ground_wall(lam), depth, "down", cap or DEFAULT_NODE_CAP)


def column_height(c: Column) -> int:
    """Blocks above the ground line, counting a pair of 1-blocks once."""
    return c.s + c.t // 2


def _candidate_columns(l: int | None, budget: int) -> list[Column]:
    bars = range(0, 2 * l + 1) if l is not None else range(-2 * budget - 2, 2 * budget + 3)
    out = []
    for s in range(budget + 1):
        for sbar in bars:
            for tbar in bars:
                if not column_valid(s, sbar, tbar, l):
                    continue
                if l is not None and sbar == tbar and sbar > l:
                    continue
                c = Column(s, sbar, tbar, l)
                if 1 <= column_height(c) <= budget:
                    out.append(c)
    return out


def all_walls(lam: LambdaSpec, depth: int, cap: int | None = None):
    """Every Young wall (reduced or not) with at most ``depth`` blocks above the ground wall.

    Pairs of 1-blocks count once.  Columns are chosen right to left and at
    most ``depth`` positions are used.  Edges are the tensor-route ``F_i``;
    an ``F_i`` whose result fails the wall condition contributes no edge.
    """
    from .crystal import DEFAULT_NODE_CAP, CrystalGraph, ResourceLimitError

    cap = cap or DEFAULT_NODE_CAP
    g = ground_column(lam)
    cands = _candidate_columns(lam.l, depth)
    found: dict[str, Wall] = {}
    height: dict[str, int] = {}

    def extend(cols: list[Column], budget: int):
        # cols[-1] is the leftmost chosen column; close the wall with the ground tail
        if not cols or column_H(g, cols[-1]) >= 0:
            y = Wall(lam, tuple(cols))
            if y.key() not in found:
                if len(found) >= cap:
                    raise ResourceLimitError(f"node cap {cap} exceeded")
                found[y.key()] = y
                height[y.key()] = depth - budget
        if len(cols) >= depth:
            return
        right = cols[-1] if cols else None
        for c in [g] + cands:
            h = column_height(c)
            if h > budget:
                continue
            if right is not None and column_H(c, right) < 0:
                continue
            if c == g and budget == 0:
                continue
            extend(cols + [c], budget - h)

    extend([], depth)
    walls = {k: y for k, y in found.items() if wall_validate(y) != NOT_WALL}
    edges = set()
    for k, y in walls.items():
        for i in (0, 1):
            try:
                t = wall_f(i, y)
            except WallConditionError:
                continue
            if t is not None and t.key() in walls:
                edges.add((k, i, t.key()))
    weights = {k: wall_wt(y) for k, y in walls.items()}
    depths = {k: height[k] for k in walls}
    return CrystalGraph(ground_wall(lam).key(), walls, weights, depths, edges)


# -- ASCII rendering ---------------------------------------------------------


def _column_rows(c: Column) -> list[str]:
    """Rows of one column from the top down, ending with the ground line."""
    rows = []
    layer = "f" if c.sbar >= c.tbar else "b"
    pairs = c.t // 2
    # 0-blocks and 1-pairs are stacked alternately from the ground line, extra ones on top
    seq = []
    zeros, ones = c.s, pairs
    while zeros or ones:
        if zeros:
            seq.append("[ 0 ]")
            zeros -= 1
        if ones:
            seq.append(f"[1|1]{layer}")
            ones -= 1
    for cell in reversed(seq):
        rows.append(cell.ljust(6))
    rows.append("=====G")
    return rows


def render_column(c: Column) -> str:
    head = f"{c.text()} s={c.s} t={c.t}"
    return "\n".join([head] + _column_rows(c)) + "\n"


def render_wall(y: Wall) -> str:
    cols = [y.ground] + list(reversed(y.columns))
    blocks = [_column_rows(c) for c in cols]
    height = max(len(b) for b in blocks)
    width = 7
    lines = [f"Young wall on {y.lam}: {y.key()}"]
    for r in range(height):
        cells = []
        for b in blocks:
            pad = height - len(b)
            cells.append(("" if r < pad else b[r - pad]).ljust(width))
        lines.append("... " + "".join(cells).rstrip())
    labels = [f"C{len(cols) - 1 - j}".ljust(width) for j in range(len(cols))]
    lines.append("    " + "".join(labels).rstrip())
    for j, c in enumerate(cols):
        lines.append(f"    C{len(cols) - 1 - j} = {c.text()}")
    return "\n".join(lines) + "\n"


def render_ascii(obj) -> str:
    if isinstance(obj, Column):
        return render_column(obj)
    if isinstance(obj, Wall):
        return render_wall(obj)
    raise TypeError(f"cannot render {type(obj).__name__}")


__all__ = [
    "Column",
    "Wall",
    "WallConditionError",
    "WallCrystal",
    "column_valid",
    "normalize",
    "psi",
    "phi_inv",
    "column_f",
    "column_e",
    "column_h",
    "column_H",
    "ground_column",
    "ground_wall",
    "wall_validate",
    "wall_energies",
    "wall_wt",
    "wall_f",
    "wall_e",
    "wall_eps",
    "wall_phi",
    "signature_oracle",
    "column_counts",
    "oracle_counts",
    "column_signature",
    "reduced_signature",
    "render_ascii",
    "enumerate_walls",
    "all_walls",
    "column_height",
]
