"""Generic crystal machinery.

A crystal is any object providing ``wt``, ``e``, ``f``, ``eps``, ``phi`` and a
canonical text ``key`` for its elements; operators return ``None`` for the zero
element.  Tensor strings are tuples of elements listed left to right, and the
tensor rule is the one in which ``f_i`` acts on the left factor of
``b1 (x) b2`` exactly when ``phi_i(b1) > eps_i(b2)``.
"""

from __future__ import annotations

import json
import math
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from . import kernels
from .weights import ALPHA, ClassicalWeight, Weight, pair

INDEX_SET = (0, 1)
DEFAULT_NODE_CAP = 10**6


class ResourceLimitError(RuntimeError):
    """Raised when a graph traversal would exceed its node cap."""


class Crystal:
    """Base class for concrete crystals.  Subclasses implement the five maps."""

    index_set = INDEX_SET

    def wt(self, b):
        raise NotImplementedError

    def e(self, i: int, b):
        raise NotImplementedError

    def f(self, i: int, b):
        raise NotImplementedError

    def eps(self, i: int, b) -> int:
        raise NotImplementedError

    def phi(self, i: int, b) -> int:
        raise NotImplementedError

    def key(self, b) -> str:
        return str(b)

    def contains(self, b) -> bool:
        return True


# -- tensor strings ----------------------------------------------------------


def _factor_crystals(crystal, n: int) -> Sequence[Crystal]:
    if isinstance(crystal, Crystal):
        return [crystal] * n
    crystals = list(crystal)
    if len(crystals) != n:
        raise ValueError(f"{len(crystals)} crystals given for {n} factors")
    return crystals


def _stats(i: int, s: Sequence, crystal) -> tuple[list[int], list[int], Sequence[Crystal]]:
    cs = _factor_crystals(crystal, len(s))
    eps = [c.eps(i, b) for c, b in zip(cs, s)]
    phi = [c.phi(i, b) for c, b in zip(cs, s)]
    return eps, phi, cs


def tensor_eps(i: int, s: Sequence, crystal) -> int:
    """``eps_i`` of a tensor string by folding the two-factor max formula."""
    if not s:
        return 0
    eps, phi, _ = _stats(i, s, crystal)
    return kernels.fold_stats(eps, phi)[0]


def tensor_phi(i: int, s: Sequence, crystal) -> int:
    if not s:
        return 0
    eps, phi, _ = _stats(i, s, crystal)
    return kernels.fold_stats(eps, phi)[1]


def tensor_wt(s: Sequence, crystal):
    cs = _factor_crystals(crystal, len(s))
    weights = [c.wt(b) for c, b in zip(cs, s)]
    total = weights[0]
    for w in weights[1:]:
        total = total + w
    return total


def f_site(i: int, s: Sequence, crystal) -> int:
    """Index of the factor on which ``f_i`` acts (``-1`` for the empty string)."""
    if not s:
        return -1
    eps, phi, _ = _stats(i, s, crystal)
    return kernels.f_position(eps, phi)


def e_site(i: int, s: Sequence, crystal) -> int:
    if not s:
        return -1
    eps, phi, _ = _stats(i, s, crystal)
    return kernels.e_position(eps, phi)


def _replace(s: Sequence, k: int, new) -> tuple | None:
    if new is None:
        return None
    out = list(s)
    out[k] = new
    return tuple(out)


def tensor_f(i: int, s: Sequence, crystal) -> tuple | None:
    k = f_site(i, s, crystal)
    if k < 0:
        return None
    cs = _factor_crystals(crystal, len(s))
    return _replace(s, k, cs[k].f(i, s[k]))


def tensor_e(i: int, s: Sequence, crystal) -> tuple | None:
    k = e_site(i, s, crystal)
    if k < 0:
        return None
    cs = _factor_crystals(crystal, len(s))
    return _replace(s, k, cs[k].e(i, s[k]))


def signature(i: int, s: Sequence, crystal) -> tuple[int, int, int, int]:
    """Second implementation of the tensor rule by bracket cancellation.

    Valid for non-negative ``eps``/``phi`` only.  Returns the surviving counts
    and the factor indices of the rightmost ``-`` and the leftmost ``+``.
    """
    eps, phi, _ = _stats(i, s, crystal)
    if any(v < 0 for v in eps) or any(v < 0 for v in phi):
        raise ValueError("bracket cancellation needs non-negative eps/phi")
    return kernels.cancel_counts(eps, phi)


def signature_f(i: int, s: Sequence, crystal) -> tuple | None:
    _, n_plus, _, pos = signature(i, s, crystal)
    if not n_plus:
        return None
    cs = _factor_crystals(crystal, len(s))
    return _replace(s, pos, cs[pos].f(i, s[pos]))


def signature_e(i: int, s: Sequence, crystal) -> tuple | None:
    n_minus, _, pos, _ = signature(i, s, crystal)
    if not n_minus:
        return None
    cs = _factor_crystals(crystal, len(s))
    return _replace(s, pos, cs[pos].e(i, s[pos]))


def _nested(i: int, s: Sequence, cs: Sequence[Crystal], raising: bool):
    # (s[:-1]) (x) s[-1] as a two-factor product; returns (eps, phi, new string)
    last = cs[-1]
    e2, p2 = last.eps(i, s[-1]), last.phi(i, s[-1])
    if len(s) == 1:
        t = last.e(i, s[0]) if raising else last.f(i, s[0])
        return e2, p2, None if t is None else (t,)
    e1, p1, t1 = _nested(i, s[:-1], cs[:-1], raising)
    eps = max(e1, e2 - (p1 - e1))
    phi = max(p2, p1 + p2 - e2)
    left = p1 >= e2 if raising else p1 > e2
    if left:
        return eps, phi, None if t1 is None else t1 + (s[-1],)
    t = last.e(i, s[-1]) if raising else last.f(i, s[-1])
    return eps, phi, None if t is None else tuple(s[:-1]) + (t,)


def nested_f(i: int, s: Sequence, crystal) -> tuple | None:
    """Third implementation: the two-factor rule applied recursively, nested
    to the left.  Works for non-normal crystals as well."""
    if not s:
        return None
    return _nested(i, tuple(s), _factor_crystals(crystal, len(s)), False)[2]


def nested_e(i: int, s: Sequence, crystal) -> tuple | None:
    if not s:
        return None
    return _nested(i, tuple(s), _factor_crystals(crystal, len(s)), True)[2]


class TensorCrystal(Crystal):
    """The tensor product of finitely many crystals; elements are tuples."""

    def __init__(self, factors: Sequence[Crystal]):
        self.factors = tuple(factors)

    def __reduce__(self):
        return (TensorCrystal, (self.factors,))

    def wt(self, b):
        return tensor_wt(b, self.factors)

    def e(self, i, b):
        return tensor_e(i, b, self.factors)

    def f(self, i, b):
        return tensor_f(i, b, self.factors)

    def eps(self, i, b):
        return tensor_eps(i, b, self.factors)

    def phi(self, i, b):
        return tensor_phi(i, b, self.factors)

    def key(self, b):
        return " (x) ".join(c.key(x) for c, x in zip(self.factors, b))

    def contains(self, b):
        return len(b) == len(self.factors) and all(c.contains(x) for c, x in zip(self.factors, b))


# -- affinization ------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class AffineElem:
    """``b(m)``: a classical crystal element with an integer grade.

    The grade counts ``delta/2`` units in the weight, so that ``e_0`` (which
    raises the grade by one) adds exactly ``alpha_0``.
    """

    b: Any
    m: int

    def __str__(self) -> str:
        return f"{self.b}({self.m})"


def affinize_f(i: int, x: AffineElem, base: Crystal) -> AffineElem | None:
    nb = base.f(i, x.b)
    if nb is None:
        return None
    return AffineElem(nb, x.m - 1 if i == 0 else x.m)


def affinize_e(i: int, x: AffineElem, base: Crystal) -> AffineElem | None:
    nb = base.e(i, x.b)
    if nb is None:
        return None
    return AffineElem(nb, x.m + 1 if i == 0 else x.m)


class AffineCrystal(Crystal):
    def __init__(self, base: Crystal):
        self.base = base

    def __reduce__(self):
        return (AffineCrystal, (self.base,))

    def wt(self, x: AffineElem) -> Weight:
        w = self.base.wt(x.b)
        return Weight(w.c0, w.c1, x.m)

    def e(self, i, x):
        return affinize_e(i, x, self.base)

    def f(self, i, x):
        return affinize_f(i, x, self.base)

    def eps(self, i, x):
        return self.base.eps(i, x.b)

    def phi(self, i, x):
        return self.base.phi(i, x.b)

    def key(self, x):
        return f"{self.base.key(x.b)}({x.m})"

    def contains(self, x):
        return isinstance(x, AffineElem) and self.base.contains(x.b)


# -- graphs ------------------------------------------------------------------


@dataclass
class CrystalGraph:
    """A finite piece of a crystal graph, rooted at its seed.

    ``nodes`` maps canonical keys to elements, ``depth`` records BFS distance
    from the root, and each edge ``(src, i, dst)`` means ``f_i(src) = dst``.
    """

    root: str
    nodes: dict[str, Any]
    weights: dict[str, Any]
    depth: dict[str, int]
    edges: set[tuple[str, int, str]] = field(default_factory=set)

    def __len__(self) -> int:
        return len(self.nodes)

    def ordered_keys(self) -> list[str]:
        return sorted(self.nodes, key=lambda k: (self.depth[k], k))

    def multiplicities(self) -> Counter:
        return Counter(self.weights.values())

    def to_json(self) -> dict:
        order = self.ordered_keys()
        ids = {k: n for n, k in enumerate(order)}
        nodes = []
        for k in order:
            w = self.weights[k]
            nodes.append({"id": ids[k], "label": k, "depth": self.depth[k], "weight": w.to_json()})
        edges = sorted([ids[s], i, ids[d]] for s, i, d in self.edges)
        return {"nodes": nodes, "edges": edges, "root": ids[self.root]}

    def to_dot(self, name: str = "crystal") -> str:
        order = self.ordered_keys()
        ids = {k: n for n, k in enumerate(order)}
        lines = [f"digraph {name} {{"]
        for k in order:
            label = f"{k}\\n{self.weights[k]}".replace('"', '\\"')
            lines.append(f'  n{ids[k]} [label="{label}"];')
        colors = {0: "blue", 1: "red"}
        for s, i, d in sorted(self.edges, key=lambda t: (ids[t[0]], t[1], ids[t[2]])):
            lines.append(f'  n{ids[s]} -> n{ids[d]} [label="{i}", color={colors.get(i, "black")}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_json(cls, data: dict) -> CrystalGraph:
        by_id = {n["id"]: n for n in data["nodes"]}
        nodes = {n["label"]: n["label"] for n in data["nodes"]}
        weights = {n["label"]: _weight_from_json(n["weight"]) for n in data["nodes"]}
        depth = {n["label"]: n.get("depth", 0) for n in data["nodes"]}
        edges = {(by_id[s]["label"], i, by_id[d]["label"]) for s, i, d in data["edges"]}
        return cls(by_id[data["root"]]["label"], nodes, weights, depth, edges)


def _weight_from_json(data: dict):
    if "half_delta" in data:
        return Weight.from_json(data)
    return ClassicalWeight(int(data["L0"]), int(data["L1"]))


def _expand(args) -> list[tuple[str, int, str, Any, str]]:
    ops, items, directions = args
    out = []
    for key, b in items:
        for i in ops.index_set:
            if directions in ("down", "both"):
                t = ops.f(i, b)
                if t is not None:
                    out.append((key, i, "f", t, ops.key(t)))
            if directions in ("up", "both"):
                t = ops.e(i, b)
                if t is not None:
                    out.append((key, i, "e", t, ops.key(t)))
    return out


def component(
    ops: Crystal,
    seed,
    depth: int | None = None,
    directions: str = "both",
    cap: int = DEFAULT_NODE_CAP,
    jobs: int = 1,
) -> CrystalGraph:
    """Breadth-first closure of ``seed`` under the chosen Kashiwara operators.

    ``depth=None`` means no truncation (the crystal must then be finite or the
    cap will trip).  Edges are recorded between every pair of discovered nodes.
    """
    if directions not in ("down", "up", "both"):
        raise ValueError(f"directions must be down, up or both, got {directions!r}")
    root = ops.key(seed)
    nodes = {root: seed}
    dist = {root: 0}
    frontier = [(root, seed)]
    level = 0
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        while frontier and (depth is None or level < depth):
            frontier.sort(key=lambda kb: kb[0])
            if pool is None:
                found = _expand((ops, frontier, directions))
            else:
                chunks = [frontier[j::jobs] for j in range(jobs)]
                found = [t for part in pool.map(_expand, [(ops, c, directions) for c in chunks]) for t in part]
            nxt = {}
            for _, _, _, t, tk in found:
                if tk not in nodes and tk not in nxt:
                    nxt[tk] = t
            level += 1
            if len(nodes) + len(nxt) > cap:
                raise ResourceLimitError(f"node cap {cap} exceeded at depth {level}")
            for tk, t in nxt.items():
                nodes[tk] = t
                dist[tk] = level
            frontier = list(nxt.items())
    finally:
        if pool is not None:
            pool.shutdown()
    edges = set()
    for key, b in nodes.items():
        for i in ops.index_set:
            t = ops.f(i, b)
            if t is not None:
                tk = ops.key(t)
                if tk in nodes:
                    edges.add((key, i, tk))
    weights = {k: ops.wt(b) for k, b in nodes.items()}
    return CrystalGraph(root, nodes, weights, dist, edges)


def graph_equal(g1: CrystalGraph, g2: CrystalGraph) -> tuple[bool, str | None]:
    """Compare two rooted, colored, weight-labelled graphs by joint traversal.

    Every node has at most one outgoing and one incoming edge per color, so
    the correspondence is forced from the roots and no search is needed.
    Returns ``(equal, first mismatch description or None)``.
    """

    def adjacency(g):
        out: dict[str, dict[int, str]] = {k: {} for k in g.nodes}
        inn: dict[str, dict[int, str]] = {k: {} for k in g.nodes}
        for s, i, d in g.edges:
            out[s][i] = d
            inn[d][i] = s
        return out, inn

    out1, in1 = adjacency(g1)
    out2, in2 = adjacency(g2)
    fwd = {g1.root: g2.root}
    bwd = {g2.root: g1.root}
    queue = deque([(g1.root, g2.root)])
    while queue:
        a, b = queue.popleft()
        if g1.weights[a] != g2.weights[b]:
            return False, f"weight mismatch at {a} ~ {b}: {g1.weights[a]} != {g2.weights[b]}"
        for label, m1, m2 in (("out", out1, out2), ("in", in1, in2)):
            if set(m1[a]) != set(m2[b]):
                return False, (
                    f"{label}-edge colors differ at {a} ~ {b}: {sorted(m1[a])} vs {sorted(m2[b])}"
                )
            for i in sorted(m1[a]):
                x, y = m1[a][i], m2[b][i]
                if x in fwd or y in bwd:
                    if fwd.get(x) != y or bwd.get(y) != x:
                        return False, f"{label}-edge {i} from {a} ~ {b} leads to inconsistent nodes {x} / {y}"
                    continue
                fwd[x] = y
                bwd[y] = x
                queue.append((x, y))
    if len(fwd) != len(g1.nodes) or len(bwd) != len(g2.nodes):
        return False, f"unreached nodes: {len(g1.nodes)} vs {len(g2.nodes)} nodes, {len(fwd)} matched"
    if len(g1.edges) != len(g2.edges):
        return False, f"edge counts differ: {len(g1.edges)} vs {len(g2.edges)}"
    return True, None


# -- axioms ------------------------------------------------------------------


@dataclass
class Report:
    """Outcome of a verifier: ``violations`` is empty iff the check passed."""

    name: str
    checked: int = 0
    violations: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, msg: str, limit: int = 50) -> None:
        if len(self.violations) < limit:
            self.violations.append(msg)
        else:
            self.info["truncated_violations"] = self.info.get("truncated_violations", 0) + 1

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "checked": self.checked,
            "violations": list(self.violations),
            "info": self.info,
        }

    def __str__(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.name} ({self.checked} checks)"


def _shift(w, i: int, sign: int):
    a = ALPHA[i]
    if isinstance(w, ClassicalWeight):
        a = a.cl()
    return w + a if sign > 0 else w - a


def axiom_check(ops: Crystal, elems: Iterable, name: str = "crystal axioms") -> Report:
    """Check the seven crystal axioms pointwise over ``elems``."""
    report = Report(name)
    for b in elems:
        k = ops.key(b)
        w = ops.wt(b)
        for i in ops.index_set:
            report.checked += 1
            ep, ph = ops.eps(i, b), ops.phi(i, b)
            eb, fb = ops.e(i, b), ops.f(i, b)
            if ph == -math.inf:
                if eb is not None or fb is not None:
                    report.add(f"(7) {k}: phi_{i} = -inf but an operator is non-zero")
                continue
            if ph != ep + pair(i, w):
                report.add(f"(1) {k}: phi_{i}={ph} != eps_{i}={ep} + <h_{i},wt>={pair(i, w)}")
            if eb is not None:
                if ops.wt(eb) != _shift(w, i, +1):
                    report.add(f"(2) {k}: wt(e_{i} b) != wt(b) + alpha_{i}")
                if ops.eps(i, eb) != ep - 1 or ops.phi(i, eb) != ph + 1:
                    report.add(f"(4) {k}: eps/phi do not shift correctly under e_{i}")
                back = ops.f(i, eb)
                if back is None or ops.key(back) != k:
                    report.add(f"(6) {k}: f_{i} e_{i} b != b")
            if fb is not None:
                if ops.wt(fb) != _shift(w, i, -1):
                    report.add(f"(3) {k}: wt(f_{i} b) != wt(b) - alpha_{i}")
                if ops.eps(i, fb) != ep + 1 or ops.phi(i, fb) != ph - 1:
                    report.add(f"(5) {k}: eps/phi do not shift correctly under f_{i}")
                back = ops.e(i, fb)
                if back is None or ops.key(back) != k:
                    report.add(f"(6) {k}: e_{i} f_{i} b != b")
    return report


def dumps_graph(g: CrystalGraph) -> str:
    return json.dumps(g.to_json(), indent=1, sort_keys=True)
