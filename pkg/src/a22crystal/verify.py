"""Verification suites shared by the command line and the test-suite.

Each suite returns a list of :class:`Report` objects.
"""

from __future__ import annotations

from .adjoint import INFINITY, AdjointElem, LambdaSpec, LimitElem, verify_perfect
from .crystal import (
    DEFAULT_NODE_CAP,
    AffineElem,
    Report,
    component,
    graph_equal,
    nested_e,
    nested_f,
    signature_e,
    signature_f,
    tensor_e,
    tensor_f,
)
from .energy import (
    H_affine,
    h_classical,
    verify_energy_axioms,
    verify_h_invariance,
    verify_H_constancy,
    verify_zero_energy_condition,
)
from .paths import (
    Path,
    PathConditionError,
    padded_string,
    path_component,
    path_e,
    path_f,
    path_wt,
)
from .weights import pair
from .youngwall import (
    REDUCED,
    Column,
    Wall,
    WallConditionError,
    WallCrystal,
    column_H,
    column_signature,
    column_valid,
    ground_wall,
    phi_inv,
    psi,
    wall_e,
    wall_eps,
    wall_f,
    wall_phi,
    wall_validate,
    wall_wt,
)

SUITES = (
    "energy-axioms",
    "H-constancy",
    "perfect",
    "bijection",
    "intertwine",
    "iso-lambda",
    "iso-infinity",
    "multiplicities",
)


def all_lambdas(max_level: int) -> list[LambdaSpec]:
    return [LambdaSpec(l, a) for l in range(1, max_level + 1) for a in range(l // 2 + 1)]


# -- energies ----------------------------------------------------------------


def ground_energy_report(max_level: int) -> Report:
    report = Report(f"h((a,a) (x) (a,a)) = 0 for l <= {max_level}")
    for l in range(1, max_level + 1):
        for a in range(l // 2 + 1):
            b = AdjointElem(a, a, l)
            report.checked += 1
            if h_classical(b, b) != 0:
                report.add(f"l={l} a={a}: h = {h_classical(b, b)}")
    return report


def suite_energy_axioms(l: int) -> list[Report]:
    return [
        verify_energy_axioms(l),
        verify_h_invariance(l),
        ground_energy_report(l),
        verify_zero_energy_condition(l, 4),
    ]


def suite_H_constancy(l: int, window: int = 8, depth: int = 10) -> list[Report]:
    return [verify_H_constancy(l, window, depth)]


def suite_perfect(l: int) -> list[Report]:
    return [verify_perfect(l)]


# -- columns -----------------------------------------------------------------


def columns_in_range(l: int | None, s_max: int, bar_max: int | None = None) -> list[Column]:
    """Every valid column with ``s <= s_max``.

    Level-``l`` columns have ``0 <= sbar, tbar <= 2l`` automatically; in the
    infinity context ``|sbar|, |tbar| <= bar_max`` bounds the search.
    """
    if l is None:
        bars = range(-bar_max, bar_max + 1)
    else:
        bars = range(0, 2 * l + 1)
    out = []
    for s in range(s_max + 1):
        for sbar in bars:
            for tbar in bars:
                if not column_valid(s, sbar, tbar, l):
                    continue
                if l is not None and sbar == tbar and sbar > l:
                    continue
                out.append(Column(s, sbar, tbar, l))
    return out


def suite_bijection(l: int | None, s_max: int = 10, bar_max: int = 10) -> list[Report]:
    name = "infinity" if l is None else f"l={l}"
    fwd = Report(f"phi_inv(psi(C)) = C, {name}, s <= {s_max}")
    images = set()
    for c in columns_in_range(l, s_max, bar_max):
        fwd.checked += 1
        u = psi(c)
        if u in images:
            fwd.add(f"psi not injective at {c}")
        images.add(u)
        if phi_inv(u) != c:
            fwd.add(f"{c} -> {u} -> {phi_inv(u)}")
    back = Report(f"psi(phi_inv(u)) = u, {name}, grade >= -{s_max}")
    if l is None:
        elems = [LimitElem(x, y) for x in range(-bar_max, bar_max + 1) for y in range(-bar_max, bar_max + 1)]
    else:
        elems = [AdjointElem(x, y, l) for x in range(l + 1) for y in range(l + 1 - x)]
    outside = 0
    for m in range(s_max + 1):
        for b in elems:
            u = AffineElem(b, -m)
            try:
                c = phi_inv(u)
            except ValueError:
                outside += 1
                continue
            back.checked += 1
            if psi(c) != u:
                back.add(f"{u} -> {c} -> {psi(c)}")
    back.info["elements_outside_column_image"] = outside
    fwd.info["columns"] = fwd.checked
    return [fwd, back]


def energy_consistency_report(l: int | None, s_max: int = 8, bar_max: int = 4) -> Report:
    """``column_H`` against ``H_affine`` through ``psi`` over all column pairs."""
    name = "infinity" if l is None else f"l={l}"
    report = Report(f"column_H = H(psi (x) psi), {name}")
    cols = columns_in_range(l, s_max, bar_max)
    for c in cols:
        uc = psi(c)
        for d in cols:
            report.checked += 1
            want = H_affine(uc, psi(d))
            got = column_H(c, d)
            if got != want:
                report.add(f"{c} (x) {d}: {got} vs {want}")
    return report


# -- walls against paths -----------------------------------------------------


def wall_graph(lam: LambdaSpec, depth: int, method: str = "oracle", cap: int = DEFAULT_NODE_CAP, jobs: int = 1):
    return component(WallCrystal(lam, method), ground_wall(lam), depth, "down", cap, jobs)


def wall_to_path(y: Wall) -> Path:
    return Path(y.lam, tuple(psi(c) for c in y.columns))


def neighbour_report(lam: LambdaSpec, walls) -> Report:
    """``phi_i(Y_{k+1}) - eps_i(Y_k)`` from block counting against the tensor-side value."""
    report = Report(f"neighbour signature differences, lambda={lam}")
    base = lam.crystal()
    for y in walls:
        for i in (0, 1):
            counts = [column_signature(i, y, k) for k in range(len(y.columns) + 1)]
            for k in range(len(y.columns)):
                report.checked += 1
                got = counts[k + 1][1] - counts[k][0]
                u1, u0 = psi(y.column(k + 1)).b, psi(y.column(k)).b
                want = base.phi(i, u1) - base.eps(i, u0)
                if got != want:
                    report.add(f"{y} i={i} k={k}: {got} vs {want}")
    return report


def intertwine_report(lam: LambdaSpec, walls) -> Report:
    """``psi`` carries the wall operators to the path operators."""
    report = Report(f"psi intertwines E_i/F_i, lambda={lam}")
    for y in walls:
        p = wall_to_path(y)
        for i in (0, 1):
            for wop, pop, name in ((wall_f, path_f, "F"), (wall_e, path_e, "E")):
                try:
                    w = wop(i, y, "oracle")
                except WallConditionError as exc:
                    report.add(f"{name}{i} {y}: {exc}")
                    continue
                if w is None:
                    continue
                report.checked += 1
                q = pop(i, p)
                if q != wall_to_path(w):
                    report.add(f"{name}{i} {y}: wall gives {wall_to_path(w)}, path gives {q}")
    return report


def suite_intertwine(lam: LambdaSpec, depth: int = 6, cap: int = DEFAULT_NODE_CAP, jobs: int = 1) -> list[Report]:
    g = wall_graph(lam, depth, cap=cap, jobs=jobs)
    walls = list(g.nodes.values())
    return [neighbour_report(lam, walls), intertwine_report(lam, walls)]


def iso_report(lam: LambdaSpec, depth: int, cap: int = DEFAULT_NODE_CAP, jobs: int = 1) -> Report:
    report = Report(f"reduced walls vs affine paths, lambda={lam}, depth={depth}")
    gw = wall_graph(lam, depth, cap=cap, jobs=jobs)
    try:
        gp = path_component(lam, depth, cap=cap, jobs=jobs)
    except PathConditionError as exc:
        report.add(f"path side left the path set: {exc}")
        return report
    report.checked += 1
    ok, msg = graph_equal(gw, gp)
    if not ok:
        report.add(msg)
    report.checked += 1
    if gw.multiplicities() != gp.multiplicities():
        report.add("weight multiplicities differ")
    report.info.update(
        nodes=[len(gw.nodes), len(gp.nodes)],
        edges=[len(gw.edges), len(gp.edges)],
    )
    return report


def suite_iso_lambda(lam: LambdaSpec, depth: int = 6, cap: int = DEFAULT_NODE_CAP, jobs: int = 1) -> list[Report]:
    return [iso_report(lam, depth, cap, jobs)]


def suite_iso_infinity(depth: int = 7, cap: int = DEFAULT_NODE_CAP, jobs: int = 1) -> list[Report]:
    return [iso_report(INFINITY, depth, cap, jobs)]


def multiplicity_report(lam: LambdaSpec, depth: int, cap: int = DEFAULT_NODE_CAP, jobs: int = 1) -> Report:
    report = Report(f"weight multiplicities, lambda={lam}, depth={depth}")
    mw = wall_graph(lam, depth, cap=cap, jobs=jobs).multiplicities()
    mp = path_component(lam, depth, cap=cap, jobs=jobs).multiplicities()
    for w in sorted(set(mw) | set(mp), key=lambda v: (v.cd, v.c0, v.c1), reverse=True):
        report.checked += 1
        if mw.get(w, 0) != mp.get(w, 0):
            report.add(f"{w}: walls {mw.get(w, 0)}, paths {mp.get(w, 0)}")
    report.info["table"] = {str(w): n for w, n in sorted(mw.items(), key=lambda kv: str(kv[0]))}
    return report


def suite_multiplicities(lam: LambdaSpec, depth: int = 6, cap: int = DEFAULT_NODE_CAP, jobs: int = 1) -> list[Report]:
    return [multiplicity_report(lam, depth, cap, jobs)]


# -- properties over enumerations ---------------------------------------------


def reduced_closure_report(lam: LambdaSpec, walls) -> Report:
    report = Report(f"reduced walls closed under E_i/F_i, lambda={lam}")
    for y in walls:
        if wall_validate(y) != REDUCED:
            report.add(f"{y} is not reduced")
            continue
        for i in (0, 1):
            for op in (wall_f, wall_e):
                try:
                    w = op(i, y, "oracle")
                except WallConditionError as exc:
                    report.add(str(exc))
                    continue
                if w is None:
                    continue
                report.checked += 1
                if wall_validate(w) != REDUCED:
                    report.add(f"{op.__name__}({i}, {y}) = {w} is not reduced")
    return report


def weight_report(lam: LambdaSpec, walls) -> Report:
    report = Report(f"<h_i, wt(Y)> = phi_i - eps_i, lambda={lam}")
    for y in walls:
        w = wall_wt(y)
        p = wall_to_path(y)
        report.checked += 1
        if w != path_wt(p):
            report.add(f"{y}: wall weight {w}, path weight {path_wt(p)}")
        for i in (0, 1):
            for method in ("oracle", "tensor"):
                report.checked += 1
                diff = wall_phi(i, y, method) - wall_eps(i, y, method)
                if pair(i, w) != diff:
                    report.add(f"{y} i={i} ({method}): <h_i, wt> = {pair(i, w)}, phi - eps = {diff}")
    return report


def tensor_rule_report(lam: LambdaSpec, walls) -> Report:
    """The folded tensor rule against the recursive two-factor rule on every
    path string, and against bracket cancellation where the counts are
    non-negative."""
    report = Report(f"tensor rule: fold vs nested vs cancellation, lambda={lam}")
    skipped = 0
    for y in walls:
        entries = [psi(c) for c in reversed(y.columns)]
        elems, crystals = padded_string(lam, entries, 2)
        s, cs = elems[1:], crystals[1:]
        normal = all(c.eps(i, b) >= 0 and c.phi(i, b) >= 0 for c, b in zip(cs, s) for i in (0, 1))
        skipped += not normal
        for i in (0, 1):
            for fold, nested, cancel, name in ((tensor_f, nested_f, signature_f, "f"), (tensor_e, nested_e, signature_e, "e")):
                a = fold(i, s, cs)
                report.checked += 1
                if nested(i, s, cs) != a:
                    report.add(f"{name}_{i} on {y}: fold and nested rule differ")
                if not normal:
                    continue
                b = cancel(i, s, cs)
                # Z x Z is not a normal crystal: with nothing left after
                # cancellation the fold may still act
                if b is None and lam.is_infinite:
                    continue
                report.checked += 1
                if a != b:
                    report.add(f"{name}_{i} on {y}: fold and cancellation differ")
    report.info["strings_with_negative_counts"] = skipped
    return report


def margin_report(lam: LambdaSpec, depth: int) -> Report:
    report = Report(f"path component stable under tail margin, lambda={lam}")
    g2 = path_component(lam, depth, margin=2)
    g4 = path_component(lam, depth, margin=4)
    report.checked += 1
    if set(g2.nodes) != set(g4.nodes) or g2.edges != g4.edges:
        report.add("margin 2 and margin 4 disagree")
    return report


def property_reports(lam: LambdaSpec, depth: int = 6) -> list[Report]:
    walls = list(wall_graph(lam, depth).nodes.values())
    return [
        reduced_closure_report(lam, walls),
        weight_report(lam, walls),
        tensor_rule_report(lam, walls),
        margin_report(lam, depth),
    ]


def run_suite(name: str, level: int | None = None, lam: LambdaSpec | None = None, depth: int | None = None, cap: int = DEFAULT_NODE_CAP, jobs: int = 1) -> list[Report]:
    """Dispatch by suite name; missing parameters fall back to small defaults."""
    if name == "energy-axioms":
        return suite_energy_axioms(level or 4)
    if name == "H-constancy":
        return suite_H_constancy(level or 2, 8, depth or 10)
    if name == "perfect":
        return suite_perfect(level or 4)
    if name == "bijection":
        if lam is not None and lam.is_infinite:
            return suite_bijection(None)
        return suite_bijection(level or (lam.l if lam else 4))
    lam = lam or LambdaSpec(4, 1)
    if name == "intertwine":
        return suite_intertwine(lam, depth or 6, cap, jobs)
    if name == "iso-lambda":
        return suite_iso_lambda(lam, depth or 6, cap, jobs)
    if name == "iso-infinity":
        return suite_iso_infinity(depth or 7, cap, jobs)
    if name == "multiplicities":
        return suite_multiplicities(lam, depth or 6, cap, jobs)
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
